import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache

import sympy

from cambrianite import linalg
from cambrianite.exceptions import LabelConflict, NotSortable, UnknownRoot
from cambrianite.extensions import logger
from cambrianite.models.AlmostPositiveRoot import AlmostPositiveRoot
from cambrianite.models.Cone import Cone
from cambrianite.models.Ray import Ray, direction_key
from cambrianite.models.Report import Report
from cambrianite.sortable import lattice_for


def chamber_rays(w):
    """The n rays w(v_s) of the chamber w(D), tagged by orbit"""
    system = w.system
    return [
        Ray(system.act_on_vector(w, system.fundamental_weights[s]), s, element=w)
        for s in range(system.rank)
    ]


def coxeter_fan_rays(system):
    """All distinct rays of the Coxeter fan, in order of first appearance over enumerate_group"""
    rays = {}
    for w in system.enumerate_group():
        for ray in chamber_rays(w):
            rays.setdefault(ray.key, ray)
    return list(rays.values())


def coset_check(system):
    """w(v_s) = w'(v_s) exactly when w and w' lie in the same coset of the parabolic
    subgroup generated by S minus s"""
    report = Report("coxeter fan cosets {}".format(system.name))
    generators = range(system.rank)
    seen = {}
    for w in system.enumerate_group():
        for ray in chamber_rays(w):
            others = [t for t in generators if t != ray.orbit]
            head, _ = system.parabolic_components(w, others)
            tagged = (ray.orbit, head)
            previous = seen.setdefault(ray.key, tagged)
            report.check(
                previous == tagged,
                "ray of {} for s{} collides with a different coset".format(w, ray.orbit + 1),
            )
    orbits = defaultdict(int)
    for orbit, _ in seen.values():
        orbits[orbit] += 1
    report.details = {
        "rays": len(seen),
        "orbit_sizes": [orbits[s] for s in generators],
    }
    return report


def support(w, c):
    return frozenset(lattice_for(c).factorization(w).word)


def lr_label(w, s, c):
    """The almost positive root attached to s at the c-sortable element w"""
    lattice = lattice_for(c)
    if not lattice.is_sortable(w):
        raise NotSortable("{} is not {}-sortable".format(lattice.format(w), c))
    roots = w.system.roots
    word = lattice.factorization(w).word
    if s not in word:
        return AlmostPositiveRoot.negative_simple(roots, s)
    j = len(word) - 1 - word[::-1].index(s)
    prefix = w.system.element_from_word(word[:j])
    return AlmostPositiveRoot.of(roots, prefix.image(s))


def cl_label(w, c):
    labels = frozenset(lr_label(w, s, c) for s in range(w.system.rank))
    if len(labels) != w.system.rank:
        raise LabelConflict(
            "{} carries {} distinct labels".format(lattice_for(c).format(w), len(labels))
        )
    return labels


def almost_positive_roots(system):
    roots = system.roots
    found = [AlmostPositiveRoot.negative_simple(roots, s) for s in range(system.rank)]
    found += [AlmostPositiveRoot.of(roots, i) for i in range(roots.num_positive)]
    return found


def cambrian_rays(system, c):
    """Rays w(v_s) over the c-singletons w, each labelled by Lr_s(w), sorted by label"""
    lattice = lattice_for(c)
    rays = {}
    owners = {}
    for w in lattice.singletons:
        for ray in chamber_rays(w):
            label = lr_label(w, ray.orbit, c)
            if ray.key in rays:
                if rays[ray.key].label != label:
                    raise LabelConflict(
                        "Ray {} labelled both {} and {}".format(
                            [str(x) for x in ray.direction], rays[ray.key].label, label
                        )
                    )
                continue
            if label in owners:
                raise LabelConflict("Label {} used by two different rays".format(label))
            ray.label = label
            rays[ray.key] = ray
            owners[label] = ray.key
    return sorted(rays.values(), key=lambda ray: ray.label.sort_key)


@dataclass(frozen=True)
class Adjacency:
    """Two maximal cones sharing a facet. upper covers lower in the Cambrian lattice;
    ray is the ray of upper off the shared facet and opposite the one of lower."""

    upper: object
    lower: object
    shared: frozenset
    ray: int
    opposite: int


class CambrianFan:
    def __init__(self, system, c):
        self.system = system
        self.c = c
        self.lattice = lattice_for(c)
        self.rays = cambrian_rays(system, c)
        self.ray_index = {ray.label: i for i, ray in enumerate(self.rays)}
        self.cones = {w: cambrian_cone(w, c, fan=self) for w in self.lattice.sortables}
        logger.debug(
            "Cambrian fan of {} for c = {}: {} rays, {} cones".format(
                system.name, c, len(self.rays), len(self.cones)
            )
        )

    def label_of(self, index):
        return self.rays[index].label

    def ray_for(self, direction):
        key = direction_key(direction)
        return next((i for i, ray in enumerate(self.rays) if ray.key == key), None)

    @cached_property
    def adjacencies(self):
        return cone_adjacency(self)

    def serialize(self):
        return {
            "system": self.system.name,
            "coxeter_element": str(self.c),
            "number_field": self.system.field.describe(),
            "rays": [ray.serialize() for ray in self.rays],
            "cones": [self.cones[w].serialize() for w in self.lattice.sortables],
            "adjacency": [
                [self.lattice.format(a.lower), self.lattice.format(a.upper)]
                for a in self.adjacencies
            ],
        }


@lru_cache(maxsize=None)
def fan_for(c):
    return CambrianFan(c.system, c)


def cambrian_cone(w, c, fan=None):
    lattice = lattice_for(c)
    if not lattice.is_sortable(w):
        raise NotSortable("{} is not {}-sortable".format(lattice.format(w), c))
    if fan is None:
        fan = fan_for(c)
    labels = cl_label(w, c)
    missing = [label for label in labels if label not in fan.ray_index]
    if missing:
        raise LabelConflict(
            "No ray of the fan carries {}".format(", ".join(str(label) for label in missing))
        )
    rays = tuple(sorted(fan.ray_index[label] for label in labels))
    return Cone(w, rays, tuple(lattice.fiber(w)), lattice.format(w))


def cone_adjacency(fan):
    """Pairs of maximal cones sharing n-1 rays, oriented by the Cambrian lattice cover"""
    n = fan.system.rank
    facets = defaultdict(list)
    for w, cone in fan.cones.items():
        for shared in itertools.combinations(cone.rays, n - 1):
            facets[frozenset(shared)].append(w)
    adjacencies = []
    for shared, owners in facets.items():
        if len(owners) != 2:
            continue
        first, second = owners
        if fan.lattice.is_cover(second, first):
            upper, lower = first, second
        else:
            upper, lower = second, first
        (ray,) = set(fan.cones[upper].rays) - shared
        (opposite,) = set(fan.cones[lower].rays) - shared
        adjacencies.append(Adjacency(upper, lower, shared, ray, opposite))
    key = fan.lattice.order_key
    return sorted(adjacencies, key=lambda a: (key(a.lower), key(a.upper)))


def adjacency_check(fan):
    """Every facet of a maximal cone is shared by exactly two cones, related by a cover"""
    report = Report("cone adjacency {} {}".format(fan.system.name, fan.c))
    n = fan.system.rank
    owners = defaultdict(int)
    for cone in fan.cones.values():
        report.check(
            len(cone.rays) == n,
            "cone {} has {} rays".format(cone.word, len(cone.rays)),
        )
        for shared in itertools.combinations(cone.rays, n - 1):
            owners[frozenset(shared)] += 1
    for shared, count in owners.items():
        report.check(count == 2, "facet {} lies in {} cones".format(sorted(shared), count))
    neighbours = defaultdict(int)
    for a in fan.adjacencies:
        neighbours[a.upper] += 1
        neighbours[a.lower] += 1
        report.check(
            fan.lattice.is_cover(a.lower, a.upper),
            "{} and {} are adjacent but not a cover".format(
                fan.lattice.format(a.lower), fan.lattice.format(a.upper)
            ),
        )
    for w, cone in fan.cones.items():
        report.check(
            neighbours[w] == n,
            "cone {} has {} neighbours".format(cone.word, neighbours[w]),
        )
    report.details = {"adjacencies": len(fan.adjacencies)}
    return report


def label_bijection_check(fan):
    report = Report("ray labels {} {}".format(fan.system.name, fan.c))
    expected = set(almost_positive_roots(fan.system))
    found = [ray.label for ray in fan.rays]
    report.check(len(found) == len(set(found)), "a label is used twice")
    for label in sorted(expected - set(found)):
        report.fail("no ray labelled {}".format(label))
    for label in sorted(set(found) - expected):
        report.fail("{} is not an almost positive root".format(label))
    report.details = {"rays": len(found)}
    return report


def cone_check(fan):
    """Singleton cones are chambers, fibers partition W, and every chamber of a fiber lies in
    the nonnegative span of its cone's rays"""
    report = Report("cambrian cones {} {}".format(fan.system.name, fan.c))
    lattice = fan.lattice
    covered = 0
    for w, cone in fan.cones.items():
        covered += len(cone.chambers)
        report.check(
            cone.is_chamber == lattice.is_singleton(w),
            "cone {} has {} chambers".format(cone.word, len(cone.chambers)),
        )
        basis = [fan.rays[i].direction for i in cone.rays]
        if cone.is_chamber:
            own = {ray.key for ray in chamber_rays(w)}
            report.check(
                own == {fan.rays[i].key for i in cone.rays},
                "rays of singleton cone {} are not its chamber rays".format(cone.word),
            )
        for chamber in cone.chambers:
            for ray in chamber_rays(chamber):
                coefficients = linalg.coordinates_in_basis(basis, ray.direction)
                if any(x.sign() < 0 for x in coefficients):
                    report.fail(
                        "chamber {} pokes out of cone {}".format(lattice.format(chamber), cone.word)
                    )
                    break
    report.check(
        covered == len(lattice.elements),
        "fibers cover {} of {} chambers".format(covered, len(lattice.elements)),
    )
    return report


def initial_ray_check(fan):
    """For s initial in c, every cone of a sortable element avoiding s contains v_s"""
    report = Report("initial rays {} {}".format(fan.system.name, fan.c))
    system = fan.system
    for s in range(system.rank):
        if not fan.c.is_initial(s):
            continue
        index = fan.ray_for(system.fundamental_weights[s])
        for w, cone in fan.cones.items():
            if s in support(w, fan.c):
                continue
            report.check(
                index in cone.rays,
                "cone {} misses the ray of v_s{}".format(cone.word, s + 1),
            )
    return report


def parse_root(system, text):
    """Parse "a1+a2", "-a3" or "alpha1+alpha2" into an almost positive root"""
    rank = system.rank
    names = sympy.symbols("a1:{}".format(rank + 1))
    cleaned = text.strip().replace("alpha", "a").replace("α", "a")
    try:
        expression = sympy.sympify(
            cleaned, locals={str(name): name for name in names} | {"z": sympy.Symbol("z")}
        )
        poly = sympy.Poly(expression, *names)
    except (sympy.SympifyError, sympy.PolynomialError, SyntaxError, TypeError) as e:
        raise UnknownRoot("Cannot parse root {}: {}".format(text, e))
    if poly.total_degree() > 1 or poly.coeff_monomial((0,) * rank) != 0:
        raise UnknownRoot("{} is not a linear combination of simple roots".format(text))
    coefficients = []
    for s in range(rank):
        monomial = tuple(1 if t == s else 0 for t in range(rank))
        coefficients.append(system.field(poly.coeff_monomial(monomial)))
    index = system.roots.index.get(tuple(coefficients))
    if index is None:
        raise UnknownRoot("{} is not a root of {}".format(text, system.name))
    try:
        return AlmostPositiveRoot.of(system.roots, index)
    except ValueError:
        raise UnknownRoot("{} is not an almost positive root".format(text))
