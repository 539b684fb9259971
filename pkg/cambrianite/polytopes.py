import itertools
from fractions import Fraction

import networkx as nx

from cambrianite import linalg
from cambrianite.exceptions import (
    BasePointNotInLattice,
    NotCrystallographic,
    PointingViolation,
    SingularCone,
)
from cambrianite.extensions import logger
from cambrianite.fans import coxeter_fan_rays, fan_for
from cambrianite.functions import format_word
from cambrianite.models.HalfSpace import HalfSpace
from cambrianite.models.Polytope import Polytope
from cambrianite.models.Report import Report
from cambrianite.models.Vertex import Vertex
from cambrianite.sortable import lattice_for


def _halfspace(system, ray, base_point, admissible=False):
    return HalfSpace(
        normal=ray.direction,
        offset=base_point.offset(system, ray.orbit),
        orbit=ray.orbit,
        label=str(ray.label) if ray.label is not None else "",
        admissible=admissible,
    )


def permutahedron(system, base_point):
    """Perm^a(W): vertices M(w) = w(a), one half space per ray of the Coxeter fan"""
    a = base_point.vector(system)
    halfspaces = [_halfspace(system, ray, base_point) for ray in coxeter_fan_rays(system)]
    vertices = [
        Vertex(system.act_on_vector(w, a), w, format_word(w.reduced_word()))
        for w in system.enumerate_group()
    ]
    perm = Polytope("permutahedron", system, base_point, vertices, halfspaces)
    logger.debug(
        "Permutahedron of {}: {} vertices, {} half spaces".format(
            system.name, len(vertices), len(halfspaces)
        )
    )
    return perm


def permutahedron_check(perm):
    """Vertices are distinct and M(w) is tight on the half spaces of w(v_s) for every s"""
    system = perm.system
    report = Report("permutahedron {}".format(system.name))
    report.check(
        len(perm.point_set()) == len(perm.vertices),
        "{} vertices but only {} distinct points".format(
            len(perm.vertices), len(perm.point_set())
        ),
    )
    by_key = {}
    for j, h in enumerate(perm.halfspaces):
        by_key[(h.orbit, h.normal)] = j
    for vertex, tight in zip(perm.vertices, perm.incidence):
        w = vertex.element
        expected = {
            by_key.get((s, system.act_on_vector(w, system.fundamental_weights[s])))
            for s in range(system.rank)
        }
        report.check(
            expected <= set(tight),
            "M({}) misses one of its defining hyperplanes".format(vertex.word),
        )
    return report


def admissible_halfspaces(perm, c):
    """Half spaces of Perm whose boundary holds M(w) for some c-singleton w"""
    singletons = set(lattice_for(c).singletons)
    chosen = set()
    for vertex, tight in zip(perm.vertices, perm.incidence):
        if vertex.element in singletons:
            chosen.update(tight)
    return [perm.halfspaces[j] for j in sorted(chosen)]


def mark_admissible(perm, c):
    """Flag the c-admissible half spaces of Perm and label them by their almost positive root"""
    fan = fan_for(c)
    perm.coxeter_element = c
    for h in admissible_halfspaces(perm, c):
        ray = fan.rays[fan.ray_for(h.normal)]
        h.admissible = True
        h.label = str(ray.label)
    return perm


def admissible_check(perm, c):
    """The admissible half spaces are exactly those normal to the rays of the Cambrian fan"""
    fan = fan_for(c)
    report = Report("admissible half spaces {} {}".format(perm.system.name, c))
    admissible = {h.normal for h in admissible_halfspaces(perm, c)}
    rays = {ray.direction for ray in fan.rays}
    report.check(
        admissible == rays,
        "{} admissible half spaces against {} Cambrian rays".format(len(admissible), len(rays)),
    )
    report.details = {"admissible": len(admissible), "halfspaces": len(perm.halfspaces)}
    return report


def cone_vertex(system, rays, offsets):
    """The point x with <x, u_i> = nu_i for the n rays of a simplicial cone"""
    matrix = [list(system.roots.covector(u)) for u in rays]
    try:
        return linalg.solve(matrix, list(offsets))
    except ArithmeticError as e:
        raise SingularCone("Cone rays are linearly dependent: {}".format(e))


def associahedron(system, c, base_point, offsets=None):
    """Ass^a_c(W): the admissible half spaces and one vertex x(C(w)) per c-sortable w.

    offsets overrides the right-hand side of every half space, indexed like the fan rays.
    """
    fan = fan_for(c)
    halfspaces = [_halfspace(system, ray, base_point, admissible=True) for ray in fan.rays]
    if offsets is not None:
        for h, offset in zip(halfspaces, offsets):
            h.offset = offset
    vertices = []
    for w in fan.lattice.sortables:
        cone = fan.cones[w]
        point = cone_vertex(
            system,
            [fan.rays[i].direction for i in cone.rays],
            [halfspaces[i].offset for i in cone.rays],
        )
        vertices.append(Vertex(point, w, cone.word))
    asso = Polytope("associahedron", system, base_point, vertices, halfspaces, coxeter_element=c)
    logger.debug(
        "Associahedron of {} for c = {}: {} vertices, {} facets".format(
            system.name, c, len(vertices), len(halfspaces)
        )
    )
    return asso


def vertex_strictness_check(asso):
    """x(C(w)) is tight on the rays of C(w) and strictly inside every other half space"""
    fan = fan_for(asso.coxeter_element)
    report = Report("vertex strictness {} {}".format(asso.system.name, asso.coxeter_element))
    for vertex, tight in zip(asso.vertices, asso.incidence):
        own = set(fan.cones[vertex.element].rays)
        report.check(
            set(tight) == own,
            "vertex {} is tight on {} instead of its cone rays {}".format(
                vertex.word, sorted(tight), sorted(own)
            ),
        )
        for j, h in enumerate(asso.halfspaces):
            if j not in own and not h.value(asso.system.inner, vertex.point) < h.offset:
                report.fail("vertex {} violates half space {}".format(vertex.word, h.label))
    return report


def fan_offsets(fan, base_point):
    return [base_point.offset(fan.system, ray.orbit) for ray in fan.rays]


def _cover_root(fan, adjacency):
    """w(alpha_s) for a right descent s of the upper element with ws in the lower fiber"""
    upper = adjacency.upper
    lower_fiber = set(fan.lattice.fiber(adjacency.lower))
    for s in sorted(upper.right_descents()):
        if upper.right_multiply(s) in lower_fiber:
            return upper.image(s)
    return None


def wall_root(fan, adjacency):
    """The root orthogonal to every shared ray, on the side of the upper cone's own ray"""
    system = fan.system
    shared = [fan.rays[i].direction for i in adjacency.shared]
    u = fan.rays[adjacency.ray].direction
    for index, root in enumerate(system.roots.roots):
        if system.inner(u, root).sign() <= 0:
            continue
        if all(system.inner(direction, root).is_zero() for direction in shared):
            return index
    return None


def pointing_check(fan, offsets, strict=False):
    """For each adjacent pair, u + u' = sum b_i u_i over the shared rays with b_i >= 0 and
    nu_u + nu_u' > sum b_i nu_i; x(C) - x(C') is a positive multiple of a negative root."""
    system = fan.system
    report = Report("pointing {} {}".format(system.name, fan.c))
    roots = system.roots
    vertices = {}

    def vertex(w):
        if w not in vertices:
            cone = fan.cones[w]
            vertices[w] = cone_vertex(
                system, [fan.rays[i].direction for i in cone.rays], [offsets[i] for i in cone.rays]
            )
        return vertices[w]

    def violation(adjacency, message):
        pair = (fan.lattice.format(adjacency.upper), fan.lattice.format(adjacency.lower))
        if strict:
            raise PointingViolation("{} / {}: {}".format(pair[0], pair[1], message), pair=pair)
        report.fail("{} / {}: {}".format(pair[0], pair[1], message))

    for adjacency in fan.adjacencies:
        shared = sorted(adjacency.shared)
        basis = [fan.rays[adjacency.ray].direction] + [fan.rays[i].direction for i in shared]
        coefficients = linalg.coordinates_in_basis(basis, fan.rays[adjacency.opposite].direction)
        if coefficients[0] != -1:
            violation(adjacency, "u' has coefficient {} on u".format(coefficients[0]))
            continue
        b = coefficients[1:]
        if any(x.sign() < 0 for x in b):
            violation(adjacency, "negative coefficient in {}".format([str(x) for x in b]))
            continue
        total = offsets[adjacency.ray] + offsets[adjacency.opposite]
        bound = sum((x * offsets[i] for x, i in zip(b, shared)), system.field.zero)
        if not total > bound:
            violation(adjacency, "{} is not greater than {}".format(total, bound))
            continue

        beta = wall_root(fan, adjacency)
        if beta is None:
            violation(adjacency, "no root is orthogonal to the shared facet")
            continue
        if roots.is_positive(beta):
            violation(adjacency, "separating root {} is positive".format(roots.root_label(beta)))
            continue
        if _cover_root(fan, adjacency) != beta:
            violation(
                adjacency,
                "wall root {} is not the root of a cover into the lower fiber".format(
                    roots.root_label(beta)
                ),
            )
        normal = roots.roots[beta]
        step = linalg.sub(vertex(adjacency.upper), vertex(adjacency.lower))
        mu = linalg.proportionality(step, normal)
        if mu is None or mu.sign() <= 0:
            violation(adjacency, "x(C) - x(C') is not a positive multiple of beta")

    report.details = {"pairs": len(fan.adjacencies)}
    return report


def tightened_offsets(fan, offsets):
    """Offsets pushed to equality in the pointing inequality of the first pair with a shared
    ray of positive coefficient"""
    for adjacency in fan.adjacencies:
        shared = sorted(adjacency.shared)
        basis = [fan.rays[adjacency.ray].direction] + [fan.rays[i].direction for i in shared]
        coefficients = linalg.coordinates_in_basis(basis, fan.rays[adjacency.opposite].direction)
        b = coefficients[1:]
        if not any(x.sign() > 0 for x in b):
            continue
        bound = sum((x * offsets[i] for x, i in zip(b, shared)), fan.system.field.zero)
        changed = list(offsets)
        changed[adjacency.ray] = bound - offsets[adjacency.opposite]
        return changed, adjacency
    return None, None


def pointing_negative_control(fan, base_point):
    """Corrupted offsets must be caught by the pointing check"""
    report = Report("pointing negative control {} {}".format(fan.system.name, fan.c))
    offsets, adjacency = tightened_offsets(fan, fan_offsets(fan, base_point))
    if offsets is None:
        return report.skip("no adjacent pair with a positive shared coefficient")
    try:
        pointing_check(fan, offsets, strict=True)
        report.fail("tightened offsets passed the pointing check")
    except PointingViolation as e:
        report.details = {"pair": list(e.pair)}
    return report


def common_vertices(perm, asso):
    shared = perm.point_set() & asso.point_set()
    return [v for v in perm.vertices if v.point in shared]


def common_vertex_check(perm, asso):
    lattice = lattice_for(asso.coxeter_element)
    report = Report("common vertices {} {}".format(asso.system.name, asso.coxeter_element))
    common = {v.element for v in common_vertices(perm, asso)}
    singletons = set(lattice.singletons)
    for w in sorted(common - singletons, key=lattice.order_key):
        report.fail("M({}) is a common vertex but not a singleton".format(lattice.format(w)))
    for w in sorted(singletons - common, key=lattice.order_key):
        report.fail("singleton {} is not a common vertex".format(lattice.format(w)))
    for w in lattice.singletons:
        report.check(
            asso.vertex_for(w).point == perm.vertex_for(w).point,
            "x(C({})) differs from M({})".format(lattice.format(w), lattice.format(w)),
        )
    report.details = {"common": [lattice.format(w) for w in lattice.singletons if w in common]}
    return report


def barycentre(points):
    if not points:
        raise ValueError("Barycentre of an empty point set")
    total = points[0]
    for point in points[1:]:
        total = linalg.add(total, point)
    return linalg.scale(total, Fraction(1, len(points)))


def barycentre_check(perm, asso):
    report = Report("barycentre {} {}".format(asso.system.name, asso.coxeter_element))
    left, right = barycentre(perm.points()), barycentre(asso.points())
    report.check(
        left == right,
        "Perm barycentre {} differs from Ass barycentre {}".format(
            [str(x) for x in left], [str(x) for x in right]
        ),
    )
    report.details = {"barycentre": [str(x) for x in right]}
    return report


def integer_coordinate_check(polytope, system=None):
    """Every vertex has integer coordinates in the simple-root basis.

    Needs a crystallographic system and a base point in the root lattice.
    """
    system = system or polytope.system
    if not system.crystallographic:
        raise NotCrystallographic("{} is not crystallographic".format(system.name))
    a = polytope.base_point.vector(system)
    if not all(x.is_integer() for x in a):
        raise BasePointNotInLattice(
            "Base point {} is not in the root lattice".format([str(x) for x in a])
        )
    report = Report("integer coordinates {} {}".format(polytope.kind, system.name))
    for vertex in polytope.vertices:
        report.check(
            all(x.is_integer() for x in vertex.point),
            "vertex {} has coordinates {}".format(vertex.word, [str(x) for x in vertex.point]),
        )
    return report


def edge_graph(polytope):
    """Vertices of a simple polytope joined when they share n - 1 tight half spaces"""
    n = polytope.dimension
    graph = nx.Graph()
    graph.add_nodes_from(range(len(polytope.vertices)))
    by_face = {}
    for i, tight in enumerate(polytope.incidence):
        for face in itertools.combinations(sorted(tight), n - 1):
            by_face.setdefault(face, []).append(i)
    for members in by_face.values():
        for u, v in itertools.combinations(members, 2):
            graph.add_edge(u, v)
    return graph


def hv_consistency(polytope):
    system = polytope.system
    n = polytope.dimension
    report = Report("hv consistency {} {}".format(polytope.kind, system.name))
    for vertex in polytope.vertices:
        for h in polytope.halfspaces:
            if not h.contains(system.inner, vertex.point):
                report.fail("vertex {} violates half space {}".format(vertex.word, h.label))
    for vertex, tight in zip(polytope.vertices, polytope.incidence):
        report.check(
            len(tight) == n, "vertex {} is tight on {} half spaces".format(vertex.word, len(tight))
        )
        normals = [polytope.halfspaces[j].normal for j in tight]
        report.check(
            linalg.rank(normals) == len(normals),
            "tight normals at {} are dependent".format(vertex.word),
        )
    counts = []
    for j, h in enumerate(polytope.halfspaces):
        count = len(polytope.facet_vertices(j))
        counts.append(count)
        report.check(count >= n, "half space {} is tight at only {} vertices".format(j, count))
    graph = edge_graph(polytope)
    report.check(nx.is_connected(graph), "edge graph is disconnected")
    report.details = {
        "vertices": len(polytope.vertices),
        "halfspaces": len(polytope.halfspaces),
        "edges": graph.number_of_edges(),
        "facet_sizes": sorted(counts),
    }
    return report


def scaling_check(system, c, base_point, factor=2):
    """Scaling a scales every vertex by the same factor and keeps the incidences"""
    report = Report("scaling {} {}".format(system.name, c))
    asso = associahedron(system, c, base_point)
    scaled = associahedron(system, c, base_point.scaled(factor))
    for left, right in zip(asso.vertices, scaled.vertices):
        report.check(
            linalg.scale(left.point, factor) == right.point,
            "vertex {} does not scale".format(left.word),
        )
    report.check(asso.incidence == scaled.incidence, "incidences change under scaling")
    return report
