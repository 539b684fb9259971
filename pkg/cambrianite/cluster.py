import itertools
from collections import Counter
from functools import cached_property

import networkx as nx

from cambrianite import linalg
from cambrianite.extensions import logger
from cambrianite.fans import almost_positive_roots, cl_label, fan_for, parse_root
from cambrianite.models.AlmostPositiveRoot import AlmostPositiveRoot
from cambrianite.models.Report import Report
from cambrianite.polytopes import associahedron


def vertex_cluster(asso, w):
    """Labels of the facets of Ass tight at x(C(w))"""
    fan = fan_for(asso.coxeter_element)
    vertex = asso.vertex_for(w)
    return frozenset(fan.label_of(j) for j in vertex.tight)


class ClusterComplex:
    """The c-cluster complex read off the facet labels of an associahedron"""

    def __init__(self, asso):
        self.asso = asso
        self.system = asso.system
        self.c = asso.coxeter_element
        self.ground = almost_positive_roots(self.system)
        self.clusters = {v.element: vertex_cluster(asso, v.element) for v in asso.vertices}
        self.words = {v.element: v.word for v in asso.vertices}
        logger.debug(
            "Cluster complex of {} for c = {}: {} facets".format(
                self.system.name, self.c, len(self.clusters)
            )
        )

    @classmethod
    def build(cls, system, c, base_point):
        return cls(associahedron(system, c, base_point))

    @property
    def facets(self):
        return list(self.clusters.values())

    @cached_property
    def faces(self):
        found = set()
        for facet in self.facets:
            for k in range(len(facet) + 1):
                found.update(frozenset(face) for face in itertools.combinations(facet, k))
        return found

    def f_vector(self):
        """Number of faces with 1, 2, ... roots, starting from the empty face"""
        counts = Counter(len(face) for face in self.faces)
        return [counts[k] for k in range(self.system.rank + 1)]

    def is_face(self, roots):
        roots = frozenset(roots)
        return any(roots <= facet for facet in self.facets)

    def intersection_of_facets(self, roots):
        """The label intersection of all facets containing roots, or None if there are none"""
        containing = [facet for facet in self.facets if frozenset(roots) <= facet]
        if not containing:
            return None
        return frozenset.intersection(*containing)

    @cached_property
    def compatibility_graph(self):
        graph = nx.Graph()
        graph.add_nodes_from(self.ground)
        for facet in self.facets:
            graph.add_edges_from(itertools.combinations(facet, 2))
        return graph

    def is_flag(self):
        """Every set of pairwise compatible roots is a face"""
        return all(self.is_face(clique) for clique in nx.find_cliques(self.compatibility_graph))

    def serialize(self):
        return {
            "system": self.system.name,
            "coxeter_element": str(self.c),
            "clusters": [
                {"word": self.words[w], "roots": [str(r) for r in sorted(cluster)]}
                for w, cluster in self.clusters.items()
            ],
            "f_vector": self.f_vector(),
        }


def is_c_compatible(complex_, roots):
    """True iff the roots, given as AlmostPositiveRoots or strings, lie in a common cluster"""
    parsed = [
        parse_root(complex_.system, root) if isinstance(root, str) else root for root in roots
    ]
    return complex_.is_face(parsed)


def complex_stats(complex_):
    report = Report("cluster complex {} {}".format(complex_.system.name, complex_.c))
    n = complex_.system.rank
    lattice = fan_for(complex_.c).lattice
    for w, cluster in complex_.clusters.items():
        report.check(
            len(cluster) == n,
            "cluster of {} has {} roots".format(complex_.words[w], len(cluster)),
        )
        report.check(
            cluster == cl_label(w, complex_.c),
            "cluster of {} differs from its cl label".format(complex_.words[w]),
        )
    report.check(
        len(complex_.clusters) == len(lattice.sortables),
        "{} facets against {} sortables".format(len(complex_.clusters), len(lattice.sortables)),
    )
    used = set().union(*complex_.facets)
    for root in complex_.ground:
        report.check(root in used, "{} lies in no cluster".format(root))
    for root in complex_.ground:
        negative = _negated(complex_.system, root)
        if negative is not None:
            report.check(
                not complex_.is_face([root, negative]),
                "{} is compatible with its negative".format(root),
            )
    flag = complex_.is_flag()
    report.check(flag, "cluster complex is not flag")
    report.details = {
        "facets": len(complex_.clusters),
        "f_vector": complex_.f_vector(),
        "flag": flag,
    }
    return report


def _negated(system, root):
    """-root when it is also almost positive"""
    index = system.roots.negate(root.index)
    try:
        return AlmostPositiveRoot.of(system.roots, index)
    except ValueError:
        return None


def compatibility_equivalence_check(complex_):
    """Subsets of facets are exactly the label intersections of facet collections"""
    report = Report("compatibility {} {}".format(complex_.system.name, complex_.c))
    for face in complex_.faces:
        report.check(
            complex_.intersection_of_facets(face) == face,
            "{} is not an intersection of facets".format(sorted(str(r) for r in face)),
        )
    return report


def face_poset_check(complex_):
    """A face with k roots selects a face of Ass of dimension n - k"""
    asso = complex_.asso
    n = complex_.system.rank
    report = Report("face poset {} {}".format(complex_.system.name, complex_.c))
    points = {v.element: v.point for v in asso.vertices}
    for face in complex_.faces:
        if not face:
            continue
        members = [points[w] for w, cluster in complex_.clusters.items() if face <= cluster]
        base = members[0]
        span = linalg.rank([linalg.sub(p, base) for p in members[1:]])
        report.check(
            span == n - len(face),
            "face {} of the complex gives a face of dimension {}".format(
                sorted(str(r) for r in face), span
            ),
        )
    return report
