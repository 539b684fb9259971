from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from cambrianite import linalg
from cambrianite.coxeter.matrix import require_finite_orders
from cambrianite.exceptions import NonFinite
from cambrianite.extensions import logger
from cambrianite.functions import format_root, get_setting
from cambrianite.numberfield import field_for_orders, rationals

# -sqrt(d_s d_t) cos(pi/m) in units of the shorter squared length
CRYSTALLOGRAPHIC_FACTORS = {2: Fraction(0), 3: Fraction(1, 2), 4: Fraction(1), 6: Fraction(3, 2)}
LENGTH_RATIOS = {3: 1, 4: 2, 6: 3}


@dataclass
class RootSystem:
    """Roots in the simple-root basis. Positive roots come first, simple roots first among them,
    then the negatives in the same order so that root i and root i + N are opposite."""

    field: object
    gram: list
    roots: list
    num_positive: int
    reflections: list
    weights: list
    crystallographic: bool

    def __post_init__(self):
        self.index = {root: i for i, root in enumerate(self.roots)}

    @property
    def rank(self):
        return len(self.gram)

    def negate(self, index):
        if index < self.num_positive:
            return index + self.num_positive
        return index - self.num_positive

    def is_positive(self, index):
        return index < self.num_positive

    def inner(self, x, y):
        return linalg.dot(x, linalg.mat_vec(self.gram, y))

    def covector(self, y):
        """G y, so that inner(x, y) == dot(x, covector(y))"""
        return linalg.mat_vec(self.gram, y)

    def simple_root(self, s):
        return self.roots[s]

    def root_label(self, index):
        return format_root(self.roots[index])

    def weight_coordinates(self, x):
        """Coordinates of x in the basis of fundamental weights: <x, alpha_s>"""
        return self.covector(x)


def _root_lengths(matrix):
    """Squared lengths of simple roots, shortest root of each component normalized to 2"""
    graph = matrix.graph()
    lengths = {}
    for component in nx.connected_components(graph):
        start = min(component)
        lengths[start] = Fraction(1)
        for s, t in nx.bfs_edges(graph, start):
            m = matrix.m(s, t)
            ratio = LENGTH_RATIOS[m]
            lengths[t] = lengths[s] * ratio
        for s, t in graph.subgraph(component).edges():
            m = matrix.m(s, t)
            big, small = max(lengths[s], lengths[t]), min(lengths[s], lengths[t])
            if big / small != LENGTH_RATIOS[m]:
                raise NonFinite("{} admits no consistent root lengths".format(matrix.label()))
        shortest = min(lengths[s] for s in component)
        for s in component:
            lengths[s] = lengths[s] * 2 / shortest
    return [lengths[s] for s in range(matrix.rank)]


def gram_matrix(matrix, unit_roots=False):
    """Bilinear form on simple roots, and whether the crystallographic normalization was used"""
    require_finite_orders(matrix)
    n = matrix.rank
    if matrix.is_crystallographic() and not unit_roots:
        field = rationals()
        lengths = _root_lengths(matrix)
        gram = [[field.zero] * n for _ in range(n)]
        for s in range(n):
            for t in range(n):
                if s == t:
                    gram[s][t] = field(lengths[s])
                else:
                    shorter = min(lengths[s], lengths[t])
                    gram[s][t] = field(-CRYSTALLOGRAPHIC_FACTORS[matrix.m(s, t)] * shorter)
        return gram, True

    field = field_for_orders(matrix.orders())
    gram = [
        [field.one if s == t else -field.cos_pi_over(matrix.m(s, t)) for t in range(n)]
        for s in range(n)
    ]
    return gram, False


def build_root_system(matrix, unit_roots=False, max_roots=None):
    if max_roots is None:
        max_roots = get_setting("CAMBRIANITE_MAX_ROOTS", 2 * 10**4)
    gram, crystallographic = gram_matrix(matrix, unit_roots)
    if not linalg.is_positive_definite(gram):
        raise NonFinite("The bilinear form of {} is not positive definite".format(matrix.label()))
    field = gram[0][0].field
    n = matrix.rank

    simple = [tuple(field.one if i == s else field.zero for i in range(n)) for s in range(n)]
    norms = [gram[s][s] for s in range(n)]

    def reflect(vector, s):
        # s(x) = x - 2<x, a_s>/<a_s, a_s> a_s
        pairing = linalg.dot(vector, [gram[k][s] for k in range(n)])
        if pairing.is_zero():
            return vector
        coefficient = pairing * 2 / norms[s]
        return tuple(
            x - coefficient if i == s else x for i, x in enumerate(vector)
        )

    positive = list(simple)
    seen = {root: i for i, root in enumerate(positive)}
    queue = 0
    while queue < len(positive):
        root = positive[queue]
        queue += 1
        for s in range(n):
            if root == simple[s]:
                continue
            image = reflect(root, s)
            if image not in seen:
                if any(x.sign() < 0 for x in image):
                    raise NonFinite("Root closure produced a root of mixed sign")
                seen[image] = len(positive)
                positive.append(image)
                if 2 * len(positive) > max_roots:
                    raise NonFinite(
                        "Root closure of {} exceeds {} roots".format(matrix.label(), max_roots)
                    )

    num_positive = len(positive)
    roots = positive + [tuple(-x for x in root) for root in positive]
    index = {root: i for i, root in enumerate(roots)}

    reflections = []
    for s in range(n):
        table = [0] * (2 * num_positive)
        for i, root in enumerate(positive):
            j = index[reflect(root, s)]
            table[i] = j
            table[i + num_positive] = j - num_positive if j >= num_positive else j + num_positive
        reflections.append(tuple(table))

    inverse_gram = linalg.inverse(gram)
    weights = [tuple(inverse_gram[i][s] for i in range(n)) for s in range(n)]

    logger.debug(
        "Built root system for {}: {} positive roots over {}".format(
            matrix.label(), num_positive, repr(field)
        )
    )
    return RootSystem(
        field=field,
        gram=gram,
        roots=roots,
        num_positive=num_positive,
        reflections=reflections,
        weights=weights,
        crystallographic=crystallographic,
    )
