import itertools

import networkx as nx

from cambrianite.coxeter.matrix import coxeter_matrix_from_spec
from cambrianite.coxeter.root_system import build_root_system
from cambrianite.exceptions import DimensionMismatch, GroupTooLarge, SystemMismatch
from cambrianite.extensions import logger
from cambrianite.functions import format_word, generator_name, get_setting


class GroupElement:
    """An element of W, stored as the images of the positive roots.

    images[i] is the index of w(beta_i) among all roots; an index >= N marks a negative root,
    so the tuple is a signed permutation of the positive roots.
    """

    __slots__ = ("system", "images", "_inversions", "_hash")

    def __init__(self, system, images):
        self.system = system
        self.images = images
        self._inversions = None
        self._hash = None

    @property
    def inversions(self):
        """N(w) = positive roots beta with w^-1(beta) negative, as root indices"""
        if self._inversions is None:
            n_pos = self.system.roots.num_positive
            self._inversions = frozenset(j - n_pos for j in self.images if j >= n_pos)
        return self._inversions

    @property
    def length(self):
        return len(self.inversions)

    def __len__(self):
        return self.length

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.system is other.system and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __mul__(self, other):
        return self.system.compose(self, other)

    def __repr__(self):
        return "GroupElement({})".format(format_word(self.reduced_word()))

    def image(self, index):
        """Index of w(root index)"""
        n_pos = self.system.roots.num_positive
        if index < n_pos:
            return self.images[index]
        return self.system.roots.negate(self.images[index - n_pos])

    def has_right_descent(self, s):
        return self.images[s] >= self.system.roots.num_positive

    def has_left_descent(self, s):
        return s in self.inversions

    def right_descents(self):
        return frozenset(s for s in range(self.system.rank) if self.has_right_descent(s))

    def left_descents(self):
        return frozenset(s for s in range(self.system.rank) if self.has_left_descent(s))

    def right_multiply(self, s):
        """w * s"""
        table = self.system.roots.reflections[s]
        return GroupElement(
            self.system, tuple(self.image(table[i]) for i in range(len(self.images)))
        )

    def left_multiply(self, s):
        """s * w"""
        table = self.system.roots.reflections[s]
        return GroupElement(self.system, tuple(table[j] for j in self.images))

    def inverse(self):
        return self.system.invert(self)

    def weak_leq(self, other):
        return self.system.weak_order_leq(self, other)

    def reduced_word(self):
        """Lexicographically smallest reduced word, by greedy left-descent extraction"""
        letters = []
        remainder = self
        while remainder.length:
            s = min(remainder.left_descents())
            letters.append(s)
            remainder = remainder.left_multiply(s)
        return tuple(letters)

    def act(self, vector):
        return self.system.act_on_vector(self, vector)


class CoxeterSystem:
    def __init__(self, matrix, roots, unit_roots=False):
        self.matrix = matrix
        self.roots = roots
        self.unit_roots = unit_roots
        self.rank = matrix.rank
        self.field = roots.field
        self._identity = GroupElement(self, tuple(range(roots.num_positive)))
        self._simple = [
            GroupElement(self, roots.reflections[s][: roots.num_positive])
            for s in range(self.rank)
        ]
        self._longest = None
        self._elements = None

    def __repr__(self):
        return "CoxeterSystem({})".format(self.name)

    @property
    def name(self):
        return self.matrix.label()

    @property
    def generators(self):
        return [generator_name(s) for s in range(self.rank)]

    @property
    def crystallographic(self):
        return self.roots.crystallographic

    @property
    def fundamental_weights(self):
        return self.roots.weights

    def identity(self):
        return self._identity

    def simple(self, s):
        return self._simple[s]

    def _check(self, *elements):
        for element in elements:
            if element.system is not self:
                raise SystemMismatch(
                    "Element of {} used with {}".format(element.system.name, self.name)
                )

    def element_from_word(self, word):
        letters = tuple(word)
        element = self._identity
        for s in letters:
            if s < 0 or s >= self.rank:
                raise DimensionMismatch("Generator index {} out of range".format(s))
            element = element.right_multiply(s)
        return element

    def is_reduced(self, word):
        letters = tuple(word)
        return self.element_from_word(letters).length == len(letters)

    def compose(self, u, v):
        self._check(u, v)
        return GroupElement(self, tuple(u.image(j) for j in v.images))

    def invert(self, w):
        self._check(w)
        n_pos = self.roots.num_positive
        images = [0] * n_pos
        for i, j in enumerate(w.images):
            if j < n_pos:
                images[j] = i
            else:
                images[j - n_pos] = i + n_pos
        return GroupElement(self, tuple(images))

    def descents(self, w, side="right"):
        self._check(w)
        if side == "left":
            return w.left_descents()
        if side == "right":
            return w.right_descents()
        raise ValueError("side must be left or right, got {}".format(side))

    def weak_order_leq(self, u, v):
        """Right weak order: u <= v iff N(u) is contained in N(v)"""
        self._check(u, v)
        return u.inversions <= v.inversions

    def weak_order_leq_definitional(self, u, v):
        """u <= v iff v = u v' with l(v) = l(u) + l(v')"""
        self._check(u, v)
        return v.length == u.length + self.compose(self.invert(u), v).length

    def longest_element(self):
        if self._longest is None:
            element = self._identity
            ascending = True
            while ascending:
                ascending = False
                for s in range(self.rank):
                    if not element.has_right_descent(s):
                        element = element.right_multiply(s)
                        ascending = True
                        break
            self._longest = element
        return self._longest

    def enumerate_group(self, max_order=None):
        """All elements, level by level along weak-order covers"""
        if max_order is None:
            max_order = get_setting("CAMBRIANITE_MAX_ORDER", 10**5)
        if self._elements is not None:
            if len(self._elements) > max_order:
                raise GroupTooLarge(
                    "{} has more than {} elements".format(self.name, max_order)
                )
            return self._elements
        elements = [self._identity]
        level = [self._identity]
        while level:
            following = {}
            for w in level:
                for s in range(self.rank):
                    if not w.has_right_descent(s):
                        ws = w.right_multiply(s)
                        following.setdefault(ws, ws)
            level = sorted(following, key=lambda x: x.reduced_word())
            elements.extend(level)
            if len(elements) > max_order:
                raise GroupTooLarge(
                    "{} has more than {} elements".format(self.name, max_order)
                )
        logger.debug("Enumerated {} elements of {}".format(len(elements), self.name))
        self._elements = elements
        return elements

    def parabolic_components(self, w, subset):
        """w = w^I w_I with w_I in W_I and no right descent of w^I in I"""
        self._check(w)
        subset = frozenset(subset)
        head, tail = w, []
        while True:
            descent = next((s for s in sorted(subset) if head.has_right_descent(s)), None)
            if descent is None:
                break
            head = head.right_multiply(descent)
            tail.append(descent)
        return head, self.element_from_word(reversed(tail))

    def act_on_vector(self, w, vector):
        """w(x) for x in the simple-root basis, from the images of the simple roots"""
        self._check(w)
        if len(vector) != self.rank:
            raise DimensionMismatch(
                "Expected a vector of length {}, got {}".format(self.rank, len(vector))
            )
        result = [self.field.zero] * self.rank
        for s, coefficient in enumerate(vector):
            if coefficient.is_zero():
                continue
            root = self.roots.roots[w.images[s]]
            for i in range(self.rank):
                if not root[i].is_zero():
                    result[i] = result[i] + coefficient * root[i]
        return tuple(result)

    def inner(self, x, y):
        return self.roots.inner(x, y)

    def vector(self, values):
        return tuple(self.field(value) for value in values)

    def coxeter_elements(self):
        """One word per Coxeter element, from the acyclic orientations of the Coxeter graph"""
        graph = self.matrix.graph()
        edges = sorted(graph.edges())
        words = []
        for flips in itertools.product((False, True), repeat=len(edges)):
            oriented = nx.DiGraph()
            oriented.add_nodes_from(range(self.rank))
            for (s, t), flip in zip(edges, flips):
                if flip:
                    s, t = t, s
                oriented.add_edge(s, t)
            words.append(tuple(nx.lexicographical_topological_sort(oriented)))
        return sorted(set(words))


def build_system(spec, unit_roots=False, max_roots=None):
    """Build a CoxeterSystem from a type string, JSON literal, row list or CoxeterMatrix"""
    matrix = coxeter_matrix_from_spec(spec)
    roots = build_root_system(matrix, unit_roots=unit_roots, max_roots=max_roots)
    logger.info(
        "{}: rank {}, {} positive roots".format(matrix.label(), matrix.rank, roots.num_positive)
    )
    return CoxeterSystem(matrix, roots, unit_roots)
