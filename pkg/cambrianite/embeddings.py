"""Types A and B placed in coordinate space.

A_(n-1) acts on R^n with simple roots e_(i+1) - e_i. B_n sits in R^(2n) with s1 on
e_(n+1) - e_n and s_j, j >= 2, on the symmetric pair of A_(2n-1) roots around it.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from cambrianite.coxeter import build_system
from cambrianite.exceptions import JobSpecError
from cambrianite.models.BasePoint import BasePoint
from cambrianite.models.Report import Report
from cambrianite.polytopes import associahedron, permutahedron
from cambrianite.sortable import CoxeterElementChoice


@dataclass
class EmbeddingReport(Report):
    ambient: dict = field(default_factory=dict)


def _unit(size, i):
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(size))


def type_a_roots(rank):
    """e_(i+1) - e_i in R^(rank+1), zero-based"""
    size = rank + 1
    return [
        tuple(a - b for a, b in zip(_unit(size, i + 1), _unit(size, i))) for i in range(rank)
    ]


def type_b_roots(rank):
    """Images of the B_n simple roots inside R^(2n), zero-based coordinates"""
    size = 2 * rank
    roots = [tuple(a - b for a, b in zip(_unit(size, rank), _unit(size, rank - 1)))]
    for j in range(2, rank + 1):
        i = rank - j + 1
        left = [a - b for a, b in zip(_unit(size, i), _unit(size, i - 1))]
        right = [a - b for a, b in zip(_unit(size, size - i), _unit(size, size - i - 1))]
        roots.append(tuple(a + b for a, b in zip(left, right)))
    return roots


def to_ambient(point, roots):
    size = len(roots[0])
    result = [Fraction(0)] * size
    for coefficient, root in zip(point, roots):
        value = coefficient.to_fraction()
        for k in range(size):
            result[k] += value * root[k]
    return tuple(result)


def type_b_lift(c_word, rank):
    """The symmetric Coxeter element of A_(2n-1) induced by a Coxeter element of B_n.

    s1 becomes tau_n and s_j becomes tau_(n-j+1) tau_(n+j-1), one-based.
    """
    letters = []
    for s in c_word:
        j = s + 1
        if j == 1:
            letters.append(rank - 1)
        else:
            letters.extend([rank - j, rank + j - 2])
    return tuple(letters)


def permutation_of(w):
    """w as a permutation of 0..n: s_i swaps i and i+1, composed along a reduced word"""
    size = w.system.rank + 1
    images = list(range(size))
    for s in reversed(w.reduced_word()):
        images = [s + 1 if x == s else s if x == s + 1 else x for x in images]
    return images


def type_a_embedding(rank, c_word=None):
    """Perm and Ass of A_rank translated by v_G, where M(w) = sum w^-1(i) e_i"""
    if rank < 1:
        raise JobSpecError("Type A needs rank at least 1")
    system = build_system("A{}".format(rank))
    c = CoxeterElementChoice(system, tuple(c_word or range(rank)))
    base_point = BasePoint.balanced(system)
    roots = type_a_roots(rank)
    size = rank + 1
    shift = Fraction(size + 1, 2)
    report = EmbeddingReport("type A embedding A{} {}".format(rank, c))

    perm = permutahedron(system, base_point)
    translated = {}
    for vertex in perm.vertices:
        point = tuple(x + shift for x in to_ambient(vertex.point, roots))
        translated[vertex.word] = point
        sigma = permutation_of(vertex.element)
        expected = [Fraction(0)] * size
        for i in range(size):
            expected[sigma[i]] = Fraction(i + 1)
        report.check(
            point == tuple(expected),
            "M({}) = {} instead of {}".format(vertex.word, point, tuple(expected)),
        )
    asso = associahedron(system, c, base_point)
    report.ambient = {
        "permutahedron": {word: [str(x) for x in point] for word, point in translated.items()},
        "associahedron": {
            vertex.word: [str(x + shift) for x in to_ambient(vertex.point, roots)]
            for vertex in asso.vertices
        },
    }
    return report


def _in_mirror_space(point):
    size = len(point)
    return all(point[i] + point[size - 1 - i] == 0 for i in range(size // 2))


def _dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _compare_with_section(report, name, small, big, small_roots, big_roots):
    """small = big intersected with the mirror space V'

    small lies in big: its vertices are in V' and satisfy every half space of big.
    big meets V' inside small: for a normal n in V' the maximum of <x, n> over big is attained
    at a vertex of big, so it suffices to bound every vertex of big.
    """
    small_vertices = [to_ambient(v.point, small_roots) for v in small.vertices]
    big_vertices = [to_ambient(v.point, big_roots) for v in big.vertices]
    big_halfspaces = [
        (to_ambient(h.normal, big_roots), h.offset.to_fraction()) for h in big.halfspaces
    ]
    for vertex, point in zip(small.vertices, small_vertices):
        report.check(_in_mirror_space(point), "{} vertex {} is off V'".format(name, vertex.word))
        for normal, offset in big_halfspaces:
            if _dot(point, normal) > offset:
                report.fail("{} vertex {} leaves the type A polytope".format(name, vertex.word))
                break
    for h in small.halfspaces:
        normal = to_ambient(h.normal, small_roots)
        offset = h.offset.to_fraction()
        top = max(_dot(point, normal) for point in big_vertices)
        report.check(
            top <= offset,
            "{} half space {} is violated on the type A polytope".format(name, h.label),
        )
    symmetric = {point for point in big_vertices if _in_mirror_space(point)}
    report.details[name] = {
        "vertices": len(small_vertices),
        "symmetric_type_a_vertices": len(symmetric),
        "same_vertex_set": symmetric == set(small_vertices),
    }


def type_b_embedding(rank, c_word=None):
    """Perm(B_n) = Perm(A_(2n-1)) and Ass_c(B_n) = Ass_c~(A_(2n-1)) on the mirror space"""
    if rank < 2:
        raise JobSpecError("Type B needs rank at least 2")
    small = build_system("B{}".format(rank))
    big = build_system("A{}".format(2 * rank - 1))
    c = CoxeterElementChoice(small, tuple(c_word or range(rank)))
    lifted = CoxeterElementChoice(big, type_b_lift(c.word, rank))
    small_point = BasePoint.from_coefficients(small, [1] + [2] * (rank - 1))
    big_point = BasePoint.balanced(big)
    small_roots, big_roots = type_b_roots(rank), type_a_roots(2 * rank - 1)
    report = EmbeddingReport("type B embedding B{} {}".format(rank, c))

    report.check(
        to_ambient(small_point.vector(small), small_roots)
        == to_ambient(big_point.vector(big), big_roots),
        "base points differ",
    )
    for s, root in enumerate(small_roots):
        for t, other in enumerate(small_roots):
            report.check(
                _dot(root, other) == small.roots.gram[s][t].to_fraction(),
                "embedded roots do not reproduce the B{} form".format(rank),
            )

    _compare_with_section(
        report,
        "permutahedron",
        permutahedron(small, small_point),
        permutahedron(big, big_point),
        small_roots,
        big_roots,
    )
    _compare_with_section(
        report,
        "associahedron",
        associahedron(small, c, small_point),
        associahedron(big, lifted, big_point),
        small_roots,
        big_roots,
    )
    report.ambient = {"lifted_coxeter_element": str(lifted)}
    return report
