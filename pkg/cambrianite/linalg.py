"""Exact dense linear algebra over a NumberField. Matrices are lists of rows of Scalars.

Solving, inversion, rank and determinants go through sympy's DomainMatrix over the field's domain.
"""

from sympy.polys.matrices import DomainMatrix

from cambrianite.exceptions import DimensionMismatch
from cambrianite.numberfield import Scalar, rationals


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("Vectors of length {} and {}".format(len(u), len(v)))
    total = None
    for a, b in zip(u, v):
        term = a * b
        total = term if total is None else total + term
    return total


def mat_vec(matrix, vector):
    return tuple(dot(row, vector) for row in matrix)


def transpose(matrix):
    return [list(column) for column in zip(*matrix)]


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(vector, factor):
    return tuple(a * factor for a in vector)


def _field_of(entries):
    fields = [x.field for x in entries if isinstance(x, Scalar)]
    if not fields:
        return rationals()
    return max(fields, key=lambda field: field.degree)


def _domain_matrix(rows, field=None):
    """DomainMatrix over the largest field among the entries, with that field"""
    rows = [list(row) for row in rows]
    if field is None:
        field = _field_of([x for row in rows for x in row])
    reps = [[field(x).rep for x in row] for row in rows]
    width = len(reps[0]) if reps else 0
    return DomainMatrix(reps, (len(reps), width), field.domain), field


def _check_square(matrix):
    if any(len(row) != len(matrix) for row in matrix):
        raise DimensionMismatch(
            "Expected a square matrix, got {}x{}".format(len(matrix), len(matrix[0]))
        )


def solve(matrix, rhs):
    """Solve matrix * x = rhs for square nonsingular matrix"""
    if len(matrix) != len(rhs) or any(len(row) != len(matrix) for row in matrix):
        raise DimensionMismatch("Expected a square system, got {}x{}".format(len(matrix), len(rhs)))
    a, field = _domain_matrix(matrix, _field_of(list(rhs) + [x for row in matrix for x in row]))
    if a.rank() < len(matrix):
        raise ArithmeticError("Singular matrix")
    b, _ = _domain_matrix([[x] for x in rhs], field)
    return tuple(field.wrap(row[0]) for row in a.lu_solve(b).to_list())


def inverse(matrix):
    _check_square(matrix)
    a, field = _domain_matrix(matrix)
    if a.rank() < len(matrix):
        raise ArithmeticError("Singular matrix")
    return [[field.wrap(x) for x in row] for row in a.inv().to_list()]


def coordinates_in_basis(basis, vector):
    """Coefficients of vector in the given basis (list of vectors)"""
    return solve(transpose(basis), vector)


def is_positive_definite(matrix):
    """Every leading principal minor of the symmetric matrix is positive"""
    _check_square(matrix)
    a, field = _domain_matrix(matrix)
    for k in range(1, len(matrix) + 1):
        if field.wrap(a[:k, :k].det()).sign() <= 0:
            return False
    return True


def rank(vectors):
    vectors = [list(v) for v in vectors]
    if not vectors or not vectors[0]:
        return 0
    return _domain_matrix(vectors)[0].rank()


def proportionality(vector, direction):
    """mu with vector = mu * direction, or None when they are not parallel"""
    if rank([vector, direction]) > 1:
        return None
    for a, b in zip(vector, direction):
        if b:
            return a / b
    return None
