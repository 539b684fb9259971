"""The dihedral groups I2(m) drawn in the complex plane.

Points are stored exactly as re + i*sin(pi/m)*im with re and im in Q(2cos(pi/m)), so
e^(ik*pi/m) = cos(k*pi/m) + i*sin(pi/m)*U_(k-1)(cos(pi/m)) stays inside the model.
"""

from dataclasses import dataclass

import mpmath

from cambrianite.coxeter import build_system
from cambrianite.models.BasePoint import BasePoint
from cambrianite.models.Report import Report
from cambrianite.numberfield import field_for_orders
from cambrianite.polytopes import associahedron, permutahedron
from cambrianite.sortable import CoxeterElementChoice, lattice_for


@dataclass(frozen=True)
class PlanePoint:
    re: object
    im: object
    m: int

    @property
    def sin_squared(self):
        cos = self.re.field.cos_pi_over(self.m)
        return 1 - cos * cos

    def __add__(self, other):
        return PlanePoint(self.re + other.re, self.im + other.im, self.m)

    def __mul__(self, other):
        return PlanePoint(
            self.re * other.re - self.sin_squared * self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.m,
        )

    def scale(self, factor):
        return PlanePoint(self.re * factor, self.im * factor, self.m)

    def __eq__(self, other):
        return self.re == other.re and self.im == other.im and self.m == other.m

    def __hash__(self):
        return hash((self.re, self.im, self.m))

    def numeric(self):
        return mpmath.mpc(self.re.numeric(), self.im.numeric() * mpmath.sin(mpmath.pi / self.m))

    def __str__(self):
        return "{} + i*sin(pi/{})*({})".format(self.re, self.m, self.im)


def plane_field(m):
    return field_for_orders({m})


def unit_root(m, k=1):
    """e^(ik*pi/m), k may be negative"""
    field = plane_field(m)
    step = PlanePoint(field.cos_pi_over(m), field.one if k >= 0 else -field.one, m)
    point = PlanePoint(field.one, field.zero, m)
    for _ in range(abs(k)):
        point = point * step
    return point


def closed_form_extra_vertex(m):
    """P = i*sin(pi/m) / (cos(pi/m) - 1)"""
    field = plane_field(m)
    return PlanePoint(field.zero, 1 / (field.cos_pi_over(m) - 1), m)


def closed_form_numeric(m):
    angle = mpmath.pi / m
    return 1j * mpmath.sin(angle) / (mpmath.cos(angle) - 1)


def to_plane(system, point, m):
    """Map a point of the pipeline's I2(m) into the plane.

    v_s1 goes to the multiple of 1 + e^(-i*pi/m) and v_s2 to the multiple of 1 + e^(i*pi/m)
    with real part 1/2, so a = v_s1 + v_s2 is 1 and the reflection s1, which fixes v_s2,
    sends 1 to e^(i*pi/m).
    """
    field = plane_field(m)
    xi = system.roots.weight_coordinates(point)
    re = (xi[0] + xi[1]) / 2
    im = (xi[1] - xi[0]) / (2 * (1 + field.cos_pi_over(m)))
    return PlanePoint(field(re), field(im), m)


def model_vertex(w, m):
    """M(w) = e^(i l(w) pi/m) when s1 is a left descent of w, e^(-i l(w) pi/m) otherwise"""
    if w.has_left_descent(0):
        return unit_root(m, w.length)
    return unit_root(m, -w.length)


def dihedral_extra_vertex(m):
    """The vertex of Ass for c = s1 s2 missing from Perm, computed by the pipeline and mapped
    into the plane"""
    system = build_system("I2({})".format(m), unit_roots=True)
    c = CoxeterElementChoice(system, (0, 1))
    asso = associahedron(system, c, BasePoint.balanced(system))
    vertex = asso.vertex_for(system.simple(1))
    return to_plane(system, vertex.point, m)


def dihedral_check(m, tolerance=1e-12):
    report = Report("dihedral I2({})".format(m))
    system = build_system("I2({})".format(m), unit_roots=True)
    c = CoxeterElementChoice(system, (0, 1))
    base_point = BasePoint.balanced(system)
    perm = permutahedron(system, base_point)
    asso = associahedron(system, c, base_point)
    lattice = lattice_for(c)

    for vertex in perm.vertices:
        report.check(
            to_plane(system, vertex.point, m) == model_vertex(vertex.element, m),
            "M({}) does not match the plane model".format(vertex.word),
        )

    expected = closed_form_extra_vertex(m)
    found = to_plane(system, asso.vertex_for(system.simple(1)).point, m)
    report.check(found == expected, "x(C(s2)) = {} differs from P = {}".format(found, expected))
    distance = abs(found.numeric() - closed_form_numeric(m))
    report.check(distance < tolerance, "numeric distance {} to P".format(distance))

    non_singletons = [w for w in lattice.elements if not lattice.is_singleton(w)]
    if m >= 3:
        total = PlanePoint(plane_field(m).zero, plane_field(m).zero, m)
        for w in non_singletons:
            total = total + to_plane(system, perm.vertex_for(w).point, m)
        report.check(total == expected, "non-singleton vertices sum to {}".format(total))
        geometric = PlanePoint(plane_field(m).zero, plane_field(m).zero, m)
        for k in range(1, m):
            geometric = geometric + unit_root(m, -k)
        report.check(geometric == expected, "sum of e^(-ik*pi/m) is {}".format(geometric))

    report.check(
        len(lattice.singletons) == (m + 1 if m >= 3 else m + 2),
        "{} singletons".format(len(lattice.singletons)),
    )
    report.details = {
        "extra_vertex": str(found),
        "distance": float(distance),
        "non_singletons": len(non_singletons),
    }
    return report
