from dataclasses import dataclass

from cambrianite import linalg
from cambrianite.exceptions import DimensionMismatch, NotInterior


@dataclass(frozen=True)
class BasePoint:
    """a = sum of a_s v_s with every a_s > 0"""

    coefficients: tuple

    def __post_init__(self):
        for s, value in enumerate(self.coefficients):
            if value.sign() <= 0:
                raise NotInterior(
                    "Base point coefficient a{} = {} is not positive".format(s + 1, value)
                )

    @classmethod
    def from_coefficients(cls, system, values):
        if len(values) != system.rank:
            raise DimensionMismatch(
                "Expected {} base point coefficients, got {}".format(system.rank, len(values))
            )
        return cls(tuple(system.field(value) for value in values))

    @classmethod
    def balanced(cls, system, value=1):
        return cls.from_coefficients(system, [value] * system.rank)

    @classmethod
    def from_vector(cls, system, vector):
        """The base point at a vector given in the simple-root basis"""
        return cls(tuple(system.roots.weight_coordinates(vector)))

    @classmethod
    def sum_of_positive_roots(cls, system):
        roots = system.roots
        total = [system.field.zero] * system.rank
        for root in roots.roots[: roots.num_positive]:
            total = linalg.add(total, root)
        return cls.from_vector(system, tuple(total))

    def vector(self, system):
        """a in the simple-root basis"""
        point = [system.field.zero] * system.rank
        for s, value in enumerate(self.coefficients):
            point = linalg.add(point, linalg.scale(system.fundamental_weights[s], value))
        return tuple(point)

    def offset(self, system, s):
        """<a, v_s>"""
        return system.inner(self.vector(system), system.fundamental_weights[s])

    def scaled(self, factor):
        return BasePoint(tuple(value * factor for value in self.coefficients))

    def serialize(self):
        return {"a{}".format(s + 1): str(value) for s, value in enumerate(self.coefficients)}
