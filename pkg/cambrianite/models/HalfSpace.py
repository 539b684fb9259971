from dataclasses import dataclass


@dataclass
class HalfSpace:
    """{x : <x, normal> <= offset}"""

    normal: tuple
    offset: object
    orbit: int
    label: str = ""
    admissible: bool = False

    def value(self, inner, point):
        return inner(point, self.normal)

    def contains(self, inner, point):
        return self.value(inner, point) <= self.offset

    def is_tight(self, inner, point):
        return self.value(inner, point) == self.offset

    def serialize(self, float_digits=15):
        return {
            "normal_exact": [str(x) for x in self.normal],
            "offset_exact": str(self.offset),
            "offset_float": round(float(self.offset), float_digits),
            "admissible": self.admissible,
            "label": self.label,
        }
