from dataclasses import dataclass
from typing import Optional

from cambrianite.models.AlmostPositiveRoot import AlmostPositiveRoot


def direction_key(direction):
    """Exact key shared by all positive multiples of direction"""
    lead = next(x for x in direction if not x.is_zero())
    return tuple(x / abs(lead) for x in direction)


@dataclass
class Ray:
    """The ray spanned by w(v_s). orbit is s, element is one w producing it."""

    direction: tuple
    orbit: int
    element: object = None
    label: Optional[AlmostPositiveRoot] = None

    def __post_init__(self):
        if all(x.is_zero() for x in self.direction):
            raise ValueError("A ray direction must be nonzero")
        self.key = direction_key(self.direction)

    def serialize(self):
        return {
            "direction": [str(x) for x in self.direction],
            "orbit": "s{}".format(self.orbit + 1),
            "label": str(self.label) if self.label is not None else None,
        }
