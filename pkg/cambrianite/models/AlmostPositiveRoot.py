from dataclasses import dataclass

from cambrianite.functions import format_root


@dataclass(frozen=True)
class AlmostPositiveRoot:
    """A positive root or the negative of a simple root, by its index in the root table"""

    index: int
    coefficients: tuple
    num_positive: int

    @classmethod
    def of(cls, roots, index):
        if not roots.is_positive(index) and roots.negate(index) >= roots.rank:
            raise ValueError("{} is not an almost positive root".format(roots.root_label(index)))
        return cls(index, roots.roots[index], roots.num_positive)

    @classmethod
    def negative_simple(cls, roots, s):
        return cls.of(roots, roots.negate(s))

    @property
    def is_negative_simple(self):
        return self.index >= self.num_positive

    @property
    def sort_key(self):
        # -Delta first, then the positive roots in root-closure order
        if self.is_negative_simple:
            return (0, self.index - self.num_positive)
        return (1, self.index)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return format_root(self.coefficients)

    def serialize(self):
        return str(self)
