from dataclasses import dataclass


@dataclass
class Cone:
    """A maximal cone C(w) of a Cambrian fan"""

    sortable: object
    rays: tuple
    chambers: tuple
    word: str = ""

    @property
    def is_chamber(self):
        return len(self.chambers) == 1

    def serialize(self):
        return {
            "word": self.word,
            "rays": list(self.rays),
            "chambers": len(self.chambers),
        }
