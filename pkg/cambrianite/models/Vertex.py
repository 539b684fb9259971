from dataclasses import dataclass, field


@dataclass
class Vertex:
    point: tuple
    element: object
    word: str
    tight: list = field(default_factory=list)

    def serialize(self, float_digits=15):
        return {
            "word": self.word,
            "coords_exact": [str(x) for x in self.point],
            "coords_float": [round(float(x), float_digits) for x in self.point],
        }
