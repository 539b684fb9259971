from dataclasses import dataclass, field

from cambrianite.functions import format_word


@dataclass
class Polytope:
    """Both representations of a permutahedron or generalized associahedron.

    Points and normals are in the simple-root basis. incidence[i] lists the half spaces
    tight at vertex i.
    """

    kind: str
    system: object
    base_point: object
    vertices: list
    halfspaces: list
    coxeter_element: object = None
    incidence: list = field(default_factory=list)

    def __post_init__(self):
        if not self.incidence:
            self.incidence = [
                [j for j, h in enumerate(self.halfspaces) if h.is_tight(self.system.inner, v.point)]
                for v in self.vertices
            ]
            for vertex, tight in zip(self.vertices, self.incidence):
                vertex.tight = tight

    @property
    def dimension(self):
        return self.system.rank

    def points(self):
        return [v.point for v in self.vertices]

    def point_set(self):
        return {v.point for v in self.vertices}

    def vertex_for(self, element):
        return next((v for v in self.vertices if v.element == element), None)

    def facet_vertices(self, j):
        return [i for i, tight in enumerate(self.incidence) if j in tight]

    def serialize(self, float_digits=15):
        header = {
            "system": self.system.name,
            "kind": self.kind,
            "number_field": self.system.field.describe(),
        }
        if self.coxeter_element is not None:
            header["coxeter_element"] = format_word(self.coxeter_element.word)
        header["base_point"] = self.base_point.serialize()
        header["vertices"] = [v.serialize(float_digits) for v in self.vertices]
        header["halfspaces"] = [h.serialize(float_digits) for h in self.halfspaces]
        header["incidence"] = self.incidence
        return header
