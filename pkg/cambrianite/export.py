import json
import math

import numpy as np

from cambrianite.exceptions import DimensionMismatch
from cambrianite.functions import get_setting


def to_json(polytope, float_digits=None):
    if float_digits is None:
        float_digits = get_setting("CAMBRIANITE_FLOAT_DIGITS", 15)
    return json.dumps(polytope.serialize(float_digits), indent=2)


def euclidean_frame(system):
    """Upper-triangular R with G = R^T R, so that R x has the standard inner product"""
    gram = np.array([[float(x) for x in row] for row in system.roots.gram])
    return np.linalg.cholesky(gram).T


def _ordered_face(points, members, normal, centre):
    """Members of one facet, counter-clockwise seen from outside"""
    face_centre = points[members].mean(axis=0)
    first = points[members[0]] - face_centre
    second = np.cross(normal, first)

    def angle(i):
        offset = points[i] - face_centre
        return math.atan2(np.dot(offset, second), np.dot(offset, first))

    ordered = sorted(members, key=angle)
    if len(ordered) >= 3:
        base = points[ordered[0]]
        turn = np.cross(points[ordered[1]] - base, points[ordered[2]] - base)
        if np.dot(turn, face_centre - centre) < 0:
            ordered.reverse()
    return ordered


def to_off(polytope, float_digits=None):
    if float_digits is None:
        float_digits = get_setting("CAMBRIANITE_FLOAT_DIGITS", 15)
    system = polytope.system
    if system.rank != 3:
        raise DimensionMismatch(
            "OFF export needs a rank 3 system, {} has rank {}".format(system.name, system.rank)
        )
    frame = euclidean_frame(system)
    points = np.array([frame @ np.array([float(x) for x in v.point]) for v in polytope.vertices])
    centre = points.mean(axis=0)

    faces = []
    for j, h in enumerate(polytope.halfspaces):
        members = polytope.facet_vertices(j)
        if len(members) < 3:
            continue
        normal = frame @ np.array([float(x) for x in h.normal])
        faces.append(_ordered_face(points, members, normal, centre))

    lines = ["OFF", "{} {} 0".format(len(points), len(faces))]
    for point in points:
        lines.append(" ".join(repr(round(float(x), float_digits)) for x in point))
    for face in faces:
        lines.append(" ".join(str(k) for k in [len(face)] + list(face)))
    return "\n".join(lines) + "\n"


def write(text, out=None):
    if out is None or out == "-":
        return text
    with open(out, "w") as output:
        output.write(text)
    return text
