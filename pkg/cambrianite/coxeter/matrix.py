import json
import re
from dataclasses import dataclass

import networkx as nx

from cambrianite.exceptions import JobSpecError, NonFinite

# Stored in place of an infinite order
INFINITY = 0
TYPE_PATTERN = re.compile(r"^([A-Ia-i])(\d+)(?:\((\d+)\))?$")


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple
    name: str = ""

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise JobSpecError("Coxeter matrix must have rank at least 1")
        for s, row in enumerate(self.entries):
            if len(row) != n:
                raise JobSpecError("Coxeter matrix must be square")
            for t, m in enumerate(row):
                if m != self.entries[t][s]:
                    raise JobSpecError("Coxeter matrix must be symmetric")
                if s == t and m != 1:
                    raise JobSpecError("Coxeter matrix must have 1 on the diagonal")
                if s != t and m != INFINITY and m < 2:
                    raise JobSpecError("Off-diagonal Coxeter matrix entries must be at least 2")

    @classmethod
    def from_rows(cls, rows, name=""):
        entries = []
        for row in rows:
            entries.append(tuple(_parse_order(m) for m in row))
        return cls(tuple(entries), name)

    @property
    def rank(self):
        return len(self.entries)

    def m(self, s, t):
        return self.entries[s][t]

    def label(self):
        if self.name:
            return self.name
        return json.dumps([list(row) for row in self.entries])

    def is_finite_order(self):
        return all(m != INFINITY for row in self.entries for m in row)

    def is_crystallographic(self):
        return all(m in (1, 2, 3, 4, 6) for row in self.entries for m in row)

    def orders(self):
        return {
            self.entries[s][t] for s in range(self.rank) for t in range(s + 1, self.rank)
        } - {INFINITY}

    def graph(self):
        """The Coxeter graph: one node per generator, an edge wherever m(s,t) >= 3"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.rank))
        for s in range(self.rank):
            for t in range(s + 1, self.rank):
                if self.entries[s][t] != 2:
                    graph.add_edge(s, t, m=self.entries[s][t])
        return graph

    def serialize(self):
        return {"name": self.name, "coxeter_matrix": [list(row) for row in self.entries]}


def _parse_order(m):
    if m is None or (isinstance(m, str) and m.strip().lower() in ("inf", "infinity", "oo")):
        return INFINITY
    try:
        m = int(m)
    except (TypeError, ValueError):
        raise JobSpecError("Invalid Coxeter matrix entry: {}".format(m))
    if m < 0:
        return INFINITY
    return m


def _from_edges(rank, edges, name):
    entries = [[1 if s == t else 2 for t in range(rank)] for s in range(rank)]
    for s, t, m in edges:
        entries[s][t] = entries[t][s] = m
    return CoxeterMatrix(tuple(tuple(row) for row in entries), name)


def _chain(rank, first=3):
    return [(i, i + 1, first if i == 0 else 3) for i in range(rank - 1)]


def irreducible_type(letter, rank, order=None):
    letter = letter.upper()
    name = "{}{}".format(letter, rank) if order is None else "{}{}({})".format(letter, rank, order)
    if letter == "A" and rank >= 1:
        return _from_edges(rank, _chain(rank), name)
    if letter in ("B", "C") and rank >= 2:
        return _from_edges(rank, _chain(rank, first=4), name)
    if letter == "D" and rank >= 4:
        edges = _chain(rank - 1) + [(rank - 3, rank - 1, 3)]
        return _from_edges(rank, edges, name)
    if letter == "E" and rank in (6, 7, 8):
        edges = [(0, 2, 3), (1, 3, 3)] + [(i, i + 1, 3) for i in range(2, rank - 1)]
        return _from_edges(rank, edges, name)
    if letter == "F" and rank == 4:
        return _from_edges(4, [(0, 1, 3), (1, 2, 4), (2, 3, 3)], name)
    if letter == "G" and rank == 2:
        return _from_edges(2, [(0, 1, 6)], name)
    if letter == "H" and rank in (3, 4):
        return _from_edges(rank, _chain(rank, first=5), name)
    if letter == "I" and rank == 2 and order is not None and order >= 2:
        return _from_edges(2, [(0, 1, order)] if order != 2 else [], name)
    raise JobSpecError("Unknown Coxeter type {}".format(name))


def block_sum(matrices, name):
    rank = sum(matrix.rank for matrix in matrices)
    entries = [[1 if s == t else 2 for t in range(rank)] for s in range(rank)]
    offset = 0
    for matrix in matrices:
        for s in range(matrix.rank):
            for t in range(matrix.rank):
                entries[offset + s][offset + t] = matrix.m(s, t)
        offset += matrix.rank
    return CoxeterMatrix(tuple(tuple(row) for row in entries), name)


def parse_coxeter_type(text):
    """Parse "A3", "B4", "H3", "I2(7)" or products such as "A1xA1" """
    text = text.strip()
    components = []
    for part in re.split(r"\s*[x×*]\s*", text):
        match = TYPE_PATTERN.match(part)
        if not match:
            raise JobSpecError("Cannot parse Coxeter type {}".format(part))
        letter, rank, order = match.group(1), int(match.group(2)), match.group(3)
        components.append(irreducible_type(letter, rank, int(order) if order else None))
    if len(components) == 1:
        return components[0]
    return block_sum(components, text)


def coxeter_matrix_from_spec(value):
    """A type string, a JSON object literal with coxeter_matrix, or a list of rows"""
    if isinstance(value, CoxeterMatrix):
        return value
    if isinstance(value, dict):
        if "coxeter_matrix" in value:
            return CoxeterMatrix.from_rows(value["coxeter_matrix"], value.get("name", ""))
        if "system" in value:
            return coxeter_matrix_from_spec(value["system"])
        raise JobSpecError("Expected a coxeter_matrix or system field")
    if isinstance(value, (list, tuple)):
        return CoxeterMatrix.from_rows(value)
    text = str(value).strip()
    if text.startswith("{") or text.startswith("["):
        try:
            return coxeter_matrix_from_spec(json.loads(text))
        except json.JSONDecodeError as e:
            raise JobSpecError("Invalid JSON Coxeter matrix: {}".format(e))
    return parse_coxeter_type(text)


def require_finite_orders(matrix):
    if not matrix.is_finite_order():
        raise NonFinite("{} has an infinite order entry".format(matrix.label()))
