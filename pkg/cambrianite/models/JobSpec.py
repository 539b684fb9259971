import json
import os

import yaml

from cambrianite.exceptions import JobSpecError
from cambrianite.functions import parse_fractions


class JobSpec:
    """What to build: a system, a Coxeter element word and a base point"""

    def __init__(self, system, c=None, base_point=None, command=None, out=None, export=None):
        self.system = system
        self.c = c
        self.base_point = base_point
        self.command = command
        self.out = out
        self.export = export

    @classmethod
    def from_mapping(cls, data):
        if not isinstance(data, dict):
            raise JobSpecError("A job must be a mapping")
        system = data.get("system", data.get("type"))
        if system is None and "coxeter_matrix" in data:
            system = {"coxeter_matrix": data["coxeter_matrix"], "name": data.get("name", "")}
        if system is None:
            raise JobSpecError("A job needs a system or coxeter_matrix field")
        base_point = data.get("base_point")
        if base_point is not None:
            base_point = parse_fractions(base_point)
            if any(value <= 0 for value in base_point):
                raise JobSpecError("Base point coefficients must be positive")
        return cls(
            system=system,
            c=data.get("coxeter_element", data.get("c")),
            base_point=base_point,
            command=data.get("command"),
            out=data.get("out"),
            export=data.get("export"),
        )

    @classmethod
    def parse(cls, value):
        """A type string, an inline JSON literal, or a path to a JSON or YAML job file"""
        if isinstance(value, str) and os.path.isfile(value):
            with open(value) as job_file:
                try:
                    data = yaml.safe_load(job_file)
                except yaml.YAMLError as e:
                    raise JobSpecError("Cannot read job file {}: {}".format(value, e))
            if isinstance(data, str):
                return cls(system=data)
            return cls.from_mapping(data)
        if isinstance(value, str) and value.strip().startswith("{"):
            try:
                data = json.loads(value)
            except json.JSONDecodeError as e:
                raise JobSpecError("Invalid JSON job: {}".format(e))
            if "coxeter_matrix" in data and "system" not in data:
                return cls(system=data, c=data.get("coxeter_element"))
            return cls.from_mapping(data)
        return cls(system=value)

    def serialize(self):
        return {
            "system": self.system,
            "coxeter_element": self.c,
            "base_point": [str(x) for x in self.base_point] if self.base_point else None,
            "command": self.command,
            "out": self.out,
            "export": self.export,
        }
