from cambrianite.coxeter.matrix import CoxeterMatrix, parse_coxeter_type
from cambrianite.coxeter.root_system import RootSystem
from cambrianite.coxeter.system import CoxeterSystem, GroupElement, build_system

__all__ = [
    "CoxeterMatrix",
    "CoxeterSystem",
    "GroupElement",
    "RootSystem",
    "build_system",
    "parse_coxeter_type",
]
