from src.rootsystem.cartan import cartan_matrix, dynkin_edges, parse_type
from src.rootsystem.roots import (
    Root,
    RootSystem,
    SubsystemBase,
    build_root_system,
    parse_root,
    standard_a7_base,
)

__all__ = [
    "Root",
    "RootSystem",
    "SubsystemBase",
    "build_root_system",
    "cartan_matrix",
    "dynkin_edges",
    "parse_root",
    "parse_type",
    "standard_a7_base",
]
