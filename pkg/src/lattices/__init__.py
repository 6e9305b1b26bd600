from src.rootsystem.cartan import cartan_matrix
from src.lattices.smith import fundamental_group, invariant_factors, kernel_mod, smith_decomposition
from src.lattices.torus import (
    FrobeniusSpec,
    IsogenyForm,
    SubsystemCenter,
    TorsionTorusElement,
    TorusLattice,
    get_lattice,
)

__all__ = [
    "FrobeniusSpec",
    "IsogenyForm",
    "SubsystemCenter",
    "TorsionTorusElement",
    "TorusLattice",
    "cartan_matrix",
    "fundamental_group",
    "get_lattice",
    "invariant_factors",
    "kernel_mod",
    "smith_decomposition",
]
