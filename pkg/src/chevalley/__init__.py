from src.chevalley.adjoint import AdjointEngine, AdjointMatrix, get_engine
from src.chevalley.basis import SIGN_CONVENTION_ID, ChevalleyBasis, build_chevalley_basis

__all__ = [
    "AdjointEngine",
    "AdjointMatrix",
    "ChevalleyBasis",
    "SIGN_CONVENTION_ID",
    "build_chevalley_basis",
    "get_engine",
]
