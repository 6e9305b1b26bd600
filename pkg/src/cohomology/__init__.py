from src.cohomology.h1 import (
    GroupAutomorphism,
    H1Class,
    burnside_class_count,
    conjugacy_classes,
    h1_classes,
    twisted_related,
)
from src.cohomology.sym4 import AffineElement, FiniteGroupModel, Sym4Model, build_sym4_model, g_image
from src.cohomology.descriptors import (
    StructureDescriptor,
    class_label,
    descriptor_recipe,
    lookup_class,
    sigma_class_split,
    structure_descriptor,
)

__all__ = [
    "AffineElement",
    "FiniteGroupModel",
    "GroupAutomorphism",
    "H1Class",
    "StructureDescriptor",
    "Sym4Model",
    "build_sym4_model",
    "burnside_class_count",
    "class_label",
    "conjugacy_classes",
    "descriptor_recipe",
    "g_image",
    "h1_classes",
    "lookup_class",
    "sigma_class_split",
    "structure_descriptor",
    "twisted_related",
]
