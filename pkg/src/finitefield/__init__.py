from src.finitefield.field import (
    FieldElem,
    FieldParams,
    FiniteField,
    field_params,
    get_field,
    min_extension_degree,
)

__all__ = [
    "FieldElem",
    "FieldParams",
    "FiniteField",
    "field_params",
    "get_field",
    "min_extension_degree",
]
