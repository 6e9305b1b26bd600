from itertools import combinations
from typing import List, Optional

from pydantic import BaseModel

from src.cohomology.h1 import H1Class
from src.cohomology.sym4 import Sym4Model
from src.config import load_reference_values
from src.errors import ClassLookupError

# Image order in Sym_3 selects the twisted form of the D4 factor
D4_FORMS = {1: "Inndiag(D4(q))", 2: "2D4(q).2", 3: "3D4(q)"}
E_PART = {4: "2^2", 2: "2"}


class StructureDescriptor(BaseModel):
    class_label: str
    descriptor: str
    recipe: str
    recipe_agrees: bool
    derived_in_source: bool


def class_label(model: Sym4Model, a: int) -> str:
    """Cycle type of a on the four points, e.g. "(1,2)(3,4)\""""
    lengths = sorted((len(c) for c in model.point_permutation(a).cyclic_form), reverse=True)
    if not lengths:
        return "(1)"
    labels, start = [], 1
    for length in lengths:
        labels.append("(" + ",".join(str(start + i) for i in range(length)) + ")")
        start += length
    return "".join(labels)


def _has_complement(model: Sym4Model, group: List[int], normal: List[int]) -> bool:
    target = len(group) // len(normal)
    if target == 1:
        return True
    normal_set = set(normal)
    for size in (1, 2):
        for gens in combinations(group, size):
            sub = model.generated_subgroup(gens)
            if len(sub) == target and normal_set.intersection(sub) == {model.identity}:
                return True
    return False


def descriptor_recipe(model: Sym4Model, a: int) -> str:
    """Structure string for the class of a.

    The D4 factor is read from the order of a's image in Sym_3. The centralizer
    C of a contributes its intersection A with E as a direct factor when A has
    a complement in C; otherwise the whole of C sits on top.
    """
    d4 = D4_FORMS[model.quotient_order(a)]
    centralizer = model.centralizer(a)
    fixed = [c for c in centralizer if model.in_translations(c)]
    quotient = len(centralizer) // len(fixed)
    quotient_name = "Sym3" if quotient == 6 else str(quotient)

    wrapped = f"({d4})" if "." in d4 else d4
    if len(fixed) == 1:
        return f"{wrapped}.{quotient_name}"
    if _has_complement(model, centralizer, fixed):
        return f"({E_PART[len(fixed)]} x {d4}).{quotient_name}"
    return f"{wrapped}.{len(centralizer)}"


def structure_descriptor(model: Sym4Model, h1_class: H1Class) -> StructureDescriptor:
    a = model.index(h1_class.representative)
    label = class_label(model, a)
    try:
        row = load_reference_values().structure_row(label)
    except KeyError:
        raise ClassLookupError(f"No structure row for class {label}")
    recipe = descriptor_recipe(model, a)
    return StructureDescriptor(
        class_label=label,
        descriptor=row.descriptor,
        recipe=recipe,
        recipe_agrees=recipe == row.descriptor,
        derived_in_source=row.derived_in_source,
    )


def sigma_class_split(model: Sym4Model, classes: List[H1Class]) -> List[List[str]]:
    """How the elements of E fall into the given twisted classes"""
    translations = {model.labels[a] for a in model.translations()}
    split = [sorted(set(c.members) & translations) for c in classes]
    return [part for part in split if part]


def lookup_class(classes: List[H1Class], label: str) -> Optional[H1Class]:
    return next((c for c in classes if label in c.members), None)
