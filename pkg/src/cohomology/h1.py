from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from src.cohomology.sym4 import FiniteGroupModel
from src.errors import EngineError, InvalidInputError


@dataclass(frozen=True)
class GroupAutomorphism:
    """An automorphism as the permutation it induces on element indices"""

    images: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    @classmethod
    def identity(cls, group: FiniteGroupModel) -> "GroupAutomorphism":
        return cls(tuple(range(group.order)))

    @classmethod
    def inner(cls, group: FiniteGroupModel, a: int) -> "GroupAutomorphism":
        """g -> a g a^-1"""
        return cls(tuple(group.conj(g, a) for g in range(group.order)))

    def validate(self, group: FiniteGroupModel):
        if sorted(self.images) != list(range(group.order)):
            raise InvalidInputError("Automorphism is not a bijection")
        for a in range(group.order):
            for b in range(group.order):
                if self(group.mul(a, b)) != group.mul(self(a), self(b)):
                    raise InvalidInputError("Automorphism is not multiplicative")


class H1Class(BaseModel):
    """A sigma-twisted conjugacy class; witnesses[y] = g with sigma(g)^-1 rep g = y"""

    representative: str
    members: List[str]
    witnesses: Dict[str, str]


def twisted_image(group: FiniteGroupModel, sigma: GroupAutomorphism, x: int, g: int) -> int:
    """sigma(g)^-1 x g"""
    return group.mul(group.mul(group.inv(sigma(g)), x), g)


def h1_classes(group: FiniteGroupModel, sigma: GroupAutomorphism) -> List[H1Class]:
    """Partition of the group by x ~ sigma(g)^-1 x g, by exhaustive search"""
    sigma.validate(group)
    assigned = set()
    classes = []
    for x in range(group.order):
        if x in assigned:
            continue
        witnesses: Dict[int, int] = {}
        for g in range(group.order):
            witnesses.setdefault(twisted_image(group, sigma, x, g), g)
        assigned.update(witnesses)
        members = sorted(witnesses)
        classes.append(H1Class(
            representative=group.labels[x],
            members=[group.labels[y] for y in members],
            witnesses={group.labels[y]: group.labels[witnesses[y]] for y in members},
        ))
    return classes


def twisted_related(group: FiniteGroupModel, sigma: GroupAutomorphism, x: str, y: str) -> Optional[str]:
    """A witness g with sigma(g)^-1 x g = y, or None"""
    xi, yi = group.index(x), group.index(y)
    for g in range(group.order):
        if twisted_image(group, sigma, xi, g) == yi:
            return group.labels[g]
    return None


def conjugacy_classes(group: FiniteGroupModel) -> List[List[str]]:
    """Ordinary conjugacy classes, computed directly from g x g^-1"""
    seen = set()
    classes = []
    for x in range(group.order):
        if x in seen:
            continue
        orbit = sorted({group.conj(x, g) for g in range(group.order)})
        seen.update(orbit)
        classes.append([group.labels[y] for y in orbit])
    return classes


def burnside_class_count(group: FiniteGroupModel) -> int:
    """Average number of elements fixed by conjugation"""
    fixed = sum(len(group.centralizer(g)) for g in range(group.order))
    if fixed % group.order:
        raise EngineError("Fixed-point count is not divisible by the group order")
    return fixed // group.order
