from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from src.chevalley import AdjointEngine, AdjointMatrix
from src.errors import InvalidInputError, ParameterError
from src.finitefield import FieldElem
from src.lattices import TorsionTorusElement, TorusLattice
from src.rootsystem import Root


class TokenKind(str, Enum):
    X = "x"
    W = "w"
    H = "h"


@dataclass(frozen=True, eq=False)
class GeneratorToken:
    """One Steinberg generator; param None stands for 1"""

    kind: TokenKind
    root: Root
    param: Optional[FieldElem] = None

    def __post_init__(self):
        if self.kind != TokenKind.X and self.param is not None and int(self.param) == 0:
            raise ParameterError(f"{self.kind.value}_{self.root} needs a nonzero parameter")

    def __str__(self) -> str:
        param = "1" if self.param is None else str(int(self.param))
        return f"{self.kind.value}_{self.root}({param})"


@dataclass(frozen=True, eq=False)
class GroupWord:
    """Free word in the generators, read left to right"""

    tokens: Tuple[GeneratorToken, ...] = ()

    def __add__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.tokens + other.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[GeneratorToken]:
        return iter(self.tokens)

    def __str__(self) -> str:
        return " ".join(str(t) for t in self.tokens) or "1"

    def split(self, at: int) -> Tuple["GroupWord", "GroupWord"]:
        return GroupWord(self.tokens[:at]), GroupWord(self.tokens[at:])


def x_gen(root: Root, t: FieldElem) -> GeneratorToken:
    return GeneratorToken(TokenKind.X, root, t)


def w_gen(root: Root, t: Optional[FieldElem] = None) -> GeneratorToken:
    return GeneratorToken(TokenKind.W, root, t)


def h_gen(root: Root, t: FieldElem) -> GeneratorToken:
    return GeneratorToken(TokenKind.H, root, t)


def word(tokens: Sequence[GeneratorToken]) -> GroupWord:
    return GroupWord(tuple(tokens))


def token_matrix(token: GeneratorToken, engine: AdjointEngine) -> AdjointMatrix:
    param = engine.field.one if token.param is None else token.param
    if token.kind == TokenKind.X:
        return engine.x_matrix(token.root, param)
    if token.kind == TokenKind.W:
        return engine.w_matrix(token.root, param)
    return engine.h_matrix(token.root, param)


def evaluate(group_word: GroupWord, engine: AdjointEngine) -> AdjointMatrix:
    """Ordered product of the generator matrices"""
    result = engine.identity()
    for token in group_word:
        result = result @ token_matrix(token, engine)
    return result


def h_word_image(group_word: GroupWord, engine: AdjointEngine, lattice: TorusLattice, modulus: int) -> TorsionTorusElement:
    """Lattice element of a pure h-word whose parameters are powers of zeta_m"""
    zeta = engine.root_of_unity(modulus)
    powers = {int(zeta ** k): k for k in range(modulus)}
    terms: List[Tuple[Root, int]] = []
    for token in group_word:
        if token.kind != TokenKind.H:
            raise InvalidInputError(f"{token} is not an h-generator")
        param = 1 if token.param is None else int(token.param)
        if param not in powers:
            raise InvalidInputError(f"Parameter of {token} is not a {modulus}-th root of unity")
        terms.append((token.root, powers[param]))
    return lattice.h_element(terms, modulus)
