"""
Linear combinations of (0,3) tensors evaluated on operator words.

A term is written like ``-2 T(fZ,X,QfY)``: a signed rational coefficient, an
operand name and three arguments. Each argument is a word of operator tokens
applied (right to left) to one of the base vectors X, Y, Z. Every term uses
X, Y and Z exactly once.

Operand names:
    T   torsion                     K   contorsion
    N   Levi-Civita derivative of F (N(X,Y,Z) = (∇^g_X F)(Y,Z))
    dF  exterior derivative of F
    NF  derivative of F along the Einstein connection
    Ng  derivative of g along the Einstein connection

Operator tokens:
    f, f2 .. f6   powers of f
    Q, Q2, Q3     powers of Q = -f² - I
    P, Pi         P = I - f² and its inverse
    J             the unit-normalized complex structure of a weighted factor

Evaluating an expression returns out[a, b, c] = value at X=e_a, Y=e_b, Z=e_c.
"""

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .types import Array

OPERANDS = ("NF", "Ng", "dF", "N", "T", "K")

_TERM = re.compile(
    r"(?P<sign>[+-])\s*(?P<coef>\d+(?:/\d+)?)?\s*(?P<operand>NF|Ng|dF|N|T|K)\((?P<args>[^)]*)\)"
)
_TOKEN = re.compile(r"Pi|P|Q[23]?|f[2-6]?|J")
_OUTPUT = {"X": "a", "Y": "b", "Z": "c"}
_INTERNAL = ("k", "l", "m")


@dataclass(frozen=True)
class Argument:
    """Operator word applied to a base vector, e.g. ('Q', 'f') on 'Y' for QfY."""

    operators: tuple[str, ...]
    base: str

    @classmethod
    def parse(cls, word: str) -> "Argument":
        word = word.strip()
        if not word or word[-1] not in _OUTPUT:
            raise ValueError(f"Argument '{word}' must end in X, Y or Z")
        prefix = word[:-1]
        tokens = _TOKEN.findall(prefix)
        if "".join(tokens) != prefix:
            raise ValueError(f"Cannot parse operator word '{prefix}' in '{word}'")
        return cls(tuple(tokens), word[-1])

    def __str__(self) -> str:
        return "".join(self.operators) + self.base


@dataclass(frozen=True)
class Term:
    coef: float
    operand: str
    args: tuple[Argument, Argument, Argument]

    def __post_init__(self):
        if self.operand not in OPERANDS:
            raise ValueError(f"Unknown operand '{self.operand}'")
        if sorted(a.base for a in self.args) != ["X", "Y", "Z"]:
            raise ValueError(f"Term must use X, Y, Z once each: {self}")

    @classmethod
    def of(cls, coef: float, operand: str, *words: str) -> "Term":
        if len(words) != 3:
            raise ValueError(f"Term needs three arguments, got {words}")
        a, b, c = (Argument.parse(w) for w in words)
        return cls(float(coef), operand, (a, b, c))

    def __str__(self) -> str:
        return f"{self.coef:+g} {self.operand}({','.join(str(a) for a in self.args)})"


@dataclass(frozen=True)
class Expression:
    """Sum of terms; evaluates to an n x n x n array indexed by (X, Y, Z)."""

    name: str
    terms: tuple[Term, ...]

    @classmethod
    def parse(cls, name: str, text: str) -> "Expression":
        """
        Parse a whitespace-separated list of signed terms.

        Raises:
            ValueError: If any part of the text is not a term
        """
        terms = []
        consumed = 0
        stripped = text.strip()
        for match in _TERM.finditer(stripped):
            gap = stripped[consumed : match.start()]
            if gap.strip():
                raise ValueError(f"{name}: cannot parse '{gap.strip()}'")
            consumed = match.end()
            coef = float(Fraction(match["coef"])) if match["coef"] else 1.0
            if match["sign"] == "-":
                coef = -coef
            words = [w for w in match["args"].split(",")]
            terms.append(Term.of(coef, match["operand"], *words))
        if stripped[consumed:].strip():
            raise ValueError(f"{name}: cannot parse '{stripped[consumed:].strip()}'")
        if not terms:
            raise ValueError(f"{name}: no terms")
        return cls(name, tuple(terms))

    @classmethod
    def from_terms(cls, name: str, terms: Iterable[Term]) -> "Expression":
        return cls(name, tuple(terms))

    def __add__(self, other: "Expression") -> "Expression":
        return Expression(f"{self.name}+{other.name}", self.terms + other.terms)

    def scaled(self, factor: float) -> "Expression":
        return Expression(
            self.name, tuple(Term(t.coef * factor, t.operand, t.args) for t in self.terms)
        )

    @property
    def operands(self) -> frozenset[str]:
        return frozenset(t.operand for t in self.terms)

    @property
    def tokens(self) -> frozenset[str]:
        """Operator tokens used anywhere in the expression."""
        return frozenset(tok for t in self.terms for a in t.args for tok in a.operators)

    def evaluate(self, operands: Mapping[str, Array], operators: Mapping[str, Array]) -> Array:
        """
        Evaluate every term on the basis vectors.

        Args:
            operands: Operand name -> (0,3) component array
            operators: Token -> endomorphism matrix

        Raises:
            KeyError: If an operand or operator token is not supplied
        """
        words: dict[tuple[str, ...], Array] = {}

        def word_matrix(tokens: tuple[str, ...]) -> Array:
            if tokens not in words:
                matrix = operators[tokens[0]]
                for token in tokens[1:]:
                    matrix = matrix @ operators[token]
                words[tokens] = matrix
            return words[tokens]

        result: Array | None = None
        for term in self.terms:
            tensor = operands[term.operand]
            subscripts = []
            factors = []
            tensor_indices = ""
            for slot, arg in enumerate(term.args):
                out = _OUTPUT[arg.base]
                if arg.operators:
                    inner = _INTERNAL[slot]
                    tensor_indices += inner
                    subscripts.append(inner + out)
                    factors.append(word_matrix(arg.operators))
                else:
                    tensor_indices += out
            spec = ",".join([tensor_indices, *subscripts]) + "->abc"
            value = term.coef * np.einsum(spec, tensor, *factors)
            result = value if result is None else result + value

        assert result is not None
        return result
