"""
Binary quadratic forms aX^2 + bXY + cY^2, 2x2 integer matrices acting on them
by substitution, and Schering's even-middle-coefficient forms.

All objects here are immutable values; nothing is normalised on construction.
"""

import math
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from sympy.ntheory.primetest import is_square

from .errors import (
    FormatError,
    InvalidDiscriminantError,
    MatrixError,
    SquareDiscriminantError,
    ZeroFormError,
)

_FORM_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*$")


def is_square_discriminant(d: int) -> bool:
    """True for 0 and for positive perfect squares."""
    return d >= 0 and is_square(d)


def check_discriminant(d: int) -> int:
    """
    Validate that ``d`` is the discriminant of a quadratic order:
    non-square and congruent to 0 or 1 mod 4.
    """
    if is_square_discriminant(d):
        raise SquareDiscriminantError(f"discriminant {d} is a square")
    if d % 4 not in (0, 1):
        raise InvalidDiscriminantError(f"discriminant {d} is not 0 or 1 mod 4")
    return d


@dataclass(frozen=True)
class IntegerMatrix:
    """
    2x2 integer matrix ((alpha, beta), (gamma, delta)).

    Acting on a form F it gives F(alpha X + beta Y, gamma X + delta Y); acting on
    a column vector (x, y) it gives (alpha x + beta y, gamma x + delta y).
    """

    alpha: int
    beta: int
    gamma: int
    delta: int

    @property
    def determinant(self) -> int:
        return self.alpha * self.delta - self.beta * self.gamma

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        product = IntegerMatrix(
            self.alpha * other.alpha + self.beta * other.gamma,
            self.alpha * other.beta + self.beta * other.delta,
            self.gamma * other.alpha + self.delta * other.gamma,
            self.gamma * other.beta + self.delta * other.delta,
        )
        if isinstance(self, UnimodularMatrix) and isinstance(other, UnimodularMatrix):
            return UnimodularMatrix(*product.entries())
        return product

    def entries(self) -> Tuple[int, int, int, int]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def apply(self, x: int, y: int) -> Tuple[int, int]:
        return (self.alpha * x + self.beta * y, self.gamma * x + self.delta * y)

    def reduce_mod(self, m: int) -> Tuple[int, int, int, int]:
        return tuple(e % m for e in self.entries())

    def to_json(self):
        return [[self.alpha, self.beta], [self.gamma, self.delta]]


@dataclass(frozen=True)
class UnimodularMatrix(IntegerMatrix):
    """An element of GL2(Z): integer entries and determinant +1 or -1."""

    def __post_init__(self):
        if self.determinant not in (1, -1):
            raise MatrixError(
                f"matrix {self.to_json()} has determinant {self.determinant}"
            )

    @classmethod
    def identity(cls) -> "UnimodularMatrix":
        return cls(1, 0, 0, 1)

    def inverse(self) -> "UnimodularMatrix":
        det = self.determinant
        return UnimodularMatrix(
            self.delta * det, -self.beta * det, -self.gamma * det, self.alpha * det
        )

    def power(self, k: int) -> "UnimodularMatrix":
        base = self if k >= 0 else self.inverse()
        result = UnimodularMatrix.identity()
        for _ in range(abs(k)):
            result = result @ base
        return result

    def order_mod(self, m: int, limit: int = 64) -> Optional[int]:
        """Multiplicative order of the reduction mod ``m``, None past ``limit``."""
        identity = (1 % m, 0, 0, 1 % m)
        current = self
        for k in range(1, limit + 1):
            if current.reduce_mod(m) == identity:
                return k
            current = current @ self
        return None


@dataclass(frozen=True)
class Form:
    """The binary quadratic form aX^2 + bXY + cY^2."""

    a: int
    b: int
    c: int

    @classmethod
    def parse(cls, text: str) -> "Form":
        """Parse the canonical encoding ``a,b,c``."""
        match = _FORM_PATTERN.match(text)
        if not match:
            raise FormatError(f"expected a form as 'a,b,c', got {text!r}")
        return cls(*(int(group) for group in match.groups()))

    def __str__(self):
        return f"{self.a},{self.b},{self.c}"

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b
        yield self.c

    def to_json(self):
        return [self.a, self.b, self.c]

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        if self.a == self.b == self.c == 0:
            raise ZeroFormError("the zero form has no content")
        return math.gcd(self.a, self.b, self.c)

    def is_primitive(self) -> bool:
        return self.content == 1

    def is_definite(self) -> bool:
        return self.discriminant < 0

    def is_positive_definite(self) -> bool:
        return self.discriminant < 0 and self.a > 0

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def scale(self, k: int) -> "Form":
        return Form(k * self.a, k * self.b, k * self.c)

    def negate(self) -> "Form":
        return Form(-self.a, -self.b, -self.c)

    def primitive_part(self) -> "Form":
        g = self.content
        return Form(self.a // g, self.b // g, self.c // g)

    def opposite(self) -> "Form":
        """(a, -b, c): the form composed with (X, Y) -> (X, -Y)."""
        return Form(self.a, -self.b, self.c)

    def act(self, m: IntegerMatrix) -> "Form":
        """F(alpha X + beta Y, gamma X + delta Y)."""
        a, b, c = self.a, self.b, self.c
        al, be, ga, de = m.entries()
        return Form(
            a * al * al + b * al * ga + c * ga * ga,
            2 * a * al * be + b * (al * de + be * ga) + 2 * c * ga * de,
            a * be * be + b * be * de + c * de * de,
        )

    def dag(self) -> "Form":
        """F(2X, Y)."""
        return Form(4 * self.a, 2 * self.b, self.c)

    def ddag(self) -> "Form":
        """F(X, 2Y)."""
        return Form(self.a, 2 * self.b, 4 * self.c)


def discriminant(f: Form) -> int:
    return f.discriminant


def content(f: Form) -> int:
    return f.content


def act(f: Form, m: IntegerMatrix) -> Form:
    return f.act(m)


def dag(f: Form) -> Form:
    return f.dag()


def ddag(f: Form) -> Form:
    return f.ddag()


def principal_form(d: int) -> Form:
    """The form (1, d mod 2, (d mod 2 - d)/4) of discriminant d."""
    check_discriminant(d)
    k = d % 2
    return Form(1, k, (k - d) // 4)


# Delone-Watson forms: dw(2X, Y) = DW(X + Y, X).
DELONE_WATSON_LOWER = Form(1, 1, 1)
DELONE_WATSON_UPPER = Form(1, 0, 3)
DW_SUBSTITUTION = UnimodularMatrix(1, 1, 1, 0)


@dataclass(frozen=True)
class ScheringForm:
    """
    aX^2 + 2bXY + cY^2 in the even-middle-coefficient convention, with
    determinant b^2 - ac, order gcd(a, b, c) and species
    gcd(a, 2b, c) / gcd(a, b, c).
    """

    a: int
    b: int
    c: int

    @classmethod
    def from_form(cls, f: Form) -> "ScheringForm":
        if f.b % 2:
            raise FormatError(f"form {f} has an odd middle coefficient")
        return cls(f.a, f.b // 2, f.c)

    @classmethod
    def doubled(cls, f: Form) -> "ScheringForm":
        """2f written as 2aX^2 + 2bXY + 2cY^2; values are those of f times 2."""
        return cls(2 * f.a, f.b, 2 * f.c)

    @classmethod
    def parse(cls, text: str) -> "ScheringForm":
        return cls(*Form.parse(text))

    def to_form(self) -> Form:
        return Form(self.a, 2 * self.b, self.c)

    def to_json(self):
        return [self.a, self.b, self.c]

    @property
    def determinant(self) -> int:
        return self.b * self.b - self.a * self.c

    @property
    def order(self) -> int:
        if self.a == self.b == self.c == 0:
            raise ZeroFormError("the zero form has no order")
        return math.gcd(self.a, self.b, self.c)

    @property
    def species(self) -> int:
        return math.gcd(self.a, 2 * self.b, self.c) // self.order

    def is_properly_primitive(self) -> bool:
        return self.order == 1 and self.species == 1

    def is_improperly_primitive(self) -> bool:
        return self.order == 1 and self.species == 2


def schering_invariants(f: ScheringForm) -> Tuple[int, int, int]:
    """(determinant, order, species) of a Schering form."""
    return (f.determinant, f.order, f.species)
