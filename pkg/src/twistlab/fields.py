"""Exact coefficient fields: prime fields GF(p) and arbitrary-precision rationals.

Scalars are plain Python values (int residues for GF(p), Fraction for the
rationals); the field object supplies the arithmetic.  No floating point
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field with p elements, represented as ints in range(p)."""

    p: int = 2

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"field order must be prime, got {self.p}")

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverting 0 in a prime field")
        return pow(a, -1, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def format(self, a: int) -> str:
        return str(a % self.p)

    def parse(self, s: str) -> int:
        if "/" in s:
            num, den = s.split("/", 1)
            return self.mul(self.from_int(int(num)), self.inv(self.from_int(int(den))))
        return self.from_int(int(s))

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalField:
    """The rationals, backed by fractions.Fraction."""

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a: Fraction, b: Fraction) -> Fraction:
        return a + b

    def sub(self, a: Fraction, b: Fraction) -> Fraction:
        return a - b

    def mul(self, a: Fraction, b: Fraction) -> Fraction:
        return a * b

    def neg(self, a: Fraction) -> Fraction:
        return -a

    def inv(self, a: Fraction) -> Fraction:
        if a == 0:
            raise ZeroDivisionError("inverting 0")
        return 1 / a

    def is_zero(self, a: Fraction) -> bool:
        return a == 0

    def format(self, a: Fraction) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse(self, s: str) -> Fraction:
        return Fraction(s)

    def __repr__(self) -> str:  # pragma: no cover - debug aid
        return "QQ"


Field = Union[PrimeField, RationalField]

GF2 = PrimeField(2)
QQ = RationalField()


def field_from_name(name: str) -> Field:
    """Parse a field spec: "q" for the rationals, "f<p>" for GF(p)."""
    name = name.strip().lower()
    if name in ("q", "qq", "rational", "rationals"):
        return QQ
    if name.startswith("f") and name[1:].isdigit():
        return PrimeField(int(name[1:]))
    if name.startswith("gf") and name[2:].isdigit():
        return PrimeField(int(name[2:]))
    raise ValueError(f"unknown field {name!r} (expected 'q' or 'f<p>')")
