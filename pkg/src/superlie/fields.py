"""Exact scalar arithmetic over the rationals and odd prime fields.

Scalars are plain Python objects: ``fractions.Fraction`` (or ``int``) over
the rationals, canonical residues ``0..p-1`` over a prime field.  A
:class:`Field` value carries the choice and provides parsing, formatting
and the few operations that are not just ``+``/``*`` on the scalars
themselves (inversion, canonicalization).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    """Invalid field specification or a scalar that does not parse in it."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """The ground field: the rationals (``p is None``) or GF(p), p an odd prime."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise FieldError(f"modulus {self.p} is not prime")
            if self.p == 2:
                raise FieldError("characteristic 2 is not supported")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    # -- scalar construction ------------------------------------------

    def of(self, value) -> Fraction | int:
        """Canonicalize an int / Fraction into this field."""
        if self.p is None:
            return value if isinstance(value, (int, Fraction)) else Fraction(value)
        if isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
            return num * pow(den, -1, self.p) % self.p
        return value % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:

        return 1

    def inv(self, value):
        if self.p is None:
            if value == 0:
                raise ZeroDivisionError("inverse of zero")
            return Fraction(1, 1) / Fraction(value)
        v = value % self.p
        if v == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(v, -1, self.p)

    def div(self, a, b):
        if self.p is None:
            return Fraction(a) / Fraction(b)
        return a * self.inv(b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def reduce(self, a):
        """Normal form of a scalar (mod p, or exact Fraction/int)."""
        return a if self.p is None else a % self.p

    def is_zero(self, a) -> bool:
        return a == 0 if self.p is None else a % self.p == 0

    # -- string round trip --------------------------------------------

    def parse(self, text: str):
        """Parse ``"a"`` or ``"a/b"`` (reduced, b > 0 on output)."""
        text = text.strip()
        try:
            if "/" in text:
                if self.p is not None:
                    num, den = text.split("/")
                    return self.of(Fraction(int(num), int(den)))
                return Fraction(text)
            n = int(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"cannot parse scalar {text!r} over {self}") from exc
        return self.of(n)

    def format(self, value) -> str:
        if self.p is None:
            f = Fraction(value)
            return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
        return str(value % self.p)


QQ = Field()
