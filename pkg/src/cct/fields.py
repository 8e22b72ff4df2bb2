"""Exact base fields: the rationals and prime fields F_p.

Scalars are plain Python values: ``Fraction`` over the rationals, ints in
``range(p)`` over F_p, and unbounded ints in integer (Z) mode.  A
:class:`FieldSpec` bundles the arithmetic so matrices and representations can
stay field-agnostic.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldError

__all__ = ["FieldSpec", "QQ", "fp", "is_prime"]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The base field: ``kind`` is ``"rationals"`` or ``"fp"`` (with prime p)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rationals":
            if self.p is not None:
                raise FieldError("rationals take no characteristic")
        elif self.kind == "fp":
            if self.p is None or not is_prime(self.p):
                raise FieldError(f"{self.p!r} is not a prime")
            if self.p >= 1 << 20:
                raise FieldError("primes above 2^20 are not supported")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    # -- scalar arithmetic ------------------------------------------------

    @property
    def is_fp(self) -> bool:
        return self.kind == "fp"

    def zero(self):
        return 0 if self.is_fp else Fraction(0)

    def one(self):
        return 1 if self.is_fp else Fraction(1)

    def of_int(self, n: int):
        return n % self.p if self.is_fp else Fraction(n)

    def add(self, a, b):
        return (a + b) % self.p if self.is_fp else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.is_fp else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.is_fp else a * b

    def neg(self, a):
        return (-a) % self.p if self.is_fp else -a

    def inv(self, a):
        if self.is_fp:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return Fraction(1) / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return self.sub(a, b) == self.zero()

    # -- parsing / printing ------------------------------------------------

    def parse(self, s: str):
        """Parse a scalar from its exact string form ("5", "-2/3")."""
        s = s.strip()
        try:
            num, _, den = s.partition("/")
            n = int(num)
            d = int(den) if den else 1
        except ValueError:
            raise FieldError(f"cannot parse scalar {s!r}") from None
        if d == 0:
            raise FieldError(f"zero denominator in {s!r}")
        if self.is_fp:
            if d % self.p == 0:
                raise FieldError(f"{s!r} has no meaning in F_{self.p}")
            return self.div(n % self.p, d % self.p)
        return Fraction(n, d)

    def fmt(self, a) -> str:
        return str(a)

    def to_json(self) -> dict:
        if self.is_fp:
            return {"kind": "fp", "p": self.p}
        return {"kind": "rationals"}

    @staticmethod
    def from_json(doc: dict) -> "FieldSpec":
        kind = doc.get("kind")
        if kind == "fp":
            return FieldSpec("fp", int(doc["p"]))
        if kind == "rationals":
            return FieldSpec("rationals")
        raise FieldError(f"unknown field kind {kind!r}")


QQ = FieldSpec("rationals")


def fp(p: int) -> FieldSpec:
    return FieldSpec("fp", p)
