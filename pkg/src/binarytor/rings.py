"""Ground rings: the rationals, prime fields and the integers.

Scalars are plain Python numbers kept in canonical form: ``Fraction`` over
the rationals, ``int`` in ``[0, p)`` over a prime field and ``int`` over the
integers.  Canonical forms make structural equality the same as equality of
ring elements.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class RingError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Ring:
    kind: str  # "Q", "Z" or "F"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "F"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == "F":
            if not (_is_prime(self.p) and self.p < 2**31):
                raise RingError(f"{self.p} is not a prime below 2^31")
        elif self.p:
            raise RingError("only prime fields carry a characteristic")

    @property
    def name(self) -> str:
        return {"Q": "QQ", "Z": "ZZ"}.get(self.kind, f"F{self.p}")

    def __repr__(self):
        return self.name

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def coerce(self, x):
        """Return ``x`` as a canonical element of this ring."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.kind == "Q":
            return Fraction(x)
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise RingError(f"{x} is not an integer")
                return x.numerator
            if isinstance(x, bool) or not isinstance(x, int):
                x = Fraction(x)
                if x.denominator != 1:
                    raise RingError(f"{x} is not an integer")
                return x.numerator
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise RingError(f"{x} has a denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def normalize(self, x):
        # fast path for values produced by ring arithmetic
        if self.kind == "F":
            return x % self.p
        return x

    def is_unit(self, x) -> bool:
        if self.kind == "Z":
            return x in (1, -1)
        return x != 0

    def inv(self, x):
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit of {self.name}")
        if self.kind == "Q":
            return 1 / x
        if self.kind == "Z":
            return x
        return pow(x, -1, self.p)

    def div(self, a, b):
        return self.normalize(a * self.inv(b))

    def random_element(self, rng, bound: int = 5):
        return self.coerce(rng.randint(-bound, bound))

    def random_unit(self, rng, bound: int = 5):
        if self.kind == "Z":
            return rng.choice((1, -1))
        while True:
            x = self.random_element(rng, bound)
            if x != 0:
                return x

    def to_str(self, x) -> str:
        return str(x)


QQ = Ring("Q")
ZZ = Ring("Z")


def GF(p: int) -> Ring:
    return Ring("F", p)


_DESCRIPTOR = re.compile(r"^(?:F|GF|GF\()(\d+)\)?$")


def parse_ring(text: str) -> Ring:
    """Parse ``"QQ"``, ``"Q"``, ``"ZZ"``, ``"Z"``, ``"F5"`` or ``"GF(5)"``."""
    t = text.strip()
    if t in ("Q", "QQ"):
        return QQ
    if t in ("Z", "ZZ"):
        return ZZ
    m = _DESCRIPTOR.match(t)
    if m:
        return GF(int(m.group(1)))
    raise RingError(f"cannot parse ring descriptor {text!r}")
