"""Exact scalar arithmetic: rationals and prime fields.

Scalars are plain objects supporting +, -, *, /, unary -, == and bool
(truthy iff nonzero): ``fractions.Fraction`` over the rationals, ``Mod``
over a prime field.  All linear algebra in the package is generic over
these two kinds.
"""

from __future__ import annotations

from fractions import Fraction


class Mod:
    """Residue in F_p, always normalized to 0 <= value < p."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def __add__(self, other):
        return Mod(self.value + other.value, self.p)

    def __sub__(self, other):
        return Mod(self.value - other.value, self.p)

    def __mul__(self, other):
        return Mod(self.value * other.value, self.p)

    def __neg__(self):
        return Mod(-self.value, self.p)

    def __truediv__(self, other):
        if other.value == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        # p prime, so the inverse is other**(p-2)
        return Mod(self.value * pow(other.value, self.p - 2, self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, Mod) and self.p == other.p and self.value == other.value

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return "%d" % self.value


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Field tag plus scalar constructors/formatting for one exact field."""

    kind = "Q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def parse(self, s: str):
        return Fraction(s)

    def to_str(self, x) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and getattr(self, "p", None) == getattr(other, "p", None)

    def __hash__(self):
        return hash((self.kind, getattr(self, "p", None)))

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    kind = "Fp"

    def __init__(self, p: int):
        if not (2 <= p < 2**31):
            raise ValueError("prime field characteristic out of range: %r" % (p,))
        if not _is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p
        self.zero = Mod(0, p)
        self.one = Mod(1, p)

    def from_int(self, n: int):
        return Mod(n, self.p)

    def parse(self, s: str):
        return Mod(int(s), self.p)

    def to_str(self, x) -> str:
        return str(x.value)

    def __repr__(self):
        return "F%d" % self.p


QQ = Field()

_fp_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _fp_cache:
        _fp_cache[p] = PrimeField(p)
    return _fp_cache[p]


def field_to_json(field: Field) -> dict:
    if field.kind == "Q":
        return {"kind": "Q"}
    return {"kind": "Fp", "p": field.p}


def field_from_json(data: dict) -> Field:
    if data["kind"] == "Q":
        return QQ
    if data["kind"] == "Fp":
        return GF(int(data["p"]))
    raise ValueError("unknown field kind %r" % (data.get("kind"),))
