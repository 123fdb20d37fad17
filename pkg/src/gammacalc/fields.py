"""Exact coefficient fields: rationals and prime fields.

Scalars are plain values (``Fraction`` over Q, ints ``0..p-1`` over F_p);
a ``Field`` object supplies the arithmetic so evaluation code stays
generic.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BadParameter, FieldMismatch, ParseError


class Field:
    """Common interface; instances are stateless and compare by kind."""

    name: str

    def add(self, a, b): raise NotImplementedError
    def sub(self, a, b): raise NotImplementedError
    def mul(self, a, b): raise NotImplementedError
    def neg(self, a): raise NotImplementedError
    def inv(self, a): raise NotImplementedError
    def zero(self): raise NotImplementedError
    def one(self): raise NotImplementedError
    def from_int(self, k: int): raise NotImplementedError
    def parse(self, text: str): raise NotImplementedError
    def to_str(self, a) -> str: raise NotImplementedError

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"Field({self.name})"


class Rationals(Field):
    name = "Q"

    def add(self, a, b): return a + b
    def sub(self, a, b): return a - b
    def mul(self, a, b): return a * b
    def neg(self, a): return -a
    def zero(self): return Fraction(0)
    def one(self): return Fraction(1)
    def from_int(self, k): return Fraction(k)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def parse(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc

    def to_str(self, a):
        return str(Fraction(a))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise BadParameter(f"{p} is not prime")
        self.p = p
        self.name = f"F{p}"

    def add(self, a, b): return (a + b) % self.p
    def sub(self, a, b): return (a - b) % self.p
    def mul(self, a, b): return (a * b) % self.p
    def neg(self, a): return (-a) % self.p
    def zero(self): return 0
    def one(self): return 1 % self.p
    def from_int(self, k): return k % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def parse(self, text):
        try:
            return int(text) % self.p
        except ValueError as exc:
            raise ParseError(f"bad prime-field element {text!r}") from exc

    def to_str(self, a):
        return str(a % self.p)


QQ = Rationals()


def field_from_spec(spec: str) -> Field:
    """Parse a field spec: 'Q' for the rationals, 'Fp:<p>' for a prime field."""
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError as exc:
            raise ParseError(f"bad field spec {spec!r}") from exc
        return PrimeField(p)
    raise ParseError(f"bad field spec {spec!r}; expected 'Q' or 'Fp:<p>'")


def field_spec(field: Field) -> str:
    if isinstance(field, PrimeField):
        return f"Fp:{field.p}"
    return "Q"


def check_same_field(a: Field, b: Field):
    if a != b:
        raise FieldMismatch(f"{a.name} vs {b.name}")
