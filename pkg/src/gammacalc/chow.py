"""Exact arithmetic in the Chow ring of a product of projective spaces.

The ring for n slots and r generators is the tensor product of n copies
of Z[e]/(e^r).  Elements are kept sparse: a map from exponent vectors
(length n, entries 0..r-1) to nonzero Python ints, so coefficients never
overflow.  The class of the truncated point scheme is the product, over
all windows, of the sum of the hyperplane generators the window covers;
its top coefficient is the point count with multiplicity and its full
term list is the multidegree table.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    BadExponent,
    DefectMismatch,
    DegreeOutOfRange,
    InvalidWindow,
    NegativeExpectedDim,
    NotStable,
    RingMismatch,
)
from .shapes import AlgebraShape, Window, defect, expected_dim, is_stable, windows_of

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class ChowClass:
    """Sparse element of the truncated polynomial ring; immutable."""

    num_slots: int
    truncation: int
    terms: dict[Exponents, int] = field(default_factory=dict)

    def __post_init__(self):
        for exp, coeff in self.terms.items():
            if len(exp) != self.num_slots:
                raise BadExponent(f"exponent {exp} has wrong length")
            if any(e < 0 or e >= self.truncation for e in exp):
                raise BadExponent(f"exponent {exp} outside 0..{self.truncation - 1}")
            if coeff == 0:
                raise BadExponent(f"stored zero coefficient at {exp}")

    def __eq__(self, other):
        if not isinstance(other, ChowClass):
            return NotImplemented
        return (self.num_slots, self.truncation, self.terms) == (
            other.num_slots, other.truncation, other.terms)

    def __hash__(self):
        return hash((self.num_slots, self.truncation,
                     tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp in sorted(self.terms, reverse=True):
            coeff = self.terms[exp]
            mono = "".join(
                f"e{i + 1}" if e == 1 else f"e{i + 1}^{e}"
                for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return "+".join(parts)


def zero_class(num_slots: int, truncation: int) -> ChowClass:
    return ChowClass(num_slots, truncation, {})


def one_class(num_slots: int, truncation: int) -> ChowClass:
    return ChowClass(num_slots, truncation, {(0,) * num_slots: 1})


def hyperplane(num_slots: int, truncation: int, slot: int) -> ChowClass:
    """The generator of slot ``slot`` (1-based)."""
    if not 1 <= slot <= num_slots:
        raise BadExponent(f"slot {slot} outside 1..{num_slots}")
    exp = tuple(1 if i == slot - 1 else 0 for i in range(num_slots))
    return ChowClass(num_slots, truncation, {exp: 1})


def _check_ring(a: ChowClass, b: ChowClass):
    if (a.num_slots, a.truncation) != (b.num_slots, b.truncation):
        raise RingMismatch(
            f"(n={a.num_slots}, r={a.truncation}) vs (n={b.num_slots}, r={b.truncation})"
        )


def add(a: ChowClass, b: ChowClass) -> ChowClass:
    _check_ring(a, b)
    terms = dict(a.terms)
    for exp, coeff in b.terms.items():
        new = terms.get(exp, 0) + coeff
        if new:
            terms[exp] = new
        else:
            terms.pop(exp, None)
    return ChowClass(a.num_slots, a.truncation, terms)


def mul(a: ChowClass, b: ChowClass) -> ChowClass:
    """Product with truncation: monomials reaching exponent r are dropped."""
    _check_ring(a, b)
    r = a.truncation
    terms: dict[Exponents, int] = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            if any(e >= r for e in exp):
                continue
            new = terms.get(exp, 0) + ca * cb
            if new:
                terms[exp] = new
            else:
                del terms[exp]
    return ChowClass(a.num_slots, a.truncation, terms)


def is_zero(c: ChowClass) -> bool:
    return not c.terms


def window_class(shape: AlgebraShape, window: Window) -> ChowClass:
    """Sum of the hyperplane generators covered by the window."""
    if window.offset < 0 or window.offset + window.degree > shape.n:
        raise InvalidWindow(
            f"window at offset {window.offset} with degree {window.degree} "
            f"overruns n={shape.n}"
        )
    out = zero_class(shape.n, shape.r)
    for slot in window.covered_slots:
        out = add(out, hyperplane(shape.n, shape.r, slot))
    return out


def gamma_class(shape: AlgebraShape) -> ChowClass:
    """Chow class of the truncated point scheme: product of all window classes.

    Windows are multiplied in (relation index, offset) order; the result
    is order-independent but intermediates are deterministic.
    """
    if shape.d[-1] > shape.n:
        raise DegreeOutOfRange(f"degrees {shape.d} exceed n={shape.n}")
    out = one_class(shape.n, shape.r)
    for w in windows_of(shape):
        out = mul(out, window_class(shape, w))
    return out


def coefficient(c: ChowClass, exponents: tuple[int, ...]) -> int:
    exp = tuple(exponents)
    if len(exp) != c.num_slots:
        raise BadExponent(f"expected {c.num_slots} exponents, got {len(exp)}")
    if any(e < 0 or e >= c.truncation for e in exp):
        raise BadExponent(f"entries of {exp} outside 0..{c.truncation - 1}")
    return c.terms.get(exp, 0)


def point_count(shape: AlgebraShape) -> int:
    """Number of points, with multiplicity, when the expected dimension is zero.

    This is the coefficient of the top monomial (every exponent r-1) in
    the class of the scheme.
    """
    if not is_stable(shape):
        raise NotStable(f"n={shape.n} below max degree {shape.d[-1]}")
    df = defect(shape)
    if df != shape.n * (shape.r - 1):
        raise DefectMismatch(
            f"defect {df} != n(r-1) = {shape.n * (shape.r - 1)} for {shape}"
        )
    top = (shape.r - 1,) * shape.n
    return coefficient(gamma_class(shape), top)


def multidegree_table(shape: AlgebraShape) -> dict[Exponents, int]:
    """All terms of the scheme's class, keyed by exponent vector."""
    if not is_stable(shape):
        raise NotStable(f"n={shape.n} below max degree {shape.d[-1]}")
    if expected_dim(shape) < 0:
        raise NegativeExpectedDim(f"expected dimension is negative for {shape}")
    return dict(gamma_class(shape).terms)


def multidegree_tuple(shape: AlgebraShape) -> tuple[int, ...]:
    """Curve multidegree for r=2, expected dimension 1.

    Entry m is the coefficient of the monomial with every exponent 1
    except slot m, i.e. the count of intersections with a generic
    hyperplane pulled back from slot m.
    """
    if shape.r != 2 or expected_dim(shape) != 1:
        raise NegativeExpectedDim(
            f"multidegree tuple needs r=2 and expected dimension 1, got {shape}"
        )
    table = multidegree_table(shape)
    out = []
    for m in range(shape.n):
        exp = tuple(0 if i == m else 1 for i in range(shape.n))
        out.append(table.get(exp, 0))
    return tuple(out)


def to_json_dict(c: ChowClass) -> dict:
    """Stable JSON form: terms lexicographically sorted, decimal-string coefficients."""
    return {
        "n": c.num_slots,
        "r": c.truncation,
        "terms": [
            {"exp": list(exp), "coeff": str(c.terms[exp])}
            for exp in sorted(c.terms)
        ],
    }


def from_json_dict(obj: dict) -> ChowClass:
    terms = {tuple(t["exp"]): int(t["coeff"]) for t in obj["terms"]}
    return ChowClass(int(obj["n"]), int(obj["r"]), terms)


def to_json(c: ChowClass) -> str:
    return json.dumps(to_json_dict(c))


def from_json(text: str) -> ChowClass:
    return from_json_dict(json.loads(text))
