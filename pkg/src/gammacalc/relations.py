"""Relation tensors, their window evaluations, and membership testing.

A relation of degree d on r generators is a sparse tensor: a map from
words of length d over the alphabet 1..r to nonzero field scalars.  A
split relation is a tensor product of linear forms, stored factored.
Membership of a point tuple in the truncated point scheme means every
window evaluation of every relation vanishes.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .errors import (
    DegreeMismatch,
    DimensionMismatch,
    GeneralPositionUnreachable,
    InvalidWord,
    ParseError,
)
from .fields import Field, check_same_field
from .shapes import AlgebraShape, Window, windows_of

Word = tuple[int, ...]


@dataclass(frozen=True)
class LinearForm:
    """Nonzero covector of length r; canonical up to scaling."""

    field: Field
    coeffs: tuple

    def __post_init__(self):
        if all(self.field.is_zero(c) for c in self.coeffs):
            raise ParseError("linear form must have a nonzero coefficient")

    def canonical(self) -> "LinearForm":
        return LinearForm(self.field, _normalize(self.field, self.coeffs))


@dataclass(frozen=True)
class ProjectivePoint:
    """Point of projective (r-1)-space; first nonzero coordinate scaled to 1."""

    field: Field
    coords: tuple

    def __post_init__(self):
        if all(self.field.is_zero(c) for c in self.coords):
            raise ParseError("projective point must have a nonzero coordinate")
        object.__setattr__(
            self, "coords", _normalize(self.field, self.coords)
        )

    def __str__(self):
        return "(" + ":".join(self.field.to_str(c) for c in self.coords) + ")"


def _normalize(field: Field, vec: tuple) -> tuple:
    lead = next(c for c in vec if not field.is_zero(c))
    inv = field.inv(lead)
    return tuple(field.mul(inv, c) for c in vec)


@dataclass(frozen=True)
class MultilinearRelation:
    """Sparse degree-d tensor; words index generators from 1."""

    field: Field
    degree: int
    coeffs: dict[Word, object]

    def __post_init__(self):
        if not self.coeffs:
            raise ParseError("relation needs at least one term")
        for word, c in self.coeffs.items():
            if len(word) != self.degree:
                raise InvalidWord(f"word {word} has length != {self.degree}")
            if any(k < 1 for k in word):
                raise InvalidWord(f"word {word} has symbols below 1")
            if self.field.is_zero(c):
                raise ParseError(f"zero coefficient stored at word {word}")

    def __hash__(self):
        return hash((self.field, self.degree, tuple(sorted(self.coeffs.items()))))

    def __eq__(self, other):
        if not isinstance(other, MultilinearRelation):
            return NotImplemented
        return (self.field, self.degree, self.coeffs) == (
            other.field, other.degree, other.coeffs)


@dataclass(frozen=True)
class SplitRelation:
    """Tensor product of linear forms, kept factored."""

    factors: tuple[LinearForm, ...]

    @property
    def degree(self) -> int:
        return len(self.factors)

    @property
    def field(self) -> Field:
        return self.factors[0].field


def eval_linear(l: LinearForm, p: ProjectivePoint):
    check_same_field(l.field, p.field)
    if len(l.coeffs) != len(p.coords):
        raise DimensionMismatch(
            f"form of length {len(l.coeffs)} vs point of length {len(p.coords)}"
        )
    f = l.field
    acc = f.zero()
    for c, x in zip(l.coeffs, p.coords):
        acc = f.add(acc, f.mul(c, x))
    return acc


def eval_window(
    f: MultilinearRelation, w: Window, pts: tuple[ProjectivePoint, ...]
):
    """Evaluate the multilinearized relation on slots offset+1..offset+d."""
    if f.degree != w.degree:
        raise DegreeMismatch(f"relation degree {f.degree} vs window degree {w.degree}")
    for p in pts:
        check_same_field(f.field, p.field)
    fld = f.field
    acc = fld.zero()
    for word, coeff in f.coeffs.items():
        prod = coeff
        for t, k in enumerate(word):
            prod = fld.mul(prod, pts[w.offset + t].coords[k - 1])
        acc = fld.add(acc, prod)
    return acc


def split_to_tensor(s: SplitRelation) -> MultilinearRelation:
    """Expand a product of linear forms into its sparse tensor."""
    fld = s.field
    terms: dict[Word, object] = {(): fld.one()}
    for factor in s.factors:
        check_same_field(fld, factor.field)
        new: dict[Word, object] = {}
        for word, coeff in terms.items():
            for k, c in enumerate(factor.coeffs, start=1):
                if fld.is_zero(c):
                    continue
                new[word + (k,)] = fld.mul(coeff, c)
        terms = new
    return MultilinearRelation(fld, s.degree, terms)


def is_member(
    relations: list[MultilinearRelation], n: int, pts: tuple[ProjectivePoint, ...]
) -> bool:
    """True iff every window evaluation of every relation vanishes."""
    if len(pts) != n:
        raise DimensionMismatch(f"expected {n} points, got {len(pts)}")
    for f in relations:
        for i in range(n - f.degree + 1):
            w = Window(relation_index=0, offset=i, degree=f.degree)
            if not f.field.is_zero(eval_window(f, w, pts)):
                return False
    return True


def random_split_relations(
    shape: AlgebraShape,
    seed: int,
    field: Field,
    max_attempts: int = 200,
) -> list[SplitRelation]:
    """Seeded split relations whose pooled factors are in general position.

    Sampling resamples the whole pool until any r forms are linearly
    independent; over tiny prime fields this can be impossible, in which
    case GeneralPositionUnreachable is raised after the attempt budget.
    """
    from .split_oracle import check_general_position

    rng = random.Random(seed)
    total = sum(shape.d)
    for _ in range(max_attempts):
        forms = [_random_form(rng, shape.r, field) for _ in range(total)]
        if check_general_position(forms, shape.r):
            out = []
            pos = 0
            for dj in shape.d:
                out.append(SplitRelation(tuple(forms[pos:pos + dj])))
                pos += dj
            return out
    raise GeneralPositionUnreachable(
        f"no general-position pool of {total} forms over {field.name} "
        f"after {max_attempts} attempts"
    )


def _random_form(rng: random.Random, r: int, field: Field) -> LinearForm:
    from .fields import PrimeField

    while True:
        if isinstance(field, PrimeField):
            coeffs = tuple(rng.randrange(field.p) for _ in range(r))
        else:
            coeffs = tuple(field.from_int(rng.randint(-9, 9)) for _ in range(r))
        if any(not field.is_zero(c) for c in coeffs):
            return LinearForm(field, coeffs).canonical()


def relations_to_tensors(
    rels: list[MultilinearRelation | SplitRelation],
) -> list[MultilinearRelation]:
    return [
        split_to_tensor(f) if isinstance(f, SplitRelation) else f for f in rels
    ]


# --- JSON relation files -------------------------------------------------

def serialize_relations(
    r: int, field: Field, rels: list[MultilinearRelation | SplitRelation]
) -> str:
    from .fields import field_spec

    objs = []
    for rel in rels:
        if isinstance(rel, SplitRelation):
            objs.append({
                "factors": [
                    [field.to_str(c) for c in f.canonical().coeffs]
                    for f in rel.factors
                ]
            })
        else:
            objs.append({
                "degree": rel.degree,
                "terms": [
                    {"word": list(word), "coeff": field.to_str(rel.coeffs[word])}
                    for word in sorted(rel.coeffs)
                ],
            })
    return json.dumps(
        {"r": r, "field": field_spec(field), "relations": objs}, indent=2
    )


def parse_relations(text: str) -> tuple[int, Field, list]:
    """Parse a relation file; returns (r, field, relations).

    Each relation is either a SplitRelation (from "factors") or a
    MultilinearRelation (from "degree"/"terms").
    """
    from .fields import field_from_spec

    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON at line {exc.lineno}, column {exc.colno}") from exc
    try:
        r = int(obj["r"])
        field = field_from_spec(obj["field"])
        raw = obj["relations"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing key in relation file: {exc}") from exc
    rels = []
    for idx, entry in enumerate(raw):
        if "factors" in entry:
            factors = []
            for fac in entry["factors"]:
                if len(fac) != r:
                    raise ParseError(
                        f"relation {idx}: factor has {len(fac)} coefficients, expected {r}"
                    )
                factors.append(
                    LinearForm(field, tuple(field.parse(c) for c in fac)).canonical()
                )
            rels.append(SplitRelation(tuple(factors)))
        elif "degree" in entry:
            degree = int(entry["degree"])
            coeffs: dict[Word, object] = {}
            for term in entry["terms"]:
                word = tuple(int(k) for k in term["word"])
                if any(k < 1 or k > r for k in word):
                    raise InvalidWord(
                        f"relation {idx}: word {word} outside alphabet 1..{r}"
                    )
                c = field.parse(term["coeff"])
                if not field.is_zero(c):
                    coeffs[word] = c
            rels.append(MultilinearRelation(field, degree, coeffs))
        else:
            raise ParseError(f"relation {idx}: need 'factors' or 'degree'")
    return r, field, rels
