"""The (r, d, n) calculus: defect, expected dimension, windows.

An ``AlgebraShape`` records the number of generators ``r``, the
nondecreasing tuple of relation degrees ``d`` and the truncation index
``n``.  A degree-``d_j`` relation acts on every interval of ``d_j``
consecutive slots inside ``1..n``; each such interval is a ``Window``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import BadParameter, DegreeOutOfRange, ParseError


@dataclass(frozen=True)
class AlgebraShape:
    """Number of generators, relation degrees, truncation index."""

    r: int
    d: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.r < 2:
            raise BadParameter(f"need r >= 2 generators, got r={self.r}")
        if len(self.d) < 1:
            raise BadParameter("need at least one relation degree")
        if any(dj < 1 for dj in self.d):
            raise DegreeOutOfRange(f"relation degrees must be >= 1, got {self.d}")
        if list(self.d) != sorted(self.d):
            raise BadParameter(f"degrees must be nondecreasing, got {self.d}")
        if self.n < 1:
            raise BadParameter(f"need n >= 1, got n={self.n}")

    @property
    def s(self) -> int:
        return len(self.d)

    def __str__(self):
        return f"r={self.r} d={','.join(map(str, self.d))} n={self.n}"


@dataclass(frozen=True)
class Window:
    """One multilinearized relation: relation ``j`` acting on slots
    ``offset+1 .. offset+degree``.  ``relation_index`` is 1-based."""

    relation_index: int
    offset: int
    degree: int

    @property
    def covered_slots(self) -> range:
        return range(self.offset + 1, self.offset + self.degree + 1)


def _check_degrees(shape: AlgebraShape):
    if shape.d[-1] > shape.n:
        raise DegreeOutOfRange(
            f"degree {shape.d[-1]} exceeds truncation index n={shape.n}"
        )


def defect(shape: AlgebraShape) -> int:
    """Total number of multilinear equations, sum over j of (n - d_j + 1)."""
    _check_degrees(shape)
    return sum(shape.n - dj + 1 for dj in shape.d)


def expected_dim(shape: AlgebraShape) -> int:
    """n(r-1) - defect; may be negative (over-determined shape)."""
    return shape.n * (shape.r - 1) - defect(shape)


def is_stable(shape: AlgebraShape) -> bool:
    """True iff n >= max degree, where the truncation determines all later ones."""
    return shape.n >= shape.d[-1]


def windows_of(shape: AlgebraShape) -> list[Window]:
    """All windows, sorted by (relation index, offset); count equals the defect."""
    _check_degrees(shape)
    return [
        Window(relation_index=j, offset=i, degree=dj)
        for j, dj in enumerate(shape.d, start=1)
        for i in range(shape.n - dj + 1)
    ]


def zero_dim_n(r: int, d: tuple[int, ...]) -> int | None:
    """The n making the expected dimension zero, if one exists.

    Solves n(r-1) = sum_j (n - d_j + 1); requires s > r-1 and an integer
    solution inside the stable range, otherwise returns None.
    """
    s = len(d)
    if s <= r - 1:
        return None
    num = sum(d) - s
    den = s - r + 1
    if num % den != 0:
        return None
    n = num // den
    return n if n >= max(d) else None


def gorenstein_n(ell: int) -> int:
    """Zero-dimensional truncation index for Gorenstein parameter ell.

    Valid under s = 2r-2 and sum(d) = (r-1)*ell, where the defect equals
    (2n+2-ell)(r-1); that matches n(r-1) exactly at n = ell-2.
    """
    if ell < 3:
        raise BadParameter(f"need ell >= 3, got {ell}")
    return ell - 2


_SHAPE_RE = re.compile(r"^\s*r=(\d+)\s+d=(\d+(?:,\d+)*)\s+n=(\d+)\s*$")


def parse_shape(text: str) -> AlgebraShape:
    """Parse 'r=2 d=3,4 n=5' or the JSON form {"r":2,"d":[3,4],"n":5}."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
            return AlgebraShape(r=int(obj["r"]), d=tuple(int(x) for x in obj["d"]),
                                n=int(obj["n"]))
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON shape literal {text!r}: {exc}") from exc
    m = _SHAPE_RE.match(stripped)
    if not m:
        raise ParseError(f"bad shape literal {text!r}; expected 'r=2 d=3,4 n=5'")
    return AlgebraShape(
        r=int(m.group(1)),
        d=tuple(int(x) for x in m.group(2).split(",")),
        n=int(m.group(3)),
    )
