"""Combinatorial oracle for split relations in general position.

Each window must kill one of its linear factors at one of its slots; a
choice function picks that factor for every window.  The per-slot tallies
form a constraint profile, and under general position:

  * profiles with some entry >= r are empty (any r forms have empty
    common zero locus);
  * a full profile (every entry r-1) pins each slot to the unique point
    cut out by its r-1 chosen hyperplanes.

Counting choice functions by profile therefore reproduces, term by term,
the coefficients of the scheme's Chow class, and realizing the full
profiles yields the actual points.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DefectMismatch, GeneralPositionViolation
from .fields import Field, check_same_field
from .linalg import nullspace_vector, rank
from .relations import (
    LinearForm,
    ProjectivePoint,
    SplitRelation,
)
from .shapes import AlgebraShape, Window, defect, windows_of

Profile = tuple[int, ...]


@dataclass(frozen=True)
class Component:
    """One choice function with its profile and component dimension."""

    choices: tuple[int, ...]      # per window, 1-based factor index
    profile: Profile              # per slot, number of constraints
    dimension: int


def check_general_position(forms: list[LinearForm], r: int) -> bool:
    """True iff every min(r, count)-subset of the forms has full rank."""
    if not forms:
        return True
    field = forms[0].field
    for f in forms:
        check_same_field(field, f.field)
    k = min(r, len(forms))
    from itertools import combinations

    for subset in combinations(forms, k):
        rows = [list(f.coeffs) for f in subset]
        if rank(rows, field) < k:
            return False
    return True


def _backtrack(shape: AlgebraShape, require_full: bool):
    """Yield (choices, profile) over all admissible choice functions.

    Windows are visited in (relation, offset) order; slots carry a
    remaining capacity of r-1 constraints.  With ``require_full`` the
    final profile must saturate every slot.
    """
    wins = windows_of(shape)
    cap = shape.r - 1
    n = shape.n
    profile = [0] * n
    choices: list[int] = []
    # max further constraints each slot can still receive from later windows
    later = [[0] * n for _ in range(len(wins) + 1)]
    for idx in range(len(wins) - 1, -1, -1):
        row = later[idx + 1][:]
        for slot in wins[idx].covered_slots:
            row[slot - 1] += 1
        later[idx] = row

    def rec(idx: int):
        if idx == len(wins):
            yield tuple(choices), tuple(profile)
            return
        if require_full:
            # prune: every slot must still be saturable
            row = later[idx]
            for m in range(n):
                if profile[m] + row[m] < cap:
                    return
        w = wins[idx]
        for k, slot in enumerate(w.covered_slots, start=1):
            if profile[slot - 1] >= cap:
                continue
            profile[slot - 1] += 1
            choices.append(k)
            yield from rec(idx + 1)
            choices.pop()
            profile[slot - 1] -= 1

    yield from rec(0)


def enumerate_components(shape: AlgebraShape) -> list[Component]:
    """All choice functions with every slot tally <= r-1, in deterministic order."""
    dim = shape.n * (shape.r - 1) - defect(shape)
    return [
        Component(choices=c, profile=p, dimension=dim)
        for c, p in _backtrack(shape, require_full=False)
    ]


def count_choice_functions(shape: AlgebraShape) -> int:
    """Number of full-profile choice functions; the point count for split data."""
    df = defect(shape)
    if df != shape.n * (shape.r - 1):
        raise DefectMismatch(
            f"defect {df} != n(r-1) = {shape.n * (shape.r - 1)} for {shape}"
        )
    return sum(1 for _ in _backtrack(shape, require_full=True))


def profile_census(shape: AlgebraShape) -> dict[Profile, int]:
    """Choice-function counts grouped by constraint profile."""
    census: dict[Profile, int] = {}
    for _, profile in _backtrack(shape, require_full=False):
        census[profile] = census.get(profile, 0) + 1
    return census


def realize_points(
    splits: list[SplitRelation], shape: AlgebraShape
) -> list[tuple[ProjectivePoint, ...]]:
    """Solve each full-profile choice function for its point tuple.

    Slot m's point is the kernel of the (r-1) x r system of its chosen
    forms.  Distinctness of the resulting tuples is asserted, not
    assumed.
    """
    df = defect(shape)
    if df != shape.n * (shape.r - 1):
        raise DefectMismatch(
            f"defect {df} != n(r-1) = {shape.n * (shape.r - 1)} for {shape}"
        )
    if len(splits) != shape.s or any(
        s.degree != dj for s, dj in zip(splits, shape.d)
    ):
        raise GeneralPositionViolation(
            f"split relations do not match degrees {shape.d}"
        )
    pool = [f for s in splits for f in s.factors]
    field = pool[0].field
    if not check_general_position(pool, shape.r):
        raise GeneralPositionViolation("pooled factors not in general position")

    wins = windows_of(shape)
    tuples: list[tuple[ProjectivePoint, ...]] = []
    seen = set()
    for choices, profile in _backtrack(shape, require_full=True):
        slot_forms: list[list[LinearForm]] = [[] for _ in range(shape.n)]
        for w, k in zip(wins, choices):
            form = splits[w.relation_index - 1].factors[k - 1]
            slot_forms[w.offset + k - 1].append(form)
        pts = []
        for forms in slot_forms:
            rows = [list(f.coeffs) for f in forms]
            vec = nullspace_vector(rows, field)
            if vec is None or rank(rows, field) != shape.r - 1:
                raise GeneralPositionViolation(
                    "chosen hyperplanes do not cut out a single point"
                )
            pts.append(ProjectivePoint(field, tuple(vec)))
        tup = tuple(pts)
        key = tuple(p.coords for p in tup)
        if key in seen:
            raise GeneralPositionViolation(
                "distinct choice functions produced coincident point tuples"
            )
        seen.add(key)
        tuples.append(tup)
    return tuples
