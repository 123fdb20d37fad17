"""Brute-force enumeration of the truncated point scheme over a prime field.

Every n-tuple of canonical projective points over F_p is scanned and
tested against all window evaluations.  The scan is the one hot loop in
the package: it runs through a numba-compiled kernel when available, with
a chunked pure-numpy fallback selected by setting GAMMACALC_NO_NUMBA=1
(or when numba is not importable).  Both paths work in int64 residues
mod p, are exact, and return identical results.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import BudgetExceeded, GeneralPositionViolation
from .fields import PrimeField
from .relations import (
    MultilinearRelation,
    ProjectivePoint,
    SplitRelation,
    relations_to_tensors,
)
from .shapes import AlgebraShape, defect

DEFAULT_BUDGET = 10**8


def _numba_enabled() -> bool:
    return os.environ.get("GAMMACALC_NO_NUMBA", "") == ""


try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba present in normal installs
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f
        return wrap


def enumerate_projective_space(r: int, p: int) -> list[ProjectivePoint]:
    """All (p^r - 1)/(p - 1) canonical points, ordered by leading coordinate.

    Points whose first nonzero coordinate sits earlier come first; within
    a fixed leading position the free coordinates run in ascending
    lexicographic order.
    """
    field = PrimeField(p)
    pts = []
    for lead in range(r):
        tail = r - lead - 1
        for rest in range(p**tail):
            coords = [0] * lead + [1]
            digits = []
            x = rest
            for _ in range(tail):
                digits.append(x % p)
                x //= p
            coords.extend(reversed(digits))
            pts.append(ProjectivePoint(field, tuple(coords)))
    return pts


def _pack_inputs(relations: list[MultilinearRelation], shape: AlgebraShape, p: int):
    """Flatten points, windows and relation terms into int64 arrays."""
    pts = enumerate_projective_space(shape.r, p)
    pts_arr = np.array([[int(c) for c in pt.coords] for pt in pts], dtype=np.int64)

    win_offsets, win_terms_ptr = [], [0]
    coeffs, words = [], []
    dmax = max(f.degree for f in relations) if relations else 1
    for f in relations:
        sorted_terms = sorted(f.coeffs.items())
        for i in range(shape.n - f.degree + 1):
            win_offsets.append(i)
            for word, c in sorted_terms:
                coeffs.append(int(c) % p)
                words.append([k - 1 for k in word] + [0] * (dmax - len(word)))
            win_terms_ptr.append(len(coeffs))
    return (
        pts,
        pts_arr,
        np.array(win_offsets, dtype=np.int64),
        np.array(win_terms_ptr, dtype=np.int64),
        np.array(coeffs, dtype=np.int64),
        np.array(words, dtype=np.int64).reshape(len(coeffs), dmax)
        if coeffs else np.zeros((0, dmax), dtype=np.int64),
        np.array([f.degree for f in relations for _ in
                  range(shape.n - f.degree + 1)], dtype=np.int64),
    )


@njit(cache=True)
def _scan_kernel(pts, n, p, win_offsets, win_deg, term_ptr, coeffs, words):
    npts = pts.shape[0]
    total = 1
    for _ in range(n):
        total *= npts
    members = np.empty(total, dtype=np.int64)
    count = 0
    digits = np.empty(n, dtype=np.int64)
    for idx in range(total):
        x = idx
        for slot in range(n - 1, -1, -1):
            digits[slot] = x % npts
            x //= npts
        ok = True
        for w in range(win_offsets.shape[0]):
            off = win_offsets[w]
            acc = 0
            for t in range(term_ptr[w], term_ptr[w + 1]):
                prod = coeffs[t]
                for k in range(win_deg[w]):
                    prod = (prod * pts[digits[off + k], words[t, k]]) % p
                acc = (acc + prod) % p
            if acc != 0:
                ok = False
                break
        if ok:
            members[count] = idx
            count += 1
    return members[:count]


def _scan_numpy(pts, n, p, win_offsets, win_deg, term_ptr, coeffs, words,
                chunk=1 << 16):
    npts = pts.shape[0]
    total = npts**n
    out = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = np.empty((idx.shape[0], n), dtype=np.int64)
        x = idx.copy()
        for slot in range(n - 1, -1, -1):
            digits[:, slot] = x % npts
            x //= npts
        ok = np.ones(idx.shape[0], dtype=bool)
        for w in range(win_offsets.shape[0]):
            off = win_offsets[w]
            acc = np.zeros(idx.shape[0], dtype=np.int64)
            for t in range(term_ptr[w], term_ptr[w + 1]):
                prod = np.full(idx.shape[0], coeffs[t], dtype=np.int64)
                for k in range(win_deg[w]):
                    prod = (prod * pts[digits[:, off + k], words[t, k]]) % p
                acc = (acc + prod) % p
            ok &= acc == 0
            if not ok.any():
                break
        out.append(idx[ok])
    return np.concatenate(out) if out else np.empty(0, dtype=np.int64)


def enumerate_gamma(
    relations: list[MultilinearRelation | SplitRelation],
    shape: AlgebraShape,
    p: int,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[ProjectivePoint, ...]]:
    """All member tuples in (P^{r-1}(F_p))^n, in lexicographic scan order."""
    tensors = relations_to_tensors(relations)
    npts = (p**shape.r - 1) // (p - 1)
    if npts**shape.n > budget:
        raise BudgetExceeded(
            f"scan of {npts}^{shape.n} tuples exceeds budget {budget}"
        )
    if not tensors:
        packed = _pack_inputs(
            [], shape, p
        )
        pts = packed[0]
        import itertools

        return [tup for tup in itertools.product(pts, repeat=shape.n)]
    (pts, pts_arr, win_offsets, term_ptr, coeffs, words, win_deg) = _pack_inputs(
        tensors, shape, p
    )
    if HAS_NUMBA and _numba_enabled():
        member_idx = _scan_kernel(
            pts_arr, shape.n, p, win_offsets, win_deg, term_ptr, coeffs, words
        )
    else:
        member_idx = _scan_numpy(
            pts_arr, shape.n, p, win_offsets, win_deg, term_ptr, coeffs, words
        )
    npts_count = len(pts)
    out = []
    for idx in member_idx.tolist():
        digits = []
        x = idx
        for _ in range(shape.n):
            digits.append(x % npts_count)
            x //= npts_count
        digits.reverse()
        out.append(tuple(pts[d] for d in digits))
    return out


def compare_with_oracle(
    splits: list[SplitRelation],
    shape: AlgebraShape,
    p: int,
    budget: int = DEFAULT_BUDGET,
) -> dict:
    """Cross-check the exhaustive scan against the combinatorial realization.

    Returns a report dict with status MATCH, MISMATCH or SKIPPED; a
    mismatch is a hard failure for the caller to act on.
    """
    from .split_oracle import check_general_position, realize_points

    pool = [f for s in splits for f in s.factors]
    if not check_general_position(pool, shape.r):
        return {
            "status": "SKIPPED",
            "reason": "pooled factors not in general position over "
                      f"F{p}",
            "p": p,
            "count": 0,
        }
    df = defect(shape)
    if df != shape.n * (shape.r - 1):
        raise GeneralPositionViolation(
            f"defect {df} != n(r-1); comparison undefined"
        )
    realized = realize_points(splits, shape)
    scanned = enumerate_gamma(list(splits), shape, p, budget=budget)
    key = lambda tup: tuple(pt.coords for pt in tup)
    realized_set = {key(t) for t in realized}
    scanned_set = {key(t) for t in scanned}
    status = "MATCH" if realized_set == scanned_set else "MISMATCH"
    return {
        "status": status,
        "p": p,
        "count": len(scanned_set),
        "realized": len(realized_set),
        "only_scanned": sorted(scanned_set - realized_set),
        "only_realized": sorted(realized_set - scanned_set),
    }
