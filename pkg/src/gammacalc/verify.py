"""Cross-engine verification sweeps.

The central consistency check of the package: the Chow-ring product, the
combinatorial choice-function census and the finite-field scan are three
independent routes to the same numbers, and this module runs them against
each other over a grid of shapes.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from . import chow, ffield_enum, split_oracle
from .errors import GeneralPositionUnreachable
from .fields import QQ, PrimeField
from .relations import random_split_relations
from .shapes import AlgebraShape, defect, zero_dim_n


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def sweep_shapes(
    r_values=(2, 3, 4),
    degree_values=(2, 3, 4),
    s_max=6,
    n_max=6,
    max_raw_choices=10**6,
) -> list[AlgebraShape]:
    """Shapes with nondecreasing degrees, d_j <= n, defect <= n(r-1)."""
    shapes = []
    for r in r_values:
        for n in range(1, n_max + 1):
            degs = [d for d in degree_values if d <= n]
            for s in range(1, s_max + 1):
                for d in itertools.combinations_with_replacement(degs, s):
                    shape = AlgebraShape(r=r, d=d, n=n)
                    if defect(shape) > n * (r - 1):
                        continue
                    raw = 1
                    for dj in d:
                        raw *= dj ** (n - dj + 1)
                    if raw > max_raw_choices:
                        continue
                    shapes.append(shape)
    return shapes


def check_ring_laws(seed: int = 0, trials: int = 50) -> CheckResult:
    """Commutativity, associativity, distributivity on random small classes."""
    rng = random.Random(seed)
    for _ in range(trials):
        n = rng.randint(1, 3)
        r = rng.randint(2, 4)

        def rand_class():
            terms = {}
            for _ in range(rng.randint(0, 4)):
                exp = tuple(rng.randrange(r) for _ in range(n))
                c = rng.randint(-5, 5)
                if c:
                    terms[exp] = c
            return chow.ChowClass(n, r, terms)

        a, b, c = rand_class(), rand_class(), rand_class()
        if chow.add(a, b) != chow.add(b, a):
            return CheckResult("ring-laws", False, "add not commutative")
        if chow.mul(a, b) != chow.mul(b, a):
            return CheckResult("ring-laws", False, "mul not commutative")
        if chow.mul(chow.mul(a, b), c) != chow.mul(a, chow.mul(b, c)):
            return CheckResult("ring-laws", False, "mul not associative")
        lhs = chow.mul(a, chow.add(b, c))
        rhs = chow.add(chow.mul(a, b), chow.mul(a, c))
        if lhs != rhs:
            return CheckResult("ring-laws", False, "mul not distributive")
    return CheckResult("ring-laws", True)


def check_headlines() -> list[CheckResult]:
    cases = [
        ("12221:17", AlgebraShape(2, (3, 4), 5), 17),
        ("13431:19", AlgebraShape(3, (2, 2, 3, 3), 3), 19),
        ("14641:20", AlgebraShape(4, (2, 2, 2, 2, 2, 2), 2), 20),
    ]
    out = []
    for name, shape, expected in cases:
        got = chow.point_count(shape)
        out.append(CheckResult(
            f"{name} OK" if got == expected else name,
            got == expected,
            f"point_count={got}",
        ))
    shape4 = AlgebraShape(2, (3, 4), 4)
    md = chow.multidegree_tuple(shape4)
    out.append(CheckResult(
        "12221-n4:(4,3,3,4) OK" if md == (4, 3, 3, 4) else "12221-n4",
        md == (4, 3, 3, 4),
        f"multidegree={md}",
    ))
    return out


def check_oracle_equivalence(shapes: list[AlgebraShape]) -> CheckResult:
    """Census-vs-Chow term-by-term equality over the sweep."""
    for shape in shapes:
        cls = chow.gamma_class(shape)
        census = split_oracle.profile_census(shape)
        if census != cls.terms:
            return CheckResult(
                "oracle-equivalence", False, f"mismatch at {shape}"
            )
    return CheckResult("oracle-equivalence", True, f"{len(shapes)} shapes")


def check_nonvanishing_and_append(
    r_values=(2, 3, 4), s_max=6, n_max=6
) -> CheckResult:
    """gamma_class is nonzero under the defect bound; appending a full-width
    relation multiplies the class by the sum of all slot generators."""
    checked = 0
    for r in r_values:
        for n in range(1, n_max + 1):
            degs = range(1, n + 1)
            for s in range(1, s_max + 1):
                for d in itertools.combinations_with_replacement(degs, s):
                    shape = AlgebraShape(r=r, d=d, n=n)
                    df = defect(shape)
                    if df > n * (r - 1):
                        continue
                    cls = chow.gamma_class(shape)
                    if chow.is_zero(cls):
                        return CheckResult(
                            "nonvanishing", False, f"zero class at {shape}"
                        )
                    if any(c <= 0 for c in cls.terms.values()):
                        return CheckResult(
                            "nonvanishing", False,
                            f"nonpositive coefficient at {shape}",
                        )
                    appended = AlgebraShape(r=r, d=tuple(sorted(d + (n,))), n=n)
                    full = chow.window_class(
                        shape, shapes_full_window(n)
                    )
                    if chow.gamma_class(appended) != chow.mul(cls, full):
                        return CheckResult(
                            "append-identity", False, f"fails at {shape}"
                        )
                    checked += 1
    return CheckResult("nonvanishing+append", True, f"{checked} shapes")


def shapes_full_window(n: int):
    from .shapes import Window

    return Window(relation_index=1, offset=0, degree=n)


def check_split_realizations(seed: int = 42) -> list[CheckResult]:
    out = []
    for name, shape in [
        ("realize-12221", AlgebraShape(2, (3, 4), 5)),
        ("realize-13431", AlgebraShape(3, (2, 2, 3, 3), 3)),
        ("realize-14641", AlgebraShape(4, (2,) * 6, 2)),
    ]:
        expected = chow.point_count(shape)
        splits = random_split_relations(shape, seed=seed, field=QQ)
        pts = split_oracle.realize_points(splits, shape)
        ok = len(pts) == expected
        out.append(CheckResult(name, ok, f"{len(pts)} tuples, expected {expected}"))
    return out


def check_ffield(seed: int = 42, p: int = 7, budget: int = 10**8) -> CheckResult:
    shape = AlgebraShape(2, (3, 4), 5)
    try:
        splits = random_split_relations(shape, seed=seed, field=PrimeField(p))
    except GeneralPositionUnreachable as exc:
        return CheckResult("ffield-12221", True, f"SKIPPED: {exc}")
    report = ffield_enum.compare_with_oracle(splits, shape, p, budget=budget)
    if report["status"] == "SKIPPED":
        return CheckResult("ffield-12221", True, f"SKIPPED: {report['reason']}")
    return CheckResult(
        "ffield-12221",
        report["status"] == "MATCH" and report["count"] == 17,
        f"{report['status']}, {report['count']} tuples over F{p}",
    )


def check_seed_stability(seeds=(1, 2, 3)) -> CheckResult:
    """Realized counts do not depend on the sampled relations."""
    shape = AlgebraShape(2, (3, 4), 5)
    expected = chow.point_count(shape)
    for seed in seeds:
        splits = random_split_relations(shape, seed=seed, field=QQ)
        if len(split_oracle.realize_points(splits, shape)) != expected:
            return CheckResult("seed-stability", False, f"seed {seed} deviates")
    return CheckResult("seed-stability", True, f"seeds {list(seeds)}")


def run_all(
    s_max: int = 6, n_max: int = 6, seed: int = 42, budget: int = 10**8
) -> list[CheckResult]:
    results = [check_ring_laws()]
    results.extend(check_headlines())
    results.append(
        check_oracle_equivalence(sweep_shapes(s_max=s_max, n_max=n_max))
    )
    results.append(check_nonvanishing_and_append(s_max=s_max, n_max=n_max))
    results.extend(check_split_realizations(seed=seed))
    results.append(check_ffield(seed=seed, budget=budget))
    results.append(check_seed_stability())
    return results


def outside_hypothesis_shapes(
    r_values=(2, 3, 4), s_max=4, n_max=4
) -> list[AlgebraShape]:
    """Over-determined shapes (defect above n(r-1)); the class may vanish."""
    out = []
    for r in r_values:
        for n in range(1, n_max + 1):
            for s in range(1, s_max + 1):
                for d in itertools.combinations_with_replacement(range(1, n + 1), s):
                    shape = AlgebraShape(r=r, d=d, n=n)
                    if defect(shape) > n * (r - 1):
                        out.append(shape)
    return out


def zero_dim_examples() -> list[tuple[AlgebraShape, int]]:
    """The three headline degree patterns with their zero-dimensional n."""
    out = []
    for r, d in [(2, (3, 4)), (3, (2, 2, 3, 3)), (4, (2,) * 6)]:
        n = zero_dim_n(r, d)
        assert n is not None
        out.append((AlgebraShape(r, d, n), n))
    return out
