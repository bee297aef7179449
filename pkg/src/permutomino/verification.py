"""Cross-verification suite: every counting route must agree.

Each check returns a :class:`CheckResult`; a failing check carries a short
reason and, when a single shape is to blame, its JSON record as a witness.
The CLI ``verify`` subcommand and the acceptance tests both run these.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from . import eco, oracle, series
from .census import (
    census_by_class,
    closed_convex_polyominoes,
    closed_count,
    closed_directed,
    closed_stack,
    count,
    production,
)
from .grid import Permutomino, boundary_word, classify, corner_report, is_valid, reentrant_matrix

SEQUENCE = (1, 4, 18, 84, 394, 1836, 8468)
CONVEX_SEQUENCE = (1, 2, 7, 28, 120, 528, 2344, 10416)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    witness: str | None = None


def _fail(name: str, detail: str, shape: Permutomino | None = None) -> CheckResult:
    witness = json.dumps(shape.to_record()) if shape is not None else None
    return CheckResult(name, False, detail, witness)


def materialize_levels(max_n: int) -> dict[int, list[Permutomino]]:
    """Shapes of every size up to ``max_n``, built level by level."""
    levels: dict[int, list[Permutomino]] = {1: [eco.UNIT]}
    for n in range(1, max_n):
        levels[n + 1] = [child for p in levels[n] for _, child in eco.children(p)]
    return levels


def check_sequence() -> CheckResult:
    got = tuple(count(n) for n in range(1, 8))
    if got != SEQUENCE:
        return _fail("sequence", f"census totals {got} != {SEQUENCE}")
    return CheckResult("sequence", True, "f(1..7) = " + " ".join(map(str, got)))


def check_closed_form(max_n: int = 40) -> CheckResult:
    for n in range(1, max_n + 1):
        if closed_count(n) != count(n):
            return _fail("closed-form", f"mismatch at n={n}")
    return CheckResult("closed-form", True, f"closed form == census for n <= {max_n}")


def check_series(max_n: int = 25) -> CheckResult:
    f1 = series.series_f1(max_n)
    b1 = series.series_b1(max_n)
    r1 = series.series_r1(max_n)
    n1 = series.series_n1(max_n)
    for n in range(1, max_n + 1):
        b, r, g = census_by_class(n)
        expected = {"F": count(n), "B": b, "R": r, "G": g}
        got = {"F": f1[n], "B": b1[n], "R": r1[n], "G": n1[n]}
        for key in expected:
            if got[key] != expected[key]:
                return _fail("series", f"[t^{n}] {key}-series = {got[key]} != census {expected[key]}")
    return CheckResult("series", True, f"all four series match the census for n <= {max_n}")


def check_eco_partition(levels: dict[int, list[Permutomino]], max_n: int = 7) -> CheckResult:
    name = "eco-partition"
    for n in range(1, max_n + 1):
        level = levels[n]
        if len(set(level)) != len(level) or len(level) != count(n):
            return _fail(name, f"level {n} has {len(level)} shapes, census says {count(n)}")
        seen_children: set[Permutomino] = set()
        for p in level:
            label = classify(p)
            kids = eco.children(p)
            expected_count = {"B": 2 * label.k + 2, "R": 2 * label.k + 1, "G": 2 * label.k}[label.group]
            if len(kids) != expected_count:
                return _fail(name, f"label {label} produced {len(kids)} children", p)
            produced = sorted(classify(c).key() for _, c in kids)
            if produced != sorted(production(label.k, label.group)):
                return _fail(name, f"children labels of {label} break the succession rule", p)
            for tag, child in kids:
                if child in seen_children:
                    return _fail(name, f"duplicate child at level {n + 1}", child)
                seen_children.add(child)
                if not is_valid(child):
                    return _fail(name, "invalid child", child)
                back, back_tag = eco.parent(child)
                if back != p or back_tag != tag:
                    return _fail(name, f"parent round-trip broke for tag {tag}", child)
        if len(seen_children) != count(n + 1):
            return _fail(name, f"children of level {n} do not fill level {n + 1}")
    return CheckResult(name, True, f"partition, validity and round-trips hold for levels 1..{max_n}")


def check_corner_identities(levels: dict[int, list[Permutomino]], max_n: int = 7) -> CheckResult:
    name = "corner-identities"
    for n in range(1, max_n + 1):
        for p in levels[n]:
            bw = boundary_word(p)
            if len(bw) != 4 * n:
                return _fail(name, f"boundary length {len(bw)} != {4 * n}", p)
            report = corner_report(bw)
            if len(report.salient) != n + 3 or len(report.reentrant) != n - 1:
                return _fail(
                    name,
                    f"{len(report.salient)} salient / {len(report.reentrant)} reentrant at size {n}",
                    p,
                )
            try:
                reentrant_matrix(p)
            except ValueError as exc:
                return _fail(name, str(exc), p)
    return CheckResult(name, True, f"n+3 salient, n-1 reentrant, permutation matrices for n <= {max_n}")


def check_oracle_calibration(max_m: int = 8) -> CheckResult:
    got = oracle.convex_totals_by_semiperimeter(max_m)
    expected = [closed_convex_polyominoes(m) for m in range(max_m + 1)]
    if got != expected:
        return _fail("oracle-calibration", f"totals {got} != {expected}")
    return CheckResult(
        "oracle-calibration",
        True,
        f"convex totals match for semi-perimeter <= {max_m + 2}: " + " ".join(map(str, got)),
    )


def check_oracle_triangulation(max_n: int = 7) -> CheckResult:
    for n in range(1, max_n + 1):
        got = oracle.count_permutominoes(n)
        want = count(n)
        if got != want:
            return _fail("oracle-triangulation", f"brute force found {got} at n={n}, census says {want}")
    return CheckResult("oracle-triangulation", True, f"brute force == census for n <= {max_n}")


def check_corollaries(max_n: int = 20) -> CheckResult:
    name = "corollaries"
    for n in range(1, max_n + 1):
        b, r, _ = census_by_class(n)
        if b != closed_stack(n):
            return _fail(name, f"class-B mass {b} != 2^{n - 1}")
        if r % 2 != 0:
            return _fail(name, f"class-R mass {r} is odd at n={n}")
        if b + r // 2 != closed_directed(n):
            return _fail(name, f"B + R/2 != C(2n,n)/2 at n={n}")
        if closed_directed(n) != comb(2 * n, n) // 2:
            return _fail(name, f"directed closed form broken at n={n}")
    return CheckResult(name, True, f"stack = 2^(n-1) and B + R/2 = C(2n,n)/2 for n <= {max_n}")


def check_functional_equations(order: int = 12) -> CheckResult:
    residuals = series.functional_equation_residuals(order)
    for key, residual in residuals.items():
        if not residual.is_zero():
            return _fail(
                "functional-equations",
                f"{key}-equation residual has max |coeff| {residual.max_abs_coeff()} at order {order}",
            )
    return CheckResult("functional-equations", True, f"both equations hold identically to order {order}")


def check_kernel(order: int = 30) -> CheckResult:
    residual = series.kernel_residual(order)
    if not residual.is_zero():
        return _fail("kernel-root", f"1 - s0 + t s0^2 != 0 to order {order}")
    root = series.kernel_root(order)
    if any(root[k] <= 0 for k in range(order + 1)):
        return _fail("kernel-root", "root series has a nonpositive coefficient")
    return CheckResult("kernel-root", True, f"kernel residual vanishes to order {order}, coefficients positive")


def check_pair_oracle(max_n: int = 3) -> CheckResult:
    for n in range(1, max_n + 1):
        got = oracle.count_pair_permutominoes(n)
        want = count(n)
        if got != want:
            return _fail("pair-oracle", f"pair reconstruction found {got} at n={n}, census says {want}")
    return CheckResult("pair-oracle", True, f"pair reconstruction == census for n <= {max_n}")


@dataclass
class VerifyOptions:
    max_n: int = 6
    oracle_n: int = 6
    order: int = 12
    pair_n: int = 3
    series_n: int = 25
    closed_n: int = 40
    calibration_m: int = 8
    corollary_n: int = 20
    kernel_order: int = 30


def run_checks(options: VerifyOptions | None = None) -> list[CheckResult]:
    """Run the whole triangulation suite with the given bounds."""
    opt = options or VerifyOptions()
    levels = materialize_levels(opt.max_n)
    return [
        check_sequence(),
        check_closed_form(opt.closed_n),
        check_series(opt.series_n),
        check_eco_partition(levels, opt.max_n),
        check_corner_identities(levels, opt.max_n),
        check_oracle_calibration(opt.calibration_m),
        check_oracle_triangulation(opt.oracle_n),
        check_corollaries(opt.corollary_n),
        check_functional_equations(opt.order),
        check_kernel(opt.kernel_order),
        check_pair_oracle(opt.pair_n),
    ]
