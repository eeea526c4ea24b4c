"""Analytic bound curves and exact rational checks.

Two-branch maxima bounding two-edge-star counts and squared norms by edge
density, the increasing map f with its bisection inverse, the quartet of
density root equations, scaled square-root independence rates, the greedy
core size bound, and big-integer identity verifications.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, sqrt

from .hypergraphs import bn_l2_closed, bn_min_l2_degree

ROOT_EQUATION_TOKENS = ("claim32", "claim33", "claim34", "linear_branch")


@dataclass(frozen=True, slots=True)
class BoundPoint:
    """One evaluation of a two-branch maximum.

    value is max(branches); active_branch is the first index attaining it.
    """

    x: float
    value: float
    active_branch: int
    branches: tuple[float, ...]
    alpha: float | None = None
    in_window: bool = True


def _pick(x: float, branches: tuple[float, ...], alpha: float | None = None,
          in_window: bool = True) -> BoundPoint:
    value = max(branches)
    # ties (up to float noise) go to the earliest branch
    active = next(i for i, b in enumerate(branches) if b >= value - 1e-12)
    return BoundPoint(x, value, active, branches, alpha, in_window)


def ak_s2_bound(x: float) -> BoundPoint:
    """Asymptotic maximum of two-edge-star count over n-vertex graphs with
    x*n^2 edges, normalized by n^3: the larger of the quasi-star and the
    quasi-clique branch. Crossover at x = 1/4."""
    if not 0 <= x <= 0.5:
        raise ValueError(f"edge density {x} outside [0, 1/2]")
    star = ((1 - 2 * x) ** 1.5 + 4 * x - 1) / 2
    clique = sqrt(2) * x**1.5
    return _pick(x, (star, clique))


def ak_norm_bound(x: float) -> BoundPoint:
    """Squared-norm form of ak_s2_bound: both branches doubled, since the
    squared degree sum is twice the star count up to lower-order terms."""
    point = ak_s2_bound(x)
    return BoundPoint(
        point.x,
        2 * point.value,
        point.active_branch,
        tuple(2 * b for b in point.branches),
        None,
        point.in_window,
    )


def prop23_bound(x: float, alpha: float) -> BoundPoint:
    """Two-edge-star ceiling for graphs with x*n^2 edges and an independent
    set of alpha*n vertices, normalized by n^3. The hypothesis window is
    x in [17/50, 7/20]; outside it the point carries in_window=False."""
    if not 0 <= x <= 0.5:
        raise ValueError(f"edge density {x} outside [0, 1/2]")
    if not 0 <= alpha <= 1:
        raise ValueError(f"independence rate {alpha} outside [0, 1]")
    split = (alpha**3 + (2 * x - alpha**2) * sqrt(2 * x + alpha**2)) / 2
    star = ((1 - 2 * x) ** 1.5 + 4 * x - 1) / 2
    return _pick(x, (split, star), alpha, 17 / 50 <= x <= 7 / 20)


def star_part_rate(x: float) -> float:
    """Independent-part fraction k/n making the complement-of-clique graph on
    n vertices have edge density x: sqrt(1-2x), the star-branch extremal
    parameter."""
    if not 0 <= x <= 0.5:
        raise ValueError(f"edge density {x} outside [0, 1/2]")
    return sqrt(1 - 2 * x)


def clique_rate(x: float) -> float:
    """Clique fraction giving a quasi-clique edge density x: sqrt(2x)."""
    if not 0 <= x <= 0.5:
        raise ValueError(f"edge density {x} outside [0, 1/2]")
    return sqrt(2 * x)


def split_rate(x: float, alpha: float) -> float:
    """Joined-clique fraction for the split construction with independent
    fraction alpha and edge density x: sqrt(alpha^2 + 2x) - alpha. Satisfies
    ((alpha + rate)^2 - alpha^2) / 2 = x exactly."""
    if x < 0 or alpha < 0:
        raise ValueError("rates must be nonnegative")
    return sqrt(alpha * alpha + 2 * x) - alpha


# ----- the increasing map f and its inverse -----------------------------------

_F_GRID_CHECKED = False


def f_of(y: float) -> float:
    """max{(1-2y)^(3/2) + 6y - 1, (2y)^(3/2) + 2y} on [0, 1/2]."""
    if not 0 <= y <= 0.5:
        raise ValueError(f"argument {y} outside [0, 1/2]")
    return max((1 - 2 * y) ** 1.5 + 6 * y - 1, (2 * y) ** 1.5 + 2 * y)


def f_inverse(t: float, tol: float = 1e-12) -> float:
    """Bisection inverse of f_of on [0, 1/2]; domain [0, f(1/2)] = [0, 2]."""
    global _F_GRID_CHECKED
    if not 0 <= t <= 2:
        raise ValueError(f"target {t} outside [0, 2]")
    if not _F_GRID_CHECKED:
        values = [f_of(i / 20000) for i in range(10001)]
        if any(b < a - 1e-12 for a, b in zip(values, values[1:])):
            raise AssertionError("f is not nondecreasing on the check grid")
        _F_GRID_CHECKED = True
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f_of(mid) < t:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


# ----- density root equations --------------------------------------------------


def _eq_linear_branch(r: float) -> float:
    return 4 * r - 1 + (1 - 2 * r) ** 1.5 + 2 * r


def _eq_claim32(r: float) -> float:
    return (
        64 / 2197 * (260 * r / 3 - 88 / 3) ** 1.5
        - 22 * (143 * r - 64) / 6591 * sqrt(2 * (2587 * r - 704) / 3)
        + 2 * r
    )


def _eq_claim33(r: float) -> float:
    return (
        192 * sqrt(3) * (65 * r - 22) ** 1.5 / 2197
        + 2 * (528 - 1391 * r) * sqrt(3458 * r - 1056) / 2197
        + 2 * r
    )


def _eq_claim34(r: float) -> float:
    return 8 / 125 + (2 * r - 4 / 25) * sqrt(2 * r + 4 / 25) + 2 * r


# Brackets start from [0.3, 0.4]; the first two equations involve roots that
# only become real at rho = 22/65, so their bracket is clipped there.
_ROOT_EQUATIONS = {
    "claim32": (_eq_claim32, 22 / 65, 0.4),
    "claim33": (_eq_claim33, 22 / 65, 0.4),
    "claim34": (_eq_claim34, 0.3, 0.4),
    "linear_branch": (_eq_linear_branch, 0.3, 0.4),
}


def solve_root_equation(which: str, target: float = 1.25) -> float:
    """Bisection root of the named density equation against the target.

    Asserts on a 1001-point bracket grid that the equation crosses the
    target exactly once (claim33 has a shallow dip right after its bracket
    clip, so plain monotonicity is too strong), then bisects until
    |equation(rho) - target| <= 1e-10.
    """
    if which not in _ROOT_EQUATIONS:
        raise ValueError(f"unknown equation {which!r}, expected one of {ROOT_EQUATION_TOKENS}")
    eq, lo, hi = _ROOT_EQUATIONS[which]
    above = [eq(lo + (hi - lo) * i / 1000) > target for i in range(1001)]
    crossings = sum(a != b for a, b in zip(above, above[1:]))
    if crossings != 1:
        raise ValueError(f"{which} crosses the target {crossings} times on [{lo}, {hi}]")
    if above[0] or not above[-1]:
        raise ValueError(f"no upward sign change for {which} on [{lo}, {hi}]")
    for _ in range(200):
        mid = (lo + hi) / 2
        if eq(mid) < target:
            lo = mid
        else:
            hi = mid
    root = (lo + hi) / 2
    if abs(eq(root) - target) > 1e-10:
        raise AssertionError(f"{which} bisection did not converge: residual {eq(root) - target}")
    return root


# ----- scaled square-root rates -------------------------------------------------


def core_rate(c: float) -> float:
    """sqrt(260c/3 - 88/3) for a minimum degree of c*n^2, n large."""
    radicand = 260 * c / 3 - 88 / 3
    if radicand < 0:
        raise ValueError(f"degree rate {c} below 22/65, radicand negative")
    return sqrt(radicand)


def alpha1(dmin: float, n: int) -> float:
    """(4/(13n)) * sqrt(260*dmin/3 - 88*n(n+1)/3)."""
    radicand = 260 * dmin / 3 - 88 * n * (n + 1) / 3
    if radicand < 0:
        raise ValueError("radicand negative: dmin too small for this n")
    return 4 / (13 * n) * sqrt(radicand)


def alpha2(dmin: float, n: int) -> float:
    """(6/(13n)) * sqrt(260*dmin/3 - 88*n(n+1)/3)."""
    return 1.5 * alpha1(dmin, n)


def alpha1_limit(c: float) -> float:
    """Large-n limit of alpha1 with dmin = c*n^2."""
    return 4 / 13 * core_rate(c)


def alpha2_limit(c: float) -> float:
    """Large-n limit of alpha2 with dmin = c*n^2."""
    return 6 / 13 * core_rate(c)


# ----- core size bound and link-sum inequality ----------------------------------


def core_size_bound(
    size: int | Fraction | float, n: int, beta: Fraction | int | float
) -> float:
    """sqrt((4*size - 2*beta*n(n+1)) / (7 - 2*beta)), clamped at 0.

    Lower bound on the surviving vertex count when peeling a pattern-free
    5-layer multigraph of the given size at threshold beta.
    """
    b = Fraction(beta)
    if not 0 <= b < Fraction(7, 2):
        raise ValueError(f"beta must lie in [0, 7/2), got {beta}")
    radicand = 4 * Fraction(size) - 2 * b * n * (n + 1)
    if radicand <= 0:
        return 0.0
    return sqrt(radicand / (7 - 2 * b))


def link_sum_check(degrees, n: int) -> bool:
    """Exact test of sum(d) + (3/17)*min(d) <= 61*n*(n+1)/34 for the five
    link sizes of a selected vertex set."""
    ds = [Fraction(d) for d in degrees]
    lhs = sum(ds) + Fraction(3, 17) * min(ds)
    return lhs <= Fraction(61 * n * (n + 1), 34)


def min_degree_ceiling(n: int) -> Fraction:
    """61*n*(n+1)/176, the degree level above which link_sum_check must fail
    when all five degrees sit at the same value."""
    return Fraction(61 * n * (n + 1), 176)


# ----- exact rational identities --------------------------------------------------


@dataclass(frozen=True, slots=True)
class RationalReport:
    """Outcome of the exact big-integer verifications."""

    identity_exact: bool
    exceeds_61_34: bool
    combined_value: Fraction
    g_step_holds_from_30: bool
    g_step_threshold: int
    g_step_largest_failing: int


def g_pairs_plus_bipartite(m: int) -> int:
    """g(m) = 2*C(m,2) + 3*floor(m^2/4)."""
    return 2 * comb(m, 2) + 3 * (m * m // 4)


def rational_identity_checks(scan_limit: int = 10**6) -> RationalReport:
    """Verify with exact arithmetic that the combined degree-density value
    2*(253/730) + 3*(321/926) + (3/17)*(253/730) equals 5154779/2872915 and
    exceeds 61/34, and that the step g(m) - g(m-1) = 2(m-1) + 3*floor(m/2)
    beats 44m/13 for every m from 30 up to the scan limit."""
    combined = (
        2 * Fraction(253, 730)
        + 3 * Fraction(321, 926)
        + Fraction(3, 17) * Fraction(253, 730)
    )
    identity_exact = combined == Fraction(5154779, 2872915)
    exceeds = combined > Fraction(61, 34)

    largest_failing = 0
    for m in range(2, scan_limit + 1):
        step = 2 * (m - 1) + 3 * (m // 2)
        if g_pairs_plus_bipartite(m) - g_pairs_plus_bipartite(m - 1) != step:
            raise AssertionError(f"step identity fails at m={m}")
        if 13 * step <= 44 * m:
            largest_failing = m
    threshold = largest_failing + 1
    return RationalReport(
        identity_exact=identity_exact,
        exceeds_61_34=exceeds,
        combined_value=combined,
        g_step_holds_from_30=largest_failing < 30,
        g_step_threshold=threshold,
        g_step_largest_failing=largest_failing,
    )


# ----- extremal density profile ----------------------------------------------------


@dataclass(frozen=True, slots=True)
class DensityStats:
    """Normalized squared-norm and degree statistics of the balanced
    complete bipartite 3-graph."""

    n: int
    norm_ratio: float
    min_degree_ratio: float
    exdeg_ratio: float


def extremal_density_stats(n: int) -> DensityStats:
    """norm/n^4, minimum squared-norm degree over n^3, and the degree
    envelope 4*norm/n^4."""
    if n < 3:
        raise ValueError(f"need at least 3 vertices, got {n}")
    norm = bn_l2_closed(n)
    return DensityStats(
        n=n,
        norm_ratio=norm / n**4,
        min_degree_ratio=bn_min_l2_degree(n) / n**3,
        exdeg_ratio=4 * norm / n**4,
    )
