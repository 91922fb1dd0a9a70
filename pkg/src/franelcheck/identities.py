"""Exact verification of the binomial identities the congruence proofs use.

Everything here runs on exact integers, never modularly.  Identities that
are polynomial in a free variable are checked at degree+2 consecutive
integer points (including negatives, which exercises the generalized
binomial), so each per-parameter check is equivalent to coefficientwise
equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .sequences import (
    apery_exact,
    binom_exact,
    franel_exact,
    franel_exact_list,
    _fpoly_form_central,
    _fpoly_form_sq,
)


@dataclass
class IdentityOutcome:
    identity_id: str
    range_tested: dict
    passed: bool
    counterexample: dict | None = None

    @classmethod
    def ok(cls, identity_id: str, range_tested: dict) -> "IdentityOutcome":
        return cls(identity_id, range_tested, True)

    @classmethod
    def fail(cls, identity_id: str, range_tested: dict, **counterexample) -> "IdentityOutcome":
        return cls(identity_id, range_tested, False, counterexample)


def _points(count: int) -> range:
    """count consecutive integers centered at 0."""
    start = -(count // 2)
    return range(start, start + count)


def verify_recurrence_franel(n_max: int) -> IdentityOutcome:
    """(n+1)^2 f_{n+1} = (7n^2+7n+2) f_n + 8n^2 f_{n-1} for 1 <= n < n_max."""
    rng = {"n_max": n_max}
    f = [franel_exact(n) for n in range(n_max + 1)]
    for n in range(1, n_max):
        lhs = (n + 1) ** 2 * f[n + 1]
        rhs = (7 * n * n + 7 * n + 2) * f[n] + 8 * n * n * f[n - 1]
        if lhs != rhs:
            return IdentityOutcome.fail("recurrence_franel", rng, n=n, lhs=lhs, rhs=rhs)
    return IdentityOutcome.ok("recurrence_franel", rng)


def verify_eq_2_2(k_max: int) -> IdentityOutcome:
    """sum_{l=k}^{2k} (-1)^l binom(l,k) binom(k,l-k) binom(x+l,l) = binom(x+k,k)^2.

    Degree 2k in x on both sides; sampled at 2k+2 points.
    """
    rng = {"k_max": k_max}
    for k in range(k_max + 1):
        for x in _points(2 * k + 2):
            lhs = sum(
                (-1) ** l * binom_exact(l, k) * binom_exact(k, l - k) * binom_exact(x + l, l)
                for l in range(k, 2 * k + 1)
            )
            rhs = binom_exact(x + k, k) ** 2
            if lhs != rhs:
                return IdentityOutcome.fail("eq_2_2", rng, k=k, x=x, lhs=lhs, rhs=rhs)
    return IdentityOutcome.ok("eq_2_2", rng)


def verify_chu_vandermonde(k_max: int) -> IdentityOutcome:
    """sum_j binom(y,j) binom(z,k-j) = binom(y+z,k), sampled on a (k+2)^2 grid."""
    rng = {"k_max": k_max}
    for k in range(k_max + 1):
        for y in _points(k + 2):
            for z in _points(k + 2):
                lhs = sum(binom_exact(y, j) * binom_exact(z, k - j) for j in range(k + 1))
                rhs = binom_exact(y + z, k)
                if lhs != rhs:
                    return IdentityOutcome.fail(
                        "chu_vandermonde", rng, k=k, y=y, z=z, lhs=lhs, rhs=rhs
                    )
    return IdentityOutcome.ok("chu_vandermonde", rng)


def verify_andersen(m_max: int) -> IdentityOutcome:
    """m * sum_{k<=n} binom(x,k) binom(-x,m-k) = (m-n) binom(x-1,n) binom(-x,m-n).

    Stated with the rational factor (m-n)/m; both sides are multiplied by m
    to stay in integers.  Degree m in x, sampled at m+2 points.
    """
    rng = {"m_max": m_max}
    for m in range(1, m_max + 1):
        for n in range(m + 1):
            for x in _points(m + 2):
                lhs = m * sum(
                    binom_exact(x, k) * binom_exact(-x, m - k) for k in range(n + 1)
                )
                rhs = (m - n) * binom_exact(x - 1, n) * binom_exact(-x, m - n)
                if lhs != rhs:
                    return IdentityOutcome.fail(
                        "andersen", rng, m=m, n=n, x=x, lhs=lhs, rhs=rhs
                    )
    return IdentityOutcome.ok("andersen", rng)


def _weight_poly(m: int, x: int) -> int:
    """P_m(x) = 2(2x+1)(x+1)^(m-1) - x^m, the central-binomial summation weight."""
    return 2 * (2 * x + 1) * (x + 1) ** (m - 1) - x**m


def verify_lemma_2_2(
    m_max: int, n_max: int, poly: Callable[[int, int], int] | None = None
) -> IdentityOutcome:
    """sum_{k<n} P_m(k) binom(2k,k) = n^m binom(2n,n).

    ``poly`` overrides the weight polynomial; the mutation test injects a
    perturbed coefficient through it.
    """
    rng = {"m_max": m_max, "n_max": n_max}
    pm = poly or _weight_poly
    for m in range(1, m_max + 1):
        acc = 0
        for n in range(1, n_max + 1):
            acc += pm(m, n - 1) * binom_exact(2 * (n - 1), n - 1)
            rhs = n**m * binom_exact(2 * n, n)
            if acc != rhs:
                return IdentityOutcome.fail(
                    "lemma_2_2", rng, m=m, n=n, lhs=acc, rhs=rhs
                )
    return IdentityOutcome.ok("lemma_2_2", rng)


def verify_hockey_stick(l_max: int, m_max: int) -> IdentityOutcome:
    """sum_{n=0}^m binom(n,l) = binom(m+1,l+1)."""
    rng = {"l_max": l_max, "m_max": m_max}
    for l in range(l_max + 1):
        acc = 0
        for m in range(m_max + 1):
            acc += binom_exact(m, l)
            rhs = binom_exact(m + 1, l + 1)
            if acc != rhs:
                return IdentityOutcome.fail("hockey_stick", rng, l=l, m=m, lhs=acc, rhs=rhs)
    return IdentityOutcome.ok("hockey_stick", rng)


def verify_lemma_2_6_exact(k_max: int, m_max: int) -> IdentityOutcome:
    """(k+1) binom(2k,k) sum_{n=k}^{m-1} (2n+1) binom(n+k,2k)
       = m^2 binom(m-1,k) binom(m+k,k), for 0 <= k < m.

    The telescoped closed form of the weighted triangle sums, exact over
    the integers with any m >= k+1 in place of the prime.
    """
    rng = {"k_max": k_max, "m_max": m_max}
    for m in range(1, m_max + 1):
        for k in range(min(k_max, m - 1) + 1):
            lhs = (
                (k + 1)
                * binom_exact(2 * k, k)
                * sum((2 * n + 1) * binom_exact(n + k, 2 * k) for n in range(k, m))
            )
            rhs = m * m * binom_exact(m - 1, k) * binom_exact(m + k, k)
            if lhs != rhs:
                return IdentityOutcome.fail(
                    "lemma_2_6_exact", rng, k=k, m=m, lhs=lhs, rhs=rhs
                )
    return IdentityOutcome.ok("lemma_2_6_exact", rng)


def verify_strehl_and_1_3(n_max: int) -> IdentityOutcome:
    """The polynomial evaluation at 1 gives the cubed-row sums; the Apery
    numbers equal their cubed-row transform; the two polynomial forms agree
    (coefficientwise, by evaluation at n+1 points)."""
    rng = {"n_max": n_max}
    fr = franel_exact_list(n_max)
    for n in range(n_max + 1):
        for x in _points(n + 1):
            a = _fpoly_form_sq(n, x)
            b = _fpoly_form_central(n, x)
            if a != b:
                return IdentityOutcome.fail(
                    "strehl_and_transform", rng, part="forms", n=n, x=x, lhs=a, rhs=b
                )
        if _fpoly_form_sq(n, 1) != fr[n]:
            return IdentityOutcome.fail(
                "strehl_and_transform", rng, part="at_one", n=n,
                lhs=_fpoly_form_sq(n, 1), rhs=fr[n],
            )
        by_def = apery_exact(n, "definition")
        by_transform = apery_exact(n, "via_franel")
        if by_def != by_transform:
            return IdentityOutcome.fail(
                "strehl_and_transform", rng, part="apery", n=n,
                lhs=by_def, rhs=by_transform,
            )
    return IdentityOutcome.ok("strehl_and_transform", rng)


#: The identity suite with its standard desk-scale bounds, in run order.
IDENTITY_SUITE: list[tuple[str, Callable[[], IdentityOutcome]]] = [
    ("recurrence_franel", lambda: verify_recurrence_franel(200)),
    ("eq_2_2", lambda: verify_eq_2_2(25)),
    ("chu_vandermonde", lambda: verify_chu_vandermonde(20)),
    ("andersen", lambda: verify_andersen(20)),
    ("lemma_2_2", lambda: verify_lemma_2_2(6, 60)),
    ("hockey_stick", lambda: verify_hockey_stick(20, 40)),
    ("lemma_2_6_exact", lambda: verify_lemma_2_6_exact(20, 40)),
    ("strehl_and_transform", lambda: verify_strehl_and_1_3(40)),
]


def run_identity_suite() -> list[IdentityOutcome]:
    return [run() for _, run in IDENTITY_SUITE]
