"""Registry of congruence checks and the batch runner.

Every check evaluates, at an admissible prime p, one or more (lhs, rhs)
residue pairs in the same ring; both sides are computed by independent
routes (sequence tables on the left, closed forms or separately-built
tables on the right), so equality of canonical residues is the verdict.

Check classes:
  theorem     proven statements about the cubed-row sums and their moments
  lemma       supporting statements (also proven)
  derived     intermediate congruences that the proofs pass through
  conjecture  open statements; a failure is a counterexample, not a bug

Parameterized checks (shifted-binomial parameter r, evaluation point x,
per-index k families) emit one row per parameter case.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .mining import cornacchia_x2_3y2
from .primes import is_prime
from .report import CheckResult, Report
from .sequences import PrimeContext, get_context

log = logging.getLogger("franelcheck.suite")

#: Sample values for the shifted-binomial parameter: integers, the
#: negative-half point (which turns the shifted binomial into central
#: binomials over 4^k), and generic rationals.  Pairs (r, p) with p
#: dividing the denominator are skipped and logged.
R_SAMPLES: tuple[Fraction, ...] = (
    Fraction(0),
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(5),
    Fraction(-1, 2),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(-2, 3),
    Fraction(7, 5),
)

#: Evaluation points for the polynomial-argument checks; x = 1 reproduces
#: the plain cubed-row sums and doubles as a cross-check.
X_SAMPLES: tuple[Fraction, ...] = (
    Fraction(-2),
    Fraction(-1),
    Fraction(1),
    Fraction(2),
    Fraction(3),
    Fraction(1, 2),
)

# A case is (params, modulus_exponent, lhs, rhs).
Case = tuple[dict, int, int, int]


@dataclass(frozen=True)
class CheckSpec:
    check_id: str
    check_class: str
    modulus_exponent: int  # largest exponent any of the check's cases uses
    min_prime: int
    evaluate: Callable[[PrimeContext], list[Case]]
    description: str = ""


REGISTRY: dict[str, CheckSpec] = {}


def _register(check_id, check_class, e, evaluate, min_prime=5, description=""):
    REGISTRY[check_id] = CheckSpec(check_id, check_class, e, min_prime, evaluate, description)


def _frac(q: Fraction | int, m: int) -> int:
    q = Fraction(q)
    return q.numerator * pow(q.denominator, -1, m) % m


def _usable(r: Fraction, p: int, what: str) -> bool:
    if r.denominator % p == 0:
        log.info("skipping %s=%s at p=%d: denominator divisible by p", what, r, p)
        return False
    return True


# --- alternating moments of the cubed-row sums ------------------------------

def _alt_moment(ctx: PrimeContext, rpow: int, e: int) -> int:
    m = ctx.ring(e).modulus
    fr = ctx.franel(e)
    acc = 0
    sign = 1
    for k in range(ctx.p):
        acc += sign * pow(k, rpow, m) * fr[k]
        sign = -sign
    return acc % m


def _moment_check(rpow: int, coef: Fraction):
    def evaluate(ctx: PrimeContext) -> list[Case]:
        e = 2
        m = ctx.ring(e).modulus
        lhs = _alt_moment(ctx, rpow, e)
        rhs = _frac(coef * ctx.jacobi3, m)
        return [({}, e, lhs, rhs)]

    return evaluate


def _eval_T14(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    fr = ctx.franel(e)
    ce = ctx.central(e)
    rows: list[Case] = []
    for r in R_SAMPLES:
        if not _usable(r, ctx.p, "r"):
            continue
        sh = ctx.shift(e, r)
        lhs = 0
        rhs = 0
        sign = 1
        for k in range(ctx.p):
            lhs += sign * sh[k] * fr[k]
            rhs += ce[k] * (sh[k] * sh[k] % m)
            sign = -sign
        rows.append(({"r": str(r)}, e, lhs % m, rhs % m))
    return rows


def _eval_T21(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    ce = ctx.central(e)
    rows: list[Case] = []
    for r in R_SAMPLES:
        if not _usable(r, ctx.p, "r"):
            continue
        sh = ctx.shift(e, r)
        for x in X_SAMPLES:
            if not _usable(x, ctx.p, "x"):
                continue
            fp = ctx.fpoly(e, x)
            xp = ctx.powers(e, x)
            lhs = 0
            rhs = 0
            sign = 1
            for k in range(ctx.p):
                lhs += sign * sh[k] * fp[k]
                rhs += ce[k] * xp[k] % m * (sh[k] * sh[k] % m)
                sign = -sign
            rows.append(({"r": str(r), "x": str(x)}, e, lhs % m, rhs % m))
    return rows


def _eval_C18(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    ce = ctx.central(e)
    fr = ctx.franel(e)
    w4 = ctx.powers(e, Fraction(-1, 4))  # (-4)^-k
    w16 = ctx.powers(e, Fraction(1, 16))
    lhs = 0
    rhs = 0
    for k in range(ctx.p):
        lhs += ce[k] * fr[k] % m * w4[k]
        rhs += ce[k] * ce[k] % m * ce[k] % m * w16[k]
    return [({}, e, lhs % m, rhs % m)]


def _eval_C19(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    fr = ctx.franel(e)
    inv = ctx.inv(e)
    lhs = 0
    sign = -1
    for k in range(1, ctx.p):
        lhs += sign * fr[k] * inv[k]
        sign = -sign
    return [({}, e, lhs % m, 0)]


def _eval_C110(ctx: PrimeContext) -> list[Case]:
    e = 1
    m = ctx.p
    fr = ctx.franel(e)
    inv = ctx.inv(e)
    lhs = 0
    sign = -1
    for k in range(1, ctx.p):
        lhs += sign * fr[k] * (inv[k] * inv[k] % m)
        sign = -sign
    return [({}, e, lhs % m, 0)]


def _eval_C111(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    fr = ctx.franel(e)
    inv = ctx.inv(e)
    lhs = 0
    sign = -1
    for k in range(1, ctx.p):
        lhs += sign * fr[k - 1] * inv[k]
        sign = -sign
    q = ctx.q2(e)
    rhs = (3 * q + 3 * ctx.p * q * q) % m
    return [({}, e, lhs % m, rhs)]


def _eval_C112(ctx: PrimeContext) -> list[Case]:
    rows: list[Case] = []
    m = ctx.p
    inv = ctx.inv(1)
    for r in range(1, 7):
        if ctx.p <= max(r, 3):
            log.info("skipping r=%d at p=%d: needs p > max(r, 3)", r, ctx.p)
            continue
        gf = ctx.genfranel(1, r)
        lhs = 0
        for k in range(1, ctx.p):
            sign = -1 if (k * r) % 2 else 1
            lhs += sign * gf[k] * pow(inv[k], r - 1, m)
        rows.append(({"r": r}, 1, lhs % m, 0))
    return rows


def _eval_C25(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    fr = ctx.franel(e)
    lhs = 0
    sign = 1
    for k in range(ctx.p):
        lhs += sign * (3 * k + 2) * fr[k]
        sign = -sign
    return [({}, e, lhs % m, 0)]


def _eval_C26(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    ce = ctx.central(e)
    w4 = ctx.powers(e, Fraction(-1, 4))
    w16 = ctx.powers(e, Fraction(1, 16))
    rows: list[Case] = []
    for x in X_SAMPLES:
        if not _usable(x, ctx.p, "x"):
            continue
        fp = ctx.fpoly(e, x)
        xp = ctx.powers(e, x)
        lhs = 0
        rhs = 0
        for k in range(ctx.p):
            lhs += ce[k] * fp[k] % m * w4[k]
            rhs += ce[k] * ce[k] % m * ce[k] % m * w16[k] % m * xp[k]
        rows.append(({"x": str(x)}, e, lhs % m, rhs % m))
    return rows


def _eval_C27(ctx: PrimeContext) -> list[Case]:
    e = 2
    p = ctx.p
    m = ctx.ring(e).modulus
    inv = ctx.inv(e)
    rows: list[Case] = []
    for x in X_SAMPLES:
        if not _usable(x, ctx.p, "x"):
            continue
        fp = ctx.fpoly(e, x)
        xp = ctx.powers(e, x)
        lhs = 0
        sign = -1
        for l in range(1, p):
            lhs += sign * fp[l] * inv[l]
            sign = -sign
        rhs = 0
        for k in range((p + 1) // 2, p):
            rhs += xp[k] * (inv[k] * inv[k] % m)
        rhs = p * (rhs % m) % m
        rows.append(({"x": str(x)}, e, lhs % m, rhs))
    return rows


def _eval_L24(ctx: PrimeContext) -> list[Case]:
    e = 2
    p = ctx.p
    m = ctx.ring(e).modulus
    ce = ctx.central(e)
    rows: list[Case] = []
    for k in range(1, p):
        lhs = k * ce[k] % m * ce[p - k] % m
        rhs = 2 * p % m if 2 * k > p else -2 * p % m
        rows.append(({"k": k}, e, lhs, rhs))
    return rows


def _eval_L25(ctx: PrimeContext) -> list[Case]:
    e = 3
    m = ctx.ring(e).modulus
    lhs = ctx.franel(e)[ctx.p - 1]
    q = ctx.q2(2)
    rhs = (1 + 3 * ctx.p * q + 3 * ctx.p**2 * q * q) % m
    return [({}, e, lhs, rhs)]


def _eval_L26a(ctx: PrimeContext) -> list[Case]:
    e = 2
    p = ctx.p
    m = ctx.ring(e).modulus
    inv = ctx.inv(e)
    rows: list[Case] = []
    b1 = 1  # binom(p-1, k)
    b2 = 1  # binom(p+k, k)
    for k in range(p):
        rhs = 1 if k % 2 == 0 else m - 1
        rows.append(({"k": k}, e, b1 * b2 % m, rhs))
        if k + 1 < p:
            b1 = b1 * ((p - 1 - k) % m) % m * inv[k + 1] % m
            b2 = b2 * ((p + k + 1) % m) % m * inv[k + 1] % m
    return rows


def _eval_L26b(ctx: PrimeContext) -> list[Case]:
    e = 4
    p = ctx.p
    m = ctx.ring(e).modulus
    inv = ctx.inv(e)
    tri = ctx.triangle_sums()
    rows: list[Case] = []
    for k in range(p - 1):
        sign = 1 if k % 2 == 0 else -1
        rhs = sign * p * p * inv[k + 1] % m
        rows.append(({"k": k}, e, tri[k], rhs))
    return rows


def _eval_WOL(ctx: PrimeContext) -> list[Case]:
    p = ctx.p
    return [
        ({"part": "H1"}, 2, ctx.harmonic(2, 1)[p - 1], 0),
        ({"part": "H2"}, 1, ctx.harmonic(1, 2)[p - 1], 0),
        ({"part": "CB"}, 3, ctx.central_double_mod_p3(), 1),
    ]


def _eval_LEH(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    lhs = ctx.harmonic(e, 1)[(ctx.p - 1) // 2]
    q = ctx.q2(e)
    rhs = (-2 * q + ctx.p * q * q) % m
    return [({}, e, lhs, rhs)]


def _eval_ST11(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    lhs = sum(ctx.central(e)) % m
    return [({}, e, lhs, ctx.jacobi3 % m)]


def _eval_JV(ctx: PrimeContext) -> list[Case]:
    p = ctx.p
    fr = ctx.franel(1)
    w8 = ctx.powers(1, Fraction(-8))
    rows: list[Case] = []
    for k in range(p):
        rows.append(({"k": k}, 1, fr[k], w8[k] * fr[p - 1 - k] % p))
    return rows


def _eval_R1a(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    wc = ctx.weighted_cubes(e, Fraction(-8))
    lhs = 0
    sign = 1
    for n in range(ctx.p):
        lhs += sign * wc[n]
        sign = -sign
    return [({}, e, lhs % m, ctx.jacobi3 % m)]


def _eval_R1b(ctx: PrimeContext) -> list[Case]:
    e = 2
    m = ctx.ring(e).modulus
    fr = ctx.franel(e)
    w8 = ctx.powers(e, Fraction(1, 8))
    lhs = 0
    for k in range(ctx.p):
        lhs += fr[k] * w8[k]
    return [({}, e, lhs % m, ctx.jacobi3 % m)]


def _eval_R1c(ctx: PrimeContext) -> list[Case]:
    e = 1
    p = ctx.p
    fr = ctx.franel(e)
    w8 = ctx.powers(e, Fraction(1, 8))
    inv = ctx.inv(e)
    lhs = 0
    for k in range(1, p):
        lhs += fr[k] * w8[k] % p * inv[k]
    rhs = 3 * ctx.q2(e) % p
    return [({}, e, lhs % p, rhs)]


def _eval_S11conj(ctx: PrimeContext) -> list[Case]:
    e = 2
    p = ctx.p
    m = ctx.ring(e).modulus
    ce = ctx.central(e)
    w16 = ctx.powers(e, Fraction(1, 16))
    lhs = 0
    for k in range(p):
        lhs += ce[k] * ce[k] % m * ce[k] % m * w16[k]
    lhs %= m
    rep = cornacchia_x2_3y2(p)
    if rep is not None:
        rhs = (4 * rep.x * rep.x - 2 * p) % m
        params = {"x": rep.x, "y": rep.y}
    else:
        rhs = 0
        params = {"branch": "p=2 (mod 3)"}
    return [(params, e, lhs, rhs)]


_register("T14_r", "theorem", 2, _eval_T14,
          description="alternating shifted-binomial transform of the cubed-row sums vs central-binomial squares, mod p^2")
_register("C15", "theorem", 2, _moment_check(0, Fraction(1)),
          description="alternating sum of cubed-row sums is the mod-3 character, mod p^2")
_register("C16", "theorem", 2, _moment_check(1, Fraction(-2, 3)),
          description="first alternating moment, mod p^2")
_register("C17", "theorem", 2, _moment_check(2, Fraction(10, 27)),
          description="second alternating moment, mod p^2")
_register("C18", "theorem", 2, _eval_C18,
          description="central-binomial weighted sum over (-4)^k vs cubed central binomials over 16^k")
_register("C19", "theorem", 2, _eval_C19,
          description="alternating sum with 1/k vanishes mod p^2")
_register("C110", "theorem", 1, _eval_C110,
          description="alternating sum with 1/k^2 vanishes mod p")
_register("C111", "theorem", 2, _eval_C111,
          description="alternating shifted sum with 1/k equals a Fermat-quotient form")
_register("C112_r", "theorem", 1, _eval_C112,
          description="r-th power generalization of the 1/k^2 vanishing, r = 1..6")
_register("K3", "theorem", 2, _moment_check(3, Fraction(-10, 81)),
          description="third alternating moment, mod p^2")
_register("K4", "theorem", 2, _moment_check(4, Fraction(-14, 243)),
          description="fourth alternating moment, mod p^2")
_register("T21_rx", "theorem", 2, _eval_T21,
          description="polynomial-argument master congruence over the (r, x) sample grid")
_register("C25", "derived", 2, _eval_C25,
          description="(3k+2)-weighted alternating sum vanishes mod p^2")
_register("C26_x", "derived", 2, _eval_C26,
          description="negative-half specialization at sample points x")
_register("C27_x", "derived", 2, _eval_C27,
          description="alternating 1/l sum of polynomial values vs upper-range tail, mod p^2")
_register("L24", "lemma", 2, _eval_L24,
          description="k binom(2k,k) binom(2(p-k),p-k) is +-2p mod p^2, all k")
_register("L25", "lemma", 3, _eval_L25,
          description="top cubed-row sum vs Fermat-quotient expansion mod p^3")
_register("L26a", "lemma", 2, _eval_L26a,
          description="binom(p-1,k) binom(p+k,k) alternates signs mod p^2, all k")
_register("L26b", "lemma", 4, _eval_L26b,
          description="weighted triangle sums equal p^2 (-1)^k/(k+1) mod p^4, k <= p-2")
_register("WOL", "lemma", 3, _eval_WOL,
          description="harmonic-number and central-binomial classics: H mod p^2, H2 mod p, binom(2p-1,p-1) mod p^3")
_register("LEH", "lemma", 2, _eval_LEH,
          description="half-range harmonic number vs Fermat quotient of 2, mod p^2")
_register("ST11_anchor", "lemma", 2, _eval_ST11,
          description="sum of central binomials is the mod-3 character, mod p^2")
_register("JV", "lemma", 1, _eval_JV,
          description="reflection symmetry f_k = (-8)^k f_{p-1-k} mod p, all k")
_register("R1a", "conjecture", 2, _eval_R1a,
          description="alternating (-8)-weighted cube sums give the mod-3 character, mod p^2")
_register("R1b", "conjecture", 2, _eval_R1b,
          description="cubed-row sums over 8^k give the mod-3 character, mod p^2")
_register("R1c", "derived", 1, _eval_R1c,
          description="cubed-row sums over k 8^k give triple the Fermat quotient, mod p")
_register("S11conj", "conjecture", 2, _eval_S11conj,
          description="cubed central binomials over 16^k vs 4x^2-2p with p = x^2+3y^2, mod p^2")


def check_ids() -> list[str]:
    return list(REGISTRY)


def run_check(check_id: str, p: int) -> list[CheckResult]:
    """Evaluate one check at one prime; one result per parameter case."""
    try:
        spec = REGISTRY[check_id]
    except KeyError:
        raise ValueError(f"unknown check id {check_id!r}") from None
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if p < spec.min_prime:
        raise ValueError(f"p={p} is below the smallest admissible prime {spec.min_prime} for {check_id}")
    ctx = get_context(p)
    start = time.perf_counter()
    cases = spec.evaluate(ctx)
    elapsed = time.perf_counter() - start
    return [
        CheckResult(
            check_id=check_id,
            check_class=spec.check_class,
            prime=p,
            modulus_exponent=e,
            params=params,
            lhs=lhs,
            rhs=rhs,
            passed=lhs == rhs,
            elapsed=elapsed,
        )
        for params, e, lhs, rhs in cases
    ]


def _prime_task(args: tuple[int, tuple[str, ...]]) -> dict[str, list[CheckResult]]:
    p, ids = args
    out: dict[str, list[CheckResult]] = {}
    for cid in ids:
        if p >= REGISTRY[cid].min_prime:
            out[cid] = run_check(cid, p)
    return out


def run_suite(
    ids: Iterable[str] | None = None,
    primes: Sequence[int] = (),
    workers: int = 1,
) -> Report:
    """Evaluate the selected checks at every admissible prime.

    The report is ordered by check id, then prime, then parameter case;
    the ordering (and hence any serialization) does not depend on the
    worker count.
    """
    selected = list(ids) if ids is not None else check_ids()
    for cid in selected:
        if cid not in REGISTRY:
            raise ValueError(f"unknown check id {cid!r}")
    primes = sorted(set(primes))
    if not primes:
        raise ValueError("no primes in range")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
    tasks = [(p, tuple(selected)) for p in primes]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_prime = dict(zip(primes, pool.map(_prime_task, tasks)))
    else:
        per_prime = {p: _prime_task(t) for p, t in zip(primes, tasks)}
    rows: list[CheckResult] = []
    for cid in sorted(selected):
        for p in primes:
            rows.extend(per_prime[p].get(cid, []))
    if not rows:
        raise ValueError("empty selection: no admissible (check, prime) pairs")
    return Report(rows=rows)
