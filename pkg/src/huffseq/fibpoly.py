"""Fibonacci polynomials F_n(s) and the identities the constructions rely on.

F_0 = 0, F_1 = 1, F_{n+2} = s F_{n+1} + F_n.  s = 1 gives the Fibonacci
numbers and s = 2 the Pell numbers.  Negative indices use the reflection
F_{-n} = (-1)^{n+1} F_n.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidIdentityCase
from .numeric import NumericValue, ScaleLike, as_scale

IDENTITY_KINDS = (
    "recursion",
    "catalan",
    "johnson",
    "sum_squares",
    "odd_index_sum",
    "product",
    "binet_chebyshev",
    "reflection",
)


def fib_poly(n: int, s: ScaleLike) -> NumericValue:
    """Evaluate F_n(s) for any integer n; exact when ``s`` is exact."""
    n = int(n)
    sv = as_scale(s).value
    if n < 0:
        sign = 1 if (n + 1) % 2 == 0 else -1  # (-1)^{|n|+1}
        return sign * fib_poly(-n, sv)
    a, b = sv * 0, sv * 0 + 1
    for _ in range(n):
        a, b = b, sv * b + a
    return a


def fib_poly_prefix(n_max: int, s: ScaleLike) -> list[NumericValue]:
    """[F_0(s), F_1(s), ..., F_{n_max}(s)] in one pass."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    sv = as_scale(s).value
    out = [sv * 0]
    if n_max >= 1:
        out.append(sv * 0 + 1)
    for _ in range(2, n_max + 1):
        out.append(sv * out[-1] + out[-2])
    return out


def fib_by_recursion(n: int, s: ScaleLike) -> NumericValue:
    """F_n(s) by running the recursion forward or backward, no reflection.

    Kept separate from :func:`fib_poly` so the reflection identity has an
    independent left-hand side.
    """
    sv = as_scale(s).value
    lo, hi = sv * 0, sv * 0 + 1  # F_0, F_1
    if n >= 0:
        for _ in range(n):
            lo, hi = hi, sv * hi + lo
        return lo
    for _ in range(-n):
        lo, hi = hi - sv * lo, lo  # F_{k-1} = F_{k+1} - s F_k
    return lo


def binet_chebyshev(n: int, s: float) -> complex:
    """Trigonometric Binet form of F_n(s) (float only, principal arccos)."""
    theta = cmath.acos(1j * float(s) / 2)
    num = cmath.exp(-1j * n * theta) - cmath.exp(1j * n * theta)
    den = cmath.exp(-1j * theta) - cmath.exp(1j * theta)
    return (1j) ** (1 - n) * num / den


@dataclass(frozen=True)
class IdentityCase:
    """One instance of a Fibonacci-polynomial identity.

    Only the indices relevant to ``kind`` are read:

    ============== ==================
    recursion      n
    catalan        n, r
    johnson        a, b, c, d, t
    sum_squares    n (upper limit)
    odd_index_sum  n (upper limit)
    product        m, n
    binet_chebyshev n
    reflection     n (the j in F_{-j})
    ============== ==================
    """

    kind: str
    s: ScaleLike
    n: int = 0
    r: int = 0
    m: int = 0
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0
    t: int = 0


@dataclass(frozen=True)
class IdentityResult:
    holds: bool
    lhs: NumericValue | complex
    rhs: NumericValue | complex


def _sides(case: IdentityCase) -> tuple[object, object, float]:
    """Return (lhs, rhs, magnitude of the largest term) for ``case``."""
    s = as_scale(case.s).value
    F = lambda k: fib_poly(k, s)  # noqa: E731
    kind = case.kind
    if kind == "recursion":
        terms = (F(case.n + 2), s * F(case.n + 1), F(case.n))
        return terms[0], terms[1] + terms[2], _mag(terms)
    if kind == "catalan":
        n, r = case.n, case.r
        lhs = F(n - r) * F(n + r)
        sq, tail = F(n) ** 2, (-1) ** ((n - r) % 2) * F(r) ** 2
        return lhs, sq - tail, _mag((lhs, sq, tail))
    if kind == "johnson":
        a, b, c, d, t = case.a, case.b, case.c, case.d, case.t
        if a + b != c + d:
            raise InvalidIdentityCase(f"johnson needs a+b == c+d, got {a}+{b} != {c}+{d}")
        p1, p2 = F(a) * F(b), F(c) * F(d)
        q1, q2 = F(a - t) * F(b - t), F(c - t) * F(d - t)
        sign = -1 if t % 2 else 1
        return p1 - p2, sign * (q1 - q2), _mag((p1, p2, q1, q2))
    if kind in ("sum_squares", "odd_index_sum"):
        if case.n < 0:
            raise InvalidIdentityCase(f"{kind} needs n >= 0, got {case.n}")
        if s == 0:
            raise InvalidIdentityCase(f"{kind} divides by s; s = 0 is not allowed")
        if kind == "sum_squares":
            terms = [F(i) ** 2 for i in range(1, case.n + 1)]
            rhs = F(case.n) * F(case.n + 1) / s
        else:
            terms = [F(2 * i - 1) for i in range(1, case.n + 1)]
            rhs = F(2 * case.n) / s
        lhs = sum(terms, s * 0)
        return lhs, rhs, _mag([*terms, rhs])
    if kind == "product":
        m, n = case.m, case.n
        p1, p2 = F(m + 1) * F(n + 1), F(m) * F(n)
        return F(m + n + 1), p1 + p2, _mag((p1, p2))
    if kind == "binet_chebyshev":
        lhs = float(F(case.n))
        rhs = binet_chebyshev(case.n, float(s))
        theta = cmath.acos(1j * float(s) / 2)
        size = (abs(cmath.exp(1j * case.n * theta)) + abs(cmath.exp(-1j * case.n * theta))) / abs(
            2 * cmath.sin(theta)
        )
        return lhs, rhs, max(abs(lhs), size)
    if kind == "reflection":
        j = case.n
        lhs = fib_by_recursion(-j, s)
        rhs = (-1) ** ((j + 1) % 2) * fib_by_recursion(j, s)
        return lhs, rhs, _mag((lhs, rhs))
    raise InvalidIdentityCase(f"unknown identity kind {kind!r}")


def _mag(terms) -> float:
    return max((abs(float(x)) for x in terms), default=0.0)


def check_identity(case: IdentityCase, rel_tol: float | None = None) -> IdentityResult:
    """Evaluate both sides of ``case``.

    Exact inputs are compared with ``==``.  Float inputs pass when
    ``|lhs - rhs| <= rel_tol * (largest term magnitude)``; the default
    tolerance is 1e-10, or 1e-9 for the Binet form.
    """
    lhs, rhs, size = _sides(case)
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        return IdentityResult(lhs == rhs, lhs, rhs)
    if rel_tol is None:
        rel_tol = 1e-9 if case.kind == "binet_chebyshev" else 1e-10
    diff = abs(complex(lhs) - complex(rhs))
    holds = diff <= rel_tol * size if size > 0 else diff == 0
    return IdentityResult(bool(holds), lhs, rhs)


def random_rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        p = rng.randint(-bound, bound)
        if p or not nonzero:
            return Fraction(p, rng.randint(1, bound))


def random_identity_case(kind: str, rng: random.Random, index_bound: int = 30) -> IdentityCase:
    """Draw a well-formed random case of ``kind``.

    Exact kinds use rational s = p/q with |p|, q <= 9; the Binet form uses
    a float s in [-3, 3] and n in [0, 20].
    """
    idx = lambda: rng.randint(-index_bound, index_bound)  # noqa: E731
    if kind == "binet_chebyshev":
        return IdentityCase(kind, rng.uniform(-3.0, 3.0), n=rng.randint(0, 20))
    if kind in ("sum_squares", "odd_index_sum"):
        return IdentityCase(kind, random_rational(rng, nonzero=True), n=rng.randint(0, index_bound))
    s = random_rational(rng)
    if kind == "johnson":
        while True:
            a, b, c, t = idx(), idx(), idx(), idx()
            d = a + b - c
            if abs(d) <= index_bound:
                return IdentityCase(kind, s, a=a, b=b, c=c, d=d, t=t)
    if kind == "catalan":
        return IdentityCase(kind, s, n=idx(), r=idx())
    if kind == "product":
        return IdentityCase(kind, s, m=idx(), n=idx())
    if kind in ("recursion", "reflection"):
        return IdentityCase(kind, s, n=idx())
    raise InvalidIdentityCase(f"unknown identity kind {kind!r}")


def run_identity_suite(
    count: int = 1000, seed: int = 0, kinds: tuple[str, ...] = IDENTITY_KINDS
) -> dict[str, dict]:
    """Check ``count`` random cases per kind; returns per-kind tallies and failures."""
    rng = random.Random(seed)
    summary: dict[str, dict] = {}
    for kind in kinds:
        failures = []
        for _ in range(count):
            case = random_identity_case(kind, rng)
            res = check_identity(case)
            if not res.holds:
                failures.append((case, res))
        summary[kind] = {"cases": count, "passed": count - len(failures), "failures": failures}
    return summary


def golden_ratio() -> float:
    return (1 + math.sqrt(5)) / 2
