from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import settings

settings.register_profile("huffseq", deadline=None, max_examples=100)
settings.load_profile("huffseq")


def brute_acorr(x):
    """A_d = sum_i x_i x_{i+d} straight from the definition, zero padded."""
    N = len(x)
    get = lambda i: x[i] if 0 <= i < N else 0  # noqa: E731
    return [sum(get(i) * get(i + d) for i in range(N)) for d in range(-(N - 1), N)]


def sympy_fib(n: int, s) -> Fraction:
    """Fibonacci polynomial from sympy, independent of huffseq.fibpoly (n >= 0)."""
    x = sympy.Symbol("x")
    val = sympy.fibonacci(n, x).subs(x, sympy.Rational(s.numerator, s.denominator))
    return Fraction(int(val.p), int(val.q))


def exact_scale_grid(bound: int = 5, max_den: int = 4) -> list[Fraction]:
    vals = {Fraction(p, q) for q in range(1, max_den + 1) for p in range(-bound * q, bound * q + 1)}
    return sorted(vals)


FIB_LENGTHS = list(range(7, 44, 4))


@pytest.fixture
def fib_lengths():
    return FIB_LENGTHS
