"""Fibonacci and Lucas polynomial families, univariate and two-argument.

F_n and L_n follow the signed recurrences F_n = c*F_{n-1} - F_{n-2}
(F_0 = 0, F_1 = 1) and L_n = c*L_{n-1} - L_{n-2} (L_0 = 2, L_1 = c).
The two-argument family L_n(x, s) = x*L_{n-1} + s*L_{n-2} (L_0 = 2,
L_1 = x) satisfies L_n(x+y, -x*y) = x^n + y^n; it is never stored as a
bivariate object here.  Its two consumers run the recurrence directly in
the target ring: scalar pairs for spot checks, and the substitution
(1 - c*x, -x^2) which lands in truncated series.
"""

from __future__ import annotations

from .ring import C, Polynomial, RingElement
from .series import TruncatedSeries

_FIB: list = [Polynomial(), Polynomial((1,))]
_LUC: list = [Polynomial((2,)), C]


def fibonacci_poly(n: int) -> Polynomial:
    """F_n; F_0 = 0, F_1 = 1, F_n = c*F_{n-1} - F_{n-2}."""
    if n < 0:
        raise ValueError("index must be >= 0")
    while len(_FIB) <= n:
        _FIB.append(C * _FIB[-1] - _FIB[-2])
    return _FIB[n]


def lucas_poly(n: int) -> Polynomial:
    """L_n; L_0 = 2, L_1 = c, L_n = c*L_{n-1} - L_{n-2}."""
    if n < 0:
        raise ValueError("index must be >= 0")
    while len(_LUC) <= n:
        _LUC.append(C * _LUC[-1] - _LUC[-2])
    return _LUC[n]


def _two_arg_lucas(two, x, s, n):
    # generic over any values supporting + and *
    if n == 0:
        return two
    prev, cur = two, x
    for _ in range(n - 1):
        prev, cur = cur, x * cur + s * prev
    return cur


def lucas_bivariate_eval(n: int, x: RingElement, s: RingElement) -> RingElement:
    """L_n(x, s) for scalar ring elements."""
    if n < 0:
        raise ValueError("index must be >= 0")
    return _two_arg_lucas(2, x, s, n)


def lucas_bivariate_at(n: int, cval: RingElement, order: int) -> TruncatedSeries:
    """L_n evaluated at (1 - c*x, -x^2), as a series modulo x**order.

    The result is a polynomial in x of degree n (coefficients in the ring
    of cval), so order >= n + 1 captures it exactly.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    first = TruncatedSeries.monomial(1, order, coeff=-cval) + TruncatedSeries.one(order)
    second = TruncatedSeries.monomial(2, order, coeff=-1)
    return _two_arg_lucas(TruncatedSeries.constant(2, order), first, second, n)
