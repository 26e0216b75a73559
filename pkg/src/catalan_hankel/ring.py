"""Exact scalar arithmetic: big integers and dense polynomials in the symbol c.

Every quantity in this package is a *ring element*: either a plain Python
int (the ring of integers) or a :class:`Polynomial` (integer-coefficient
polynomials in one symbol, rendered as ``c``).  The two kinds mix freely in
``+ - *`` expressions; the one operation beyond the native operators that
the elimination code needs is :func:`exact_div`, which must fail loudly
whenever a division is not exact.
"""

from __future__ import annotations

from typing import Union


class NotDivisibleError(ArithmeticError):
    """Exact division left a nonzero remainder."""


# Coefficient-pair count above which multiplication switches from the
# schoolbook loop to Kronecker packing (one native big-int multiply).
_SCHOOLBOOK_CUTOFF = 1024


def _pack_nonneg(coeffs, step):
    # little-endian fixed-width digits; every coefficient must fit in `step` bytes
    buf = bytearray(len(coeffs) * step)
    for i, v in enumerate(coeffs):
        if v:
            buf[i * step : i * step + (v.bit_length() + 7) // 8] = v.to_bytes(
                (v.bit_length() + 7) // 8, "little"
            )
    return int.from_bytes(buf, "little")


def _pack_signed(coeffs, step):
    pos = _pack_nonneg([v if v > 0 else 0 for v in coeffs], step)
    neg = _pack_nonneg([-v if v < 0 else 0 for v in coeffs], step)
    return pos - neg


def _unpack_balanced(value, length, step):
    # digits are balanced around 0; shift by half the digit range so that
    # the packed integer becomes nonnegative with independent digits
    bits = step * 8
    half = 1 << (bits - 1)
    offset = _pack_nonneg([half] * length, step)
    shifted = value + offset
    raw = shifted.to_bytes(length * step, "little")
    return [
        int.from_bytes(raw[i * step : (i + 1) * step], "little") - half
        for i in range(length)
    ]


def _mul_schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                out[i + j] += av * bv
    return out


def _mul_kronecker(a, b):
    # evaluate both factors at 2**bits and let CPython's big-int multiply
    # do the convolution; digit width chosen so product digits cannot collide
    bound = max(abs(v) for v in a) * max(abs(v) for v in b) * min(len(a), len(b))
    step = (bound.bit_length() + 2 + 7) // 8
    product = _pack_signed(a, step) * _pack_signed(b, step)
    return _unpack_balanced(product, len(a) + len(b) - 1, step)


class Polynomial:
    """Dense univariate polynomial over the integers in the symbol c.

    ``coeffs[i]`` holds the coefficient of ``c**i``.  The tuple never ends
    in a zero; the zero polynomial stores the empty tuple.  Instances are
    immutable and hashable, and ints participate directly in arithmetic
    (coerced to constants).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- structure ---------------------------------------------------------

    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial((value,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-v for v in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if len(a) * len(b) <= _SCHOOLBOOK_CUTOFF:
            return Polynomial(_mul_schoolbook(a, b))
        return Polynomial(_mul_kronecker(a, b))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers leave the polynomial ring")
        result = Polynomial((1,))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def exact_div(self, divisor) -> "Polynomial":
        """Quotient self / divisor when the division is exact.

        Raises NotDivisibleError when long division leaves a remainder (or
        a leading coefficient fails to divide), ZeroDivisionError for a
        zero divisor.
        """
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return Polynomial()
        den = divisor.coeffs
        rem = list(self.coeffs)
        span = len(rem) - len(den)
        if span < 0:
            raise NotDivisibleError(f"{self} is not divisible by {divisor}")
        lead = den[-1]
        quot = [0] * (span + 1)
        for i in range(span, -1, -1):
            top = rem[i + len(den) - 1]
            if top == 0:
                continue
            if top % lead:
                raise NotDivisibleError(f"{self} is not divisible by {divisor}")
            q = top // lead
            quot[i] = q
            for j, dv in enumerate(den):
                rem[i + j] -= q * dv
        if any(rem):
            raise NotDivisibleError(f"{self} is not divisible by {divisor}")
        return Polynomial(quot)

    def evaluate(self, point):
        """Horner evaluation at an int, or composition at a Polynomial."""
        acc = 0
        for coeff in reversed(self.coeffs):
            acc = acc * point + coeff
        return acc

    # -- comparison / rendering --------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"

    def __str__(self):
        # canonical ascending-power rendering, used verbatim in reports
        if not self.coeffs:
            return "0"
        parts = []
        for power, coeff in enumerate(self.coeffs):
            if coeff == 0:
                continue
            mag = abs(coeff)
            if power == 0:
                body = str(mag)
            elif power == 1:
                body = "c" if mag == 1 else f"{mag}*c"
            else:
                body = f"c^{power}" if mag == 1 else f"{mag}*c^{power}"
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)


RingElement = Union[int, Polynomial]

#: The symbol c as a ring element.
C = Polynomial((0, 1))


def as_poly(value: RingElement) -> Polynomial:
    """Coerce an int to a constant Polynomial (Polynomials pass through)."""
    if isinstance(value, Polynomial):
        return value
    return Polynomial((value,))


def exact_div(a: RingElement, b: RingElement) -> RingElement:
    """Exact ring division a / b; raises NotDivisibleError otherwise."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("integer division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisibleError(f"{a} is not divisible by {b}")
        return q
    return as_poly(a).exact_div(b)


def eval_at(value: RingElement, point: int) -> RingElement:
    """Evaluate a ring element at c = point (ints are already values)."""
    if isinstance(value, Polynomial):
        return value.evaluate(point)
    return value


def render(value: RingElement) -> str:
    """Canonical text form shared by reports and CLI output."""
    return str(value)


def parity_sign(m: int) -> int:
    """(-1)**(m*(m+1)/2): +1 exactly when m mod 4 is 0 or 3."""
    if m < 0:
        raise ValueError("parity_sign needs m >= 0")
    return -1 if (m * (m + 1) // 2) % 2 else 1
