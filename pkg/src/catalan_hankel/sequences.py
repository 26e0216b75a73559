"""Weight sequences, the shift operator E, and the Catalan-like triangle.

A weight sequence s assigns a ring element s_k to every height k >= 0.
The triangle a[n][k] grows by the three-term step

    a[n][k] = a[n-1][k-1] + s_k * a[n-1][k] + a[n-1][k+1]

from a[0][k] = [k == 0], which counts weighted 3-step lattice paths
(up/down/level, level steps at height j weighing s_j).  A brute-force path
enumerator is kept alongside as an independent oracle.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ring import C, RingElement, render

#: Path enumeration is exponential; refuse lengths beyond this.
ORACLE_LIMIT = 14


class OutOfRangeError(IndexError):
    """A row beyond the table's depth was requested; rebuild deeper."""


class TooLargeError(ValueError):
    """Path enumeration was asked for a length beyond ORACLE_LIMIT."""


class WeightSpec:
    """Base for weight-sequence descriptions; subclasses define at(k)."""

    def at(self, k: int) -> RingElement:
        raise NotImplementedError

    def describe(self) -> str:
        """Text form accepted by parse_weight_spec (for int / c entries)."""
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(WeightSpec):
    """s_k = value for every k."""

    value: RingElement

    def at(self, k):
        if k < 0:
            raise ValueError("weight index must be >= 0")
        return self.value

    def describe(self):
        return f"const:{render(self.value)}"


@dataclass(frozen=True)
class Explicit(WeightSpec):
    """A stored prefix followed by a constant tail (default 0)."""

    values: tuple
    tail: RingElement = 0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def at(self, k):
        if k < 0:
            raise ValueError("weight index must be >= 0")
        return self.values[k] if k < len(self.values) else self.tail

    def describe(self):
        body = ",".join(render(v) for v in self.values)
        return f"explicit:{body};tail={render(self.tail)}"


@dataclass(frozen=True)
class Shifted(WeightSpec):
    """The base sequence with the first `offset` entries dropped."""

    base: WeightSpec
    offset: int

    def __post_init__(self):
        if self.offset < 0:
            raise ValueError("shift offset must be >= 0")

    def at(self, k):
        if k < 0:
            raise ValueError("weight index must be >= 0")
        return self.base.at(k + self.offset)

    def describe(self):
        return f"shift^{self.offset}:{self.base.describe()}"


def weight_at(w: WeightSpec, k: int) -> RingElement:
    """s_k as w defines it."""
    return w.at(k)


def shift(w: WeightSpec) -> WeightSpec:
    """One application of E: (s_0, s_1, ...) -> (s_1, s_2, ...)."""
    if isinstance(w, Constant):
        return w
    if isinstance(w, Shifted):
        return Shifted(w.base, w.offset + 1)
    return Shifted(w, 1)


@dataclass(frozen=True)
class AdmissibleTable:
    """Immutable triangle a[n][k] for 0 <= k <= n <= max_n."""

    spec: WeightSpec
    max_n: int
    rows: tuple


def admissible_table(w: WeightSpec, max_n: int) -> AdmissibleTable:
    """Build the triangle row by row up to row max_n."""
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    weights = [w.at(k) for k in range(max_n + 1)]
    rows = [(1,)]
    for n in range(1, max_n + 1):
        prev = rows[-1]

        def above(k):
            return prev[k] if 0 <= k < n else 0

        rows.append(
            tuple(above(k - 1) + weights[k] * above(k) + above(k + 1) for k in range(n + 1))
        )
    return AdmissibleTable(w, max_n, tuple(rows))


def column(table: AdmissibleTable, k: int, n: int) -> RingElement:
    """a[n][k], with the conventions a[n][k] = 0 for n < 0 or k > n."""
    if k < 0:
        raise ValueError("column index must be >= 0")
    if n < 0:
        return 0
    if n > table.max_n:
        raise OutOfRangeError(f"row {n} exceeds table depth {table.max_n}")
    return table.rows[n][k] if k <= n else 0


def paths_oracle(w: WeightSpec, n: int, k: int) -> RingElement:
    """Weight of all up/down/level paths of length n from height 0 to k.

    Exhaustive enumeration, independent of the triangle recurrence; the
    guard keeps the 3**n search tractable.
    """
    if n < 0 or k < 0:
        raise ValueError("length and height must be >= 0")
    if n > ORACLE_LIMIT:
        raise TooLargeError(f"path length {n} exceeds oracle limit {ORACLE_LIMIT}")
    total = 0

    def walk(steps, height, weight):
        nonlocal total
        if abs(height - k) > steps:
            return
        if steps == 0:
            total += weight
            return
        walk(steps - 1, height + 1, weight)
        if height > 0:
            walk(steps - 1, height - 1, weight)
        walk(steps - 1, height, weight * w.at(height))

    walk(n, 0, 1)
    return total


_SHIFT_RE = re.compile(r"^shift(?:\^(\d+))?$")


def _parse_value(token: str) -> RingElement:
    token = token.strip()
    if token == "c":
        return C
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"bad weight value {token!r}: expected an integer or 'c'") from None


def parse_weight_spec(text: str) -> WeightSpec:
    """Parse 'const:1', 'const:c', 'explicit:1,0;tail=0', 'shift^2:<spec>'."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"bad weight spec {text!r}: missing ':'")
    head = head.strip()
    if head == "const":
        return Constant(_parse_value(rest))
    if head == "explicit":
        body, _, tail_part = rest.partition(";")
        tail: RingElement = 0
        if tail_part:
            key, eq, tail_value = tail_part.partition("=")
            if key.strip() != "tail" or not eq:
                raise ValueError(f"bad weight spec {text!r}: expected ';tail=<value>'")
            tail = _parse_value(tail_value)
        values = [_parse_value(tok) for tok in body.split(",") if tok.strip()]
        return Explicit(tuple(values), tail)
    m = _SHIFT_RE.match(head)
    if m:
        offset = int(m.group(1)) if m.group(1) else 1
        return Shifted(parse_weight_spec(rest), offset)
    raise ValueError(
        f"bad weight spec {text!r}: expected const:, explicit:, or shift^j: prefix"
    )
