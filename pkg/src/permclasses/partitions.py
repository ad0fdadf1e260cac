"""Exact partition numbers and analytic bounds on them."""

from __future__ import annotations

import threading
from dataclasses import dataclass

import mpmath


class PartitionTable:
    """p(0), p(1), ... via Euler's pentagonal recurrence, grown on demand."""

    def __init__(self):
        self.values = [1]
        self._lock = threading.Lock()

    def _extend(self, n: int) -> None:
        with self._lock:
            vals = self.values
            target = max(n, 2 * len(vals))
            for m in range(len(vals), target + 1):
                total = 0
                k = 1
                while True:
                    g1 = k * (3 * k - 1) // 2
                    if g1 > m:
                        break
                    sign = 1 if k % 2 else -1
                    total += sign * vals[m - g1]
                    g2 = g1 + k
                    if g2 <= m:
                        total += sign * vals[m - g2]
                    k += 1
                vals.append(total)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n >= len(self.values):
            self._extend(n)
        return self.values[n]


_TABLE = PartitionTable()


def partition_number(n: int) -> int:
    if n < 0:
        raise ValueError("p(n) needs n >= 0")
    return _TABLE[n]


def tuple_partition_count(k: int, n: int) -> int:
    """Number of k-tuples of partitions whose sizes sum to n."""
    if k < 1 or n < 0:
        raise ValueError("needs k >= 1 and n >= 0")
    p = [partition_number(i) for i in range(n + 1)]
    row = p[:]
    # Repeated squaring on the coefficient lists keeps huge k cheap.
    result = [1] + [0] * n
    e = k
    while e:
        if e & 1:
            result = _convolve(result, row, n)
        e >>= 1
        if e:
            row = _convolve(row, row, n)
    return result[n]


def _convolve(a: list[int], b: list[int], n: int) -> list[int]:
    return [sum(a[i] * b[m - i] for i in range(m + 1)) for m in range(n + 1)]


# -- analytic bounds --------------------------------------------------------

MARGIN = mpmath.mpf("1e-9")
START_BITS = 64
MAX_BITS = 4096


class PrecisionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class BoundSandwichReport:
    n: int
    p_n: int
    lower_ok: bool
    upper_ok: bool
    # ln p(n) - lower exponent, upper exponent - ln p(n)
    lower_margin: str
    upper_margin: str
    bits: int

    @property
    def holds(self) -> bool:
        return self.lower_ok and self.upper_ok


def bound_sandwich(n: int) -> BoundSandwichReport:
    """Compare ln p(n) with 2.5 sqrt(n) - ln(13 n) and pi sqrt(2n/3).

    A verdict is issued only once both margins exceed 1e-9 in absolute
    value; otherwise the working precision doubles up to ``MAX_BITS``.
    """
    if n < 1:
        raise ValueError("bound_sandwich needs n >= 1")
    p = partition_number(n)
    bits = START_BITS
    while bits <= MAX_BITS:
        with mpmath.workprec(bits):
            log_p = mpmath.log(mpmath.mpf(p))
            lower = 2.5 * mpmath.sqrt(n) - mpmath.log(13 * n)
            upper = mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3)
            lo_margin = log_p - lower
            up_margin = upper - log_p
            if abs(lo_margin) > MARGIN and abs(up_margin) > MARGIN:
                return BoundSandwichReport(
                    n, p, lo_margin > 0, up_margin > 0,
                    mpmath.nstr(lo_margin, 20), mpmath.nstr(up_margin, 20), bits,
                )
        bits *= 2
    raise PrecisionError(f"margin below {MARGIN} at n={n} even with {MAX_BITS} bits")


def hr_asymptotic(n: int, digits: int = 30) -> mpmath.mpf:
    """Leading asymptotic term exp(pi sqrt(2n/3)) / (4 n sqrt 3)."""
    if n < 1:
        raise ValueError("needs n >= 1")
    with mpmath.workdps(digits):
        return +(mpmath.exp(mpmath.pi * mpmath.sqrt(mpmath.mpf(2 * n) / 3)) / (4 * n * mpmath.sqrt(3)))
