"""Exact enumerations of the rationals.

Three deterministic streams, all in exact Fraction arithmetic:

* the Calkin-Wilf walk of the positive rationals (each appears exactly once,
  O(1) arithmetic per step),
* an enumeration of all of Q: 0 first, then the walk interleaved with its
  negatives,
* an enumeration of Q within (0,1): reduced fractions by denominator, then
  numerator.

RationalEnumeration wraps a stream with an index cache so procedures can
speak of "the least index whose value satisfies P" and replay byte-identically
across runs.
"""

import math
from fractions import Fraction
from typing import Callable, Iterator

from .errors import InputError, ResourceError


def calkin_wilf() -> Iterator[Fraction]:
    """Positive rationals: 1, 1/2, 2, 1/3, 3/2, 2/3, 3, 1/4, 4/3, ...

    Successor rule: q -> 1/(2*floor(q) - q + 1).
    """
    q = Fraction(1)
    while True:
        yield q
        q = 1 / (2 * (q.numerator // q.denominator) - q + 1)


def enum_all_rationals() -> Iterator[Fraction]:
    """All of Q: 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3/2, -3/2, ..."""
    yield Fraction(0)
    for q in calkin_wilf():
        yield q
        yield -q


def enum_unit_rationals() -> Iterator[Fraction]:
    """Q within (0,1), reduced, by denominator then numerator:
    1/2, 1/3, 2/3, 1/4, 3/4, 1/5, 2/5, 3/5, 4/5, 1/6, 5/6, 1/7, ...
    """
    den = 2
    while True:
        for num in range(1, den):
            if math.gcd(num, den) == 1:
                yield Fraction(num, den)
        den += 1


class RationalEnumeration:
    """An indexed rational stream with a growable cache.

    value_at(i) is total for i >= 0.  scan(pred) returns the least
    (index, value) with pred(value) true; the cap turns a runaway scan into
    a ResourceError instead of a hang.
    """

    def __init__(self, factory: Callable[[], Iterator[Fraction]],
                 name: str, cap: int = 1_000_000):
        self._iter = factory()
        self._cache: list[Fraction] = []
        self.name = name
        self.cap = cap

    def _grow_to(self, n: int) -> None:
        if n > self.cap:
            raise ResourceError(
                f"enumeration {self.name}: refusing to materialize more than "
                f"{self.cap} terms")
        while len(self._cache) < n:
            self._cache.append(next(self._iter))

    def value_at(self, i: int) -> Fraction:
        if i < 0:
            raise InputError(f"enumeration index must be >= 0, got {i}")
        self._grow_to(i + 1)
        return self._cache[i]

    def prefix(self, n: int) -> list[Fraction]:
        self._grow_to(n)
        return self._cache[:n]

    def scan(self, pred: Callable[[Fraction], bool]) -> tuple[int, Fraction]:
        """Least (index, value) with pred(value), in stream order."""
        i = 0
        while True:
            q = self.value_at(i)
            if pred(q):
                return i, q
            i += 1

    def index_of(self, q: Fraction) -> int:
        i, _ = self.scan(lambda v: v == q)
        return i


def all_rationals() -> RationalEnumeration:
    return RationalEnumeration(enum_all_rationals, "Q")


def unit_rationals() -> RationalEnumeration:
    return RationalEnumeration(enum_unit_rationals, "Q(0,1)")


def is_dyadic_unit(r: Fraction) -> bool:
    """True when r = j/2^k lies in (0,1) with odd j (reduced form)."""
    d = r.denominator
    return 0 < r < 1 and (d & (d - 1)) == 0


def dyadic_neighbors(r: Fraction) -> tuple[Fraction, Fraction]:
    """For dyadic r = j/2^k in (0,1), the bracketing pair among strictly
    coarser dyadics together with 0 and 1: ((j-1)/2^k, (j+1)/2^k) reduced.
    """
    if not is_dyadic_unit(r):
        raise InputError(f"not a dyadic rational in (0,1): {r}")
    k = r.denominator
    return Fraction(r.numerator - 1, k), Fraction(r.numerator + 1, k)


def dyadics_by_level(max_level: int) -> Iterator[Fraction]:
    """Dyadics in (0,1) level by level: 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, ..."""
    for k in range(1, max_level + 1):
        for j in range(1, 2 ** k, 2):
            yield Fraction(j, 2 ** k)
