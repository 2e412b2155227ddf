"""Ground-truth definitions of the two lacunary binomial sum families.

    T(n, r, m)  = sum of C(m, j) over 0 <= j <= m with j = r (mod n)
    T*(n, r, m) = same sum with each term weighted by (-1)^((j - r)/n)

computed by direct enumeration with exact big integers, plus the exact
identities connecting the families.  Every other engine in the package is
validated against this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DivisibilityError, ParityError

KIND_PLAIN = "plain"
KIND_STAR = "star"

_KIND_ALIASES = {
    "plain": KIND_PLAIN,
    "star": KIND_STAR,
    "alternating": KIND_STAR,
}


def normalize_kind(kind: str) -> str:
    try:
        return _KIND_ALIASES[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_KIND_ALIASES)}, got {kind!r}")


@dataclass(frozen=True)
class SumParams:
    """The query triple (n, r, m) plus the family selector.

    n >= 2 is the modulus of the lacunary sieve, r the residue class
    (normalized into [0, n)), m >= 0 the binomial row.
    """

    n: int
    r: int
    m: int
    kind: str = KIND_PLAIN

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")
        object.__setattr__(self, "r", self.r % self.n)
        object.__setattr__(self, "kind", normalize_kind(self.kind))

    @property
    def sigma(self) -> int:
        """Folding sign of the quotient ring carrying this family."""
        return 1 if self.kind == KIND_PLAIN else -1


class LacunaryValue(int):
    """An exact sum value; behaves as an int and remembers its parameters."""

    __slots__ = ("params",)

    def __new__(cls, value: int, params: SumParams):
        if params.kind == KIND_PLAIN and value < 0:
            raise ValueError(f"plain sums are non-negative, got {value} for {params}")
        self = super().__new__(cls, value)
        self.params = params
        return self

    def __repr__(self):
        return f"LacunaryValue({int(self)}, {self.params})"


def direct_sum(n: int, r: int, m: int) -> LacunaryValue:
    """T(n, r, m) by direct enumeration; the empty sum is 0."""
    params = SumParams(n, r, m, KIND_PLAIN)
    total = sum(comb(m, j) for j in range(params.r, m + 1, n))
    return LacunaryValue(total, params)


def direct_sum_alternating(n: int, r: int, m: int) -> LacunaryValue:
    """T*(n, r, m) by direct enumeration with signs (-1)^((j-r)/n)."""
    params = SumParams(n, r, m, KIND_STAR)
    r = params.r
    total = 0
    sign = 1
    for j in range(r, m + 1, n):
        total += sign * comb(m, j)
        sign = -sign
    return LacunaryValue(total, params)


def direct_engine(params: SumParams) -> LacunaryValue:
    """Dispatch the direct enumeration on params.kind."""
    if params.kind == KIND_PLAIN:
        return direct_sum(params.n, params.r, params.m)
    return direct_sum_alternating(params.n, params.r, params.m)


def star_from_plain(n: int, r: int, m: int) -> LacunaryValue:
    """T*(n, r, m) via the identity T* = 2*T(2n, r, m) - T(n, r, m)."""
    params = SumParams(n, r, m, KIND_STAR)
    value = 2 * direct_sum(2 * n, r, m) - direct_sum(n, r, m)
    return LacunaryValue(value, params)


def plain_from_halves(n: int, m: int) -> LacunaryValue:
    """T(n, 0, m) for even n as (T(n/2, 0, m) + T*(n/2, 0, m)) / 2.

    The pre-division sum is always even; a failure of that would be a bug,
    not bad input.
    """
    if n % 2 != 0:
        raise ParityError(f"n must be even, got {n}")
    params = SumParams(n, 0, m, KIND_PLAIN)
    half = n // 2
    if half < 2:
        # n = 2: T(1, 0, m) degenerates to the full row 2^m and T*(1,·) to 0^m
        total = 2 ** m + (1 if m == 0 else 0)
    else:
        total = int(direct_sum(half, 0, m)) + int(direct_sum_alternating(half, 0, m))
    if total % 2 != 0:
        raise DivisibilityError(
            f"T + T* = {total} is odd for n={n}, m={m}; halving identity broken")
    return LacunaryValue(total // 2, params)
