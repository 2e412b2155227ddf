"""Order-n recurrences for both sum families, forward evaluation, and exact
minimal-recurrence fitting.

Coefficient vectors follow the descending convention

    c_n * x_n + c_{n-1} * x_{n-1} + ... + c_0 * x_0 = 0

with c_n = 1.  The family generators come from the characteristic
polynomials (x - 1)^n - 1 (plain) and (x - 1)^n + 1 (alternating): the
plain/even and star/odd cases end in a zero constant term, the other two in
-2 or +2, and trailing zeros are kept so the stored rows match the full
length-n+1 presentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DivisibilityError, InsufficientSeedsError
from .sums import KIND_PLAIN, direct_sum, normalize_kind


@dataclass(frozen=True)
class RecurrenceSpec:
    """Monic integer recurrence plus seed values."""

    coeffs: tuple[int, ...]   # descending: [c_n, ..., c_0], c_n = 1
    seeds: tuple[int, ...]
    family: str = "custom"

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError(f"recurrence must be monic, got {self.coeffs}")
        if len(self.seeds) < self.effective_order:
            raise InsufficientSeedsError(
                f"{len(self.seeds)} seeds < effective order {self.effective_order}")

    @property
    def effective_order(self) -> int:
        """Order with trailing zero coefficients stripped."""
        coeffs = self.coeffs
        k = len(coeffs)
        while k > 1 and coeffs[k - 1] == 0:
            k -= 1
        return k - 1


def recurrence_coeffs(n: int, family: str) -> RecurrenceSpec:
    """The length-(n+1) coefficient row for T(n, 0, .) or T*(n, 0, .).

    Characteristic polynomial (x-1)^n - 1 for the plain family and
    (x-1)^n + 1 for the alternating one; seeds are the n leading 1s.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    family = normalize_kind(family)
    coeffs = [(-1) ** j * comb(n, j) for j in range(n + 1)]
    coeffs[n] += -1 if family == KIND_PLAIN else 1
    return RecurrenceSpec(tuple(coeffs), (1,) * n, family)


def recur_eval(spec: RecurrenceSpec, m: int) -> int:
    """Term m by forward iteration from the seeds."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if m < len(spec.seeds):
        return spec.seeds[m]
    order = spec.effective_order
    if order == 0:
        return 0
    taps = spec.coeffs[1:order + 1]
    window = list(spec.seeds[len(spec.seeds) - order:])
    for _ in range(len(spec.seeds), m + 1):
        nxt = -sum(c * x for c, x in zip(taps, reversed(window)))
        window.append(nxt)
        window.pop(0)
    return window[-1]


def recur_terms(spec: RecurrenceSpec, count: int) -> list[int]:
    """First `count` terms (cheaper than repeated recur_eval calls)."""
    terms = list(spec.seeds[:count])
    order = spec.effective_order
    taps = spec.coeffs[1:order + 1]
    while len(terms) < count:
        n = len(terms)
        terms.append(-sum(taps[i - 1] * terms[n - i] for i in range(1, order + 1)))
    return terms


@dataclass(frozen=True)
class FittedRecurrence:
    """Minimal recurrence reproducing a whole sequence.

    `order` counts the full register length, including zero taps: it is the
    degree of the minimal polynomial annihilating the sequence from index 0
    (a transient start like 1, 1, 2, 4, ... forces a factor of x).
    """

    coeffs: tuple[Fraction, ...]
    order: int
    valid_up_to: int


def fit_minimal_recurrence(sequence) -> FittedRecurrence:
    """Berlekamp-Massey over exact rationals; the fit replays exactly.

    Returns monic descending coefficients [1, c_1, ..., c_L] with
    x_n + c_1 x_{n-1} + ... + c_L x_{n-L} = 0 for every n >= L in range.
    """
    seq = [Fraction(x) for x in sequence]
    cur = [Fraction(1)]
    prev = [Fraction(1)]
    order = 0
    gap = 1
    last_disc = Fraction(1)
    for n, term in enumerate(seq):
        disc = term
        for i in range(1, order + 1):
            disc += cur[i] * seq[n - i]
        if disc == 0:
            gap += 1
            continue
        scale = disc / last_disc
        update = cur[:]
        if len(update) < len(prev) + gap:
            update.extend([Fraction(0)] * (len(prev) + gap - len(update)))
        for i, p in enumerate(prev):
            update[i + gap] -= scale * p
        if 2 * order <= n:
            prev, last_disc, gap, order = cur, disc, 1, n + 1 - order
        else:
            gap += 1
        cur = update
        if len(cur) < order + 1:
            cur.extend([Fraction(0)] * (order + 1 - len(cur)))
    coeffs = cur[:order + 1]
    coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
    fitted = FittedRecurrence(tuple(coeffs), order, len(seq) - 1)
    _assert_replay(fitted, seq)
    return fitted


def _assert_replay(fit: FittedRecurrence, seq: list[Fraction]):
    order = fit.order
    for n in range(order, len(seq)):
        acc = seq[n]
        for i in range(1, order + 1):
            acc += fit.coeffs[i] * seq[n - i]
        if acc != 0:
            raise ArithmeticError(
                f"fitted recurrence fails to replay at index {n}")


def composite_sequence(n: int, d: int, m: int) -> int:
    """d*T(n, 0, m) - T(n/d, 0, m); an integer sequence of order n - n/d."""
    if d < 2 or n % d != 0:
        raise DivisibilityError(f"d={d} must be a divisor >= 2 of n={n}")
    return d * direct_sum(n, 0, m) - direct_sum(n // d, 0, m)
