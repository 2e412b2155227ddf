"""Evaluation engines for the lacunary sums.

Independent routes to the same values:

* ``poly_engine``      -- coefficient r of (1+x)^m in Z[x]/(x^n - sigma),
                          exact, optionally over residues mod a given modulus;
* ``circulant_engine`` -- first row of C_n^m (or its skew variant), exact;
* ``split_engine``     -- the block decomposition of C_n into d x d compound
                          form, summed over d-th roots of unity.  Exact for
                          every divisor: d in {1, 2, 4} stays in (Gaussian)
                          integers, other d run one matrix power over the
                          cyclic group ring Z[x]/(x^d - 1) and read off the
                          constant coefficient;
* ``skew_block_engine`` -- (a - b)^m over the half-dimension blocks of
                          C_{2n}, which reproduces the alternating family;
* ``ramus_cosine``     -- the classical cosine form in double precision,
                          integer-rounded behind a confidence guard (the one
                          engine supporting general r by construction);
* ``t9_expression``    -- the mixed scalar/matrix expression for T(9, 0, m),
                          evaluated exactly through Z[x]/(x^3 - 1).
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CongruenceViolationError,
    DivisibilityError,
    FloatRangeError,
    NumericConfidenceError,
)
from .rings import (
    GaussianInt,
    QuotientPoly,
    Residue,
    RingMatrix,
    RootOfUnity,
    matrix_mul,
    matrix_pow,
    quotient_pow,
)
from .sums import KIND_PLAIN, KIND_STAR, LacunaryValue, SumParams

ROUNDING_GUARD = 0.25  # reject float results farther than this from an integer
COSINE_MAX_M = 50      # beyond this 2^m no longer fits the 53-bit double mantissa


@dataclass(frozen=True)
class CirculantSpec:
    """C_n = I + U (skew: corner entry negated)."""

    n: int
    skew: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"dimension must be >= 2, got {self.n}")

    def realize(self, modulus: int | None = None) -> RingMatrix:
        """The matrix itself: 1s on the diagonal and superdiagonal, corner +-1."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
            if i + 1 < n:
                rows[i][i + 1] = 1
        rows[n - 1][0] = -1 if self.skew else 1
        if modulus is not None:
            rows = [[Residue(v, modulus) for v in row] for row in rows]
        return RingMatrix(rows)

    def unit(self) -> RingMatrix:
        """U_n (skew: U*_n), the cyclic shift with corner entry +-1."""
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            rows[i][i + 1] = 1
        rows[n - 1][0] = -1 if self.skew else 1
        return RingMatrix(rows)


def poly_coefficients(n: int, m: int, kind: str = KIND_PLAIN,
                      modulus: int | None = None) -> tuple:
    """Full coefficient vector of (1+x)^m in Z[x]/(x^n - sigma).

    Entry r is T(n, r, m) for sigma = +1 and T*(n, r, m) for sigma = -1.
    """
    sigma = 1 if SumParams(n, 0, m, kind).kind == KIND_PLAIN else -1
    return quotient_pow(QuotientPoly.one_plus_x(n, sigma, modulus), m).coeffs


def poly_engine(params: SumParams, modulus: int | None = None):
    """Coefficient r of (1+x)^m in the quotient ring carrying params.kind."""
    coeff = poly_coefficients(params.n, params.m, params.kind, modulus)[params.r]
    if modulus is not None:
        return Residue(coeff, modulus)
    return LacunaryValue(coeff, params)


def circulant_engine(spec: CirculantSpec, m: int,
                     modulus: int | None = None) -> tuple:
    """First row of C^m; entry r equals the poly_engine coefficient r."""
    return matrix_pow(spec.realize(modulus), m).first_row()


def verify_lemma1(n: int, skew: bool = False) -> bool:
    """Check the shift-cycle facts behind the circulant representation.

    U^k for k < n has first row e_k with entry +1, U^n is I (skew: -I), and
    the (0,0) entry of C^k is 1 for every k < n.
    """
    spec = CirculantSpec(n, skew)
    unit = spec.unit()
    circ = spec.realize()
    upow = RingMatrix.identity(n)
    cpow = RingMatrix.identity(n)
    for k in range(n):
        row = upow.first_row()
        if any(row[j] != (1 if j == k else 0) for j in range(n)):
            return False
        if cpow.entry(0, 0) != 1:
            return False
        upow = matrix_mul(upow, unit)
        cpow = matrix_mul(cpow, circ)
    closure = -RingMatrix.identity(n) if skew else RingMatrix.identity(n)
    return upow == closure


@dataclass(frozen=True)
class BlockSplit:
    """C_n partitioned into a d x d compound of (n/d)-dimensional blocks.

    a is the upper-bidiagonal block, b has a single +-1 in the lower-left
    corner (negated for the skew variant).  d = 1 degenerates to a = C_n,
    b = 0.
    """

    n: int
    d: int
    skew: bool
    a: RingMatrix
    b: RingMatrix

    def reassemble(self) -> RingMatrix:
        """Rebuild the full n x n matrix; must equal CirculantSpec.realize()."""
        n, d, s = self.n, self.d, self.n // self.d
        if d == 1:
            return self.a
        super_block = -self.b if self.skew else self.b  # above-diagonal blocks stay +1
        rows = [[0] * n for _ in range(n)]
        for bi in range(d):
            for bj in range(d):
                if bi == bj:
                    block = self.a
                elif bj == bi + 1:
                    block = super_block
                elif (bi, bj) == (d - 1, 0):
                    block = self.b
                else:
                    continue
                for i in range(s):
                    for j in range(s):
                        rows[bi * s + i][bj * s + j] = block.entry(i, j)
        return RingMatrix(rows)


def block_split(n: int, d: int, skew: bool = False) -> BlockSplit:
    """Split C_n (or C*_n) into d blocks; d must divide n."""
    if d < 1 or n % d != 0:
        raise DivisibilityError(f"d={d} does not divide n={n}")
    if d == 1:
        a = CirculantSpec(n, skew).realize()
        b = RingMatrix([[0] * n for _ in range(n)])
        return BlockSplit(n, d, skew, a, b)
    s = n // d
    arows = [[1 if j in (i, i + 1) else 0 for j in range(s)] for i in range(s)]
    brows = [[0] * s for _ in range(s)]
    brows[s - 1][0] = -1 if skew else 1
    return BlockSplit(n, d, skew, RingMatrix(arows), RingMatrix(brows))


def _gaussian_parts(v) -> tuple[int, int]:
    if isinstance(v, GaussianInt):
        return v.re, v.im
    return v, 0


def split_engine(n: int, d: int, m: int) -> LacunaryValue:
    """T(n, 0, m) as (1/d) * sum over d-th roots w of (a + b*w)^m, entry (0,0).

    Exact for every divisor.  d in {1, 2, 4} evaluate the root terms
    separately in (Gaussian) integers; other d evaluate a single power of
    a + b*x over Z[x]/(x^d - 1), whose constant coefficient is the averaged
    sum over all roots.
    """
    params = SumParams(n, 0, m, KIND_PLAIN)
    split = block_split(n, d)
    a, b = split.a, split.b
    if d == 1:
        return LacunaryValue(matrix_pow(a, m).entry(0, 0), params)
    if d == 2:
        total = matrix_pow(a + b, m).entry(0, 0) + matrix_pow(a - b, m).entry(0, 0)
        if total % 2 != 0:
            raise CongruenceViolationError(
                f"split d=2 sum {total} not even at n={n}, m={m}")
        return LacunaryValue(total // 2, params)
    if d == 4:
        total = 0
        for j in range(4):
            w = RootOfUnity(4, j).exact_form
            total = total + matrix_pow(a + b.scale(w), m).entry(0, 0)
        re, im = _gaussian_parts(total)
        if im != 0 or re % 4 != 0:
            raise CongruenceViolationError(
                f"split d=4 sum {total} not a multiple of 4 at n={n}, m={m}")
        return LacunaryValue(re // 4, params)
    s = n // d
    prows = [[QuotientPoly([a.entry(i, j), b.entry(i, j)] + [0] * (d - 2), 1)
              for j in range(s)] for i in range(s)]
    power = matrix_pow(RingMatrix(prows), m)
    return LacunaryValue(power.entry(0, 0).coeffs[0], params)


def _split_float_eval(n: int, d: int, m: int) -> tuple[int, float]:
    split = block_split(n, d)
    a, b = split.a, split.b
    total = None
    for j in range(d):
        w = RootOfUnity(d, j).approx_form
        power = matrix_pow(a + b.scale(w), m)
        total = power if total is None else total + power
    z = complex(total.entry(0, 0)) / d
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise FloatRangeError(f"split float overflow at n={n}, d={d}, m={m}")
    value = round(z.real)
    dist = max(abs(z.real - value), abs(z.imag))
    if dist >= ROUNDING_GUARD:
        raise NumericConfidenceError(
            f"split float distance {dist:.3g} >= {ROUNDING_GUARD} "
            f"at n={n}, d={d}, m={m}; use the exact split")
    return value, dist


def split_engine_float(n: int, d: int, m: int) -> LacunaryValue:
    """Double-precision variant of split_engine (per-root complex powers)."""
    params = SumParams(n, 0, m, KIND_PLAIN)
    value, _ = _split_float_eval(n, d, m)
    return LacunaryValue(value, params)


def skew_block_engine(n: int, m: int) -> LacunaryValue:
    """T*(n, 0, m) as (a - b)^m over the half blocks of C_{2n}.

    a - b is entry-for-entry the skew circulant C*_n, so this is the block
    route to the alternating family.
    """
    params = SumParams(n, 0, m, KIND_STAR)
    split = block_split(2 * n, 2)
    return LacunaryValue(matrix_pow(split.a - split.b, m).entry(0, 0), params)


def _ramus_cosine_eval(params: SumParams) -> tuple[int, float]:
    if params.kind != KIND_PLAIN:
        raise ValueError("the cosine form evaluates the plain family only")
    n, r, m = params.n, params.r, params.m
    if m < 1:
        raise ValueError(f"the cosine form requires m > 0, got {m}")
    if m > COSINE_MAX_M:
        raise FloatRangeError(
            f"2^{m} exceeds the 53-bit integer precision of doubles "
            f"(limit m <= {COSINE_MAX_M}); use an exact engine")
    # pair j with n-j (equal terms); reduce the cosine argument mod 2n in
    # exact integers first -- naive large arguments lose enough precision
    # to breach the rounding guard near m = 50
    terms = [float(2 ** m)]
    for j in range(1, n // 2 + 1):
        if 2 * j == n:
            continue  # base 2cos(pi/2) = 0 contributes nothing for m >= 1
        k = (j * (m - 2 * r)) % (2 * n)
        base = 2.0 * math.cos(j * math.pi / n)
        terms.append(2.0 * base ** m * math.cos(k * math.pi / n))
    x = math.fsum(terms) / n
    value = round(x)
    dist = abs(x - value)
    if dist >= ROUNDING_GUARD:
        raise NumericConfidenceError(
            f"cosine distance {dist:.3g} >= {ROUNDING_GUARD} at "
            f"n={n}, r={r}, m={m}")
    return value, dist


def ramus_cosine(params: SumParams) -> LacunaryValue:
    """T(n, r, m) by the cosine identity, rounded double-precision."""
    value, _ = _ramus_cosine_eval(params)
    return LacunaryValue(value, params)


def cos_pi_over_3_closed(m: int) -> Fraction:
    """cos(m*pi/3) as an exact rational in quarters; period 6."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    e = (m + 1) // 3
    return Fraction((-1) ** e * (3 + (-1) ** (m + e)), 4)


def t9_expression_value(m: int) -> Fraction:
    """The exact rational value of the mixed expression for T(9, 0, m).

    (1/3) * (2^m + 2cos(m*pi/3))/3 + (2/3) * Re((a + b*w)^m)(0,0) with
    w a primitive cube root of unity and (a, b) the d=3 blocks of C_9.
    The matrix part runs over Z[x]/(x^3 - 1), where Re(c0 + c1*w + c2*w^2)
    = c0 - (c1 + c2)/2; the cosine uses its closed rational form.
    """
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    split = block_split(9, 3)
    prows = [[QuotientPoly([split.a.entry(i, j), split.b.entry(i, j), 0], 1)
              for j in range(3)] for i in range(3)]
    c0, c1, c2 = matrix_pow(RingMatrix(prows), m).entry(0, 0).coeffs
    real_part = Fraction(2 * c0 - c1 - c2, 2)
    scalar = Fraction(2 ** m + 2 * cos_pi_over_3_closed(m), 3)
    return Fraction(1, 3) * scalar + Fraction(2, 3) * real_part


def t9_expression(m: int) -> LacunaryValue:
    """T(9, 0, m) via the mixed expression; exact, so rounding is trivial."""
    exact = t9_expression_value(m)
    if exact.denominator != 1:
        raise NumericConfidenceError(
            f"expression for T(9,0,{m}) evaluated to non-integer {exact}")
    return LacunaryValue(int(exact), SumParams(9, 0, m, KIND_PLAIN))


@dataclass(frozen=True)
class EngineReport:
    """One engine evaluation: id, value, and (float paths) the observed
    distance to the nearest integer before rounding."""

    engine: str
    value: object
    float_distance: float | None = None


ENGINE_IDS = ("direct", "poly", "circulant", "recurrence", "cosine")  # plus split:<d>


def _parse_engine(engine: str) -> tuple[str, int | None]:
    if engine.startswith("split:"):
        try:
            return "split", int(engine.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad split divisor in engine id {engine!r}")
    if engine == "split":
        raise ValueError("split engine needs a divisor: split:<d>")
    if engine not in ENGINE_IDS + ("t9",):
        raise ValueError(f"unknown engine {engine!r}")
    return engine, None


def evaluate(params: SumParams, engine: str = "direct",
             modulus: int | None = None) -> EngineReport:
    """Run one engine on params and wrap the result in an EngineReport.

    Engines that only cover part of the parameter space raise ValueError on
    unsupported combinations (split/recurrence need r = 0, split/cosine/t9
    the plain family).
    """
    from . import recurrences
    from .sums import direct_engine

    name, d = _parse_engine(engine)
    dist = None
    if name == "direct":
        value = direct_engine(params)
    elif name == "poly":
        return EngineReport(engine, poly_engine(params, modulus))
    elif name == "circulant":
        row = circulant_engine(CirculantSpec(params.n, params.kind == KIND_STAR),
                               params.m, modulus)
        value = row[params.r]
        if modulus is not None:
            return EngineReport(engine, value)
        value = LacunaryValue(value, params)
    elif name == "recurrence":
        if params.r != 0:
            raise ValueError("recurrence engine evaluates r = 0 only")
        spec = recurrences.recurrence_coeffs(params.n, params.kind)
        value = LacunaryValue(recurrences.recur_eval(spec, params.m), params)
    elif name == "cosine":
        raw, dist = _ramus_cosine_eval(params)
        value = LacunaryValue(raw, params)
    elif name == "t9":
        if params.n != 9 or params.r != 0 or params.kind != KIND_PLAIN:
            raise ValueError("t9 engine evaluates T(9, 0, m) only")
        value = t9_expression(params.m)
        dist = 0.0
    else:  # split
        if params.r != 0 or params.kind != KIND_PLAIN:
            raise ValueError("split engine evaluates the plain family at r = 0 only")
        value = split_engine(params.n, d, params.m)
    if modulus is not None:
        return EngineReport(engine, Residue(int(value), modulus), dist)
    return EngineReport(engine, value, dist)


def evaluate_batch(param_list, engine: str = "direct",
                   modulus: int | None = None, jobs: int = 1) -> list[EngineReport]:
    """Evaluate a batch; results are in input order regardless of scheduling."""
    if jobs <= 1:
        return [evaluate(p, engine, modulus) for p in param_list]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(lambda p: evaluate(p, engine, modulus), param_list))
