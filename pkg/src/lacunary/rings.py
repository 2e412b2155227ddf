"""Arithmetic substrates: residues, Gaussian integers, roots of unity,
quotient-ring polynomials and dense matrices over any of these.

Coefficient/entry types mix freely through Python's numeric coercion:
plain ints embed into every other ring, so an integer matrix can be scaled
by a Gaussian unit or a complex root of unity and the entries widen as
expected.  All values are immutable after construction and every operation
is a pure function, so nothing here needs locking.
"""

from __future__ import annotations

import cmath
import operator

from .errors import DimensionMismatchError, NotInvertibleError


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended gcd: returns (g, x, y) with a*x + b*y = g."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


class Residue:
    """Integer residue, always normalized into [0, modulus)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise DimensionMismatchError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> "Residue":
        g, x, _ = _xgcd(self.value, self.modulus)
        if g != 1:
            raise NotInvertibleError(
                f"{self.value} is not invertible mod {self.modulus} (gcd={g})")
        return Residue(x, self.modulus)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.modulus})"


def residue_inverse(a: Residue) -> Residue:
    """Multiplicative inverse by extended gcd; NotInvertibleError otherwise."""
    return a.inverse()


class GaussianInt:
    """Gaussian integer re + im*i with exact integer parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int = 0):
        self.re = re
        self.im = im

    @staticmethod
    def _parts(other):
        if isinstance(other, GaussianInt):
            return other.re, other.im
        if isinstance(other, int):
            return other, 0
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianInt(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianInt(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return GaussianInt(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, p[0], p[1]
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return (self.re, self.im) == p

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"


class RootOfUnity:
    """omega^j for omega = e^(2*pi*i/d).

    exact_form is a GaussianInt and is present exactly when omega^j lands on
    a Gaussian unit (1, i, -1, -i), i.e. when 4*j = 0 mod d; approx_form is
    always available as a complex double.
    """

    __slots__ = ("d", "j", "exact_form", "approx_form")

    _UNITS = (GaussianInt(1), GaussianInt(0, 1), GaussianInt(-1), GaussianInt(0, -1))

    def __init__(self, d: int, j: int):
        if d < 1:
            raise ValueError(f"order must be positive, got {d}")
        self.d = d
        self.j = j % d
        if (4 * self.j) % d == 0:
            self.exact_form = self._UNITS[(4 * self.j) // d % 4]
        else:
            self.exact_form = None
        self.approx_form = cmath.exp(2j * cmath.pi * self.j / d)

    @property
    def is_exact(self) -> bool:
        return self.exact_form is not None

    def value(self):
        """Exact Gaussian unit when available, complex double otherwise."""
        return self.exact_form if self.exact_form is not None else self.approx_form

    def __repr__(self):
        return f"RootOfUnity(d={self.d}, j={self.j})"


class QuotientPoly:
    """Element of R[x]/(x^n - sigma) with sigma in {+1, -1}.

    coeffs[k] is the coefficient of x^k; reduction by x^n = sigma is applied
    eagerly, so the vector never grows past n.  With `modulus` set the
    coefficients are plain ints kept reduced mod it (the residue-ring fast
    path used for congruence work); otherwise coefficients may be ints,
    GaussianInt, complex, or anything with ring operators.
    """

    __slots__ = ("coeffs", "sigma", "n", "modulus")

    def __init__(self, coeffs, sigma: int, modulus: int | None = None):
        n = len(coeffs)
        if n < 2:
            raise DimensionMismatchError(f"dimension must be >= 2, got {n}")
        if sigma not in (1, -1):
            raise ValueError(f"sigma must be +1 or -1, got {sigma}")
        if modulus is not None:
            coeffs = [c % modulus for c in coeffs]
        self.coeffs = tuple(coeffs)
        self.sigma = sigma
        self.n = n
        self.modulus = modulus

    @classmethod
    def one(cls, n: int, sigma: int, modulus: int | None = None) -> "QuotientPoly":
        return cls([1] + [0] * (n - 1), sigma, modulus)

    @classmethod
    def one_plus_x(cls, n: int, sigma: int, modulus: int | None = None) -> "QuotientPoly":
        return cls([1, 1] + [0] * (n - 2), sigma, modulus)

    def _compatible(self, other: "QuotientPoly"):
        if self.n != other.n or self.sigma != other.sigma or self.modulus != other.modulus:
            raise DimensionMismatchError(
                f"quotient rings differ: (n={self.n}, sigma={self.sigma}, "
                f"mod={self.modulus}) vs (n={other.n}, sigma={other.sigma}, "
                f"mod={other.modulus})")

    def __add__(self, other):
        if isinstance(other, QuotientPoly):
            self._compatible(other)
            return QuotientPoly([a + b for a, b in zip(self.coeffs, other.coeffs)],
                                self.sigma, self.modulus)
        if isinstance(other, int):
            if other == 0:
                return self
            c = list(self.coeffs)
            c[0] = c[0] + other
            return QuotientPoly(c, self.sigma, self.modulus)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuotientPoly([-c for c in self.coeffs], self.sigma, self.modulus)

    def __mul__(self, other):
        if isinstance(other, QuotientPoly):
            return quotient_mul(self, other)
        if isinstance(other, int):
            return QuotientPoly([c * other for c in self.coeffs], self.sigma, self.modulus)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, m: int):
        return quotient_pow(self, m)

    def __eq__(self, other):
        if isinstance(other, QuotientPoly):
            return (self.n == other.n and self.sigma == other.sigma
                    and self.modulus == other.modulus and self.coeffs == other.coeffs)
        if isinstance(other, int):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.sigma, self.n, self.modulus))

    def __bool__(self):
        return any(self.coeffs)

    def coefficient_sum(self):
        """Value at x = 1."""
        total = self.coeffs[0]
        for c in self.coeffs[1:]:
            total = total + c
        return total

    def __repr__(self):
        tag = f", mod {self.modulus}" if self.modulus else ""
        return f"QuotientPoly({list(self.coeffs)}, x^{self.n}={self.sigma:+d}{tag})"


def quotient_mul(p1: QuotientPoly, p2: QuotientPoly) -> QuotientPoly:
    """Product in R[x]/(x^n - sigma); x^(n+k) folds to sigma*x^k eagerly."""
    p1._compatible(p2)
    n, sigma = p1.n, p1.sigma
    a, b = p1.coeffs, p2.coeffs
    out = [0] * n
    for i, ai in enumerate(a):
        if not ai:
            continue
        cut = n - i
        for j, bj in enumerate(b):
            if not bj:
                continue
            t = ai * bj
            if j < cut:
                out[i + j] = out[i + j] + t
            elif sigma == 1:
                out[i + j - n] = out[i + j - n] + t
            else:
                out[i + j - n] = out[i + j - n] - t
    return QuotientPoly(out, sigma, p1.modulus)


def quotient_pow(base: QuotientPoly, m: int) -> QuotientPoly:
    """base^m by binary square-and-multiply; m = 0 gives the identity."""
    if m < 0:
        raise ValueError(f"exponent must be non-negative, got {m}")
    result = QuotientPoly.one(base.n, base.sigma, base.modulus)
    sq = base
    while m:
        if m & 1:
            result = quotient_mul(result, sq)
        m >>= 1
        if m:
            sq = quotient_mul(sq, sq)
    return result


def _zero_like(x):
    return x * 0


def _one_like(x):
    return x * 0 + 1


class RingMatrix:
    """Dense square matrix over a pluggable ring, row-major."""

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        dim = len(rows)
        if dim == 0 or any(len(r) != dim for r in rows):
            raise DimensionMismatchError("matrix must be square and non-empty")
        self.dim = dim
        self.rows = rows

    @classmethod
    def _raw(cls, rows) -> "RingMatrix":
        m = object.__new__(cls)
        m.rows = rows
        m.dim = len(rows)
        return m

    @classmethod
    def identity(cls, dim: int, like=1) -> "RingMatrix":
        one, zero = _one_like(like), _zero_like(like)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(dim))
                              for i in range(dim)))

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def first_row(self) -> tuple:
        return self.rows[0]

    def __add__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dims differ: {self.dim} vs {other.dim}")
        return RingMatrix._raw(tuple(tuple(x + y for x, y in zip(r, s))
                                     for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatchError(f"dims differ: {self.dim} vs {other.dim}")
        return RingMatrix._raw(tuple(tuple(x - y for x, y in zip(r, s))
                                     for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return RingMatrix._raw(tuple(tuple(-x for x in r) for r in self.rows))

    def scale(self, scalar) -> "RingMatrix":
        return RingMatrix._raw(tuple(tuple(x * scalar for x in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, RingMatrix):
            return matrix_mul(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return RingMatrix._raw(tuple(tuple(scalar * x for x in r) for r in self.rows))

    def __pow__(self, m: int):
        return matrix_pow(self, m)

    def __eq__(self, other):
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.dim == other.dim and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join(str(list(r)) for r in self.rows)
        return f"RingMatrix([{body}])"


def _check_rings(A: RingMatrix, B: RingMatrix):
    a, b = A.rows[0][0], B.rows[0][0]
    if isinstance(a, Residue) and isinstance(b, Residue) and a.modulus != b.modulus:
        raise DimensionMismatchError(
            f"matrix moduli differ: {a.modulus} vs {b.modulus}")


def matrix_mul(A: RingMatrix, B: RingMatrix) -> RingMatrix:
    if A.dim != B.dim:
        raise DimensionMismatchError(f"dims differ: {A.dim} vs {B.dim}")
    _check_rings(A, B)
    cols = tuple(zip(*B.rows))
    mul = operator.mul
    rows = tuple(tuple(sum(map(mul, row, col)) for col in cols) for row in A.rows)
    return RingMatrix._raw(rows)


def matrix_pow(A: RingMatrix, m: int) -> RingMatrix:
    """A^m by binary square-and-multiply; m = 0 gives the identity."""
    if m < 0:
        raise ValueError(f"exponent must be non-negative, got {m}")
    result = RingMatrix.identity(A.dim, like=A.rows[0][0])
    sq = A
    while m:
        if m & 1:
            result = matrix_mul(result, sq)
        m >>= 1
        if m:
            sq = matrix_mul(sq, sq)
    return result
