"""Exact arithmetic: dense big-integer polynomials and the real quadratic field Q(sqrt5).

Rationals are plain ``fractions.Fraction`` (always reduced, positive
denominator). A ``GoldenValue`` is a + b*sqrt(5) with rational a, b; the
golden ratio tau = (1+sqrt5)/2 and the golden point tau+1 live here, and all
comparisons are decided exactly, never through floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import mpmath as mp

from .errors import DivideByZero, DivisionNotExact, InvalidParameter

RationalLike = Union[int, Fraction]


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


class GoldenValue:
    """An exact element a + b*sqrt(5) of Q(sqrt5), with Fraction coordinates.

    Values are immutable and hashable; arithmetic is exact field arithmetic.
    Because every element is a real number, abs() is just a sign flip.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenValue is immutable")

    # -- construction helpers -------------------------------------------------

    @staticmethod
    def _coerce(x) -> "GoldenValue":
        if isinstance(x, GoldenValue):
            return x
        if isinstance(x, (int, Fraction)):
            return GoldenValue(x)
        return NotImplemented

    # -- ring/field operations ------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenValue(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenValue(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenValue(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise DivideByZero("division by zero GoldenValue")
        n = other.norm()
        # 1/(a+b*sqrt5) = (a-b*sqrt5)/(a^2-5b^2); the norm is nonzero for
        # nonzero elements because sqrt5 is irrational.
        return GoldenValue(
            (self.a * other.a - 5 * self.b * other.b) / n,
            (self.b * other.a - self.a * other.b) / n,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GoldenValue(-self.a, -self.b)

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = GoldenValue(1) / self
            k = -k
        result = GoldenValue(1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "GoldenValue":
        """Galois conjugate a - b*sqrt(5)."""
        return GoldenValue(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 5 b^2 (a rational)."""
        return self.a * self.a - 5 * self.b * self.b

    # -- exact predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt5."""
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # a and b have opposite signs: compare |a| against sqrt5*|b| via squares
        d = self.a * self.a - 5 * self.b * self.b
        if d == 0:
            return 0  # unreachable: would force sqrt5 rational
        return sa if d > 0 else sb

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() >= 0

    # -- numeric export -------------------------------------------------------

    def to_mpf(self, precision_bits: int = 53) -> "FloatApprox":
        """Approximate as an mpmath float within relative error
        2**(1-precision_bits).

        a and -b*sqrt5 can cancel almost completely (conjugates of golden
        powers are huge), so the working precision escalates until the
        rounding-error bound is provably below the requested relative error.
        """
        if precision_bits < 1:
            raise InvalidParameter("precision_bits must be positive")
        if self.is_zero():
            return FloatApprox(mp.mpf(0), 2.0 ** (1 - precision_bits))
        work = precision_bits + 12
        while True:
            with mp.workprec(work):
                va = mp.mpf(self.a.numerator) / self.a.denominator
                v = va
                mag = abs(va)
                if self.b:
                    vb = mp.mpf(self.b.numerator) / self.b.denominator * mp.sqrt(5)
                    v = va + vb
                    mag += abs(vb)
                v = +v
                # <= 5 rounded operations, each within mag * 2**(1-work)
                err = mag * mp.mpf(2) ** (4 - work)
                if v and err <= abs(v) * mp.mpf(2) ** (-precision_bits - 1):
                    return FloatApprox(v, 2.0 ** (1 - precision_bits))
            work *= 2

    def __float__(self):
        return float(self.to_mpf(60).value)

    # -- formatting / serialization -------------------------------------------

    def __repr__(self):
        return f"GoldenValue({self.a!r}, {self.b!r})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt5"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt5"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @classmethod
    def from_json(cls, obj: dict) -> "GoldenValue":
        return cls(Fraction(obj["a"]), Fraction(obj["b"]))


@dataclass(frozen=True)
class FloatApprox:
    """A floating approximation together with its relative error bound."""

    value: mp.mpf
    rel_bound: float

    def __float__(self):
        return float(self.value)


ZERO = GoldenValue(0)
ONE = GoldenValue(1)
SQRT5 = GoldenValue(0, 1)
TAU = GoldenValue(Fraction(1, 2), Fraction(1, 2))
GOLDEN_POINT = TAU + 1  # tau + 1 = tau^2 = (3+sqrt5)/2


def golden_sign(x: GoldenValue) -> int:
    return x.sign()


def tau_power(k: int) -> GoldenValue:
    """Exact tau**k for any integer k (tau**-1 = tau - 1)."""
    return TAU ** k


def golden_to_float(x: GoldenValue, precision_bits: int = 53) -> FloatApprox:
    return x.to_mpf(precision_bits)


class IntPoly:
    """Dense univariate polynomial in q with big-integer coefficients.

    Coefficients are stored ascending with no trailing zeros; the zero
    polynomial is the empty tuple. Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls((0,) * k + (c,))

    @classmethod
    def from_int_roots(cls, roots: Iterable[int]) -> "IntPoly":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise InvalidParameter("polynomial exponent must be a nonnegative int")
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def div_exact(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient over the integers; raises if the division leaves
        a remainder or a non-integer quotient coefficient."""
        other = _coerce_poly(other)
        if other.is_zero():
            raise DivideByZero("polynomial division by zero")
        if self.is_zero():
            return IntPoly()
        if self.degree < other.degree:
            raise DivisionNotExact("degree of dividend below divisor")
        rem = [Fraction(c) for c in self.coeffs]
        div = other.coeffs
        dq = len(rem) - len(div)
        quot = [Fraction(0)] * (dq + 1)
        lead = Fraction(div[-1])
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] / lead
            quot[k] = c
            if c:
                for j, d in enumerate(div):
                    rem[k + j] -= c * d
        if any(rem):
            raise DivisionNotExact("nonzero remainder")
        if any(c.denominator != 1 for c in quot):
            raise DivisionNotExact("quotient not integral")
        return IntPoly(int(c) for c in quot)

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    # -- evaluation -----------------------------------------------------------

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, GoldenValue, mpf, mpc."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return 0 * x  # zero of the right type
        return acc

    def eval_golden(self, x: GoldenValue) -> GoldenValue:
        acc = GoldenValue(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of p(x) at a rational point, in integer arithmetic."""
        x = Fraction(x)
        num, den = x.numerator, x.denominator
        acc = 0
        dp = 1
        for c in reversed(self.coeffs):
            acc = acc * num + c * dp
            dp *= den
        return _sign(acc)

    def sign_at_neg_inf(self) -> int:
        if self.is_zero():
            return 0
        return _sign(self.leading) * (-1 if self.degree % 2 else 1)

    def sign_at_pos_inf(self) -> int:
        return _sign(self.leading) if not self.is_zero() else 0

    # -- comparisons / formatting ----------------------------------------------

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            elif i == 1:
                term = "q" if mag == 1 else f"{mag}*q"
            else:
                term = f"q^{i}" if mag == 1 else f"{mag}*q^{i}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "IntPoly":
        return cls(int(c) for c in obj["coeffs"])


def _coerce_poly(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    return NotImplemented


#: The polynomial q.
Q = IntPoly((0, 1))


def poly_eval_golden(p: IntPoly, x: GoldenValue) -> GoldenValue:
    return p.eval_golden(x)


def falling_factorial_poly(j: int) -> IntPoly:
    """q(q-1)...(q-j+1); for j >= 1 this is the chromatic polynomial of K_j."""
    if j < 0:
        raise InvalidParameter("falling factorial needs j >= 0")
    return IntPoly.from_int_roots(range(j))
