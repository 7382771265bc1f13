"""Exact scalar, polynomial, and series arithmetic over Z[w].

Every quantity in this package is a polynomial in the horizontal-step weight
w with arbitrary-precision integer coefficients (OmegaPoly), or is built from
such scalars:

  * TPoly         polynomial in t with OmegaPoly coefficients
  * TSeries       truncated power series in t, explicit truncation order
  * LaurentSeries finitely many negative t-powers plus a truncated tail
  * RationalGF    num/den pair of TPolys, expandable to a TSeries

There are no floating-point numbers and no square roots anywhere: generating
functions are produced from their algebraic or recursive characterizations,
so all coefficients stay in Z[w].  Rational numbers appear only in
binom_general (half-integer binomial coefficients), backed by
fractions.Fraction.

All values are immutable after construction and all operations are pure
functions, so values can be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .kernels import (
    vadd,
    vdivexact,
    vdivexact_int,
    veval,
    vmul,
    vneg,
    vnorm,
    vscale,
    vsub,
)


class NonUnitConstant(ValueError):
    """Series inversion requires a constant term of +1 or -1."""


class InexactDivision(ArithmeticError):
    """An exact division left a remainder; signals an implementation bug."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def binom_general(a, k: int) -> Fraction:
    """Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for rational a."""
    if k < 0:
        return Fraction(0)
    a = Fraction(a)
    num = Fraction(1)
    for i in range(k):
        num *= a - i
    return num / math.factorial(k)


class OmegaPoly:
    """Univariate polynomial in the weight w, exact integer coefficients.

    Canonical form: the stored coefficient tuple has no trailing zeros and
    the zero polynomial is the empty tuple.  Ints mix freely with OmegaPoly
    in arithmetic expressions.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        self._c = tuple(vnorm(list(coeffs)))

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        """Degree in w; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        other = as_opoly(other)
        if other is NotImplemented:
            return NotImplemented
        return _raw(vadd(self._c, other._c))

    __radd__ = __add__

    def __sub__(self, other):
        other = as_opoly(other)
        if other is NotImplemented:
            return NotImplemented
        return _raw(vsub(self._c, other._c))

    def __rsub__(self, other):
        other = as_opoly(other)
        if other is NotImplemented:
            return NotImplemented
        return _raw(vsub(other._c, self._c))

    def __neg__(self):
        return _raw(vneg(self._c))

    def __mul__(self, other):
        if isinstance(other, int):
            return _raw(vscale(self._c, other))
        if isinstance(other, OmegaPoly):
            return _raw(vmul(self._c, other._c))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = OP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = as_opoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def evaluate(self, x: int) -> int:
        """Exact Horner evaluation at an integer weight."""
        return veval(self._c, x)

    def exact_div(self, other: "OmegaPoly") -> "OmegaPoly":
        """Exact quotient self / other in Z[w]; raises InexactDivision."""
        other = as_opoly(other)
        q = vdivexact(list(self._c), list(other._c))
        if q is None:
            raise InexactDivision(f"({self}) not divisible by ({other})")
        return _raw(q)

    def exact_div_int(self, k: int) -> "OmegaPoly":
        """Exact quotient self / k for an integer k; raises InexactDivision."""
        q = vdivexact_int(self._c, k)
        if q is None:
            raise InexactDivision(f"({self}) not divisible by {k}")
        return _raw(q)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "w" if mag == 1 else f"{mag}*w"
            else:
                body = f"w^{i}" if mag == 1 else f"{mag}*w^{i}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"OmegaPoly({list(self._c)!r})"

    def to_json(self) -> list:
        """JSON value: coefficients as decimal strings, ascending powers."""
        return [str(c) for c in self._c]

    @classmethod
    def from_json(cls, data) -> "OmegaPoly":
        return cls(int(s) for s in data)


def _raw(coeffs) -> OmegaPoly:
    p = OmegaPoly.__new__(OmegaPoly)
    p._c = tuple(coeffs)
    return p


def as_opoly(x):
    """Coerce an int to OmegaPoly; pass OmegaPoly through."""
    if isinstance(x, OmegaPoly):
        return x
    if isinstance(x, int):
        return OmegaPoly((x,)) if x else OP_ZERO
    return NotImplemented


OP_ZERO = _raw(())
OP_ONE = _raw((1,))
W = _raw((0, 1))


class TPoly:
    """Polynomial in t with OmegaPoly coefficients, dense ascending order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        cs = [as_opoly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self._c = tuple(cs)

    @classmethod
    def from_ints(cls, ints) -> "TPoly":
        return cls(ints)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, n: int) -> OmegaPoly:
        if 0 <= n < len(self._c):
            return self._c[n]
        return OP_ZERO

    def constant(self) -> OmegaPoly:
        return self.coeff(0)

    def __add__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return TPoly([-c for c in self._c])

    def __mul__(self, other):
        if isinstance(other, (int, OmegaPoly)):
            k = as_opoly(other)
            return TPoly([c * k for c in self._c])
        if isinstance(other, TPoly):
            if not self._c or not other._c:
                return TP_ZERO
            out = [OP_ZERO] * (len(self._c) + len(other._c) - 1)
            for i, a in enumerate(self._c):
                if a.is_zero():
                    continue
                for j, b in enumerate(other._c):
                    out[i + j] = out[i + j] + a * b
            return TPoly(out)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = TP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _as_tpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def shift(self, k: int) -> "TPoly":
        """Multiply by t^k (k >= 0)."""
        if not self._c:
            return self
        return TPoly((OP_ZERO,) * k + self._c)

    def exact_div(self, other: "TPoly") -> "TPoly":
        """Exact quotient self / other in Z[w][t]; raises InexactDivision."""
        other = _as_tpoly(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return TP_ZERO
        if self.degree < other.degree:
            raise InexactDivision(f"degree {self.degree} < divisor degree {other.degree}")
        rem = list(self._c)
        nb = len(other._c)
        lead = other._c[-1]
        q = [OP_ZERO] * (len(rem) - nb + 1)
        for k in range(len(q) - 1, -1, -1):
            top = rem[k + nb - 1]
            if top.is_zero():
                continue
            qk = top.exact_div(lead)
            q[k] = qk
            for i in range(nb):
                rem[k + i] = rem[k + i] - qk * other._c[i]
        if any(not r.is_zero() for r in rem):
            raise InexactDivision(f"({self}) not divisible by ({other})")
        return TPoly(q)

    def at_neg_t(self) -> "TPoly":
        """Substitute t -> -t: negate coefficients of odd powers."""
        return TPoly([-c if i % 2 else c for i, c in enumerate(self._c)])

    def eval_omega(self, x: int) -> "TPoly":
        """Specialize the weight w to an integer."""
        return TPoly([OmegaPoly((c.evaluate(x),)) for c in self._c])

    def to_series(self, order: int) -> "TSeries":
        return TSeries([self.coeff(n) for n in range(order + 1)], order)

    def int_coeffs(self) -> list:
        """Coefficients as plain ints; requires every coefficient constant in w."""
        out = []
        for c in self._c:
            if c.degree > 0:
                raise ValueError("coefficient still depends on w")
            out.append(c.coeffs[0] if c.coeffs else 0)
        return out

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self._c) + "]"

    def __repr__(self):
        return f"TPoly({[list(c.coeffs) for c in self._c]!r})"


def _as_tpoly(x):
    if isinstance(x, TPoly):
        return x
    if isinstance(x, (int, OmegaPoly)):
        return TPoly((as_opoly(x),))
    return NotImplemented


TP_ZERO = TPoly(())
TP_ONE = TPoly((OP_ONE,))
T = TPoly((OP_ZERO, OP_ONE))


def substitute_neg_t(p: TPoly) -> TPoly:
    """t -> -t on a polynomial (an involution)."""
    return p.at_neg_t()


class TSeries:
    """Truncated power series in t with OmegaPoly coefficients.

    Carries its truncation order N (inclusive): coefficients of t^0..t^N are
    stored and meaningful, anything beyond is unknown.  Arithmetic on series
    of orders N1 and N2 yields order min(N1, N2) and never reads past an
    operand's order.
    """

    __slots__ = ("_c", "order")

    def __init__(self, coeffs, order: int = None):
        cs = [as_opoly(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(cs) < order + 1:
            cs.extend([OP_ZERO] * (order + 1 - len(cs)))
        self._c = tuple(cs[: order + 1])
        self.order = order

    @property
    def coeffs(self) -> tuple:
        return self._c

    def coeff(self, n: int) -> OmegaPoly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self._c[n]

    def truncate(self, order: int) -> "TSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TSeries(self._c[: order + 1], order)

    def __add__(self, other):
        other = _as_tseries(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries([self._c[i] + other._c[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_tseries(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return TSeries([self._c[i] - other._c[i] for i in range(n + 1)], n)

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return TSeries([-c for c in self._c], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, OmegaPoly)):
            k = as_opoly(other)
            return TSeries([c * k for c in self._c], self.order)
        other = _as_tseries(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        out = [OP_ZERO] * (n + 1)
        for i in range(n + 1):
            a = self._c[i]
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other._c[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("use inverse() for reciprocals")
        result = TSeries([OP_ONE], self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "TSeries":
        """Multiplicative inverse up to the truncation order.

        The constant term must be +1 or -1 so that the inverse stays in Z[w];
        anything else raises NonUnitConstant.
        """
        c0 = self._c[0]
        if c0 != OP_ONE and c0 != -OP_ONE:
            raise NonUnitConstant(f"constant term {c0} is not +1 or -1")
        n = self.order
        out = [OP_ZERO] * (n + 1)
        out[0] = c0  # 1/(+-1) = +-1
        for k in range(1, n + 1):
            acc = OP_ZERO
            for i in range(1, k + 1):
                ai = self._c[i]
                if not ai.is_zero():
                    acc = acc + ai * out[k - i]
            out[k] = -(c0 * acc)
        return TSeries(out, n)

    def shift_down(self, k: int) -> "TSeries":
        """Divide by t^k; the k lowest coefficients must be exactly zero."""
        for i in range(k):
            if not self._c[i].is_zero():
                raise InexactDivision(f"coefficient of t^{i} is {self._c[i]}, not 0")
        return TSeries(self._c[k:], self.order - k)

    def eval_omega(self, x: int) -> "TSeries":
        return TSeries([OmegaPoly((c.evaluate(x),)) for c in self._c], self.order)

    def int_coeffs(self) -> list:
        out = []
        for c in self._c:
            if c.degree > 0:
                raise ValueError("coefficient still depends on w")
            out.append(c.coeffs[0] if c.coeffs else 0)
        return out

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self._c == other._c

    def __hash__(self):
        return hash((self.order, self._c))

    def __str__(self):
        return "[" + "; ".join(str(c) for c in self._c) + f"] + O(t^{self.order + 1})"

    def __repr__(self):
        return f"TSeries({[list(c.coeffs) for c in self._c]!r}, order={self.order})"

    def to_json(self) -> dict:
        return {"coeffs": [c.to_json() for c in self._c], "order": self.order}

    @classmethod
    def from_json(cls, data) -> "TSeries":
        return cls([OmegaPoly.from_json(c) for c in data["coeffs"]], data["order"])


def _as_tseries(x, order):
    if isinstance(x, TSeries):
        return x
    if isinstance(x, TPoly):
        return x.to_series(order)
    if isinstance(x, (int, OmegaPoly)):
        return TSeries([as_opoly(x)], order)
    return NotImplemented


def series_mul(a: TSeries, b: TSeries) -> TSeries:
    """Cauchy product truncated at min(order(a), order(b))."""
    return a * b


def series_inv(a: TSeries) -> TSeries:
    """Two-sided inverse up to truncation; constant term must be +1 or -1."""
    return a.inverse()


@dataclass(frozen=True)
class RationalGF:
    """Rational generating function num/den over Z[w][t].

    The denominator must have constant term +1 or -1 so the expansion stays
    in Z[w]; expand() enforces this.
    """

    num: TPoly
    den: TPoly

    def expand(self, order: int) -> TSeries:
        d0 = self.den.constant()
        if d0 != OP_ONE and d0 != -OP_ONE:
            raise NonUnitConstant(f"denominator constant term {d0} is not +1 or -1")
        out = [OP_ZERO] * (order + 1)
        for n in range(order + 1):
            acc = self.num.coeff(n)
            for k in range(1, min(n, self.den.degree) + 1):
                dk = self.den.coeff(k)
                if not dk.is_zero():
                    acc = acc - dk * out[n - k]
            out[n] = acc * d0  # d0 in {+1,-1} is its own inverse
        return TSeries(out, order)


def series_from_rational(r: RationalGF, order: int) -> TSeries:
    """Expand num/den to a truncated series; den*result reproduces num."""
    return r.expand(order)


class LaurentSeries:
    """Finitely many negative powers of t plus a truncated regular tail.

    Stores coefficients for exponents min_exp..order inclusive; normalization
    raises min_exp past leading zeros, so the coefficient at min_exp is
    nonzero except for the zero series.
    """

    __slots__ = ("min_exp", "_c")

    def __init__(self, min_exp: int, coeffs):
        cs = [as_opoly(c) for c in coeffs]
        top = min_exp + len(cs) - 1
        while cs and cs[0].is_zero():
            cs.pop(0)
            min_exp += 1
        if not cs:
            # zero series: keep any regular range as explicit zeros
            min_exp = 0
            cs = [OP_ZERO] * (top + 1) if top >= 0 else []
        self.min_exp = min_exp
        self._c = tuple(cs)

    @classmethod
    def from_series(cls, ts: TSeries, shift: int = 0) -> "LaurentSeries":
        """View a truncated series as Laurent, multiplied by t^shift."""
        return cls(shift, ts.coeffs)

    @property
    def order(self) -> int:
        return self.min_exp + len(self._c) - 1

    def coeff(self, n: int) -> OmegaPoly:
        if self.min_exp <= n <= self.order:
            return self._c[n - self.min_exp]
        if n < self.min_exp:
            return OP_ZERO
        raise IndexError(f"exponent {n} beyond order {self.order}")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self._c)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.order, other.order)
        out = []
        for n in range(lo, hi + 1):
            a = self._c[n - self.min_exp] if self.min_exp <= n <= self.order else OP_ZERO
            b = other._c[n - other.min_exp] if other.min_exp <= n <= other.order else OP_ZERO
            out.append(a + b)
        return LaurentSeries(lo, out)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.order, other.order)
        for n in range(lo, hi + 1):
            a = self._c[n - self.min_exp] if self.min_exp <= n <= self.order else OP_ZERO
            b = other._c[n - other.min_exp] if other.min_exp <= n <= other.order else OP_ZERO
            if a != b:
                return False
        return True

    def __hash__(self):
        return hash((self.min_exp, self._c))

    def __str__(self):
        parts = []
        for n in range(self.min_exp, self.order + 1):
            c = self._c[n - self.min_exp]
            if not c.is_zero():
                parts.append(f"({c})*t^{n}" if n else f"({c})")
        return " + ".join(parts) if parts else "0"

    def split(self):
        """Split into (principal part, regular part).

        The principal part holds exponents < 0, the regular part (a TSeries)
        exponents >= 0; their sum reproduces the input.
        """
        if not self._c:
            return LaurentSeries(0, ()), TSeries([OP_ZERO], 0)
        if self.min_exp >= 0:
            principal = LaurentSeries(0, ())
            regular = TSeries([self.coeff(n) for n in range(self.order + 1)], self.order)
            return principal, regular
        neg = [self._c[i] for i in range(min(-self.min_exp, len(self._c)))]
        principal = LaurentSeries(self.min_exp, neg)
        if self.order >= 0:
            regular = TSeries(self._c[-self.min_exp :], self.order)
        else:
            regular = TSeries([OP_ZERO], 0)
        return principal, regular


def laurent_split(x: LaurentSeries):
    """(principal, regular) decomposition of a Laurent series."""
    return x.split()
