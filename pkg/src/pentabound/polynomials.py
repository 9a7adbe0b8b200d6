"""Exact univariate arithmetic in the indeterminate k: polynomials with
rational coefficients, normalized rational functions, and series in a
perturbation variable eps whose coefficients are rational functions.

Also the integer-argument nonnegativity prover: an exact sweep over
k0..sweep_max combined with a leading-coefficient sign argument beyond the
Cauchy root bound. No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import ceil, gcd


class Poly:
    """Dense polynomial over the rationals; index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([Fraction(c)])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, e: int) -> "Poly":
        return cls([0] * e + [Fraction(c)])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def eval(self, x) -> Fraction:
        """Exact evaluation at a rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.leading
        while len(rem) - 1 >= d and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            shift = len(rem) - 1 - d
            factor = rem[-1] / lead
            quo[shift] = factor
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= factor * c
            rem.pop()
        return Poly(quo), Poly(rem)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd by the Euclidean algorithm."""
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        if a.is_zero:
            return a
        return a * (1 / a.leading)

    def scale_to_integer(self) -> tuple["Poly", Fraction]:
        """Primitive integer-coefficient multiple; returns (poly, factor)
        with self = factor * poly and poly having coprime int coefficients,
        positive leading coefficient."""
        if self.is_zero:
            return self, Fraction(1)
        denom = reduce(lambda acc, c: acc * c.denominator // gcd(acc, c.denominator), self.coeffs, 1)
        ints = [int(c * denom) for c in self.coeffs]
        content = reduce(gcd, (abs(v) for v in ints))
        if ints[-1] < 0:
            content = -content
        prim = Poly([v // content for v in ints])
        return prim, Fraction(content, denom)

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def cauchy_bound(self) -> Fraction:
        """All real roots lie in |x| <= 1 + max|a_i|/|a_d|; beyond that the
        sign is the leading coefficient's."""
        if self.degree <= 0:
            return Fraction(0)
        lead = abs(self.leading)
        rest = max((abs(c) for c in self.coeffs[:-1]), default=Fraction(0))
        return 1 + rest / lead

    def format(self, var: str = "k") -> str:
        """Textual form like '5*k^7 - 35*k^6 + 75*k^5 - 48*k^4'."""
        if self.is_zero:
            return "0"
        parts = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}{var}" + (f"^{e}" if e > 1 else "")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self.format()})"


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+(?:/\d+)?)?\s*
        (?:\*?\s*(?P<var>[a-zA-Z]\w*)\s*(?:\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, var: str = "k") -> Poly:
    """Parse '5*k^7 - 35*k^6 + 75*k^5 - 48*k^4' (integer or a/b
    coefficients, no parentheses)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    pos = 0
    terms: dict[int, Fraction] = {}
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at: {text[pos:]!r}")
        if m.group("coeff") is None and m.group("var") is None:
            raise ValueError(f"cannot parse polynomial at: {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("var") is not None:
            if m.group("var") != var:
                raise ValueError(f"unexpected variable {m.group('var')!r}")
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, Fraction(0)) + sign * coeff
        pos = m.end()
    out = [Fraction(0)] * (max(terms) + 1)
    for e, c in terms.items():
        out[e] = c
    return Poly(out)


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


class RationalFunction:
    """Quotient of polynomials, kept in a canonical normalized form:
    common polynomial factor cancelled, both parts primitive with integer
    coefficients, denominator leading coefficient positive. Equality is
    structural."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = Poly([])
            self.den = Poly.const(1)
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        nprim, nfac = num.scale_to_integer()
        dprim, dfac = den.scale_to_integer()
        ratio = nfac / dfac
        nint = nprim * Fraction(ratio.numerator)
        dint = dprim * Fraction(ratio.denominator)
        if dint.leading < 0:
            nint = -nint
            dint = -dint
        self.num = nint
        self.den = dint

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls(Poly.const(c))

    @classmethod
    def from_laurent(cls, terms: dict[int, object], var_power_floor: int | None = None) -> "RationalFunction":
        """Sum of c * k^e with possibly negative exponents e."""
        floor_e = min(min(terms), 0) if terms else 0
        if var_power_floor is not None:
            floor_e = min(floor_e, var_power_floor)
        shift = -floor_e
        num = Poly([])
        for e, c in terms.items():
            num = num + Poly.monomial(c, e + shift)
        return cls(num, Poly.monomial(1, shift))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-_as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return _as_rf(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return _as_rf(other) / self

    def __pow__(self, e: int) -> "RationalFunction":
        if e < 0:
            return RationalFunction(self.den, self.num) ** (-e)
        return RationalFunction(self.num**e, self.den**e)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def eval(self, x) -> Fraction:
        d = self.den.eval(x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        return self.num.eval(x) / d

    def format(self, var: str = "k") -> str:
        if self.den == Poly.const(1):
            return self.num.format(var)
        return f"({self.num.format(var)}) / ({self.den.format(var)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.format()})"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Poly)):
        return RationalFunction(x if isinstance(x, Poly) else Poly.const(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")


K = RationalFunction(Poly.x())


class EpsPoly:
    """Polynomial in a perturbation variable whose coefficients are
    rational functions in k; coeffs[i] multiplies eps^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [_as_rf(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "EpsPoly":
        return cls([_as_rf(c)])

    @classmethod
    def eps(cls) -> "EpsPoly":
        return cls([RationalFunction.const(0), RationalFunction.const(1)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, i: int) -> RationalFunction:
        if i < len(self.coeffs):
            return self.coeffs[i]
        return RationalFunction.const(0)

    def __add__(self, other) -> "EpsPoly":
        other = _as_eps(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return EpsPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "EpsPoly":
        return EpsPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "EpsPoly":
        return self + (-_as_eps(other))

    def __rsub__(self, other) -> "EpsPoly":
        return _as_eps(other) + (-self)

    def __mul__(self, other) -> "EpsPoly":
        other = _as_eps(other)
        if not self.coeffs or not other.coeffs:
            return EpsPoly([])
        out = [RationalFunction.const(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return EpsPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "EpsPoly":
        if e < 0:
            raise ValueError("negative power")
        result = EpsPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, EpsPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"EpsPoly(degree={self.degree})"


def _as_eps(x) -> EpsPoly:
    if isinstance(x, EpsPoly):
        return x
    if isinstance(x, (int, Fraction, Poly, RationalFunction)):
        return EpsPoly.const(_as_rf(x))
    raise TypeError(f"cannot coerce {type(x).__name__} to EpsPoly")


def eps_expand_collect(expr: EpsPoly) -> list[RationalFunction]:
    """Ordered coefficient list [eps^0, eps^1, ...]."""
    return list(expr.coeffs)


class NonnegVerdict:
    """Outcome of prove_nonneg_int. status is 'holds', 'fails_at', or
    'inconclusive'. fails_at carries witness (a k with R(k) < 0) or
    den_root (a k >= k0 where the denominator vanishes). inconclusive
    carries required_sweep, the sweep bound that would settle the claim."""

    __slots__ = ("status", "witness", "den_root", "required_sweep")

    def __init__(self, status, witness=None, den_root=None, required_sweep=None):
        self.status = status
        self.witness = witness
        self.den_root = den_root
        self.required_sweep = required_sweep

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def __repr__(self) -> str:
        extra = ""
        if self.witness is not None:
            extra = f", witness={self.witness}"
        if self.den_root is not None:
            extra += f", den_root={self.den_root}"
        if self.required_sweep is not None:
            extra += f", required_sweep={self.required_sweep}"
        return f"NonnegVerdict({self.status}{extra})"


def prove_nonneg_int(R: RationalFunction, k0: int, sweep_max: int = 1000) -> NonnegVerdict:
    """Prove R(k) >= 0 for every integer k >= k0.

    Exact evaluation at each integer k0..sweep_max, then a tail argument:
    beyond the Cauchy root bound of numerator and denominator both keep
    the sign of their leading coefficients, so R has constant sign there.
    'holds' is returned only when the sweep covers the bound and the tail
    sign is nonnegative.
    """
    R = _as_rf(R)
    if R.is_zero:
        return NonnegVerdict("holds")
    bound = max(R.num.cauchy_bound(), R.den.cauchy_bound())
    required = max(k0, ceil(bound))
    for k in range(k0, sweep_max + 1):
        d = R.den.eval(k)
        if d == 0:
            return NonnegVerdict("fails_at", den_root=k)
        if R.num.eval(k) / d < 0:
            return NonnegVerdict("fails_at", witness=k)
    tail_sign = (1 if R.num.leading > 0 else -1) * (1 if R.den.leading > 0 else -1)
    if sweep_max < required:
        return NonnegVerdict("inconclusive", required_sweep=required)
    if tail_sign < 0:
        witness = required + 1
        assert R.eval(witness) < 0
        return NonnegVerdict("fails_at", witness=witness)
    return NonnegVerdict("holds")
