"""Exact scalar arithmetic for alternating Hecke algebra computations.

Three layers, all immutable and hash-stable:

* :class:`GaussianRational` -- numbers a + b*sqrt(-1) with exact rational
  a and b.
* :class:`LaurentPoly` and :class:`RatFunc` -- Laurent polynomials and
  reduced rational functions in q over the Gaussian rationals.  RatFunc
  keeps a unique canonical form (coprime, denominator a polynomial with
  nonzero constant term and leading coefficient 1), so equal values have
  identical stored representations and serialize byte-identically.
* :class:`TowerElem` -- the quadratic square-root tower.  For each k >= 2
  we adjoin a formal generator y_k with y_k**2 = 1 + q^2 + ... + q^(2k-2),
  that is, y_k**2 = [k]/q for the q-integer [k].  Normalizing the radicand
  by q makes y_1**2 = 1, so y_1 collapses into the coefficient and every
  quantity computed downstream (the seminormal coefficients alpha_k, all
  character values) has integral powers of q.  A tower element is a finite
  sum of monomials y_S = prod(y_k for k in S) with RatFunc coefficients,
  multiplied by the rule y_S * y_T = (prod of radicands over S & T) * y_(S ^ T).

The tower is treated as a commutative ring, never as a field: division is
only available by RatFunc scalars.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache

#: Resource guard: widths beyond this make tower/tableau enumeration explode.
DEFAULT_N_MAX = 12


class PoleError(ArithmeticError):
    """A numeric specialization hit a vanishing denominator."""


class InvalidGeneratorError(ValueError):
    """A tower generator index below 1 was requested."""


class UndefinedAxialDistanceError(ValueError):
    """alpha_coeff(0) is undefined (axial distance zero cannot occur)."""


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------

class GaussianRational:
    """An exact number a + b*sqrt(-1) with Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if isinstance(re, Fraction) else Fraction(re))
        object.__setattr__(self, "im", im if isinstance(im, Fraction) else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- basic predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        nrm = self.re * self.re + self.im * self.im
        if not nrm:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / nrm, -self.im / nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # -- structure ----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "√-1"
            if self.im == -1:
                return "-√-1"
            return f"{self.im}·√-1"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        ipart = "√-1" if mag == 1 else f"{mag}·√-1"
        return f"({self.re}{sign}{ipart})"


G_ZERO = GaussianRational(0)
G_ONE = GaussianRational(1)
G_I = GaussianRational(0, 1)
G_HALF = GaussianRational(Fraction(1, 2))


# ---------------------------------------------------------------------------
# Laurent polynomials over the Gaussian rationals
# ---------------------------------------------------------------------------

class LaurentPoly:
    """Sparse Laurent polynomial in q; zero coefficients are never stored."""

    __slots__ = ("_c", "_hash", "_iv")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, g in coeffs.items():
                if not isinstance(g, GaussianRational):
                    g = GaussianRational(g)
                if g:
                    c[e] = g
        object.__setattr__(self, "_c", c)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_iv", False)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def _raw(c: dict) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        object.__setattr__(p, "_c", c)
        object.__setattr__(p, "_hash", None)
        object.__setattr__(p, "_iv", False)
        return p

    def _int_view(self):
        """{exp: int} when all coefficients are rational integers, else None."""
        iv = self._iv
        if iv is False:
            iv = {}
            for e, g in self._c.items():
                if g.im or g.re.denominator != 1:
                    iv = None
                    break
                iv[e] = g.re.numerator
            object.__setattr__(self, "_iv", iv)
        return iv

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls):
        return L_ZERO

    @classmethod
    def one(cls):
        return L_ONE

    @classmethod
    def term(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def q_power(cls, exp: int) -> "LaurentPoly":
        return cls({exp: 1})

    # -- inspection -------------------------------------------------------
    def items(self):
        return sorted(self._c.items())

    def coeff(self, exp: int) -> GaussianRational:
        return self._c.get(exp, G_ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def __len__(self):
        return len(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of zero polynomial")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of zero polynomial")
        return max(self._c)

    def is_one(self) -> bool:
        return len(self._c) == 1 and self._c.get(0) == G_ONE

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, g in other._c.items():
            s = c.get(e)
            if s is None:
                c[e] = g
            else:
                s = s + g
                if s:
                    c[e] = s
                else:
                    del c[e]
        return LaurentPoly._raw(c)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, g in other._c.items():
            s = c.get(e)
            if s is None:
                c[e] = -g
            else:
                s = s - g
                if s:
                    c[e] = s
                else:
                    del c[e]
        return LaurentPoly._raw(c)

    def __neg__(self):
        return LaurentPoly._raw({e: -g for e, g in self._c.items()})

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c or not other._c:
            return L_ZERO
        ia, ib = self._int_view(), other._int_view()
        if ia is not None and ib is not None:
            if len(ia) > len(ib):
                ia, ib = ib, ia
            acc = {}
            for ea, ga in ia.items():
                for eb, gb in ib.items():
                    e = ea + eb
                    acc[e] = acc.get(e, 0) + ga * gb
            return LaurentPoly._raw(
                {e: GaussianRational(v) for e, v in acc.items() if v})
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        c = {}
        for ea, ga in a.items():
            for eb, gb in b.items():
                e = ea + eb
                g = ga * gb
                s = c.get(e)
                if s is None:
                    c[e] = g
                else:
                    s = s + g
                    if s:
                        c[e] = s
                    else:
                        del c[e]
        return LaurentPoly._raw(c)

    def scale(self, g: GaussianRational) -> "LaurentPoly":
        if not g:
            return L_ZERO
        return LaurentPoly._raw({e: c * g for e, c in self._c.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution q -> q**-1 (sqrt(-1) is fixed)."""
        return LaurentPoly._raw({-e: c for e, c in self._c.items()})

    def evaluate(self, q0: Fraction) -> GaussianRational:
        re = Fraction(0)
        im = Fraction(0)
        for e, g in self._c.items():
            p = q0 ** e
            re += g.re * p
            im += g.im * p
        return GaussianRational(re, im)

    # -- structure ----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(tuple(sorted(self._c.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, g in self.items():
            if e == 0:
                term = str(g)
            else:
                qs = "q" if e == 1 else f"q^{e}"
                if g == G_ONE:
                    term = qs
                elif g == -G_ONE:
                    term = f"-{qs}"
                else:
                    gs = str(g)
                    if ("+" in gs[1:]) or ("-" in gs[1:]) or "·" in gs:
                        gs = f"({gs})" if not gs.startswith("(") else gs
                    term = f"{gs}·{qs}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            if term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out


L_ZERO = LaurentPoly._raw({})
L_ONE = LaurentPoly._raw({0: G_ONE})


# -- dense polynomial helpers (nonnegative exponents) for gcd reduction ------

def _dense(p: LaurentPoly) -> list:
    d = p.degree()
    out = [G_ZERO] * (d + 1)
    for e, g in p._c.items():
        out[e] = g
    return out


def _dense_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _dense_divmod(a: list, b: list):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = lb.inverse()
    q = [G_ZERO] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        f = a[-1] * inv
        q[da - db] = f
        for i, bc in enumerate(b):
            a[da - db + i] = a[da - db + i] - f * bc
        _dense_trim(a)
        if not a:
            break
    return q, a


def _dense_gcd(a: list, b: list) -> list:
    a, b = list(a), list(b)
    while b:
        _, r = _dense_divmod(a, b)
        if r:
            # re-monicize each remainder to keep coefficient growth in check
            lc = r[-1]
            if lc != G_ONE:
                inv = lc.inverse()
                r = [c * inv for c in r]
        a, b = b, r
    lc = a[-1]
    if lc != G_ONE:
        inv = lc.inverse()
        a = [c * inv for c in a]
    return a


def _int_coeffs(p: LaurentPoly):
    """Integer coefficient list 0..deg, or None if any coefficient has an
    imaginary part (real fractions get cleared by the common denominator)."""
    import math as _math

    lcm = 1
    for g in p._c.values():
        if g.im:
            return None
        lcm = lcm * g.re.denominator // _math.gcd(lcm, g.re.denominator)
    out = [0] * (p.degree() + 1)
    for e, g in p._c.items():
        out[e] = int(g.re * lcm)
    return out


def _int_prs_gcd(a: list, b: list) -> list:
    """Primitive pseudo-remainder sequence over the integers."""
    import math as _math

    def prim(v):
        g = 0
        for c in v:
            g = _math.gcd(g, c)
            if g == 1:
                return v
        return [c // g for c in v]

    def prem(u, v):
        r = list(u)
        dv, lv = len(v) - 1, v[-1]
        while r and len(r) - 1 >= dv:
            f = r[-1]
            k = len(r) - 1 - dv
            r = [c * lv for c in r]
            for j, vc in enumerate(v):
                r[k + j] -= f * vc
            while r and not r[-1]:
                r.pop()
        return r

    a, b = prim(a), prim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, (prim(r) if r else [])
    return prim(a)


def _poly_gcd(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two polynomials with nonzero constant terms."""
    pi, ri = _int_coeffs(p), _int_coeffs(r)
    if pi is not None and ri is not None:
        g = _int_prs_gcd(pi, ri)
        lc = Fraction(g[-1])
        return LaurentPoly._raw({e: GaussianRational(Fraction(c) / lc)
                                 for e, c in enumerate(g) if c})
    g = _dense_gcd(_dense(p), _dense(r))
    return LaurentPoly._raw({e: c for e, c in enumerate(g) if c})


def _poly_exact_div(p: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    q, r = _dense_divmod(_dense(p), _dense(g))
    if r:
        raise ArithmeticError("inexact polynomial division")
    return LaurentPoly._raw({e: c for e, c in enumerate(q) if c})


# ---------------------------------------------------------------------------
# Reduced rational functions in q
# ---------------------------------------------------------------------------

class RatFunc:
    """A rational function num/den over Q(sqrt(-1)), stored canonically.

    Canonical form: num and den share no polynomial factor, the stored den
    has valuation 0 (nonzero constant term) and leading coefficient exactly
    1; any leftover power of q lives in num.  Equal values therefore have
    identical stored forms, which the golden-file tests rely on.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction, GaussianRational)):
            num = LaurentPoly({0: num})
        if den is None:
            den = L_ONE
        elif isinstance(den, (int, Fraction, GaussianRational)):
            den = LaurentPoly({0: den})
        num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _make(num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        """Build without reduction; caller guarantees canonical form."""
        r = RatFunc.__new__(RatFunc)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        return r

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls):
        return R_ZERO

    @classmethod
    def one(cls):
        return R_ONE

    @classmethod
    def q_power(cls, exp: int) -> "RatFunc":
        return cls._make(LaurentPoly.q_power(exp), L_ONE)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFunc":
        return cls._make(p, L_ONE)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        return self.den.is_one()

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return RatFunc(other)
        if isinstance(other, LaurentPoly):
            return RatFunc._make(other, L_ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(self, o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(self, o, -1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(o, self, -1)

    def __neg__(self):
        return RatFunc._make(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(self, o)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        """Swap and renormalize; canonical inputs stay canonical."""
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        a = self.num.valuation()
        npoly = self.num.shift(-a) if a else self.num
        lc = npoly.coeff(npoly.degree())
        if lc == G_ONE:
            return RatFunc._make(self.den.shift(-a), npoly)
        inv = lc.inverse()
        return RatFunc._make(self.den.scale(inv).shift(-a), npoly.scale(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(self, o.inverse())

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def bar(self) -> "RatFunc":
        """The involution q -> q**-1 extended to rational functions."""
        return RatFunc(self.num.bar(), self.den.bar())

    def evaluate(self, q0: Fraction) -> GaussianRational:
        dval = self.den.evaluate(q0)
        if not dval:
            raise PoleError(f"denominator vanishes at q = {q0}")
        return self.num.evaluate(q0) / dval

    # -- structure ----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        ns = str(self.num)
        if len(self.num) > 1:
            ns = f"({ns})"
        return f"{ns}/({self.den})"


def _reduce(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return L_ZERO, L_ONE
    if den.is_monomial():
        e = den.valuation()
        g = den.coeff(e)
        if g == G_ONE:
            num2 = num.shift(-e) if e else num
        else:
            num2 = num.scale(g.inverse()).shift(-e)
        return num2, L_ONE
    a = num.valuation()
    b = den.valuation()
    pnum = num.shift(-a)
    pden = den.shift(-b)
    if not pnum.is_monomial():
        g = _poly_gcd(pnum, pden)
        if not g.is_one():
            pnum = _poly_exact_div(pnum, g)
            pden = _poly_exact_div(pden, g)
            if pden.is_monomial():
                lc = pden.coeff(pden.degree())
                num2 = pnum if lc == G_ONE else pnum.scale(lc.inverse())
                return num2.shift(a - b), L_ONE
    lc = pden.coeff(pden.degree())
    if lc != G_ONE:
        inv = lc.inverse()
        pnum = pnum.scale(inv)
        pden = pden.scale(inv)
    return pnum.shift(a - b), pden


def _laurent_exact_div(p: LaurentPoly, h: LaurentPoly) -> LaurentPoly:
    """Divide by a polynomial with nonzero constant term, preserving q-powers."""
    a = p.valuation()
    npoly = p.shift(-a) if a else p
    return _poly_exact_div(npoly, h).shift(a)


def _val0_gcd(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (q-power factors stripped)."""
    pv = p.valuation()
    rv = r.valuation()
    p0 = p.shift(-pv) if pv else p
    r0 = r.shift(-rv) if rv else r
    if p0.is_monomial() or r0.is_monomial():
        return L_ONE
    return _poly_gcd(p0, r0)


def _rf_add(a: RatFunc, b: RatFunc, sign: int) -> RatFunc:
    """Sum/difference of canonical fractions, keeping gcd work on the
    denominator overlap instead of the full products."""
    bn = b.num if sign > 0 else -b.num
    if a.num.is_zero():
        return RatFunc._make(bn, b.den)
    if not bn:
        return a
    d1, d2 = a.den, b.den
    if d1.is_one():
        if d2.is_one():
            return RatFunc._make(a.num + bn, L_ONE)
        num = a.num * d2 + bn
        return RatFunc._make(num, d2) if num else R_ZERO
    if d2.is_one():
        num = a.num + bn * d1
        return RatFunc._make(num, d1) if num else R_ZERO
    g = _poly_gcd(d1, d2)
    if g.is_one():
        num = a.num * d2 + bn * d1
        return RatFunc._make(num, d1 * d2) if num else R_ZERO
    d1r = _poly_exact_div(d1, g)
    d2r = _poly_exact_div(d2, g)
    num = a.num * d2r + bn * d1r
    if not num:
        return R_ZERO
    den = d1r * d2
    # common factors of the sum all divide the denominator overlap; peel
    # them off while they also still divide the shrinking denominator
    while not g.is_one():
        h = _val0_gcd(num, g)
        if h.is_one():
            break
        h = _val0_gcd(h, den)
        if h.is_one():
            break
        num = _laurent_exact_div(num, h)
        den = _poly_exact_div(den, h)
        g = h
    if den.is_monomial():
        return RatFunc._make(num, L_ONE)
    return RatFunc._make(num, den)


def _rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    """Product of canonical fractions via cross-cancellation; the result is
    coprime by construction so no final reduction is needed."""
    if a.num.is_zero() or b.num.is_zero():
        return R_ZERO
    d1, d2 = a.den, b.den
    if d1.is_one() and d2.is_one():
        return RatFunc._make(a.num * b.num, L_ONE)
    n1, n2 = a.num, b.num
    if not d2.is_one():
        u = _val0_gcd(n1, d2)
        if not u.is_one():
            n1 = _laurent_exact_div(n1, u)
            d2 = _poly_exact_div(d2, u)
    if not d1.is_one():
        v = _val0_gcd(n2, d1)
        if not v.is_one():
            n2 = _laurent_exact_div(n2, v)
            d1 = _poly_exact_div(d1, v)
    den = d1 * d2
    if den.is_monomial():
        return RatFunc._make(n1 * n2, L_ONE)
    return RatFunc._make(n1 * n2, den)


R_ZERO = RatFunc._make(L_ZERO, L_ONE)
R_ONE = RatFunc._make(L_ONE, L_ONE)
R_HALF = RatFunc._make(LaurentPoly._raw({0: G_HALF}), L_ONE)
R_I = RatFunc._make(LaurentPoly._raw({0: G_I}), L_ONE)


@lru_cache(maxsize=None)
def q_minus_qinv() -> RatFunc:
    return RatFunc.from_laurent(LaurentPoly({1: 1, -1: -1}))


@lru_cache(maxsize=None)
def q_plus_qinv() -> RatFunc:
    return RatFunc.from_laurent(LaurentPoly({1: 1, -1: 1}))


# ---------------------------------------------------------------------------
# q-integers and tower radicands
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def qint_laurent(k: int) -> LaurentPoly:
    """The q-integer [k] = q + q^3 + ... + q^(2k-1), with [-k] = -q^(-2k)[k]."""
    if k >= 0:
        return LaurentPoly({2 * j - 1: 1 for j in range(1, k + 1)})
    return LaurentPoly({-(2 * j - 1): -1 for j in range(1, -k + 1)})


@lru_cache(maxsize=None)
def qint(k: int) -> RatFunc:
    return RatFunc.from_laurent(qint_laurent(k))


@lru_cache(maxsize=None)
def p_poly(k: int) -> LaurentPoly:
    """Radicand of the k-th tower generator: [k]/q = 1 + q^2 + ... + q^(2k-2)."""
    if k < 1:
        raise InvalidGeneratorError(f"tower generator index must be >= 1, got {k}")
    return LaurentPoly({2 * j: 1 for j in range(k)})


@lru_cache(maxsize=None)
def _p_ratfunc(k: int) -> RatFunc:
    return RatFunc.from_laurent(p_poly(k))


# ---------------------------------------------------------------------------
# The square-root tower
# ---------------------------------------------------------------------------

class TowerElem:
    """Finite sum of square-root monomials y_S with RatFunc coefficients.

    Keys are frozensets of generator indices >= 2 (y_1 = 1 is folded into
    the coefficient); the empty set indexes the scalar part.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for s, c in terms.items():
                if not isinstance(c, RatFunc):
                    c = RatFunc(c)
                if c:
                    s = frozenset(s)
                    if s and min(s) < 2:
                        raise InvalidGeneratorError(
                            f"tower monomial indices must be >= 2, got {sorted(s)}")
                    t[s] = c
        object.__setattr__(self, "terms", t)

    def __setattr__(self, name, value):
        raise AttributeError("TowerElem is immutable")

    @staticmethod
    def _raw(t: dict) -> "TowerElem":
        e = TowerElem.__new__(TowerElem)
        object.__setattr__(e, "terms", t)
        return e

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls):
        return T_ZERO

    @classmethod
    def one(cls):
        return T_ONE

    @classmethod
    def from_scalar(cls, c) -> "TowerElem":
        if not isinstance(c, RatFunc):
            c = RatFunc(c)
        if not c:
            return T_ZERO
        return cls._raw({frozenset(): c})

    @classmethod
    def gen(cls, k: int) -> "TowerElem":
        """The generator y_k (y_1 is the identity)."""
        if k < 1:
            raise InvalidGeneratorError(f"tower generator index must be >= 1, got {k}")
        if k == 1:
            return T_ONE
        return cls._raw({frozenset({k}): R_ONE})

    @classmethod
    def monomial(cls, indices, coeff=1) -> "TowerElem":
        elem = cls.from_scalar(coeff)
        for k in indices:
            elem = elem * cls.gen(k)
        return elem

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def scalar_part(self) -> RatFunc:
        return self.terms.get(frozenset(), R_ZERO)

    def is_scalar(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and frozenset() in self.terms)

    # -- ring operations ----------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, TowerElem):
            return other
        if isinstance(other, (int, Fraction, GaussianRational, RatFunc, LaurentPoly)):
            return TowerElem.from_scalar(RatFunc._coerce(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = dict(self.terms)
        for s, c in o.terms.items():
            cur = t.get(s)
            if cur is None:
                t[s] = c
            else:
                cur = cur + c
                if cur:
                    t[s] = cur
                else:
                    del t[s]
        return TowerElem._raw(t)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return TowerElem._raw({s: -c for s, c in self.terms.items()})

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        t = {}
        for s1, c1 in self.terms.items():
            for s2, c2 in o.terms.items():
                c = c1 * c2
                common = s1 & s2
                for k in common:
                    c = c * _p_ratfunc(k)
                key = s1 ^ s2
                cur = t.get(key)
                if cur is None:
                    if c:
                        t[key] = c
                else:
                    cur = cur + c
                    if cur:
                        t[key] = cur
                    else:
                        del t[key]
        return TowerElem._raw(t)

    __rmul__ = __mul__

    def scale(self, c) -> "TowerElem":
        c = RatFunc._coerce(c)
        if not c:
            return T_ZERO
        return TowerElem._raw({s: v * c for s, v in self.terms.items()})

    def __truediv__(self, other):
        c = RatFunc._coerce(other)
        if c is None:
            return NotImplemented
        return self.scale(c.inverse())

    # -- structure ----------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(tuple(sorted(((tuple(sorted(s)), c) for s, c in self.terms.items()))))

    def sorted_terms(self):
        return sorted(((tuple(sorted(s)), c) for s, c in self.terms.items()))

    def __repr__(self):
        return f"TowerElem({{{', '.join(f'{s}: {c!r}' for s, c in self.sorted_terms())}}})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.sorted_terms():
            ys = "·".join(f"y{k}" for k in s)
            cs = str(c)
            if not s:
                parts.append(cs)
            elif c == R_ONE:
                parts.append(ys)
            else:
                if ("+" in cs[1:]) or (" - " in cs) or cs.startswith("("):
                    cs = f"({cs})"
                parts.append(f"{cs}·{ys}")
        return " + ".join(parts)


T_ZERO = TowerElem._raw({})
T_ONE = TowerElem._raw({frozenset(): R_ONE})


# ---------------------------------------------------------------------------
# Seminormal coefficients and the bar involution
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def alpha_coeff(k: int) -> TowerElem:
    """Off-diagonal seminormal coefficient for axial distance k.

    For k >= 2 this is sqrt(-1) * q * y_(k+1) * y_(k-1) / [k]; the two
    radicals over indices k+1 and k-1 appear because sqrt([k+1])*sqrt([k-1])
    equals q * y_(k+1) * y_(k-1) in the normalized tower.  Odd arguments
    mirror as alpha(-k) = -alpha(k), and |k| = 1 gives 0 (the swapped
    tableau is not standard there).
    """
    if k == 0:
        raise UndefinedAxialDistanceError("axial distance 0 has no alpha coefficient")
    if k < 0:
        return -alpha_coeff(-k)
    if k == 1:
        return T_ZERO
    coeff = RatFunc._make(LaurentPoly._raw({1: G_I}), L_ONE) / qint(k)
    return TowerElem.gen(k + 1) * TowerElem.gen(k - 1) * coeff


def bar_map(a: TowerElem) -> TowerElem:
    """Extend q -> q**-1 to the tower by y_k -> -q^(1-k) * y_k.

    This is the unique extension whose square is compatible with the
    radicand transformation bar([k]/q) = q^(2-2k) * [k]/q, and it is an
    involutive ring map fixing sqrt(-1).
    """
    t = {}
    for s, c in a.terms.items():
        c = c.bar()
        shift = 0
        for k in s:
            shift += 1 - k
        if len(s) % 2:
            c = -c
        if shift:
            c = c * RatFunc.q_power(shift)
        if c:
            t[s] = c
    return TowerElem._raw(t)


def specialize_numeric(a: TowerElem, q0, branch=None) -> complex:
    """Evaluate at a rational q0 with chosen square-root branches.

    ``branch`` maps a generator index to +1 or -1 (default +1); the value
    of y_k is branch(k) * sqrt([k]/q at q0) in double precision.
    """
    q0 = Fraction(q0)
    if not q0:
        raise PoleError("q = 0 is outside the semisimple range")
    total = 0j
    for s, c in a.terms.items():
        val = c.evaluate(q0).to_complex()
        for k in s:
            rad = p_poly(k).evaluate(q0).re
            sgn = 1 if branch is None else branch.get(k, 1) if isinstance(branch, dict) else branch(k)
            val *= sgn * math.sqrt(rad)
        total += val
    return total


# ---------------------------------------------------------------------------
# Canonical serialization and pretty printing
# ---------------------------------------------------------------------------

def _laurent_to_obj(p: LaurentPoly) -> list:
    return [[e, g.re.numerator, g.re.denominator, g.im.numerator, g.im.denominator]
            for e, g in p.items()]


def _laurent_from_obj(obj) -> LaurentPoly:
    return LaurentPoly({int(e): GaussianRational(Fraction(rn, rd), Fraction(im, idn))
                        for e, rn, rd, im, idn in obj})


def ratfunc_to_obj(r: RatFunc) -> dict:
    return {"num": _laurent_to_obj(r.num), "den": _laurent_to_obj(r.den)}


def ratfunc_from_obj(obj) -> RatFunc:
    return RatFunc(_laurent_from_obj(obj["num"]), _laurent_from_obj(obj["den"]))


def tower_to_obj(a: TowerElem) -> dict:
    terms = []
    for ys, c in a.sorted_terms():
        terms.append({"ys": list(ys), "num": _laurent_to_obj(c.num),
                      "den": _laurent_to_obj(c.den)})
    return {"terms": terms}


def tower_from_obj(obj) -> TowerElem:
    t = {}
    for term in obj["terms"]:
        c = RatFunc(_laurent_from_obj(term["num"]), _laurent_from_obj(term["den"]))
        if c:
            t[frozenset(int(k) for k in term["ys"])] = c
    return TowerElem._raw(t)


def canonical_json(obj) -> str:
    """Stable byte-for-byte JSON used by golden files and the CLI."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def pretty_tower(a: TowerElem) -> str:
    """Render a tower element in radical notation, e.g. √-1·q^(-3/2)·√[3]."""
    if a.is_zero():
        return "0"
    parts = []
    for ys, c in a.sorted_terms():
        rad = "·".join(f"√[{k}]" for k in ys)
        half = -len(ys)  # y_k = sqrt([k])/sqrt(q) contributes q^(-1/2) each
        piece = None
        if c.is_laurent() and c.num.is_monomial():
            e = c.num.valuation()
            g = c.num.coeff(e)
            num2 = 2 * e + half
            if num2 == 0:
                qs = ""
            elif num2 % 2 == 0:
                qs = f"q^{num2 // 2}" if num2 // 2 != 1 else "q"
            else:
                qs = f"q^({num2}/2)"
            gs = "" if g == G_ONE else ("-" if g == -G_ONE else str(g))
            atoms = [x for x in (gs if gs not in ("", "-") else "", qs, rad) if x]
            body = "·".join(atoms) if atoms else "1"
            piece = ("-" + body) if gs == "-" else body
        if piece is None:
            qs = "" if half == 0 else (f"q^{half // 2}" if half % 2 == 0 else f"q^({half}/2)")
            atoms = [f"({c})"] + [x for x in (qs, rad) if x]
            piece = "·".join(atoms)
        parts.append(piece)
    out = parts[0]
    for piece in parts[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out
