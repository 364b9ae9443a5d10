"""Exact scalar arithmetic: rationals, polynomials in the spectral
parameter, bivariate polynomials, and Laurent polynomials in the
half-power deformation variable s (with s*s = q).

All values are immutable after construction and all operations are pure.
Coefficients are `fractions.Fraction`, so integers never overflow.
"""

from __future__ import annotations

from fractions import Fraction


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


def rat_str(x: Fraction) -> str:
    """Serialize a rational as "p/q", omitting the denominator when 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _coeff_map(items):
    out = {}
    for k, v in items:
        v = rat(v)
        if v:
            out[k] = v
    return out


class UniPoly:
    """Polynomial in one spectral parameter with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        self.c = _coeff_map(coeffs)

    @classmethod
    def const(cls, v):
        return cls({0: rat(v)})

    @classmethod
    def x(cls):
        return cls({1: 1})

    @classmethod
    def from_list(cls, vals):
        """Coefficients lowest-degree-first."""
        return cls(enumerate(vals))

    def to_list(self):
        if not self.c:
            return []
        d = self.degree()
        return [self.coeff(k) for k in range(d + 1)]

    def degree(self):
        return max(self.c) if self.c else -1

    def coeff(self, k) -> Fraction:
        return self.c.get(k, Fraction(0))

    @property
    def is_zero(self):
        return not self.c

    def _coerced(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = {}
        for i, a in self.c.items():
            for j, b in other.c.items():
                k = i + j
                w = out.get(k, 0) + a * b
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = UniPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def eval(self, v) -> Fraction:
        v = rat(v)
        acc = Fraction(0)
        for k, a in self.c.items():
            acc += a * v**k
        return acc

    def compose_affine(self, a, b):
        """Substitute the variable by a*x + b (a, b rational)."""
        a, b = rat(a), rat(b)
        x = UniPoly({1: a, 0: b})
        out = UniPoly()
        for k, v in sorted(self.c.items()):
            out = out + v * x**k
        return out

    def to_bi(self, c1, c2, c0=0) -> "BiPoly":
        """Substitute the variable by c1*x1 + c2*x2 + c0."""
        sub = BiPoly({(1, 0): rat(c1), (0, 1): rat(c2), (0, 0): rat(c0)})
        out = BiPoly()
        for k, v in sorted(self.c.items()):
            out = out + v * sub**k
        return out

    def __repr__(self):
        if not self.c:
            return "0"
        terms = [f"{rat_str(v)}*l^{k}" for k, v in sorted(self.c.items())]
        return " + ".join(terms)


class BiPoly:
    """Polynomial in two spectral parameters with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        self.c = _coeff_map(coeffs)

    @classmethod
    def const(cls, v):
        return cls({(0, 0): rat(v)})

    def coeff(self, i, j) -> Fraction:
        return self.c.get((i, j), Fraction(0))

    @property
    def is_zero(self):
        return not self.c

    def _coerced(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = {}
        for (i1, j1), a in self.c.items():
            for (i2, j2), b in other.c.items():
                k = (i1 + i2, j1 + j2)
                w = out.get(k, 0) + a * b
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def eval(self, v1, v2) -> Fraction:
        v1, v2 = rat(v1), rat(v2)
        acc = Fraction(0)
        for (i, j), a in self.c.items():
            acc += a * v1**i * v2**j
        return acc

    def __repr__(self):
        if not self.c:
            return "0"
        terms = [
            f"{rat_str(v)}*l1^{i}*l2^{j}" for (i, j), v in sorted(self.c.items())
        ]
        return " + ".join(terms)


class LaurentS:
    """Laurent polynomial in s, where s*s plays the role of q.

    Exponents are integers (possibly negative); half-powers of q are the
    odd powers of s.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        if isinstance(coeffs, dict):
            coeffs = coeffs.items()
        self.c = _coeff_map(coeffs)

    @classmethod
    def const(cls, v):
        return cls({0: rat(v)})

    @classmethod
    def s_power(cls, k):
        return cls({k: 1})

    @classmethod
    def q_power(cls, k):
        """q^k = s^(2k); half-integer k must be supplied as s_power."""
        return cls({2 * k: 1})

    def coeff(self, k) -> Fraction:
        return self.c.get(k, Fraction(0))

    @property
    def is_zero(self):
        return not self.c

    def _coerced(self, other):
        if isinstance(other, LaurentS):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentS.const(other)
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = dict(self.c)
        for k, v in other.c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return LaurentS(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentS({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        out = {}
        for i, a in self.c.items():
            for j, b in other.c.items():
                k = i + j
                w = out.get(k, 0) + a * b
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return LaurentS(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def eval_s(self, v) -> Fraction:
        v = rat(v)
        acc = Fraction(0)
        for k, a in self.c.items():
            acc += a * v**k
        return acc

    def __repr__(self):
        if not self.c:
            return "0"
        terms = [f"{rat_str(v)}*s^{k}" for k, v in sorted(self.c.items())]
        return " + ".join(terms)


class Ring:
    """Tag describing the scalar ring a matrix lives over."""

    __slots__ = ("name", "_zero", "_one", "_coerce")

    def __init__(self, name, zero, one, coerce):
        self.name = name
        self._zero = zero
        self._one = one
        self._coerce = coerce

    def zero(self):
        return self._zero()

    def one(self):
        return self._one()

    def coerce(self, x):
        return self._coerce(x)

    def __repr__(self):
        return f"Ring({self.name})"


def _to_uni(x):
    if isinstance(x, UniPoly):
        return x
    return UniPoly.const(rat(x))


def _to_bi(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, UniPoly):
        raise TypeError("substitute the spectral variable explicitly")
    return BiPoly.const(rat(x))


def _to_laurent(x):
    if isinstance(x, LaurentS):
        return x
    return LaurentS.const(rat(x))


RING_Q = Ring("Q", lambda: Fraction(0), lambda: Fraction(1), rat)
RING_L = Ring("Q[l]", UniPoly, lambda: UniPoly.const(1), _to_uni)
RING_L2 = Ring("Q[l1,l2]", BiPoly, lambda: BiPoly.const(1), _to_bi)
RING_S = Ring("Q[s,1/s]", LaurentS, lambda: LaurentS.const(1), _to_laurent)


def value_to_json(ring, v):
    """Ring scalars as JSON: "p/q" for rationals, coefficient arrays
    lowest-degree-first for polynomials."""
    if ring is RING_Q:
        return rat_str(v)
    if ring is RING_L:
        return [rat_str(a) for a in v.to_list()]
    if ring is RING_L2:
        return [[i, j, rat_str(a)] for (i, j), a in sorted(v.c.items())]
    if ring is RING_S:
        return [[k, rat_str(a)] for k, a in sorted(v.c.items())]
    raise TypeError(f"unknown ring {ring!r}")


def value_from_json(ring, obj):
    if ring is RING_Q:
        return rat(obj)
    if ring is RING_L:
        return UniPoly.from_list([rat(a) for a in obj])
    if ring is RING_L2:
        return BiPoly({(i, j): rat(a) for i, j, a in obj})
    if ring is RING_S:
        return LaurentS({k: rat(a) for k, a in obj})
    raise TypeError(f"unknown ring {ring!r}")


RING_BY_NAME = {r.name: r for r in (RING_Q, RING_L, RING_L2, RING_S)}
