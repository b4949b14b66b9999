"""Truncated multivariate formal series with exact rational coefficients.

Everything downstream (structure constants, coproduct legs, R-matrix
entries) has coefficients in this ring.  A series lives in a ``ParamSpace``
that fixes the symbol list, a nonnegative integer weight per symbol used
for truncation, and an invertibility flag allowing bounded negative
exponents (used by the contraction parameter ``eps``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DivergenceError,
    FloorUnderflowError,
    NonTruncatableError,
    StructureError,
)

#: default lower exponent bound for invertible symbols
DEFAULT_FLOOR = -4

#: "no truncation" order / floor used internally by the contraction engine
EXACT_ORDER = 10**9
EXACT_FLOOR = -(10**9)

EPS = "eps"


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class ParamSpace:
    """Ordered list of parameter symbols with weights and invertibility."""

    symbols: tuple
    weights: tuple
    invertible: tuple
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.symbols)) != len(self.symbols):
            raise StructureError(f"duplicate symbols in {self.symbols}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @classmethod
    def make(cls, *specs):
        """Build a space from specs: ``name`` (weight 1) or ``(name, weight,
        invertible)``.  The symbol ``eps`` defaults to weight 1, invertible."""
        syms, wts, inv = [], [], []
        for sp in specs:
            if isinstance(sp, str):
                name, w, iv = sp, 1, sp == EPS
            else:
                name, w, iv = sp
            syms.append(name)
            wts.append(w)
            inv.append(bool(iv))
        return cls(tuple(syms), tuple(wts), tuple(inv))

    @property
    def dim(self):
        return len(self.symbols)

    def index(self, name) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise StructureError(f"symbol {name!r} not in space {self.symbols}") from None

    def has(self, name) -> bool:
        return name in self._index

    def weight_of(self, name) -> int:
        return self.weights[self.index(name)]

    def wdeg(self, exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def without(self, *names) -> "ParamSpace":
        drop = set(names)
        keep = [i for i, s in enumerate(self.symbols) if s not in drop]
        return ParamSpace(
            tuple(self.symbols[i] for i in keep),
            tuple(self.weights[i] for i in keep),
            tuple(self.invertible[i] for i in keep),
        )

    def union(self, other: "ParamSpace") -> "ParamSpace":
        syms = list(self.symbols)
        wts = list(self.weights)
        inv = list(self.invertible)
        for i, s in enumerate(other.symbols):
            if s in self._index:
                j = self._index[s]
                if self.weights[j] != other.weights[i] or self.invertible[j] != other.invertible[i]:
                    raise StructureError(f"incompatible declarations for symbol {s!r}")
            else:
                syms.append(s)
                wts.append(other.weights[i])
                inv.append(other.invertible[i])
        return ParamSpace(tuple(syms), tuple(wts), tuple(inv))


class Series:
    """Truncated series: map from exponent vectors to nonzero ``Fraction``s.

    Terms above the truncation order (total weighted degree) are silently
    dropped; exponents below the floor on invertible symbols raise."""

    __slots__ = ("space", "order", "floor", "terms")

    def __init__(self, space, terms, order, floor=DEFAULT_FLOOR):
        self.space = space
        self.order = order
        self.floor = floor
        clean = {}
        for exps, c in terms.items():
            c = _frac(c)
            if not c:
                continue
            if len(exps) != space.dim:
                raise StructureError(f"exponent vector {exps} does not fit {space.symbols}")
            self._check_floor(space, exps, floor)
            if space.wdeg(exps) > order:
                continue
            clean[exps] = c
        self.terms = clean

    @staticmethod
    def _check_floor(space, exps, floor):
        for e, iv in zip(exps, space.invertible):
            if iv:
                if e < floor:
                    raise FloorUnderflowError([exps])
            elif e < 0:
                raise StructureError(f"negative exponent on non-invertible symbol: {exps}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, space, order, floor=DEFAULT_FLOOR):
        return cls(space, {}, order, floor)

    @classmethod
    def const(cls, space, c, order, floor=DEFAULT_FLOOR):
        return cls(space, {(0,) * space.dim: _frac(c)}, order, floor)

    @classmethod
    def one(cls, space, order, floor=DEFAULT_FLOOR):
        return cls.const(space, 1, order, floor)

    @classmethod
    def term(cls, space, exps_by_name, c, order, floor=DEFAULT_FLOOR):
        exps = [0] * space.dim
        for name, e in exps_by_name.items():
            exps[space.index(name)] = e
        return cls(space, {tuple(exps): _frac(c)}, order, floor)

    @classmethod
    def symbol(cls, space, name, order, floor=DEFAULT_FLOOR, power=1, coeff=1):
        return cls.term(space, {name: power}, coeff, order, floor)

    # -- helpers -----------------------------------------------------------

    def _compatible(self, other):
        if self.space.symbols != other.space.symbols:
            raise StructureError(
                f"mismatched spaces {self.space.symbols} vs {other.space.symbols}"
            )
        if self.order != other.order or self.floor != other.floor:
            raise StructureError("mismatched truncation order / floor")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.space.symbols == other.space.symbols and self.terms == other.terms

    def __hash__(self):
        return hash((self.space.symbols, tuple(sorted(self.terms.items()))))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.space.dim, Fraction(0))

    def min_wdeg(self):
        """Minimal total weighted degree over stored terms; None if zero."""
        if not self.terms:
            return None
        return min(self.space.wdeg(e) for e in self.terms)

    def min_exp(self, name):
        i = self.space.index(name)
        if not self.terms:
            return None
        return min(e[i] for e in self.terms)

    # -- ring operations ---------------------------------------------------

    def __neg__(self):
        return Series(self.space, {e: -c for e, c in self.terms.items()}, self.order, self.floor)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.const(self.space, other, self.order, self.floor)
        self._compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, Fraction(0)) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Series(self.space, terms, self.order, self.floor)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Series.const(self.space, other, self.order, self.floor)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return Series.zero(self.space, self.order, self.floor)
            return Series(
                self.space, {e: c * v for e, v in self.terms.items()}, self.order, self.floor
            )
        self._compatible(other)
        space, order, floor = self.space, self.order, self.floor
        out = {}
        for e1, c1 in self.terms.items():
            w1 = space.wdeg(e1)
            for e2, c2 in other.terms.items():
                if w1 + space.wdeg(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                Series._check_floor(space, e, floor)
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Series(space, out, order, floor)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.invert_monomial(-n)
        result = Series.one(self.space, self.order, self.floor)
        for _ in range(n):
            result = result * self
        return result

    def invert_monomial(self, n: int = 1):
        """Inverse power, defined only for single-term series."""
        if len(self.terms) != 1:
            raise StructureError("can only invert single-term series")
        ((e, c),) = self.terms.items()
        inv = tuple(-x * n for x in e)
        return Series(self.space, {inv: Fraction(1) / c**n}, self.order, self.floor)

    # -- structural operations --------------------------------------------

    def truncate(self, order=None, floor=None):
        order = self.order if order is None else order
        floor = self.floor if floor is None else floor
        return Series(self.space, self.terms, order, floor)

    def embed(self, space, order=None, floor=None):
        """Re-express in a superspace (matched by symbol name)."""
        order = self.order if order is None else order
        floor = self.floor if floor is None else floor
        idx = [space.index(s) for s in self.space.symbols]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * space.dim
            for j, v in zip(idx, e):
                ne[j] = v
            out[tuple(ne)] = c
        return Series(space, out, order, floor)

    def restrict(self, space, order=None, floor=None):
        """Project onto a subspace; foreign nonzero exponents are an error."""
        order = self.order if order is None else order
        floor = self.floor if floor is None else floor
        pos = {s: i for i, s in enumerate(self.space.symbols)}
        keep = [pos[s] for s in space.symbols]
        drop = [i for i, s in enumerate(self.space.symbols) if not space.has(s)]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in drop):
                raise StructureError(f"term {e} carries symbols outside {space.symbols}")
            out[tuple(e[i] for i in keep)] = c
        return Series(space, out, order, floor)

    def substitute(self, sigma, order=None, floor=None, space=None):
        """Simultaneous substitution symbol -> Series.

        Symbols absent from ``sigma`` map to themselves; the target space is
        taken from the images (they must agree) unless given explicitly."""
        if space is None:
            for img in sigma.values():
                space = img.space
                break
            if space is None:
                space = self.space
        order = self.order if order is None else order
        floor = self.floor if floor is None else floor

        images = {}
        for name in self.space.symbols:
            if name in sigma:
                images[name] = sigma[name].embed(space, order=order, floor=floor) \
                    if sigma[name].space.symbols != space.symbols else sigma[name].truncate(order, floor)
            else:
                images[name] = Series.symbol(space, name, order, floor)

        out = Series.zero(space, order, floor)
        for e, c in self.terms.items():
            term = Series.const(space, c, order, floor)
            for name, exp in zip(self.space.symbols, e):
                if exp:
                    term = term * images[name] ** exp
            out = out + term
        return out

    def limit_zero(self, name=EPS, context=""):
        """The ``name`` -> 0 limit: negative powers raise DivergenceError,
        positive powers vanish, the zero slice survives in the reduced space."""
        i = self.space.index(name)
        bad = {e: c for e, c in self.terms.items() if e[i] < 0}
        if bad:
            raise DivergenceError(
                [self._render_term(e, c) for e, c in sorted(bad.items())], context=context
            )
        space = self.space.without(name)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                out[e[:i] + e[i + 1 :]] = c
        return Series(space, out, self.order, self.floor)

    def zero_slice(self, name):
        """Set a (non-invertible) parameter to zero, keeping the space."""
        i = self.space.index(name)
        out = {e: c for e, c in self.terms.items() if e[i] == 0}
        return Series(self.space, out, self.order, self.floor)

    # -- rendering ---------------------------------------------------------

    def _render_term(self, e, c):
        mono = "*".join(
            f"{s}^{v}" if v != 1 else s for s, v in zip(self.space.symbols, e) if v
        )
        return f"{c}" if not mono else f"{c}*{mono}"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(self._render_term(e, c) for e, c in sorted(self.terms.items()))

    __repr__ = __str__

    def to_json(self):
        """{exponent-vector: "num/den"} with a stable key order."""
        out = {}
        for e, c in sorted(self.terms.items()):
            key = "*".join(f"{s}^{v}" for s, v in zip(self.space.symbols, e) if v) or "1"
            out[key] = f"{c.numerator}/{c.denominator}"
        return out


# ---------------------------------------------------------------------------
# analytic (Taylor) kinds
# ---------------------------------------------------------------------------

def _divide_coeffs(num, den, n):
    # power series division mod x^(n+1); den[0] must be 1
    assert den[0] == 1
    out = []
    for k in range(n + 1):
        c = num[k] - sum(out[i] * den[k - i] for i in range(k))
        out.append(c)
    return out


def taylor_coeffs(kind, n):
    """Exact Taylor coefficients c_0..c_n of the named scalar function."""
    if kind == "exp":
        return [Fraction(1, math.factorial(k)) for k in range(n + 1)]
    if kind == "cosh":
        return [Fraction(1, math.factorial(k)) if k % 2 == 0 else Fraction(0) for k in range(n + 1)]
    if kind == "cosh_minus_one":
        c = taylor_coeffs("cosh", n)
        c[0] = Fraction(0)
        return c
    if kind == "sinh_over_arg":
        # sinh(x)/x
        return [
            Fraction(1, math.factorial(k + 1)) if k % 2 == 0 else Fraction(0)
            for k in range(n + 1)
        ]
    if kind == "expm1_over_arg":
        # (e^x - 1)/x
        return [Fraction(1, math.factorial(k + 1)) for k in range(n + 1)]
    if kind == "coshm1_over_argsq":
        # (cosh x - 1)/x^2
        return [
            Fraction(1, math.factorial(k + 2)) if k % 2 == 0 else Fraction(0)
            for k in range(n + 1)
        ]
    if kind == "x_over_tanh":
        # x/tanh(x) = cosh(x) / (sinh(x)/x)
        return _divide_coeffs(taylor_coeffs("cosh", n), taylor_coeffs("sinh_over_arg", n), n)
    raise StructureError(f"unknown analytic kind {kind!r}")


def analytic_series(kind, arg: Series, order=None) -> Series:
    """Taylor expansion of the named function composed with a scalar series.

    Every term of ``arg`` must have strictly positive weighted degree so the
    composition truncates."""
    order = arg.order if order is None else order
    mw = arg.min_wdeg()
    if mw is not None and mw <= 0:
        raise NonTruncatableError(f"argument has a weight-{mw} term: {arg}")
    kmax = order if mw is None else order // mw
    coeffs = taylor_coeffs(kind, kmax)
    out = Series.zero(arg.space, order, arg.floor)
    power = Series.one(arg.space, order, arg.floor)
    for k in range(kmax + 1):
        if coeffs[k]:
            out = out + power * coeffs[k]
        if k < kmax:
            power = power * arg
    return out
