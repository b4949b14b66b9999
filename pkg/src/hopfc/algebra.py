"""Noncommutative PBW engine: ordered monomials, rewrite tables, normal forms,
analytic functions of generator arguments, and tensor-slot arithmetic."""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ConfluenceFailureError,
    StructureError,
    NonTruncatableError,
    UnsupportedArgumentError,
)
from .series import Series, taylor_coeffs

sys.setrecursionlimit(100000)

DEFAULT_STEP_BUDGET = 10**6


def step_budget():
    return int(os.environ.get("HOPFC_STEP_BUDGET", DEFAULT_STEP_BUDGET))


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generator names (the PBW order) with centrality flags."""

    names: tuple
    central: tuple
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise StructureError(f"duplicate generators in {self.names}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @classmethod
    def make(cls, names, central=()):
        central = set(central)
        return cls(tuple(names), tuple(n in central for n in names))

    @property
    def dim(self):
        return len(self.names)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise StructureError(f"unknown generator {name!r} in {self.names}") from None

    def is_central(self, name):
        return self.central[self.index(name)]


def word_of(mono):
    """Monomial (exponent tuple) -> sorted word (tuple of generator indices)."""
    w = []
    for i, e in enumerate(mono):
        w.extend([i] * e)
    return tuple(w)


def monomial_of(word, dim):
    m = [0] * dim
    for i in word:
        m[i] += 1
    return tuple(m)


class Element:
    """Finite combination of PBW-ordered monomials with Series coefficients."""

    __slots__ = ("gens", "space", "order", "floor", "terms")

    def __init__(self, gens, space, terms, order, floor):
        self.gens = gens
        self.space = space
        self.order = order
        self.floor = floor
        self.terms = {m: c for m, c in terms.items() if c}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, gens, space, order, floor):
        return cls(gens, space, {}, order, floor)

    @classmethod
    def unit(cls, gens, space, order, floor, coeff=1):
        c = Series.const(space, coeff, order, floor)
        return cls(gens, space, {(0,) * gens.dim: c}, order, floor)

    @classmethod
    def generator(cls, gens, space, name, order, floor, coeff=None):
        m = [0] * gens.dim
        m[gens.index(name)] = 1
        c = coeff if coeff is not None else Series.one(space, order, floor)
        return cls(gens, space, {tuple(m): c}, order, floor)

    @classmethod
    def monomial(cls, gens, space, exps_by_name, order, floor, coeff=None):
        m = [0] * gens.dim
        for name, e in exps_by_name.items():
            m[gens.index(name)] = e
        c = coeff if coeff is not None else Series.one(space, order, floor)
        return cls(gens, space, {tuple(m): c}, order, floor)

    # -- basic algebra (no rewriting) -------------------------------------

    def _compatible(self, other):
        if self.gens.names != other.gens.names:
            raise StructureError("mismatched generator sets")
        if self.space.symbols != other.space.symbols:
            raise StructureError("mismatched parameter spaces")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return (
            self.gens.names == other.gens.names
            and self.space.symbols == other.space.symbols
            and self.terms == other.terms
        )

    def __neg__(self):
        return Element(self.gens, self.space, {m: -c for m, c in self.terms.items()},
                       self.order, self.floor)

    def __add__(self, other):
        self._compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Element(self.gens, self.space, terms, self.order, self.floor)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """Multiply by a scalar Series / Fraction / int."""
        if isinstance(c, (int, Fraction)):
            return Element(self.gens, self.space, {m: v * c for m, v in self.terms.items()},
                           self.order, self.floor)
        return Element(self.gens, self.space, {m: v * c for m, v in self.terms.items()},
                       self.order, self.floor)

    def map_coeffs(self, fn):
        return Element(self.gens, self.space, {m: fn(c) for m, c in self.terms.items()},
                       self.order, self.floor)

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(
                f"{n}^{e}" if e != 1 else n for n, e in zip(self.gens.names, m) if e
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        out = {}
        for m, c in sorted(self.terms.items()):
            key = "*".join(f"{n}^{e}" for n, e in zip(self.gens.names, m) if e) or "1"
            out[key] = c.to_json()
        return out


class RewriteTable:
    """PBW rewrite rules: for positions i > j, ``X_i X_j = X_j X_i + R[i,j]``."""

    def __init__(self, gens, space, order, floor, rules):
        self.gens = gens
        self.space = space
        self.order = order
        self.floor = floor
        self.rules = dict(rules)  # (i, j) with i > j -> Element
        for i in range(gens.dim):
            for j in range(i):
                if gens.central[i] or gens.central[j]:
                    self.rules.setdefault((i, j), self._zero())
                if (i, j) not in self.rules:
                    raise StructureError(
                        f"missing rewrite rule for ({gens.names[i]}, {gens.names[j]})"
                    )
        self._nf_cache = {}
        self._steps = 0
        self._budget = step_budget()

    def _zero(self):
        return Element.zero(self.gens, self.space, self.order, self.floor)

    def zero(self):
        return self._zero()

    def one(self, coeff=1):
        return Element.unit(self.gens, self.space, self.order, self.floor, coeff)

    def gen(self, name, coeff=None):
        return Element.generator(self.gens, self.space, name, self.order, self.floor, coeff)

    def scalar(self, c):
        return Series.const(self.space, c, self.order, self.floor)

    def sym(self, name, power=1, coeff=1):
        return Series.symbol(self.space, name, self.order, self.floor, power, coeff)

    def set_rule_by_index(self, i, j, rhs: Element):
        """Install/replace the rule for positions i > j (two-phase table
        construction); invalidates the normal-form cache."""
        if i <= j:
            raise StructureError("rewrite rules require i > j")
        if (self.gens.central[i] or self.gens.central[j]) and rhs:
            raise StructureError(
                f"nonzero rule on central pair ({self.gens.names[i]}, {self.gens.names[j]})"
            )
        self.rules[(i, j)] = rhs
        self._nf_cache = {}

    def set_rule(self, xname, yname, bracket):
        """Declare [X, Y] = bracket for named generators, either order."""
        i, j = self.gens.index(xname), self.gens.index(yname)
        if i > j:
            self.set_rule_by_index(i, j, bracket)
        else:
            self.set_rule_by_index(j, i, -bracket)

    # -- normal form -------------------------------------------------------

    def _nf_word(self, word):
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        descent = -1
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                descent = k
                break
        if descent < 0:
            m = monomial_of(word, self.gens.dim)
            res = Element(self.gens, self.space,
                          {m: Series.one(self.space, self.order, self.floor)},
                          self.order, self.floor)
            self._nf_cache[word] = res
            return res
        self._steps += 1
        if self._steps > self._budget:
            raise ConfluenceFailureError(
                f"rewrite step budget exceeded on word {word}"
            )
        k = descent
        i, j = word[k], word[k + 1]
        acc = self._nf_word(word[:k] + (j, i) + word[k + 2:])
        rule = self.rules[(i, j)]
        if rule:
            head, tail = word[:k], word[k + 2:]
            for m, c in rule.terms.items():
                piece = self._nf_word(head + word_of(m) + tail)
                acc = acc + piece.scale(c)
        self._nf_cache[word] = acc
        return acc

    def nf_word(self, word, coeff=None, reset_budget=True):
        """Normal form of a raw word, optionally scaled by a coefficient."""
        if reset_budget:
            self._steps = 0
            self._budget = step_budget()
        res = self._nf_word(tuple(word))
        if coeff is not None:
            res = res.scale(coeff)
        return res

    def nf_raw(self, pieces):
        """Normal form of a sum of (word, Series-coefficient) pieces."""
        self._steps = 0
        self._budget = step_budget()
        acc = self._zero()
        for word, c in pieces:
            if c:
                acc = acc + self._nf_word(tuple(word)).scale(c)
        return acc

    def check(self, x: Element):
        if x.gens.names != self.gens.names or x.space.symbols != self.space.symbols:
            raise StructureError("element does not belong to this table's algebra")


def mul(x: Element, y: Element, table: RewriteTable) -> Element:
    """Product in the algebra: concatenate words, then normal-form."""
    table.check(x)
    x._compatible(y)
    table._steps = 0
    table._budget = step_budget()
    acc = table.zero()
    for m1, c1 in x.terms.items():
        w1 = word_of(m1)
        for m2, c2 in y.terms.items():
            c = c1 * c2
            if not c:
                continue
            acc = acc + table._nf_word(w1 + word_of(m2)).scale(c)
    return acc


def commutator(x: Element, y: Element, table: RewriteTable) -> Element:
    return mul(x, y, table) - mul(y, x, table)


def power(x: Element, n: int, table: RewriteTable) -> Element:
    out = table.one()
    for _ in range(n):
        out = mul(out, x, table)
    return out


def _coeff_min_wdeg(x: Element):
    vals = [c.min_wdeg() for c in x.terms.values()]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def generator_function(kind, arg: Element, table: RewriteTable, order=None) -> Element:
    """Taylor expansion of the named function at an algebra-element argument.

    The argument must have strictly positive parameter weight in every term
    (so powers truncate) and its terms must commute pairwise."""
    table.check(arg)
    order = arg.order if order is None else order
    mw = _coeff_min_wdeg(arg)
    if mw is not None and mw <= 0:
        raise NonTruncatableError(f"generator-function argument has weight-{mw} term: {arg}")
    items = list(arg.terms.items())
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            ta = Element(arg.gens, arg.space, dict([items[a]]), arg.order, arg.floor)
            tb = Element(arg.gens, arg.space, dict([items[b]]), arg.order, arg.floor)
            if commutator(ta, tb, table):
                raise UnsupportedArgumentError(
                    f"non-commuting terms in analytic argument: {ta} vs {tb}"
                )
    kmax = 0 if mw is None else order // mw
    coeffs = taylor_coeffs(kind, kmax)
    acc = table.zero()
    pw = table.one()
    for k in range(kmax + 1):
        if coeffs[k]:
            acc = acc + pw.scale(coeffs[k])
        if k < kmax:
            pw = mul(pw, arg, table)
    return acc


def substitute_generators(x, images, table_target: RewriteTable, param_sub=None):
    """Homomorphic substitution generator -> Element over the target algebra,
    with optional simultaneous parameter substitution on coefficients.

    Works on Element and TensorElement alike."""
    if isinstance(x, TensorElement):
        terms = {}
        zero_t = TensorElement.zero(x.rank, table_target.gens, table_target.space,
                                    table_target.order, table_target.floor)
        acc = zero_t
        for monos, c in x.terms.items():
            c2 = _map_coeff(c, param_sub, table_target)
            if not c2:
                continue
            slot_elts = [
                _substitute_monomial(m, x.gens, images, table_target) for m in monos
            ]
            acc = acc + TensorElement.outer(slot_elts).scale(c2)
        return acc
    acc = table_target.zero()
    for m, c in x.terms.items():
        c2 = _map_coeff(c, param_sub, table_target)
        if not c2:
            continue
        acc = acc + _substitute_monomial(m, x.gens, images, table_target).scale(c2)
    return acc


def _map_coeff(c: Series, param_sub, table_target: RewriteTable):
    if param_sub is None:
        if c.space.symbols == table_target.space.symbols:
            return c.truncate(table_target.order, table_target.floor)
        return c.embed(table_target.space, table_target.order, table_target.floor)
    return c.substitute(param_sub, order=table_target.order, floor=table_target.floor,
                        space=table_target.space)


def _substitute_monomial(m, gens, images, table_target):
    acc = table_target.one()
    for name, e in zip(gens.names, m):
        if not e:
            continue
        img = images[name]
        for _ in range(e):
            acc = mul(acc, img, table_target)
    return acc


# ---------------------------------------------------------------------------
# tensor-slot arithmetic
# ---------------------------------------------------------------------------

class TensorElement:
    """Rank-2 or rank-3 tensor over the algebra: monomial tuples -> Series.

    Slot-wise PBW ordering; the tensor product algebra is the ordinary
    (unbraided) one."""

    __slots__ = ("rank", "gens", "space", "order", "floor", "terms")

    def __init__(self, rank, gens, space, terms, order, floor):
        self.rank = rank
        self.gens = gens
        self.space = space
        self.order = order
        self.floor = floor
        self.terms = {ms: c for ms, c in terms.items() if c}

    @classmethod
    def zero(cls, rank, gens, space, order, floor):
        return cls(rank, gens, space, {}, order, floor)

    @classmethod
    def outer(cls, factors):
        """Tensor product of Elements (one per slot)."""
        f0 = factors[0]
        acc = {(): Series.one(f0.space, f0.order, f0.floor)}
        for f in factors:
            nxt = {}
            for ms, c in acc.items():
                for m, c2 in f.terms.items():
                    v = c * c2
                    if v:
                        key = ms + (m,)
                        s = nxt.get(key)
                        nxt[key] = v if s is None else s + v
            acc = nxt
        return cls(len(factors), f0.gens, f0.space, acc, f0.order, f0.floor)

    def _compatible(self, other):
        if self.rank != other.rank:
            raise StructureError("tensor rank mismatch")
        if self.gens.names != other.gens.names or self.space.symbols != other.space.symbols:
            raise StructureError("tensor algebra mismatch")

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __neg__(self):
        return TensorElement(self.rank, self.gens, self.space,
                             {ms: -c for ms, c in self.terms.items()}, self.order, self.floor)

    def __add__(self, other):
        self._compatible(other)
        terms = dict(self.terms)
        for ms, c in other.terms.items():
            s = terms.get(ms)
            s = c if s is None else s + c
            if s:
                terms[ms] = s
            else:
                terms.pop(ms, None)
        return TensorElement(self.rank, self.gens, self.space, terms, self.order, self.floor)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TensorElement(self.rank, self.gens, self.space,
                             {ms: v * c for ms, v in self.terms.items()},
                             self.order, self.floor)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for ms, c in sorted(self.terms.items()):
            slots = " (x) ".join(
                "*".join(f"{n}^{e}" if e != 1 else n
                         for n, e in zip(self.gens.names, m) if e) or "1"
                for m in ms
            )
            parts.append(f"({c})*[{slots}]")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self):
        out = {}
        for ms, c in sorted(self.terms.items()):
            key = " (x) ".join(
                "*".join(f"{n}^{e}" for n, e in zip(self.gens.names, m) if e) or "1"
                for m in ms
            )
            out[key] = c.to_json()
        return out


def tensor_mul(x: TensorElement, y: TensorElement, table: RewriteTable) -> TensorElement:
    """Slot-wise product with per-slot normal form."""
    x._compatible(y)
    acc = TensorElement.zero(x.rank, x.gens, x.space, x.order, x.floor)
    table._steps = 0
    table._budget = step_budget()
    for ms1, c1 in x.terms.items():
        for ms2, c2 in y.terms.items():
            c = c1 * c2
            if not c:
                continue
            slot_elts = [
                table._nf_word(word_of(m1) + word_of(m2))
                for m1, m2 in zip(ms1, ms2)
            ]
            acc = acc + TensorElement.outer(slot_elts).scale(c)
    return acc


def element_to_tensor(x: Element, rank, slot):
    """Embed an Element into slot ``slot`` of a rank-``rank`` tensor (1 elsewhere)."""
    unit = (0,) * x.gens.dim
    terms = {}
    for m, c in x.terms.items():
        key = tuple(m if s == slot else unit for s in range(rank))
        terms[key] = c
    return TensorElement(rank, x.gens, x.space, terms, x.order, x.floor)


def apply_coproduct(x: Element, delta, table: RewriteTable) -> TensorElement:
    """Extend a generator coproduct table multiplicatively to an Element."""
    acc = TensorElement.zero(2, x.gens, x.space, x.order, x.floor)
    for m, c in x.terms.items():
        t = TensorElement.outer([table.one(), table.one()])
        for name, e in zip(x.gens.names, m):
            for _ in range(e):
                t = tensor_mul(t, delta[name], table)
        acc = acc + t.scale(c)
    return acc


def coproduct_on_slot(t: TensorElement, slot, delta, table: RewriteTable) -> TensorElement:
    """Apply the coproduct to one slot of a rank-2 tensor, giving rank 3."""
    acc = TensorElement.zero(t.rank + 1, t.gens, t.space, t.order, t.floor)
    for ms, c in t.terms.items():
        elt = Element(t.gens, t.space,
                      {ms[slot]: Series.one(t.space, t.order, t.floor)},
                      t.order, t.floor)
        dt = apply_coproduct(elt, delta, table)
        for ms2, c2 in dt.terms.items():
            key = ms[:slot] + ms2 + ms[slot + 1:]
            v = c * c2
            if not v:
                continue
            s = acc.terms.get(key)
            acc.terms[key] = v if s is None else s + v
    acc.terms = {k: v for k, v in acc.terms.items() if v}
    return acc


def counit_collapse(t: TensorElement, slot, counit_values):
    """Apply the counit to one slot; returns an Element (rank 2) or rank-2
    tensor (rank 3).  ``counit_values``: generator name -> Fraction."""
    unit_like = {}
    for ms, c in t.terms.items():
        m = ms[slot]
        val = Fraction(1)
        for name, e in zip(t.gens.names, m):
            if e:
                val *= Fraction(counit_values[name]) ** e
        if not val:
            continue
        key = ms[:slot] + ms[slot + 1:]
        v = c * val
        s = unit_like.get(key)
        unit_like[key] = v if s is None else s + v
    unit_like = {k: v for k, v in unit_like.items() if v}
    if t.rank == 2:
        return Element(t.gens, t.space, {k[0]: v for k, v in unit_like.items()},
                       t.order, t.floor)
    return TensorElement(t.rank - 1, t.gens, t.space, unit_like, t.order, t.floor)


def multiply_slots(t: TensorElement, table: RewriteTable) -> Element:
    """Multiplication map m: collapse all slots into one product."""
    acc = table.zero()
    table._steps = 0
    table._budget = step_budget()
    for ms, c in t.terms.items():
        word = ()
        for m in ms:
            word = word + word_of(m)
        acc = acc + table._nf_word(word).scale(c)
    return acc
