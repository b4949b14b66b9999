"""Hopf-algebra presentations, axiom verification, and order-by-order
antipode synthesis."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    Element,
    RewriteTable,
    TensorElement,
    apply_coproduct,
    commutator,
    coproduct_on_slot,
    counit_collapse,
    element_to_tensor,
    mul,
    multiply_slots,
    tensor_mul,
)
from .errors import StructureError, SynthesisFailureError
from .series import Series


@dataclass
class HopfPresentation:
    """One quantum algebra: generators, rewrite table, coproduct, counit,
    optional Casimir."""

    name: str
    table: RewriteTable
    coproduct: dict            # generator name -> rank-2 TensorElement
    counit: dict               # generator name -> Fraction (constant term)
    casimir: Element = None

    def __post_init__(self):
        for n in self.gens.names:
            if n not in self.coproduct:
                raise StructureError(f"coproduct missing for generator {n}")
            if n not in self.counit:
                raise StructureError(f"counit missing for generator {n}")

    @property
    def gens(self):
        return self.table.gens

    @property
    def space(self):
        return self.table.space

    @property
    def order(self):
        return self.table.order

    def gen(self, name):
        return self.table.gen(name)

    def delta(self, x: Element) -> TensorElement:
        return apply_coproduct(x, self.coproduct, self.table)


@dataclass
class CheckEntry:
    name: str
    ok: bool
    residuals: list = field(default_factory=list)
    details: str = ""

    def to_json(self):
        out = {"name": self.name, "verdict": "pass" if self.ok else "fail"}
        if self.residuals:
            out["residual"] = [str(r) for r in self.residuals]
        if self.details:
            out["details"] = self.details
        return out


@dataclass
class VerificationReport:
    algebra: str
    order: int
    entries: list
    elapsed: float = 0.0

    @property
    def ok(self):
        return all(e.ok for e in self.entries)

    def to_json(self):
        return {
            "algebra": self.algebra,
            "order": self.order,
            "checks": [e.to_json() for e in self.entries],
            "verdict": "pass" if self.ok else "fail",
        }

    def to_text(self):
        lines = [f"{self.algebra}  (order {self.order})"]
        for e in self.entries:
            mark = "PASS" if e.ok else "FAIL"
            lines.append(f"  [{mark}] {e.name}" + (f"  {e.details}" if e.details else ""))
            for r in e.residuals:
                lines.append(f"         residual: {r}")
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# individual axiom checks
# ---------------------------------------------------------------------------

def check_jacobi(H: HopfPresentation) -> CheckEntry:
    """[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for all generator triples."""
    t = H.table
    residuals = []
    names = H.gens.names
    for a, b, c in itertools.combinations(names, 3):
        x, y, z = H.gen(a), H.gen(b), H.gen(c)
        r = (
            commutator(commutator(x, y, t), z, t)
            + commutator(commutator(y, z, t), x, t)
            + commutator(commutator(z, x, t), y, t)
        )
        if r:
            residuals.append(f"jacobi({a},{b},{c}) = {r}")
    return CheckEntry("jacobi", not residuals, residuals)


def check_relations_morphism(H: HopfPresentation) -> CheckEntry:
    """Delta([X,Y]) = [Delta(X), Delta(Y)] for every generator pair."""
    t = H.table
    residuals = []
    for a, b in itertools.combinations(H.gens.names, 2):
        lhs = H.delta(commutator(H.gen(a), H.gen(b), t))
        da, db = H.coproduct[a], H.coproduct[b]
        rhs = tensor_mul(da, db, t) - tensor_mul(db, da, t)
        r = lhs - rhs
        if r:
            residuals.append(f"Delta([{a},{b}]) mismatch: {r}")
    return CheckEntry("relations_morphism", not residuals, residuals)


def check_coassociativity(H: HopfPresentation) -> CheckEntry:
    """(Delta x id) Delta = (id x Delta) Delta on every generator."""
    residuals = []
    for n in H.gens.names:
        d = H.coproduct[n]
        left = coproduct_on_slot(d, 0, H.coproduct, H.table)
        right = coproduct_on_slot(d, 1, H.coproduct, H.table)
        r = left - right
        if r:
            residuals.append(f"coassoc({n}): {r}")
    return CheckEntry("coassociativity", not residuals, residuals)


def check_counit(H: HopfPresentation) -> CheckEntry:
    """(eps x id) Delta(X) = X = (id x eps) Delta(X)."""
    residuals = []
    for n in H.gens.names:
        d = H.coproduct[n]
        x = H.gen(n)
        left = counit_collapse(d, 0, H.counit) - x
        right = counit_collapse(d, 1, H.counit) - x
        if left:
            residuals.append(f"counit left({n}): {left}")
        if right:
            residuals.append(f"counit right({n}): {right}")
    return CheckEntry("counit", not residuals, residuals)


def check_casimir_central(H: HopfPresentation) -> CheckEntry:
    if H.casimir is None:
        return CheckEntry("casimir_central", True, details="no casimir declared")
    residuals = []
    for n in H.gens.names:
        r = commutator(H.casimir, H.gen(n), H.table)
        if r:
            residuals.append(f"[C,{n}] = {r}")
    return CheckEntry("casimir_central", not residuals, residuals)


# ---------------------------------------------------------------------------
# antipode
# ---------------------------------------------------------------------------

def apply_antipode(S, x: Element, table: RewriteTable) -> Element:
    """Extend generator images anti-multiplicatively to an Element."""
    acc = table.zero()
    for m, c in x.terms.items():
        piece = table.one()
        for name, e in reversed(list(zip(x.gens.names, m))):
            for _ in range(e):
                piece = mul(piece, S[name], table)
        acc = acc + piece.scale(c)
    return acc


def antipode_defect(H: HopfPresentation, S, name, side="left") -> Element:
    """m(S x id)Delta(X) - eps(X) 1  (or the id x S variant)."""
    d = H.coproduct[name]
    slot = 0 if side == "left" else 1
    acc = H.table.zero()
    for ms, c in d.terms.items():
        factors = list(ms)
        elt = Element(H.gens, H.space,
                      {factors[slot]: Series.one(H.space, H.order, H.table.floor)},
                      H.order, H.table.floor)
        s_img = apply_antipode(S, elt, H.table)
        other = Element(H.gens, H.space,
                        {factors[1 - slot]: Series.one(H.space, H.order, H.table.floor)},
                        H.order, H.table.floor)
        if side == "left":
            acc = acc + mul(s_img, other, H.table).scale(c)
        else:
            acc = acc + mul(other, s_img, H.table).scale(c)
    eps_val = Fraction(H.counit[name])
    if eps_val:
        acc = acc - H.table.one(eps_val)
    return acc


def solve_antipode(H: HopfPresentation):
    """Synthesize S on generators order-by-order in parameter weight.

    Starts from the primitive-coproduct guess S(X) = -X and peels off the
    defect of the left antipode axiom until it vanishes at truncation order."""
    S = {n: -H.gen(n) for n in H.gens.names}
    for _ in range(H.order + 2):
        defects = {n: antipode_defect(H, S, n, "left") for n in H.gens.names}
        if all(d.is_zero() for d in defects.values()):
            return S
        S = {n: S[n] - defects[n] for n in H.gens.names}
    raise SynthesisFailureError(
        f"antipode synthesis did not converge for {H.name} at order {H.order}"
    )


def check_antipode(H: HopfPresentation) -> CheckEntry:
    try:
        S = solve_antipode(H)
    except SynthesisFailureError as exc:
        return CheckEntry("antipode", False, [str(exc)])
    residuals = []
    for n in H.gens.names:
        r = antipode_defect(H, S, n, "right")
        if r:
            residuals.append(f"right antipode defect({n}): {r}")
    return CheckEntry("antipode", not residuals, residuals,
                      details="synthesized order-by-order")


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

ALL_CHECKS = (
    ("jacobi", check_jacobi),
    ("relations_morphism", check_relations_morphism),
    ("coassociativity", check_coassociativity),
    ("counit", check_counit),
    ("casimir_central", check_casimir_central),
    ("antipode", check_antipode),
)


def verify_all(H: HopfPresentation, checks=None) -> VerificationReport:
    t0 = time.perf_counter()
    wanted = set(checks) if checks else None
    entries = [fn(H) for key, fn in ALL_CHECKS if wanted is None or key in wanted]
    return VerificationReport(H.name, H.order, entries, time.perf_counter() - t0)
