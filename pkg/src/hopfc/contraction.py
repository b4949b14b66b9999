"""Generalized Lie-bialgebra contraction engine: generator scaling maps,
minimal-exponent solving for r and delta, coboundary verdicts, quantum
contraction by the eps -> 0 limit, and Casimir-limit prescriptions."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    Element,
    GeneratorSet,
    RewriteTable,
    TensorElement,
    apply_coproduct,
    commutator,
    mul,
    substitute_generators,
)
from .bialgebra import LieStructure, WedgeTensor
from .errors import DivergenceError, StructureError
from .hopf import HopfPresentation
from .series import (
    DEFAULT_FLOOR,
    EPS,
    EXACT_FLOOR,
    EXACT_ORDER,
    ParamSpace,
    Series,
)


# ---------------------------------------------------------------------------
# case data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ScalingMap:
    """Invertible eps-dependent change of generators.

    ``forward``: new generator name -> list of (Fraction, coeff-monomial dict,
    old generator name); ``inverse``: old name -> same shape over new names.
    Coefficient monomials are exponent dicts over workspace symbols (eps and
    source parameters)."""

    new_gens: GeneratorSet
    forward: dict
    inverse: dict


@dataclass(frozen=True)
class ParamImage:
    coeff: Fraction
    eps_exp: int
    target: str | None    # None: pure constant image


@dataclass(frozen=True)
class ContractionCase:
    name: str
    source: str
    target: str
    scaling: ScalingMap
    param_map: dict            # source symbol -> ParamImage (catalog coordinates)
    lie_r_name: str            # classical r-matrix catalog name
    lie_param_map: dict        # original paper parameters -> ParamImage
    lie_groups: dict           # original parameter -> group key for the solver
    target_params: tuple       # specs for the contracted ParamSpace
    casimir_counterterm: object = None   # callable(table) -> Element over source gens
    expected_exponents: dict = field(default_factory=dict)

    def target_space(self):
        return ParamSpace.make(*self.target_params)


@dataclass
class ExponentSolution:
    r_min: dict
    delta_min: dict
    coboundary: bool
    r_contracted: WedgeTensor = None

    def to_json(self):
        return {
            "r_min": {k: v for k, v in sorted(self.r_min.items())},
            "delta_min": {k: v for k, v in sorted(self.delta_min.items())},
            "coboundary": self.coboundary,
            "r_contracted": str(self.r_contracted) if self.r_contracted else None,
        }


# ---------------------------------------------------------------------------
# Lie-level transformation and the minimal-exponent solver
# ---------------------------------------------------------------------------

def _lie_sigma(space, param_map, exponents=None):
    """Parameter substitution old symbol -> c * eps^n * new, as Series."""
    sigma = {}
    for old, img in param_map.items():
        n = img.eps_exp if exponents is None else exponents.get(old, img.eps_exp)
        mono = {}
        if n:
            mono[EPS] = n
        if img.target is not None:
            mono[img.target] = 1
        sigma[old] = Series.term(space, mono, img.coeff, EXACT_ORDER, EXACT_FLOOR)
    return sigma


def transform_wedge(w: WedgeTensor, lie_inverse, new_gens, space, sigma) -> WedgeTensor:
    """Push a wedge tensor through the (inverse) generator scaling and a
    parameter substitution; wedge cancellation happens here, before any
    valuation is read off."""
    tensor = {}
    for (i, j), c in w.entries.items():
        c2 = c.substitute(sigma, order=EXACT_ORDER, floor=EXACT_FLOOR, space=space)
        for f1, e1, k1 in lie_inverse[i]:
            for f2, e2, k2 in lie_inverse[j]:
                if k1 == k2:
                    continue
                v = c2 * Series.term(space, {EPS: e1 + e2} if e1 + e2 else {},
                                     f1 * f2, EXACT_ORDER, EXACT_FLOOR)
                for key, s in (((k1, k2), 1), ((k2, k1), -1)):
                    t = tensor.get(key)
                    vv = v * s
                    tensor[key] = vv if t is None else t + vv
    return WedgeTensor.from_tensor(new_gens, space, EXACT_ORDER, EXACT_FLOOR, tensor)


def _min_exponents_from(wedges, space, group_syms):
    """Per group, the minimal integer n making every surviving eps exponent
    nonnegative.  ``wedges``: iterable of WedgeTensor."""
    eps_i = space.index(EPS)
    sym_i = {s: space.index(s) for syms in group_syms.values() for s in syms}
    mins = {g: None for g in group_syms}
    for w in wedges:
        for c in w.entries.values():
            for exps in c.terms:
                v = exps[eps_i]
                for g, syms in group_syms.items():
                    d = sum(exps[sym_i[s]] for s in syms)
                    if d > 0:
                        need = math.ceil(Fraction(-v, d))
                        if mins[g] is None or need > mins[g]:
                            mins[g] = need
    return mins


def solve_min_exponents(case: ContractionCase, order=4):
    """Minimal eps exponents for the classical r-matrix and the cocommutator,
    plus the coboundary verdict and the contracted r at the minima."""
    from . import catalog

    r = catalog.classical_r(case.lie_r_name)
    L = catalog.lie_structure(case.source)
    lie_fwd, lie_inv = catalog.lie_scaling(case.source)
    new_gens = case.scaling.new_gens

    # workspace: old params + new params + eps
    specs = [(s, r.space.weights[i], r.space.invertible[i])
             for i, s in enumerate(r.space.symbols)]
    new_syms = sorted({img.target for img in case.lie_param_map.values() if img.target})
    space = ParamSpace.make(*specs, *[(s, 1, False) for s in new_syms], EPS)

    group_syms = {}
    for old, g in case.lie_groups.items():
        tgt = case.lie_param_map[old].target
        if tgt:
            group_syms.setdefault(g, set()).add(tgt)

    sigma0 = _lie_sigma(space, case.lie_param_map,
                        exponents={p: 0 for p in case.lie_param_map})

    r_t = transform_wedge(r, lie_inv, new_gens, space, sigma0)
    r_min = _min_exponents_from([r_t], space, group_syms)

    from .bialgebra import cocommutator_from_r
    delta = cocommutator_from_r(L, r)
    d_wedges = []
    for y in range(new_gens.dim):
        acc = WedgeTensor(new_gens, space, EXACT_ORDER, EXACT_FLOOR, {})
        for f, e, oldg in lie_fwd[y]:
            piece = transform_wedge(delta[oldg], lie_inv, new_gens, space, sigma0)
            scale = Series.term(space, {EPS: e} if e else {}, f, EXACT_ORDER, EXACT_FLOOR)
            acc = acc + piece.scale(scale)
        d_wedges.append(acc)
    d_min = _min_exponents_from(d_wedges, space, group_syms)

    constrained = [g for g in group_syms if r_min[g] is not None or d_min[g] is not None]
    coboundary = all(r_min[g] == d_min[g] for g in constrained)

    # contracted r at the minimal exponents
    exps = {}
    for old, g in case.lie_groups.items():
        if r_min.get(g) is not None:
            exps[old] = r_min[g]
    sigma = _lie_sigma(space, case.lie_param_map, exponents=exps)
    r_lim = transform_wedge(r, lie_inv, new_gens, space, sigma)
    entries = {}
    for k, c in r_lim.entries.items():
        lim = c.limit_zero(EPS, context=f"contracted r entry {k}")
        if lim:
            entries[k] = lim
    r_contracted = WedgeTensor(new_gens, space.without(EPS), EXACT_ORDER, EXACT_FLOOR, entries)

    return ExponentSolution(r_min, d_min, coboundary, r_contracted)


# ---------------------------------------------------------------------------
# quantum contraction
# ---------------------------------------------------------------------------

def _eps_slice(c: Series, context):
    """eps -> 0 limit keeping the ambient space; divergence raises."""
    i = c.space.index(EPS)
    bad = sorted(e for e in c.terms if e[i] < 0)
    if bad:
        raise DivergenceError([c._render_term(e, c.terms[e]) for e in bad], context=context)
    return Series(c.space, {e: v for e, v in c.terms.items() if e[i] == 0},
                  c.order, c.floor)


def _mono_series(space, coeff, mono):
    return Series.term(space, mono, coeff, EXACT_ORDER, EXACT_FLOOR)


def _combo_element(table, combo, sigma):
    """Linear combination [(Fraction, coeff-monomial, gen name)] -> Element,
    with the parameter substitution applied to the coefficients."""
    acc = table.zero()
    for f, mono, gname in combo:
        c = _mono_series(table.space, f, mono)
        if sigma:
            c = c.substitute(sigma, order=EXACT_ORDER, floor=EXACT_FLOOR, space=table.space)
        acc = acc + table.gen(gname, coeff=c)
    return acc


def _embed_table(table: RewriteTable, space) -> RewriteTable:
    rules = {
        k: Element(r.gens, space,
                   {m: c.embed(space, EXACT_ORDER, EXACT_FLOOR) for m, c in r.terms.items()},
                   EXACT_ORDER, EXACT_FLOOR)
        for k, r in table.rules.items()
    }
    return RewriteTable(table.gens, space, EXACT_ORDER, EXACT_FLOOR, rules)


def _embed_tensor(t: TensorElement, space) -> TensorElement:
    return TensorElement(t.rank, t.gens, space,
                         {ms: c.embed(space, EXACT_ORDER, EXACT_FLOOR)
                          for ms, c in t.terms.items()},
                         EXACT_ORDER, EXACT_FLOOR)


def _embed_element(x: Element, space) -> Element:
    return Element(x.gens, space,
                   {m: c.embed(space, EXACT_ORDER, EXACT_FLOOR) for m, c in x.terms.items()},
                   EXACT_ORDER, EXACT_FLOOR)


#: bootstrap order for target rewrite-rule construction: rules among the
#: already-ordered generators are computed before they are first needed.
def _pair_sequence(dim):
    return [(i, j) for i in range(dim) for j in range(i)]


def contract_hopf(case: ContractionCase, order=4, force_exponents=None) -> HopfPresentation:
    """Substitute the scaling and parameter maps into every structure map of
    the source, take the eps -> 0 limit, and assemble the contracted
    presentation (with its contracted Casimir, if the source has one)."""
    from . import catalog

    src = catalog.get(case.source, order)
    tgt_space = case.target_space()
    specs = [(s, src.space.weights[i], src.space.invertible[i])
             for i, s in enumerate(src.space.symbols)]
    specs += [(s, tgt_space.weights[i], tgt_space.invertible[i])
              for i, s in enumerate(tgt_space.symbols)]
    ws = ParamSpace.make(*specs, EPS)

    sigma = {}
    for old, img in case.param_map.items():
        n = img.eps_exp if force_exponents is None else force_exponents.get(old, img.eps_exp)
        mono = {}
        if n:
            mono[EPS] = n
        if img.target is not None:
            mono[img.target] = 1
        sigma[old] = _mono_series(ws, img.coeff, mono)

    src_table = _embed_table(src.table, ws)
    src_delta = {n: _embed_tensor(t, ws) for n, t in src.coproduct.items()}

    new_gens = case.scaling.new_gens
    scaffold = RewriteTable(
        new_gens, ws, EXACT_ORDER, EXACT_FLOOR,
        {(i, j): Element.zero(new_gens, ws, EXACT_ORDER, EXACT_FLOOR)
         for i in range(new_gens.dim) for j in range(i)},
    )

    inverse_images = {
        old: _combo_element(scaffold, combo, sigma)
        for old, combo in case.scaling.inverse.items()
    }
    forward_elements = {
        new: _combo_element(src_table, combo, sigma)
        for new, combo in case.scaling.forward.items()
    }

    def contract_element(x: Element, context) -> Element:
        y = substitute_generators(x, inverse_images, scaffold, param_sub=sigma)
        return y.map_coeffs(lambda c, _ctx=context: _eps_slice(c, _ctx))

    # rewrite rules, in bootstrap order
    for i, j in _pair_sequence(new_gens.dim):
        ni, nj = new_gens.names[i], new_gens.names[j]
        com = commutator(forward_elements[ni], forward_elements[nj], src_table)
        rule = contract_element(com, f"[{ni},{nj}]")
        if (new_gens.central[i] or new_gens.central[j]) and rule:
            raise StructureError(f"contraction broke centrality: [{ni},{nj}] = {rule}")
        scaffold.set_rule_by_index(i, j, rule)

    # coproducts
    coproduct = {}
    for y in new_gens.names:
        d = apply_coproduct(forward_elements[y], src_delta, src_table)
        dc = substitute_generators(d, inverse_images, scaffold, param_sub=sigma)
        coproduct[y] = TensorElement(
            2, new_gens, ws,
            {ms: _eps_slice(c, f"Delta({y})") for ms, c in dc.terms.items()},
            EXACT_ORDER, EXACT_FLOOR,
        )

    # Casimir: lim eps^2 ( -C/2 + counterterm )
    casimir = None
    if src.casimir is not None and case.casimir_counterterm is not None:
        c_src = _embed_element(src.casimir, ws)
        counterterm = _embed_element(case.casimir_counterterm(src.table), ws)
        expr = c_src.scale(Fraction(-1, 2)) + counterterm
        expr = expr.scale(_mono_series(ws, Fraction(1), {EPS: 2}))
        casimir = contract_element(expr, "casimir limit")

    # assemble at the requested order over the target space
    def finalize(c: Series):
        return c.restrict(tgt_space, order=order, floor=DEFAULT_FLOOR)

    rules = {
        k: Element(new_gens, tgt_space, {m: finalize(c) for m, c in r.terms.items()},
                   order, DEFAULT_FLOOR)
        for k, r in scaffold.rules.items()
    }
    table = RewriteTable(new_gens, tgt_space, order, DEFAULT_FLOOR, rules)
    delta = {
        n: TensorElement(2, new_gens, tgt_space,
                         {ms: finalize(c) for ms, c in t.terms.items()},
                         order, DEFAULT_FLOOR)
        for n, t in coproduct.items()
    }
    cas = None
    if casimir is not None:
        cas = Element(new_gens, tgt_space,
                      {m: finalize(c) for m, c in casimir.terms.items()},
                      order, DEFAULT_FLOOR)
    return HopfPresentation(
        name=f"{case.source} --({case.name})--> {case.target}",
        table=table,
        coproduct=delta,
        counit={n: Fraction(0) for n in new_gens.names},
        casimir=cas,
    )


def contract_casimir(case: ContractionCase, order=4) -> Element:
    got = contract_hopf(case, order)
    if got.casimir is None:
        raise StructureError(f"case {case.name} has no Casimir prescription")
    return got.casimir


# ---------------------------------------------------------------------------
# presentation comparison and change of basis
# ---------------------------------------------------------------------------

@dataclass
class MatchReport:
    match: bool
    residuals: list

    def to_json(self):
        return {"verdict": "match" if self.match else "mismatch",
                "residuals": [str(r) for r in self.residuals]}


def _align(c: Series, space):
    return c.embed(space, EXACT_ORDER, EXACT_FLOOR)


def match_presentation(got: HopfPresentation, want: HopfPresentation, order=None) -> MatchReport:
    """Term-for-term comparison of rewrite rules, coproducts, and Casimirs."""
    residuals = []
    if got.gens.names != want.gens.names:
        return MatchReport(False, [f"generator mismatch: {got.gens.names} vs {want.gens.names}"])
    space = got.space.union(want.space)

    def diff(a, b):
        out = {}
        for m, c in a.items():
            out[m] = _align(c, space)
        for m, c in b.items():
            d = out.get(m)
            cc = _align(c, space)
            d = -cc if d is None else d - cc
            if d:
                out[m] = d
            else:
                out.pop(m, None)
        return out

    for k in sorted(got.table.rules):
        r = diff(got.table.rules[k].terms, want.table.rules[k].terms)
        if r:
            i, j = k
            residuals.append(f"rule [{got.gens.names[i]},{got.gens.names[j]}]: {r}")
    for n in got.gens.names:
        r = diff(got.coproduct[n].terms, want.coproduct[n].terms)
        if r:
            residuals.append(f"coproduct({n}): {r}")
        if Fraction(got.counit[n]) != Fraction(want.counit[n]):
            residuals.append(f"counit({n}): {got.counit[n]} vs {want.counit[n]}")
    if (got.casimir is None) != (want.casimir is None):
        residuals.append("casimir present on one side only")
    elif got.casimir is not None:
        r = diff(got.casimir.terms, want.casimir.terms)
        if r:
            residuals.append(f"casimir: {r}")
    return MatchReport(not residuals, residuals)


def change_of_basis(H: HopfPresentation, forward: dict) -> HopfPresentation:
    """Rewrite all structure maps in a new PBW basis given by
    ``forward``: generator name -> Element (new basis element in old basis).

    The map must be unitriangular: forward(X) = X + terms of positive
    parameter weight."""
    table = H.table
    gens = H.gens
    order = H.order

    # invert order-by-order: old generator as Element over the primed basis
    inverse = {n: table.gen(n) for n in gens.names}
    for _ in range(order + 2):
        nxt = {}
        for n in gens.names:
            corr = forward[n] - table.gen(n)
            nxt[n] = table.gen(n) - substitute_generators(corr, inverse, table)
        if all(nxt[n] == inverse[n] for n in gens.names):
            inverse = nxt
            break
        inverse = nxt
    check = {n: substitute_generators(forward[n], inverse, table) for n in gens.names}
    for n in gens.names:
        if check[n] != table.gen(n):
            raise StructureError(f"basis map not invertible at order {order}: {n}")

    new_table = RewriteTable(
        gens, H.space, order, table.floor,
        {(i, j): Element.zero(gens, H.space, order, table.floor)
         for i in range(gens.dim) for j in range(i)},
    )
    for i, j in _pair_sequence(gens.dim):
        ni, nj = gens.names[i], gens.names[j]
        com = commutator(forward[ni], forward[nj], table)
        rule = substitute_generators(com, inverse, new_table)
        new_table.set_rule_by_index(i, j, rule)

    coproduct = {}
    for n in gens.names:
        d = apply_coproduct(forward[n], H.coproduct, table)
        coproduct[n] = substitute_generators(d, inverse, new_table)
    casimir = None
    if H.casimir is not None:
        casimir = substitute_generators(H.casimir, inverse, new_table)
    return HopfPresentation(
        name=f"{H.name} [basis change]",
        table=new_table,
        coproduct=coproduct,
        counit=dict(H.counit),
        casimir=casimir,
    )


def classical_limit(H: HopfPresentation, rename=None) -> HopfPresentation:
    """All deformation parameters -> 0, optionally renaming generators."""
    names = tuple(rename.get(n, n) if rename else n for n in H.gens.names)
    gens = GeneratorSet(names, H.gens.central)
    space = ParamSpace.make()

    def limit(c: Series):
        out = c
        for s in H.space.symbols:
            out = out.zero_slice(s)
        return out.restrict(space, order=H.order, floor=H.table.floor)

    rules = {
        k: Element(gens, space, {m: limit(c) for m, c in r.terms.items()},
                   H.order, H.table.floor)
        for k, r in H.table.rules.items()
    }
    table = RewriteTable(gens, space, H.order, H.table.floor, rules)
    delta = {
        names[i]: TensorElement(2, gens, space,
                                {ms: limit(c) for ms, c in H.coproduct[n].terms.items()},
                                H.order, H.table.floor)
        for i, n in enumerate(H.gens.names)
    }
    cas = None
    if H.casimir is not None:
        cas = Element(gens, space, {m: limit(c) for m, c in H.casimir.terms.items()},
                      H.order, H.table.floor)
    counit = {names[i]: H.counit[n] for i, n in enumerate(H.gens.names)}
    return HopfPresentation(f"{H.name} [classical limit]", table, delta, counit, cas)
