import os
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from hopfc import catalog
from hopfc.algebra import (
    Element,
    GeneratorSet,
    RewriteTable,
    TensorElement,
    commutator,
    counit_collapse,
    generator_function,
    mul,
    substitute_generators,
    tensor_mul,
)
from hopfc.errors import (
    ConfluenceFailureError,
    NonTruncatableError,
    UnsupportedArgumentError,
)
from hopfc.series import DEFAULT_FLOOR, EXACT_FLOOR, EXACT_ORDER, ParamSpace, Series


def fresh(name, order=4):
    # uncached presentation (safe to poke at)
    return catalog._BUILDERS[name](order)


# ---------------------------------------------------------------------------
# normal forms
# ---------------------------------------------------------------------------

def test_classical_jm_jp():
    t = fresh("gl2.classical").table
    got = t.nf_word((t.gens.index("Jm"), t.gens.index("Jp")))
    want = Element.monomial(t.gens, t.space, {"Jp": 1, "Jm": 1}, t.order, t.floor) \
        - t.gen("J3")
    assert got == want


def test_classical_j3_jp():
    t = fresh("gl2.classical").table
    got = t.nf_word((t.gens.index("J3"), t.gens.index("Jp")))
    want = Element.monomial(t.gens, t.space, {"Jp": 1, "J3": 1}, t.order, t.floor) \
        + t.gen("Jp", coeff=t.scalar(2))
    assert got == want


def test_sinh_deformed_jm_jp_at_order_3():
    # Taylor oracle: [Jp, Jm] = sinh(a J3)/a = J3 + a^2 J3^3/6 at N=3
    t = fresh("gl2.II.standard", 3).table
    got = t.nf_word((t.gens.index("Jm"), t.gens.index("Jp")))
    want = (Element.monomial(t.gens, t.space, {"Jp": 1, "Jm": 1}, 3, t.floor)
            - t.gen("J3")
            - Element.monomial(t.gens, t.space, {"J3": 3}, 3, t.floor,
                               coeff=Series.term(t.space, {"a": 2}, F(1, 6), 3)))
    assert got == want


def test_unit_law():
    t = fresh("h4.xi").table
    x = t.gen("Am") + t.gen("N", coeff=t.sym("xi"))
    assert mul(t.one(), x, t) == x
    assert mul(x, t.one(), t) == x


def test_oscillator_deformed_commutator():
    # A- A+ - A+ A- = sinh(xi M)/xi = M + xi^2 M^3/6 at N=3
    t = fresh("h4.xi", 3).table
    got = mul(t.gen("Am"), t.gen("Ap"), t) - mul(t.gen("Ap"), t.gen("Am"), t)
    want = t.gen("M") + Element.monomial(
        t.gens, t.space, {"M": 3}, 3, t.floor,
        coeff=Series.term(t.space, {"xi": 2}, F(1, 6), 3))
    assert got == want


def test_central_generator_commutes():
    for name in ("h4.xi", "gl2.Iplus.nonstandard"):
        H = fresh(name, 3)
        t = H.table
        central = "M" if "M" in t.gens.names else "I"
        for g in t.gens.names:
            assert not commutator(t.gen(central), t.gen(g), t)


def test_shifted_basis_commutator():
    t = fresh("gl2.Iplus.standard", 3).table
    assert commutator(t.gen("J3p"), t.gen("Jp"), t) == t.gen("Jp", coeff=t.scalar(2))


def test_square_bracket_family():
    # [J3, Jm] = -2 Jm + (a_plus/2)(J3 - lam I)^2
    t = fresh("gl2.Iplus.nonstandard", 3).table
    d = t.gen("J3") - t.gen("I", coeff=t.sym("lam"))
    want = t.gen("Jm", coeff=t.scalar(-2)) + mul(d, d, t).scale(t.sym("a_plus") * F(1, 2))
    assert commutator(t.gen("J3"), t.gen("Jm"), t) == want


# ---------------------------------------------------------------------------
# generator functions
# ---------------------------------------------------------------------------

def test_exp_of_generator():
    t = fresh("gl2.Iplus.nonstandard", 2).table
    got = generator_function("exp", t.gen("Jp", coeff=t.sym("a_plus")), t)
    want = (t.one() + t.gen("Jp", coeff=t.sym("a_plus"))
            + Element.monomial(t.gens, t.space, {"Jp": 2}, 2, t.floor,
                               coeff=Series.term(t.space, {"a_plus": 2}, F(1, 2), 2)))
    assert got == want


def test_expm1_over_arg_of_generator():
    # (e^{a_plus Jp} - 1)/a_plus = Jp + a_plus Jp^2/2 + ... (cleared form)
    t = fresh("gl2.Iplus.nonstandard", 1).table
    got = mul(t.gen("Jp"),
              generator_function("expm1_over_arg", t.gen("Jp", coeff=t.sym("a_plus")), t),
              t)
    want = t.gen("Jp") + Element.monomial(
        t.gens, t.space, {"Jp": 2}, 1, t.floor,
        coeff=Series.symbol(t.space, "a_plus", 1, t.floor, coeff=F(1, 2)))
    assert got == want


def test_exp_inverse_pair():
    t = fresh("gl2.II.standard", 4).table
    arg = t.gen("J3", coeff=t.sym("a", coeff=F(1, 2)))
    e = generator_function("exp", arg, t)
    em = generator_function("exp", -arg, t)
    assert mul(e, em, t) == t.one()


def test_generator_function_guards():
    t = fresh("gl2.classical", 3).table
    with pytest.raises(NonTruncatableError):
        generator_function("exp", t.gen("J3"), t)
    t2 = fresh("gl2.II.standard", 3).table
    arg = t2.gen("J3", coeff=t2.sym("a")) + t2.gen("Jp", coeff=t2.sym("a"))
    with pytest.raises(UnsupportedArgumentError):
        generator_function("exp", arg, t2)


# ---------------------------------------------------------------------------
# generator substitution (oscillator scaling images)
# ---------------------------------------------------------------------------

def _scaled_images():
    space = ParamSpace.make("eps")
    h4 = catalog.H4
    t = RewriteTable(
        h4, space, EXACT_ORDER, EXACT_FLOOR,
        {(i, j): Element.zero(h4, space, EXACT_ORDER, EXACT_FLOOR)
         for i in range(4) for j in range(i)},
    )
    t.set_rule("N", "Ap", t.gen("Ap"))
    t.set_rule("N", "Am", -t.gen("Am"))
    t.set_rule("Am", "Ap", t.gen("M"))
    images = {
        "I": t.gen("M", coeff=t.sym("eps", power=-2)),
        "Jp": t.gen("Ap", coeff=t.sym("eps", power=-1)),
        "Jm": t.gen("Am", coeff=t.sym("eps", power=-1)),
        "J3": t.gen("N", coeff=t.scalar(2)) - t.gen("M", coeff=t.sym("eps", power=-2)),
    }
    return t, images


def test_substitute_i_squared():
    t, images = _scaled_images()
    gl2 = catalog.GL2
    space = ParamSpace.make("eps")
    x = Element.monomial(gl2, space, {"I": 2}, EXACT_ORDER, EXACT_FLOOR)
    got = substitute_generators(x, images, t)
    want = Element.monomial(t.gens, space, {"M": 2}, EXACT_ORDER, EXACT_FLOOR,
                            coeff=Series.term(space, {"eps": -4}, 1,
                                              EXACT_ORDER, EXACT_FLOOR))
    assert got == want


def test_substitute_j3_plus_i():
    t, images = _scaled_images()
    gl2 = catalog.GL2
    space = ParamSpace.make("eps")
    x = (Element.generator(gl2, space, "J3", EXACT_ORDER, EXACT_FLOOR)
         + Element.generator(gl2, space, "I", EXACT_ORDER, EXACT_FLOOR))
    got = substitute_generators(x, images, t)
    assert got == t.gen("N", coeff=t.scalar(2))


# ---------------------------------------------------------------------------
# tensor-slot arithmetic
# ---------------------------------------------------------------------------

def test_slot_independence():
    t = fresh("gl2.classical", 3).table
    x = TensorElement.outer([t.one(), t.gen("Jp")])
    y = TensorElement.outer([t.gen("Jp"), t.one()])
    assert tensor_mul(x, y, t) == TensorElement.outer([t.gen("Jp"), t.gen("Jp")])


def test_coproduct_is_morphism_on_deformed_commutator():
    # Delta(A+)Delta(A-) - Delta(A-)Delta(A+) = Delta([A+, A-]) at N=3
    H = fresh("h4.xi.theta", 3)
    t = H.table
    da, db = H.coproduct["Ap"], H.coproduct["Am"]
    lhs = tensor_mul(da, db, t) - tensor_mul(db, da, t)
    rhs = H.delta(commutator(t.gen("Ap"), t.gen("Am"), t))
    assert lhs == rhs


def test_counit_collapse_of_grouplike_leg():
    H = fresh("gl2.II.standard", 3)
    t = H.table
    leg = generator_function("exp", t.gen("J3", coeff=t.sym("a", coeff=F(1, 2))), t)
    x = TensorElement.outer([leg, t.gen("Jp")])
    got = counit_collapse(x, 0, H.counit)
    assert got == t.gen("Jp")


# ---------------------------------------------------------------------------
# confluence / associativity and the step budget
# ---------------------------------------------------------------------------

@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=4),
       st.lists(st.integers(0, 3), max_size=3),
       st.lists(st.integers(0, 3), max_size=3))
def test_mul_associative_classical(w1, w2, w3):
    t = fresh("gl2.classical", 4).table
    xs = [t.nf_word(tuple(w)) for w in (w1, w2, w3)]
    assert mul(mul(xs[0], xs[1], t), xs[2], t) == mul(xs[0], mul(xs[1], xs[2], t), t)


@pytest.mark.parametrize("name", ["gl2.II.standard", "gl2.Iplus.nonstandard",
                                  "h4.alphaplus", "h4.betaplus.xi"])
def test_mul_associative_deformed(name):
    t = fresh(name, 3).table
    gens = [t.gen(n) for n in t.gens.names]
    for x in gens:
        for y in gens:
            for z in gens:
                assert mul(mul(x, y, t), z, t) == mul(x, mul(y, z, t), t)


def test_rewrite_order_independence():
    # the word Jm J3 Jp has two descents; first-descent rewriting must agree
    # with resolving the other descent first (local confluence)
    t = fresh("gl2.II.standard", 3).table
    i_jm, i_j3, i_jp = (t.gens.index(n) for n in ("Jm", "J3", "Jp"))
    direct = t.nf_word((i_jm, i_j3, i_jp))
    # resolve (J3, Jp) first by hand: Jm (Jp J3 + 2 Jp)
    alt = t.nf_word((i_jm, i_jp, i_j3)) + t.nf_word((i_jm, i_jp), coeff=t.scalar(2))
    assert direct == alt


def test_step_budget_env(monkeypatch):
    monkeypatch.setenv("HOPFC_STEP_BUDGET", "1")
    t = fresh("gl2.classical", 4).table
    i_jm, i_jp = t.gens.index("Jm"), t.gens.index("Jp")
    with pytest.raises(ConfluenceFailureError):
        t.nf_word((i_jm, i_jm, i_jp, i_jp))
