import json

import pytest

from hopfc import catalog
from hopfc.algebra import mul
from hopfc.contraction import classical_limit, match_presentation
from hopfc.errors import LookupError_

ALL_NAMES = [
    "gl2.II.nonstandard", "gl2.II.standard", "gl2.Iplus.nonstandard",
    "gl2.Iplus.standard", "gl2.classical", "h4.alphaplus", "h4.betaplus.theta",
    "h4.betaplus.xi", "h4.classical", "h4.xi", "h4.xi.theta",
]


def test_names():
    assert catalog.names() == ALL_NAMES


def test_unknown_name_lists_valid_ones():
    with pytest.raises(LookupError_) as exc:
        catalog.get("gl2.bogus")
    assert "gl2.classical" in str(exc.value)


def test_get_is_cached():
    assert catalog.get("h4.xi", 3) is catalog.get("h4.xi", 3)


@pytest.mark.parametrize("name", ALL_NAMES)
def test_dump_schema(name):
    d = catalog.dump(name, 2)
    assert d["name"] == name
    assert d["catalog_version"] == catalog.CATALOG_VERSION
    assert d["order"] == 2
    assert len(d["generators"]) == 4
    assert len(d["central"]) == 1
    assert len(d["relations"]) == 6
    assert set(d["coproducts"]) == set(d["generators"])
    json.dumps(d)   # round-trippable


def test_list_cases():
    cases = catalog.list_cases()
    assert [c["name"] for c in cases] == sorted(catalog.CASES)
    flags = {c["name"]: c["correlated"] for c in cases}
    assert flags == {"II.standard": False, "II.nonstandard": False,
                     "Iplus.standard": False, "Iplus.nonstandard": True}


def test_unknown_case():
    with pytest.raises(LookupError_):
        catalog.get_case("nope")


def test_classical_casimirs_explicitly():
    G = catalog.get("gl2.classical", 3)
    t = G.table
    want = (mul(t.gen("J3"), t.gen("J3"), t)
            + mul(t.gen("Jp"), t.gen("Jm"), t).scale(2)
            + mul(t.gen("Jm"), t.gen("Jp"), t).scale(2))
    assert G.casimir == want
    H = catalog.get("h4.classical", 3)
    s = H.table
    want_h = (mul(s.gen("N"), s.gen("M"), s).scale(2)
              - mul(s.gen("Ap"), s.gen("Am"), s)
              - mul(s.gen("Am"), s.gen("Ap"), s))
    assert H.casimir == want_h


def test_classical_limit_casimirs_are_exact():
    for name in ("gl2.II.standard", "gl2.Iplus.standard"):
        lim = classical_limit(catalog.get(name, 3), rename={"J3p": "J3"})
        m = match_presentation(lim, catalog.get("gl2.classical", 3))
        assert m.match, m.residuals
    lim = classical_limit(catalog.get("h4.alphaplus", 3))
    assert match_presentation(lim, catalog.get("h4.classical", 3)).match
