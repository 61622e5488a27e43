"""Smoke tests for the python bindings: a few known exact values per surface."""

import json

import pytest

import lck


def show(name, **params):
    return lck.catalog_show(name, {k: str(v) for k, v in params.items()})


def test_catalog_lists_the_known_entries():
    names = lck.catalog_list()
    assert "heisenberg" in names
    assert "omega_psi" in names
    assert "kodaira_secondary" in names


def test_lie_algebra_surface():
    g = lck.LieAlgebra.from_json(show("heisenberg"))
    assert g.dim == 3
    assert g.basis == ["X1", "Y1", "Z"]
    assert g.bracket(["1", "0", "0"], ["0", "1", "0"]) == ["0", "0", "-1"]
    assert g.jacobi_defects() == 0
    assert g.is_unimodular()
    assert g.is_nilpotent()
    assert g.center_dim() == 1

    su2 = lck.LieAlgebra.from_json(show("su2"))
    assert su2.is_semisimple()
    assert su2.killing_form() == [["-2", "0", "0"], ["0", "-2", "0"], ["0", "0", "-2"]]


def test_sasaki_check():
    report = lck.check(show("sl2r"), "sasaki")
    assert report["pass"]
    assert {item["id"] for item in report["items"]} == {
        "contact",
        "reeb",
        "tensor",
        "metric",
        "killing_cr",
    }


def test_vaisman_criterion_of_the_family():
    good = lck.check(show("omega_psi", a=0, b=0, c=1), "vaisman")
    assert good["pass"]
    bad = lck.check(show("omega_psi", a=1, b=0, c=2), "vaisman")
    assert not bad["pass"]
    vaisman_item = next(i for i in bad["items"] if i["id"] == "vaisman")
    assert not vaisman_item["pass"]
    assert "g([xi,U],V)" in vaisman_item["witness"]


def test_lee_data():
    data = lck.lee_data(show("omega_psi", a=0, b=1, c=2))
    assert data["lck"]
    assert not data["vaisman"]
    assert data["theta_coeffs"] == ["1", "0", "0", "0"]  # theta = t
    assert data["xi"] == ["2/3", "1/3", "0", "0"]
    assert data["xi_norm"] == "2/3"


def test_classify():
    assert lck.classify(show("r_times_su2"))["verdict"] == "SU2"
    assert lck.classify(show("r_times_sl2r"))["verdict"] == "SL2R"
    assert lck.classify(show("kodaira_secondary"))["verdict"] == "HEISENBERG(1)"
    not_vaisman = lck.classify(show("omega_psi", a=1, b=0, c=2))
    assert not not_vaisman["ok"]
    assert not_vaisman["error"] == "NotVaisman"


def test_quantize_is_heisenberg():
    doc = lck.quantize(show("complex_space", k=2))
    parsed = json.loads(doc)
    assert parsed["dim"] == 5
    g = lck.LieAlgebra.from_json(doc)
    assert g.is_nilpotent()
    assert g.center_dim() == 1


def test_quotient_round_trip():
    quotient = lck.kahler_quotient(show("heisenberg", k=2))
    assert json.loads(quotient)["dim"] == 4
    back = lck.quantize(quotient)
    assert json.loads(back)["dim"] == 5


def test_canonical_vaisman_all_b():
    for b in ["-2", "0", "1/2", "3"]:
        doc = lck.canonical_vaisman(show("su2"), b)
        report = lck.check(doc, "vaisman")
        assert report["pass"], (b, report)


def test_modify_reaches_the_secondary_table():
    map_doc = json.dumps(
        {
            "generators": [
                ["0", "1", "0", "0", "-1", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0"]
            ],
            "coefficients": [["0"], ["0"], ["0"], ["1"]],
        }
    )
    out = lck.modify(show("kodaira_primary"), map_doc)
    expected = json.loads(show("kodaira_secondary"))
    assert json.loads(out)["brackets"] == expected["brackets"]


def test_input_errors_are_typed():
    with pytest.raises(lck.InputError):
        lck.catalog_show("no_such_entry", {})
    with pytest.raises(lck.InputError):
        lck.check('{"dim": 1, "basis": ["a"], "brackets": []}', "vaisman")
