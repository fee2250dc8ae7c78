"""Smoke tests for the python module (built in-tree or pip-installed)."""

import pytest

import monopole_obstruct as mo


def test_invariants():
    inv = mo.invariants("3H+2E8m")
    assert inv["rank"] == 22
    assert inv["signature"] == -16
    assert inv["b_plus"] == 3
    assert inv["even"] is True


def test_dirac_index():
    assert mo.dirac_index("10H+6E8m", spin=True) == 6
    assert mo.dirac_index("8D1m", c2=-8) == 0
    with pytest.raises(ValueError):
        mo.dirac_index("E8m", c2=1)


def test_lattice_parse_error():
    with pytest.raises(ValueError):
        mo.invariants("3Q")


def test_donaldson_and_furuta():
    r = mo.check_donaldson("E8m", spin=True)
    assert r["verdict"] == "obstructed"
    assert r["witness"]["d"] == 1

    assert mo.check_donaldson("8D1m", c2=-8)["verdict"] == "consistent"
    assert mo.check_furuta("2H+2E8m")["verdict"] == "obstructed"
    assert mo.check_furuta("3H+2E8m")["verdict"] == "consistent"


def test_zp_action_check():
    hyp = {
        "lattice": "10H+6E8m",
        "spin": True,
        "action": {"p": 3, "d": [6, 0, 0], "h": [0, 5, 5], "inv_dim": 0},
    }
    r = mo.check_zp(hyp)
    assert r["verdict"] == "obstructed"
    assert r["witness"]["j"] == 0
    assert r["witness"]["certificate"]["polynomial"] is False


def test_scenarios():
    s = mo.scenario_branched_cover(3, 5, 1)
    assert s["report"]["verdict"] == "obstructed"
    assert s["flags"]["wall_realizable"] is True
    assert s["extras"]["invariants"]["d"] == 6

    spin = mo.scenario_spin_family(3, 1)
    assert spin["report"]["witness"]["nonzero_w_indices"] == [1]
    assert spin["extras"]["torus_dim"] == 1

    assert mo.scenario_nonspin_family(1, 0)["report"]["verdict"] == "obstructed"
    assert (
        mo.scenario_nonspin_family(1, 0, trivialize_bundle=True)["report"]["verdict"]
        == "consistent"
    )


def test_rep_ring_ops():
    assert mo.lambda_total(3, [0, 1, 0]) == [1, 1, 0]
    assert mo.psi2(3, [0, 1, 0]) == [0, 0, 1]
    assert mo.k_euler(3, [0, 1, 0]) == [1, 0, -1]
    # Regular representation has vanishing character at the generator.
    assert mo.character_at(3, [1, 1, 1], 1) == [0, 0]
    assert mo.repring_divide(2, [16, 0], [4, 0]) == [4, 0]
    assert mo.repring_divide(3, [1, 1, 1], [1, 1, 0]) is None


def test_certificates():
    assert mo.z2_certificate(4, -1, 0)["polynomial"] is True
    c = mo.z2_certificate(4, 1, 0)
    assert c["polynomial"] is False and c["witness_root"] == 0
    assert mo.zp_certificate(3, [0, -1, -1], [0, 2, 2])["polynomial"] is True
    assert mo.zp_certificate(3, [1, 0, 0], [0, 2, 2])["polynomial"] is False


def test_binomial_mod2():
    assert mo.binomial_mod2(4, 2) == 0
    assert mo.binomial_mod2(3, 1) == 1
