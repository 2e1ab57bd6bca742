import cmath
import json
import math

import pytest

import abcone


def test_gamma_and_bessel():
    assert abcone.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    x = 1.7
    assert abcone.bessel_j(0.5, x) == pytest.approx(math.sqrt(2 / (math.pi * x)) * math.sin(x), rel=1e-14)
    assert abcone.bessel_k(0.5, x) == pytest.approx(math.sqrt(math.pi / (2 * x)) * math.exp(-x), rel=1e-14)
    z = cmath.rect(2.0, -math.pi / 4)
    want = cmath.sqrt(math.pi / (2 * z)) * cmath.exp(-z)
    assert abs(abcone.bessel_k_complex(0.5, z) - want) <= 1e-14 * abs(want)


def test_region():
    assert abcone.critical_channels(1.0, 0.5, 1) == [-1, 0]
    assert abcone.critical_channels(0.25, 0.5, -1) == [-1]
    assert abcone.alpha_min(1) == pytest.approx(1 / 3, abs=1e-12)
    with pytest.raises(ValueError):
        abcone.critical_channels(0.0, 0.5, 1)


def test_scattering():
    delta = abcone.phase_shift(0, 0.3, 1.0)
    assert delta == pytest.approx(-0.15 * math.pi, abs=1e-14)
    s = abcone.s_matrix(0, 0.3, 2.0, nu=-4.0)
    assert abs(abs(s) - 1.0) <= 1e-12


def test_bound_states_agree():
    nu = abcone.nu_from_physical(0.5, -1.5, 1.0)
    assert nu == pytest.approx(-0.5, rel=1e-15)
    bg = abcone.bound_state_bg(0.5, nu)
    ks = abcone.bound_state_ks(0.5, -1.5, 1.0)
    assert bg["energy"] == pytest.approx(-0.125, rel=1e-14)
    assert ks["energy"] == pytest.approx(bg["energy"], rel=1e-13)
    assert abcone.smatrix_pole(0.5, nu) == pytest.approx(bg["kappa_b"], rel=1e-8)
    assert abcone.shell_bound_state(0.5, -1.5, 1.0)["method"] == "SHELL"
    with pytest.raises(abcone.NumericalError):
        abcone.shell_bound_state(0.3, -0.2, 1.0)


def test_deficiency():
    r = abcone.deficiency_norm(0.5, 1.0)
    assert r["converged"]
    assert r["value"] == pytest.approx(math.pi / (2 * math.sqrt(2)), rel=1e-8)
    assert abcone.deficiency_indices(0.4, 1.0) == (1, 1)
    assert abcone.deficiency_indices(1.5, 1.0) == (0, 0)


def test_cli_in_process():
    code, out, _ = abcone.cli(["region", "--alpha", "1", "--phi", "0.5"])
    assert code == 0
    banner, body = out.split("\n", 1)
    assert banner == "# units: hbar=c=1"
    assert [c["m"] for c in json.loads(body)["critical"]] == [-1, 0]


def test_verify_reports_every_module():
    checks = abcone.run_verify()
    assert {c["module"] for c in checks} == {"specfun", "model", "bg", "ks", "oracle"}
