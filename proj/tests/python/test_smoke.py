import math

import numpy as np
import pytest

import radialwell as rw


def test_conventional_spectrum():
    s = rw.well_spectrum(1.0, 0, "conventional", 3)
    assert len(s) == 3
    assert s.k == pytest.approx([math.pi, 2 * math.pi, 3 * math.pi], rel=1e-15)
    assert [e["nodes"] for e in s.entries] == [0, 1, 2]
    assert s.to_csv().startswith("n,k,E,nodes\n")


def test_huang_thomann_rejected_for_l_above_zero():
    with pytest.raises(rw.NonNormalizableError):
        rw.well_spectrum(1.0, 1, "huang-thomann", 2)
    with pytest.raises(ValueError):
        rw.well_spectrum(1.0, 1, "huang-thomann", 2)


def test_bessel_zero():
    assert rw.bessel_zero(1, 1) == pytest.approx(4.493409457909064, rel=1e-14)
    assert rw.spherical_j(0, np.array([math.pi, 2 * math.pi])) == pytest.approx([0, 0], abs=1e-15)


def test_audit_verdicts():
    conv = rw.spectrum_modes(rw.well_spectrum(1.0, 2, "conventional", 2))
    assert all(rw.audit(m).verdict == "PASS" for m in conv)
    ht = rw.normalize(rw.RadialMode.analytic(1.5 * math.pi, 0, 1.0, A=0.0, B=1.0))
    report = rw.audit(ht)
    assert report.verdict == "FAIL_EQ6"
    assert report.endpoint_magnitudes[0][0] == pytest.approx(math.sqrt(2))
    assert rw.pr_defect(ht, ht) == pytest.approx(2j)


def test_mode_evaluation_vectorized():
    m = rw.normalize(rw.RadialMode.analytic(math.pi, 0, 1.0))
    r = np.linspace(0.0, 1.0, 11)
    assert m.chi(r) == pytest.approx(math.sqrt(2) * np.sin(math.pi * r), abs=1e-14)


def test_delta_weight_and_filter():
    est = rw.delta_weight(rw.RadialMode.analytic(1.0, 0, 1.0, A=0.0, B=1.0))
    assert est.extrapolated_weight == pytest.approx(-math.sqrt(4 * math.pi), rel=1e-9)
    assert est.convergence_order == pytest.approx(2.0, abs=0.5)
    r = rw.regularity_filter(rw.RadialMode.analytic(math.pi, 0, 1.0, A=0.0, B=1.0))
    assert not r["accepted"] and r["reason"] == "delta-source"
    assert rw.frobenius_indicial(rw.PotentialSpec.coulomb(1.0, 1.0), 1) == pytest.approx((2, -1))


def test_shooting_coulomb():
    cfg = rw.ShootingConfig()
    spectrum, modes, warnings = rw.shooting_solve(rw.PotentialSpec.coulomb(1.0, 1.0), 0, 2, cfg)
    assert spectrum.energies[0] == pytest.approx(7.3739850719769793, rel=1e-5)
    assert len(modes) == 2 and warnings == []
    cfg.integrator = "numerov"
    spectrum2, _, _ = rw.shooting_solve(rw.PotentialSpec.coulomb(1.0, 1.0), 0, 2, cfg)
    assert spectrum2.energies == pytest.approx(spectrum.energies, rel=1e-8)
    with pytest.raises(rw.BracketError):
        cfg.k_hi = 2.0
        rw.shooting_solve(rw.PotentialSpec.zero(1.0), 0, 1, cfg)
