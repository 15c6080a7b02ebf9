import math

import pytest

from besselnu.errors import DomainError
from besselnu.identities import REGISTRY, IdentityReport, check_reflection
from common import M_GRID, T_GRID

INTEGER_ORDER_IDENTITIES = [
    "refl_J1", "refl_J2", "refl_J2_closed",
    "refl_Y1", "refl_Y2", "refl_Y2_closed",
    "refl_I1", "refl_I2", "refl_I2_closed", "refl_I_half",
    "conn_I_integer", "conn_I_half",
]


@pytest.mark.parametrize("identity_id", INTEGER_ORDER_IDENTITIES)
@pytest.mark.parametrize("m", M_GRID)
@pytest.mark.parametrize("t", T_GRID)
def test_integer_order_identities(identity_id, m, t):
    report = check_reflection(identity_id, {"m": m, "t": t})
    assert report.passed, report


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("mu", [0.3, 0.7, 1.5, 2.5])
@pytest.mark.parametrize("t", T_GRID)
def test_general_i_reflection(n, mu, t):
    report = check_reflection("refl_I_general", {"n": n, "mu": mu, "t": t})
    assert report.rel_residual <= 1e-8


@pytest.mark.parametrize("n", range(5))
@pytest.mark.parametrize("mu", [0.0, 0.5, 1.3, 2.0])
@pytest.mark.parametrize("t", T_GRID)
def test_k_reflection_vanishes(n, mu, t):
    report = check_reflection("refl_K", {"n": n, "mu": mu, "t": t})
    assert report.rhs == 0.0
    assert report.abs_residual <= 1e-12


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(4))
@pytest.mark.parametrize("t", [0.5, 2.0, 10.0])
def test_integer_and_half_integer_specialisations(n, m, t):
    assert check_reflection("refl_I_integer", {"n": n, "m": m, "t": t}).passed
    assert check_reflection("refl_I_half_general", {"n": n, "m": m, "t": t}).passed


@pytest.mark.parametrize("m", M_GRID)
@pytest.mark.parametrize("t", [0.5, 2.0, 10.0])
def test_general_reflection_specialises_to_first_order(m, t):
    general = check_reflection("refl_I_general", {"n": 1, "mu": float(m), "t": t})
    first = check_reflection("refl_I1", {"m": m, "t": t})
    assert abs(general.lhs - first.lhs) <= 1e-10 * (1.0 + abs(first.lhs))
    assert abs(general.rhs - first.rhs) <= 1e-10 * (1.0 + abs(first.rhs))


def test_j1_at_zero_order_doubles_the_derivative():
    report = check_reflection("refl_J1", {"m": 0, "t": 1.0})
    assert report.passed
    assert report.rhs == pytest.approx(math.pi * 0.08825696421567696, rel=1e-10)


def test_general_i_at_zero_order_is_the_connection_formula():
    report = check_reflection("refl_I_general", {"n": 0, "mu": 0.3, "t": 2.0})
    assert report.passed


def test_report_arithmetic():
    report = IdentityReport.from_sides("demo", {"m": 1}, 3.0, 1.0, 0.5)
    assert report.abs_residual == 2.0
    assert report.rel_residual == 1.0
    assert not report.passed
    assert report.to_dict()["name"] == "demo"


def test_tolerance_override():
    report = check_reflection("refl_J1", {"m": 1, "t": 1.0}, tol=0.0)
    assert report.tolerance == 0.0


def test_unknown_identity():
    with pytest.raises(DomainError):
        check_reflection("refl_Z", {"m": 1, "t": 1.0})


def test_registry_covers_every_reflection_theorem():
    expected = {"refl_J1", "refl_J2", "refl_J2_closed", "refl_Y1", "refl_Y2", "refl_Y2_closed",
                "refl_I_general", "refl_I1", "refl_I2", "refl_I_half", "refl_K"}
    assert expected <= set(REGISTRY)
