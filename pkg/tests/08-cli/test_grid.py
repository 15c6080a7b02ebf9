import pytest

from besselnu.domain import BesselKind
from besselnu.errors import DomainError, GridSpecError
from besselnu.grid import EvaluationGrid, evaluate_grid, parse_grid


def test_parse_full_spec():
    grid = parse_grid("kind=J,Y;n=0,1,2;nu=-2:2:0.5;t=0.5,1,2")
    assert grid.kinds == (BesselKind.J, BesselKind.Y)
    assert grid.n_values == (0, 1, 2)
    assert grid.nu_values == (-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0)
    assert grid.t_values == (0.5, 1.0, 2.0)
    assert len(grid) == 2 * 3 * 9 * 3


def test_range_includes_endpoint_within_tolerance():
    grid = parse_grid("kind=K;n=0;nu=0:0.3:0.1;t=1")
    assert len(grid.nu_values) == 4


def test_cartesian_order():
    grid = parse_grid("kind=I,K;n=1;nu=0,1,2;t=1,2")
    requests = grid.requests()
    assert len(requests) == 12
    assert [(r.kind.value, r.nu, r.t) for r in requests[:4]] == [("I", 0.0, 1.0), ("I", 0.0, 2.0), ("I", 1.0, 1.0), ("I", 1.0, 2.0)]
    assert requests[6].kind is BesselKind.K


@pytest.mark.parametrize("spec", [
    "kind=J;n=0;nu=;t=1",
    "kind=J;n=0;t=1",
    "kind=J;n=0.5;nu=0;t=1",
    "kind=Q;n=0;nu=0;t=1",
    "kind=J;n=0;nu=2:1:0.5;t=1",
    "kind=J;n=0;nu=0:1:0;t=1",
    "kind=J;n=0;nu=abc;t=1",
    "kind=J;kind=Y;n=0;nu=0;t=1",
    "colour=J;n=0;nu=0;t=1",
])
def test_bad_specs(spec):
    with pytest.raises(GridSpecError):
        parse_grid(spec)


def test_domain_checked_on_expansion():
    grid = parse_grid("kind=J;n=0;nu=0;t=0")
    with pytest.raises(DomainError):
        grid.requests()


def test_empty_grid_rejected():
    with pytest.raises(GridSpecError):
        EvaluationGrid((BesselKind.J,), (0,), (), (1.0,))


def test_threaded_evaluation_keeps_order():
    grid = parse_grid("kind=J,I;n=0,1;nu=-1:1:0.5;t=0.5,3")
    serial = evaluate_grid(grid)
    threaded = evaluate_grid(grid, workers=4)
    assert [row.as_record() for row in serial] == [row.as_record() for row in threaded]
