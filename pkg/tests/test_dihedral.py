import pytest

from cambrianite import dihedral


@pytest.mark.parametrize("m", range(2, 13))
def test_dihedral_extra_vertex(m):
    report = dihedral.dihedral_check(m)
    assert report.passed, report.violations
    if m >= 3:
        assert report.details["non_singletons"] == m - 1
    assert report.details["distance"] < 1e-12


def test_pipeline_matches_the_closed_form():
    assert dihedral.dihedral_extra_vertex(5) == dihedral.closed_form_extra_vertex(5)


def test_unit_roots():
    field = dihedral.plane_field(7)
    assert dihedral.unit_root(7, 7) == dihedral.PlanePoint(-field.one, field.zero, 7)
    assert dihedral.unit_root(7, 3) * dihedral.unit_root(7, -3) == dihedral.unit_root(7, 0)
    assert abs(dihedral.unit_root(7, 2).numeric() - dihedral.unit_root(7, -12).numeric()) < 1e-12


def test_model_vertex_of_the_longest_element(systems):
    system = systems("I2(9)")
    assert dihedral.model_vertex(system.longest_element(), 9) == dihedral.unit_root(9, 9)
    assert dihedral.model_vertex(system.simple(1), 9) == dihedral.unit_root(9, -1)
    assert dihedral.model_vertex(system.simple(0), 9) == dihedral.unit_root(9, 1)


def test_closed_form_numeric():
    exact = dihedral.closed_form_extra_vertex(6).numeric()
    assert abs(exact - dihedral.closed_form_numeric(6)) < 1e-12
