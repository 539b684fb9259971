import pytest

from cambrianite import sortable
from cambrianite.exceptions import CommutationClassTooLarge, JobSpecError, NotSortable
from cambrianite.sortable import (
    CoxeterElementChoice,
    c_sorting_word,
    commutation_class,
    enumerate_c_sortables,
    is_c_singleton,
    is_c_sortable,
    lattice_for,
    pi_down,
    pi_up,
)

# One column per Coxeter element of S4
S4_SINGLETONS = {
    "s1s2s3": [
        "e",
        "s1",
        "s1s2",
        "s1s2s3",
        "s1s2s1",
        "s1s2s3s1",
        "s1s2s3s1s2",
        "s1s2s3s1s2s1",
    ],
    "s3s2s1": [
        "e",
        "s3",
        "s3s2",
        "s3s2s1",
        "s3s2s3",
        "s3s2s1s3",
        "s3s2s1s3s2",
        "s3s2s1s3s2s3",
    ],
    "s2s1s3": [
        "e",
        "s2",
        "s2s3",
        "s2s1",
        "s2s1s3",
        "s2s1s3s2",
        "s2s1s3s2s1",
        "s2s1s3s2s3",
        "s2s1s3s2s1s3",
    ],
    "s3s1s2": [
        "e",
        "s1",
        "s3",
        "s3s1",
        "s3s1s2",
        "s3s1s2s1",
        "s3s1s2s3",
        "s3s1s2s3s1",
        "s3s1s2s3s1s2",
    ],
}


@pytest.mark.parametrize("c_word", sorted(S4_SINGLETONS))
def test_s4_singletons(a3, element, coxeter_element, c_word):
    c = coxeter_element(a3, c_word)
    expected = {element(a3, word) for word in S4_SINGLETONS[c_word]}
    lattice = lattice_for(c)
    assert set(lattice.singletons) == expected
    assert set(lattice.singletons_via_antisortable) == expected
    assert set(lattice.singletons_via_prefixes) == expected


@pytest.mark.parametrize("name", ["A3", "B3", "H3"] + ["I2({})".format(m) for m in range(2, 9)])
def test_singleton_tests_agree(systems, name):
    system = systems(name)
    for word in system.coxeter_elements():
        report = sortable.singleton_agreement_check(system, CoxeterElementChoice(system, word))
        assert report.passed, report.violations


def test_sorting_words_of_w0(a3, coxeter_element):
    for c_word, expected in [("s1s2s3", "s1s2s3|s1s2|s1"), ("s2s1s3", "s2s1s3|s2s1s3")]:
        c = coxeter_element(a3, c_word)
        assert str(c_sorting_word(a3.longest_element(), c)) == expected


def test_sorting_word_blocks(a3, element, coxeter_element):
    c = coxeter_element(a3, "s1s2s3")
    factorization = c_sorting_word(element(a3, "s2s1"), c)
    assert str(factorization) == "s2|s1"
    assert not factorization.nested
    assert not is_c_sortable(element(a3, "s2s1"), c)
    assert is_c_sortable(element(a3, "s1s2s1"), c)
    assert str(c_sorting_word(a3.identity(), c)) == "e"


@pytest.mark.parametrize(
    "name, count", [("A2", 5), ("A3", 14), ("B2", 6), ("B3", 20), ("H3", 32), ("I2(5)", 7)]
)
def test_sortable_counts(systems, name, count):
    system = systems(name)
    for word in system.coxeter_elements():
        c = CoxeterElementChoice(system, word)
        assert len(enumerate_c_sortables(system, c)) == count


def test_projection_goldens(a3, element, coxeter_element):
    c = coxeter_element(a3, "s2,s1,s3")
    assert pi_down(element(a3, "s3s2s1"), c) == element(a3, "s3")
    assert pi_down(element(a3, "s2s3s2"), c) == element(a3, "s2s3s2")
    assert pi_up(element(a3, "s1s3"), c) == element(a3, "s1s3s2s1s3")
    assert lattice_for(c).pi_up_via_duality(element(a3, "s1s3")) == element(a3, "s1s3s2s1s3")


def test_fiber_and_non_singletons(a3, element, coxeter_element):
    c = coxeter_element(a3, "s2s1s3")
    lattice = lattice_for(c)
    assert element(a3, "s1s3") not in lattice.singletons
    assert not is_c_singleton(element(a3, "s1s3s2"), c)
    assert not is_c_singleton(element(a3, "s2s3s2"), c)
    assert is_c_singleton(element(a3, "s2s3"), c, method="antisortable")
    fiber = sortable.cambrian_fiber(element(a3, "s3"), c)
    assert element(a3, "s3s2s1") in fiber
    with pytest.raises(NotSortable):
        lattice.fiber(element(a3, "s3s2s1"))
    with pytest.raises(ValueError):
        is_c_singleton(a3.identity(), c, method="guess")


def test_fibers_partition_the_group(b3, coxeter_element):
    lattice = lattice_for(coxeter_element(b3))
    members = [w for fiber in lattice.fibers.values() for w in fiber]
    assert len(members) == len(set(members)) == 48


def test_cover_graph(a3, element, coxeter_element):
    lattice = lattice_for(coxeter_element(a3, "s1s2s3"))
    graph = lattice.cover_graph
    assert graph.number_of_nodes() == 14
    assert lattice.is_cover(a3.identity(), element(a3, "s1"))
    assert not lattice.is_cover(a3.identity(), element(a3, "s1s2"))


@pytest.mark.parametrize("c_word", sorted(S4_SINGLETONS))
def test_s4_singletons_form_a_distributive_lattice(a3, coxeter_element, c_word):
    report = sortable.singleton_lattice_check(a3, coxeter_element(a3, c_word))
    assert report.passed, report.violations
    assert report.details["size"] == len(S4_SINGLETONS[c_word])


def test_b3_singletons_form_a_distributive_lattice(b3, coxeter_element):
    report = sortable.singleton_lattice_check(b3, coxeter_element(b3))
    assert report.passed, report.violations


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_structure_reports(systems, coxeter_element, name):
    system = systems(name)
    c = coxeter_element(system)
    for check in (
        sortable.sorting_word_check,
        sortable.factorization_independence_check,
        sortable.projection_check,
        sortable.singleton_cover_factorization_check,
        sortable.prefix_closure_check,
    ):
        report = check(system, c)
        assert report.passed, (report.name, report.violations)


def test_commutation_class(a3):
    assert set(commutation_class(a3, (0, 2, 1))) == {(0, 2, 1), (2, 0, 1)}
    with pytest.raises(CommutationClassTooLarge):
        list(commutation_class(a3, (0, 2, 1, 0, 2), max_words=2))


def test_coxeter_element_choice(a3, b2):
    c = CoxeterElementChoice.parse(a3, "s2,s1,s3")
    assert str(c) == "s2s1s3"
    assert c.is_initial(1)
    assert not c.is_initial(0)
    assert not c.is_initial(2)
    assert CoxeterElementChoice.parse(a3, "s1,s3,s2").is_initial(2)
    assert str(c.inverse()) == "s3s1s2"
    with pytest.raises(JobSpecError):
        CoxeterElementChoice.parse(a3, "s1,s2")
    with pytest.raises(JobSpecError):
        CoxeterElementChoice.parse(b2, "s1,s1")
