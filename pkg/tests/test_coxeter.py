import pytest

from cambrianite.coxeter import build_system, parse_coxeter_type
from cambrianite.exceptions import DimensionMismatch, GroupTooLarge, JobSpecError, NonFinite
from cambrianite.functions import format_word, parse_generators


@pytest.mark.parametrize(
    "name, order, positive",
    [
        ("A1", 2, 1),
        ("A2", 6, 3),
        ("A3", 24, 6),
        ("B2", 8, 4),
        ("B3", 48, 9),
        ("H3", 120, 15),
        ("I2(5)", 10, 5),
        ("I2(7)", 14, 7),
        ("A1xA1", 4, 2),
    ],
)
def test_group_order(systems, name, order, positive):
    system = systems(name)
    assert len(system.enumerate_group()) == order
    assert system.roots.num_positive == positive
    assert system.longest_element().length == positive


def test_crystallographic_normalization(a3, b3, h3):
    assert a3.crystallographic
    assert b3.crystallographic
    assert not h3.crystallographic
    assert [a3.roots.gram[s][s] for s in range(3)] == [2, 2, 2]
    assert sorted(b3.roots.gram[s][s].to_fraction() for s in range(3)) == [2, 4, 4]


def test_unit_roots_over_the_cosine_field(systems):
    system = systems("I2(5)", unit_roots=True)
    assert system.roots.gram[0][0] == 1
    assert not system.field.is_rational
    assert system.field.describe()["minimal_polynomial"] == "z**2 - z - 1"


def test_simple_reflections_are_involutions(a3):
    for s in range(3):
        assert a3.simple(s) * a3.simple(s) == a3.identity()


def test_braid_relations(h3, element):
    assert element(h3, "s1s2s1s2s1") == element(h3, "s2s1s2s1s2")
    assert element(h3, "s1s3") == element(h3, "s3s1")
    assert element(h3, "s2s3s2") == element(h3, "s3s2s3")


def test_descents(a3, element):
    w = element(a3, "s1s2")
    assert w.right_descents() == {1}
    assert w.left_descents() == {0}
    assert a3.descents(w, side="left") == {0}
    with pytest.raises(ValueError):
        a3.descents(w, side="up")


def test_weak_order(a3, element):
    u, v = element(a3, "s1"), element(a3, "s1s2s1")
    assert a3.weak_order_leq(u, v)
    assert not a3.weak_order_leq(element(a3, "s3"), v)
    assert a3.weak_order_leq_definitional(u, v)
    assert not a3.weak_order_leq_definitional(v, u)


@pytest.mark.parametrize("name", ["A2", "A3", "B2"])
def test_weak_order_matches_its_definition_on_every_pair(systems, name):
    system = systems(name)
    elements = system.enumerate_group()
    for x in elements:
        for y in elements:
            assert system.weak_order_leq(x, y) == system.weak_order_leq_definitional(x, y)


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(5)", "I2(8)"])
def test_fundamental_weights_are_dual_to_simple_roots(systems, name):
    system = systems(name)
    for s in range(system.rank):
        for t in range(system.rank):
            pairing = system.inner(system.roots.simple_root(s), system.fundamental_weights[t])
            assert pairing == (1 if s == t else 0)


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_action_preserves_the_form(systems, name):
    system = systems(name)
    x = system.vector(range(1, system.rank + 1))
    y = system.fundamental_weights[0]
    for w in system.enumerate_group():
        assert system.inner(w.act(x), w.act(y)) == system.inner(x, y)
        assert system.inner(w.act(x), w.act(x)) == system.inner(x, x)


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_action_is_a_homomorphism(systems, name):
    system = systems(name)
    x = system.vector(range(1, system.rank + 1))
    factors = [system.simple(s) for s in range(system.rank)] + [system.longest_element()]
    for u in system.enumerate_group():
        for v in factors:
            assert (u * v).act(x) == u.act(v.act(x))
            assert (v * u).act(x) == v.act(u.act(x))


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(7)"])
def test_ascents_add_one_inversion(systems, name):
    system = systems(name)
    for w in system.enumerate_group():
        for s in range(system.rank):
            if s in w.right_descents():
                continue
            ws = w.right_multiply(s)
            assert ws.length == w.length + 1
            assert ws.inversions == w.inversions | {w.images[s]}
            assert ws.has_right_descent(s)


def test_inverse_and_reduced_word(b3, element):
    w = element(b3, "s1s2s3s2")
    assert w * w.inverse() == b3.identity()
    assert b3.is_reduced(w.reduced_word())
    assert not b3.is_reduced((0, 0))
    assert b3.element_from_word(w.reduced_word()) == w


def test_longest_element_word(a3):
    assert format_word(a3.longest_element().reduced_word()) == "s1s2s1s3s2s1"


def test_parabolic_components(a3, element):
    w = element(a3, "s1s2s3s1")
    head, tail = a3.parabolic_components(w, {0, 1})
    assert head * tail == w
    assert not head.right_descents() & {0, 1}
    assert head.length + tail.length == w.length


def test_act_on_vector(a2, element):
    x = a2.vector([1, 0])
    assert a2.act_on_vector(element(a2, "s1"), x) == a2.vector([-1, 0])
    assert a2.act_on_vector(element(a2, "s2"), x) == a2.vector([1, 1])
    with pytest.raises(DimensionMismatch):
        a2.act_on_vector(a2.identity(), a2.vector([1, 0, 0]))


def test_coxeter_elements(a3, b3, systems):
    assert len(a3.coxeter_elements()) == 4
    assert len(b3.coxeter_elements()) == 4
    assert len(systems("A1xA1").coxeter_elements()) == 1


def test_type_parser():
    assert parse_coxeter_type("I2(7)").m(0, 1) == 7
    assert parse_coxeter_type("C3").m(0, 1) == 4
    assert parse_coxeter_type("A2xB2").rank == 4
    with pytest.raises(JobSpecError):
        parse_coxeter_type("Q3")
    with pytest.raises(JobSpecError):
        parse_coxeter_type("D2")


def test_matrix_input():
    system = build_system('{"coxeter_matrix": [[1, 3], [3, 1]], "name": "tri"}')
    assert system.name == "tri"
    assert len(system.enumerate_group()) == 6
    with pytest.raises(JobSpecError):
        build_system([[1, 3], [4, 1]])


def test_infinite_systems_are_rejected():
    with pytest.raises(NonFinite):
        build_system([[1, "inf"], ["inf", 1]])
    with pytest.raises(NonFinite):
        build_system([[1, 3, 3], [3, 1, 3], [3, 3, 1]])


def test_order_guard():
    system = build_system("A4")
    with pytest.raises(GroupTooLarge):
        system.enumerate_group(max_order=50)


def test_words_are_plain_letter_sequences(a3):
    assert a3.element_from_word(iter([0, 1])) == a3.element_from_word((0, 1))
    assert a3.is_reduced([0, 1, 0])
    assert not a3.is_reduced(s for s in (2, 2))


def test_order_guard_applies_after_enumeration():
    system = build_system("A4")
    assert len(system.enumerate_group(max_order=200)) == 120
    with pytest.raises(GroupTooLarge):
        system.enumerate_group(max_order=50)
    assert len(system.enumerate_group(max_order=120)) == 120


def test_parse_generators():
    assert parse_generators("s2,s1,s3", 3) == (1, 0, 2)
    assert parse_generators("s2s1s3", 3) == (1, 0, 2)
    assert parse_generators("2,1,3", 3) == (1, 0, 2)
    with pytest.raises(JobSpecError):
        parse_generators("s4", 3)
    with pytest.raises(JobSpecError):
        parse_generators("t1", 3)
