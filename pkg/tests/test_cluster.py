import pytest

from cambrianite import cluster
from cambrianite.cluster import ClusterComplex, is_c_compatible

CLUSTERS = {
    "s1s2s3": [
        {"-a1", "-a2", "-a3"},
        {"a1", "-a2", "-a3"},
        {"a1", "a1+a2", "-a3"},
        {"a2", "a1+a2", "-a3"},
        {"a1", "a1+a2", "a1+a2+a3"},
        {"a2", "a1+a2", "a1+a2+a3"},
        {"a2", "a2+a3", "a1+a2+a3"},
        {"a3", "a2+a3", "a1+a2+a3"},
        {"-a1", "-a2", "a3"},
        {"a1", "-a2", "a3"},
        {"a1", "a1+a2+a3", "a3"},
        {"-a1", "a2+a3", "a3"},
        {"-a1", "a2", "a2+a3"},
        {"-a1", "a2", "-a3"},
    ],
    "s2s1s3": [
        {"-a1", "-a2", "-a3"},
        {"-a1", "a2", "-a3"},
        {"a1+a2", "a2", "-a3"},
        {"-a1", "a2", "a2+a3"},
        {"a1+a2", "a2", "a2+a3"},
        {"a1+a2", "a1+a2+a3", "a2+a3"},
        {"a1", "a1+a2", "a1+a2+a3"},
        {"a3", "a2+a3", "a1+a2+a3"},
        {"a1", "a1+a2+a3", "a3"},
        {"-a1", "-a2", "a3"},
        {"-a1", "a2+a3", "a3"},
        {"a1", "-a2", "a3"},
        {"a1", "-a2", "-a3"},
        {"a1", "a1+a2", "-a3"},
    ],
}


def _as_strings(complex_):
    return {frozenset(str(r) for r in facet) for facet in complex_.facets}


@pytest.mark.parametrize("c_word", sorted(CLUSTERS))
def test_a3_clusters(a3, ones, coxeter_element, c_word):
    complex_ = ClusterComplex.build(a3, coxeter_element(a3, c_word), ones(a3))
    assert _as_strings(complex_) == {frozenset(facet) for facet in CLUSTERS[c_word]}


def test_clusters_of_single_vertices(a3, ones, element, coxeter_element):
    complex_ = ClusterComplex.build(a3, coxeter_element(a3, "s1s2s3"), ones(a3))
    assert {str(r) for r in complex_.clusters[a3.identity()]} == {"-a1", "-a2", "-a3"}
    assert {str(r) for r in complex_.clusters[element(a3, "s1s2s1")]} == {"a2", "a1+a2", "-a3"}
    assert {str(r) for r in complex_.clusters[element(a3, "s1s2s3")]} == {
        "a1",
        "a1+a2",
        "a1+a2+a3",
    }


def test_clusters_follow_the_coxeter_element(a3, ones, element, coxeter_element):
    complex_ = ClusterComplex.build(a3, coxeter_element(a3, "s2s1s3"), ones(a3))
    assert {str(r) for r in complex_.clusters[element(a3, "s2s1s3")]} == {"a2", "a1+a2", "a2+a3"}


def test_compatibility(a3, ones, coxeter_element):
    complex_ = ClusterComplex.build(a3, coxeter_element(a3, "s1s2s3"), ones(a3))
    assert is_c_compatible(complex_, ["-a1", "a2+a3"])
    assert is_c_compatible(complex_, [])
    assert not is_c_compatible(complex_, ["a1", "-a1"])
    assert not is_c_compatible(complex_, ["a1", "a2"])


def test_f_vector_and_flag(a3, ones, coxeter_element):
    complex_ = ClusterComplex.build(a3, coxeter_element(a3), ones(a3))
    assert complex_.f_vector() == [1, 9, 21, 14]
    assert complex_.is_flag()
    assert complex_.compatibility_graph.number_of_edges() == 21


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "I2(5)"])
def test_cluster_reports(systems, ones, coxeter_element, name):
    system = systems(name)
    complex_ = ClusterComplex.build(system, coxeter_element(system), ones(system))
    for check in (
        cluster.complex_stats,
        cluster.compatibility_equivalence_check,
        cluster.face_poset_check,
    ):
        report = check(complex_)
        assert report.passed, (report.name, report.violations)


def test_serialize(a2, ones, coxeter_element):
    data = ClusterComplex.build(a2, coxeter_element(a2), ones(a2)).serialize()
    assert data["coxeter_element"] == "s1s2"
    assert len(data["clusters"]) == 5
    assert data["clusters"][0] == {"word": "e", "roots": ["-a1", "-a2"]}
    assert data["f_vector"] == [1, 5, 5]
