import json
from fractions import Fraction

import pytest
import yaml

from cambrianite.exceptions import JobSpecError
from cambrianite.models.JobSpec import JobSpec
from cambrianite.models.Report import Report


def test_type_string():
    spec = JobSpec.parse("B3")
    assert spec.system == "B3"
    assert spec.c is None


def test_inline_json():
    spec = JobSpec.parse('{"system": "A3", "coxeter_element": "s2,s1,s3", "base_point": "1,2,3"}')
    assert spec.system == "A3"
    assert spec.c == "s2,s1,s3"
    assert spec.base_point == [Fraction(1), Fraction(2), Fraction(3)]


def test_inline_coxeter_matrix():
    spec = JobSpec.parse('{"coxeter_matrix": [[1, 5], [5, 1]]}')
    assert spec.system["coxeter_matrix"] == [[1, 5], [5, 1]]


def test_job_files(tmp_path):
    path = tmp_path / "job.yml"
    path.write_text(
        yaml.safe_dump(
            {"type": "H3", "c": "s3,s2,s1", "base_point": [1, "1/2", 2], "export": "off"}
        )
    )
    spec = JobSpec.parse(str(path))
    assert spec.system == "H3"
    assert spec.c == "s3,s2,s1"
    assert spec.base_point[1] == Fraction(1, 2)
    assert spec.export == "off"

    path = tmp_path / "job.json"
    path.write_text(json.dumps({"coxeter_matrix": [[1, 3], [3, 1]], "name": "tri"}))
    assert JobSpec.parse(str(path)).system == {"coxeter_matrix": [[1, 3], [3, 1]], "name": "tri"}


@pytest.mark.parametrize(
    "value",
    [
        '{"system": "A3",',
        '{"c": "s1,s2"}',
        '{"system": "A2", "base_point": "1,-1"}',
        '{"system": "A2", "base_point": "1,x"}',
    ],
)
def test_bad_jobs(value):
    with pytest.raises(JobSpecError):
        JobSpec.parse(value)


def test_serialize():
    spec = JobSpec.from_mapping({"system": "A2", "base_point": [1, 2]})
    assert spec.serialize()["base_point"] == ["1", "2"]


def test_report():
    report = Report("pointing")
    assert report.check(True, "never recorded")
    assert report.status == "passed"
    assert not report.check(False, "s1 and e")
    assert report.status == "failed"
    assert report.serialize()["violations"] == ["s1 and e"]
    assert Report("integer").skip("H3 is not crystallographic").status == "skipped"
