import json
import re

import yaml

from cambrianite.blueprints.cli import cambrianite_cli


def invoke(runner, *args):
    return runner.invoke(cambrianite_cli, list(args))


def test_group(runner):
    result = invoke(runner, "group", "H3")
    assert result.exit_code == 0, result.output
    assert "order: 120" in result.output
    assert "positive roots: 15" in result.output
    assert "crystallographic: false" in result.output
    assert "number field: z**2 - z - 1" in result.output


def test_sortables(runner):
    result = invoke(runner, "sortables", "A3", "--c", "s2,s1,s3")
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "# 14 c-sortable elements of A3 for c = s2s1s3"
    assert len(lines) == 15
    assert lines[1] == "e"


def test_singletons(runner):
    result = invoke(runner, "singletons", "A3", "--c", "s2,s1,s3")
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].startswith("# 9 c-singletons of A3")
    assert len(lines) == 10
    assert "disagree" not in result.output


def test_bad_input_exits_with_two(runner):
    assert invoke(runner, "group", "Q3").exit_code == 2
    assert invoke(runner, "group", "[[1, 3], [4, 1]]").exit_code == 2
    assert invoke(runner, "sortables", "A3", "--c", "s1,s2").exit_code == 2
    assert invoke(runner, "perm", "A3", "--base-point", "1,0,1").exit_code == 2
    assert invoke(runner, "group", "A3", "--max-order", "10").exit_code == 2
    assert invoke(runner, "compat", "A3", "a1+a3").exit_code == 2
    assert invoke(runner, "export", "A2", "--format", "off").exit_code == 2
    assert invoke(runner, "dihedral", "1").exit_code == 2


def test_compat(runner):
    result = invoke(runner, "compat", "A3", "--c", "s1,s2,s3", "-a1", "a2+a3")
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "compatible"
    result = invoke(runner, "compat", "A3", "a1", "-a1")
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "not compatible"


def test_polytopes(runner):
    result = invoke(runner, "perm", "A2")
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)["vertices"]) == 6

    result = invoke(runner, "asso", "A3", "--export", "off")
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[:2] == ["OFF", "14 9 0"]


def test_permutahedron_marks_admissible_half_spaces(runner):
    result = invoke(runner, "perm", "A3")
    assert result.exit_code == 0, result.output
    assert not any(h["admissible"] for h in json.loads(result.output)["halfspaces"])

    result = invoke(runner, "perm", "A3", "--c", "s2,s1,s3")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["coxeter_element"] == "s2s1s3"
    admissible = [h for h in data["halfspaces"] if h["admissible"]]
    assert len(data["halfspaces"]) == 14
    assert len(admissible) == 9
    labels = {h["label"] for h in admissible}
    assert len(labels) == 9
    assert {label for label in labels if label.startswith("-")} == {"-a1", "-a2", "-a3"}


def test_fan_and_clusters(runner):
    result = invoke(runner, "fan", "A2")
    assert result.exit_code == 0, result.output
    assert len(json.loads(result.output)["rays"]) == 5

    result = invoke(runner, "clusters", "A3", "--c", "s2,s1,s3")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert len(data["clusters"]) == 14
    assert data["f_vector"] == [1, 9, 21, 14]


def test_barycentre(runner):
    result = invoke(runner, "barycentre", "B2", "--base-point", "1,3")
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[-1] == "equal: true"


def test_verify(runner, tmp_path):
    out = tmp_path / "report.json"
    result = invoke(runner, "verify", "I2(5)", "--c", "s1,s2", "--out", str(out))
    assert result.exit_code == 0, result.output
    assert re.fullmatch(r"\d+ passed, 0 failed, \d+ skipped", result.output.splitlines()[-1])
    data = json.loads(out.read_text())
    assert data["system"] == "I2(5)"
    assert data["summary"]["failed"] == 0


def test_export_to_a_file(runner, tmp_path):
    out = tmp_path / "asso.off"
    result = invoke(runner, "export", "A3", "--format", "off", "--out", str(out))
    assert result.exit_code == 0, result.output
    assert out.read_text().startswith("OFF\n14 9 0\n")

    result = invoke(runner, "export", "A3", "--polytope", "perm")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["kind"] == "permutahedron"


def test_job_file(runner, tmp_path):
    job = tmp_path / "job.yml"
    job.write_text(yaml.safe_dump({"system": "A3", "coxeter_element": "s2,s1,s3"}))
    result = invoke(runner, "sortables", str(job))
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0].endswith("for c = s2s1s3")
    result = invoke(runner, "sortables", str(job), "--c", "s3,s2,s1")
    assert result.output.splitlines()[0].endswith("for c = s3s2s1")


def test_embedding_and_dihedral(runner):
    result = invoke(runner, "embedding", "A", "3")
    assert result.exit_code == 0, result.output
    data = json.loads(result.output)
    assert data["status"] == "passed"
    assert data["ambient"]["permutahedron"]["e"] == ["1", "2", "3", "4"]

    result = invoke(runner, "embedding", "b", "2", "--c", "s2,s1")
    assert result.exit_code == 0, result.output

    result = invoke(runner, "dihedral", "7")
    assert result.exit_code == 0, result.output
    assert json.loads(result.output)["status"] == "passed"


def test_config_generate(runner, tmp_path):
    result = invoke(runner, "config", "generate")
    assert result.exit_code == 0, result.output
    config = yaml.safe_load((tmp_path / "config.yml").read_text())
    assert config["CAMBRIANITE_FLOAT_DIGITS"] == 15
    assert "CAMBRIANITE_LOG" in config

    (tmp_path / "config.yml").write_text("CAMBRIANITE_FLOAT_DIGITS: 3\n")
    assert invoke(runner, "config", "generate").exit_code == 0
    assert (tmp_path / "config.yml").read_text() == "CAMBRIANITE_FLOAT_DIGITS: 3\n"


def test_verify_all_coxeter_elements(runner):
    result = invoke(runner, "verify", "I2(7)")
    assert result.exit_code == 0, result.output
    assert "[failed]" not in result.output
