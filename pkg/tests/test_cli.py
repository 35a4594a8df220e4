import json
import subprocess
import sys
from pathlib import Path

import pytest

from coincalc.cli import main, run_batch, run_query, _dump

DATA = Path(__file__).parent / "data"


def run_cli(*args, env_extra=None):
    import os
    env = os.environ.copy()
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "coincalc.cli", *args],
        capture_output=True, text=True, env=env,
    )


def write_query(tmp_path, query):
    path = tmp_path / "query.json"
    path.write_text(json.dumps(query))
    return str(path)


def test_query_stiefel(tmp_path):
    path = write_query(tmp_path, {
        "id": "q1", "family": "stiefel", "payload": {"r": 5, "k": 2}})
    result = run_cli("query", path)
    assert result.returncode == 0
    answer = json.loads(result.stdout)
    assert answer["id"] == "q1"
    for name in ("mc", "mcc", "n_sharp", "n_tilde", "n"):
        assert answer["invariants"][name]["value"] == 0
    assert "Cor1.3" in answer["invariants"]["mcc"]["trace"]
    assert answer["factbase_version"]


def test_query_torus(tmp_path):
    path = write_query(tmp_path, {
        "id": "t", "family": "torus",
        "payload": {"m": 2, "n": 2, "h1": [[2, 0], [0, 3]],
                    "source_is_torus": True}})
    result = run_cli("query", path)
    assert result.returncode == 0
    answer = json.loads(result.stdout)
    assert answer["invariants"]["mcc"]["value"] == 6


def test_wecken_flags():
    result = run_cli("wecken", "-m", "11", "-n", "6")
    assert result.returncode == 0
    answer = json.loads(result.stdout)
    entry = answer["invariants"]["wecken_condition"]
    assert entry["value"] == "no"
    assert "R4" in entry["trace"]


def test_stiefel_flags():
    result = run_cli("stiefel", "-r", "7", "-k", "3")
    assert result.returncode == 0
    answer = json.loads(result.stdout)
    assert answer["invariants"]["n"]["value"] == 1


def test_batch_empty(tmp_path):
    path = tmp_path / "batch.json"
    path.write_text("[]")
    result = run_cli("batch", str(path))
    assert result.returncode == 0
    assert json.loads(result.stdout) == []


def test_batch_tolerates_bad_query(tmp_path):
    queries = [
        {"id": "good", "family": "stiefel", "payload": {"r": 5, "k": 2}},
        {"id": "bad", "family": "stiefel", "payload": {"r": 5}},
    ]
    path = tmp_path / "batch.json"
    path.write_text(json.dumps(queries))
    result = run_cli("batch", str(path))
    assert result.returncode == 0
    answers = json.loads(result.stdout)
    assert len(answers) == 2
    assert "error" not in answers[0]
    assert "error" in answers[1]
    assert "'r'" not in answers[1]["error"]  # message names the field...
    assert "k" in answers[1]["error"]


def test_schema_errors_name_the_field(tmp_path):
    path = write_query(tmp_path, {
        "id": "x", "family": "torus",
        "payload": {"m": 2, "n": 2, "source_is_torus": True}})
    result = run_cli("query", path)
    assert result.returncode == 2
    assert "h1" in result.stderr
    path = write_query(tmp_path, {"id": "x", "family": "nope", "payload": {}})
    result = run_cli("query", path)
    assert result.returncode == 2
    assert "family" in result.stderr


def test_unreadable_file_is_input_error():
    result = run_cli("query", "/no/such/file.json")
    assert result.returncode == 2
    result = run_cli("batch", "/no/such/file.json")
    assert result.returncode == 2


def test_invalid_json_is_input_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{nope")
    result = run_cli("query", str(path))
    assert result.returncode == 2


def test_factbase_lint_shipped():
    from coincalc.tables import FactBase
    result = run_cli("factbase", "lint", FactBase.bundled_path())
    assert result.returncode == 0
    assert "clean" in result.stdout


def test_factbase_lint_broken(tmp_path):
    from coincalc.tables import FactBase
    doc = json.loads(Path(FactBase.bundled_path()).read_text())
    for e in doc["framed_so"]:
        if e["k"] == 3:
            e["order_of_class"] = 7
    path = tmp_path / "bad.json"
    lines = ['{', '  "version": "0.0.1",']
    for section in ("stable_stems", "framed_so", "pinpoints"):
        tail = "," if section != "pinpoints" else ""
        body = ",\n".join(f"    {json.dumps(e)}" for e in doc[section])
        lines.append(f'  "{section}": [\n{body}\n  ]{tail}')
    lines.append("}")
    path.write_text("\n".join(lines))
    result = run_cli("factbase", "lint", str(path))
    assert result.returncode == 2
    assert "divide 24" in result.stderr
    assert f"{path}:" in result.stderr  # line-precise location


def test_corrupt_factbase_is_internal_failure(tmp_path):
    # a fact base that fails its own linter must never answer queries
    from coincalc.tables import FactBase
    doc = json.loads(Path(FactBase.bundled_path()).read_text())
    doc["stable_stems"] = doc["stable_stems"][:5]
    path = tmp_path / "short.json"
    path.write_text(json.dumps(doc))
    result = run_cli("stiefel", "-r", "5", "-k", "2",
                     env_extra={"NIELSEN_FACTBASE": str(path)})
    assert result.returncode == 3
    assert "rejected" in result.stderr


def test_factbase_env_override(tmp_path):
    from coincalc.tables import FactBase
    doc = json.loads(Path(FactBase.bundled_path()).read_text())
    doc["version"] = "99.0.0-test"
    path = tmp_path / "override.json"
    path.write_text(json.dumps(doc, indent=2))
    result = run_cli("wecken", "-m", "3", "-n", "2",
                     env_extra={"NIELSEN_FACTBASE": str(path)})
    assert result.returncode == 0
    assert json.loads(result.stdout)["factbase_version"] == "99.0.0-test"


def test_golden_corpus_bytes():
    queries = json.loads((DATA / "golden_queries.json").read_text())
    expected = (DATA / "golden_answers.json").read_text()
    assert _dump(run_batch(queries)) == expected


def test_golden_corpus_via_cli():
    result = run_cli("batch", str(DATA / "golden_queries.json"))
    assert result.returncode == 0
    assert result.stdout == (DATA / "golden_answers.json").read_text()


def test_determinism_and_thread_independence():
    queries = json.loads((DATA / "golden_queries.json").read_text())
    first = _dump(run_batch(queries, jobs=1))
    second = _dump(run_batch(queries, jobs=1))
    threaded = _dump(run_batch(queries, jobs=4))
    assert first == second == threaded


def test_answer_round_trip():
    answer = run_query({"id": "rt", "family": "stiefel",
                        "payload": {"r": 7, "k": 3}})
    text = _dump(answer)
    assert _dump(json.loads(text)) == text


def test_main_in_process(tmp_path, capsys):
    # keep one in-process path for coverage of exit codes without subprocess
    path = write_query(tmp_path, {
        "id": "p", "family": "fixedpoint", "payload": {"dim": 2, "chi": -1}})
    assert main(["query", path]) == 0
    answer = json.loads(capsys.readouterr().out)
    assert answer["invariants"]["wecken_fixed_point"]["value"] == "no"
    assert main(["query", "/no/such/file"]) == 2
