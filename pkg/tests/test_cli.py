import json
import shutil
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import eis
from eisenlattice.cli import main
from eisenlattice.constructions import BUILTIN_LATTICES
from eisenlattice.io import (
    InputError,
    lattice_from_json,
    lattice_to_json,
    load_lattice,
    matrix_from_json,
    save_lattice,
)
from eisenlattice.linalg import Matrix
from eisenlattice.ring import THETA


def run(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


# -- exit codes -----------------------------------------------------------------------


@pytest.mark.parametrize("argv, code", [
    (["verify", "--check", "C3"], 0),
    (["verify", "--check", "c4", "--check", "C6"], 0),
    (["verify", "--check", "C11"], 1),
    (["verify", "--check", "C99"], 2),
    (["verify", "--check", "C3", "--grid", "42"], 2),
    (["verify", "--cap", "0"], 2),
    (["short-vectors", "@d3"], 2),  # --norm is required
    (["short-vectors", "@nope", "--norm", "2"], 2),
    (["short-vectors", "@lambda", "--norm", "2"], 2),  # indefinite
    (["aut", "@h"], 2),
    (["disc-group", "/nonexistent/file.json"], 2),
    (["classify-tau", "0", "-1"], 2),
    (["classify-lambda", "-0.5", "0"], 2),
    (["period", "0", "0"], 2),
    (["period", "0", "1"], 0),
    (["weyl", "@D3"], 0),
    ([], 2),
    (["bogus"], 2),
])
def test_exit_codes(argv, code, capsys):
    got, _, err = run(argv, capsys)
    assert got == code
    if code == 2:
        assert err


def test_aut_group_cap_is_a_usage_error(capsys):
    code, _, err = run(["aut", "@d3", "--cap", "10"], capsys)
    assert code == 2 and "exceeded" in err


# -- human output ----------------------------------------------------------------------


def test_short_vectors_human(capsys):
    code, out, _ = run(["short-vectors", "@d3", "--norm", "2"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "54 vectors of norm 2"
    assert len(lines) == 55
    assert all(l.startswith("(") and "*w" in l for l in lines[1:])


def test_disc_group_human(capsys):
    code, out, _ = run(["disc-group", "@h"], capsys)
    assert code == 0
    assert "invariant factors: 2+1*w, 2+1*w" in out
    assert "order: 9" in out


def test_verify_human_lines(capsys):
    code, out, _ = run(["verify", "--check", "C3", "--check", "C6"], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("C3: PASS")
    assert out.splitlines()[-1] == "2/2 checks passed"


def test_classify_tau_human(capsys):
    code, out, _ = run(["classify-tau", "-0.5", "0.8660254037844386"], capsys)
    assert code == 0 and "ORDER_648" in out and "agree: True" in out


# -- JSON output ------------------------------------------------------------------------------


@pytest.mark.parametrize("name", sorted(BUILTIN_LATTICES))
def test_disc_group_json_round_trip(name, capsys):
    code, out, _ = run(["disc-group", f"@{name}", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    lat = lattice_from_json(payload["lattice"])
    assert lat == BUILTIN_LATTICES[name]()
    assert payload["order"] == lat.disc().a ** 2


def test_short_vectors_json(capsys):
    code, out, _ = run(["short-vectors", "@d3", "--norm", "3", "--json"], capsys)
    payload = json.loads(out)
    # theta * unit * e_i (18) plus unit vectors with all entries in one class mod theta (54)
    assert code == 0 and payload["count"] == len(payload["vectors"]) == 72
    assert all(len(v) == 3 and all(len(x) == 2 for x in v) for v in payload["vectors"])


def test_aut_json_elements(capsys):
    code, out, _ = run(["weyl", "@d3", "--json", "--elements"], capsys)
    payload = json.loads(out)
    assert code == 0 and payload["order"] == 54
    mats = [matrix_from_json(m) for m in payload["elements"]]
    assert len(set(mats)) == 54
    assert payload["orbits"]["2"] == {"vectors": 54, "orbits": 1, "orbit_sizes": [54]}


def test_verify_json_report_shape(capsys):
    code, out, _ = run(["verify", "--check", "C11", "--json"], capsys)
    reports = json.loads(out)
    assert code == 1
    assert set(reports[0]) == {"check", "status", "detail", "ms"}
    assert reports[0]["status"] == "fail"


def test_snf_from_file(tmp_path, capsys):
    p = tmp_path / "m.json"
    p.write_text(json.dumps(Matrix([[3, 0], [0, THETA]]).to_json()))
    code, out, _ = run(["snf", str(p), "--json"], capsys)
    assert code == 0
    assert json.loads(out)["invariant_factors"] == [[2, 1], [3, 0]]


def test_period_json(capsys):
    code, out, _ = run(["period", "0", "1", "--json"], capsys)
    payload = json.loads(out)
    assert code == 0 and payload["class"] == "ORDER_108"
    assert abs(payload["norm"] + 2 * 3 ** 0.5) < 1e-12


# -- lattice files ----------------------------------------------------------------------------------


def test_saved_lattice_matches_builtin(tmp_path, capsys):
    p = tmp_path / "d3.json"
    save_lattice(load_lattice("@d3"), str(p))
    _, a, _ = run(["short-vectors", str(p), "--norm", "2", "--json"], capsys)
    _, b, _ = run(["short-vectors", "@d3", "--norm", "2", "--json"], capsys)
    assert json.loads(a)["vectors"] == json.loads(b)["vectors"]


@pytest.mark.parametrize("content", [
    "not json",
    json.dumps([1, 2]),
    json.dumps({"gram": {"rows": 1, "cols": 1, "entries": [[1, 1]]}}),  # not hermitian
    json.dumps({"rank": 2, "gram": {"rows": 1, "cols": 1, "entries": [[1, 0]]}}),
    json.dumps({"gram": {"rows": 1, "cols": 1, "entries": [[1, 0]]}, "ambient": {"gram": 1}}),
])
def test_bad_lattice_files(tmp_path, content, capsys):
    p = tmp_path / "bad.json"
    p.write_text(content)
    with pytest.raises(InputError):
        load_lattice(str(p))
    code, _, err = run(["disc-group", str(p)], capsys)
    assert code == 2 and err.startswith("error:")


@settings(max_examples=50)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(eis(4), min_size=n * n, max_size=n * n)))
def test_matrix_json_round_trip(entries):
    n = int(len(entries) ** 0.5)
    m = Matrix([entries[i * n:(i + 1) * n] for i in range(n)])
    assert matrix_from_json(json.loads(json.dumps(m.to_json()))) == m


def test_lattice_json_round_trip_with_ambient():
    for make in BUILTIN_LATTICES.values():
        lat = make()
        assert lattice_from_json(json.loads(json.dumps(lattice_to_json(lat)))) == lat


def test_console_script():
    exe = shutil.which("eisenlattice")
    cmd = [exe] if exe else [sys.executable, "-m", "eisenlattice.cli"]
    res = subprocess.run(cmd + ["classify-lambda", "0", "0", "--json"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["order"] == 648
