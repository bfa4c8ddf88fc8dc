import json
import subprocess
import sys

import pytest

from glnn.cli import main
from glnn.ds import ds, ell, sdim_value
from glnn.tannaka import classify
from glnn.weights import Weight


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    assert out.count("\n") == 1
    obj = json.loads(out)
    assert obj["schema"] == 1
    return obj


def test_info_json_matches_library(capsys):
    obj = run_json(capsys, "info", "[7,7,4,2,2,2]")
    w = Weight((7, 7, 4, 2, 2, 2))
    assert obj["sdim"] == sdim_value(w) and obj["ell"] == ell(w)
    assert obj["group"]["family"] == classify(w).family
    assert obj["depth"] == 20 and obj["basic"] == [4, 4, 2, 0, 0, 0]
    assert obj["d0_shift"] == 2 and obj["d0_invariant"] == 7


def test_ds_examples(capsys):
    obj = run_json(capsys, "ds", "[7,7,4,2,2,2]")
    got = sorted((tuple(s["weight"]), s["shift"]) for s in obj["summands"])
    assert got == sorted((p.weight.entries, p.shift) for p in ds([7, 7, 4, 2, 2, 2]))
    assert sorted(s for _, s in got) == [0, 1]
    obj = run_json(capsys, "ds", "[1,0]", "--steps", "2")
    assert [(s["weight"], s["shift"]) for s in obj["summands"]] == [([], 1), ([], 1)]
    assert obj["signed_total"] == obj["sdim"] == -2


def test_tensor_json(capsys):
    obj = run_json(capsys, "tensor", "[2,1,0]", "[2,1,0]")
    assert obj["group"]["family"] == "Sp" and obj["root_system"] == "C3"
    assert obj["total_superdim"] == 36
    assert sorted(t["superdim"] for t in obj["terms"]) == [1, 14, 21]


def test_enumerate_counts(capsys):
    assert run_json(capsys, "enumerate", "4")["count"] == 14
    rows = run_json(capsys, "enumerate", "0")["rows"]
    assert rows == [{"weight": [], "sdim": 1, "sectors": 0, "group": None}]
    sd = run_json(capsys, "enumerate", "5", "--sd-only")
    assert sd["count"] == len(sd["rows"])
    assert all(r["group"]["family"] in ("SO", "Sp", "SL", "Torus") for r in sd["rows"])
    cls = run_json(capsys, "enumerate", "4", "--classes")
    assert cls["count"] == 10


def test_human_output_marks_conditional(capsys):
    code, out, _ = run(capsys, "info", "[3,2,1,0]")
    assert code == 0 and "SO(24)*" in out and "conditional" in out.splitlines()[-1]
    code, out, _ = run(capsys, "enumerate", "3")
    assert out.splitlines()[-2] == "count 5"


@pytest.mark.parametrize("argv", [
    ["info", "[1,2]"],
    ["info", "abc"],
    ["ds", "[1,0]", "--steps", "3"],
    ["tensor", "[1,0]", "[1,0,0]"],
    ["enumerate", "-1"],
    ["render", "[2,1,0]", "--format", "png"],
    ["nosuch"],
])
def test_input_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_render_to_unwritable_path_exits_3(capsys, tmp_path):
    target = tmp_path / "missing" / "x.svg"
    code, _, err = run(capsys, "render", "[2,1,0]", "--format", "svg", "-o", str(target))
    assert code == 3 and "cannot write" in err
    ok = tmp_path / "x.svg"
    assert run(capsys, "render", "[2,1,0]", "--format", "svg", "-o", str(ok))[0] == 0
    assert ok.read_text().startswith("<?xml")


def test_deterministic_subprocess_output():
    cmd = [sys.executable, "-m", "glnn", "tensor", "[6,6,1,1]", "[6,6,1,1]", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["group"]["family"] == "GSO"
