from __future__ import annotations

import json
import subprocess
import sys

import pytest

from posetcalc import NotGraded, ParseError, parse_poset, render_poset
from posetcalc.cli import run_cli
from posetcalc.data import fixture_path

from conftest import GOLDEN

# golden file suffix -> extra CLI arguments
GOLDEN_COMMANDS = {
    "poincare.txt": ["poincare"],
    "charpoly.txt": ["charpoly"],
    "mobius.txt": ["mobius"],
    "psi.txt": ["psi"],
    "psi_tilde.txt": ["psi", "--tilde"],
    "expsi.txt": ["expsi"],
    "expsi_tilde.txt": ["expsi", "--tilde"],
    "expsi.json": ["expsi", "--format", "structured"],
    "flag.txt": ["flag"],
    "chow.txt": ["chow"],
    "chow_aug.txt": ["chow", "--augmented"],
    "gamma.txt": ["gamma"],
    "gamma_aug.txt": ["gamma", "--augmented"],
    "verify.txt": ["verify"],
    "rlabel_check.txt": ["rlabel-check"],
    "rlabel_expand.txt": ["rlabel-expand"],
}

GOLDEN_FILES = sorted(p.name for p in GOLDEN.iterdir())


def cli(capsys, *argv):
    code = run_cli(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", GOLDEN_FILES)
def test_golden_byte_identical(capsys, name):
    stem, suffix = name.split(".", 1)
    code, out, _ = cli(capsys, *GOLDEN_COMMANDS[suffix], "--input", str(fixture_path(stem)))
    assert code == 0
    assert out.encode("utf-8") == (GOLDEN / name).read_bytes()


def test_every_golden_file_has_a_command():
    assert {n.split(".", 1)[1] for n in GOLDEN_FILES} <= set(GOLDEN_COMMANDS)


@pytest.mark.parametrize("name", ["P", "Q"])
def test_verify_exits_zero(capsys, name):
    code, out, _ = cli(capsys, "verify", "-i", str(fixture_path(name)))
    assert code == 0
    assert "FAIL" not in out


def test_malformed_json_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.poset"
    bad.write_text('{"elements": ["a", "b"], "covers": [["a", "b"]')
    code, out, err = cli(capsys, "poincare", "-i", str(bad))
    assert code == 2
    assert out == ""
    assert "parse error" in err


@pytest.mark.parametrize(
    "doc",
    [
        {"elements": ["a", "a"], "covers": []},
        {"elements": ["a", "b"], "covers": [["a", "b", "c"]]},
        {"elements": ["a", "b"], "covers": [["a", "b"]], "ranks": [0, 1]},
        {"elements": ["a", "b"], "covers": [["a", "b"]], "labels": [["a", "b", 1.5]]},
        {"elements": ["a", "b"], "covers": [["a", "b"]], "labels": [["a", "b", True]]},
        ["a", "b"],
    ],
)
def test_structurally_bad_documents_exit_2(capsys, tmp_path, doc):
    f = tmp_path / "x.poset"
    f.write_text(json.dumps(doc))
    assert cli(capsys, "validate", "-i", str(f))[0] == 2


def test_missing_file_exits_2(capsys, tmp_path):
    assert cli(capsys, "validate", "-i", str(tmp_path / "nothing.json"))[0] == 2


def test_bad_arguments_exit_2(capsys):
    assert cli(capsys, "frobnicate", "-i", "P.poset")[0] == 2
    assert cli(capsys, "psi", "-i", str(fixture_path("P")), "--method", "magic")[0] == 2


def test_non_graded_exits_1(capsys, tmp_path):
    f = tmp_path / "ng.poset"
    f.write_text(json.dumps({
        "elements": ["0", "x", "y", "1"],
        "covers": [["0", "x"], ["x", "y"], ["y", "1"], ["0", "1"]],
    }))
    code, _, err = cli(capsys, "validate", "-i", str(f))
    assert code == 1
    assert "NotGraded" in err


def test_unbounded_exits_1(capsys, tmp_path):
    f = tmp_path / "ub.poset"
    f.write_text(json.dumps({"elements": ["0", "x", "y"], "covers": [["0", "x"], ["0", "y"]]}))
    assert cli(capsys, "validate", "-i", str(f))[0] == 1


def test_rlabel_on_unlabeled_exits_3(capsys):
    code, _, err = cli(capsys, "rlabel-expand", "-i", str(fixture_path("Q")))
    assert code == 3
    assert "no labels" in err


def test_rlabel_check_rejects_labeling_exits_3(capsys, tmp_path):
    doc = json.loads(fixture_path("Q").read_text())
    doc["labels"] = [[lo, hi, 1] for lo, hi in doc["covers"]]
    f = tmp_path / "Ql.poset"
    f.write_text(json.dumps(doc))
    code, out, _ = cli(capsys, "rlabel-check", "-i", str(f))
    assert code == 3
    assert "weakly increasing maximal chains" in out
    assert cli(capsys, "rlabel-expand", "-i", str(f))[0] == 3


def test_missing_label_exits_3(capsys, tmp_path):
    doc = json.loads(fixture_path("P").read_text())
    doc["labels"] = doc["labels"][:-1]
    f = tmp_path / "Pm.poset"
    f.write_text(json.dumps(doc))
    assert cli(capsys, "rlabel-check", "-i", str(f))[0] == 3


def test_structured_output_is_json(capsys):
    code, out, _ = cli(capsys, "chow", "--augmented", "--format", "structured", "-i", str(fixture_path("P")))
    assert code == 0
    assert json.loads(out) == {"var": "x", "coeffs": [1, 4, 1]}
    code, out, _ = cli(capsys, "psi", "--format", "structured", "-i", str(fixture_path("P")))
    assert json.loads(out) == {"degree": 2, "terms": {"aa": [1], "ab": [2]}}


def test_methods_give_same_output(capsys):
    outs = set()
    for m in ("chains", "omega", "recursive", "beta"):
        code, out, _ = cli(capsys, "expsi", "--method", m, "-i", str(fixture_path("Q")))
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_mobius_single_pair(capsys):
    code, out, _ = cli(capsys, "mobius", "-i", str(fixture_path("Q")), "--lower", "v1", "--upper", "1hat")
    assert code == 0
    assert out == "v1\t1hat\t0\n"


def test_mobius_incomparable_pair_exits_1(capsys):
    code, _, _ = cli(capsys, "mobius", "-i", str(fixture_path("Q")), "--lower", "v1", "--upper", "w2")
    assert code == 1


def test_bundled_fallback_by_stem(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = cli(capsys, "poincare", "-i", "P.poset")
    assert code == 0
    assert out == (GOLDEN / "P.poincare.txt").read_text()


def test_sign_rule_option(capsys, tmp_path):
    f = tmp_path / "c.poset"
    f.write_text(json.dumps({
        "elements": ["0", "m", "1"], "covers": [["0", "m"], ["m", "1"]], "labels": [["0", "m", 3], ["m", "1", 3]],
    }))
    _, expsi, _ = cli(capsys, "expsi", "-i", str(f))
    _, tie, _ = cli(capsys, "rlabel-expand", "-i", str(f))
    _, lit, _ = cli(capsys, "rlabel-expand", "-i", str(f), "--sign-rule", "literal")
    assert tie == expsi
    assert lit != expsi


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "posetcalc", "poincare", "-i", str(fixture_path("P"))],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "P.poincare.txt").read_text()


# --- document format -------------------------------------------------------

@pytest.mark.parametrize("name", ["P", "Q"])
def test_render_parse_round_trip(bundled, name):
    doc = bundled[name]
    again = parse_poset(render_poset(doc))
    assert again.poset.names == doc.poset.names
    assert again.poset.covers == doc.poset.covers
    assert again.poset.rank == doc.poset.rank
    assert again.labeling == doc.labeling
    assert render_poset(again) == render_poset(doc)


def test_duplicate_element_is_parse_error():
    with pytest.raises(ParseError, match="duplicate"):
        parse_poset('{"elements": ["a", "b", "a"], "covers": []}')


def test_parse_error_names_source():
    with pytest.raises(ParseError, match="^f.json: invalid JSON at line 1"):
        parse_poset("{", source="f.json")


def test_non_graded_raises_invalid_poset():
    with pytest.raises(NotGraded):
        parse_poset(json.dumps({
            "elements": ["0", "x", "y", "1"],
            "covers": [["0", "x"], ["x", "y"], ["y", "1"], ["0", "1"]],
        }))


def test_labels_optional(bundled):
    assert bundled["Q"].labeling is None
    assert bundled["P"].labeling is not None
