import json
import subprocess
import sys

import pytest

from plaction.cli import main
from plaction.textio import format_map, parse_map

from support import G1, G4, PHI, THOMPSON_A, THOMPSON_B, conjugated_affine_pair

AFFINE = "a = affine a=2 b=0\nb = affine a=1 b=1\n"
G1_LINE = format_map(G1)


@pytest.fixture
def run(tmp_path, capsys):
    def _run(text, *args):
        path = tmp_path / "input.txt"
        path.write_text(text, encoding="utf-8")
        code = main([args[0], str(path), *args[1:]])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


def test_classify(run):
    code, out, _ = run(f"affine a=1 b=1\naffine a=2 b=0\nphi = {G1_LINE}\n", "classify")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].endswith("orientation-preserving, Fix=∅, type (+)")
    assert lines[1].endswith("Fix={0}, type (-,+)")
    assert lines[2].endswith("Fix={0,1}, type (+,+,+)")


def test_classify_undefined_type(run):
    code, out, _ = run("affine a=-1 b=0\naffine a=1 b=0\n", "classify")
    assert code == 0
    assert "type undefined" in out.splitlines()[0]
    assert "identity" in out.splitlines()[1]


def test_classify_parse_error(run):
    code, _, err = run("affine a=1\npl left_slope=1 anchors=(0,0);(1,2);(2,1) right_slope=1\n", "classify")
    assert code == 2
    assert "line 2" in err


def test_check_holds(run):
    code, out, _ = run(AFFINE, "check", "--max-fixed", "1", "--radius", "4")
    assert code == 0 and "holds_on_ball" in out and "radius=4" in out


def test_check_violated(run):
    code, out, _ = run(AFFINE, "check", "--max-fixed", "0", "--radius", "1")
    assert code == 1 and "violated" in out and "Fix:          {0}" in out


def test_check_thompson(run):
    text = f"A = {format_map(THOMPSON_A)}\nB = {format_map(THOMPSON_B)}\n"
    code, out, _ = run(text, "check", "--max-fixed", "2", "--radius", "4")
    assert code == 1 and "+inf)" in out


def test_check_resource_cap(run):
    code, _, err = run(AFFINE, "check", "--radius", "8", "--cap-elements", "20")
    assert code == 3 and "cap" in err


def test_check_settings_from_file(run):
    code, out, _ = run("radius=1 N=0\n" + AFFINE, "check")
    assert code == 1 and "radius=1" in out


def test_witness_1b(run):
    code, out, _ = run(f"g = {G1_LINE}\nf = affine a=1 b=1/2\n", "witness")
    assert code == 0
    assert out.startswith("case 1b")
    assert "witness = h g^-1" in out
    assert "Fix(witness) = {3/8,7/8,4/3}" in out


def test_witness_4a(run):
    text = (
        f"g = {format_map(G4)}\n"
        "f = pl left_slope=1 anchors=(0,1/2);(1,3/4) right_slope=1\n"
        "u = affine a=1 b=-2\nv = affine a=1 b=2\nradius=1\n"
    )
    code, out, _ = run(text, "witness")
    assert code == 0 and out.startswith("case 4a")
    for name in ("s = ", "t = ", "z1=", "z2="):
        assert name in out


def test_witness_4a_without_context(run):
    text = f"g = {format_map(G4)}\nf = pl left_slope=1 anchors=(0,1/2);(1,3/4) right_slope=1\n"
    code, _, err = run(text, "witness")
    assert code == 3 and "context" in err


def test_witness_degenerate(run):
    text = f"g = {G1_LINE}\nf = pl left_slope=1 anchors=(0,1/2);(1,1) right_slope=1\n"
    code, _, err = run(text, "witness")
    assert code == 2 and "global fixed point" in err


def test_transnum(run):
    code, out, _ = run("a = affine a=1 b=1\nb = affine a=1 b=3/2\n", "transnum", "--radius", "2")
    assert code == 0 and "tau(b) = 3/2" in out and "order compatible: yes" in out


def test_transnum_not_free(run):
    code, _, err = run(AFFINE, "transnum", "--reference", "b")
    assert code == 2 and "fixes" in err


def test_theorem_a_verdicts(run):
    code, out, _ = run(AFFINE, "theorem-a", "--radius", "4")
    assert code == 0 and out.startswith("verdict: affine_semiconjugate")
    assert "radius=4" in out and "Semi-decision" in out
    code, out, _ = run(f"g1 = {G1_LINE}\n", "theorem-a", "--radius", "6")
    assert code == 0 and "global_fixed_abelian" in out and "{0,1}" in out


def test_theorem_a_certificate(run):
    a, b = conjugated_affine_pair()
    text = f"a = {format_map(a)}\nb = {format_map(b)}\ncertificate = {format_map(PHI)}\nradius=3\n"
    code, out, _ = run(text, "theorem-a")
    assert code == 0 and "affine_semiconjugate" in out
    assert f"semi-conjugacy: {format_map(PHI)}" in out
    code, out, _ = run(f"a = {format_map(a)}\nb = {format_map(b)}\nradius=3\n", "theorem-a")
    assert code == 3 and "inconclusive" in out


def test_theorem_a_violation(run):
    text = f"A = {format_map(THOMPSON_A)}\nB = {format_map(THOMPSON_B)}\n"
    code, out, _ = run(text, "theorem-a", "--radius", "2")
    assert code == 1 and "violation" in out


@pytest.mark.parametrize(
    "text,args",
    [
        (AFFINE, ("classify",)),
        (AFFINE, ("check", "--max-fixed", "0", "--radius", "2")),
        (f"g = {G1_LINE}\nf = affine a=1 b=1/2\n", ("witness",)),
        ("a = affine a=1 b=1\nb = affine a=1 b=3/2\n", ("transnum", "--radius", "2")),
        (AFFINE, ("theorem-a", "--radius", "3")),
        (f"g = {G1_LINE}\nh = affine a=1 b=1/2\n", ("theorem-a", "--radius", "2")),
    ],
)
def test_json_round_trip(run, text, args):
    code, out, _ = run(text, args[0], "--format", "json", *args[1:])
    assert code in (0, 1)
    again = json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n"
    assert again == out


def test_json_maps_reparse(run):
    code, out, _ = run(f"g1 = {G1_LINE}\n", "classify", "--format", "json")
    data = json.loads(out)["maps"][0]["map"]
    line = f"pl left_slope={data['left_slope']} anchors={';'.join(f'({b},{v})' for b, v in data['anchors'])} right_slope={data['right_slope']}"
    assert parse_map(line) == G1


def test_module_entry_point(tmp_path):
    path = tmp_path / "m.txt"
    path.write_text("affine a=1 b=1\n", encoding="utf-8")
    res = subprocess.run(
        [sys.executable, "-m", "plaction", "classify", str(path)], capture_output=True, text=True
    )
    assert res.returncode == 0 and "type (+)" in res.stdout


def test_bad_flags():
    with pytest.raises(SystemExit) as exc:
        main(["check", "x.txt", "--radius", "-1"])
    assert exc.value.code == 2
