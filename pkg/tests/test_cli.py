import io

import pytest

from arforms.category import parse_file
from arforms.cli import run

from conftest import dual_numbers, uniserial


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def u5(data_dir):
    return data_dir / "uniserial-5.cat"


@pytest.fixture
def dn4(data_dir):
    return data_dir / "dual-numbers-4.cat"


def test_gram_golden(u5):
    assert call("gram", u5) == (
        0,
        "objects: V1 V4 V2 V3\n1 1 1 1\n1 1 1 1\n1 1 2 2\n1 1 2 2\n",
        "",
    )


def test_kernel_golden(u5):
    code, out, _ = call("kernel", u5)
    assert code == 0
    assert out == (
        "closed form:\n  [V1] - [V4]\n  [V2] - [V3]\n"
        "left kernel:\n  [V1] - [V4]\n  [V2] - [V3]\n"
        "right kernel:\n  [V1] - [V4]\n  [V2] - [V3]\n"
        "LATTICES EQUAL\n"
    )


def test_validate_and_hermitian(u5, dn4):
    assert call("validate", u5) == (0, "VALID\n", "")
    assert call("hermitian", u5) == (0, "HERMITIAN (cyclic hom data)\n", "")
    assert call("hermitian", dn4) == (0, "HERMITIAN\n", "")


def test_prop31_fixed_point(data_dir):
    code, out, _ = call("prop31", data_dir / "uniserial-4.cat")
    assert code == 0
    assert out == (
        "checked 9 pairings over 3 triangles\n"
        "shift-fixed end terms (value 2) in triangles: 1\n"
        "PASS\n"
    )


def test_tform_requires_finite_support(u5):
    code, out, _ = call("tform", u5, "V1", "V2")
    assert code == 1
    assert "hypothesis 4.2 required" in out


@pytest.mark.parametrize("cmd", ["euler", "tform"])
def test_finite_support_for_form_commands(u5, cmd):
    assert call(cmd, u5, "V1", "V1")[0] == 1
    assert call("dual", u5, 0)[0] == 1


def test_tform_values(dn4):
    assert call("tform", dn4, "C1", "C1") == (0, "t^-1 + 2 + t\n", "")
    assert call("tform", dn4, "C1", "C2[1]") == (0, "t^-3 + t^-2 + t^-1 + 1\n", "")
    assert call("euler", dn4, "C1", "C1") == (0, "0\n", "")
    assert call("euler", dn4, "C0", "C0") == (0, "2\n", "")


def test_dual_golden(dn4):
    code, out, _ = call("dual", dn4, 1)
    assert code == 0
    assert out == (
        "triangle 1: C1[-1] | C2[-1] + C0 | C1\n"
        "Z^ = (-1)*C0 + (t^-1 + 1)*C1 + (-t^-1)*C2\n"
        "right dual of Z = ((-t)/(1 + t))*C0 + (1)*C1 + ((-1)/(1 + t))*C2\n"
        "left dual of X = ((-1)/(1 + t))*C0 + (t^-1)*C1 + ((-t^-1)/(1 + t))*C2\n"
        "DUALITY OK\n"
    )


def test_dual_violation_exit_code(tmp_path, dn4):
    text = dn4.read_text().replace("hom C0 C0 : 2", "hom C0 C0 : 3")
    bad = tmp_path / "bad.cat"
    bad.write_text(text)
    code, out, _ = call("dual", bad, 0)
    assert code == 1 and "expected" in out


def test_orbits(u5, dn4):
    assert call("orbits", u5)[1].endswith("dimension over Q(t): 0\n")
    assert call("orbits", dn4)[1].endswith("dimension over Q(t): 5\n")


def test_za_form_both():
    assert call("za", "form", "--self", "2", 1, 1, "--method", "both") == (
        0,
        "closed:     t^-1 + 2 + t\nrecurrence: t^-1 + 2 + t\nAGREE\n",
        "",
    )


def test_za_form_methods():
    assert call("za", "form", "--self", "2", 1, 1)[1] == "t^-1 + 2 + t\n"
    assert call("za", "form", "--self", "2", 0, 1, "--method", "recurrence")[1] == "t^-1 + 1\n"
    assert call("za", "form", "--self", "2", "--cross", "1+t", 2, 1, "--method", "both")[1].endswith("AGREE\n")


def test_za_triangles_and_brick():
    assert call("za", "triangles", 2)[1] == "triangle C0[-1] | C1[-1] | C0\ntriangle C1[-1] | C2[-1] + C0 | C1\n"
    code, out, _ = call("za", "brick", "--self", "2+t+t^-1", "--max", 2)
    assert code == 0
    assert out.splitlines()[:2] == ["m=0 dim End=2 dim-2", "m=1 dim End=4 not dim-2"]
    assert "simple projective stalk" in call("za", "brick", "--self", "1", "--max", 0)[1]


def test_oracle_emit(tmp_path):
    target = tmp_path / "u6.cat"
    code, out, _ = call("oracle", "uniserial", 6, "--emit", target)
    assert code == 0 and out == f"wrote {target}\n"
    assert parse_file(target) == uniserial(6)
    code, out, _ = call("oracle", "dual-numbers", 2)
    assert code == 0 and out.startswith("category dual-numbers-2\n")


def test_oracle_window_too_small():
    code, out, _ = call("oracle", "dual-numbers", 2, "--window", 1)
    assert code == 1 and "outside the window" in out


@pytest.mark.parametrize(
    "argv",
    [
        ("frobnicate",),
        ("gram",),
        ("gram", "x.cat", "--bogus"),
        ("za", "form", "--self", "t", 1, 1),
        ("za", "form", "--self", "2+", 1, 1),
        ("za", "form", "--self", "2", -1, 1),
        ("oracle", "uniserial", 1),
        ("validate", "/nonexistent/file.cat"),
    ],
)
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err


def test_parse_error_exit(tmp_path):
    bad = tmp_path / "bad.cat"
    bad.write_text("orbit A period 2\n")
    code, _, err = call("validate", bad)
    assert code == 2 and err.startswith("error: line")


def test_unknown_object(dn4):
    code, _, err = call("tform", dn4, "C9", "C0")
    assert code == 2 and "C9" in err


def test_validation_failure_exit(tmp_path, u5):
    bad = tmp_path / "bad.cat"
    bad.write_text(u5.read_text().replace("hypothesis-4.2 false", "hypothesis-4.2 true"))
    code, out, _ = call("validate", bad)
    assert code == 1 and out.startswith("VIOLATION")


def test_byte_stable(u5, dn4):
    for argv in [("kernel", u5), ("dual", dn4, 2), ("oracle", "dual-numbers", 3), ("za", "brick", "--self", "3", "--max", 4)]:
        assert call(*argv) == call(*argv)
