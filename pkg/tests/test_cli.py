import io
import json
from fractions import Fraction


from padic_discs import cli, verify


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue().strip(), err.getvalue()


def test_classify_and_symbol():
    assert run("classify", "-p", "5", "7")[:2] == (0, "eps")
    assert run("symbol", "-p", "5", "2", "5")[:2] == (0, "-1")


def test_distance():
    assert run("distance", "-p", "5", "--alpha", "eps", "2,0,1", "50,0,1")[:2] == (0, "3")
    assert run("distance", "-p", "5", "--alpha", "eps", "2,0,1", "-18,5,11")[:2] == (0, "1/4")
    assert run("distance", "-p", "5", "--alpha", "eps", "--oracle", "2,0,1", "-18,5,11")[:2] == (0, "1/4")


def test_distance_json():
    code, text, _ = run("distance", "-p", "5", "--alpha", "eps", "--format", "json", "2,0,1", "50,0,1")
    data = json.loads(text)
    assert code == 0 and data["distance"] == "3" and data["line"] == "long"
    assert Fraction(data["R"]) == Fraction(169, 25)


def test_p2_falls_back_to_oracle():
    code, text, err = run("distance", "-p", "2", "--alpha", "5", "5,0,1", "20,0,1")
    assert code == 0 and "warning" in err


def test_exit_codes():
    assert run("distance", "-p", "5", "--alpha", "eps", "1,0,1", "2,0,1")[0] == 1
    assert run("classify", "-p", "6", "7")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("classify", "-p", "5", "0")[0] == 1


def test_disc_and_tree():
    assert run("disc", "-p", "5", "--alpha", "eps", "1,0,1")[1] == "out"
    assert run("disc", "-p", "5", "--alpha", "eps", "2,0,1")[1] == "in"
    assert run("tree", "project", "-p", "5", "--alpha", "eps", "50,0,1")[1] == "a=1;c=0"
    assert run("tree", "distance", "-p", "5", "0,0", "2,0")[1] == "2"


def test_export_dot_is_deterministic(tmp_path):
    a = run("tree", "export-dot", "-p", "3", "--radius", "2")[1]
    b = run("tree", "export-dot", "-p", "3", "--radius", "2")[1]
    assert a == b and a.count("--") == 16
    f = tmp_path / "t.dot"
    assert run("tree", "export-dot", "-p", "3", "--out", str(f))[0] == 0
    assert f.read_text().strip() == a


def test_triangle_and_hexmap(tmp_path):
    assert run("triangle", "distance", "-p", "5", "1,1,1", "25,1,5")[1] == "3"
    code, text, _ = run("triangle", "hexmap", "-p", "5", "--radius", "2", "--format", "json")
    assert code == 0 and json.loads(text)["cells"] == 7
    f = tmp_path / "h.svg"
    assert run("triangle", "hexmap", "-p", "5", "--out", str(f))[0] == 0
    assert f.read_text().count("#444") == 7


def test_verify_is_deterministic():
    a = run("verify", "-p", "5", "--seed", "1", "--cases", "8", "--format", "json")
    b = run("verify", "-p", "5", "--seed", "1", "--cases", "8", "--format", "json")
    assert a == b and a[0] == 0 and json.loads(a[1])["failures"] == 0


def test_verify_summary_line():
    code, text, _ = run("verify", "-p", "5", "--suite", "tree", "--seed", "1", "--cases", "10")
    assert code == 0 and text.splitlines()[-1] == "seed=1 p=5 failures=0"


def test_negative_control_catches_wrong_constant():
    from padic_discs import disc

    def off_by_one(v, w, a):
        d = disc.hilbert_distance(v, w, 5, a)
        return d + 1 if d >= 1 else d

    (rep,) = verify.verify_suite("disc", 1, 5, 10, distance_fn=off_by_one)
    eq = next(r for r in rep.results if r.name == "closed form equals oracle")
    assert not eq.passed and "v=" in eq.counterexample and "w=" in eq.counterexample
