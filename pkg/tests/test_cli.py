import json
import subprocess
import sys

from binhopf import LinComb, parse_forest, parse_lincomb, parse_tree
from binhopf.cli import run


def out(capsys, *argv, code=0):
    assert run(list(argv)) == code
    return capsys.readouterr()


def test_canon(capsys):
    assert out(capsys, "canon", "(c (b a))").out.strip() == "((a b) c)"


def test_sym(capsys):
    assert out(capsys, "sym", "*, *, (* *)").out.strip() == "4"


def test_antipode(capsys):
    text = out(capsys, "antipode", "((a b) c)").out.strip()
    assert "- 4 a, b, c" in text
    assert parse_lincomb(text) == LinComb({
        "((a b) c)": -1, "a, (b c)": 1, "b, (a c)": 1, "c, (a b)": 2, "a, b, c": -4,
    })


def test_coproduct_and_json(capsys):
    text = out(capsys, "coproduct", "((a b) c)").out.strip()
    assert text.count(" ⨂ ") == 8
    doc = json.loads(out(capsys, "coproduct", "((a b) c)", "--json").out)
    assert doc["schema"] == "binhopf/1" and doc["command"] == "coproduct"
    assert len(doc["terms"]) == 8
    assert {"coef": "1", "left": ["(a b)"], "right": ["c"]} in doc["terms"]


def test_exp(capsys):
    assert out(capsys, "exp", "--degree", "3").out.strip() == "1 * + 1/2 (* *) + 1/2 ((* *) *)"


def test_insert(capsys):
    assert out(capsys, "insert", "((a b) c)", "(d e)", "--edge", "1").out.strip() == \
        str(parse_tree("(((a b) (d e)) c)"))
    rows = out(capsys, "insert", "(a b)", "c").out.strip().splitlines()
    assert rows == ["0: ((a b) c)", "1: ((a c) b)", "2: ((b c) a)"]
    assert out(capsys, "insert", "(a b)", "c", "--edge", "9", code=2).err.startswith("error:")


def test_prelie_star_shuffle(capsys):
    five = out(capsys, "prelie", "((a b) c)", "(d e)").out.strip()
    assert len(parse_lincomb(five)) == 5
    assert out(capsys, "prelie", "(* *)", "*").out.strip() == "3 ((* *) *)"
    star = parse_lincomb(out(capsys, "star", "(* *)", "*, *, (* *)").out)
    assert star["((((* *) *) (* *)) *)"] == 14
    assert out(capsys, "shuffle", "*, *").out.strip() == "1 1 ⨂ *, * + 2 * ⨂ * + 1 *, * ⨂ 1"


def test_pair_grow_prune(capsys):
    assert out(capsys, "pair", "*, *, (* *)", "*, *, (* *)").out.strip() == "4"
    assert out(capsys, "grow", "(* *)").out.strip() == "3 ((* *) *)"
    assert out(capsys, "prune", "((* *) *)").out.strip() == "3 (* *)"
    assert out(capsys, "prune", "*").out.strip() == "0"
    assert out(capsys, "grow", "2 (* *) - 1 *").out.strip() == "-1 (* *) + 6 ((* *) *)"


def test_enumerate(capsys):
    assert out(capsys, "enumerate", "trees", "5").out.split("\n")[:-1] == \
        ["((((* *) *) *) *)", "(((* *) (* *)) *)", "(((* *) *) (* *))"]
    doc = json.loads(out(capsys, "enumerate", "forests", "4", "--json").out)
    assert doc["result"]["count"] == 6


def test_round_trip_of_printed_output(capsys):
    for argv in [["coproduct", "(* *), a"], ["antipode", "(((a b) c) d)"], ["star", "(a b)", "c, d"],
                 ["grow", "((* *) *)"], ["exp", "--degree", "5"]]:
        text = out(capsys, *argv).out.strip()
        if " ⨂ " not in text:
            assert str(parse_lincomb(text)) == text
    for n in range(1, 6):
        for line in out(capsys, "enumerate", "forests", str(n)).out.splitlines():
            assert str(parse_forest(line)) == line


def test_every_json_line_parses(capsys):
    for argv in [["canon", "(a b)"], ["sym", "(a a)"], ["antipode", "a"], ["insert", "(a b)", "c"],
                 ["exp", "--degree", "4"], ["verify", "--suite", "exp", "--degree", "4"],
                 ["verify", "hopf", "--max-leaves", "4"]]:
        lines = out(capsys, *argv, "--json").out.strip().splitlines()
        assert lines
        for line in lines:
            assert json.loads(line)["schema"] == "binhopf/1"


def test_verify_suites(capsys):
    text = out(capsys, "verify", "--suite", "hopf", "--max-leaves", "6").out
    for name in ("coassociativity", "counit", "antipode-axiom", "total-cut"):
        assert name in text
    assert text.strip().endswith("checks passed")
    assert "14·4 = 56" in out(capsys, "verify", "--suite", "duality").out
    exp = out(capsys, "verify", "--suite", "exp", "--degree", "6").out
    assert "(14 checked" in exp


def test_verify_duality_reports(capsys):
    lines = out(capsys, "verify", "duality", "--max-leaves", "3", "--json").out.splitlines()
    docs = [json.loads(x) for x in lines]
    reports = [d for d in docs if d.get("report") == "duality"]
    assert reports and all(d["pass"] for d in reports)
    assert docs[-1]["summary"] and docs[-1]["failed"] == 0


def test_exit_codes(capsys):
    assert out(capsys, "canon", "(a b", code=2).err.count("position 4") == 1
    out(capsys, "bogus", code=2)
    out(capsys, "canon", "a", "--nope", code=2)
    out(capsys, "verify", "nosuch", code=2)
    out(capsys, "exp", "--degree", "9", code=3)
    out(capsys, "verify", "duality", "--max-leaves", "6", code=3)
    out(capsys, "enumerate", "trees", "13", code=3)
    out(capsys, "sym", "(a -)", code=2)


def test_verification_failure_exit_code(capsys, monkeypatch):
    from binhopf import verify

    def broken(*_args, **_kw):
        return [verify.CheckResult("hopf", "broken", False, 1, "((a b) c)", 0.0)]

    monkeypatch.setattr(verify, "run_suite", broken)
    text = out(capsys, "verify", "hopf", code=1).out
    assert "FAIL" in text and "((a b) c)" in text


def test_help_documents_defaults(capsys):
    assert run(["verify", "--help"]) == 0
    text = capsys.readouterr().out
    assert "--max-leaves" in text and "default" in text


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "binhopf", "canon", "(b a)"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "(a b)"
