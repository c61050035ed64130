"""Command-line surface: exit codes, output shapes, byte stability."""

import json

import pytest

from qkflag import cli
from qkflag.cli import UsageError, main, parse_J, parse_window
from qkflag.qbg import all_edges
from qkflag.verify import Case, Report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_window_forms():
    assert parse_window("312", 2) == (3, 1, 2)
    assert parse_window("3,1,2", 2) == (3, 1, 2)
    with pytest.raises(UsageError):
        parse_window("311", 2)
    with pytest.raises(UsageError):
        parse_window("31", 2)
    with pytest.raises(UsageError):
        parse_window("1023456789", 9)  # compact digits stop at rank 8
    assert parse_window("10,1,2,3,4,5,6,7,8,9", 9)[0] == 10


def test_parse_J():
    assert parse_J("", 3) == ()
    assert parse_J("3,1", 3) == (1, 3)
    with pytest.raises(UsageError):
        parse_J("0,1", 3)
    with pytest.raises(UsageError):
        parse_J("1,1", 3)


def test_rank_zero_is_usage_error(capsys):
    code, _, err = run(capsys, "qbg", "--n", "0")
    assert code == 2
    assert "rank" in err


def test_bad_flags_exit_two(capsys):
    assert run(capsys, "groth", "--n", "2", "--w", "311")[0] == 2
    assert run(capsys, "chain", "--n", "2", "--J", "9")[0] == 2
    assert run(capsys, "sijection", "--n", "2")[0] == 2
    assert run(capsys, "nonsense", "--n", "1")[0] == 2


def test_qbg_edge_list(capsys):
    code, out, _ = run(capsys, "qbg", "--n", "1")
    assert code == 0
    assert out.splitlines() == ["1,2\t1,2\tB\t2,1", "2,1\t1,2\tQ\t1,2"]
    code, out, _ = run(capsys, "qbg", "--n", "2")
    assert code == 0
    assert len(out.splitlines()) == len(all_edges(2))


def test_qbg_dot(capsys):
    code, out, _ = run(capsys, "qbg", "--n", "1", "--dot")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "digraph qbg {"
    assert lines[-1] == "}"
    assert '  "1,2";' in lines and '  "2,1";' in lines
    assert '  "1,2" -> "2,1" [label="(1,2) B"];' in lines


def test_chain_json(capsys):
    code, out, _ = run(capsys, "chain", "--n", "2", "--J", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {
        "J": [2],
        "n": 2,
        "rows": [
            {"index": 0, "level": 0, "orientation": 1, "part": "beta", "root": [1, 2]},
            {"index": 1, "level": 1, "orientation": -1, "part": "gamma", "root": [2, 3]},
        ],
    }


def test_groth_golden_json(capsys):
    code, out, _ = run(
        capsys, "groth", "--n", "1", "--w", "21", "--format", "json"
    )
    assert code == 0
    assert out == (
        '{"classical":false,"n":1,"presentation":"z","q_deg":3,"terms":'
        '[{"terms":[{"q_degs":[0],"weight_coeffs":[{"coeff":"1","eps_coords":[0]}]}],'
        '"z_exponents":[0,0]},'
        '{"terms":[{"q_degs":[0],"weight_coeffs":[{"coeff":"-1","eps_coords":[-1]}]},'
        '{"q_degs":[1],"weight_coeffs":[{"coeff":"1","eps_coords":[-1]}]}],'
        '"z_exponents":[1,0]}],"w":"2,1"}\n'
    )


def test_window_echoed_canonically(capsys):
    _, out, _ = run(
        capsys, "chevalley", "--n", "2", "--w", "312", "--J", "1",
        "--format", "json",
    )
    assert json.loads(out)["w"] == "3,1,2"


def test_byte_stability(capsys):
    a = run(capsys, "verify", "ideal", "--n", "2", "--q-deg", "2", "--json")
    b = run(capsys, "verify", "ideal", "--n", "2", "--q-deg", "2", "--json")
    assert a == b
    assert a[0] == 0


def test_thread_count_does_not_change_output(capsys):
    one = run(
        capsys, "verify", "main", "--n", "2", "--q-deg", "2",
        "--json", "--threads", "1",
    )
    four = run(
        capsys, "verify", "main", "--n", "2", "--q-deg", "2",
        "--json", "--threads", "4",
    )
    assert one == four
    assert one[0] == 0


def test_q_deg_monotonicity(capsys):
    def terms_at(d):
        _, out, _ = run(
            capsys, "groth", "--n", "2", "--w", "321", "--q-deg", str(d),
            "--format", "json",
        )
        return json.loads(out)["terms"]

    low, high = terms_at(2), terms_at(3)
    cut = [
        {
            "z_exponents": row["z_exponents"],
            "terms": [t for t in row["terms"] if sum(t["q_degs"]) <= 2],
        }
        for row in high
    ]
    cut = [row for row in cut if row["terms"]]
    assert low == cut


def test_groth_x_presentation(capsys):
    code, out, _ = run(
        capsys, "groth", "--n", "1", "--w", "21", "--vars", "x",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["presentation"] == "x"
    assert all("x_exponents" in row for row in obj["terms"])
    code, out, _ = run(capsys, "groth", "--n", "1", "--w", "21", "--vars", "x")
    assert code == 0
    assert "x1" in out


def test_sijection_json(capsys):
    code, out, _ = run(
        capsys, "sijection", "--n", "2", "--k", "1", "--format", "json"
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["involution"] is True
    assert obj["fixed_points"] == 1 and obj["fixed_is_q"] is True
    assert obj["path_counts"] == {"": 1, "1": 2}
    assert obj["telescope"][0]["end"] == "3,2,1"


def test_sijection_dump_lists_paths(capsys):
    code, out, _ = run(
        capsys, "sijection", "--n", "2", "--k", "2", "--dump",
        "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert len(obj["paths"]) == sum(obj["path_counts"].values())
    assert {p["class"] for p in obj["paths"]} <= {"A1", "A2", "B1", "B2", "C"}


def test_verify_text_report(capsys):
    code, out, _ = run(capsys, "verify", "longest", "--n", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].startswith("note:")
    assert all(l.startswith("PASS") for l in lines[2:-1])


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(n, trunc, **kw):
        return Report("t", n, trunc, (Case("boom", False, "nope"),))

    monkeypatch.setitem(cli.SUITES, "ideal", broken)
    code, out, _ = run(capsys, "verify", "ideal", "--n", "1")
    assert code == 1
    assert "FAIL" in out


def test_verify_k_restriction(capsys):
    code, out, _ = run(
        capsys, "verify", "prop-wk", "--n", "2", "--k", "2", "--json"
    )
    assert code == 0
    obj = json.loads(out)
    assert {c["name"].split()[0] for c in obj["cases"]} == {"k=2"}


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
