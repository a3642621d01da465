import io
import subprocess
import sys

import pytest

import oracles
from connspace.cli import main
from connspace.core import ConnectivitySpace, generate, make_An
from connspace.formats import FormatError, format_space, parse_matrix, parse_space
from connspace.pd import parse_pd

FIG1 = """# Borromean rings of Borromean rings
points 9
set 1 2 3
set 4 5 6
set 7 8 9
set 1 2 3 4 5 6 7 8 9
"""
BORROMEAN = "points 3\nset 1 2 3\n"
BAD_UNION = "points 3\nset 1 2\nset 2 3\n"
OVERLAP = "points 4\nset 1 2\nset 1 3\nset 1 2 3\nset 1 2 3 4\n"


def run(*argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(list(argv), out, err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def spacefile(tmp_path):
    def write(text, name="space.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write


def test_validate(spacefile):
    assert run("validate", spacefile(BORROMEAN)) == (0, "valid\n", "")
    code, out, _ = run("validate", spacefile(BAD_UNION))
    assert code == 2
    assert out.startswith("violation: ") and "{1,2,3}" in out


def test_order(spacefile):
    assert run("order", spacefile(FIG1))[:2] == (0, "2\n")
    assert run("order", spacefile(BORROMEAN))[:2] == (0, "1\n")


def test_order_reads_stdin():
    assert run("order", stdin=BORROMEAN)[:2] == (0, "1\n")
    assert run("order", "-", stdin=format_space(make_An(5)))[:2] == (0, "4\n")


def test_invalid_structure_exit_2(spacefile):
    code, out, err = run("order", spacefile(BAD_UNION))
    assert code == 2 and out == "" and err.startswith("invalid:")


@pytest.mark.parametrize(
    "text",
    ["set 1 2\n", "points 3\nset 1 4\n", "points 0\n", "points 3\nfoo 1\n", "points x\n", ""],
)
def test_malformed_exit_1(spacefile, text):
    code, _, err = run("order", spacefile(text))
    assert code == 1 and err.startswith("error:")


def test_missing_file_exit_1(tmp_path):
    assert run("order", str(tmp_path / "nope"))[0] == 1


def test_irreducibles(spacefile):
    code, out, _ = run("irreducibles", spacefile(BORROMEAN))
    assert code == 0
    assert out == "0\t1\n0\t2\n0\t3\n1\t1 2 3\n"


def test_graph(spacefile):
    code, out, _ = run("graph", spacefile("points 2\nset 1 2\n"))
    assert (code, out) == (0, "1\t1 2\n2\t1 2\nlongest\t1\n")
    code, dot, _ = run("graph", spacefile("points 2\nset 1 2\n"), "--dot")
    assert code == 0 and dot.startswith("digraph generic {\n")
    assert '"1" -> "1,2";' in dot and dot.endswith("}\n")


def test_canon(spacefile):
    a = run("canon", spacefile("points 3\nset 1 2\n", "a"))[1]
    b = run("canon", spacefile("points 3\nset 2 3\n", "b"))[1]
    c = run("canon", spacefile(BORROMEAN, "c"))[1]
    assert a == b != c
    assert a.strip() == a.strip().lower()
    bytes.fromhex(a.strip())


def test_an():
    code, out, _ = run("an", "3")
    assert code == 0
    assert out == "points 3\nset 1 2\nset 1 2 3\n"
    assert run("an", "0")[0] == 1
    assert run("an", "65")[0] == 1


def test_an_pipe_order():
    exe = [sys.executable, "-m", "connspace"]
    text = subprocess.run(exe + ["an", "9"], capture_output=True, text=True, check=True).stdout
    res = subprocess.run(exe + ["order"], input=text, capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "8\n"


def test_link_order(spacefile):
    assert run("link-order", spacefile(FIG1))[:2] == (0, "2\n")
    code, _, err = run("link-order", spacefile(BAD_UNION))
    assert code == 2 and "must also be nonsplittable" in err
    assert run("link-order", spacefile(BAD_UNION), "--close")[:2] == (0, "1\n")


def test_lk_bound(spacefile):
    code, out, _ = run("lk-bound", spacefile("3\n0 1 0\n1 0 1\n0 1 0\n"))
    assert code == 0
    assert out.startswith("# linking-number lower bound")
    assert parse_space(out) == generate(3, [{1, 2}, {2, 3}])


def test_lk_bound_errors(spacefile):
    assert run("lk-bound", spacefile("2\n0 1\n2 0\n"))[0] == 2
    assert run("lk-bound", spacefile("2\n0 1\n"))[0] == 1
    assert run("lk-bound", spacefile("2\n0 x\n1 0\n"))[0] == 1


def test_realize_stdout(spacefile):
    code, out, _ = run("realize", spacefile(FIG1), "--pd", "-")
    assert code == 0
    pd = parse_pd(out)
    assert sorted(pd.components) == list(range(1, 10))


def test_realize_file(spacefile, tmp_path):
    target = tmp_path / "out.pd"
    code, out, _ = run("realize", spacefile(BORROMEAN), "--pd", str(target))
    assert code == 0 and out == "components\t3\ncrossings\t6\n"
    assert parse_pd(target.read_text()).crossing_count == 6


def test_realize_not_tree_like(spacefile):
    code, out, err = run("realize", spacefile(OVERLAP), "--pd", "-")
    assert code == 3 and out == ""
    assert "{1,2} and {1,3}" in err


def test_census():
    code, out, _ = run("census", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["0\t1", "1\t4", "2\t1"]
    assert "classes\t6" in lines and "structures\t12" in lines


def test_census_labeled_and_cap():
    assert "classes\t12" in run("census", "3", "--labeled")[1]
    code, _, err = run("census", "7")
    assert code == 1 and "6" in err
    assert run("census", "4", "--workers", "2")[1] == run("census", "4")[1]


def test_help_lists_every_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--help"])
    assert exc.value.code == 0
    text = capsys.readouterr().out
    for name in ("validate", "order", "irreducibles", "graph", "canon", "an",
                 "link-order", "lk-bound", "realize", "census"):
        assert name in text


def test_space_file_round_trip():
    rng_corpus = oracles.random_corpus(count=200, max_n=10, seed=5)
    for n, gens in rng_corpus:
        space = generate(n, gens)
        assert parse_space(format_space(space)) == space


def test_space_file_tolerates_duplicates():
    text = "points 3\nset 1 2\nset 2 1  # same\n\nset 1\n"
    assert parse_space(text) == ConnectivitySpace.from_sets(3, [{1, 2}])


def test_matrix_parse_errors():
    with pytest.raises(FormatError):
        parse_matrix("")
    with pytest.raises(FormatError):
        parse_matrix("0\n")
