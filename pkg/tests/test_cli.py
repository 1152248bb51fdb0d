import json

import pytest

from cdlab.cli import main

EXAMPLE = "ccdcc + ccdd + cdccc + 2*cdcd + 3*cddc + 2*dccd + 4*dcdc + 2*ddcc + 4*ddd"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("method", ["recursion", "paths"])
def test_diamond_example(capsys, method):
    code, out, _ = run(capsys, "diamond", "--mode=cd", f"--method={method}", "cd", "dc")
    assert code == 0
    assert out == EXAMPLE + "\n"


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["diamond", "--mode=cd", "c", "1"], "c"),
        (["diamond", "--mode=ab", "a", "b"], "ab + ba"),
        (["diamond", "--mode=ab", "--method=paths", "a", "b"], "ab + ba"),
        (["diamond", "c + d", "c"], "cc + 2*d + cd + 2*dc"),
    ],
)
def test_diamond_small(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out) == (0, expected + "\n")


def test_diamond_json(capsys):
    code, out, _ = run(capsys, "diamond", "--json", "c", "c")
    data = json.loads(out)
    assert code == 0
    assert data["product"] == {"alphabet": "cd", "terms": [{"word": "cc", "coeff": 1}, {"word": "d", "coeff": 2}]}


@pytest.mark.parametrize("argv", [["diamond", "--mode=cd", "ab", "c"], ["diamond", "c +", "c"],
                                  ["diamond", "--mode=xy", "c", "c"]])
def test_diamond_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) if "--mode=xy" in argv else _null():
        code, _, err = run(capsys, *argv)
        assert code == 2 and "error" in err


class _null:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def test_paths_gamma_listing(capsys):
    code, out, _ = run(capsys, "paths", "enumerate", "--family=gamma", "cd", "dc")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 14
    assert "R D U D\t2*cdcd" in lines
    assert "UU D RR\t2*ddd" in lines
    assert lines[-1] == "total\t" + EXAMPLE


def test_paths_omega_and_lambda(capsys):
    assert run(capsys, "paths", "enumerate", "--family=omega", "--p=1", "--q=0")[1] == "R\n"
    code, out, _ = run(capsys, "paths", "enumerate", "--family=lambda", "--p=1", "--q=1")
    assert out == "R U\tcc\nD\t2*d\ntotal\tcc + 2*d\n"
    code, out, _ = run(capsys, "paths", "enumerate", "--family=omega", "abab", "bba")
    assert "U D R R D\tbbabaab" in out.splitlines()


def test_paths_json(capsys):
    code, out, _ = run(capsys, "paths", "enumerate", "--json", "c", "d")
    data = json.loads(out)
    assert data["count"] == 2
    assert [p["steps"] for p in data["paths"]] == [["R", "UU"], ["D", "U"]]
    assert data["paths"][1]["weight"]["terms"] == [{"word": "dc", "coeff": 2}]


def test_paths_render(capsys, tmp_path):
    out_svg = tmp_path / "fig.svg"
    code, _, err = run(capsys, "paths", "render", "--family=gamma", "cd", "dc", "--out", str(out_svg))
    assert code == 0 and "13 panels" in err
    assert out_svg.read_text().count('id="axes_') == 13
    out_tex = tmp_path / "fig.tex"
    assert run(capsys, "paths", "render", "cd", "dc", "--out", str(out_tex))[0] == 0
    assert out_tex.read_text().count(r"\begin{tikzpicture}") == 13


@pytest.mark.parametrize("argv", [
    ["paths", "enumerate", "--family=gamma", "cd"],
    ["paths", "enumerate", "--family=omega"],
    ["paths", "enumerate", "--family=gamma", "ab", "c"],
    ["paths", "enumerate", "--family=lambda", "cd", "c"],
    ["paths", "render", "c", "c", "--out", "x.bmp"],
])
def test_paths_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["poset", "cdindex", "boolean:3"], "cc + d"),
        (["poset", "eulerian", "butterfly:4"], "true"),
        (["poset", "eulerian", "chain:2"], "false"),
        (["poset", "cdindex", "--op=diamond", "boolean:2", "boolean:2"], "cc + 2*d"),
        (["poset", "cdindex", "boolean:2", "--op=diamond", "boolean:2"], "cc + 2*d"),
        (["poset", "cdindex", "--op=pyramid", "polygon:4"], "ccc + 3*cd + 3*dc"),
        (["poset", "abindex", "boolean:2"], "a + b"),
    ],
)
def test_poset_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert (code, out) == (0, expected + "\n")


def test_poset_flagvector(capsys):
    code, out, _ = run(capsys, "poset", "flagvector", "polygon:5")
    assert out.splitlines() == ["S\tf_S\th_S", "{}\t1\t1", "{1}\t5\t4", "{2}\t5\t4", "{1,2}\t10\t1"]


def test_poset_not_expressible_exit_1(capsys):
    code, out, err = run(capsys, "poset", "cdindex", "chain:3")
    assert code == 1 and out == "" and "not expressible" in err


def test_poset_product_json_and_file_input(capsys, tmp_path):
    code, out, _ = run(capsys, "poset", "product", "--op=diamond", "boolean:2", "boolean:2")
    path = tmp_path / "square.json"
    path.write_text(out)
    assert run(capsys, "poset", "cdindex", str(path))[1] == "cc + 2*d\n"


@pytest.mark.parametrize("argv", [["poset", "cdindex", "nope:3"], ["poset", "cdindex", "boolean:2", "boolean:2"],
                                  ["poset", "cdindex", "--op=diamond", "boolean:2"]])
def test_poset_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_verify_commands(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "thm52", "--max-u=4", "--max-v=4")
    assert (code, out) == (0, "thm52: all 144 pairs OK\n")
    assert "thm52: 144 cases in" in err
    assert run(capsys, "verify", "slone", "--max=6")[1] == "slone: all 49 (p,q) OK\n"
    code, out, err = run(capsys, "verify", "lee", "--posets=boolean:2,polygon:3", "--report", str(tmp_path))
    assert (code, out) == (0, "lee: identity holds on all 4 listed poset pairs\n")
    assert (tmp_path / "lee.tsv").exists() and (tmp_path / "lee.png").exists()


def test_verify_json_and_bad_flags(capsys):
    code, out, _ = run(capsys, "verify", "slone", "--max=2", "--json")
    assert json.loads(out) == {"suite": "slone", "checked": 9, "mismatches": [], "ok": True}
    assert run(capsys, "verify", "slone", "--max=-1")[0] == 2
    assert run(capsys, "verify", "slone", "--workers=0")[0] == 2
    assert run(capsys, "verify", "lee", "--posets=nope:1")[0] == 2


def test_output_is_byte_stable(capsys):
    first = run(capsys, "paths", "enumerate", "cd", "dc")[1]
    second = run(capsys, "paths", "enumerate", "cd", "dc")[1]
    assert first == second
    serial = run(capsys, "verify", "thm52", "--max-u=3", "--max-v=3")[1]
    parallel = run(capsys, "verify", "thm52", "--max-u=3", "--max-v=3", "--workers=2")[1]
    assert serial == parallel


def test_unknown_options_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["poset", "cdindex", "boolean:3", "--bogus"])
    assert info.value.code == 2
