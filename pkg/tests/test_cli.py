import math

import numpy as np
import pytest

from smallbias.cli import main
from smallbias.concat import concatenate
from smallbias.fileio import (
    FormatError,
    format_bias_space,
    format_matrix,
    parse_bias_space,
    parse_matrix,
    read_any,
)
from smallbias.hermitian import build_product_code
from smallbias.matrices import BiasSpace, BinaryMatrix, columns_to_bias_space, example_3x12


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_matrix_format_binary():
    text = format_matrix(example_3x12().bits, 1)
    assert text.splitlines()[0] == "matrix 3 12 field=2^1"
    assert text.splitlines()[3] == "111111110000"
    assert text.endswith("0000\n") and "\r" not in text
    back = parse_matrix(text)
    assert back.s == 1 and back.as_binary() == example_3x12()


def test_matrix_format_field():
    outer = build_product_code(2, 36)
    text = format_matrix(outer.generator, 2)
    assert text.splitlines()[0] == "matrix 6 64 field=2^2"
    assert text.splitlines()[1] == " ".join(["1"] * 64)
    back = parse_matrix(text)
    assert (back.entries == outer.generator).all()


def test_matrix_format_hex():
    text = format_matrix(np.array([[0, 10, 255]]), 8)
    assert text == "matrix 1 3 field=2^8\n0 a ff\n"
    assert parse_matrix(text).entries.tolist() == [[0, 10, 255]]


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "matrix 2 3 field=2^1\n101\n",
        "matrix 1 3 field=2^1\n1021\n",
        "matrix 1 2 field=2^2\n1 4\n",
        "matrx 1 1 field=2^1\n1\n",
    ],
)
def test_matrix_parse_errors(bad):
    with pytest.raises(FormatError):
        parse_matrix(bad)


def test_bias_space_roundtrip():
    space = columns_to_bias_space(concatenate(build_product_code(2, 36)).matrix)
    text = format_bias_space(space)
    assert text.splitlines()[0] == "biasspace 12 256"
    assert parse_bias_space(text) == space
    with pytest.raises(FormatError):
        parse_bias_space("biasspace 2 3\n10 1\n01 1\n")


def test_build_product(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "product", "--q", 2, "--delta", 36, "--out", tmp_path)
    assert code == 0
    assert "N=64 K=6 D=36" in out and "n=256 k=12 |X|=256" in out and "7/16" in out
    outer = read_any(tmp_path / "outer.txt")
    assert outer.entries.shape == (6, 64)
    concat = read_any(tmp_path / "concat.txt").as_binary()
    assert (concat.rows, concat.cols) == (12, 256)
    space = read_any(tmp_path / "biasspace.txt")
    assert space.size == 256
    assert concat == concatenate(build_product_code(2, 36)).matrix


def test_build_deterministic(tmp_path, capsys):
    for d in ("a", "b"):
        assert run(capsys, "build", "product", "--q", 2, "--delta", 30, "--out", tmp_path / d)[0] == 0
    for name in ("outer.txt", "concat.txt", "biasspace.txt"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_build_rs(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "rs", "--s", 2, "--N", 4, "--K", 2, "--out", tmp_path)
    assert code == 0 and "n=16 k=4" in out and "1/4" in out


def test_build_errors(tmp_path, capsys):
    code, _, err = run(capsys, "build", "product", "--q", 2, "--delta", 70, "--out", tmp_path)
    assert code != 0 and "delta=70" in err
    with pytest.raises(SystemExit):
        main(["build", "rs", "--s", "2"])


def test_build_check_sampling(tmp_path, capsys):
    code, out, _ = run(capsys, "--seed", 5, "build", "product", "--q", 2, "--delta", 36,
                       "--out", tmp_path, "--check", 200)
    assert code == 0 and "seed=5" in out and "ok" in out


def test_bias_example(tmp_path, capsys):
    assert run(capsys, "build", "example", "--out", tmp_path)[0] == 0
    code, out, _ = run(capsys, "bias", tmp_path / "concat.txt")
    assert code == 0 and out.count("epsilon=1/3") == 2 and "methods agree" in out
    code, out, _ = run(capsys, "bias", tmp_path / "concat.txt", "--dedup")
    assert code == 0 and out.count("epsilon=3/5") == 2
    code, out, _ = run(capsys, "bias", tmp_path / "biasspace.txt", "--method", "weights")
    assert code == 0 and "epsilon=1/3" in out


def test_bias_infeasible(tmp_path, capsys):
    path = tmp_path / "tall.txt"
    path.write_text(format_matrix(np.eye(30, dtype=int), 1))
    code, _, err = run(capsys, "bias", path, "--method", "subsets")
    assert code != 0 and "infeasible" in err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--q", 2, "--delta", 36)
    assert code == 0 and "K=6" in out and "K_lower=1.90" in out
    _, out, _ = run(capsys, "params", "--q", 2, "--delta", 49)
    assert "K=1" in out and "K_lower=0.0000" in out
    _, out, _ = run(capsys, "params", "--q", 4, "--delta", 58)
    fields = dict(tok.split("=") for tok in out.split())
    assert int(fields["K"]) >= float(fields["K_lower"])
    _, out, _ = run(capsys, "params", "--q", 2, "--delta", 5)
    assert "K_lower=n/a" in out
    code, _, _ = run(capsys, "params", "--q", 3, "--delta", 5)
    assert code != 0


def test_compare(capsys):
    code, out, _ = run(capsys, "compare", "--alpha", 1)
    assert code == 0
    for fam in ("RS", "AG", "New"):
        assert any(line.split() == [fam, "4.0000"] for line in out.splitlines())
    assert "crossover New/RS: alpha=1.000000" in out
    _, out, _ = run(capsys, "compare", "--alpha", 1 / math.sqrt(5), "--l-min", 5, "--l-max", 5)
    vals = {ln.split()[0]: ln.split()[1] for ln in out.splitlines() if ln.startswith("  ")}
    assert float(vals["New"]) < float(vals["NormTrace(5)"])
    _, out, _ = run(capsys, "compare", "--alpha", 0.3)
    assert any(line.split() == ["BT", "invalid"] for line in out.splitlines())


def test_export_roundtrip(tmp_path, capsys):
    run(capsys, "build", "example", "--out", tmp_path)
    assert run(capsys, "export", tmp_path / "concat.txt", "-o", tmp_path / "s.txt")[0] == 0
    assert (tmp_path / "s.txt").read_bytes() == (tmp_path / "biasspace.txt").read_bytes()
    assert run(capsys, "export", tmp_path / "s.txt", "-o", tmp_path / "m.txt")[0] == 0
    back = read_any(tmp_path / "m.txt").as_binary()
    assert isinstance(back, BinaryMatrix)
    assert columns_to_bias_space(back) == read_any(tmp_path / "s.txt")
    assert run(capsys, "export", tmp_path / "s.txt", "-o", tmp_path / "d.txt", "--dedup")[0] == 0
    assert read_any(tmp_path / "d.txt").entries.shape == (3, 5)
    assert run(capsys, "export", tmp_path / "concat.txt", "-o", tmp_path / "ds.txt", "--dedup")[0] == 0
    dedup = read_any(tmp_path / "ds.txt")
    assert isinstance(dedup, BiasSpace) and dedup.size == 5
