import json
import random
import subprocess
import sys
from fractions import Fraction as F

import pytest

from cmleaves.cli import main
from cmleaves.leaves import enumerate_leaves, normalization_of_closure
from cmleaves.params import (
    CyclicK, DirectBC, TypeB, cyclic_from_bc, cyclic_leaf_k, format_rational,
    from_leaf_bc, parse_rational, parse_vector, to_bc,
)
from cmleaves.roots import InvalidInput, build_mckay_graph, level
from cmleaves.weyl import finite_weyl_orbit


def rand_q(rng):
    return F(rng.randint(-9, 9), rng.randint(1, 6))


def test_to_bc_examples():
    for m in range(5):
        assert to_bc(TypeB(F(1), F(m))) == (F(m - 1), F(-m))
    assert to_bc(TypeB(F(0), F(1))) == (F(1), F(-1))
    assert to_bc(CyclicK(F(3), (F(0),) * 4)) == (F(-3), F(0), F(0), F(0))
    assert to_bc(DirectBC((1, 2))) == (F(1), F(2))
    with pytest.raises(InvalidInput):
        CyclicK(F(1), (F(1), F(0)))


def test_level_is_minus_a():
    rng = random.Random(3)
    for l in range(2, 6):
        g = build_mckay_graph(f"CyclicA({l})")
        k = [rand_q(rng) for _ in range(l - 1)]
        p = CyclicK(rand_q(rng), tuple(k + [-sum(k)]))
        assert level(g, to_bc(p)) == -p.a


def test_round_trips():
    rng = random.Random(11)
    for _ in range(100):
        c1, cg = rand_q(rng), rand_q(rng)
        back = from_leaf_bc(to_bc(TypeB(c1, cg)), "typeB")
        assert back == TypeB(c1, abs(cg))
    for _ in range(100):
        l = rng.randint(1, 6)
        k = [rand_q(rng) for _ in range(l - 1)]
        p = CyclicK(rand_q(rng), tuple(k + [-sum(k)]))
        assert cyclic_from_bc(to_bc(p)) == p
        assert from_leaf_bc(to_bc(p), "cyclic") == p


def test_type_b_leaf_parameters():
    for m in range(5):
        bc = (F(m + 2 * 3 - 1), F(-m - 2 * 3))
        assert from_leaf_bc(bc, "typeB") == TypeB(F(1), F(m + 6))


def test_cyclic_leaf_k_matches_normalization():
    # a' = a and k'_i = k_i - a (alpha_{1-i} - alpha_{-i}) up to permuting the k'
    rng = random.Random(5)
    for l in (2, 3, 4):
        g = build_mckay_graph(f"CyclicA({l})")
        for _ in range(15):
            k = [F(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(l - 1)]
            p = CyclicK(F(rng.choice([1, 2, -1, F(1, 2)])), tuple(k + [-sum(k)]))
            bc = to_bc(p)
            for L in enumerate_leaves(g, rng.randint(1, 4), bc):
                bcp = normalization_of_closure(g, bc, L).factors[0]["bc"]
                assert bcp in finite_weyl_orbit(g, to_bc(cyclic_leaf_k(p, L.label)))


def test_rational_parsing():
    assert parse_rational("3/4") == F(3, 4)
    assert parse_vector("1, -2/3,0") == (F(1), F(-2, 3), F(0))
    assert parse_vector("") == ()
    assert format_rational(F(-5, 2)) == "-5/2"
    with pytest.raises(InvalidInput):
        parse_rational("x")
    with pytest.raises(InvalidInput):
        parse_rational(0.5)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_leaves_json(capsys):
    code, out, _ = run(["leaves", "--group", "typeB", "--n", "6", "--c1", "1", "--cgamma", "1", "--json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["leaves"]) == 3
    assert sorted(r["dim"] for r in data["leaves"]) == [0, 8, 12]


def test_cli_hasse_dot_chain(capsys):
    code, out, _ = run(["hasse", "--group", "typeB", "--n", "6", "--c1", "1", "--cgamma", "1", "--dot"], capsys)
    assert code == 0
    assert out.count("->") == 2 and out.count("[label=") == 3


def test_cli_fixed_points(capsys):
    code, out, _ = run(["fixed-points", "--ell", "2", "--J", "1", "--nu", "", "--n", "1", "--json"], capsys)
    assert code == 0
    assert len(json.loads(out)["fixed_points"]) == 1
    code, out, _ = run(["fixed-points", "--ell", "3", "--J", "", "--nu", "", "--n", "2", "--json"], capsys)
    assert len(json.loads(out)["fixed_points"]) == 9  # generic: all 3-multipartitions of 2


def test_cli_misc_commands(capsys):
    assert run(["core", "--ell", "3", "--nu", "4,2,1"], capsys)[1].strip() == "3-core [1]"
    assert "[3, 2, 2]" in run(["residue", "--ell", "3", "--nu", "4,2,1"], capsys)[1]
    assert "core [2, 1]  n=1" in run(["residue", "--ell", "2", "--alpha", "2,3"], capsys)[1]
    code, out, _ = run(["reduce", "--bc", "2,-3", "--json"], capsys)
    assert json.loads(out) == {"word": [0, 1], "bc": ["0", "-1"], "J": [0]}
    code, out, _ = run(["slice", "--group", "typeB", "--n", "9", "--c1", "1", "--cgamma", "2"], capsys)
    assert "O(1,4)" in out and "O(2,6)" in out
    code, out, _ = run(["closure", "--group", "typeB", "--n", "9", "--c1", "1", "--cgamma", "2", "--json"], capsys)
    params = [r["params"] for r in json.loads(out)["closures"]]
    assert [p["cgamma"] for p in params] == ["2", "4", "6"]
    code, out, _ = run(["embed-slice", "--kind", "A2", "--w", "1,1", "--v", "1,1", "--json"], capsys)
    data = json.loads(out)
    assert data["slice"]["w"] == [1, 1] and data["slice"]["v"] == [1, 1]
    code, out, _ = run(["slice", "--group", "mckay:D4", "--bc", "0,0,0,0,0", "--n", "2"], capsys)
    assert code == 0


def test_cli_exit_codes(capsys):
    assert run(["leaves", "--group", "typeB", "--n", "3", "--c1", "1/0"], capsys)[0] == 2
    assert run(["leaves", "--group", "mckay:D4", "--n", "3"], capsys)[0] == 2
    assert run(["fixed-points", "--ell", "2", "--J", "0,1", "--n", "1"], capsys)[0] == 2
    assert run(["reduce", "--bc", "1,-1"], capsys)[0] == 2


def test_cli_output_is_deterministic():
    cmd = [sys.executable, "-m", "cmleaves", "leaves", "--group", "mckay:D4", "--bc", "1,0,0,0,-1",
           "--n", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["leaves"]
