import pytest

import pseudoarc as pa

C5 = [0, 1, 2, 1, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 2, 1, 2, 3, 2, 3, 4, 3, 2, 3, 4, 3, 4, 5]


def test_canonical():
    assert pa.canonical_crooked(5) == C5
    assert [pa.crn(n) for n in range(6)] == [0, 1, 2, 5, 12, 29]
    assert pa.crn(24) == 543339720
    assert pa.is_crooked(5, C5)[0]
    assert pa.eval_point(5, 12) == 4
    assert pa.eps_crooked_decide(5, C5, "1/4") == "Certified"
    assert pa.lewis_minc(3) == [1, 2, 12, 543339720]


def test_factorization():
    s = [0, 1, 2, 1, 2, 3]
    f = pa.factor_through_canonical(3, s)
    c3 = pa.canonical_crooked(3)
    assert [c3[i] for i in f] == s
    sp = pa.cofactor_to_canonical(3, s)
    assert [s[i] for i in sp] == c3
    r = pa.crooked_factorize([(0, 0), (1, 1)], "1/4")
    assert r["delta"] > 0
    assert r["bound"] < pa.q("1/4")


def test_circle_and_types():
    assert pa.circle_degree([(0, 0), (1, 3)]) == 3
    m = pa.crooked_circle_map(4, 2)
    assert m["map"]["degree"] == 2
    av = m["avatar"]
    assert pa.is_circularly_crooked(av["codomain"], av["values"])
    t = pa.type_of_sequence([], [6])
    assert t == {"default": "0", "exceptions": {"2": "inf", "3": "inf"}}
    two_inf = {"default": "0", "exceptions": {"2": "inf"}}
    sp = pa.supernatural_mul(two_inf, {"default": "0", "exceptions": {"3": "1"}})
    assert pa.multiplication_solve(two_inf, sp) == {"default": "0", "exceptions": {"3": "1"}}
    assert pa.multiplication_solve({"default": "0", "exceptions": {"2": "1"}}, {"default": "0", "exceptions": {"3": "1"}}) is None
    assert pa.type_equiv({"default": "0", "exceptions": {"5": "1"}}, {"default": "0", "exceptions": {}})


def test_games():
    t = pa.bm_play("interval", "crooked", rounds=3)
    r = pa.bm_verify(t, ["crooked_schedule"])
    assert r["ok"]
    assert {c["n"] for c in r["certificates"]} >= {0, 1, 2, 3, 4}
    f = pa.bm_play("finsurj", "split", eve="random", rounds=4, seed=1)
    assert pa.bm_verify(f, ["splits_every_point"])["ok"]
    below = {"default": "0", "exceptions": {"2": "inf"}}
    c = pa.bm_play("circle", "solenoid", rounds=6, below=below, inject=2)
    assert c["blame"] == [{"prime": 3, "move": 2, "mover": "Eve"}]


def test_errors():
    with pytest.raises(pa.PseudoarcError) as e:
        pa.eval_point(3, 99)
    assert e.value.kind == "IndexOutOfRange"
    with pytest.raises(pa.PseudoarcError):
        pa.is_crooked(2, [0, 2])
