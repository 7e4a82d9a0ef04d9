import pytest

import wordlab


def test_generate_and_repetitions():
    tm = wordlab.generate("thue_morse", 64)
    assert len(tm) == 64
    assert wordlab.is_alpha_free(tm, "2", strict=True)
    assert not wordlab.is_alpha_free(tm, "2", strict=False)
    assert wordlab.max_exponent("01010") == "5/2"
    assert wordlab.least_period("abaab") == 3
    assert wordlab.count_distinct_squares("aabaab") == len(wordlab.distinct_squares("aabaab"))
    assert wordlab.count_runs("aabaabaa") == len(wordlab.runs("aabaabaa"))


def test_patterns():
    res = wordlab.longest_avoiding("XX", 2, max_length=50)
    assert res["verdict"] == "exhausted" and res["length"] == 3
    assert wordlab.encounters("ab", "XX") is None
    hit = wordlab.encounters("aabba", "XYX")
    assert hit is not None
    census = wordlab.growth_census("square-free", 3, 6)
    assert census["counts"][:4] == [1, 3, 6, 12]


def test_abelian():
    assert wordlab.kabelian_equiv("ab", "ba", 1)
    assert not wordlab.kabelian_equiv("aab", "aba", 2)
    assert wordlab.is_kabelian_npower("abba", 2, 1)
    res = wordlab.avoid_long_powers(3, "abelian", 2, 1, max_length=100)
    assert res["verdict"] == "exhausted" and res["length"] == 7


def test_complexity():
    prof = wordlab.complexity("fibonacci", "factor", n_max=10, horizon=1000)
    assert [row["value"] for row in prof["values"][:5]] == [1, 2, 3, 4, 5]


def test_equations_and_pcp():
    sols = wordlab.solve_word_equation("x y = y x", max_len=2)
    assert {"x": "a", "y": "a"} in sols
    assert all(s["x"] + s["y"] == s["y"] + s["x"] for s in sols)
    assert wordlab.bounded_pcp("a->ab;b->a", "a->a;b->ba") == "ab"
    assert wordlab.bounded_pcp("a->a", "a->aa", 5) is None


def test_probes_and_errors():
    assert "1.3.05.1" in wordlab.probe_ids()
    report, code = wordlab.run_probe("1.3.05.1", {"n_max": 8})
    assert report["verdict"] == "pass" and code == 0
    with pytest.raises(wordlab.DomainError):
        wordlab.run_probe("no.such.id")
    with pytest.raises(wordlab.ParseError):
        wordlab.census("alphabet = two")
    rows = wordlab.census("predicate = square-free\nalphabet = 2\nmax_length = 4")
    assert [r["count"] for r in rows] == ["1", "2", "2", "2", "0"]
