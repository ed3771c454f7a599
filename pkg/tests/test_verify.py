import pytest

from qschub.verify import SUITES, SuiteResult, character_comparison, run_suites, _mahonian, _rank
from fractions import Fraction


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes_n3(name):
    result = SUITES[name](3, degree_bound=3, seed=17)
    assert result.passed, result.failures[:5]
    assert result.lines


@pytest.mark.parametrize("name", ["diagonal-scaling", "word-invariance", "a-minus-r"])
def test_seeded_suites_pass_n4(name):
    result = SUITES[name](4, degree_bound=3, seed=23)
    assert result.passed, result.failures[:5]


def test_run_suites_all():
    results = run_suites("all", 2, degree_bound=3, seed=17, jobs=1)
    assert [r.name for r in results] == list(SUITES)
    assert all(r.passed for r in results)


def test_run_suites_subset():
    results = run_suites(["knuth", "relations"], 3, degree_bound=2, seed=17)
    assert [r.name for r in results] == ["knuth", "relations"]


def test_character_comparison_structure():
    comparison = character_comparison(3)
    assert comparison.all_agree
    assert len(comparison.rows) == 4
    assert comparison.mus == ((3,), (2, 1), (1, 1, 1))
    cell = comparison.rows[1]["cells"][(3,)]
    assert str(cell["weights"]) == "-q"


def test_mahonian():
    assert _mahonian(3) == [1, 2, 2, 1]
    assert _mahonian(4) == [1, 3, 5, 6, 5, 3, 1]
    assert _mahonian(1) == [1]


def test_rank():
    F = Fraction
    assert _rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert _rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert _rank([[F(0), F(0)]]) == 0


def test_result_rendering():
    result = SuiteResult("demo", lines=["checked things"], failures=["bad case"])
    text = result.render()
    assert "FAIL" in text and "bad case" in text
    assert SuiteResult("demo").passed
