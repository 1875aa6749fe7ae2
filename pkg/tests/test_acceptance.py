"""Acceptance gate: one or more checks per criterion, each tagged with its number.

The terminal summary prints one PASS/FAIL line per criterion.  Tolerances are
exact throughout.
"""

import itertools
import time

import pytest

from quatcodes.algebra import W, canonical_key, congruent, enumerate_residues
from quatcodes.audit import audit_diff, audit_search, audit_table, cardinality_report
from quatcodes.bounds import compare_formula_oracle, get_case, search_equality
from quatcodes.codes import (
    Verdict,
    build_syndrome_table,
    check_perfect,
    decode,
    enumerate_codewords,
    error_patterns,
    min_distance,
    sphere_size,
    syndrome_elements,
)
from quatcodes.grammar import parse_ring
from quatcodes.metrics import MetricKind, build_weight_table, distance, representation_weight
from quatcodes.published import example_code

criterion = pytest.mark.criterion


# 1 -----------------------------------------------------------------------------


@criterion(1)
def test_table_one():
    summary, discrepancies = audit_table("I")
    assert summary["row_count"] == 24
    assert summary["matching_rows"] == 24
    assert discrepancies == []
    assert summary["syndromes_with_zero_distinct"]
    ex1 = example_code("ex1")
    report = check_perfect(ex1)
    assert report.sphere_count == 24 + 1 == 5**2 == report.coset_count
    assert report.verdict is Verdict.PERFECT


# 2 -----------------------------------------------------------------------------


@criterion(2)
def test_table_two():
    summary, discrepancies = audit_table("II")
    assert summary["row_count"] == 24
    assert summary["matching_rows"] == 23
    assert len(discrepancies) == 1
    (d,) = discrepancies
    assert "(0,e3,0)" in d.location
    assert (d.paper_value, d.computed_value) == ("1+e3", "-1+e3")
    assert summary["syndromes_with_zero_distinct"]
    report = check_perfect(example_code("ex2"))
    assert report.sphere_count == 8 * 3 + 1 == 25 == report.coset_count
    assert report.verdict is Verdict.PERFECT


# 3 -----------------------------------------------------------------------------


@criterion(3)
def test_table_three():
    summary, discrepancies = audit_table("III")
    assert summary["row_count"] == 16
    assert summary["matching_rows"] == 16
    assert discrepancies == []
    ex3 = example_code("ex3")
    # the zero pattern comes first, so the zero syndrome is included
    syndromes = [syndrome_elements(ex3, e)[0] for e in error_patterns(ex3.weight_table, ex3.n, 1)]
    assert len(syndromes) == 17
    for x, y in itertools.combinations(syndromes, 2):
        assert not congruent(ex3.ring, x, y)


# 4 -----------------------------------------------------------------------------


@criterion(4)
@pytest.mark.parametrize("text,expected", [
    ("G:2+1i", 5), ("L:1+1e1+1e2", 9), ("L:2+1e1", 25), ("L:2+1e1+1e2+1e3", 49), ("L:3+2e1", 169),
])
def test_cardinalities(text, expected):
    system = enumerate_residues(parse_ring(text))
    assert system.count == expected
    assert system.agrees_with_published


@criterion(4)
def test_hurwitz_cardinality_report():
    report, discrepancies = cardinality_report(parse_ring("H:1+1e1+1e2"))
    assert report["cardinality"] == 18
    assert report["published_cardinality"] == 17
    assert "added no new class" in report["certificate"]
    ex3 = report["examples"]["ex3"]
    assert ex3["verdict_enumerated"] == Verdict.LOOSE.value
    assert ex3["verdict_printed_cardinality"] == Verdict.PERFECT.value
    assert len(discrepancies) == 1


# 5 -----------------------------------------------------------------------------


@criterion(5)
@pytest.mark.parametrize("text,metric", [
    ("G:2+1i", MetricKind.MANNHEIM), ("G:3+2i", MetricKind.MANNHEIM), ("L:2+1e1", MetricKind.LIPSCHITZ),
    ("H:1+1e1+1e2", MetricKind.LIPSCHITZ), ("H:1+1e1+1e2", MetricKind.HURWITZ),
])
def test_metric_axioms(text, metric):
    ring = parse_ring(text)
    table = build_weight_table(ring, metric)
    reps = enumerate_residues(ring).representatives
    dist = [[distance(table, x, y) for y in reps] for x in reps]
    n = len(reps)
    for i in range(n):
        for j in range(n):
            assert (dist[i][j] == 0) == (i == j)
            assert dist[i][j] == dist[j][i]
            for k in range(n):
                assert dist[i][k] <= dist[i][j] + dist[j][k]


@criterion(5)
def test_weights_of_w():
    assert representation_weight(MetricKind.LIPSCHITZ, W) == 2
    assert representation_weight(MetricKind.HURWITZ, W) == 1


# 6 -----------------------------------------------------------------------------

DIFF_CASES = [
    "lipschitz-t1",
    "lipschitz-t2-p3",
    "lipschitz-t2-p5",
    "lipschitz-t2-p7-p11",
    "lipschitz-t2",
    "hurwitz-lipschitz-t1",
    "hurwitz-lipschitz-t2-p3",
    "hurwitz-lipschitz-t2-p5",
    "hurwitz-lipschitz-t2-p7-p11",
    "hurwitz-lipschitz-t2",
    "hurwitz-t2-p3",
    "hurwitz-t2",
]


@criterion(6)
@pytest.mark.parametrize("case_id", DIFF_CASES)
def test_formula_matches_oracle(case_id):
    case = get_case(case_id)
    for ring in case.rings:
        report = compare_formula_oracle(case, parse_ring(ring), range(1, 5))
        assert [(r.n, r.formula) for r in report.rows] == [(r.n, r.oracle) for r in report.rows], (
            f"{case.formula} at {ring}: defects {[r.defect for r in report.rows]}, "
            f"spectrum {list(report.spectrum)}")


@criterion(6)
def test_example_value_265():
    report = compare_formula_oracle(get_case("lipschitz-t2-p5"), parse_ring("L:2+1e1"), [3])
    assert report.rows[0].formula == report.rows[0].oracle == 265


@criterion(6)
def test_mannheim_two_defect_flagged():
    report = compare_formula_oracle(get_case("mannheim-t2"), parse_ring("G:3+2i"), range(1, 5))
    assert [r.defect for r in report.rows] == [4, 8, 12, 16]
    assert [r.oracle for r in report.rows] == [8 * n * n + 4 * n + 1 for n in range(1, 5)]
    assert len(audit_diff(report)) == 4


# 7 -----------------------------------------------------------------------------

_search_clock = {"total": 0.0}


def _timed_search(*args, **kwargs):
    start = time.perf_counter()
    result = search_equality(*args, **kwargs)
    _search_clock["total"] += time.perf_counter() - start
    return result


def _found(result, pairs, p=None):
    got = {(h.n, h.k) for h in result.hits if p is None or h.p == p}
    return [nk for nk in pairs if nk not in got]


@criterion(7)
def test_single_mannheim_list_with_primes():
    res = _timed_search(get_case("mannheim-t1"), 50, 1000, 23, paper_mode=True)
    primes = {(h.n, h.k): h.p for h in res.hits}
    expected = {(3, 2): 13, (4, 3): 17, (6, 4): 5, (7, 6): 29, (9, 8): 37,
                (31, 28): 5, (42, 40): 13, (549, 546): 13}
    assert {nk: primes.get(nk) for nk in expected} == expected
    assert audit_search(res)[1] == []


@criterion(7)
def test_single_mannheim_p5():
    res = _timed_search(get_case("mannheim-t1"), 5, 10, 23, paper_mode=True)
    assert [(h.n, h.k) for h in res.hits if h.feasible] == [(6, 4)]


@criterion(7)
def test_single_lipschitz_p5():
    res = _timed_search(get_case("lipschitz-t1"), 5, 2000, 23, p_min=5, paper_mode=True)
    assert _found(res, [(3, 2), (1953, 1950)], p=5) == []


@criterion(7)
def test_double_lipschitz_large_primes():
    res = _timed_search(get_case("lipschitz-t2"), None, 10**4, 23, paper_mode=True)
    assert {(h.n, h.k, h.p) for h in res.feasible_hits} >= {(5, 4, 29), (5915, 5914, 33461)}


@criterion(7)
@pytest.mark.parametrize("p,pairs", [
    (3, [(2, 1), (36, 34), (614, 611), (10440, 10436), (177482, 177477)]),
    (5, [(6, 5), (300, 298), (14706, 14703), (720600, 720596)]),
    (7, [(12, 11), (1176, 1174), (114084, 114081)]),
])
def test_hurwitz_lipschitz_single_lists(p, pairs):
    res = _timed_search(get_case("hurwitz-lipschitz-t1"), p, 10**6, 23, p_min=p, paper_mode=True)
    assert _found(res, pairs, p=p) == []


@criterion(7)
@pytest.mark.parametrize("p,pairs", [
    (3, [(83520, 83516), (6975757440, 6975757432)]),
    (5, [(2400, 2398), (5764800, 5764796)]),
])
def test_hurwitz_single_lists(p, pairs):
    res = _timed_search(get_case("hurwitz-t1"), p, 10**10, 23, p_min=p, paper_mode=True)
    missing = _found(res, pairs, p=p)
    got = sorted((h.n, h.k) for h in res.hits)
    assert missing == [], f"printed pairs not solutions: {missing}; solutions found: {got}"


@criterion(7)
def test_search_budget():
    assert _search_clock["total"] < 60.0


# 8 -----------------------------------------------------------------------------

NONEXISTENT = [
    "lipschitz-t2-p3",
    "lipschitz-t2-p5",
    "lipschitz-t2-p7-p11",
    "hurwitz-lipschitz-t2-p3",
    "hurwitz-lipschitz-t2-p5",
    "hurwitz-lipschitz-t2-p7-p11",
    "hurwitz-t2-p3",
]


@criterion(8)
@pytest.mark.parametrize("case_id", NONEXISTENT)
def test_no_feasible_solution_fixed_modulus(case_id):
    res = search_equality(get_case(case_id), None, 10**6, 23, paper_mode=True)
    assert res.feasible_hits == []
    assert audit_search(res)[1] == []


@criterion(8)
@pytest.mark.parametrize("case_id", ["hurwitz-lipschitz-t2", "hurwitz-t2"])
def test_no_solution_any_modulus(case_id):
    start = time.perf_counter()
    res = search_equality(get_case(case_id), None, 10**5, 23, paper_mode=True)
    assert time.perf_counter() - start < 10.0
    assert res.hits == []
    summary, discrepancies = audit_search(res)
    assert discrepancies == []
    assert summary["nonexistence"]["scanned"]["n_max"] == 10**5


# 9 -----------------------------------------------------------------------------


@criterion(9)
@pytest.mark.parametrize("name,trials", [("ex1", 625 * 25), ("ex2", 625 * 25), ("ex3", 18 * 17)])
def test_decoder_round_trip(name, trials):
    code = example_code(name)
    table = build_syndrome_table(code)
    words = enumerate_codewords(code)
    errors = list(error_patterns(code.weight_table, code.n, 1))
    assert len(errors) == sphere_size(code.weight_table, code.n, 1)
    count = 0
    for c in words:
        for e in errors:
            received = tuple(x + y for x, y in zip(c, e))
            got, _ = decode(code, table, received)
            assert [canonical_key(code.ring, x) for x in got] == [canonical_key(code.ring, x) for x in c]
            count += 1
    assert count == trials


# 10 ----------------------------------------------------------------------------


@criterion(10)
@pytest.mark.parametrize("name,expected", [("ex1", 3), ("ex2", 3)])
def test_min_distance(name, expected):
    assert min_distance(example_code(name)) == expected
