import json
import math
from collections import Counter

import pytest

from planepuzzle.analysis import (
    CHECK_NAMES,
    analyze,
    cycle_table,
    plane_for,
    split_prime_power,
    verify,
)
from planepuzzle.permgrp import format_cycle_type


def test_split_prime_power():
    assert split_prime_power(27) == (3, 3)
    assert split_prime_power(13) == (13, 1)
    with pytest.raises(ValueError, match="odd"):
        split_prime_power(8)
    with pytest.raises(ValueError, match="prime power"):
        split_prime_power(15)
    with pytest.raises(ValueError, match="at least"):
        split_prime_power(1)


def test_analyze_q3_is_m12_order():
    rep = analyze(3)
    assert rep.order == 95040
    assert rep.tag == "other"
    assert "Mathieu" in rep.note
    assert rep.raw_generators == 132 and rep.generators == 108
    assert rep.primitive
    assert all(c.passed for c in rep.checks)


def test_analyze_q5_symmetric():
    rep = analyze(5)
    assert rep.order == math.factorial(30)
    assert rep.tag == "symmetric"
    assert rep.degree == 30
    assert rep.parity_counts == {"odd": 870}
    assert rep.parity_ok and rep.primitive
    assert {c.name for c in rep.checks} == set(CHECK_NAMES)
    assert all(c.passed for c in rep.checks)


def test_analyze_q7_alternating():
    rep = analyze(7, checks=("parity",))
    assert 2 * rep.order == math.factorial(56)
    assert rep.tag == "alternating"


def test_analyze_alpha_independent():
    # Same order and tag for three different hole home points.
    reports = [analyze(5, alpha=a, checks=()) for a in (0, 7, 30)]
    assert len({r.order for r in reports}) == 1
    assert len({r.tag for r in reports}) == 1


def test_analyze_rejects_bad_input():
    with pytest.raises(ValueError):
        analyze(4)
    with pytest.raises(ValueError):
        analyze(5, alpha=31)


def test_report_dict_serializes_order_as_string():
    rep = analyze(5, checks=("lemma2",))
    data = rep.as_dict()
    assert data["order"] == str(math.factorial(30))
    json.dumps(data)  # fully JSON-serializable
    assert data["checks"][0]["name"] == "lemma2"


def test_verify_q5_all_pass():
    results = verify(5)
    assert [r.name for r in results] == list(CHECK_NAMES)
    assert all(r.passed for r in results)
    assert not any(r.degenerate for r in results)


def test_verify_q3_degenerate_checks():
    results = {r.name: r for r in verify(3, which=("lemma3ii", "lemma3iv", "remark_table"))}
    assert all(r.passed and r.degenerate for r in results.values())


def test_verify_unknown_check_rejected():
    with pytest.raises(ValueError, match="unknown check"):
        verify(5, which=("lemma9",))


def test_verify_lemma4_q5():
    (res,) = verify(5, which=("lemma4",))
    assert res.passed and "primitive" in res.detail


def test_cycle_table_paper_rows():
    rows = dict(cycle_table([7, 25, 27]))
    assert rows[7] == Counter({7: 1})
    assert rows[25] == Counter({1: 1, 4: 1, 5: 4})
    assert rows[27] == Counter({1: 3, 4: 6})
    assert format_cycle_type(rows[25]) == "1^1.4^1.5^4"


def test_cycle_table_rejects_small_or_even_q():
    with pytest.raises(ValueError):
        cycle_table([3])
    with pytest.raises(ValueError):
        cycle_table([8])


def test_plane_cache_returns_identical_object():
    assert plane_for(5) is plane_for(5)


def test_analyze_q13_symmetric_full_order(gens_of):
    # Largest desk-scale case: the hole group at q = 13 is Sym(182).
    rep = analyze(13, checks=())
    assert rep.order == math.factorial(182)
    assert rep.tag == "symmetric"
    assert rep.primitive and rep.parity_ok
