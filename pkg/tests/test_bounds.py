import math
from fractions import Fraction

import pytest

from indmorse.bounds import (
    comparison_table,
    corollary_bound,
    format_table,
    lucas_product_bound,
    planar_lower_bound,
    ramanujan_threshold,
)
from indmorse.errors import PreconditionError


def test_corollary_examples():
    assert corollary_bound(2).exact == 7 * 18 == 126
    assert corollary_bound(3).exact == 7 * 18 * 47 == 5922
    assert corollary_bound(4).exact == 5922 * 199 == 1178478
    phi = (1 + math.sqrt(5)) / 2
    assert corollary_bound(2).indicative == pytest.approx(phi ** 4, rel=1e-12)
    assert "indicative" in corollary_bound(2).note
    with pytest.raises(PreconditionError):
        corollary_bound(1)


def test_planar_examples():
    p = planar_lower_bound(1600)
    assert p.exponent == 0 and p.value == 1.0 and p.vacuous
    p = planar_lower_bound(2500)
    assert p.exponent == Fraction(500, 36) and not p.vacuous
    assert p.value == pytest.approx(2 ** (500 / 36), rel=1e-12)
    p = planar_lower_bound(100)
    assert p.vacuous and p.value < 1
    assert not planar_lower_bound(1601).vacuous
    with pytest.raises(PreconditionError):
        planar_lower_bound(0)


def test_planar_monotone_past_400():
    vals = [planar_lower_bound(m).value for m in range(401, 3000)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_threshold_examples():
    assert ramanujan_threshold(2 ** 30, 4) == pytest.approx(5 * 2 ** 0.045, rel=1e-12)
    assert ramanujan_threshold(2 ** 30, 4) == pytest.approx(5.158, abs=5e-4)
    assert ramanujan_threshold(2, 2) == pytest.approx(2 ** 0.003 / 3, rel=1e-12)
    n = 12345
    assert ramanujan_threshold(n, 2) == pytest.approx(math.log2(n) / 3 * n ** 0.003, rel=1e-12)
    with pytest.raises(PreconditionError):
        ramanujan_threshold(10, 1)


def test_comparison_table():
    rows = comparison_table(20)
    assert rows[0] == (0, 1, 1) and rows[1] == (1, 7, 4) and rows[2] == (2, 126, 16)
    assert all(exact >= ref for _, exact, ref in rows)
    with pytest.raises(PreconditionError):
        comparison_table(21)
    text = format_table(comparison_table(3))
    assert text.splitlines()[-1].split() == ["3", "5922", "64"]


def test_product_bound_small_k():
    assert lucas_product_bound(0) == lucas_product_bound(-1) == 1
    assert lucas_product_bound(1) == 7
