import math

import numpy as np
import pytest

from tribos.oracle import (QuadratureBudgetError, check_transforms, convolution_balance,
                           cosine_transform, coth_log_kernel, coth_transform_analytic,
                           factorization_check, m_log_kernel, m_transform_analytic,
                           odd_extension_check)
from tribos.specfun import Accuracy
from tribos.symbols import eval_g


def test_cosine_transform_textbook():
    for s in (0.0, 0.5, 1.0, 3.0):
        val = cosine_transform(lambda x: math.exp(-x), s)
        assert val == pytest.approx(1.0 / (1.0 + s * s), abs=1e-10)


def test_cosine_transform_kernels_match_symbols():
    for s in (0.25, 0.5, 1.0, 2.0, 5.0, 10.0):
        num = cosine_transform(m_log_kernel, s)
        assert abs(num - m_transform_analytic(s)) <= 1e-8
        num = cosine_transform(coth_log_kernel, s)
        assert abs(num - coth_transform_analytic(s)) <= 1e-8


def test_cosine_transform_frozen_values():
    # 25-digit references at s = 1
    assert cosine_transform(m_log_kernel, 1.0) == pytest.approx(
        0.6859346449244211699866724, abs=1e-12)
    assert cosine_transform(coth_log_kernel, 1.0) == pytest.approx(
        1.440659519977514592658933, abs=1e-12)


def test_cosine_transform_budget_error():
    # an oscillatory, slowly varying integrand cannot satisfy an extreme
    # tolerance within a two-panel budget
    with pytest.raises(QuadratureBudgetError):
        cosine_transform(lambda x: math.exp(-x) * math.sin(40.0 * x) ** 2, 37.7,
                         acc=Accuracy(abs_tol=1e-13, rel_tol=1e-13), budget=2)


def test_cosine_transform_validation():
    with pytest.raises(ValueError):
        cosine_transform(lambda x: math.exp(-x), 1.0, tail_cut=0.5)


def test_check_transforms_table():
    rows = check_transforms([0.5, 2.0])
    assert len(rows) == 4
    for name, check in rows:
        assert name in ("contact", "regularization")
        assert check.abs_err == abs(check.numeric - check.analytic)
        assert check.abs_err <= 1e-8


def test_factorization_identity_origin():
    plus, minus = factorization_check(0.0, 0.0)
    assert plus == 0.0 and minus == 0.0


def test_factorization_identity_random():
    rng = np.random.default_rng(67)
    for _ in range(1000):
        x, y = rng.uniform(-5.0, 5.0, size=2)
        plus, minus = factorization_check(float(x), float(y))
        scale = max(1.0, math.cosh(x + y) * math.cosh(x - y))
        assert plus <= 1e-10 * scale
        assert minus <= 1e-10 * scale
        # tighter relative form
        assert plus <= 1e-12 * 4.0 * (math.cosh(x + y) + 1.0) * (math.cosh(x - y) + 1.0)


def test_factorization_parity():
    plus_a, minus_a = factorization_check(1.0, 1.0)
    plus_b, minus_b = factorization_check(1.0, -1.0)
    assert plus_a == minus_b
    assert minus_a == plus_b


def test_odd_extension_half_vs_full_line(s0):
    for x in (0.5, 1.0, 2.0):
        assert odd_extension_check(lambda y: math.sin(s0 * y), x) <= 1e-8
    assert odd_extension_check(lambda y: 0.0, 1.0) == 0.0
    with pytest.raises(ValueError):
        odd_extension_check(lambda y: 0.0, -1.0)


def test_balance_vanishes_at_s0(s0):
    for x in (0.5, 1.0, 2.0):
        assert abs(convolution_balance(s0, x)) <= 1e-6


def test_balance_reproduces_symbol_off_s0(s0):
    # the convolution acts diagonally on sinusoids: balance = g(s) sin(s x)
    for s in (0.5, 2.0, 3.5):
        for x in (0.7, 1.3):
            assert convolution_balance(s, x) == pytest.approx(
                eval_g(s) * math.sin(s * x), abs=1e-6)


def test_kernels_positive_and_decaying():
    xs = np.geomspace(0.01, 40.0, 50)
    mv = [m_log_kernel(float(x)) for x in xs]
    cv = [coth_log_kernel(float(x)) for x in xs]
    assert all(v > 0.0 for v in mv)
    assert all(v > 0.0 for v in cv)
    assert all(a > b for a, b in zip(mv, mv[1:]))
    assert all(a > b for a, b in zip(cv, cv[1:]))
