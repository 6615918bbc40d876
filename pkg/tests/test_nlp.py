import math

import numpy as np
import pytest

from smallgon.nlp import maximize

INF = np.array([10.0, 10.0])


def circle():
    return dict(
        fun=lambda x: x[0] + x[1],
        grad=lambda x: np.array([1.0, 1.0]),
        eq=lambda x: x[0] ** 2 + x[1] ** 2 - 1,
        eq_grad=lambda x: 2 * x,
        hess=lambda x: np.zeros((2, 2)),
        eq_hess=lambda x: 2 * np.eye(2),
    )


def test_linear_objective_on_circle():
    res = maximize(x0=[0.9, 0.1], lower=-INF, upper=INF, **circle())
    assert res.converged
    assert res.x == pytest.approx([math.sqrt(0.5)] * 2, abs=1e-12)
    assert res.fun == pytest.approx(math.sqrt(2), abs=1e-14)
    # lambda solves grad f = lambda grad h
    assert res.multiplier == pytest.approx(1 / math.sqrt(2), abs=1e-10)


def test_active_bound():
    res = maximize(x0=[0.1, 0.5], lower=-INF, upper=np.array([0.5, 10.0]), **circle())
    assert res.converged
    assert res.x == pytest.approx([0.5, math.sqrt(0.75)], abs=1e-10)


def test_active_linear_inequality():
    res = maximize(x0=[0.1, 0.5], lower=-INF, upper=INF, A_ub=[[1.0, 0.0]], b_ub=[0.5], **circle())
    assert res.converged
    assert res.x == pytest.approx([0.5, math.sqrt(0.75)], abs=1e-9)
    assert res.ineq_violation <= 1e-10


def test_without_hessians():
    problem = circle()
    problem.pop("hess")
    problem.pop("eq_hess")
    res = maximize(x0=[0.2, 0.3], lower=-INF, upper=INF, gtol=1e-9, **problem)
    assert res.x == pytest.approx([math.sqrt(0.5)] * 2, abs=1e-8)


def test_iteration_budget_reports_failure():
    problem = circle()
    problem.pop("hess")
    problem.pop("eq_hess")
    res = maximize(x0=[0.9, -0.4], lower=-INF, upper=INF, max_iter=2, **problem)
    assert not res.converged
    assert res.iterations <= 2
