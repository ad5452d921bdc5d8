import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coblegeom.errors import CoincidentPoints, SingularPoint
from coblegeom.polynomials import (
    Hypersurface,
    SparsePolynomial,
    evaluate,
    gradient_map,
    hessian_rank_at,
    interpolate_hypersurface,
    monomial_count,
    monomials,
    restrict_to_line,
)
from coblegeom.projective import ProjectivePoint


def x(n, i):
    return SparsePolynomial.variable(n, i)


def random_form(rng, num_vars, degree, terms=6):
    basis = monomials(num_vars, degree)
    return SparsePolynomial(num_vars, {rng.choice(basis): rng.randint(-5, 5) for _ in range(terms)})


@st.composite
def forms(draw):
    n = draw(st.integers(2, 4))
    d = draw(st.integers(1, 4))
    f = random_form(random.Random(draw(st.integers(0, 10**6))), n, d)
    return f if not f.is_zero() else x(n, 0) ** d


def test_graded_lex_order():
    assert monomials(3, 2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert monomial_count(5, 3) == 35 == len(monomials(5, 3))
    assert monomial_count(5, 4) == 70


def test_evaluate_cube():
    assert evaluate(x(5, 0) ** 3, [1, 0, 0, 0, 0]) == 1


@settings(max_examples=50)
@given(forms(), st.fractions(min_value=-3, max_value=3, max_denominator=5).filter(bool))
def test_homogeneous_scaling(f, lam):
    rng = random.Random(7)
    p = [rng.randint(-4, 4) for _ in range(f.num_vars)]
    assert evaluate(f, [lam * c for c in p]) == lam**f.degree * evaluate(f, p)


@settings(max_examples=50)
@given(forms())
def test_euler_identity(f):
    n = f.num_vars
    lhs = SparsePolynomial(n)
    for i, g in enumerate(f.gradient()):
        lhs = lhs + x(n, i) * g
    assert lhs == f * f.degree


def test_gradient_against_finite_differences():
    rng = random.Random(3)
    f = random_form(rng, 3, 3)
    p = [Fraction(1), Fraction(2), Fraction(-1)]
    h = Fraction(1, 10**6)
    for i, g in enumerate(f.gradient()):
        up, down = list(p), list(p)
        up[i] += h
        down[i] -= h
        approx = (evaluate(f, up) - evaluate(f, down)) / (2 * h)
        assert abs(approx - evaluate(g, p)) < Fraction(1, 10**6)


def test_gradient_map_of_the_standard_quadric():
    q = Hypersurface.of(sum((x(4, i) ** 2 for i in range(4)), SparsePolynomial(4)))
    p = ProjectivePoint([1, -2, 3, 5])
    assert gradient_map(q, p) == p


def test_gradient_map_rejects_singular_points():
    double_line = Hypersurface.of(x(3, 0) ** 2)
    with pytest.raises(SingularPoint):
        gradient_map(double_line, [0, 1, 0])


def test_hessian_ranks():
    quadric = Hypersurface.of(sum((x(5, i) ** 2 for i in range(5)), SparsePolynomial(5)))
    assert hessian_rank_at(quadric, [1, 2, 3, 4, 5]) == 5
    assert hessian_rank_at(Hypersurface.of(x(5, 0) ** 3), [0, 1, 0, 0, 0]) == 0


def test_restrict_linear_form():
    f = SparsePolynomial(3, {(1, 0, 0): 2, (0, 1, 0): -1, (0, 0, 1): 3})
    p, q = [1, 1, 1], [2, 0, 1]
    line = restrict_to_line(f, p, q)
    assert line == SparsePolynomial(2, {(1, 0): evaluate(f, p), (0, 1): evaluate(f, q)})


def test_restrict_quadric_through_both_points():
    f = x(3, 0) * x(3, 1) - x(3, 2) ** 2  # contains (1:0:0) and (0:1:0)
    line = restrict_to_line(f, [1, 0, 0], [0, 1, 0])
    assert all(e[0] >= 1 and e[1] >= 1 for e in line.terms)
    with pytest.raises(CoincidentPoints):
        restrict_to_line(f, [1, 2, 3], [2, 4, 6])


def test_interpolate_line_through_two_points():
    basis = interpolate_hypersurface([[1, 0, 1], [0, 1, 1]], 1)
    assert len(basis) == 1
    line = basis[0]
    assert evaluate(line, [1, 0, 1]) == 0 and evaluate(line, [0, 1, 1]) == 0
    assert line.sorted_terms()[0][1] == 1


def test_interpolate_conic_space():
    pts = [[1, t, t * t] for t in range(5)]
    (conic,) = interpolate_hypersurface(pts, 2)
    assert evaluate(conic, [1, 7, 49]) == 0
    assert interpolate_hypersurface(pts + [[1, 1, 0]], 2) == []
