"""Schubert calculus: Pieri, Littlewood-Richardson, duality, degrees."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowkit.grassmann import (
    ContextMismatch,
    GradingError,
    GrassmannContext,
    SchubertElement,
    duality_pair,
    giambelli_product,
    integrate,
    lr_coefficient,
    multiply,
    pieri,
    plucker_degree,
)
from chowkit.linexpr import LinExpr
from chowkit.partitions import complement_in_box, partitions_in_box, weight

G24 = GrassmannContext(2, 4)
G25 = GrassmannContext(2, 5)
G35 = GrassmannContext(3, 5)


def sig(ctx, *lam):
    return SchubertElement.sigma(ctx, lam)


def test_context_basics():
    assert G35.rows == 3 and G35.cols == 2
    assert G35.dimension == 6
    assert G35.top_partition == (2, 2, 2)
    assert G24.dimension == 4


def test_pieri_square_of_hyperplane_gr24():
    e = pieri(sig(G24, 1), 1)
    assert e.terms == {(2,): 1, (1, 1): 1}


def test_hyperplane_cube_gr35():
    e = sig(G35, 1) * sig(G35, 1) * sig(G35, 1)
    assert e.terms == {(1, 1, 1): 1, (2, 1): 2}


def test_hyperplane_powers_integrate_to_degree():
    # deg Gr(2,4) = 2, deg Gr(2,5) = 5, deg Gr(3,5) = 5
    for ctx, expected in [(G24, 2), (G25, 5), (G35, 5)]:
        e = sig(ctx, 1)
        acc = e
        for _ in range(ctx.dimension - 1):
            acc = acc * e
        assert integrate(acc) == expected


def test_lr_coefficient_examples():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2, 1), (2, 1), (2, 2, 1, 1)) == 1
    assert lr_coefficient((2,), (1, 1), (2, 2)) == 0
    assert lr_coefficient((2,), (1, 1), (3, 1)) == 1
    assert lr_coefficient((2,), (1, 1), (2, 1, 1)) == 1


def test_duality_pairs_gr35():
    # s[2,2,2] is the point class; complementary pairs integrate to 1
    assert duality_pair((2, 2), (2,), G35) == 1
    assert duality_pair((2, 2, 2), (), G35) == 1
    assert duality_pair((1,), (2, 2, 1), G35) == 1
    assert duality_pair((1, 1), (2, 2), G35) == 0
    assert duality_pair((2, 1), (2, 1), G35) == 1
    assert duality_pair((1, 1, 1), (2, 1), G35) == 0


def test_duality_requires_complementary_weight():
    with pytest.raises(GradingError):
        duality_pair((1,), (1,), G35)


def test_context_mismatch_rejected():
    with pytest.raises(ContextMismatch):
        multiply(sig(G24, 1), sig(G35, 1))


def test_plucker_degree_examples():
    # the two generators of codimension 3 on Gr(3,5)
    assert plucker_degree(sig(G35, 1, 1, 1), 3) == 1
    assert plucker_degree(sig(G35, 2, 1), 3) == 2
    # line counts on Gr(2,4)
    assert plucker_degree(sig(G24, 2), 2) == 1
    assert plucker_degree(sig(G24, 1, 1), 2) == 1
    # headline combinations
    e = sig(G24, 2).scale(60) + sig(G24, 1, 1).scale(72)
    assert plucker_degree(e, 2) == 132
    f = sig(G35, 1, 1, 1).scale(120) + sig(G35, 2, 1).scale(16)
    assert plucker_degree(f, 3) == 152


def test_plucker_degree_rejects_mixed_codimension():
    e = sig(G35, 1) + sig(G35, 2)
    with pytest.raises(GradingError):
        plucker_degree(e, 3)


def test_symbolic_coefficients_stay_linear():
    a = LinExpr.unknown("a")
    b = LinExpr.unknown("b")
    e = sig(G35, 1, 1, 1).scale(a) + sig(G35, 2, 1).scale(b)
    prod = multiply(e, sig(G35, 1) * sig(G35, 1) * sig(G35, 1))
    top = prod.terms[(2, 2, 2)]
    assert top.coeffs == {"a": Fraction(1), "b": Fraction(2)}


ctxs = st.sampled_from([G24, G25, G35, GrassmannContext(2, 6)])


def random_partition(ctx, rng):
    opts = list(partitions_in_box(ctx.rows, ctx.cols))
    return rng.choice(opts)


@settings(max_examples=60, deadline=None)
@given(ctxs, st.integers(0, 10 ** 9))
def test_multiply_commutes_and_associates(ctx, seed):
    rng = random.Random(seed)
    a = sig(ctx, *random_partition(ctx, rng))
    b = sig(ctx, *random_partition(ctx, rng))
    c = sig(ctx, *random_partition(ctx, rng))
    assert multiply(a, b).terms == multiply(b, a).terms
    assert multiply(multiply(a, b), c).terms == multiply(a, multiply(b, c)).terms


@settings(max_examples=60, deadline=None)
@given(ctxs, st.integers(1, 4), st.integers(0, 10 ** 9))
def test_pieri_agrees_with_multiply(ctx, a, seed):
    rng = random.Random(seed)
    lam = random_partition(ctx, rng)
    if a > ctx.cols:
        a = ctx.cols
    via_pieri = pieri(sig(ctx, *lam), a)
    via_lr = multiply(sig(ctx, *lam), sig(ctx, a))
    assert via_pieri.terms == via_lr.terms


@settings(max_examples=60, deadline=None)
@given(ctxs, st.integers(0, 10 ** 9))
def test_giambelli_oracle_matches_lr_multiply(ctx, seed):
    # determinantal expansion through Pieri only, checked against LR
    rng = random.Random(seed)
    lam = random_partition(ctx, rng)
    mu = random_partition(ctx, rng)
    assert giambelli_product(lam, mu, ctx).terms == multiply(
        sig(ctx, *lam), sig(ctx, *mu)
    ).terms


@settings(max_examples=60, deadline=None)
@given(ctxs, st.integers(0, 10 ** 9))
def test_integral_of_product_matches_duality(ctx, seed):
    rng = random.Random(seed)
    lam = random_partition(ctx, rng)
    mu = complement_in_box(lam, ctx.rows, ctx.cols)
    assert integrate(multiply(sig(ctx, *lam), sig(ctx, *mu))) == duality_pair(
        lam, mu, ctx
    )
    assert duality_pair(lam, mu, ctx) == 1


def test_duality_orthogonality_full_scan():
    # across all of Gr(3,5): <lam, mu> = 1 iff mu is the box complement
    for lam, mu in itertools.product(partitions_in_box(3, 2), repeat=2):
        if weight(lam) + weight(mu) != 6:
            continue
        want = 1 if mu == complement_in_box(lam, 3, 2) else 0
        assert duality_pair(lam, mu, G35) == want
