import random
from math import comb

import mpmath
import pytest
from hypothesis import given, strategies as st

from lislc.counting import ell_seq, gen_poly, inv_seq
from lislc.logconcave import (
    Verdict,
    certify_infinite_lc,
    is_log_concave,
    is_r0_factor_lc,
    l_operator,
    q_log_convex_step,
    r0_holds,
    real_root_counts,
    real_rooted,
)
from lislc.polynomial import PolySeq

from oracles import count_real_roots_numeric

R0_FLOAT = (3 + 5 ** 0.5) / 2
nonneg_seqs = st.lists(st.integers(min_value=0, max_value=10 ** 6), min_size=1, max_size=12)


def test_log_concave_examples():
    assert is_log_concave((1, 4, 1))
    res = is_log_concave((1, 2, 1, 2))
    assert not res and res.index == 3
    assert is_log_concave((7,))


def test_internal_zero_is_reported():
    res = is_log_concave((1, 0, 1))
    assert not res and res.index == 2 and res.internal_zero
    assert is_log_concave((0, 0, 1, 2, 1, 0))


def test_l_operator_examples():
    assert l_operator((1, 4, 1)) == (1, 15, 1)
    assert l_operator((0, 0, 0)) == (0, 0, 0)
    assert l_operator((1, 5, 3, 1)) == (1, 22, 4, 1)


@given(nonneg_seqs)
def test_log_concave_iff_l_nonnegative(a):
    assert bool(is_log_concave(a)) == all(b >= 0 for b in l_operator(a))


def test_r0_examples():
    assert is_r0_factor_lc((1, 4, 1))
    assert is_r0_factor_lc((1, 2, 1))
    assert not is_r0_factor_lc((1, 1, 1))
    # c = 0 passes only when the product is 0.
    assert r0_holds(0, 0)
    assert not r0_holds(3, 2)


def _near_boundary_triples(rng, count):
    # (1, a, b) with b on either side of a^2 / r0: as close to equality as integers get.
    out = []
    with mpmath.workdps(80):
        r0 = (3 + mpmath.sqrt(5)) / 2
        for _ in range(count):
            a = rng.randrange(1, 10 ** 12)
            b = int(mpmath.floor(mpmath.mpf(a) ** 2 / r0))
            out.extend([(1, a, b), (1, a, b + 1)])
    return out


def _float_r0(triple, prec):
    x, a, y = triple
    with mpmath.workprec(prec):
        r0 = (3 + mpmath.sqrt(5)) / 2
        return mpmath.mpf(a) ** 2 >= r0 * mpmath.mpf(x) * mpmath.mpf(y)


def test_r0_exact_agrees_with_53_bit_floats():
    rng = random.Random(20161)
    for _ in range(10_000):
        t = tuple(rng.randrange(0, 1000) for _ in range(3))
        x, a, y = t
        assert r0_holds(a * a, x * y) == (a * a >= R0_FLOAT * x * y), t


def test_r0_exact_agrees_with_200_bit_floats():
    rng = random.Random(7)
    triples = [tuple(rng.randrange(0, 10 ** 15) for _ in range(3)) for _ in range(5_000)]
    triples += _near_boundary_triples(rng, 2_500)
    for x, a, y in triples:
        assert r0_holds(a * a, x * y) == _float_r0((x, a, y), 200), (x, a, y)


def test_certificate_examples():
    rep = certify_infinite_lc((1, 5, 3, 1))
    assert rep.verdict is Verdict.FAILED and rep.iteration == 2 and rep.index == 3
    rep = certify_infinite_lc((1, 4, 1))
    assert rep.verdict is Verdict.CERTIFIED and rep.iteration == 0


def test_certificate_inconclusive_when_budget_too_small():
    a = ell_seq(20).values
    assert certify_infinite_lc(a, 0).verdict is Verdict.INCONCLUSIVE
    assert certify_infinite_lc(a, 0).iterations == 0


@pytest.mark.parametrize("n", [8, 13, 25, 40])
def test_certified_is_stable_and_r0_persists(n):
    a = ell_seq(n).values
    rep = certify_infinite_lc(a)
    assert rep.ok
    for budget in (rep.iteration, rep.iteration + 3, 100):
        assert certify_infinite_lc(a, budget).verdict is Verdict.CERTIFIED
    cur = a
    for _ in range(rep.iteration):
        cur = l_operator(cur)
    for _ in range(3):
        assert is_r0_factor_lc(cur)
        cur = l_operator(cur)


@given(st.lists(st.integers(min_value=0, max_value=10 ** 4), min_size=1, max_size=8))
def test_r0_factor_preserved_by_l(a):
    if is_r0_factor_lc(a):
        assert is_r0_factor_lc(l_operator(a))


def test_binomial_rows_are_certified():
    for n in range(1, 30):
        assert certify_infinite_lc([comb(n, k) for k in range(n + 1)]).ok


def test_q_log_convex_examples():
    ell = [None] + [gen_poly(ell_seq(n)) for n in range(1, 13)]
    for n in range(2, 12):
        assert q_log_convex_step(ell[n - 1], ell[n], ell[n + 1])
    inv = [gen_poly(inv_seq(n)) for n in (3, 4, 5)]
    res = q_log_convex_step(*inv)
    assert not res and res.index is not None
    mono = PolySeq((0, 0, 7))
    assert q_log_convex_step(mono, mono, mono)


@given(st.lists(st.lists(st.integers(0, 50), min_size=1, max_size=6), min_size=3, max_size=3))
def test_q_log_convex_shift_invariant(polys):
    f0, f1, f2 = (PolySeq(tuple(p)) for p in polys)
    assert bool(q_log_convex_step(f0, f1, f2)) == bool(q_log_convex_step(f0.shift(), f1.shift(), f2.shift()))


def test_real_rooted_examples():
    assert not real_rooted(gen_poly(ell_seq(12)))
    assert not real_rooted(gen_poly(inv_seq(4)))
    assert real_rooted(PolySeq(tuple(comb(5, k) for k in range(6))))
    with pytest.raises(ValueError):
        real_rooted(PolySeq(()))


def test_ell_polynomials_before_twelve_are_real_rooted():
    for n in range(1, 12):
        assert real_rooted(gen_poly(ell_seq(n))), n


def _poly_from_factors(linear, quadratic):
    p = PolySeq((1,))
    for r in linear:
        p = p * PolySeq((-r, 1))
    for a, b in quadratic:
        p = p * PolySeq((b, a, 1))
    return p


def test_real_rooted_agrees_with_companion_matrix():
    rng = random.Random(3)
    for _ in range(300):
        deg = rng.randrange(1, 11)
        n_quad = rng.randrange(0, deg // 2 + 1)
        roots = rng.sample(range(-30, 31), deg - 2 * n_quad)
        quads = []
        for _ in range(n_quad):
            a = rng.randrange(-5, 6)
            quads.append((a, a * a // 4 + rng.randrange(1, 10)))  # negative discriminant
        p = _poly_from_factors(roots, quads)
        if p.coefficients[0] == 0:
            continue
        real, total = real_root_counts(p)
        assert real == len(roots)
        assert real_rooted(p) == (n_quad == 0)
        if n_quad == 0:
            assert count_real_roots_numeric(p.coefficients) == deg


def test_real_rooted_with_repeated_roots():
    p = _poly_from_factors([2, 2, 2, -1], [])
    assert real_root_counts(p) == (2, 2)
    assert real_rooted(p)
