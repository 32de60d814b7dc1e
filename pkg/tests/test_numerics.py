import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fsing.config import Config, using_config
from fsing.errors import InputError, NotZeroDimensional
from fsing.frobenius import fedder_fpure, maximal_ideal
from fsing.groebner import Ideal, ideal_member
from fsing.numerics import (
    HKEstimate,
    csig_estimate,
    free_rank,
    fsig_estimate,
    gaussian_binomial,
    hk_estimate,
    hk_length,
    nearest_exponent,
    projective_points,
    rref_subspaces,
    rsig_estimate,
    sdim_rf_estimate,
    socle_basis,
    subspace_count,
)
from fsing.verdict import Status

from conftest import make_ring
from corpus import IDEALS, IDS, load
from oracles import DenseQuotient


def regular(p, n):
    R = make_ring(p, ["x", "y", "z", "w"][:n])
    return R, Ideal(R, [])


# -- Hilbert-Kunz lengths ---------------------------------------------------------


def test_hk_length_regular_box():
    R, I = regular(3, 3)
    assert hk_length(I, maximal_ideal(R), 2) == 729


@pytest.mark.parametrize("p, e", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)])
def test_hk_length_node(p, e):
    R = make_ring(p, "x y")
    q = p**e
    assert hk_length(Ideal(R, ["x*y"]), maximal_ideal(R), e) == 2 * q - 1


def test_hk_length_quadric_regression():
    Q = load("quadric.fsg").ideal("Q")
    R = Q.ring
    assert hk_length(Q, maximal_ideal(R), 1) == 35  # frozen
    gens = list(Q.gens) + [R.var(v) ** 3 for v in R.vars]
    assert DenseQuotient(gens, 4, 3, [3, 3, 3, 3]).length == 35


def test_hk_length_needs_finite_length():
    R, I = regular(3, 2)
    with pytest.raises(NotZeroDimensional):
        hk_length(I, Ideal(R, ["x"]), 1)


def test_hk_estimate_examples():
    R, I = regular(3, 2)
    for e in (1, 2, 3):
        est = hk_estimate(I, maximal_ideal(R), e)
        assert est.value == 1 and est.d == 2
        assert hk_estimate(I, Ideal(R, ["x^2", "y"]), e).value == 2
    node = Ideal(make_ring(2, "x y"), ["x*y"])
    m = maximal_ideal(node.ring)
    ests = [hk_estimate(node, m, e) for e in (1, 2, 3)]
    assert [est.value for est in ests] == [Fraction(2 * q - 1, q) for q in (2, 4, 8)]
    assert ests[0].difference is None
    assert [est.difference for est in ests[1:]] == [Fraction(1, 4), Fraction(1, 8)]


def test_hk_estimate_value_is_exact():
    with pytest.raises(AssertionError):
        HKEstimate(1, 3, 10, 2, Fraction(1, 1))


@pytest.mark.parametrize("seed", range(6))
def test_hk_length_monotone_in_j(seed):
    R = make_ring([2, 3, 5][seed % 3], "x y")
    I = Ideal(R, ["x^2 - y^3"] if seed % 2 else ["x*y"])
    small = Ideal(R, ["x", "y^2"])
    big = maximal_ideal(R)
    for e in (1, 2):
        assert hk_length(I, big, e) <= hk_length(I, small, e)


# -- F-signature and friends --------------------------------------------------------


@pytest.mark.parametrize("p, e", [(2, 1), (2, 3), (3, 1), (3, 2)])
def test_fsig_node(p, e):
    node = Ideal(make_ring(p, "x y"), ["x*y"])
    est = fsig_estimate(node, e)
    assert est.length == 1 and est.value == Fraction(1, p**e)


def test_fsig_regular_and_singh():
    _, I = regular(3, 2)
    assert fsig_estimate(I, 2).value == 1
    assert fsig_estimate(load("singh.fsg").ideal("A"), 1).value == 0
    with pytest.raises(InputError):
        fsig_estimate(I, 0)


def test_fsig_counterexample_regression():
    inp = load("counterexample.fsg")
    est = fsig_estimate(inp.ideal("I_v"), 1)
    assert (est.length, est.d, est.value) == (3, 3, Fraction(1, 9))  # frozen
    assert fsig_estimate(inp.ideal("I_v_w1"), 1).value == 0


def test_sdim_examples():
    for n in (1, 2, 3):
        _, I = regular(3, n)
        assert sdim_rf_estimate(I, 1, 2) == (n, 1)
    node = Ideal(make_ring(3, "x y"), ["x*y"])
    assert sdim_rf_estimate(node, 1, 2) == (0, 1)
    assert sdim_rf_estimate(load("singh.fsg").ideal("A"), 1, 2) == (-1, 0)
    with pytest.raises(InputError):
        sdim_rf_estimate(node, 2, 2)


@pytest.mark.parametrize("a1, a2, p, gap, expected", [
    (1, 9, 3, 1, 2), (1, 27, 3, 1, 3), (1, 1, 5, 2, 0), (2, 9, 3, 1, 1),
    (1, 4, 2, 1, 2), (1, 5, 2, 1, 2), (1, 6, 2, 1, 3), (9, 1, 3, 1, -2),
])
def test_nearest_exponent(a1, a2, p, gap, expected):
    assert nearest_exponent(a1, a2, p, gap) == expected


# -- socles --------------------------------------------------------------------------


def test_socle_examples():
    R = make_ring(3, "x")
    assert [str(r) for r in socle_basis(Ideal(R, []), ["x"]).residues] == ["1"]
    node = Ideal(make_ring(3, "x y"), ["x*y"])
    res = socle_basis(node, ["x - y"]).residues
    assert len(res) == 1 and ideal_member(res[0] - node.ring.var("x"), node + ["x - y"])
    R2 = make_ring(2, "x y")
    assert [str(r) for r in socle_basis(Ideal(R2, []), ["x^2", "y^2"]).residues] == ["x*y"]


def test_socle_basis_invariants():
    R = make_ring(2, "x y z")
    I = Ideal(R, ["x^2", "x*y", "y^2"])
    sop = ["z"]
    soc = socle_basis(I, sop)
    K = I + sop
    assert soc.dim == 2
    for r in soc.residues:
        assert not ideal_member(r, K)
        assert all(ideal_member(v * r, K) for v in R.gens())


def test_socle_needs_artinian_quotient():
    R, I = regular(3, 2)
    with pytest.raises(NotZeroDimensional):
        socle_basis(I, ["x"])


# -- rsig / csig ---------------------------------------------------------------------


@pytest.mark.parametrize("e", [1, 2, 3])
def test_rsig_csig_line(e):
    R = make_ring(3, "x")
    I = Ideal(R, [])
    assert rsig_estimate(I, ["x"], e).value == 1
    assert csig_estimate(I, ["x"], e).value == 1


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_rsig_csig_node(p, e):
    node = Ideal(make_ring(p, "x y"), ["x*y"])
    r = rsig_estimate(node, ["x - y"], e)
    c = csig_estimate(node, ["x - y"], e)
    assert r.value == c.value == Fraction(1, p**e)
    assert r.exhaustive and r.socle_dim == 1


def test_rsig_regular_plane_regression():
    R, I = regular(3, 2)
    for e in (1, 2):
        assert rsig_estimate(I, ["x", "y"], e).value == 1  # frozen


def test_csig_at_most_rsig_with_larger_socle():
    R = make_ring(2, "x y z")
    I = Ideal(R, ["x^2", "x*y", "y^2"])
    for e in (1, 2):
        r = rsig_estimate(I, ["z"], e)
        c = csig_estimate(I, ["z"], e)
        assert r.socle_dim == 2 and r.candidates == 3 and c.candidates == 4
        assert c.value <= r.value


def test_sampling_mode_is_seeded():
    R = make_ring(2, "x y z")
    I = Ideal(R, ["x^2", "x*y", "y^2"])
    runs = []
    for _ in range(2):
        with using_config(Config(seed=7)):
            runs.append(rsig_estimate(I, ["z"], 1, budget=2))
    assert not runs[0].exhaustive and runs[0].candidates == 2
    assert runs[0].value == runs[1].value and runs[0].witness == runs[1].witness
    full = rsig_estimate(I, ["z"], 1)
    assert full.value <= runs[0].value


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_regular_calibration(p, n):
    R, I = regular(p, n)
    m = maximal_ideal(R)
    sop = list(R.vars)
    for e in (1, 2):
        if p**(e * n) > 20000:
            continue
        assert hk_estimate(I, m, e).value == 1
        assert fsig_estimate(I, e).value == 1
        assert rsig_estimate(I, sop, e).value == 1


@pytest.mark.parametrize("name, I", IDEALS, ids=IDS)
def test_a1_matches_fedder(name, I):
    assert (free_rank(I, 1) >= 1) == (fedder_fpure(I).status is Status.TRUE)


# -- enumeration helpers ---------------------------------------------------------------


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.sampled_from([2, 3]))
def test_projective_points_count(s, p):
    pts = list(projective_points(s, p))
    assert len(pts) == (p**s - 1) // (p - 1) == len(set(pts))


@pytest.mark.parametrize("s, p", [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_subspace_enumeration_counts(s, p):
    spaces = list(rref_subspaces(s, p))
    assert len(spaces) == len(set(spaces)) == subspace_count(s, p)
    for k in range(1, s + 1):
        assert sum(1 for V in spaces if len(V) == k) == gaussian_binomial(s, k, p)
    # distinct RREF matrices span distinct subspaces
    spans = set()
    for V in spaces:
        span = frozenset(
            tuple(sum(c * row[i] for c, row in zip(cs, V)) % p for i in range(s))
            for cs in itertools.product(range(p), repeat=len(V))
        )
        spans.add(span)
    assert len(spans) == len(spaces)
