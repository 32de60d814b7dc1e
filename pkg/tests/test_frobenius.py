import itertools
from fractions import Fraction

import pytest

from fsing.errors import CInIdeal, IdealNotInMaximal, InputError, NegativeT
from fsing.frobenius import (
    compatibly_fpure_along,
    fedder_fpure,
    frobenius_colon,
    in_bracket,
    mod_bracket,
    mul_mod_bracket,
    pow_mod_bracket,
    sfr_certificate,
    sharp_exponent,
    sharply_fpure_pair,
    splitting_ideal,
    verify_certificate,
)
from fsing.groebner import Ideal, bracket_power, ideal_contains, ideal_equal, vs_length
from fsing.verdict import Status

from conftest import make_ring
from corpus import IDEALS, IDS, load
from oracles import rank_mod_p


# -- Fedder -----------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3, 5])
def test_regular_ring_is_fpure(p):
    v = fedder_fpure(Ideal(make_ring(p, "x y z"), []))
    assert v.status is Status.TRUE and v.certificate["alpha"] == "1"


def test_node_is_fpure():
    R = make_ring(2, "x y")
    v = fedder_fpure(Ideal(R, ["x*y"]))
    assert v.status is Status.TRUE
    assert v.certificate["alpha"] == "x*y"


def test_singh_ring_not_fpure():
    v = fedder_fpure(load("singh.fsg").ideal("A"))
    assert v.status is Status.FALSE
    assert v.certificate["colon_generators"]
    assert v.log and v.log[0]["contained"]


def test_singh_quotient_fpure():
    assert fedder_fpure(load("singh_quotient.fsg").ideal("At")).status is Status.TRUE
    assert fedder_fpure(load("singh.fsg").ideal("A_t")).status is Status.TRUE


def test_cusp_not_fpure():
    R = make_ring(2, "x y")
    assert fedder_fpure(Ideal(R, ["x^2 - y^3"])).status is Status.FALSE


def test_ideal_must_lie_in_maximal():
    R = make_ring(3, "x y")
    with pytest.raises(IdealNotInMaximal):
        fedder_fpure(Ideal(R, ["x - 1"]))


# -- compatible F-purity ----------------------------------------------------


def test_compat_regular_along_variable():
    R = make_ring(3, "x y")
    v = compatibly_fpure_along(Ideal(R, []), Ideal(R, ["x"]))
    assert v.status is Status.TRUE
    assert v.certificate["alpha"] == "x^2"
    assert compatibly_fpure_along(Ideal(R, []), Ideal(R, [])).status is Status.TRUE


def test_compat_quotient():
    inp = load("compat_quotient.fsg")
    T, a = inp.ideal("T"), inp.ideal("a")
    v = compatibly_fpure_along(T, a)
    assert v.status is Status.TRUE
    assert verify_certificate(T, v, a=a)


def test_compat_quotient_perturbed_fails():
    inp = load("compat_quotient.fsg")
    v = compatibly_fpure_along(inp.ideal("T"), inp.ideal("a_w1"))
    assert v.status is Status.FALSE


# -- sharp F-purity -----------------------------------------------------------


@pytest.mark.parametrize("t", [Fraction(0), Fraction(1, 2), Fraction(1)])
def test_sharp_regular_true_at_level_one(t):
    R = make_ring(3, "x y")
    v = sharply_fpure_pair(Ideal(R, []), R.var("x"), t, 3)
    assert v.status is Status.TRUE and v.certificate["e"] == 1
    assert verify_certificate(Ideal(R, []), v)


def test_sharp_t2_undetermined():
    R = make_ring(3, "x y")
    v = sharply_fpure_pair(Ideal(R, []), R.var("x"), 2, 3)
    assert v.status is Status.UNDETERMINED
    assert [r["e"] for r in v.log] == [1, 2, 3]
    assert all(r["contained"] for r in v.log)
    assert [r["exponent"] for r in v.log] == [4, 16, 52]


def test_sharp_errors():
    R = make_ring(3, "x y")
    with pytest.raises(NegativeT):
        sharply_fpure_pair(Ideal(R, []), R.var("x"), Fraction(-1, 2), 1)
    with pytest.raises(InputError):
        sharply_fpure_pair(Ideal(R, []), R.one(), 1, 1)
    with pytest.raises(InputError):
        sharply_fpure_pair(Ideal(R, []), R.var("x"), 1, 0)


@pytest.mark.parametrize("t, q, expected", [
    (Fraction(0), 3, 0), (Fraction(1, 2), 3, 1), (Fraction(1, 2), 9, 4),
    (Fraction(1, 3), 9, 3), (Fraction(2, 3), 27, 18), (Fraction(5, 7), 9, 6),
])
def test_sharp_exponent_is_exact_ceiling(t, q, expected):
    assert sharp_exponent(t, q) == expected


# -- strong F-regularity ------------------------------------------------------


def test_sfr_regular_c_one():
    R = make_ring(3, "x y")
    v = sfr_certificate(Ideal(R, []), R.one(), 1)
    assert v.status is Status.TRUE and v.certificate["e"] == 1


def test_sfr_quadric_cone():
    inp = load("quadric.fsg")
    Q, x = inp.ideal("Q"), inp.elem("x")
    v = sfr_certificate(Q, x, 1)
    assert v.status is Status.TRUE and v.certificate["e"] == 1
    R = Q.ring
    witness = mod_bracket(x * R.parse(v.certificate["alpha"]), 3)
    hand = R.parse("x^2*y*u*v + x*y^2*u^2")
    assert any(witness == hand.scale(c) for c in (1, 2))


def test_sfr_singh_quotient_first_level():
    inp = load("singh_quotient.fsg")
    I = inp.ideal("At")
    v = sfr_certificate(I, inp.elem("a"), 4)
    assert v.status is Status.TRUE
    assert v.certificate["e"] == 3  # frozen regression value
    assert [r["contained"] for r in v.log] == [True, True, False]
    assert verify_certificate(I, v, c=inp.elem("a"))


def test_sfr_not_fpure_is_false():
    inp = load("singh.fsg")
    v = sfr_certificate(inp.ideal("A"), inp.ring.var("a"), 2)
    assert v.status is Status.FALSE and v.certificate["reason"] == "not F-pure"


def test_sfr_node_undetermined():
    R = make_ring(3, "x y")
    v = sfr_certificate(Ideal(R, ["x*y"]), R.parse("x + y"), 2)
    assert v.status is Status.UNDETERMINED and len(v.log) == 2


def test_sfr_rejects_c_in_ideal():
    R = make_ring(3, "x y")
    with pytest.raises(CInIdeal):
        sfr_certificate(Ideal(R, ["x*y"]), R.parse("x^2*y"), 1)
    with pytest.raises(CInIdeal):
        sfr_certificate(Ideal(R, ["x*y"]), R.zero(), 1)
    with pytest.raises(InputError):
        sfr_certificate(Ideal(R, ["x*y"]), R.var("x"), 1, check_c=True)


# -- splitting ideals ---------------------------------------------------------


def test_splitting_ideal_regular():
    R = make_ring(3, "x y")
    S = splitting_ideal(Ideal(R, []), 1)
    assert ideal_equal(S, Ideal(R, ["x^3", "y^3"])) and vs_length(S) == 9


@pytest.mark.parametrize("p, e", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_splitting_ideal_node(p, e):
    R = make_ring(p, "x y")
    S = splitting_ideal(Ideal(R, ["x*y"]), e)
    assert ideal_equal(S, Ideal(R, ["x", "y"]))


def test_splitting_ideal_singh_is_unit():
    S = splitting_ideal(load("singh.fsg").ideal("A"), 1)
    assert S.is_unit()


def test_splitting_ideal_counterexample_matches_linear_algebra():
    """a_1 of R/(v) recomputed as the rank of multiplication by the colon on S/n^[3]."""
    I = load("counterexample.fsg").ideal("I_v")
    S = splitting_ideal(I, 1)
    C = frobenius_colon(I, 3)
    box = list(itertools.product(range(3), repeat=6))
    index = {e: i for i, e in enumerate(box)}
    rows = []
    for g in C.gens:
        terms = [(m.exponents, c) for c, m in g.terms]
        for mono in box:
            row = [0] * len(box)
            for e, c in terms:
                i = index.get(tuple(a + b for a, b in zip(e, mono)))
                if i is not None:
                    row[i] = (row[i] + c) % 3
            if any(row):
                rows.append(row)
    assert rank_mod_p(rows, 3) == vs_length(S) == 3


# -- modular helpers -----------------------------------------------------------


def test_bracket_helpers():
    R = make_ring(3, "x y")
    f = R.parse("x^2*y + x^3 + y^4 + 1")
    assert mod_bracket(f, 3) == R.parse("x^2*y + 1")
    assert in_bracket(R.parse("x^3 + y^5"), 3) and not in_bracket(f, 3)
    g = R.parse("x + y")
    assert mul_mod_bracket(f, g, 3) == mod_bracket(f * g, 3)
    assert pow_mod_bracket(g, 4, 3) == mod_bracket(g**4, 3)


# -- invariants over the fixture corpus ---------------------------------------


@pytest.mark.parametrize("name, I", IDEALS, ids=IDS)
def test_fedder_matches_splitting_ideal(name, I):
    fp = fedder_fpure(I)
    assert (fp.status is Status.TRUE) == (not splitting_ideal(I, 1).is_unit())
    if fp.status is Status.TRUE:
        assert verify_certificate(I, fp)
        sharp = sharply_fpure_pair(I, I.ring.var(I.ring.vars[0]), 0, 1)
        assert sharp.status is Status.TRUE
        assert verify_certificate(I, sharp)


def test_compat_implies_fpure_on_corpus():
    inp = load("compat_quotient.fsg")
    T, a = inp.ideal("T"), inp.ideal("a")
    assert compatibly_fpure_along(T, a).status is Status.TRUE
    assert fedder_fpure(T).status is Status.TRUE
    assert fedder_fpure(T + a).status is Status.TRUE


def test_sfr_true_implies_nonunit_splitting_ideal():
    inp = load("quadric.fsg")
    Q = inp.ideal("Q")
    v = sfr_certificate(Q, inp.elem("x"), 2)
    assert v.status is Status.TRUE
    assert not splitting_ideal(Q, v.certificate["e"]).is_unit()
    assert verify_certificate(Q, v, c=inp.elem("x"))


def test_tampered_certificate_fails_verification():
    R = make_ring(3, "x y")
    I = Ideal(R, ["x*y"])
    v = fedder_fpure(I)
    v.certificate["alpha"] = "x^3*y^3"
    assert not verify_certificate(I, v)
    v.certificate["alpha"] = "x"
    assert not verify_certificate(I, v)


def test_frobenius_colon_contains_bracket_power():
    R = make_ring(3, "x y z")
    I = Ideal(R, ["x^2 - y*z"])
    C = frobenius_colon(I, 3)
    assert ideal_contains(C, bracket_power(I, 3))
    f = I.gens[0]
    assert ideal_equal(C, Ideal(R, [f**2]))  # (f^p : f) = (f^(p-1))
    assert frobenius_colon(I, 3) is C
