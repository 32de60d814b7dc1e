"""Fedder-type splitting tests for ``R = S/I`` at the origin of ``S = F_p[vars]``.

Every test reduces to the same question: does some element of the
Frobenius colon ``(I^[q] : I)``, possibly premultiplied, survive modulo the
bracket power ``n^[q]`` of the maximal ideal?  ``n^[q]`` is the monomial
ideal of monomials with some exponent ``>= q``, so reducing modulo it is a
term filter.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction

from .config import current_config
from .errors import CInIdeal, IdealNotInMaximal, InputError, NegativeT
from .groebner import Ideal, bracket_power, colon, krull_dim
from .polyring import Polynomial, RingSpec
from .verdict import Status, Verdict

_FIELD = 20
_GUARD_BIT = 1 << (_FIELD - 1)


def maximal_ideal(ring: RingSpec) -> Ideal:
    return Ideal.maximal(ring)


def _below_q_test(ring: RingSpec, q: int):
    """Return ``ok(m)``: True iff every exponent of packed monomial ``m`` is < q."""
    lay = ring.layout
    n = ring.nvars
    add = sum((_GUARD_BIT - q) << (_FIELD * i) for i in range(n))
    emask, guard = lay.emask, lay.guard

    def ok(m):
        return not (((m & emask) + add) & guard)

    return ok


def mod_bracket(f: Polynomial, q: int) -> Polynomial:
    """Normal form of ``f`` modulo ``n^[q]``: drop terms with an exponent >= q."""
    ok = _below_q_test(f.ring, q)
    return Polynomial(f.ring, {m: c for m, c in f._d.items() if ok(m)})


def in_bracket(f: Polynomial, q: int) -> bool:
    ok = _below_q_test(f.ring, q)
    return not any(ok(m) for m in f._d)


def mul_mod_bracket(f: Polynomial, g: Polynomial, q: int) -> Polynomial:
    """``f*g`` modulo ``n^[q]`` without forming the full product."""
    ring = f.ring
    ok = _below_q_test(ring, q)
    p = ring.p
    a = {m: c for m, c in f._d.items() if ok(m)}
    b = {m: c for m, c in g._d.items() if ok(m)}
    d: dict[int, int] = {}
    get = d.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = ma + mb
            if ok(m):
                d[m] = (get(m, 0) + ca * cb) % p
    return Polynomial(ring, {m: c for m, c in d.items() if c})


def pow_mod_bracket(f: Polynomial, k: int, q: int) -> Polynomial:
    result = mod_bracket(f.ring.one(), q)
    base = mod_bracket(f, q)
    while k:
        if k & 1:
            result = mul_mod_bracket(result, base, q)
        k >>= 1
        if k:
            base = mul_mod_bracket(base, base, q)
    return result


def frobenius_colon(I: Ideal, q: int) -> Ideal:
    """``(I^[q] :_S I)``, memoized on the ideal object."""
    cache = I.__dict__.setdefault("_frobenius_colon", {})
    C = cache.get(q)
    if C is None:
        if I.is_zero():
            C = Ideal(I.ring, [I.ring.one()])
        else:
            I.groebner()  # lets bracket_power carry the basis over
            C = colon(bracket_power(I, q), I)
        cache[q] = C
    return C


def _require_in_maximal(I: Ideal, what: str = "ideal"):
    if not I.in_maximal():
        raise IdealNotInMaximal(f"{what} {I} is not contained in the maximal ideal of the origin")


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000.0, 3)


def fedder_fpure(I: Ideal) -> Verdict:
    """Fedder's criterion: ``S/I`` is F-pure iff ``(I^[p] : I)`` is not inside ``n^[p]``."""
    _require_in_maximal(I)
    p = I.ring.p
    t0 = time.perf_counter()
    C = frobenius_colon(I, p)
    for alpha in C.gens:
        if not in_bracket(alpha, p):
            log = [{"e": 1, "q": p, "contained": False, "ms": _ms(t0)}]
            return Verdict(Status.TRUE, {"e": 1, "q": p, "alpha": str(alpha)}, log)
    log = [{"e": 1, "q": p, "contained": True, "ms": _ms(t0)}]
    cert = {"e": 1, "q": p, "colon_generators": [str(g) for g in C.gens]}
    return Verdict(Status.FALSE, cert, log)


def compatibly_fpure_along(I: Ideal, a: Ideal) -> Verdict:
    """Is there ``alpha`` in ``(I^[p]:I) ∩ ((I+a)^[p]:(I+a))`` outside ``n^[p]``?"""
    _require_in_maximal(I)
    _require_in_maximal(a, "ideal a")
    from .groebner import intersect

    p = I.ring.p
    t0 = time.perf_counter()
    Ia = I + a
    J = intersect(frobenius_colon(I, p), frobenius_colon(Ia, p))
    for alpha in J.gens:
        if not in_bracket(alpha, p):
            log = [{"e": 1, "q": p, "contained": False, "ms": _ms(t0)}]
            return Verdict(Status.TRUE, {"e": 1, "q": p, "alpha": str(alpha)}, log)
    log = [{"e": 1, "q": p, "contained": True, "ms": _ms(t0)}]
    return Verdict(Status.FALSE, {"e": 1, "q": p, "intersection_generators": [str(g) for g in J.gens]}, log)


def _premultiplied_search(I: Ideal, mult, e_max: int, label: str):
    """First ``e <= e_max`` with ``mult(q) * (I^[q]:I)`` not inside ``n^[q]``."""
    p = I.ring.p
    log = []
    for e in range(1, e_max + 1):
        q = p**e
        t0 = time.perf_counter()
        m, info = mult(q)
        C = frobenius_colon(I, q)
        witness = None
        for alpha in C.gens:
            prod = mul_mod_bracket(m, alpha, q)
            if prod:
                witness = alpha
                break
        rec = {"e": e, "q": q, **info, "contained": witness is None, "ms": _ms(t0)}
        log.append(rec)
        if witness is not None:
            cert = {"e": e, "q": q, **info, "alpha": str(witness), label: str(m) if label else None}
            cert = {k: v for k, v in cert.items() if v is not None}
            return e, cert, log
    return None, None, log


def _as_fraction(t) -> Fraction:
    if isinstance(t, str):
        t = Fraction(t.strip())
    t = Fraction(t)
    if t < 0:
        raise NegativeT(f"t must be nonnegative, got {t}")
    return t


def sharp_exponent(t: Fraction, q: int) -> int:
    """``ceil(t (q - 1))`` in exact arithmetic."""
    return math.ceil(t * (q - 1))


def sharply_fpure_pair(I: Ideal, x: Polynomial, t, e_max: int | None = None) -> Verdict:
    """Bounded search for a level ``e`` certifying sharp F-purity of ``(S/I, x^t)``.

    Success at a single level suffices, so a hit returns TRUE; exhausting
    ``e_max`` returns UNDETERMINED, never FALSE.
    """
    _require_in_maximal(I)
    t = _as_fraction(t)
    e_max = current_config().e_max if e_max is None else e_max
    if e_max < 1:
        raise InputError("e_max must be at least 1")
    x = x.to_ring(I.ring)
    if not x or x.constant_term():
        raise InputError("x must be a nonzero element of the maximal ideal")

    def mult(q):
        a = sharp_exponent(t, q)
        return pow_mod_bracket(x, a, q), {"exponent": a}

    e, cert, log = _premultiplied_search(I, mult, e_max, "")
    if e is None:
        return Verdict(Status.UNDETERMINED, None, log)
    cert["t"] = str(t)
    cert["x"] = str(x)
    return Verdict(Status.TRUE, cert, log)


def sfr_certificate(I: Ideal, c: Polynomial, e_max: int | None = None, check_c: bool = False) -> Verdict:
    """Search for ``e`` with ``c (I^[q]:I)`` not inside ``n^[q]``.

    Under the caller's assertion that ``c`` avoids the minimal primes of ``I``
    and ``(S/I)_c`` is strongly F-regular, a hit certifies strong
    F-regularity.  Failure of F-purity gives a definitive FALSE.
    """
    _require_in_maximal(I)
    e_max = current_config().e_max if e_max is None else e_max
    if e_max < 1:
        raise InputError("e_max must be at least 1")
    c = c.to_ring(I.ring)
    if not c or I.contains(c):
        raise CInIdeal(f"c = {c} lies in the ideal")
    if check_c and krull_dim(I + c) >= krull_dim(I):
        raise InputError(f"c = {c} does not cut down the dimension of S/I")
    pure = fedder_fpure(I)
    if pure.status is Status.FALSE:
        cert = dict(pure.certificate)
        cert["reason"] = "not F-pure"
        return Verdict(Status.FALSE, cert, list(pure.log))

    def mult(q):
        return c, {}

    e, cert, log = _premultiplied_search(I, mult, e_max, "c")
    if e is None:
        return Verdict(Status.UNDETERMINED, None, log)
    return Verdict(Status.TRUE, cert, log)


def splitting_ideal(I: Ideal, e: int) -> Ideal:
    """Lift to ``S`` of the splitting ideal ``I_e``: ``(n^[q] : (I^[q] : I))``."""
    if e < 1:
        raise InputError("e must be at least 1")
    _require_in_maximal(I)
    q = I.ring.p**e
    nq = bracket_power(maximal_ideal(I.ring), q)
    C = frobenius_colon(I, q)
    if C.is_unit():
        return nq
    return colon(nq, C)


def verify_certificate(I: Ideal, verdict: Verdict, c: Polynomial | None = None,
                       a: Ideal | None = None) -> bool:
    """Re-check a TRUE certificate from scratch with fresh Groebner computations."""
    if verdict.status is not Status.TRUE:
        raise ValueError("only TRUE verdicts carry an existence certificate")
    cert = verdict.certificate
    ring = I.ring
    q = cert["q"]
    alpha = ring.parse(cert["alpha"])
    fresh = Ideal(ring, [g.frobenius(q) for g in I.gens])
    if not all(fresh.contains(alpha * g) for g in I.gens):
        return False
    if a is not None:
        Ia = I + a
        fresh_a = Ideal(ring, [g.frobenius(q) for g in Ia.gens])
        if not all(fresh_a.contains(alpha * g) for g in Ia.gens):
            return False
    if "c" in cert:
        mult = ring.parse(cert["c"])
    elif "exponent" in cert:
        mult = ring.parse(cert["x"]) ** cert["exponent"]
    else:
        mult = ring.one()
    if c is not None and mult != c.to_ring(ring):
        return False
    return not in_bracket(mult * alpha, q)
