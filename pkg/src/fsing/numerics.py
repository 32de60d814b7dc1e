"""Finite-level estimators: Hilbert-Kunz lengths, free ranks, socles, rsig/csig.

Nothing here takes a limit.  Each function reports the exact rational value
at one level ``e`` (with ``q = p^e``); sequences over ``e`` are the caller's
business.  The residue field is F_p, which is perfect, so the F-signature
normalizes by ``q^dim`` with no extra ``alpha(R)`` term.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .config import current_config
from .errors import InputError, NotZeroDimensional
from .frobenius import maximal_ideal, splitting_ideal
from .groebner import INFINITE, Ideal, bracket_power, colon, krull_dim, local_length
from .polyring import Polynomial


@dataclass(frozen=True)
class HKEstimate:
    e: int
    q: int
    length: int
    d: int
    value: Fraction
    difference: Fraction | None = None  # |value(e) - value(e-1)|, for e >= 2

    def __post_init__(self):
        assert self.value * self.q**self.d == self.length

    def to_json(self) -> dict:
        out = {"e": self.e, "q": self.q, "length": self.length, "d": self.d, "value": rational_json(self.value)}
        if self.difference is not None:
            out["difference"] = rational_json(self.difference)
        return out


def rational_json(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator), "float": float(x)}


def _q(I: Ideal, e: int) -> int:
    if not isinstance(e, int) or e < 0:
        raise InputError("e must be a nonnegative integer")
    return I.ring.p**e


def _finite_length(K: Ideal) -> int:
    L = local_length(K)
    if L == INFINITE:
        raise NotZeroDimensional(f"{K} is not zero-dimensional")
    return L


def hk_length(I: Ideal, J: Ideal, e: int) -> int:
    """``length(S/(I + J^[q]))`` at the origin."""
    q = _q(I, e)
    return _finite_length(I + bracket_power(J, q))


def _dim(I: Ideal, d: int | None) -> int:
    return krull_dim(I) if d is None else d


def hk_estimate(I: Ideal, J: Ideal, e: int, d: int | None = None) -> HKEstimate:
    d = _dim(I, d)
    q = _q(I, e)
    length = hk_length(I, J, e)
    value = Fraction(length, q**d)
    diff = None
    if e >= 2:
        prev = Fraction(hk_length(I, J, e - 1), (q // I.ring.p) ** d)
        diff = abs(value - prev)
    return HKEstimate(e, q, length, d, value, diff)


def free_rank(I: Ideal, e: int) -> int:
    """``a_e``: the number of free summands of ``F^e_* R``."""
    lift = splitting_ideal(I, e)
    if lift.is_unit():
        return 0
    return _finite_length(lift)


def fsig_estimate(I: Ideal, e: int, d: int | None = None) -> HKEstimate:
    if e < 1:
        raise InputError("e must be at least 1")
    d = _dim(I, d)
    q = _q(I, e)
    a = free_rank(I, e)
    return HKEstimate(e, q, a, d, Fraction(a, q**d))


def nearest_exponent(a1: int, a2: int, p: int, gap: int) -> int:
    """Round ``log_p(a2/a1) / gap`` to the nearest integer (halves round up).

    ``s`` is the largest integer with ``a1^2 p^((2s-1) gap) <= a2^2``, decided
    with integer arithmetic only.
    """
    lhs, rhs = a1 * a1, a2 * a2

    def fits(s):
        k = (2 * s - 1) * gap
        if k >= 0:
            return lhs * p**k <= rhs
        return lhs <= rhs * p ** (-k)

    s = 0
    if fits(s):
        while fits(s + 1):
            s += 1
    else:
        while not fits(s):
            s -= 1
    return s


def sdim_rf_estimate(I: Ideal, e1: int, e2: int) -> tuple[int, Fraction]:
    """Finite-level estimates of the splitting dimension and F-splitting ratio."""
    if not 1 <= e1 < e2:
        raise InputError("need 1 <= e1 < e2")
    a2 = free_rank(I, e2)
    if a2 == 0:
        return -1, Fraction(0)
    a1 = free_rank(I, e1)
    if a1 == 0:
        return -1, Fraction(0)
    p = I.ring.p
    s = nearest_exponent(a1, a2, p, e2 - e1)
    return s, Fraction(a2) / Fraction(p) ** (e2 * s)


# -- socles ----------------------------------------------------------------


@dataclass
class SocleBasis:
    sop: list[Polynomial]
    residues: list[Polynomial]

    @property
    def dim(self) -> int:
        return len(self.residues)


def _row_reduce(vectors: list[dict], p: int) -> list[dict]:
    """Reduced echelon basis of sparse vectors ``{coordinate: coeff}``; pivots descending."""
    basis: list[tuple[int, dict]] = []
    for v in vectors:
        v = dict(v)
        for piv, b in basis:
            c = v.get(piv)
            if c:
                for k, bc in b.items():
                    nv = (v.get(k, 0) - c * bc) % p
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        if not v:
            continue
        piv = max(v)
        inv = pow(v[piv], p - 2, p)
        v = {k: c * inv % p for k, c in v.items()}
        for i, (bp, b) in enumerate(basis):
            c = b.get(piv)
            if c:
                for k, vc in v.items():
                    nb = (b.get(k, 0) - c * vc) % p
                    if nb:
                        b[k] = nb
                    else:
                        b.pop(k, None)
        basis.append((piv, v))
    basis.sort(key=lambda t: t[0], reverse=True)
    return [b for _, b in basis]


def socle_basis(I: Ideal, sop) -> SocleBasis:
    """A basis of ``((I + (sop)) : n) / (I + (sop))`` by standard-monomial residues."""
    ring = I.ring
    sop = [s.to_ring(ring) if isinstance(s, Polynomial) else ring.parse(s) for s in sop]
    K = I + sop
    _finite_length(K)
    soc = colon(K, maximal_ideal(ring))
    gb = K.groebner()
    nfs = [gb.normal_form(g) for g in soc.gens]
    rows = _row_reduce([dict(f._d) for f in nfs if f], ring.p)
    residues = [Polynomial(ring, r) for r in rows]
    return SocleBasis(sop, residues)


# -- rsig / csig -----------------------------------------------------------


@dataclass
class SignatureEstimate:
    kind: str
    e: int
    q: int
    d: int
    value: Fraction
    base_length: int  # length(S/(I + (sop)^[q]))
    socle_dim: int
    candidates: int  # number evaluated
    exhaustive: bool
    witness: list[str] = field(default_factory=list)
    sop: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "e": self.e,
            "q": self.q,
            "d": self.d,
            "value": rational_json(self.value),
            "base_length": self.base_length,
            "socle_dim": self.socle_dim,
            "candidates": self.candidates,
            "exhaustive": self.exhaustive,
            "witness": self.witness,
            "sop": self.sop,
        }


def projective_points(s: int, p: int):
    """Nonzero vectors of F_p^s with first nonzero entry 1, lexicographically."""
    for lead in range(s):
        for tail in itertools.product(range(p), repeat=s - lead - 1):
            yield (0,) * lead + (1,) + tail


def gaussian_binomial(s: int, k: int, p: int) -> int:
    num, den = 1, 1
    for i in range(k):
        num *= p ** (s - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def subspace_count(s: int, p: int) -> int:
    return sum(gaussian_binomial(s, k, p) for k in range(1, s + 1))


def rref_subspaces(s: int, p: int):
    """All nonzero subspaces of F_p^s as RREF row tuples, by dimension then pivots."""
    for k in range(1, s + 1):
        for pivots in itertools.combinations(range(s), k):
            free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, s) if c not in pivots]
            for vals in itertools.product(range(p), repeat=len(free)):
                rows = [[0] * s for _ in range(k)]
                for r, c in enumerate(pivots):
                    rows[r][c] = 1
                for (r, c), v in zip(free, vals):
                    rows[r][c] = v
                yield tuple(tuple(r) for r in rows)


def _rref_of(rows, p):
    rows = [list(r) for r in rows]
    out = []
    col = 0
    s = len(rows[0]) if rows else 0
    r = 0
    while r < len(rows) and col < s:
        piv = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[r])]
        r += 1
        col += 1
    out = [tuple(row) for row in rows[:r]]
    return tuple(out)


def _combine(residues, coeffs, ring):
    u = ring.zero()
    for c, r in zip(coeffs, residues):
        if c:
            u = u + r.scale(c)
    return u


def _prepare(I: Ideal, sop, e: int, d):
    ring = I.ring
    sop = [s.to_ring(ring) if isinstance(s, Polynomial) else ring.parse(s) for s in sop]
    if not sop:
        raise InputError("a system of parameters is required")
    q = _q(I, e)
    d = _dim(I, d)
    soc = socle_basis(I, sop)
    base = I + [s.frobenius(q) for s in sop]
    L0 = _finite_length(base)
    return ring, sop, q, d, soc, base, L0


def rsig_estimate(I: Ideal, sop, e: int, budget: int | None = None, d: int | None = None,
                  seed: int | None = None) -> SignatureEstimate:
    """min over socle lines ``u`` of ``[l(S/(I,(sop)^[q])) - l(S/(I,(sop,u)^[q]))] / q^d``."""
    cfg = current_config()
    budget = cfg.enum_budget if budget is None else budget
    seed = cfg.seed if seed is None else seed
    ring, sop, q, d, soc, base, L0 = _prepare(I, sop, e, d)
    s, p = soc.dim, ring.p
    if s == 0:
        raise NotZeroDimensional("socle is zero; the quotient is not Artinian")
    total = (p**s - 1) // (p - 1)
    exhaustive = total <= budget
    if exhaustive:
        cands = list(projective_points(s, p))
    else:
        rng = random.Random(seed)
        seen = set()
        cands = []
        while len(cands) < budget:
            v = [rng.randrange(p) for _ in range(s)]
            if not any(v):
                continue
            lead = next(c for c in v if c)
            inv = pow(lead, p - 2, p)
            v = tuple(c * inv % p for c in v)
            if v not in seen:
                seen.add(v)
                cands.append(v)
        cands.sort()
    best = None
    for coeffs in cands:
        u = _combine(soc.residues, coeffs, ring)
        drop = L0 - _finite_length(base + [u.frobenius(q)])
        if best is None or drop < best[0]:
            best = (drop, u)
    value = Fraction(best[0], q**d)
    return SignatureEstimate("rsig", e, q, d, value, L0, s, len(cands), exhaustive,
                             [str(best[1])], [str(x) for x in sop])


def csig_estimate(I: Ideal, sop, e: int, budget: int | None = None, d: int | None = None,
                  seed: int | None = None) -> SignatureEstimate:
    """min over nonzero socle subspaces ``V`` of the Hilbert-Kunz drop per unit of length drop."""
    cfg = current_config()
    budget = cfg.enum_budget if budget is None else budget
    seed = cfg.seed if seed is None else seed
    ring, sop, q, d, soc, base, L0 = _prepare(I, sop, e, d)
    s, p = soc.dim, ring.p
    if s == 0:
        raise NotZeroDimensional("socle is zero; the quotient is not Artinian")
    total = subspace_count(s, p)
    exhaustive = total <= budget
    if exhaustive:
        cands = list(rref_subspaces(s, p))
    else:
        rng = random.Random(seed)
        seen = set()
        cands = []
        while len(cands) < budget:
            k = rng.randint(1, s)
            rows = [[rng.randrange(p) for _ in range(s)] for _ in range(k)]
            V = _rref_of(rows, p)
            if V and V not in seen:
                seen.add(V)
                cands.append(V)
        cands.sort(key=lambda V: (len(V), V))
    base_socle = I + sop
    ell0 = _finite_length(base_socle)
    best = None
    for V in cands:
        us = [_combine(soc.residues, row, ring) for row in V]
        num = L0 - _finite_length(base + [u.frobenius(q) for u in us])
        den = ell0 - _finite_length(base_socle + us)
        val = Fraction(num, den * q**d)
        if best is None or val < best[0]:
            best = (val, us)
    return SignatureEstimate("csig", e, q, d, best[0], L0, s, len(cands), exhaustive,
                             [str(u) for u in best[1]], [str(x) for x in sop])
