"""Prime fields, monomial orders and sparse polynomials over F_p.

Monomials are packed into a single Python int.  The high bits hold an
order key (a linear image of the exponent vector under the order's weight
matrix, written in a balanced radix), the low bits hold the exponent
vector itself with one guard bit per field.  Consequently

* comparing two packed monomials as ints compares them in the ring's order,
* multiplying monomials is int addition, dividing is int subtraction,
* divisibility is a borrow test on the low bits.

Polynomials keep a ``{packed: coeff}`` dict and are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    ExponentOverflow,
    InputError,
    MixedRings,
    NotDivisible,
    PolySyntaxError,
    UnknownVariable,
)

EXP_CAP = 1 << 16  # exponents must stay strictly below this
_EB = 20  # bits per exponent field (16 value bits + headroom + guard)
_FMASK = (1 << _EB) - 1
_KB = 24  # bits per digit of the order key
_VAR_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < 2**31:
            raise InputError(f"characteristic must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise InputError(f"{self.p} is not prime")

    def __call__(self, c: int) -> int:
        return c % self.p

    def inv(self, c: int) -> int:
        c %= self.p
        if c == 0:
            raise ZeroDivisionError("0 has no inverse in F_p")
        return pow(c, self.p - 2, self.p)


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block`` (lex on the first ``k`` variables,
    grevlex on the rest)."""

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise InputError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.k < 0:
            raise InputError("block order needs a nonnegative prefix size")
        if self.kind != "block" and self.k != 0:
            object.__setattr__(self, "k", 0)

    @classmethod
    def parse(cls, text: str) -> MonomialOrder:
        text = text.strip()
        m = re.fullmatch(r"block\s*[(:]?\s*(\d+)\s*\)?", text)
        if m:
            return cls("block", int(m.group(1)))
        return cls(text)

    def __str__(self):
        return f"block({self.k})" if self.kind == "block" else self.kind

    def weight_rows(self, n: int) -> list[tuple[int, ...]]:
        """Rows of an invertible integer matrix whose lex order on M.e is this order."""

        def unit(i, sign=1):
            return tuple(sign if j == i else 0 for j in range(n))

        if self.kind == "lex":
            return [unit(i) for i in range(n)]
        k = 0 if self.kind == "grevlex" else min(self.k, n)
        rows = [unit(i) for i in range(k)]
        if k < n:
            rows.append(tuple(0 if j < k else 1 for j in range(n)))
            rows.extend(unit(j, -1) for j in range(n - 1, k, -1))
        return rows


class _Layout:
    """Packing scheme for one (number of variables, order) pair."""

    def __init__(self, n: int, order: MonomialOrder):
        self.n = n
        rows = order.weight_rows(n)
        nrows = len(rows)
        self.ebits = _EB * n
        self.emask = (1 << self.ebits) - 1
        self.guard = sum(1 << (_EB * i + _EB - 1) for i in range(n))
        self.ovf = sum((_FMASK ^ (EXP_CAP - 1)) << (_EB * i) for i in range(n))
        self.ones = sum(1 << (_EB * i) for i in range(n))
        self.units = []
        for i in range(n):
            key = sum(rows[j][i] << (_KB * (nrows - 1 - j)) for j in range(nrows) if rows[j][i] >= 0)
            key -= sum((-rows[j][i]) << (_KB * (nrows - 1 - j)) for j in range(nrows) if rows[j][i] < 0)
            self.units.append((key << self.ebits) | (1 << (_EB * i)))
        self.fast_degree = n <= 15

    def encode(self, exps) -> int:
        m = 0
        for e, u in zip(exps, self.units):
            if e:
                if not 0 <= e < EXP_CAP:
                    raise ExponentOverflow(f"exponent {e} outside [0, {EXP_CAP})")
                m += e * u
        return m

    def decode(self, m: int) -> tuple[int, ...]:
        E = m & self.emask
        return tuple((E >> (_EB * i)) & _FMASK for i in range(self.n))

    def degree(self, m: int) -> int:
        if self.fast_degree:
            return (((m & self.emask) * self.ones) >> (_EB * (self.n - 1))) & _FMASK
        return sum(self.decode(m))

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return (((b & self.emask) | g) - (a & self.emask)) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def gcd(self, a: int, b: int) -> int:
        return self.encode([min(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def overflowed(self, m: int) -> bool:
        return bool(m & self.ovf)


@dataclass(frozen=True)
class RingSpec:
    """``F_p[vars]`` with a monomial order, read as local at the origin."""

    field: PrimeField
    vars: tuple[str, ...]
    order: MonomialOrder = field(default_factory=MonomialOrder)

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if isinstance(self.field, int):
            object.__setattr__(self, "field", PrimeField(self.field))
        if not self.vars:
            raise InputError("a ring needs at least one variable")
        for v in self.vars:
            if not isinstance(v, str) or not _VAR_RE.match(v):
                raise InputError(f"bad variable name {v!r}")
        if len(set(self.vars)) != len(self.vars):
            raise InputError("variable names must be distinct")

    @classmethod
    def make(cls, p: int, vars, order="grevlex") -> RingSpec:
        if isinstance(vars, str):
            vars = [v for v in re.split(r"[\s,]+", vars) if v]
        if isinstance(order, str):
            order = MonomialOrder.parse(order)
        return cls(PrimeField(p), tuple(vars), order)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @cached_property
    def layout(self) -> _Layout:
        return _Layout(len(self.vars), self.order)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vars)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def with_order(self, order: MonomialOrder) -> RingSpec:
        return RingSpec(self.field, self.vars, order)

    def canonical(self) -> dict:
        return {"p": self.p, "vars": list(self.vars), "order": str(self.order)}

    # constructors -----------------------------------------------------
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: int) -> Polynomial:
        c %= self.p
        return Polynomial(self, {0: c} if c else {})

    def var(self, name: str) -> Polynomial:
        return Polynomial(self, {self.layout.units[self.index(name)]: 1})

    def gens(self) -> list[Polynomial]:
        return [self.var(v) for v in self.vars]

    def monomial(self, exps, coeff: int = 1) -> Polynomial:
        return self.poly({tuple(exps): coeff})

    def poly(self, terms) -> Polynomial:
        """Build from ``{exponent tuple: coefficient}`` or an iterable of pairs."""
        items = terms.items() if isinstance(terms, dict) else terms
        lay, p = self.layout, self.p
        d: dict[int, int] = {}
        for exps, c in items:
            if len(exps) != self.nvars:
                raise InputError("exponent vector length does not match the ring")
            m = lay.encode(exps)
            d[m] = (d.get(m, 0) + c) % p
        return Polynomial(self, {m: c for m, c in d.items() if c})

    def parse(self, src: str) -> Polynomial:
        return parse_poly(src, self)


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        for e in self.exponents:
            if not 0 <= e < EXP_CAP:
                raise ExponentOverflow(f"exponent {e} outside [0, {EXP_CAP})")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))


class Polynomial:
    """An immutable element of ``ring``; terms kept as ``{packed monomial: coeff}``."""

    __slots__ = ("ring", "_d", "_sorted", "_hash")

    def __init__(self, ring: RingSpec, d: dict[int, int]):
        # trusted constructor: d must be normalized (no zeros, coeffs in [0, p))
        self.ring = ring
        self._d = d
        self._sorted = None
        self._hash = None

    # structure ----------------------------------------------------------
    def __bool__(self):
        return bool(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __len__(self):
        return len(self._d)

    def keys_desc(self) -> list[int]:
        if self._sorted is None:
            self._sorted = sorted(self._d, reverse=True)
        return self._sorted

    def items_desc(self) -> list[tuple[int, int]]:
        d = self._d
        return [(m, d[m]) for m in self.keys_desc()]

    @property
    def terms(self) -> tuple[tuple[int, Monomial], ...]:
        """``(coefficient, Monomial)`` pairs in strictly decreasing order."""
        dec = self.ring.layout.decode
        return tuple((c, Monomial(dec(m))) for m, c in self.items_desc())

    def lead_packed(self) -> int:
        if not self._d:
            raise ValueError("zero polynomial has no lead term")
        if self._sorted is not None:
            return self._sorted[0]
        return max(self._d)

    @property
    def lead_monomial(self) -> Monomial:
        return Monomial(self.ring.layout.decode(self.lead_packed()))

    @property
    def lead_coeff(self) -> int:
        return self._d[self.lead_packed()]

    def exponent_vectors(self) -> list[tuple[int, ...]]:
        dec = self.ring.layout.decode
        return [dec(m) for m in self.keys_desc()]

    def total_degree(self) -> int:
        if not self._d:
            return -1
        deg = self.ring.layout.degree
        return max(deg(m) for m in self._d)

    def min_degree(self) -> int:
        """Order of vanishing at the origin (lowest total degree of a term)."""
        if not self._d:
            raise ValueError("zero polynomial")
        deg = self.ring.layout.degree
        return min(deg(m) for m in self._d)

    def constant_term(self) -> int:
        return self._d.get(0, 0)

    def max_exponent(self) -> int:
        return max((max(e) for e in self.exponent_vectors()), default=0)

    def variables(self) -> set[str]:
        used = set()
        for e in self.exponent_vectors():
            used.update(v for v, k in zip(self.ring.vars, e) if k)
        return used

    # arithmetic ---------------------------------------------------------
    def _check(self, other) -> Polynomial:
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise MixedRings("polynomials live in different rings")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        d = dict(self._d)
        for m, c in other._d.items():
            s = (d.get(m, 0) + c) % p
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {m: p - c for m, c in self._d.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.p
        a, b = self._d, other._d
        if len(a) < len(b):
            a, b = b, a
        d: dict[int, int] = {}
        get = d.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                d[m] = (get(m, 0) + ca * cb) % p
        res = {m: c for m, c in d.items() if c}
        self._check_overflow(res)
        return Polynomial(self.ring, res)

    __rmul__ = __mul__

    def _check_overflow(self, d):
        acc = 0
        for m in d:
            acc |= m
        if self.ring.layout.overflowed(acc):
            raise ExponentOverflow(f"an exponent reached {EXP_CAP}")

    def scale(self, c: int) -> Polynomial:
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: a * c % p for m, a in self._d.items()})

    def mul_monomial(self, exps, c: int = 1) -> Polynomial:
        shift = self.ring.layout.encode(exps)
        p = self.ring.p
        res = {m + shift: a * c % p for m, a in self._d.items()}
        self._check_overflow(res)
        return Polynomial(self.ring, {m: a for m, a in res.items() if a})

    def frobenius(self, q: int) -> Polynomial:
        """``f^q`` for ``q`` a power of the characteristic (additive in char p)."""
        if q == 1:
            return self
        if self._d and self.max_exponent() * q >= EXP_CAP:
            raise ExponentOverflow(f"f^{q} would exceed the exponent cap {EXP_CAP}")
        p = self.ring.p
        return Polynomial(self.ring, {m * q: pow(c, q, p) for m, c in self._d.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        p = self.ring.p
        result = self.ring.one()
        base = self
        # base-p digits: f^(d p^i) = (f^(p^i))^d and f^(p^i) is a cheap Frobenius
        while k:
            k, digit = divmod(k, p)
            if digit:
                result = result * _small_power(base, digit)
            if k:
                base = base.frobenius(p)
        return result

    def monic(self) -> Polynomial:
        if not self._d:
            return self
        return self.scale(self.ring.field.inv(self.lead_coeff))

    def exact_divide(self, g: Polynomial) -> Polynomial:
        """The quotient ``q`` with ``self == q * g``; raises NotDivisible otherwise."""
        g = self._check(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        q, r = divmod_poly(self, g)
        if r:
            raise NotDivisible("polynomial is not a multiple of the divisor")
        return q

    def to_ring(self, ring: RingSpec) -> Polynomial:
        """Re-encode in another ring whose variables include all used ones."""
        if ring == self.ring:
            return self
        if ring.p != self.ring.p:
            raise MixedRings("cannot move polynomials between characteristics")
        src = self.ring.layout
        dst = ring.layout
        pos = None
        if ring.vars != self.ring.vars:
            lookup = ring._index
            pos = [lookup.get(v) for v in self.ring.vars]
        d = {}
        for m, c in self._d.items():
            e = src.decode(m)
            if pos is not None:
                full = [0] * ring.nvars
                for v, i, k in zip(self.ring.vars, pos, e):
                    if i is not None:
                        full[i] = k
                    elif k:
                        raise UnknownVariable(v)
                e = full
            d[dst.encode(e)] = c
        return Polynomial(ring, d)

    def evaluate(self, values: dict[str, int]) -> int:
        p = self.ring.p
        total = 0
        for c, mono in self.terms:
            t = c
            for v, e in zip(self.ring.vars, mono.exponents):
                if e:
                    t = t * pow(values.get(v, 0), e, p) % p
            total += t
        return total % p

    def diff(self, var: str) -> Polynomial:
        i = self.ring.index(var)
        lay, p = self.ring.layout, self.ring.p
        d = {}
        for m, c in self._d.items():
            e = list(lay.decode(m))
            if e[i] and (c * e[i]) % p:
                k = e[i]
                e[i] -= 1
                d[lay.encode(e)] = c * k % p
        return Polynomial(self.ring, d)

    # comparison / display -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Polynomial({render(self)!r})"


def _small_power(f: Polynomial, k: int) -> Polynomial:
    result = f
    for _ in range(k - 1):
        result = result * f
    return result


def divmod_poly(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Multivariate division of ``f`` by the single polynomial ``g``."""
    ring = f.ring
    lay, p = ring.layout, ring.p
    lg = g.lead_packed()
    inv = ring.field.inv(g._d[lg])
    gtail = [(m, c) for m, c in g.items_desc()[1:]]
    rem = dict(f._d)
    quo: dict[int, int] = {}
    out: dict[int, int] = {}
    while rem:
        m = max(rem)
        c = rem.pop(m)
        if lay.divides(lg, m):
            shift = m - lg
            k = c * inv % p
            quo[shift] = k
            for mt, ct in gtail:
                key = mt + shift
                v = (rem.get(key, 0) - k * ct) % p
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        else:
            out[m] = c
    return Polynomial(ring, quo), Polynomial(ring, out)


def render(f: Polynomial) -> str:
    """Canonical text: decreasing terms, coefficients in [1, p-1], ``*`` and ``^``."""
    if not f:
        return "0"
    parts = []
    names = f.ring.vars
    for c, mono in f.terms:
        factors = []
        for v, e in zip(names, mono.exponents):
            if e == 1:
                factors.append(v)
            elif e:
                factors.append(f"{v}^{e}")
        if c != 1 or not factors:
            factors.insert(0, str(c))
        parts.append("*".join(factors))
    return " + ".join(parts)


# parsing ----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()":
                raise PolySyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str, ring: RingSpec):
        self.ring = ring
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return f

    def expr(self) -> Polynomial:
        f = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self) -> Polynomial:
        f = self.signed()
        while self.peek()[0] == "*":
            self.take()
            f = f * self.signed()
        return f

    def signed(self) -> Polynomial:
        kind = self.peek()[0]
        if kind in "+-":
            self.take()
            f = self.signed()
            return -f if kind == "-" else f
        return self.power()

    def power(self) -> Polynomial:
        f = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise PolySyntaxError("exponent must be a nonnegative integer", tok[2])
            k = tok[1]
            if k >= EXP_CAP and f and f.total_degree() > 0:
                raise ExponentOverflow(f"exponent {k} exceeds the cap {EXP_CAP - 1}")
            f = f**k
        return f

    def atom(self) -> Polynomial:
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            return self.ring.const(tok[1])
        if kind == "var":
            return self.ring.var(tok[1])
        if kind == "(":
            f = self.expr()
            self.take(")")
            return f
        what = "end of input" if kind == "end" else repr(tok[1])
        raise PolySyntaxError(f"unexpected {what}", tok[2])


def parse_poly(src: str, ring: RingSpec) -> Polynomial:
    """Parse the polynomial input language into a normalized polynomial.

    Grammar: ``expr := term (('+'|'-') term)*``, ``term := factor ('*' factor)*``,
    ``factor := integer | var | '(' expr ')' | factor '^' int``, with unary
    signs.  Juxtaposition is not multiplication.
    """
    return _Parser(src, ring).parse()


def minors2(m) -> list[Polynomial]:
    """2x2 minors of a 2x3 matrix: columns (1,2), (1,3), (2,3), as a11*a22 - a12*a21."""
    if len(m) != 2 or any(len(row) != 3 for row in m):
        raise InputError("minors2 needs a 2x3 matrix")
    ring = m[0][0].ring
    if any(e.ring != ring for row in m for e in row):
        raise MixedRings("matrix entries live in different rings")
    out = []
    for i, j in ((0, 1), (0, 2), (1, 2)):
        out.append(m[0][i] * m[1][j] - m[0][j] * m[1][i])
    return out
