"""Reader for ``.fsg`` input files.

Grammar (INI style, UTF-8, ``#`` starts a comment line)::

    [ring]
    p = 3
    vars = x y z
    order = grevlex            # optional: lex | grevlex | block(k)

    [ideal.NAME]
    gens = x^2 - y, y*z        # comma-separated generators
    # and/or a 2x3 matrix whose 2x2 minors are added to the generators:
    minors2 = a, b, c; d, e, f

    [elem.NAME]
    poly = x + y^2

The ideal name ``m`` always denotes the maximal ideal of the origin.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field

from .errors import InputError
from .groebner import Ideal
from .polyring import Polynomial, RingSpec, minors2


@dataclass
class InputFile:
    ring: RingSpec
    ideals: dict[str, Ideal] = field(default_factory=dict)
    elems: dict[str, Polynomial] = field(default_factory=dict)

    def ideal(self, name: str) -> Ideal:
        if name == "m":
            return Ideal.maximal(self.ring)
        try:
            return self.ideals[name]
        except KeyError:
            raise InputError(f"no ideal named {name!r}") from None

    def elem(self, name: str) -> Polynomial:
        try:
            return self.elems[name]
        except KeyError:
            raise InputError(f"no element named {name!r}") from None

    def poly(self, text: str) -> Polynomial:
        """An element by name, falling back to parsing ``text`` as a polynomial."""
        if text in self.elems:
            return self.elems[text]
        return self.ring.parse(text)


def _split(text: str, sep: str) -> list[str]:
    parts = [s.strip() for s in text.split(sep)]
    if any(not s for s in parts):
        raise InputError(f"empty entry in {text!r}")
    return parts


def parse_input(text: str) -> InputFile:
    cp = configparser.ConfigParser(interpolation=None, comment_prefixes=("#",),
                                   inline_comment_prefixes=("#",), strict=True)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise InputError(f"malformed input file: {exc}") from None
    if "ring" not in cp:
        raise InputError("input file needs a [ring] section")
    r = cp["ring"]
    unknown = set(r) - {"p", "vars", "order"}
    if unknown:
        raise InputError(f"unknown [ring] keys: {sorted(unknown)}")
    try:
        p = int(r["p"])
    except (KeyError, ValueError):
        raise InputError("[ring] needs an integer p") from None
    if "vars" not in r:
        raise InputError("[ring] needs vars")
    ring = RingSpec.make(p, r["vars"].replace(",", " ").split(), r.get("order", "grevlex"))
    out = InputFile(ring)
    names: set[str] = set()
    for section in cp.sections():
        if section == "ring":
            continue
        kind, _, name = section.partition(".")
        if kind not in ("ideal", "elem") or not name:
            raise InputError(f"unknown section [{section}]")
        if name in names or name == "m":
            raise InputError(f"duplicate or reserved name {name!r}")
        names.add(name)
        body = cp[section]
        if kind == "elem":
            if set(body) != {"poly"}:
                raise InputError(f"[{section}] needs exactly one key: poly")
            out.elems[name] = ring.parse(body["poly"])
            continue
        if not body or not set(body) <= {"gens", "minors2"}:
            raise InputError(f"[{section}] takes gens and/or minors2")
        gens = []
        if "minors2" in body:
            rows = [[ring.parse(x) for x in _split(row, ",")] for row in _split(body["minors2"], ";")]
            gens += minors2(rows)
        if body.get("gens", "").strip():
            gens += [ring.parse(g) for g in _split(body["gens"], ",")]
        out.ideals[name] = Ideal(ring, gens)
    return out


def load_input(path) -> InputFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_input(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
