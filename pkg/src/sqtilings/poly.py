"""Exact sparse polynomial and rational-function arithmetic in z and t.

All coefficients are Python ints, so nothing overflows or rounds.  Three
small types cover everything the counting code needs:

* ``PolyT``  -- one variable t.  The coefficient of t^k is a number of
  tilings that use exactly k large squares.
* ``BiPoly`` -- two variables: z marks completed rows, t marks placed
  squares.  Transfer-matrix entries and generating functions live here.
* ``RatFun`` -- a BiPoly numerator/denominator pair kept in a canonical
  form: shared integer content removed, denominator constant term +1.

A BiPoly stores its terms as ``{(z_exp << 32) | t_exp: coeff}``.  Packing
both exponents into one int makes monomial multiplication a plain integer
addition of keys, which is where the fraction-free elimination in
:mod:`sqtilings.gfun` spends nearly all of its time.

The text format used by the CLI and by fixture files writes terms in
ascending graded-lexicographic order (total degree, then z power, then t
power) with explicit ``*`` and ``^``, e.g. ``1 - z - 2*z^2*t``.  Rational
functions are written ``(num) / (den)``.  Parsing accepts arbitrary
whitespace and any factor order inside a term, so ``-t^2*z^3`` is fine.
"""

from __future__ import annotations

import re
from math import gcd

_SHIFT = 32
_TMASK = (1 << _SHIFT) - 1


def _pack(z_exp: int, t_exp: int) -> int:
    return (z_exp << _SHIFT) | t_exp


def _unpack(key: int) -> tuple[int, int]:
    return key >> _SHIFT, key & _TMASK


# ---------------------------------------------------------------------------
# raw term-map helpers; a term map is dict[packed_key, nonzero int]


def _add_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def _neg_terms(a: dict) -> dict:
    return {k: -c for k, c in a.items()}


def _scale_terms(a: dict, c: int) -> dict:
    if c == 0:
        return {}
    return {k: v * c for k, v in a.items()}


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(b) == 1:
        ((kb, cb),) = b.items()
        return {ka + kb: ca * cb for ka, ca in a.items()}
    if len(a) == 1:
        ((ka, ca),) = a.items()
        return {ka + kb: ca * cb for kb, cb in b.items()}
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = get(k, 0) + ca * cb
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _cross_terms(p: dict, x: dict, a: dict, b: dict) -> dict:
    """p*x - a*b in one accumulation pass."""
    out: dict = {}
    get = out.get
    if x:
        for ka, ca in p.items():
            for kb, cb in x.items():
                k = ka + kb
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    if a and b:
        for ka, ca in a.items():
            for kb, cb in b.items():
                k = ka + kb
                v = get(k, 0) - ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
    return out


def _exact_div_terms(num: dict, den: dict) -> dict:
    """Quotient num/den, which must divide exactly; raises ValueError if not.

    Greedy division by the leading term under the packed-key order (lex in
    z then t), which is a valid monomial order because keys add without
    carries.  Exactness failures can only come from internal bugs, so the
    error is loud rather than recoverable.
    """
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    if not num:
        return {}
    dlead = max(den)
    dcoef = den[dlead]
    dz, dt = dlead >> _SHIFT, dlead & _TMASK
    rest = [(k, c) for k, c in den.items() if k != dlead]
    r = dict(num)
    q: dict = {}
    while r:
        rlead = max(r)
        rz, rt = rlead >> _SHIFT, rlead & _TMASK
        if rz < dz or rt < dt:
            raise ValueError("inexact polynomial division")
        qc, rem = divmod(r[rlead], dcoef)
        if rem:
            raise ValueError("inexact polynomial division")
        kq = rlead - dlead
        q[kq] = qc
        del r[rlead]
        for k, c in rest:
            kk = k + kq
            v = r.get(kk, 0) - c * qc
            if v:
                r[kk] = v
            elif kk in r:
                del r[kk]
    return q


def _content(a: dict) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _subs_t_terms(a: dict, value: int) -> dict:
    out: dict = {}
    for k, c in a.items():
        zk = k & ~_TMASK
        v = out.get(zk, 0) + c * value ** (k & _TMASK)
        if v:
            out[zk] = v
        elif zk in out:
            del out[zk]
    return out


# ---------------------------------------------------------------------------
# text format

_FACTOR_RE = re.compile(r"^(?:(\d+)|([zt])(?:\^(\d+))?)$")


def _parse_terms(text: str) -> dict:
    s = "".join(text.split())
    if not s:
        raise ValueError("empty polynomial text")
    if s[0] not in "+-":
        s = "+" + s
    tokens = re.findall(r"[+-][^+-]+", s)
    if sum(len(tok) for tok in tokens) != len(s):
        raise ValueError(f"cannot parse polynomial text: {text!r}")
    out: dict = {}
    for tok in tokens:
        sign = -1 if tok[0] == "-" else 1
        coeff = sign
        z_exp = t_exp = 0
        for factor in tok[1:].split("*"):
            m = _FACTOR_RE.match(factor)
            if m is None:
                raise ValueError(f"bad factor {factor!r} in polynomial text: {text!r}")
            digits, var, exp = m.groups()
            if digits is not None:
                coeff *= int(digits)
            elif var == "z":
                z_exp += int(exp) if exp else 1
            else:
                t_exp += int(exp) if exp else 1
        k = _pack(z_exp, t_exp)
        v = out.get(k, 0) + coeff
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def _monomial_text(coeff: int, z_exp: int, t_exp: int) -> str:
    factors = []
    if abs(coeff) != 1 or (z_exp == 0 and t_exp == 0):
        factors.append(str(abs(coeff)))
    if z_exp:
        factors.append("z" if z_exp == 1 else f"z^{z_exp}")
    if t_exp:
        factors.append("t" if t_exp == 1 else f"t^{t_exp}")
    return "*".join(factors)


def _render_terms(terms: dict) -> str:
    if not terms:
        return "0"
    order = sorted(
        ((ze + te, ze, te, c) for (ze, te), c in
         (((k >> _SHIFT, k & _TMASK), c) for k, c in terms.items()))
    )
    parts = []
    for pos, (_, ze, te, c) in enumerate(order):
        mono = _monomial_text(c, ze, te)
        if pos == 0:
            parts.append("-" + mono if c < 0 else mono)
        else:
            parts.append((" - " if c < 0 else " + ") + mono)
    return "".join(parts)


# ---------------------------------------------------------------------------


class BiPoly:
    """Sparse polynomial in z and t over the integers."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        # terms maps packed exponent keys to nonzero coefficients; the dict
        # is owned by the instance and must not be mutated afterwards
        self.terms = terms if terms else {}

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({0: 1})

    @classmethod
    def term(cls, coeff: int, z: int = 0, t: int = 0) -> "BiPoly":
        return cls({_pack(z, t): coeff} if coeff else {})

    @classmethod
    def from_pairs(cls, pairs) -> "BiPoly":
        items = pairs.items() if isinstance(pairs, dict) else pairs
        out: dict = {}
        for (z_exp, t_exp), c in items:
            k = _pack(z_exp, t_exp)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        return cls(_parse_terms(text))

    def pairs(self) -> dict:
        return {(k >> _SHIFT, k & _TMASK): c for k, c in self.terms.items()}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree_z(self) -> int:
        return max((k >> _SHIFT for k in self.terms), default=0)

    @property
    def degree_t(self) -> int:
        return max((k & _TMASK for k in self.terms), default=0)

    def constant(self) -> int:
        """Coefficient of z^0 t^0."""
        return self.terms.get(0, 0)

    def coeff(self, z: int, t: int) -> int:
        return self.terms.get(_pack(z, t), 0)

    def content(self) -> int:
        return _content(self.terms)

    def scaled(self, c: int) -> "BiPoly":
        return BiPoly(_scale_terms(self.terms, c))

    def substitute_t(self, value: int) -> "BiPoly":
        return BiPoly(_subs_t_terms(self.terms, value))

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        return BiPoly(_exact_div_terms(self.terms, other.terms))

    def __add__(self, other):
        return BiPoly(_add_terms(self.terms, other.terms))

    def __sub__(self, other):
        return BiPoly(_add_terms(self.terms, _neg_terms(other.terms)))

    def __mul__(self, other):
        return BiPoly(_mul_terms(self.terms, other.terms))

    def __neg__(self):
        return BiPoly(_neg_terms(self.terms))

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.terms == other.terms

    __hash__ = None

    def render(self) -> str:
        return _render_terms(self.terms)

    def __repr__(self):
        return f"BiPoly({self.render()})"


class PolyT:
    """Sparse polynomial in t alone."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict | None = None):
        self.coeffs = coeffs if coeffs else {}

    @classmethod
    def from_list(cls, values) -> "PolyT":
        return cls({k: c for k, c in enumerate(values) if c})

    def coeff(self, k: int) -> int:
        return self.coeffs.get(k, 0)

    def as_list(self, length: int | None = None) -> list:
        """Coefficients c0..; trailing zeros trimmed unless length is given."""
        if length is None:
            length = max(self.coeffs, default=-1) + 1
        return [self.coeffs.get(k, 0) for k in range(length)]

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return PolyT(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            elif k in out:
                del out[k]
        return PolyT(out)

    def __mul__(self, other):
        out: dict = {}
        get = out.get
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                k = ka + kb
                v = get(k, 0) + ca * cb
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return PolyT(out)

    def __eq__(self, other):
        return isinstance(other, PolyT) and self.coeffs == other.coeffs

    __hash__ = None

    def render(self) -> str:
        return _render_terms({_pack(0, k): c for k, c in self.coeffs.items()})

    def __repr__(self):
        return f"PolyT({self.render()})"


class RatFun:
    """Ratio of two BiPoly in canonical form.

    Construction removes the integer content shared by numerator and
    denominator and flips signs so the denominator's constant term is
    positive.  A zero or constant-term-free denominator is rejected:
    every series this library produces is a power series in z with unit
    constant denominator term, so such input signals a usage error.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: BiPoly, den: BiPoly):
        if den.is_zero:
            raise ValueError("zero denominator")
        nt, dt = num.terms, den.terms
        g = gcd(_content(nt), _content(dt))
        if g > 1:
            nt = {k: c // g for k, c in nt.items()}
            dt = {k: c // g for k, c in dt.items()}
        c0 = dt.get(0, 0)
        if c0 == 0:
            raise ValueError("denominator constant term is zero")
        if c0 < 0:
            nt = _neg_terms(nt)
            dt = _neg_terms(dt)
        self.num = BiPoly(nt)
        self.den = BiPoly(dt)

    @classmethod
    def parse(cls, text: str) -> "RatFun":
        num_text, den_text = _split_ratio(text)
        return cls(BiPoly.parse(num_text), BiPoly.parse(den_text))

    def substitute_t(self, value: int) -> "RatFun":
        den = self.den.substitute_t(value)
        if den.is_zero:
            raise ValueError(f"substituting t={value} degenerates the denominator")
        return RatFun(self.num.substitute_t(value), den)

    def equivalent(self, other: "RatFun") -> bool:
        """Equality as rational functions, decided by cross-multiplication."""
        return _mul_terms(self.num.terms, other.den.terms) == _mul_terms(
            other.num.terms, self.den.terms
        )

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    __hash__ = None

    def render(self) -> str:
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RatFun({self.render()})"


def ratfun_eq(a: RatFun, b: RatFun) -> bool:
    return a.equivalent(b)


def _split_ratio(text: str) -> tuple[str, str]:
    """Split "(num) / (den)" at the single top-level slash."""
    depth = 0
    slash = -1
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses: {text!r}")
        elif ch == "/" and depth == 0:
            if slash >= 0:
                raise ValueError(f"more than one top-level '/': {text!r}")
            slash = pos
    if depth != 0:
        raise ValueError(f"unbalanced parentheses: {text!r}")
    if slash < 0:
        raise ValueError(f"missing '/' in rational function text: {text!r}")
    return _strip_outer_parens(text[:slash]), _strip_outer_parens(text[slash + 1:])


def _strip_outer_parens(text: str) -> str:
    s = text.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        enclosing = True
        for pos, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and pos != len(s) - 1:
                    enclosing = False
                    break
        if not enclosing:
            break
        s = s[1:-1].strip()
    return s
