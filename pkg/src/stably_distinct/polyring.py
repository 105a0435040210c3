"""Sparse multivariate polynomials over exact scalars.

The ambient ring is Q[x1..xn, y, z] or Q[x1..xn, y, z, w] (scalars may
live in one quadratic extension, see exactfield).  A polynomial is a
dict mapping exponent tuples to nonzero coefficients; the variable
order is x1 < ... < xn < y < z < w and exponent tuples follow it.

Canonical text form sorts terms graded-lexicographically, highest
first, e.g. "x1^2*x2^2*y + z^2 - 1/2".  ``parse_polynomial`` accepts
exactly that shape (plus flexible whitespace and parenthesized
quadratic-extension coefficients) and round-trips with str().

Intermediate results are capped at 10^6 terms; the environment variable
STABLY_DISTINCT_TERM_LIMIT overrides the cap.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

from .errors import (DivisionByZeroPolynomial, NotDivisible, ParseError,
                     ResourceLimit, SignatureMismatch, UnknownVariable)
from .exactfield import QuadExt, as_scalar, parse_scalar, scalar_to_text

_DEFAULT_TERM_LIMIT = 10 ** 6


def term_limit() -> int:
    value = os.environ.get("STABLY_DISTINCT_TERM_LIMIT")
    return int(value) if value else _DEFAULT_TERM_LIMIT


class RingSignature:
    """Shape of the ambient ring: n base variables, optional extra w."""

    __slots__ = ("n", "has_w", "names", "_index")

    def __init__(self, n: int, has_w: bool = False):
        if n < 1:
            raise ValueError("need at least one x variable")
        self.n = n
        self.has_w = bool(has_w)
        names = tuple("x%d" % (i + 1) for i in range(n)) + ("y", "z")
        if has_w:
            names += ("w",)
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def y_index(self) -> int:
        return self.n

    @property
    def z_index(self) -> int:
        return self.n + 1

    @property
    def w_index(self) -> int:
        if not self.has_w:
            raise UnknownVariable("signature has no w")
        return self.n + 2

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable("no variable %r in %r" % (name, self)) from None

    def __eq__(self, other):
        return (isinstance(other, RingSignature)
                and self.n == other.n and self.has_w == other.has_w)

    def __hash__(self):
        return hash((self.n, self.has_w))

    def __repr__(self):
        return "RingSignature(n=%d, has_w=%s)" % (self.n, self.has_w)


def _grlex_key(exps):
    return (sum(exps), exps)


def _check_sig(a, b):
    if a.sig != b.sig:
        raise SignatureMismatch("%r vs %r" % (a.sig, b.sig))


class Polynomial:
    """Immutable-by-convention sparse polynomial."""

    __slots__ = ("sig", "terms")

    def __init__(self, sig: RingSignature, terms: dict):
        self.sig = sig
        self.terms = terms  # trusted: no zero coefficients

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, sig):
        return cls(sig, {})

    @classmethod
    def constant(cls, sig, value):
        value = as_scalar(value)
        if not value:
            return cls(sig, {})
        return cls(sig, {(0,) * sig.nvars: value})

    @classmethod
    def variable(cls, sig, name):
        exps = [0] * sig.nvars
        exps[sig.index(name)] = 1
        return cls(sig, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, sig, exps, coeff=1):
        exps = tuple(exps)
        if len(exps) != sig.nvars or any(e < 0 for e in exps):
            raise ValueError("bad exponent tuple %r" % (exps,))
        coeff = as_scalar(coeff)
        if not coeff:
            return cls(sig, {})
        return cls(sig, {exps: coeff})

    @classmethod
    def from_terms(cls, sig, terms):
        clean = {}
        for exps, coeff in terms.items():
            coeff = as_scalar(coeff)
            if coeff:
                clean[tuple(exps)] = coeff
        return cls(sig, clean)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def term_count(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        if not self.terms:
            return -1
        idx = self.sig.index(name)
        return max(e[idx] for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.sig.nvars, Fraction(0))

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]),
                      reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms, key=_grlex_key)
        return exps, self.terms[exps]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            _check_sig(self, other)
            return other
        if isinstance(other, (int, Fraction, QuadExt)):
            return Polynomial.constant(self.sig, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self.terms)
        _add_into(result, other.terms)
        return Polynomial(self.sig, result)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.sig, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self.terms)
        _sub_into(result, other.terms)
        return Polynomial(self.sig, result)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QuadExt)):
            if not other:
                return Polynomial.zero(self.sig)
            return Polynomial(self.sig,
                              {e: c * other for e, c in self.terms.items()})
        if isinstance(other, Polynomial):
            _check_sig(self, other)
            return Polynomial(self.sig, _mul_terms(self.terms, other.terms))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, int):
            scalar = Fraction(scalar)
        if isinstance(scalar, (Fraction, QuadExt)):
            return self * (1 / scalar if isinstance(scalar, Fraction)
                           else scalar ** -1)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.sig, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.sig == other.sig and self.terms == other.terms
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.terms == Polynomial.constant(self.sig, other).terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- calculus / substitution -----------------------------------------

    def partial_derivative(self, name: str):
        idx = self.sig.index(name)
        result = {}
        for exps, coeff in self.terms.items():
            e = exps[idx]
            if e:
                newexps = exps[:idx] + (e - 1,) + exps[idx + 1:]
                c = coeff * e
                prev = result.get(newexps)
                c = c if prev is None else prev + c
                if c:
                    result[newexps] = c
                elif prev is not None:
                    del result[newexps]
        return Polynomial(self.sig, result)

    def substitute(self, images: dict):
        """Simultaneously replace variables by polynomials (or scalars).

        Variables absent from ``images`` are left alone.  This is the ring
        homomorphism determined by the generator images.
        """
        sig = self.sig
        lifted = {}
        for name, img in images.items():
            idx = sig.index(name)
            if not isinstance(img, Polynomial):
                img = Polynomial.constant(sig, img)
            elif img.sig != sig:
                raise SignatureMismatch("image of %s has %r, expected %r"
                                        % (name, img.sig, sig))
            lifted[idx] = img
        if not lifted:
            return self
        touched = sorted(lifted)
        touched_set = set(touched)
        power_cache = {idx: {} for idx in touched}
        limit = term_limit()
        result = {}
        for exps, coeff in self.terms.items():
            base = tuple(0 if i in touched_set else e for i, e in enumerate(exps))
            acc = {base: coeff}
            for idx in touched:
                e = exps[idx]
                if e == 0:
                    continue
                acc = _mul_terms(acc, _cached_power(power_cache[idx],
                                                    lifted[idx], e))
            _add_into(result, acc)
            if len(result) > limit:
                raise ResourceLimit("substitution exceeded %d terms" % limit)
        return Polynomial(sig, result)

    def evaluate(self, point: dict):
        """Exact value at a point given as {variable name: scalar}."""
        sig = self.sig
        values = []
        for name in sig.names:
            if name not in point:
                raise UnknownVariable("point missing variable %r" % name)
            values.append(as_scalar(point[name]))
        caches = [{0: Fraction(1), 1: v} for v in values]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            prod = coeff
            for i, e in enumerate(exps):
                if e:
                    cache = caches[i]
                    pw = cache.get(e)
                    if pw is None:
                        pw = values[i] ** e
                        cache[e] = pw
                    prod = prod * pw
            total = total + prod
        return total

    def embed(self, new_sig: RingSignature):
        """Reinterpret in a signature with the same n (adding or dropping w).

        Dropping w is only legal when w does not occur.
        """
        if new_sig.n != self.sig.n:
            raise SignatureMismatch("cannot embed %r into %r"
                                    % (self.sig, new_sig))
        if new_sig == self.sig:
            return self
        if new_sig.nvars < self.sig.nvars:
            widx = self.sig.w_index
            if any(e[widx] for e in self.terms):
                raise SignatureMismatch("polynomial uses w")
            return Polynomial(new_sig,
                              {e[:-1]: c for e, c in self.terms.items()})
        return Polynomial(new_sig,
                          {e + (0,): c for e, c in self.terms.items()})

    # -- text -------------------------------------------------------------

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        text = poly_to_text(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return "Polynomial(%r, %s)" % (self.sig, text)


# -- raw term-dict helpers (hot paths) ------------------------------------

def _add_into(acc: dict, terms: dict):
    for exps, coeff in terms.items():
        prev = acc.get(exps)
        if prev is None:
            acc[exps] = coeff
        else:
            s = prev + coeff
            if s:
                acc[exps] = s
            else:
                del acc[exps]


def _sub_into(acc: dict, terms: dict):
    for exps, coeff in terms.items():
        prev = acc.get(exps)
        if prev is None:
            acc[exps] = -coeff
        else:
            s = prev - coeff
            if s:
                acc[exps] = s
            else:
                del acc[exps]


def _mul_terms(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    limit = term_limit()
    result = {}
    b_items = list(b.items())
    for ea, ca in a.items():
        for eb, cb in b_items:
            key = tuple(map(sum, zip(ea, eb)))
            c = ca * cb
            prev = result.get(key)
            if prev is None:
                result[key] = c
            else:
                s = prev + c
                if s:
                    result[key] = s
                else:
                    del result[key]
        if len(result) > limit:
            raise ResourceLimit("product exceeded %d terms" % limit)
    return result


def _cached_power(cache: dict, poly: Polynomial, e: int) -> dict:
    """Term dict of poly**e for e >= 1, filling the cache incrementally."""
    if 1 not in cache:
        cache[1] = poly.terms
    have = max(k for k in cache if k <= e)
    current = cache[have]
    while have < e:
        current = _mul_terms(current, cache[1])
        have += 1
        cache[have] = current
    return current


# -- named constructions --------------------------------------------------

def x_power_bracket(sig: RingSignature, k: int) -> Polynomial:
    """(x1*...*xn)^k as a polynomial; k = 0 gives 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    exps = tuple([k] * sig.n + [0] * (sig.nvars - sig.n))
    return Polynomial(sig, {exps: Fraction(1)})


def exact_divide(p: Polynomial, d: Polynomial) -> Polynomial:
    """Quotient p/d when d divides p exactly; otherwise NotDivisible.

    Single-divisor graded-lex division: on exact multiples the leading
    term is always divisible, so this terminates with zero remainder
    precisely on multiples.
    """
    if d.is_zero():
        raise DivisionByZeroPolynomial("division by zero polynomial")
    _check_sig(p, d)
    lead_exps, lead_coeff = d.leading_term()
    remaining = dict(p.terms)
    quotient = {}
    while remaining:
        exps = max(remaining, key=_grlex_key)
        coeff = remaining[exps]
        qexps = tuple(a - b for a, b in zip(exps, lead_exps))
        if any(e < 0 for e in qexps):
            raise NotDivisible("remainder has leading term %s"
                               % _monomial_text(p.sig, exps, coeff))
        qcoeff = coeff / lead_coeff
        quotient[qexps] = qcoeff
        _sub_into(remaining, _mul_terms({qexps: qcoeff}, d.terms))
    return Polynomial(p.sig, quotient)


def rewrite_single_rule(p: Polynomial, lhs_exps, rhs: Polynomial):
    """Normal form of p under the rewrite  monomial(lhs) -> rhs.

    Requires a variable v with lhs exponent > 0 such that every monomial
    of rhs has smaller v-exponent; the multiset of v-degrees then drops
    strictly at each step, so the rewrite terminates and (for a single
    rule) the normal form is unique.  Returns (normal_form, steps).
    """
    lhs_exps = tuple(lhs_exps)
    _check_sig(p, rhs)
    witness = None
    for i, le in enumerate(lhs_exps):
        if le > 0 and all(e[i] < le for e in rhs.terms):
            witness = i
            break
    if witness is None:
        raise ValueError("rewrite rule has no decreasing variable")
    current = dict(p.terms)
    steps = 0
    while True:
        reducible = [e for e in current
                     if all(a >= b for a, b in zip(e, lhs_exps))]
        if not reducible:
            break
        for exps in reducible:
            coeff = current.pop(exps)
            shift = tuple(a - b for a, b in zip(exps, lhs_exps))
            _add_into(current, _mul_terms({shift: coeff}, rhs.terms))
            steps += 1
    return Polynomial(p.sig, current), steps


# -- random evaluation (Schwartz-Zippel support) --------------------------

def random_rational(rng, bound: int = 10 ** 4) -> Fraction:
    """Random rational with numerator and denominator bounded by ``bound``."""
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_point(sig: RingSignature, rng, bound: int = 10 ** 4) -> dict:
    return {name: random_rational(rng, bound) for name in sig.names}


def random_evaluate(p: Polynomial, rng, bound: int = 10 ** 4):
    """Value of p at a fresh random rational point drawn from rng.

    Two polynomials evaluated with identically-seeded generators see the
    same point, which makes this usable as an identity spot check.
    """
    return p.evaluate(random_point(p.sig, rng, bound))


# -- canonical text form --------------------------------------------------

def _coeff_text(coeff) -> str:
    if isinstance(coeff, QuadExt):
        return "(%s)" % scalar_to_text(coeff)
    return scalar_to_text(coeff)


def _monomial_text(sig, exps, coeff) -> str:
    factors = []
    for name, e in zip(sig.names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append("%s^%d" % (name, e))
    if not factors:
        return _coeff_text(coeff)
    body = "*".join(factors)
    if coeff == 1:
        return body
    if coeff == -1:
        return "-" + body
    return "%s*%s" % (_coeff_text(coeff), body)


def poly_to_text(p: Polynomial) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for exps, coeff in p.sorted_terms():
        if isinstance(coeff, Fraction) and coeff < 0:
            sign = "-"
            body = _monomial_text(p.sig, exps, -coeff)
        else:
            sign = "+"
            body = _monomial_text(p.sig, exps, coeff)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = [first_body if first_sign == "+" else "-" + first_body]
    for sign, body in pieces[1:]:
        out.append(" %s %s" % (sign, body))
    return "".join(out)


_TOKEN_RE = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>x\d+|y|z|w)|"
                       r"(?P<sqrt>sqrt)|(?P<op>[-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip() == "":
                break
            raise ParseError("unexpected character %r" % text[pos], pos)
        if m.group("num"):
            tokens.append(("num", m.group("num"), m.start("num")))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        elif m.group("sqrt"):
            tokens.append(("sqrt", "sqrt", m.start("sqrt")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, sig, tokens):
        self.sig = sig
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, value, pos = self.take()
        if kind != "op" or value != op:
            raise ParseError("expected %r" % op, pos)

    def parse(self) -> Polynomial:
        terms = {}
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        while True:
            exps, coeff = self.parse_term()
            coeff = coeff * sign
            prev = terms.get(exps)
            c = coeff if prev is None else prev + coeff
            if c:
                terms[exps] = c
            elif prev is not None:
                del terms[exps]
            kind, value, pos = self.peek()
            if kind == "end":
                break
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
                continue
            raise ParseError("expected '+' or '-'", pos)
        return Polynomial(self.sig, terms)

    def parse_term(self):
        coeff = Fraction(1)
        exps = [0] * self.sig.nvars
        saw_element = False
        while True:
            kind, value, pos = self.peek()
            if kind == "num":
                self.take()
                coeff = coeff * Fraction(value)
                saw_element = True
            elif kind == "op" and value == "(":
                coeff = coeff * self.parse_paren_scalar()
                saw_element = True
            elif kind == "name":
                self.take()
                idx = self._var_index(value, pos)
                e = 1
                k2, v2, p2 = self.peek()
                if k2 == "op" and v2 == "^":
                    self.take()
                    k3, v3, p3 = self.take()
                    if k3 != "num" or "/" in v3:
                        raise ParseError("expected integer exponent", p3)
                    e = int(v3)
                exps[idx] += e
                saw_element = True
            else:
                raise ParseError("expected coefficient or variable", pos)
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.take()
                continue
            break
        if not saw_element:
            raise ParseError("empty term", self.peek()[2])
        return tuple(exps), coeff

    def _var_index(self, name, pos):
        try:
            return self.sig.index(name)
        except UnknownVariable:
            raise ParseError("variable %r outside signature" % name, pos) from None

    def parse_paren_scalar(self):
        kind, value, pos = self.take()  # the '('
        depth_start = pos
        parts = []
        depth = 1
        while depth:
            kind, value, pos = self.take()
            if kind == "end":
                raise ParseError("unbalanced parenthesis", depth_start)
            if kind == "op" and value == "(":
                depth += 1
            elif kind == "op" and value == ")":
                depth -= 1
                if depth == 0:
                    break
            parts.append(value)
        try:
            return parse_scalar("".join(parts))
        except ParseError:
            raise ParseError("bad scalar coefficient", depth_start) from None


def parse_polynomial(sig: RingSignature, text: str) -> Polynomial:
    """Parse canonical polynomial text; inverse of str() on polynomials."""
    tokens = _tokenize(text)
    if tokens[0][0] == "end":
        raise ParseError("empty polynomial text", 0)
    if tokens[0] == ("num", "0", 0) and tokens[1][0] == "end":
        return Polynomial.zero(sig)
    return _Parser(sig, tokens).parse()


# -- dense univariate polynomials in t ------------------------------------

class UnivariatePoly:
    """Dense univariate polynomial q(t), constant coefficient first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def from_csv(cls, text: str):
        """Comma-separated coefficients, constant first: '-1,1' is t - 1."""
        parts = [p.strip() for p in text.split(",")]
        if parts == [""]:
            raise ParseError("empty coefficient list")
        return cls(tuple(parse_scalar(p) for p in parts))

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def support(self):
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, QuadExt)):
            return self.coeffs == UnivariatePoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UnivariatePoly):
            other = UnivariatePoly((other,))
        size = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, UnivariatePoly)
                       else UnivariatePoly((other,)).__neg__())

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, UnivariatePoly):
            if not self.coeffs or not other.coeffs:
                return UnivariatePoly(())
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return UnivariatePoly(tuple(out))
        return UnivariatePoly(tuple(c * other for c in self.coeffs))

    __rmul__ = __mul__

    def derivative(self):
        return UnivariatePoly(tuple(c * i for i, c in
                                    enumerate(self.coeffs) if i >= 1))

    def scale_argument(self, mu):
        """q(mu * t)."""
        pw = Fraction(1)
        out = []
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * mu
        return UnivariatePoly(tuple(out))

    def subs_into(self, inner: Polynomial) -> Polynomial:
        """q evaluated at a multivariate polynomial, by Horner."""
        sig = inner.sig
        acc = Polynomial.zero(sig)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def to_texts(self):
        return [scalar_to_text(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            if isinstance(c, Fraction) and c < 0:
                sign, mag = "-", -c
            else:
                sign, mag = "+", c
            if mono and mag == 1:
                body = mono
            elif mono:
                body = "%s*%s" % (_coeff_text(mag), mono)
            else:
                body = _coeff_text(mag)
            pieces.append((sign, body))
        out = [pieces[0][1] if pieces[0][0] == "+" else "-" + pieces[0][1]]
        for sign, body in pieces[1:]:
            out.append(" %s %s" % (sign, body))
        return "".join(out)

    def __repr__(self):
        return "UnivariatePoly(%s)" % (self.coeffs,)


def difference_quotient(q: UnivariatePoly, c) -> UnivariatePoly:
    """g with q(t) - q(c) = g(t) * (t - c), via synthetic division."""
    c = as_scalar(c)
    deg = q.degree()
    if deg < 1:
        return UnivariatePoly.zero()
    b = [Fraction(0)] * deg
    b[deg - 1] = q[deg]
    for i in range(deg - 1, 0, -1):
        b[i - 1] = q[i] + c * b[i]
    return UnivariatePoly(tuple(b))


def half_t_quotient(q: UnivariatePoly) -> UnivariatePoly:
    """r with q(t) - q(0) = 2 * t * r(t)."""
    return UnivariatePoly(tuple(c / 2 for c in q.coeffs[1:]))
