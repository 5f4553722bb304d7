"""Exact multivariate polynomial arithmetic, term orders and monomial tools.

Monomials are exponent tuples of length ``ring.nvars``.  Polynomials map
monomials to nonzero ``Fraction`` coefficients.  Everything is immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction


class RingMismatch(ValueError):
    """Operands live in different ring contexts."""


class ParseError(ValueError):
    """Malformed polynomial or file input; message carries line/column."""


class Ring:
    """A polynomial ring context: variable count and precedence x1 > x2 > ...

    Variable names default to x1..xN; position in the list defines the
    precedence used by both supported term orders.
    """

    __slots__ = ("nvars", "names")

    def __init__(self, nvars, names=None):
        if nvars < 1:
            raise ValueError("ring needs at least one variable")
        self.nvars = nvars
        self.names = tuple(names) if names else tuple(f"x{i+1}" for i in range(nvars))
        if len(self.names) != nvars or len(set(self.names)) != nvars:
            raise ValueError("variable names must be distinct, one per variable")

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({self.nvars})"

    def variable(self, i):
        """The monomial x_i (1-based)."""
        if not 1 <= i <= self.nvars:
            raise ValueError(f"variable index {i} out of range")
        return tuple(1 if j == i - 1 else 0 for j in range(self.nvars))

    @property
    def one(self):
        return (0,) * self.nvars

    def monomials(self, d):
        """All monomials of total degree d, in no particular order."""
        def rec(pos, left):
            if pos == self.nvars - 1:
                yield (left,)
                return
            for e in range(left + 1):
                for rest in rec(pos + 1, left - e):
                    yield (e,) + rest
        if d < 0:
            return iter(())
        return rec(0, d)

    def monomials_desc(self, order, d):
        """Degree-d monomials sorted descending in the given term order."""
        return sorted(self.monomials(d), key=order.key, reverse=True)


# ---------------------------------------------------------------------------
# term orders
# ---------------------------------------------------------------------------

class Order:
    """A degree-compatible term order refining x1 > x2 > ... > xN.

    kind "rlex": ties broken by the last nonzero entry of a-b (positive
    means a smaller).  kind "lex": ties broken by the first nonzero entry
    (negative means a smaller).
    """

    __slots__ = ("kind",)

    def __init__(self, kind):
        if kind not in ("rlex", "lex"):
            raise ValueError(f"unknown term order {kind!r}")
        self.kind = kind

    def key(self, mono):
        if self.kind == "rlex":
            return (sum(mono), tuple(-e for e in reversed(mono)))
        return (sum(mono), mono)

    def compare(self, a, b):
        """-1, 0 or 1 as a <, =, > b."""
        if len(a) != len(b):
            raise RingMismatch("monomials from different rings")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, Order) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return self.kind


RLEX = Order("rlex")
LEX = Order("lex")


def order_by_name(name):
    try:
        return {"rlex": RLEX, "lex": LEX}[name]
    except KeyError:
        raise ValueError(f"unknown term order {name!r}") from None


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_divides(a, b):
    """a | b as monomials."""
    return all(x <= y for x, y in zip(a, b))

def mono_div(b, a):
    """b / a, assuming a | b."""
    return tuple(y - x for x, y in zip(a, b))

def degree(mono):
    return sum(mono)


def min_index(mono):
    """Smallest variable index (1-based) with positive exponent; 1 for the unit."""
    for i, e in enumerate(mono):
        if e > 0:
            return i + 1
    return 1


def shadow(ring, mono, order=RLEX):
    """Sh(a): the monomials x_i * a for 1 <= i <= min(a), sorted order-descending.

    Every element b satisfies b / x_min(b) = a, and |Sh(a)| = min_index(a).
    """
    out = []
    for i in range(1, min_index(mono) + 1):
        out.append(mono_mul(mono, ring.variable(i)))
    out.sort(key=order.key, reverse=True)
    return out


def max_shadow(ring, mono, order=RLEX):
    return shadow(ring, mono, order)[0]

def min_shadow(ring, mono, order=RLEX):
    return shadow(ring, mono, order)[-1]


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Poly:
    """Immutable polynomial: dict monomial -> nonzero Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        clean = {}
        for m, c in terms.items():
            if len(m) != ring.nvars:
                raise RingMismatch("monomial length does not match ring")
            c = Fraction(c)
            if c:
                clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def monomial(cls, ring, mono, coeff=1):
        return cls(ring, {tuple(mono): Fraction(coeff)})

    @classmethod
    def variable(cls, ring, i):
        return cls.monomial(ring, ring.variable(i))

    # -- predicates ---------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.frozen()))

    def frozen(self):
        """Canonical hashable form (sorted term tuple)."""
        return tuple(sorted(self.terms.items()))

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def leading_monomial(self, order):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coeff(self, order):
        return self.terms[self.leading_monomial(order)]

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatch("polynomials from different rings")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly(self.ring, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    del terms[m]
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return Poly(self.ring, {m: c * v for m, v in self.terms.items()})

    def monic(self, order):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coeff(order))

    def term_mul(self, mono, coeff=1):
        """Multiply by coeff * x^mono."""
        coeff = Fraction(coeff)
        return Poly(self.ring, {mono_mul(m, mono): c * coeff
                                for m, c in self.terms.items()})

    # -- the contraction operator tau ---------------------------------

    def contract_mono(self, a):
        """tau_{x^a} applied to self: x^b -> x^{b-a} when a | b, else drops."""
        terms = {}
        for m, c in self.terms.items():
            if mono_divides(a, m):
                q = mono_div(m, a)
                s = terms.get(q, 0) + c
                if s:
                    terms[q] = s
                else:
                    del terms[q]
        return Poly(self.ring, terms)

    # -- substitution and embedding ------------------------------------

    def substitute(self, matrix):
        """Linear substitution x_i -> sum_j M[j][i] x_j (columns are images)."""
        n = self.ring.nvars
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("substitution matrix must be square of size nvars")
        images = [Poly(self.ring,
                       {self.ring.variable(j + 1): Fraction(matrix[j][i])
                        for j in range(n) if matrix[j][i]})
                  for i in range(n)]
        # cache powers of each image
        powers = [[Poly.monomial(self.ring, self.ring.one)] for _ in range(n)]
        result = Poly.zero(self.ring)
        for m, c in self.terms.items():
            factor = Poly.monomial(self.ring, self.ring.one, c)
            for i, e in enumerate(m):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * images[i])
                if e:
                    factor = factor * powers[i][e]
            result = result + factor
        return result

    def embed(self, target, offset=0):
        """Relabel variable i to variable i+offset inside a larger ring."""
        if self.ring.nvars + offset > target.nvars:
            raise RingMismatch("embedding overflows the target ring")
        pad_lo = (0,) * offset
        pad_hi = (0,) * (target.nvars - offset - self.ring.nvars)
        return Poly(target, {pad_lo + m + pad_hi: c for m, c in self.terms.items()})

    # -- text ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: RLEX.key(t[0]), reverse=True)
        parts = []
        for m, c in items:
            parts.append(("- " if c < 0 else "+ ") + _term_str(self.ring, m, abs(c)))
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def _term_str(ring, mono, coeff):
    facs = []
    for i, e in enumerate(mono):
        if e == 1:
            facs.append(ring.names[i])
        elif e > 1:
            facs.append(f"{ring.names[i]}^{e}")
    if not facs:
        return str(coeff)
    body = "*".join(facs)
    return body if coeff == 1 else f"{coeff}*{body}"


def contract(g, l):
    """tau_g(l): bilinear extension of the monomial contraction rule.

    Satisfies tau_{gh}(l) = tau_g(tau_h(l)).
    """
    if g.ring != l.ring:
        raise RingMismatch("contraction operands from different rings")
    out = Poly.zero(l.ring)
    for a, c in g.terms.items():
        out = out + l.contract_mono(a).scale(c)
    return out


# ---------------------------------------------------------------------------
# parsing:  3/2*x1^2*x3 - x2*x4
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<rat>\d+(?:/\d+)?)|(?P<var>x\d+)"
                    r"|(?P<pow>\^\d+)|(?P<mul>\*))")


def parse_poly(text, ring, line=None):
    """Parse the polynomial grammar into a Poly.

    Grammar: terms joined by +/-; term = [rational][*]factor(*factor)*;
    factor = x<k>[^<e>].  Whitespace is ignored.
    """
    where = f"line {line}, " if line is not None else ""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start() == pos and not text[pos:].strip():
            break
        if not m:
            raise ParseError(f"{where}col {pos+1}: unexpected character {text[pos]!r}")
        pos = m.end()
        kind = m.lastgroup
        if kind:
            tokens.append((kind, m.group(kind), m.start(kind)))
    if text[pos:].strip():
        raise ParseError(f"{where}col {pos+1}: unexpected character {text[pos:].strip()[0]!r}")

    terms = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
            first = False
        if i == len(tokens):
            raise ParseError(f"{where}col {len(text)}: dangling sign")
        coeff = Fraction(sign)
        mono = list(ring.one)
        seen_factor = False
        if tokens[i][0] == "rat":
            try:
                coeff *= Fraction(tokens[i][1])
            except ZeroDivisionError:
                raise ParseError(f"{where}col {tokens[i][2]+1}: zero "
                                 "denominator") from None
            i += 1
            if i < len(tokens) and tokens[i][0] == "mul":
                i += 1
        while i < len(tokens) and tokens[i][0] == "var":
            idx = int(tokens[i][1][1:])
            col = tokens[i][2] + 1
            if not 1 <= idx <= ring.nvars:
                raise ParseError(f"{where}col {col}: variable x{idx} outside ring with "
                                 f"{ring.nvars} variables")
            e = 1
            i += 1
            if i < len(tokens) and tokens[i][0] == "pow":
                e = int(tokens[i][1][1:])
                i += 1
            mono[idx - 1] += e
            seen_factor = True
            if i < len(tokens) and tokens[i][0] == "mul":
                i += 1
                if i == len(tokens) or tokens[i][0] != "var":
                    col = len(text) if i == len(tokens) else tokens[i][2] + 1
                    raise ParseError(f"{where}col {col}: expected a factor after '*'")
        if not seen_factor and coeff in (1, -1) and tokens[i - 1][0] != "rat":
            col = tokens[i][2] + 1 if i < len(tokens) else len(text)
            raise ParseError(f"{where}col {col}: expected a term")
        key = tuple(mono)
        s = terms.get(key, 0) + coeff
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)
        first = False
    return Poly(ring, terms)
