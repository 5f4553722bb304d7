"""Text formats for ideals and simplicial complexes.

Ideal files:

    ring 5            (or: ring 2+3 for a two-block ring)
    # comments and blank lines are ignored
    x1^2 - 3/2*x2*x3

Complex files:

    vertices 4
    1,2,3
    -                 (a lone dash is the empty face)
"""

from __future__ import annotations

from .constructions import SplitRing
from .groebner import Ideal
from .ring import ParseError, Ring, parse_poly
from .simplicial import SimplicialComplex


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_ideal(text):
    """Returns (ideal, split) where split is a SplitRing for a `ring n+m`
    header and None otherwise."""
    it = _lines(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise ParseError("empty input: expected a `ring <n>` header") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "ring":
        raise ParseError(f"line {lineno}: expected `ring <n>` or `ring <n>+<m>`, "
                         f"got {header!r}")
    split = None
    if "+" in parts[1]:
        try:
            n, m = (int(p) for p in parts[1].split("+"))
        except ValueError:
            raise ParseError(f"line {lineno}: bad block sizes {parts[1]!r}") from None
        if n < 1 or m < 1:
            raise ParseError(f"line {lineno}: block sizes must be positive")
        split = SplitRing(n, m)
        ring = split.big
    else:
        try:
            nvars = int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: bad variable count {parts[1]!r}") from None
        if nvars < 1:
            raise ParseError(f"line {lineno}: need at least one variable")
        ring = Ring(nvars)
    gens = []
    for lineno, line in it:
        p = parse_poly(line, ring, line=lineno)
        if not p:
            continue
        if not p.is_homogeneous():
            raise ParseError(f"line {lineno}: generator {line!r} is not "
                             "homogeneous")
        gens.append(p)
    return Ideal(ring, gens), split


def parse_complex(text):
    it = _lines(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise ParseError("empty input: expected a `vertices <n>` header") from None
    parts = header.split()
    if len(parts) != 2 or parts[0] != "vertices":
        raise ParseError(f"line {lineno}: expected `vertices <n>`, got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
    if n < 1:
        raise ParseError(f"line {lineno}: need at least one vertex")
    facets = []
    for lineno, line in it:
        if line == "-":
            facets.append(frozenset())
            continue
        try:
            face = frozenset(int(v) for v in line.split(","))
        except ValueError:
            raise ParseError(f"line {lineno}: bad face {line!r}") from None
        for v in face:
            if not 1 <= v <= n:
                raise ParseError(f"line {lineno}: vertex {v} out of range 1..{n}")
        facets.append(face)
    if not facets:
        raise ParseError("no faces given; use `-` for the empty complex's face")
    return SimplicialComplex(n, facets)


def format_monomial_ideal(M):
    from .ring import Poly
    return "\n".join(str(Poly.monomial(M.ring, m)) for m in M.sorted_gens())


def format_ideal(I, order=None):
    gens = I.gens
    if order is not None:
        gens = sorted(gens, key=lambda p: order.key(p.leading_monomial(order)),
                      reverse=True)
    return "\n".join(str(g) for g in gens)


def format_complex(cx):
    lines = [f"vertices {cx.n}"]
    for f in sorted(cx.facets, key=lambda f: (len(f), sorted(f))):
        lines.append(",".join(str(v) for v in sorted(f)) if f else "-")
    return "\n".join(lines)
