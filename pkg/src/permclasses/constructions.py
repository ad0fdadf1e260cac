"""Named permutation groups, products, wreath products and the group-spec language.

Grammar (whitespace ignored)::

    atom := "S(" int ")" | "A(" int ")" | "C(" int ")" | "D(" int ")"
          | "M11" | "M12" | "AGL1(" prime ")"
          | "gens{degree=" int ";" perm (";" perm)* "}"
    expr := atom | "prod(" expr "," expr ")" | "wr(" expr "," expr ")"
          | "wrprod(" expr "," expr ")"

``D(m)`` is the dihedral group of order m acting on m/2 points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .core import (
    Alternating,
    Cyclic,
    Dihedral,
    DirectProduct,
    PermGroup,
    Permutation,
    PermutationError,
    Symmetric,
    WreathSym,
)
from .core.perm import MAX_DEGREE

# Standard generator pairs; M12 adds an involution fixing nothing.
_M11_GENS = ["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"]
_M12_GENS = _M11_GENS + ["(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)"]

MAX_AGL_PRIME = 97


class GroupSpecError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at column {position + 1}")
        self.message = message
        self.position = position  # 0-based; messages show the 1-based column
        self.text = text

    @property
    def column(self) -> int:
        return self.position + 1

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


# -- families ---------------------------------------------------------------


def _cycle(points: list[int], degree: int) -> Permutation:
    return Permutation.from_cycles([points], degree)


def symmetric(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("S(n) needs n >= 1")
    gens = []
    if n >= 2:
        gens = [_cycle([0, 1], n)]
    if n >= 3:
        gens.append(_cycle(list(range(n)), n))
    return PermGroup(gens, n, tag=Symmetric(n), name=f"S({n})",
                     known_order=math.factorial(n), certify=True)


def alternating(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("A(n) needs n >= 1")
    gens = []
    if n >= 3:
        gens = [_cycle([0, 1, 2], n)]
        if n >= 4:
            long = list(range(n)) if n % 2 else list(range(1, n))
            gens.append(_cycle(long, n))
    order = math.factorial(n) // 2 if n >= 2 else 1
    return PermGroup(gens, n, tag=Alternating(n), name=f"A({n})", known_order=order, certify=True)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise ValueError("C(n) needs n >= 1")
    gens = [_cycle(list(range(n)), n)] if n >= 2 else []
    return PermGroup(gens, n, tag=Cyclic(n), name=f"C({n})", known_order=n, certify=True)


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order on order/2 points (a polygon)."""
    if order % 2 or order < 6:
        raise ValueError(f"D({order}): order must be even and at least 6")
    n = order // 2
    rotation = _cycle(list(range(n)), n)
    reflection = Permutation([(-x) % n for x in range(n)])
    return PermGroup([rotation, reflection], n, tag=Dihedral(order), name=f"D({order})",
                     known_order=order, certify=True)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    factors = {q for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)}
    return next(g for g in range(2, p) if all(pow(g, (p - 1) // q, p) != 1 for q in factors))


def agl1(p: int) -> PermGroup:
    """Affine group x -> a*x + b over GF(p), acting on p points."""
    if not _is_prime(p) or p > MAX_AGL_PRIME:
        raise ValueError(f"AGL1({p}): parameter must be a prime at most {MAX_AGL_PRIME}")
    g = least_primitive_root(p)
    gens = [Permutation([(x + 1) % p for x in range(p)]), Permutation([(g * x) % p for x in range(p)])]
    return PermGroup(gens, p, name=f"AGL1({p})", known_order=p * (p - 1), certify=True)


def mathieu(which: int) -> PermGroup:
    if which == 11:
        gens, order = _M11_GENS, 7920
    elif which == 12:
        gens, order = _M12_GENS, 95040
    else:
        raise ValueError("only M11 and M12 are available")
    perms = [Permutation.parse(g, which) for g in gens]
    group = PermGroup(perms, which, name=f"M{which}")
    if group.order() != order:
        raise RuntimeError(f"M{which} generators give order {group.order()}, expected {order}")
    return group


def from_generators(degree: int, perms: list[str]) -> PermGroup:
    gens = [Permutation.parse(p, degree) for p in perms]
    name = "gens{degree=%d;%s}" % (degree, ";".join(str(g) for g in gens))
    return PermGroup(gens, degree, name=name)


# -- combinators ------------------------------------------------------------


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """G on points 0..deg G - 1, H on the following deg H points."""
    m, n = g.degree, h.degree
    if m + n > MAX_DEGREE:
        raise ValueError(f"degree {m + n} exceeds cap {MAX_DEGREE}")
    gens = [x.images + tuple(range(m, m + n)) for x in g.generators if not x.is_identity()]
    gens += [tuple(range(m)) + tuple(m + y for y in x.images) for x in h.generators if not x.is_identity()]
    name = f"prod({g.name},{h.name})" if g.name and h.name else None
    return PermGroup(gens, m + n, tag=DirectProduct(g, h), name=name,
                     known_order=g.order() * h.order())


def wreath_imprimitive(t: PermGroup, p: PermGroup) -> PermGroup:
    """T wr P on deg T * deg P points; point (block j, local x) is j*deg T + x."""
    a, m = t.degree, p.degree
    n = a * m
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds cap {MAX_DEGREE}")
    # Top generators first: with a transitive top group the copies beyond
    # block 0 are then redundant, which keeps enumeration passes few.
    gens = []
    for pi in p.generators:
        if pi.is_identity():
            continue
        gens.append(tuple(pi(j) * a + x for j in range(m) for x in range(a)))
    for j in range(m):
        for s in t.generators:
            if s.is_identity():
                continue
            img = list(range(n))
            for x in range(a):
                img[j * a + x] = j * a + s(x)
            gens.append(tuple(img))
    tag = WreathSym(t, m) if isinstance(p.tag, Symmetric) else None
    name = f"wr({t.name},{p.name})" if t.name and p.name else None
    return PermGroup(gens, n, tag=tag, name=name, known_order=t.order() ** m * p.order())


def wreath_product_action(t: PermGroup, p: PermGroup) -> PermGroup:
    """T wr P acting on deg T ** deg P tuples; tuple x has index sum x_i * m**i."""
    m, r = t.degree, p.degree
    if m < 2:
        raise ValueError("product action needs deg T >= 2")
    if m**r > MAX_DEGREE:
        raise ValueError(f"degree {m}**{r} exceeds cap {MAX_DEGREE}")
    n = m**r
    tuples = [[(idx // m**i) % m for i in range(r)] for idx in range(n)]

    def index(xs):
        return sum(x * m**i for i, x in enumerate(xs))

    gens = []
    for pi in p.generators:
        if pi.is_identity():
            continue
        img = []
        for xs in tuples:
            ys = [0] * r
            for i, x in enumerate(xs):
                ys[pi(i)] = x
            img.append(index(ys))
        gens.append(tuple(img))
    for j in range(r):
        for s in t.generators:
            if s.is_identity():
                continue
            gens.append(tuple(index([s(x) if i == j else x for i, x in enumerate(xs)]) for xs in tuples))
    name = f"wrprod({t.name},{p.name})" if t.name and p.name else None
    return PermGroup(gens, n, name=name, known_order=t.order() ** r * p.order())


# -- spec language ----------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    kind: str  # S A C D AGL1 M11 M12 gens
    param: int | None = None
    perms: tuple[str, ...] = ()

    def __str__(self) -> str:
        if self.kind in ("M11", "M12"):
            return self.kind
        if self.kind == "gens":
            return "gens{degree=%d;%s}" % (self.param, ";".join(self.perms))
        return f"{self.kind}({self.param})"

    @property
    def degree(self) -> int:
        if self.kind == "D":
            return self.param // 2
        if self.kind in ("M11", "M12"):
            return int(self.kind[1:])
        return self.param


@dataclass(frozen=True)
class Combine:
    op: str  # prod wr wrprod
    left: "GroupSpec"
    right: "GroupSpec"

    def __str__(self) -> str:
        return f"{self.op}({self.left},{self.right})"

    @property
    def degree(self) -> int:
        if self.op == "prod":
            return self.left.degree + self.right.degree
        if self.op == "wr":
            return self.left.degree * self.right.degree
        return self.left.degree ** self.right.degree


GroupSpec = Union[Atom, Combine]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> GroupSpecError:
        return GroupSpecError(message, self.pos if pos is None else pos, self.text)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek_word(self) -> str:
        self.skip_ws()
        end = self.pos
        while end < len(self.text) and self.text[end].isalnum():
            end += 1
        return self.text[self.pos:end]

    def expect(self, token: str) -> None:
        self.skip_ws()
        if not self.text.startswith(token, self.pos):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> tuple[int, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start:self.pos]), start

    def expr(self) -> GroupSpec:
        start = self.pos
        word = self.peek_word()
        if word in ("prod", "wr", "wrprod"):
            self.pos += len(word)
            self.expect("(")
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            node = Combine(word, left, right)
            if node.degree > MAX_DEGREE:
                raise self.error(f"degree {node.degree} exceeds cap {MAX_DEGREE}", start)
            if word == "wrprod" and left.degree < 2:
                raise self.error("wrprod needs a first factor of degree >= 2", start)
            return node
        if word in ("M11", "M12"):
            self.pos += len(word)
            return Atom(word)
        if word == "gens":
            return self.gens_literal()
        if word in ("S", "A", "C", "D", "AGL1"):
            self.pos += len(word)
            self.expect("(")
            value, vpos = self.integer()
            self.expect(")")
            self.check_param(word, value, vpos)
            return Atom(word, value)
        raise self.error(f"unknown group {word!r}" if word else "expected group expression")

    def check_param(self, kind: str, value: int, pos: int) -> None:
        if kind in ("S", "A", "C") and not 1 <= value <= MAX_DEGREE:
            raise self.error(f"{kind}(n) needs 1 <= n <= {MAX_DEGREE}", pos)
        if kind == "D" and (value % 2 or value < 6 or value // 2 > MAX_DEGREE):
            raise self.error("D(m) needs an even order m >= 6", pos)
        if kind == "AGL1" and (not _is_prime(value) or value > MAX_AGL_PRIME):
            raise self.error(f"AGL1(p) needs a prime p <= {MAX_AGL_PRIME}", pos)

    def gens_literal(self) -> Atom:
        self.pos += len("gens")
        self.expect("{")
        self.expect("degree=")
        degree, dpos = self.integer()
        if not 1 <= degree <= MAX_DEGREE:
            raise self.error("degree out of range", dpos)
        perms = []
        while True:
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == "}":
                break
            self.expect(";")
            self.skip_ws()
            start = self.pos
            depth = 0
            while self.pos < len(self.text) and (depth or self.text[self.pos] not in ";}"):
                ch = self.text[self.pos]
                depth += ch == "("
                depth -= ch == ")"
                self.pos += 1
            try:
                perms.append(str(Permutation.parse(self.text[start:self.pos], degree)))
            except PermutationError as exc:
                raise self.error(str(exc), start) from None
        if not perms:
            raise self.error("gens literal needs at least one permutation")
        self.expect("}")
        return Atom("gens", degree, tuple(perms))

    def parse(self) -> GroupSpec:
        node = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing text")
        return node


def parse_spec(text: str) -> GroupSpec:
    """Parse a group expression into its syntax tree."""
    return _Parser(text).parse()


def build(spec: GroupSpec) -> PermGroup:
    return _build_cached(spec)


@lru_cache(maxsize=512)
def _build_cached(spec: GroupSpec) -> PermGroup:
    if isinstance(spec, Combine):
        left, right = build(spec.left), build(spec.right)
        fn = {"prod": direct_product, "wr": wreath_imprimitive, "wrprod": wreath_product_action}[spec.op]
        group = fn(left, right)
        group.name = str(spec)
        return group
    kind = spec.kind
    if kind == "S":
        return symmetric(spec.param)
    if kind == "A":
        return alternating(spec.param)
    if kind == "C":
        return cyclic(spec.param)
    if kind == "D":
        return dihedral(spec.param)
    if kind == "AGL1":
        return agl1(spec.param)
    if kind in ("M11", "M12"):
        return mathieu(int(kind[1:]))
    return from_generators(spec.param, list(spec.perms))


def parse_group_spec(text: str) -> PermGroup:
    return build(parse_spec(text))


# -- catalog ----------------------------------------------------------------

V4_SPEC = "gens{degree=4;(1,2)(3,4);(1,3)(2,4)}"


def catalog_atoms(max_degree: int) -> list[str]:
    """One representative per small family member, skipping obvious duplicates
    (A(3) = C(3), D(6) = S(3), AGL1(2) = S(2), AGL1(3) = S(3))."""
    out = []
    for d in range(2, max_degree + 1):
        out.append(f"S({d})")
        if d >= 4:
            out.append(f"A({d})")
        if d >= 3:
            out.append(f"C({d})")
        if d >= 4:
            out.append(f"D({2 * d})")
        if d == 4:
            out.append(V4_SPEC)
        if d >= 5 and _is_prime(d):
            out.append(f"AGL1({d})")
        if d in (11, 12):
            out.append(f"M{d}")
    return out


def catalog(max_degree: int, min_degree: int = 4, products: bool = True) -> list[str]:
    """Deterministic list of spec strings: atoms plus one combinator level.

    ``prod`` entries are unordered pairs (left degree >= right degree, ties
    broken by atom order).
    """
    atoms = catalog_atoms(max_degree)
    deg = {a: parse_spec(a).degree for a in atoms}
    out = [a for a in atoms if min_degree <= deg[a]]
    for t in atoms:
        for p in atoms:
            if deg[t] * deg[p] <= max_degree and deg[t] * deg[p] >= min_degree:
                out.append(f"wr({t},{p})")
    for t in atoms:
        for p in atoms:
            if min_degree <= deg[t] ** deg[p] <= max_degree:
                out.append(f"wrprod({t},{p})")
    if products:
        for i, t in enumerate(atoms):
            for p in atoms[: i + 1]:
                if deg[p] <= deg[t] and min_degree <= deg[t] + deg[p] <= max_degree:
                    out.append(f"prod({t},{p})")
    return out
