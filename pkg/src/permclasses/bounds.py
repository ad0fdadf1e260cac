"""Exact-integer checks of class-count inequalities on concrete groups.

Every verdict compares two Python integers. Bounds with fractional
exponents are raised to a power first, e.g. ``k <= 5**((n-1)/3)`` is checked
as ``k**3 <= 5**(n-1)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence, Union

from .classes import (
    DEFAULT_LIMIT,
    LimitExceeded,
    Uncountable,
    class_count,
    class_count_enumerate,
    class_count_wreath_sym,
    quotient_class_count,
)
from .constructions import (
    build,
    catalog,
    parse_spec,
    symmetric,
    wreath_imprimitive,
)
from .core import (
    Alternating,
    BlockSystem,
    PermGroup,
    Permutation,
    Symmetric,
    block_action_image,
    block_action_kernel,
    is_primitive,
    minimal_block_systems,
    restriction_image,
    schreier_sims,
    trivial_group,
)
from .partitions import partition_number

LE = "<="
LT = "<"


@dataclass(frozen=True)
class BoundVerdict:
    claim_id: str
    lhs: int
    rhs: int
    relation: str
    holds: bool
    context: str

    @property
    def tight(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class Skipped:
    claim_id: str
    context: str
    reason: str


Outcome = Union[BoundVerdict, Skipped]


def verdict(claim_id: str, lhs: int, rhs: int, context: str, relation: str = LE) -> BoundVerdict:
    if relation == LE:
        holds = lhs <= rhs
    elif relation == LT:
        holds = lhs < rhs
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return BoundVerdict(claim_id, lhs, rhs, relation, holds, context)


class NotASubgroup(ValueError):
    pass


class NotNormal(ValueError):
    pass


def _label(group: PermGroup) -> str:
    return group.name or f"<{';'.join(str(g) for g in group.generators)}> degree {group.degree}"


# -- main comparator --------------------------------------------------------


def main_bound_check(k: int, n: int, context: str = "") -> BoundVerdict:
    """k <= 5^((n-1)/3), decided as k^3 <= 5^(n-1)."""
    if n < 4:
        raise ValueError("the bound is stated for degree n >= 4")
    return verdict("main-bound", k**3, 5 ** (n - 1), context or f"k={k} n={n}")


def quarter_power_check(k: int, n: int, context: str = "") -> BoundVerdict:
    """k <= 5^(n/4), decided as k^4 <= 5^n."""
    return verdict("quarter-power-bound", k**4, 5**n, context or f"k={k} n={n}")


# -- subgroup / normal subgroup inequalities --------------------------------


def subgroup_inequalities(
    group: PermGroup,
    sub: PermGroup,
    sub_normal: bool = False,
    limit: int = DEFAULT_LIMIT,
    quotient: PermGroup | None = None,
) -> list[Outcome]:
    """Index and normal-subgroup inequalities for H <= G.

    * ``index-lower``: k(H) <= k(G) * |G:H|
    * ``index-upper``: k(G) <= k(H) * |G:H|
    * ``sqrt-bound``:  k(H)^2 <= |G| * k(G)
    * ``normal-quotient`` (H normal): k(G) <= k(H) * k(G/H)

    k(G/H) comes from ``quotient`` when given (a group isomorphic to G/H,
    e.g. a block-action image), else from the elements of G.
    """
    if not sub.is_subgroup_of(group):
        raise NotASubgroup(f"{_label(sub)} is not a subgroup of {_label(group)}")
    if sub_normal and not sub.is_normal_in(group):
        raise NotNormal(f"{_label(sub)} is not normal in {_label(group)}")
    ctx = f"G={_label(group)} H={_label(sub)}"
    k_g = class_count(group, limit).count
    k_h = class_count(sub, limit).count
    index = group.order() // sub.order()
    out: list[Outcome] = [
        verdict("index-lower", k_h, k_g * index, ctx),
        verdict("index-upper", k_g, k_h * index, ctx),
        verdict("sqrt-bound", k_h**2, group.order() * k_g, ctx),
    ]
    if sub_normal:
        try:
            if quotient is not None:
                k_q = class_count(quotient, limit).count
            else:
                k_q = quotient_class_count(group, sub, limit)
            out.append(verdict("normal-quotient", k_g, k_h * k_q, ctx))
        except LimitExceeded as exc:
            out.append(Skipped("normal-quotient", ctx, str(exc)))
    return out


# -- chain bound ------------------------------------------------------------


@dataclass(frozen=True)
class ChainIndices:
    a: tuple[int, ...]

    def __post_init__(self):
        if not self.a or any(x < 2 for x in self.a):
            raise ValueError(f"chain indices must be a nonempty list of integers >= 2, got {self.a}")

    @property
    def n(self) -> int:
        return math.prod(self.a)


def chain_bound(indices: ChainIndices | Sequence[int]) -> int:
    """prod_i p(a_i) ** (n / (a_1 ... a_i)), an exact integer."""
    if not isinstance(indices, ChainIndices):
        indices = ChainIndices(tuple(indices))
    n = indices.n
    bound = 1
    prefix = 1
    for a in indices.a:
        prefix *= a
        bound *= partition_number(a) ** (n // prefix)
    return bound


def greedy_chain(group: PermGroup) -> tuple[int, ...]:
    """Block sizes from repeatedly taking the first minimal block system.

    Each step passes to the action on blocks; the last entry is the degree
    of the final primitive image.
    """
    if group.degree < 2 or not group.is_transitive():
        raise ValueError("greedy_chain needs a transitive group of degree >= 2")
    indices = []
    current = group
    while True:
        systems = minimal_block_systems(current)
        if not systems:
            indices.append(current.degree)
            return tuple(indices)
        indices.append(systems[0].block_size)
        current = block_action_image(current, systems[0])


def verify_chain_bound(group: PermGroup, limit: int = DEFAULT_LIMIT) -> BoundVerdict:
    indices = greedy_chain(group)
    k = class_count(group, limit).count
    return verdict("chain-bound", k, chain_bound(indices), f"{_label(group)} indices={','.join(map(str, indices))}")


# -- filtration of a block kernel -------------------------------------------


def filtration_factors(group: PermGroup, system: BlockSystem,
                       kernel: PermGroup | None = None) -> tuple[PermGroup, list[PermGroup]]:
    """The block kernel B and the groups B_i restricted to block i.

    B_i fixes every point of blocks 0..i-1; its restriction to block i has
    kernel B_{i+1}, so the restrictions are the factors B_i / B_{i+1}.
    """
    if kernel is None:
        kernel = block_action_kernel(group, system)
    blocks = system.blocks
    base = [x for block in blocks for x in block]
    chain = schreier_sims([g.images for g in kernel.generators], group.degree, base=base,
                          known_order=kernel.order())
    factors = []
    for i, block in enumerate(blocks):
        gens = chain.strong_generators(i * system.block_size)
        level = PermGroup(gens, group.degree)
        factors.append(restriction_image(level, block))
    return kernel, factors


def filtration_check(group: PermGroup, system: BlockSystem, limit: int = DEFAULT_LIMIT) -> list[BoundVerdict]:
    """k(B) <= prod k(B_i/B_{i+1}) and each k(B_i/B_{i+1}) <= p(block size)."""
    if not system.is_invariant(group):
        raise ValueError(f"{system} is not a block system of {_label(group)}")
    kernel = block_action_kernel(group, system)
    if kernel.order() > limit:
        raise LimitExceeded(kernel.order(), limit)
    kernel, factors = filtration_factors(group, system, kernel)
    ctx = f"{_label(group)} blocks={system.block_count}x{system.block_size}"
    k_b = class_count_enumerate(kernel, limit).count
    k_factors = [class_count(f, limit).count for f in factors]
    p_a = partition_number(system.block_size)
    out = [verdict("filtration-product", k_b, math.prod(k_factors), ctx)]
    out += [verdict("filtration-factor", kf, p_a, f"{ctx} factor={i}") for i, kf in enumerate(k_factors)]
    return out


# -- sampled subgroup checks -------------------------------------------------


def random_subgroup(group: PermGroup, rng: random.Random, max_gens: int = 3) -> PermGroup:
    gens = [group.random_element(rng) for _ in range(rng.randint(1, max_gens))]
    return PermGroup(gens, group.degree)


def subprim_sample_check(group: PermGroup, seed: int = 0, samples: int = 64,
                         limit: int = DEFAULT_LIMIT) -> list[BoundVerdict]:
    """k(H) <= p(n) for G itself, the trivial subgroup and sampled subgroups H."""
    if isinstance(group.tag, (Symmetric, Alternating)):
        raise ValueError("symmetric and alternating groups are excluded")
    if not is_primitive(group):
        raise ValueError(f"{_label(group)} is not primitive")
    p_n = partition_number(group.degree)
    name = _label(group)
    out = [
        verdict("subgroup-partition-bound", class_count(group, limit).count, p_n, f"{name} H=G"),
        verdict("subgroup-partition-bound", 1, p_n, f"{name} H=1"),
    ]
    rng = random.Random(seed)
    for i in range(samples):
        sub = random_subgroup(group, rng)
        k = class_count_enumerate(sub, limit).count
        gens = ";".join(str(g) for g in sub.generators)
        out.append(verdict("subgroup-partition-bound", k, p_n, f"{name} sample={i} H=<{gens}>"))
    return out


def _lift_top(t: PermGroup, pi: Permutation, base_elem: tuple[int, ...]) -> tuple[int, ...]:
    a, m = t.degree, pi.degree
    top = tuple(pi(j) * a + x for j in range(m) for x in range(a))
    return tuple(top[base_elem[x]] for x in range(a * m))


def wreath_dominance_check(t: PermGroup, m: int, seed: int = 0, samples: int = 8,
                           limit: int = DEFAULT_LIMIT) -> list[Outcome]:
    """k(G) <= k(T wr S) for subgroups G of T wr S(m) containing the base T^m.

    S is the (transitive) image of G on the m blocks. The first verdict is
    the equality case G = T wr S(m) against the closed formula.
    """
    full = wreath_imprimitive(t, symmetric(m))
    if full.order() > limit:
        raise LimitExceeded(full.order(), limit)
    k_t = class_count(t, limit).count
    name = _label(t)
    out: list[Outcome] = [
        verdict("wreath-dominance", class_count_enumerate(full, limit).count,
                class_count_wreath_sym(k_t, m), f"T={name} m={m} G=T wr S({m})")
    ]
    base_gens = [g.images for g in wreath_imprimitive(t, trivial_group(m)).generators]
    rng = random.Random(seed)
    for i in range(samples):
        tops = []
        for _ in range(rng.randint(1, 3)):
            pts = list(range(m))
            rng.shuffle(pts)
            tops.append(Permutation(pts))
        top_group = PermGroup(tops, m)
        ctx = f"T={name} m={m} sample={i} S=<{';'.join(str(p) for p in tops)}>"
        if not top_group.is_transitive():
            out.append(Skipped("wreath-dominance", ctx, "top group intransitive"))
            continue
        lifted = [_lift_top(t, pi, full.random_element(rng).images) for pi in tops]
        sub = PermGroup(base_gens + lifted, full.degree)
        reference = wreath_imprimitive(t, top_group)
        out.append(verdict("wreath-dominance", class_count_enumerate(sub, limit).count,
                           class_count_enumerate(reference, limit).count, ctx))
    return out


# -- catalog-driven sweeps ----------------------------------------------------


@lru_cache(maxsize=None)
def _spec_count(spec: str, limit: int) -> int | str:
    """Class count of a catalog entry, or the reason it could not be counted."""
    try:
        return class_count(build(parse_spec(spec)), limit).count
    except LimitExceeded as exc:
        return str(exc)


def spec_class_count(spec: str, limit: int = DEFAULT_LIMIT) -> int:
    value = _spec_count(spec, limit)
    if isinstance(value, str):
        raise Uncountable(build(parse_spec(spec)).order(), limit)
    return value


SMALL_PRODUCT_DEGREE = 12


def sweep_products(max_degree: int, seed: int = 0, samples: int = 64) -> list[str]:
    """Catalog products: all of total degree <= 12, plus a seeded sample of the rest."""
    products = [e for e in catalog(max_degree, min_degree=4) if e.startswith("prod(")]
    small = [p for p in products if parse_spec(p).degree <= SMALL_PRODUCT_DEGREE]
    rest = [p for p in products if parse_spec(p).degree > SMALL_PRODUCT_DEGREE]
    picked = set(random.Random(seed).sample(rest, min(samples, len(rest))))
    return small + [p for p in rest if p in picked]


def quarter_power_sweep(max_degree: int, seed: int = 0, limit: int = DEFAULT_LIMIT,
                   product_samples: int = 64) -> list[Outcome]:
    """k(G) <= 5^(n/4) over transitive catalog groups and catalog products."""
    if max_degree > 23:
        raise ValueError("orbit lengths are limited to 23")
    out: list[Outcome] = []
    transitive = catalog(max_degree, min_degree=4, products=False)
    for spec in transitive + sweep_products(max_degree, seed, product_samples):
        value = _spec_count(spec, limit)
        if isinstance(value, str):
            out.append(Skipped("quarter-power-bound", spec, value))
        else:
            out.append(quarter_power_check(value, parse_spec(spec).degree, spec))
    return out


def sampled_subgroup_pairs(count: int = 100, seed: int = 0, max_degree: int = 10,
                           max_order: int = 50_000) -> list[tuple[str, PermGroup, PermGroup]]:
    """Seeded (spec, G, H <= G) pairs: G from the catalog, H random."""
    specs = [e for e in catalog(max_degree, min_degree=4) if build(parse_spec(e)).order() <= max_order]
    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        spec = rng.choice(specs)
        group = build(parse_spec(spec))
        pairs.append((spec, group, random_subgroup(group, rng)))
    return pairs


def subgroup_inequality_sample(count: int = 100, seed: int = 0, limit: int = DEFAULT_LIMIT) -> list[Outcome]:
    """Index inequalities on :func:`sampled_subgroup_pairs`."""
    out: list[Outcome] = []
    for spec, group, sub in sampled_subgroup_pairs(count, seed):
        gens = ";".join(str(g) for g in sub.generators)
        for v in subgroup_inequalities(group, sub, limit=limit):
            out.append(replace(v, context=f"G={spec} H=<{gens}>"))
    return out


def kernel_quotient_sweep(max_degree: int = 16, limit: int = DEFAULT_LIMIT) -> list[Outcome]:
    """k(G) <= k(B) k(G/B) for each imprimitive catalog group G and the
    kernel B of its action on every minimal block system; G/B is taken as
    the block-action image."""
    out: list[Outcome] = []
    for spec in catalog(max_degree, min_degree=4, products=False):
        group = build(parse_spec(spec))
        if is_primitive(group):
            continue
        for system in minimal_block_systems(group):
            ctx = f"G={spec} blocks={system.block_count}x{system.block_size}"
            kernel = block_action_kernel(group, system)
            try:
                k_g = class_count(group, limit).count
                k_b = class_count_enumerate(kernel, limit).count
                k_q = class_count(block_action_image(group, system), limit).count
            except LimitExceeded as exc:
                out.append(Skipped("normal-quotient", ctx, str(exc)))
                continue
            out.append(verdict("normal-quotient", k_g, k_b * k_q, ctx))
    return out
