"""Exact conjugacy class counts."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .core import Alternating, DirectProduct, PermGroup, Symmetric, WreathSym
from .partitions import partition_number, tuple_partition_count

DEFAULT_LIMIT = 2_000_000


class Method(str, enum.Enum):
    ENUMERATION = "Enumeration"
    SYMMETRIC = "SymmetricFormula"
    ALTERNATING = "AlternatingFormula"
    WREATH_SYM = "WreathSymFormula"
    PRODUCT = "ProductFormula"


class LimitExceeded(Exception):
    def __init__(self, order: int, limit: int):
        super().__init__(f"group order {order} exceeds enumeration limit {limit}")
        self.order = order
        self.limit = limit


class Uncountable(LimitExceeded):
    """No closed formula applies and the group is too large to enumerate."""


@dataclass(frozen=True)
class ClassCountResult:
    count: int
    method: Method
    elements_visited: int = 0


class _Enumerated:
    """Elements of a group with an exact row lookup."""

    _WEIGHT_SEED = 0x5EED

    def __init__(self, group: PermGroup):
        self.elements = group.elements()
        rng = np.random.default_rng(self._WEIGHT_SEED)
        self._weights = rng.integers(1, 2**63, size=group.degree, dtype=np.uint64) | np.uint64(1)
        keys = self._keys(self.elements)
        self._order = np.argsort(keys)
        self._sorted = keys[self._order]
        if len(self._sorted) > 1 and (self._sorted[1:] == self._sorted[:-1]).any():
            # Hash collision inside the group: fall back to exact chain sifting.
            self._chain = group.chain
        else:
            self._chain = None

    def _keys(self, rows: np.ndarray) -> np.ndarray:
        keys = np.zeros(rows.shape[0], dtype=np.uint64)
        for x, w in enumerate(self._weights):
            keys += rows[:, x].astype(np.uint64) * w
        return keys

    def lookup_permuted(self, rows: np.ndarray) -> np.ndarray:
        """Indices of ``rows``, which must be the group elements in some order.

        Since the keys of ``rows`` are a rearrangement of the element keys,
        one sort matches them up without any searching.
        """
        if self._chain is not None:
            return self._chain.index_of(rows)
        keys = self._keys(rows)
        perm = np.argsort(keys)
        if not np.array_equal(keys[perm], self._sorted):
            raise AssertionError("rows are not a rearrangement of the group elements")
        out = np.empty(len(rows), dtype=np.int64)
        out[perm] = self._order
        return out

    def __len__(self) -> int:
        return len(self.elements)


def _components(n: int, edges: list[np.ndarray]) -> np.ndarray:
    src = np.concatenate([np.arange(n)] * len(edges)) if edges else np.zeros(0, dtype=np.int64)
    dst = np.concatenate(edges) if edges else np.zeros(0, dtype=np.int64)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(n, n))
    _, labels = connected_components(graph, directed=True, connection="weak")
    return labels


def _conjugation_edges(group: PermGroup, enum_: _Enumerated) -> list[np.ndarray]:
    edges = []
    for g in group.irredundant_generators():
        if g.is_identity():
            continue
        gi = np.array(g.inverse().images)
        ga = np.array(g.images, dtype=enum_.elements.dtype)
        # g^-1 e g maps x to g(e(g^-1(x)))
        conj = ga[enum_.elements[:, gi]]
        edges.append(enum_.lookup_permuted(conj))
    return edges


def _check_limit(group: PermGroup, limit: int) -> int:
    order = group.order()
    if order > limit:
        raise LimitExceeded(order, limit)
    return order


def conjugacy_class_sizes(group: PermGroup, limit: int = DEFAULT_LIMIT) -> list[int]:
    """Sizes of all conjugacy classes, largest first."""
    _check_limit(group, limit)
    enum_ = _Enumerated(group)
    labels = _components(len(enum_), _conjugation_edges(group, enum_))
    return sorted(np.bincount(labels).tolist(), reverse=True)


def class_count_enumerate(group: PermGroup, limit: int = DEFAULT_LIMIT) -> ClassCountResult:
    """k(G) as the number of orbits of conjugation by the generators."""
    order = _check_limit(group, limit)
    enum_ = _Enumerated(group)
    labels = _components(len(enum_), _conjugation_edges(group, enum_))
    return ClassCountResult(int(labels.max()) + 1, Method.ENUMERATION, order)


def quotient_class_count(group: PermGroup, normal: PermGroup, limit: int = DEFAULT_LIMIT) -> int:
    """k(G/N) for a normal subgroup N, from the elements of G.

    Classes of G/N are the components of G under conjugation together with
    left multiplication by generators of N.
    """
    _check_limit(group, limit)
    enum_ = _Enumerated(group)
    edges = _conjugation_edges(group, enum_)
    for h in normal.generators:
        if not h.is_identity():
            edges.append(enum_.lookup_permuted(enum_.elements[:, np.array(h.images)]))
    labels = _components(len(enum_), edges)
    return int(labels.max()) + 1


def _partitions_parity_dp(n: int) -> tuple[int, int]:
    """Partitions of n counted by the parity of their number of parts."""
    # dp[m][s]: partitions of m with number of parts = s (mod 2)
    dp = [[0, 0] for _ in range(n + 1)]
    dp[0][0] = 1
    for part in range(1, n + 1):
        for m in range(part, n + 1):
            dp[m][0] += dp[m - part][1]
            dp[m][1] += dp[m - part][0]
    return dp[n][0], dp[n][1]


def distinct_odd_partitions(n: int) -> int:
    dp = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for m in range(n, part - 1, -1):
            dp[m] += dp[m - part]
    return dp[n]


def class_count_alternating(n: int) -> int:
    """k(A_n): S_n-classes of even permutations, plus one more for each split class.

    A cycle type with r parts has sign (-1)^(n - r). Classes with all cycle
    lengths distinct and odd split into two.
    """
    if n < 2:
        raise ValueError("class_count_alternating needs n >= 2")
    parts_even, parts_odd = _partitions_parity_dp(n)
    even_classes = parts_even if n % 2 == 0 else parts_odd
    return even_classes + distinct_odd_partitions(n)


def class_count_wreath_sym(k_base: int, n: int) -> int:
    """k(T wr S_n) for a group T with ``k_base`` classes."""
    if k_base < 1 or n < 1:
        raise ValueError("needs k_base >= 1 and n >= 1")
    return tuple_partition_count(k_base, n)


def class_count(group: PermGroup, limit: int = DEFAULT_LIMIT) -> ClassCountResult:
    """k(G) by the cheapest certified route.

    Only tags set by the constructors are trusted; an untagged group is
    always enumerated, however recognisable its generators look.
    """
    tag = group.tag
    if isinstance(tag, Symmetric):
        return ClassCountResult(partition_number(tag.n), Method.SYMMETRIC)
    if isinstance(tag, Alternating) and tag.n >= 2:
        return ClassCountResult(class_count_alternating(tag.n), Method.ALTERNATING)
    if isinstance(tag, WreathSym):
        k_base = class_count(tag.base, limit).count
        return ClassCountResult(class_count_wreath_sym(k_base, tag.n), Method.WREATH_SYM)
    if isinstance(tag, DirectProduct):
        left = class_count(tag.left, limit).count
        right = class_count(tag.right, limit).count
        return ClassCountResult(left * right, Method.PRODUCT)
    try:
        return class_count_enumerate(group, limit)
    except LimitExceeded as exc:
        raise Uncountable(exc.order, limit) from None
