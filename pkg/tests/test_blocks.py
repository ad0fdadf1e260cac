import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permclasses.constructions import build, catalog, dihedral, parse_group_spec, parse_spec, symmetric
from oracles import brute_minimal_systems
from permclasses.core import (
    BlockError,
    BlockSystem,
    PermGroup,
    Permutation,
    UnionFind,
    block_action_image,
    block_action_kernel,
    is_primitive,
    minimal_block_systems,
    restriction_image,
)


def transitive_catalog(max_degree):
    for spec in catalog(max_degree, min_degree=2, products=False):
        g = build(parse_spec(spec))
        if g.is_transitive():
            yield spec, g


@pytest.mark.parametrize("spec", [s for s, _ in transitive_catalog(8)])
def test_minimal_systems_match_brute_force_catalog(spec):
    g = parse_group_spec(spec)
    assert [s.blocks for s in minimal_block_systems(g)] == brute_minimal_systems(g)


@given(st.integers(0, 100_000), st.integers(2, 8))
def test_minimal_systems_match_brute_force_random(seed, degree):
    rng = random.Random(seed)
    # a transitive cyclic generator plus one random element
    cycle = list(range(1, degree)) + [0]
    extra = list(range(degree))
    rng.shuffle(extra)
    g = PermGroup([Permutation(cycle), Permutation(extra)], degree)
    assert [s.blocks for s in minimal_block_systems(g)] == brute_minimal_systems(g)


def test_examples():
    d8 = dihedral(8)
    systems = minimal_block_systems(d8)
    assert [str(s) for s in systems] == ["{1,3}{2,4}"]
    assert is_primitive(symmetric(5))
    assert is_primitive(parse_group_spec("M11"))
    assert not is_primitive(parse_group_spec("wr(S(3),S(2))"))


def test_intransitive_rejected():
    with pytest.raises(BlockError):
        minimal_block_systems(parse_group_spec("gens{degree=4;(1,2)}"))


def test_block_system_validation():
    with pytest.raises(BlockError):
        BlockSystem.from_blocks([[0, 1], [2]], 3)
    with pytest.raises(BlockError):
        BlockSystem.from_blocks([[0, 1], [1, 2]], 4)
    assert not BlockSystem.trivial(4).is_nontrivial()


def test_block_action_and_kernel():
    g = parse_group_spec("wr(S(3),C(4))")
    system = minimal_block_systems(g)[0]
    assert system.block_size == 3
    image = block_action_image(g, system)
    kernel = block_action_kernel(g, system)
    assert image.order() == 4
    assert kernel.order() == 6**4
    assert kernel.order() * image.order() == g.order()
    assert kernel.is_normal_in(g)


def test_restriction_image():
    g = parse_group_spec("prod(S(3),C(4))")
    assert restriction_image(g, [0, 1, 2]).order() == 6
    assert restriction_image(g, [3, 4, 5, 6]).order() == 4


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) is not None
    assert uf.union(1, 0) is None
    uf.union(3, 4)
    assert uf.find(0) == uf.find(1) != uf.find(3)
