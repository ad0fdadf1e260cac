import pytest

from permclasses.bounds import (
    BoundVerdict,
    ChainIndices,
    NotASubgroup,
    NotNormal,
    Skipped,
    chain_bound,
    filtration_check,
    filtration_factors,
    greedy_chain,
    kernel_quotient_sweep,
    quarter_power_check,
    subgroup_inequalities,
    subgroup_inequality_sample,
    quarter_power_sweep,
    main_bound_check,
    subprim_sample_check,
    verdict,
    verify_chain_bound,
    wreath_dominance_check,
)
from permclasses.classes import class_count, class_count_enumerate
from permclasses.constructions import agl1, alternating, mathieu, parse_group_spec, symmetric
from permclasses.core import (
    BlockSystem,
    block_action_kernel,
    minimal_block_systems,
    trivial_group,
)
from permclasses.partitions import partition_number


def triples(verdicts):
    return [(v.claim_id, v.lhs, v.rhs, v.holds) for v in verdicts]


def test_verdict_is_exact():
    big = 5**200
    assert verdict("x", big, big, "").holds
    assert not verdict("x", big + 1, big, "").holds
    assert not verdict("x", big, big, "", relation="<").holds
    assert verdict("x", big, big, "").tight


def test_main_bound():
    assert triples([main_bound_check(5, 4)]) == [("main-bound", 125, 125, True)]
    assert main_bound_check(5, 4).tight
    assert main_bound_check(1, 17).holds
    assert not main_bound_check(6, 4).holds
    with pytest.raises(ValueError):
        main_bound_check(1, 3)


def test_main_bound_sides_are_exact_integers():
    v = main_bound_check(10, 24)
    assert v.rhs == 5**23 and str(v.rhs) == "11920928955078125"


def test_quarter_power_bound():
    assert quarter_power_check(5, 4).tight
    assert quarter_power_check(25, 8).tight
    assert triples([quarter_power_check(20, 8)]) == [("quarter-power-bound", 160000, 390625, True)]


def test_subgroup_inequalities_s4_a4():
    out = subgroup_inequalities(symmetric(4), alternating(4), sub_normal=True)
    assert [(v.claim_id, v.lhs, v.rhs) for v in out] == [
        ("index-lower", 4, 10),
        ("index-upper", 5, 8),
        ("sqrt-bound", 16, 120),
        ("normal-quotient", 5, 8),
    ]
    assert all(v.holds for v in out)


def test_subgroup_inequalities_equal_groups():
    g = parse_group_spec("D(10)")
    out = subgroup_inequalities(g, g, sub_normal=True)
    assert all(v.holds for v in out)
    assert out[0].tight and out[1].tight


def test_subgroup_inequalities_wreath_base():
    g = parse_group_spec("wr(S(2),S(3))")
    base = block_action_kernel(g, minimal_block_systems(g)[0])
    out = subgroup_inequalities(g, base, sub_normal=True)
    quotient = [v for v in out if v.claim_id == "normal-quotient"][0]
    assert (quotient.lhs, quotient.rhs, quotient.holds) == (10, 24, True)


def test_subgroup_inequalities_rejections():
    with pytest.raises(NotASubgroup):
        subgroup_inequalities(alternating(4), symmetric(4))
    s3_in_s4 = parse_group_spec("gens{degree=4;(1,2);(1,2,3)}")
    with pytest.raises(NotNormal):
        subgroup_inequalities(symmetric(4), s3_in_s4, sub_normal=True)


def test_subgroup_inequalities_quotient_skipped_over_limit():
    out = subgroup_inequalities(symmetric(5), alternating(5), sub_normal=True, limit=100)
    assert isinstance(out[-1], Skipped)


def test_chain_bound_values():
    assert chain_bound((2, 12)) == 315392 == 2**12 * 77
    assert chain_bound((2, 2)) == 8
    assert chain_bound((7,)) == partition_number(7)
    assert ChainIndices((2, 3, 4)).n == 24
    with pytest.raises(ValueError):
        ChainIndices((2, 1))
    with pytest.raises(ValueError):
        ChainIndices(())


def test_greedy_chains():
    assert greedy_chain(parse_group_spec("wr(S(2),S(4))")) == (2, 4)
    assert greedy_chain(symmetric(5)) == (5,)
    # the block of size 4 contains a block of size 2, so it is not minimal
    assert greedy_chain(parse_group_spec("wr(D(8),C(2))")) == (2, 2, 2)


def test_verify_chain_bound():
    v = verify_chain_bound(parse_group_spec("wr(S(2),S(4))"))
    assert (v.lhs, v.rhs, v.holds) == (20, 80, True)
    v = verify_chain_bound(symmetric(5))
    assert (v.lhs, v.rhs, v.tight) == (7, 7, True)
    v = verify_chain_bound(parse_group_spec("wr(D(8),C(2))"))
    assert (v.lhs, v.rhs, v.holds) == (20, 128, True)


def test_filtration_s2_wr_s3():
    g = parse_group_spec("wr(S(2),S(3))")
    system = minimal_block_systems(g)[0]
    out = filtration_check(g, system)
    assert triples(out) == [("filtration-product", 8, 8, True)] + [("filtration-factor", 2, 2, True)] * 3


def test_filtration_s3_wr_c2():
    g = parse_group_spec("wr(S(3),C(2))")
    out = filtration_check(g, minimal_block_systems(g)[0])
    assert triples(out) == [("filtration-product", 9, 9, True)] + [("filtration-factor", 3, 3, True)] * 2


def test_filtration_factors_are_a_composition():
    g = parse_group_spec("wr(C(3),A(4))")
    system = minimal_block_systems(g)[0]
    kernel, factors = filtration_factors(g, system)
    total = 1
    for f in factors:
        total *= f.order()
    assert total == kernel.order()


def test_filtration_trivial_kernel():
    g = symmetric(4)
    out = filtration_check(g, BlockSystem.trivial(4))
    assert out[0].holds


def test_filtration_rejects_non_system():
    g = symmetric(4)
    with pytest.raises(ValueError):
        filtration_check(g, BlockSystem.from_blocks([[0, 1], [2, 3]], 4))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_subprim_affine(p):
    out = subprim_sample_check(agl1(p), seed=0, samples=16)
    assert len(out) == 18 and all(v.holds for v in out)


def test_subprim_m11():
    out = subprim_sample_check(mathieu(11), samples=4)
    assert (out[0].lhs, out[0].rhs) == (10, 56)


def test_subprim_rejections():
    with pytest.raises(ValueError):
        subprim_sample_check(symmetric(5))
    with pytest.raises(ValueError):
        subprim_sample_check(parse_group_spec("D(8)"))


def test_subprim_deterministic():
    a = subprim_sample_check(agl1(7), seed=3, samples=8)
    b = subprim_sample_check(agl1(7), seed=3, samples=8)
    assert a == b


def test_wreath_dominance():
    out = wreath_dominance_check(symmetric(2), 3, seed=0, samples=6)
    first = out[0]
    assert (first.lhs, first.rhs, first.tight) == (10, 10, True)
    assert all(v.holds for v in out if isinstance(v, BoundVerdict))


def test_wreath_cyclic_top_against_full_wreath():
    k_c4 = class_count_enumerate(parse_group_spec("wr(S(2),C(4))")).count
    k_s4 = class_count(parse_group_spec("wr(S(2),S(4))")).count
    assert k_s4 == 20 and k_c4 <= k_s4


def test_quarter_power_sweep_small():
    out = quarter_power_sweep(8)
    tight = {v.context for v in out if v.tight}
    assert {"S(4)", "D(8)", "prod(S(4),S(4))", "prod(D(8),D(8))"} <= tight
    assert all(v.holds for v in out)
    with pytest.raises(ValueError):
        quarter_power_sweep(24)


def test_subgroup_inequality_sample_small():
    out = subgroup_inequality_sample(count=10, seed=5)
    assert len(out) == 30 and all(v.holds for v in out)
    assert out == subgroup_inequality_sample(count=10, seed=5)


def test_kernel_quotient_sweep_small():
    out = kernel_quotient_sweep(8)
    assert out and all(v.holds for v in out)


def test_trivial_group_helpers():
    assert trivial_group(5).order() == 1
