"""Group tables, permutation closures, convolution, function norms."""

import math

import numpy as np
import pytest

from cayleynorms import (
    CapacityError,
    GroupAxiomError,
    GroupFunction,
    Permutation,
    build_from_table,
    build_standard_group,
    convolve,
    cyclic_group,
    dihedral_group,
    function_norm,
    group_closure,
    parse_group_spec,
    product_group,
    symmetric_group,
)
from cayleynorms import serial


def test_cyclic4_arithmetic():
    g = cyclic_group(4)
    assert g.mul[1, 3] == 0
    assert g.inv[1] == 3
    assert g.order == 4


def test_dihedral4_is_nonabelian():
    g = dihedral_group(4)
    assert g.order == 8
    # exhaustive commutativity scan
    noncommuting = [
        (a, b) for a in range(8) for b in range(8) if g.mul[a, b] != g.mul[b, a]
    ]
    assert noncommuting
    assert g.mul[1, 4] != g.mul[4, 1]
    assert not g.is_abelian


def test_klein_four_group_self_inverse():
    g = product_group(cyclic_group(2), cyclic_group(2))
    assert g.order == 4
    assert np.array_equal(g.inv, np.arange(4))
    assert g.is_abelian


def test_symmetric_group_capacity():
    with pytest.raises(CapacityError):
        symmetric_group(10)  # 10! > 1e6


def test_table_order_cap():
    with pytest.raises(CapacityError):
        cyclic_group(6000)


def test_build_standard_group_dispatch():
    assert build_standard_group("cyclic", 5).order == 5
    assert build_standard_group("dihedral", 3).order == 6
    assert build_standard_group("symmetric", 3).order == 6
    prod = build_standard_group("product", cyclic_group(2), cyclic_group(3))
    assert prod.order == 6
    with pytest.raises(ValueError):
        build_standard_group("wallpaper", 17)


def test_parse_group_spec():
    assert parse_group_spec("Z12").order == 12
    assert parse_group_spec("D4").order == 8
    assert parse_group_spec("Z2xZ2").order == 4
    assert parse_group_spec("S3").order == 6
    with pytest.raises(ValueError):
        parse_group_spec("Q8")


def test_every_family_satisfies_axioms():
    # construction validates; spot-check mul/inv consistency on top
    for g in (cyclic_group(7), dihedral_group(5), symmetric_group(4),
              product_group(cyclic_group(3), dihedral_group(3))):
        n = g.order
        assert np.array_equal(g.mul[0], np.arange(n))
        for a in range(n):
            assert g.mul[a, g.inv[a]] == 0
            assert g.mul[g.inv[a], a] == 0


def test_build_from_table_z2():
    g = build_from_table([[0, 1], [1, 0]])
    assert g.order == 2
    assert g.inv[1] == 1


def test_build_from_table_idempotent_nonidentity_rejected():
    with pytest.raises(GroupAxiomError, match="inverse"):
        build_from_table([[0, 1], [1, 1]])


def test_build_from_table_relabels_identity_to_zero():
    z3 = cyclic_group(3)
    # move the identity to index 2 by swapping labels 0 <-> 2
    relabel = np.array([2, 1, 0])
    shuffled = relabel[z3.mul[relabel][:, relabel]]
    g = build_from_table(shuffled)
    assert np.array_equal(g.mul[0], np.arange(3))


def test_build_from_table_associativity_diagnostic():
    # Z6 with an intercalate swap: still a latin square with identity and
    # two-sided inverses, but (1*1)*2 != 1*(1*2)
    raw = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    raw[1][1], raw[1][4] = 5, 2
    raw[4][4], raw[4][1] = 5, 2
    with pytest.raises(GroupAxiomError, match="associativity"):
        build_from_table(raw)


def test_build_from_table_rejects_nonsquare():
    with pytest.raises(GroupAxiomError):
        build_from_table([[0, 1]])


def test_group_serialization_round_trip_byte_equality():
    g = dihedral_group(4)
    text = serial.group_to_text(g)
    g2 = serial.parse_group(text)
    assert serial.group_to_text(g2) == text
    assert np.array_equal(g2.mul, g.mul)


def test_permutation_composition_convention():
    # (gh)(s) = h(g(s))
    g = Permutation((1, 0, 2))
    h = Permutation((0, 2, 1))
    gh = g.then(h)
    for s in range(3):
        assert gh(s) == h(g(s))


def test_permutation_inverse_and_validation():
    p = Permutation.from_cycles(5, [(0, 1, 2)])
    q = p.then(p.inverse())
    assert q.images == tuple(range(5))
    with pytest.raises(ValueError):
        Permutation((0, 0, 1))


def _brute_force_closure_order(degree, gens):
    """Independent oracle: pairwise-product fixpoint."""
    elems = {Permutation.identity(degree).images}
    for g in gens:
        elems.add(g.images)
    while True:
        new = set()
        for a in elems:
            for b in elems:
                c = Permutation(a).then(Permutation(b)).images
                if c not in elems:
                    new.add(c)
        if not new:
            return len(elems)
        elems |= new


def test_closure_s3():
    gens = [Permutation.from_cycles(3, [(0, 1)]), Permutation.from_cycles(3, [(0, 1, 2)])]
    g = group_closure(3, gens)
    assert g.order == 6
    assert g.elements[0].images == (0, 1, 2)
    assert g.order == _brute_force_closure_order(3, gens)


def test_closure_trivial_and_cyclic():
    assert group_closure(4, []).order == 1
    ncycle = Permutation.from_cycles(8, [tuple(range(8))])
    g = group_closure(8, [ncycle])
    assert g.order == 8
    powers = {Permutation.identity(8).images}
    p = ncycle
    while p.images not in powers:
        powers.add(p.images)
        p = p.then(ncycle)
    assert {e.images for e in g.elements} == powers


def test_closure_matches_brute_force_on_random_gens():
    rng = np.random.Generator(np.random.Philox(3))
    for _ in range(5):
        gens = [Permutation(tuple(rng.permutation(4))) for _ in range(2)]
        assert group_closure(4, gens).order == _brute_force_closure_order(4, gens)


def test_closure_cap():
    gens = [Permutation.from_cycles(3, [(0, 1)]), Permutation.from_cycles(3, [(0, 1, 2)])]
    with pytest.raises(CapacityError):
        group_closure(3, gens, cap=4)


def test_closure_to_table_identity_first():
    gens = [Permutation.from_cycles(3, [(0, 1)]), Permutation.from_cycles(3, [(0, 1, 2)])]
    table = group_closure(3, gens).table
    assert table.order == 6
    assert not table.is_abelian


def test_convolution_identity_point_mass():
    g = cyclic_group(6)
    f = GroupFunction(g, np.arange(6, dtype=float))
    delta = np.zeros(6)
    delta[0] = 6.0  # scaled point mass: value n at the identity
    assert np.allclose(convolve(f, GroupFunction(g, delta)).values, f.values)


def test_convolution_of_constants():
    g = dihedral_group(3)
    c1 = GroupFunction.constant(g, 2.0)
    c2 = GroupFunction.constant(g, -1.5)
    assert np.allclose(convolve(c1, c2).values, -3.0)


def test_convolution_z4_indicator():
    g = cyclic_group(4)
    f = GroupFunction.indicator(g, [1, 3])
    out = convolve(f, f)
    # direct summation oracle
    expected = np.zeros(4)
    for gg in range(4):
        expected[gg] = sum(
            f.values[g.mul[gg, g.inv[h]]] * f.values[h] for h in range(4)
        ) / 4
    assert np.allclose(out.values, expected)
    assert out.values[0] == pytest.approx(2 / 4)


def test_convolution_is_associative():
    rng = np.random.Generator(np.random.Philox(11))
    for g in (cyclic_group(24), dihedral_group(6), symmetric_group(4)):
        f1 = GroupFunction(g, rng.standard_normal(g.order))
        f2 = GroupFunction(g, rng.standard_normal(g.order))
        f3 = GroupFunction(g, rng.standard_normal(g.order))
        left = convolve(convolve(f1, f2), f3)
        right = convolve(f1, convolve(f2, f3))
        assert np.abs(left.values - right.values).max() < 1e-12


def test_convolution_group_mismatch():
    f1 = GroupFunction.constant(cyclic_group(4), 1.0)
    f2 = GroupFunction.constant(cyclic_group(5), 1.0)
    with pytest.raises(ValueError, match="mismatch"):
        convolve(f1, f2)


def test_function_norm_examples():
    g = cyclic_group(2)
    one = GroupFunction.constant(g, 1.0)
    for p in (1, 2, 4, math.inf):
        assert function_norm(one, p) == pytest.approx(1.0)
    f = GroupFunction(g, np.array([3.0, -4.0]))
    assert function_norm(f, 2) == pytest.approx(math.sqrt(25 / 2))
    assert function_norm(f, math.inf) == 4.0
    with pytest.raises(ValueError):
        function_norm(f, 0.5)


def test_function_norm_monotone_in_p():
    rng = np.random.Generator(np.random.Philox(2))
    g = dihedral_group(5)
    for _ in range(10):
        f = GroupFunction(g, rng.standard_normal(10))
        norms = [function_norm(f, p) for p in (1, 2, 4, math.inf)]
        assert all(a <= b + 1e-12 for a, b in zip(norms, norms[1:]))


def test_group_function_shape_validation():
    with pytest.raises(ValueError):
        GroupFunction(cyclic_group(3), np.ones(4))
