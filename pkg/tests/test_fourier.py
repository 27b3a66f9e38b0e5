"""Irrep tables, the group Fourier transform, and its witnesses."""

import math

import numpy as np
import pytest

from cayleynorms import (
    GroupFunction,
    BMConfig,
    abelian_character_norm,
    build_from_table,
    build_irrep_table,
    cayley_matrix,
    convolve,
    cyclic_group,
    dihedral_group,
    fourier_inverse,
    fourier_transform,
    grothendieck_bm,
    group_spectral,
    parse_group_spec,
    product_group,
    schur_average,
    spectral_norm,
    spectral_via_irreps,
    svd_witness,
    svd_witness as _svd_witness,
    validate_irrep_table,
)
from cayleynorms.fourier import Irrep, IrrepTable

SHIPPED = ("Z8", "Z12", "Z2xZ2", "D4", "D5")


def _random_complex_function(g, rng):
    return GroupFunction(g, rng.standard_normal(g.order) + 1j * rng.standard_normal(g.order))


# ---------------------------------------------------------------------------
# table construction and validation


def test_z4_characters():
    g = cyclic_group(4)
    table = build_irrep_table(g)
    assert table.dims == (1, 1, 1, 1)
    chars = {tuple(np.round(r.matrices[:, 0, 0], 12)) for r in table.irreps}
    expected = {tuple(np.round([1j ** (k * x) for x in range(4)], 12)) for k in range(4)}
    assert chars == expected


def test_klein_four_characters_are_signs():
    g = product_group(cyclic_group(2), cyclic_group(2))
    table = build_irrep_table(g)
    assert table.dims == (1, 1, 1, 1)
    for r in table.irreps:
        vals = r.matrices[:, 0, 0]
        assert np.allclose(np.abs(vals.imag), 0.0, atol=1e-12)
        assert set(np.round(vals.real).tolist()) <= {-1.0, 1.0}


def test_dihedral4_table_shape():
    table = build_irrep_table(dihedral_group(4))
    assert sorted(table.dims) == [1, 1, 1, 1, 2]
    assert sum(d * d for d in table.dims) == 8
    assert validate_irrep_table(dihedral_group(4), table) == []


def test_dihedral5_table_shape():
    table = build_irrep_table(dihedral_group(5))
    assert sorted(table.dims) == [1, 1, 2, 2]
    assert validate_irrep_table(dihedral_group(5), table) == []


def test_every_shipped_table_validates():
    for spec in SHIPPED:
        g = parse_group_spec(spec)
        assert validate_irrep_table(g, build_irrep_table(g)) == []


def test_abelian_builder_handles_relabelled_tables():
    z6 = cyclic_group(6)
    relabel = np.array([3, 1, 2, 0, 4, 5])
    shuffled = relabel[z6.mul[relabel][:, relabel]]
    g = build_from_table(shuffled)
    table = build_irrep_table(g)
    assert validate_irrep_table(g, table) == []
    assert len(table.irreps) == 6


def test_unsupported_family_points_to_parse_irreps():
    g = product_group(cyclic_group(2), dihedral_group(4))  # order 16, not dihedral
    with pytest.raises(ValueError, match="parse_irreps"):
        build_irrep_table(g)


def test_validate_catches_incomplete_table():
    g = dihedral_group(4)
    table = build_irrep_table(g)
    partial = IrrepTable(group=g, irreps=table.irreps[:-1])
    problems = validate_irrep_table(g, partial)
    assert any("incomplete" in p for p in problems)


def test_validate_catches_non_unitary():
    g = cyclic_group(3)
    table = build_irrep_table(g)
    mats = table.irreps[1].matrices.copy()
    mats[1] *= 2.0
    bad = IrrepTable(group=g, irreps=(table.irreps[0],
                                      Irrep(dim=1, matrices=mats),
                                      table.irreps[2]))
    problems = validate_irrep_table(g, bad)
    assert any("unitary" in p or "rho(ab)" in p for p in problems)


def test_validate_catches_reducible_fake_irrep():
    g = dihedral_group(4)
    table = build_irrep_table(g)
    ones = [r for r in table.irreps if r.dim == 1]
    # direct sum of two characters passed off as a 2-dim irrep
    stack = np.zeros((8, 2, 2), dtype=complex)
    stack[:, 0, 0] = ones[0].matrices[:, 0, 0]
    stack[:, 1, 1] = ones[1].matrices[:, 0, 0]
    fake = Irrep(dim=2, matrices=stack)
    problems = validate_irrep_table(g, IrrepTable(group=g, irreps=(fake,)))
    assert any("not irreducible" in p for p in problems)
    # its character norm is 2, the reducibility fingerprint
    char_norm = float(np.mean(np.abs(fake.characters) ** 2))
    assert char_norm == pytest.approx(2.0, abs=1e-10)


# ---------------------------------------------------------------------------
# transform, inversion, Plancherel, convolution


def test_transform_constant_function():
    g = dihedral_group(4)
    table = build_irrep_table(g)
    co = fourier_transform(GroupFunction.constant(g, 1.0), table)
    for r, c in zip(table.irreps, co.coeffs):
        if r.dim == 1 and np.allclose(r.matrices, 1.0):
            assert np.allclose(c, 1.0)
        else:
            assert np.allclose(c, 0.0, atol=1e-12)


def test_transform_scaled_point_mass_gives_identities():
    g = dihedral_group(3)
    table = build_irrep_table(g)
    values = np.zeros(6)
    values[0] = 6.0
    co = fourier_transform(GroupFunction(g, values), table)
    for r, c in zip(table.irreps, co.coeffs):
        assert np.allclose(c, np.eye(r.dim), atol=1e-12)


def test_transform_cycle_indicator_matches_direct_sums():
    n = 8
    g = cyclic_group(n)
    table = build_irrep_table(g)
    f = GroupFunction.indicator(g, [1, n - 1])
    co = fourier_transform(f, table)
    for r, c in zip(table.irreps, co.coeffs):
        chi = r.matrices[:, 0, 0]
        direct = (chi[1] + chi[n - 1]) / n  # direct summation oracle
        assert c[0, 0] == pytest.approx(direct, abs=1e-12)


def test_inverse_roundtrip_random():
    rng = np.random.Generator(np.random.Philox(71))
    g = dihedral_group(4)
    table = build_irrep_table(g)
    for _ in range(10):
        f = _random_complex_function(g, rng)
        back = fourier_inverse(fourier_transform(f, table))
        assert np.abs(back.values - f.values).max() < 1e-12


def test_inverse_of_single_matrix_unit():
    g = dihedral_group(4)
    table = build_irrep_table(g)
    two_dim = next(i for i, r in enumerate(table.irreps) if r.dim == 2)
    coeffs = [np.zeros((r.dim, r.dim), dtype=complex) for r in table.irreps]
    coeffs[two_dim][0, 0] = 1.0
    from cayleynorms.fourier import FourierCoefficients

    f = fourier_inverse(FourierCoefficients(table=table, coeffs=tuple(coeffs)))
    rho = table.irreps[two_dim]
    assert np.allclose(f.values, 2.0 * rho.matrices[:, 0, 0].conj(), atol=1e-12)


def test_plancherel_on_shipped_groups():
    rng = np.random.Generator(np.random.Philox(72))
    for spec in SHIPPED:
        g = parse_group_spec(spec)
        table = build_irrep_table(g)
        for _ in range(50):
            f = _random_complex_function(g, rng)
            lhs = float(np.mean(np.abs(f.values) ** 2))
            rhs = sum(float(r.dim * np.sum(np.abs(c) ** 2))
                      for r, c in zip(table.irreps, fourier_transform(f, table).coeffs))
            assert abs(lhs - rhs) <= 1e-10 * max(lhs, 1.0)


def test_convolution_theorem_on_shipped_groups():
    rng = np.random.Generator(np.random.Philox(73))
    for spec in SHIPPED:
        g = parse_group_spec(spec)
        table = build_irrep_table(g)
        f1 = _random_complex_function(g, rng)
        f2 = _random_complex_function(g, rng)
        conv = fourier_transform(convolve(f1, f2), table)
        c1 = fourier_transform(f1, table)
        c2 = fourier_transform(f2, table)
        for cc, a, b in zip(conv.coeffs, c1.coeffs, c2.coeffs):
            assert np.abs(cc - a @ b).max() <= 1e-10


# ---------------------------------------------------------------------------
# spectral norm via irreps, Schur, witnesses


def test_spectral_via_irreps_examples():
    g = dihedral_group(4)
    table = build_irrep_table(g)
    assert spectral_via_irreps(GroupFunction.constant(g, 1.0), table) == pytest.approx(1.0)
    z2 = cyclic_group(2)
    t2 = build_irrep_table(z2)
    f = GroupFunction(z2, np.array([1.0, -1.0]))
    assert spectral_via_irreps(f, t2) == pytest.approx(1.0, abs=1e-12)


def test_spectral_via_irreps_matches_dense():
    rng = np.random.Generator(np.random.Philox(74))
    for spec in SHIPPED:
        g = parse_group_spec(spec)
        table = build_irrep_table(g)
        for _ in range(10):
            f = _random_complex_function(g, rng)
            via = spectral_via_irreps(f, table)
            dense = spectral_norm(cayley_matrix(g, f).matrix) / g.order
            assert via == pytest.approx(dense, rel=1e-10)


def test_schur_average_closed_forms():
    g = dihedral_group(4)
    table = build_irrep_table(g)
    rho2 = next(r for r in table.irreps if r.dim == 2)
    assert np.allclose(schur_average(rho2, rho2, np.eye(2), g), np.eye(2), atol=1e-12)
    e12 = np.zeros((2, 2))
    e12[0, 1] = 1.0
    assert np.abs(schur_average(rho2, rho2, e12, g)).max() < 1e-12
    triv, sign = table.irreps[0], table.irreps[1]
    assert np.abs(schur_average(triv, sign, np.ones((1, 1)), g)).max() < 1e-12
    with pytest.raises(ValueError, match="shape"):
        schur_average(rho2, triv, np.eye(2), g)


def test_svd_witness_trivial_and_sign():
    g = cyclic_group(4)
    table = build_irrep_table(g)
    w = svd_witness(GroupFunction.constant(g, 1.0), table)
    assert w.objective == pytest.approx(1.0, abs=1e-12)
    z2 = cyclic_group(2)
    f = GroupFunction(z2, np.array([1.0, -1.0]))
    w2 = svd_witness(f, build_irrep_table(z2))
    assert w2.objective == pytest.approx(1.0, abs=1e-12)
    sign_char = build_irrep_table(z2).irreps[w2.irrep_index].matrices[:, 0, 0]
    assert np.allclose(sign_char, [1.0, -1.0])


def test_svd_witness_matches_spectral_norm():
    rng = np.random.Generator(np.random.Philox(75))
    for spec in SHIPPED:
        g = parse_group_spec(spec)
        table = build_irrep_table(g)
        for _ in range(10):
            f = _random_complex_function(g, rng)
            w = _svd_witness(f, table)
            target = spectral_via_irreps(f, table)
            assert w.objective == pytest.approx(target, rel=1e-8)
            assert np.linalg.norm(w.x, axis=1).max() <= 1 + 1e-12


def test_abelian_character_norm_examples():
    g = cyclic_group(6)
    const = GroupFunction.constant(g, -2.5)
    res = abelian_character_norm(const)
    assert res.value == pytest.approx(2.5)
    z12 = cyclic_group(12)
    ind = GroupFunction.indicator(z12, [1, 11])
    res12 = abelian_character_norm(ind)
    assert res12.value == pytest.approx(2 / 12)
    assert res12.value == pytest.approx(group_spectral(ind), rel=1e-10)
    # a character correlates only with itself
    table = build_irrep_table(z12)
    chi3 = GroupFunction(z12, table.irreps[3].matrices[:, 0, 0])
    res_chi = abelian_character_norm(chi3, table)
    assert res_chi.value == pytest.approx(1.0, abs=1e-12)
    assert res_chi.index == 3
    corr = [abs(np.mean(chi3.values * r.matrices[:, 0, 0].conj()))
            for r in table.irreps]
    assert sum(c > 1e-9 for c in corr) == 1


def test_abelian_character_norm_rejects_nonabelian():
    g = dihedral_group(4)
    with pytest.raises(ValueError, match="abelian"):
        abelian_character_norm(GroupFunction.constant(g, 1.0))


def test_ascent_rank_twice_max_irrep_dim_reaches_full_norm():
    # complex rank k suffices when every irrep has dim <= k; realized over the
    # reals with rank 2k via the isometric embedding of C^k
    rng = np.random.Generator(np.random.Philox(76))
    for spec in SHIPPED:
        g = parse_group_spec(spec)
        table = build_irrep_table(g)
        k = 2 * table.max_dim
        for _ in range(3):
            f = GroupFunction(g, rng.standard_normal(g.order))
            a = np.asarray(cayley_matrix(g, f).matrix)
            target = g.order * spectral_norm(a)
            val, _ = grothendieck_bm(a, BMConfig(rank=k, restarts=16))
            assert val >= (1 - 1e-6) * target


def test_real_rank_one_is_not_enough_on_z3():
    # the real sign optimum can sit strictly below n||A||: rank 1 stalls at
    # the infinity-to-one norm 4 while the full norm is 4.5
    g = cyclic_group(3)
    f = GroupFunction(g, np.array([1.0, -0.5, -0.5]))
    a = np.asarray(cayley_matrix(g, f).matrix)
    assert 3 * spectral_norm(a) == pytest.approx(4.5, abs=1e-9)
    val1, _ = grothendieck_bm(a, BMConfig(rank=1, restarts=16))
    assert val1 == pytest.approx(4.0, abs=1e-9)
    val2, _ = grothendieck_bm(a, BMConfig(rank=2, restarts=16))
    assert val2 >= 4.5 - 1e-6
