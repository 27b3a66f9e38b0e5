"""Irreducible representations and the Fourier transform on a finite group.

Everything here is complex-valued.  Irrep tables are shipped for abelian
groups (multiplicative characters, built for any abelian table) and
dihedral groups; other groups take a user-supplied table, which is
validated exhaustively on ingestion.

The transform is ``fhat(rho) = mean_g f(g) rho(g)``; its inverse, the
Plancherel identity and the convolution theorem follow the averaging
normalization, and the spectral norm of f equals the largest singular
value among the coefficient matrices.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .groups import GroupFunction, GroupTable

_HOMOMORPHISM_EXHAUSTIVE_LIMIT = 256


@dataclass(frozen=True)
class Irrep:
    """A unitary irreducible representation: one d x d matrix per element."""

    dim: int
    matrices: np.ndarray  # (|G|, dim, dim) complex

    def __post_init__(self):
        m = np.ascontiguousarray(self.matrices, dtype=np.complex128)
        if m.ndim != 3 or m.shape[1:] != (self.dim, self.dim):
            raise ValueError(
                f"matrix stack has shape {m.shape}, expected (n, {self.dim}, {self.dim})"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrices", m)

    @property
    def characters(self) -> np.ndarray:
        return np.trace(self.matrices, axis1=1, axis2=2)


@dataclass(frozen=True)
class IrrepTable:
    """A complete list of pairwise-inequivalent unitary irreps of one group."""

    group: GroupTable
    irreps: tuple[Irrep, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(r.dim for r in self.irreps)

    @property
    def max_dim(self) -> int:
        return max(self.dims)


@dataclass(frozen=True)
class FourierCoefficients:
    """Per-irrep coefficient matrices fhat(rho), shaped like the table."""

    table: IrrepTable
    coeffs: tuple[np.ndarray, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.table.irreps):
            raise ValueError("coefficient count does not match the irrep table")
        for c, r in zip(self.coeffs, self.table.irreps):
            if c.shape != (r.dim, r.dim):
                raise ValueError(
                    f"coefficient shape {c.shape} does not match irrep dim {r.dim}"
                )


# ---------------------------------------------------------------------------
# Building tables: abelian characters and dihedral representations


def _abelian_characters(g: GroupTable) -> np.ndarray:
    """All |G| multiplicative characters of an abelian group, trivial one first.

    Characters are grown along a chain of subgroups: each new generator of
    index k admits exactly k extensions of every character of the previous
    subgroup (the k-th roots of the already-determined value at its k-th
    power), so exactly |G| characters come out, with no search.
    """
    n = g.order
    values = np.ones((1, n), dtype=np.complex128)  # rows: characters on members
    members = [0]
    member_set = {0}
    while len(members) < n:
        gen = next(i for i in range(n) if i not in member_set)
        # powers of gen until it falls into the current subgroup
        powers = [gen]
        while powers[-1] not in member_set:
            powers.append(int(g.mul[powers[-1], gen]))
        index = len(powers)  # smallest k with gen^k in the subgroup
        landing = powers[-1]
        new_members = list(members)
        for p in powers[:-1]:
            new_members.extend(int(g.mul[m, p]) for m in members)
        extended = np.zeros((values.shape[0] * index, n), dtype=np.complex128)
        row = 0
        for chi in values:
            target = chi[landing]
            theta = cmath.phase(target)
            for k in range(index):
                w = cmath.exp(1j * (theta + 2.0 * math.pi * k) / index)
                new_chi = chi.copy()
                wp = 1.0 + 0.0j
                for p in powers[:-1]:
                    wp *= w
                    for m in members:
                        new_chi[g.mul[m, p]] = chi[m] * wp
                extended[row] = new_chi
                row += 1
        values = extended
        members = new_members
        member_set = set(members)
    return values


def _find_dihedral_pair(g: GroupTable) -> Optional[tuple[int, int]]:
    """Return (r, s) with r of order n/2, s an involution inverting r, or None."""
    n = g.order
    if n % 2 or n < 6:
        return None
    m = n // 2
    for r in range(1, n):
        if g.element_order(r) != m:
            continue
        rotations = {0}
        acc = r
        while acc != 0:
            rotations.add(acc)
            acc = int(g.mul[acc, r])
        for s in range(1, n):
            if s in rotations or g.mul[s, s] != 0:
                continue
            if g.mul[g.mul[s, r], s] == g.inv[r]:
                return r, s
        return None
    return None


def _dihedral_irreps(g: GroupTable, r: int, s: int) -> list[Irrep]:
    n = g.order
    m = n // 2
    # normal form: every element is r^i or r^i s
    form = np.full((n, 2), -1, dtype=np.int64)
    acc = 0
    for i in range(m):
        form[acc] = (i, 0)
        form[g.mul[acc, s]] = (i, 1)
        acc = int(g.mul[acc, r])
    if np.any(form < 0):
        raise ValueError("element decomposition r^i s^a failed; group is not dihedral")
    i_of, a_of = form[:, 0], form[:, 1]

    irreps: list[Irrep] = []

    def one_dim(rot_sign: int, ref_sign: int) -> Irrep:
        vals = (float(rot_sign) ** i_of) * (float(ref_sign) ** a_of)
        return Irrep(dim=1, matrices=vals.reshape(n, 1, 1).astype(np.complex128))

    irreps.append(one_dim(1, 1))
    irreps.append(one_dim(1, -1))
    if m % 2 == 0:
        irreps.append(one_dim(-1, 1))
        irreps.append(one_dim(-1, -1))
    two_dim_count = (m - 1) // 2 if m % 2 else m // 2 - 1
    flip = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
    for j in range(1, two_dim_count + 1):
        ang = 2.0 * math.pi * j / m
        rot = np.array(
            [[math.cos(ang), -math.sin(ang)], [math.sin(ang), math.cos(ang)]],
            dtype=np.complex128,
        )
        mats = np.empty((n, 2, 2), dtype=np.complex128)
        rpow = np.eye(2, dtype=np.complex128)
        acc = 0
        for i in range(m):
            mats[acc] = rpow
            mats[g.mul[acc, s]] = rpow @ flip
            rpow = rpow @ rot
            acc = int(g.mul[acc, r])
        irreps.append(Irrep(dim=2, matrices=mats))
    return irreps


def build_irrep_table(g: GroupTable) -> IrrepTable:
    """Irrep table for the built-in families: any abelian group, or dihedral.

    Other groups must supply their table through parse_irreps; the error
    message says so.  The returned table passes validate_irrep_table.
    """
    if g.is_abelian:
        chars = _abelian_characters(g)
        irreps = tuple(
            Irrep(dim=1, matrices=chi.reshape(g.order, 1, 1)) for chi in chars
        )
        return IrrepTable(group=g, irreps=irreps)
    pair = _find_dihedral_pair(g)
    if pair is not None:
        return IrrepTable(group=g, irreps=tuple(_dihedral_irreps(g, *pair)))
    raise ValueError(
        f"no built-in irreps for group {g.label or '?'} (order {g.order}); "
        "supply a table via parse_irreps"
    )


# ---------------------------------------------------------------------------
# Validation


def validate_irrep_table(g: GroupTable, table: IrrepTable, *, tol: float = 1e-10) -> list[str]:
    """Exhaustively check every irrep-table invariant; return diagnostics.

    An empty list means the table is valid.  Checks: identity image,
    homomorphism property (exhaustive up to order 256, sampled above),
    unitarity, rho(g^-1) = rho(g)*, irreducibility via the character norm,
    completeness (sum of squared dims), and pairwise character orthogonality.
    """
    problems: list[str] = []
    n = g.order
    for idx, rho in enumerate(table.irreps):
        m = rho.matrices
        if m.shape[0] != n:
            problems.append(f"irrep {idx}: {m.shape[0]} matrices for a group of order {n}")
            continue
        d = rho.dim
        eye = np.eye(d)
        if not np.allclose(m[0], eye, atol=tol):
            problems.append(f"irrep {idx}: rho(identity) != I")
        herm = np.abs(np.einsum("gij,gkj->gik", m, m.conj()) - eye).max(axis=(1, 2))
        if herm.max() > tol:
            problems.append(
                f"irrep {idx}: non-unitary at g={int(herm.argmax())} (err {herm.max():.2e})"
            )
        inv_err = np.abs(m[g.inv] - m.conj().transpose(0, 2, 1)).max(axis=(1, 2))
        if inv_err.max() > tol:
            problems.append(
                f"irrep {idx}: rho(g^-1) != rho(g)* at g={int(inv_err.argmax())}"
            )
        if n <= _HOMOMORPHISM_EXHAUSTIVE_LIMIT:
            prod = np.einsum("aij,bjk->abik", m, m)
            hom_err = np.abs(prod - m[g.mul]).max(axis=(2, 3))
            if hom_err.max() > tol:
                a, b = np.unravel_index(int(hom_err.argmax()), hom_err.shape)
                problems.append(
                    f"irrep {idx}: rho(ab) != rho(a)rho(b) at (a,b)=({a},{b})"
                )
        else:
            rng = np.random.Generator(np.random.Philox(0))
            ab = rng.integers(0, n, size=(50_000, 2))
            prod = m[ab[:, 0]] @ m[ab[:, 1]]
            hom_err = np.abs(prod - m[g.mul[ab[:, 0], ab[:, 1]]]).max(axis=(1, 2))
            if hom_err.max() > tol:
                i = int(hom_err.argmax())
                problems.append(
                    f"irrep {idx}: rho(ab) != rho(a)rho(b) at (a,b)=({ab[i,0]},{ab[i,1]})"
                )
        char_norm = float(np.mean(np.abs(rho.characters) ** 2))
        if abs(char_norm - 1.0) > tol:
            problems.append(
                f"irrep {idx}: not irreducible, mean |Tr rho|^2 = {char_norm:.6f} != 1"
            )
    total = sum(r.dim**2 for r in table.irreps)
    if total != n:
        problems.append(f"incomplete table: sum of dim^2 is {total}, expected {n}")
    for i in range(len(table.irreps)):
        for j in range(i + 1, len(table.irreps)):
            inner = np.mean(table.irreps[i].characters * table.irreps[j].characters.conj())
            if abs(inner) > tol:
                problems.append(
                    f"irreps {i} and {j} are equivalent (character inner product "
                    f"{abs(inner):.2e})"
                )
    return problems


def ensure_valid_irreps(g: GroupTable, table: IrrepTable) -> IrrepTable:
    problems = validate_irrep_table(g, table)
    if problems:
        raise ValueError("invalid irrep table:\n  " + "\n  ".join(problems))
    return table


# ---------------------------------------------------------------------------
# Transform, inverse, Plancherel building blocks


def fourier_transform(f: GroupFunction, table: IrrepTable) -> FourierCoefficients:
    """fhat(rho) = mean_g f(g) rho(g), one coefficient matrix per irrep."""
    if not f.group.same_as(table.group):
        raise ValueError("function and irrep table live on different groups")
    coeffs = tuple(
        np.tensordot(f.values, rho.matrices, axes=(0, 0)) / f.group.order
        for rho in table.irreps
    )
    return FourierCoefficients(table=table, coeffs=coeffs)


def fourier_inverse(coeffs: FourierCoefficients, table: Optional[IrrepTable] = None) -> GroupFunction:
    """Reconstruct f(g) = sum_rho d_rho <fhat(rho), rho(g)>_HS."""
    table = table or coeffs.table
    if len(table.irreps) != len(coeffs.coeffs):
        raise ValueError("coefficients are shaped for a different table")
    n = table.group.order
    values = np.zeros(n, dtype=np.complex128)
    for rho, c in zip(table.irreps, coeffs.coeffs):
        if c.shape != (rho.dim, rho.dim):
            raise ValueError("coefficient shape mismatch")
        # <c, rho(g)>_HS = sum_ij c_ij conj(rho(g)_ij)
        values += rho.dim * np.einsum("ij,gij->g", c, rho.matrices.conj())
    return GroupFunction(table.group, values)


def _top_singular(mat: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    """(sigma_1, u_1, v_1) via the eigendecomposition of the hermitian embedding.

    The 2d x 2d matrix [[0, M], [M*, 0]] has eigenvalues +-sigma_i with
    eigenvectors (u; v)/sqrt(2), so the top eigenpair of the embedding gives
    the top singular triple deterministically.
    """
    d1, d2 = mat.shape
    emb = np.zeros((d1 + d2, d1 + d2), dtype=np.complex128)
    emb[:d1, d1:] = mat
    emb[d1:, :d1] = mat.conj().T
    eigvals, eigvecs = np.linalg.eigh(emb)
    top = int(np.argmax(eigvals))
    sigma = float(eigvals[top])
    if sigma <= 0.0:
        u = np.zeros(d1, dtype=np.complex128)
        v = np.zeros(d2, dtype=np.complex128)
        u[0] = 1.0
        v[0] = 1.0
        return 0.0, u, v
    vec = eigvecs[:, top]
    u = vec[:d1] * math.sqrt(2.0)
    v = vec[d1:] * math.sqrt(2.0)
    u = u / np.linalg.norm(u)
    v = v / np.linalg.norm(v)
    return sigma, u, v


def spectral_via_irreps(f: GroupFunction, table: IrrepTable) -> float:
    """||f|| as the maximum spectral norm over the coefficient matrices."""
    coeffs = fourier_transform(f, table)
    return max(_top_singular(c)[0] for c in coeffs.coeffs)


def schur_average(rho: Irrep, sigma: Irrep, m: np.ndarray, group: GroupTable) -> np.ndarray:
    """mean_g rho(g) M sigma(g^-1): (Tr M / d) I when rho = sigma, else 0."""
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (rho.dim, sigma.dim):
        raise ValueError(f"M has shape {m.shape}, expected ({rho.dim}, {sigma.dim})")
    if rho.matrices.shape[0] != group.order or sigma.matrices.shape[0] != group.order:
        raise ValueError("irreps do not match the group order")
    sig_inv = sigma.matrices[group.inv]
    return np.einsum("gij,jk,gkl->il", rho.matrices, m, sig_inv) / group.order


# ---------------------------------------------------------------------------
# Witnesses and the abelian special case


@dataclass(frozen=True)
class SvdWitness:
    """Unit vectors x, y: G -> C^d whose bilinear objective equals ||f||."""

    x: np.ndarray  # (|G|, d) complex
    y: np.ndarray
    objective: float
    irrep_index: int


def svd_witness(f: GroupFunction, table: IrrepTable) -> SvdWitness:
    """Build the Grothendieck witness from the top singular pair of fhat.

    With sigma the irrep attaining ||f|| and (u1, v1) the top singular pair
    of fhat(sigma), the translates x(g) = sigma(g^-1) u1 and
    y(h) = sigma(h^-1) v1 are unit vectors with
    <x(g), y(h)> = u1^H sigma(gh^-1) v1, so the objective
    |mean f(gh^-1) <x(g), y(h)>| contracts to u1^H fhat(sigma) v1, the top
    singular value, which is ||f||.
    """
    coeffs = fourier_transform(f, table)
    tops = [_top_singular(c) for c in coeffs.coeffs]
    best = max(range(len(tops)), key=lambda i: tops[i][0])
    _, u1, v1 = tops[best]
    rho = table.irreps[best]
    g = table.group
    mats_inv = rho.matrices[g.inv]
    x = mats_inv @ u1
    y = mats_inv @ v1
    fmat = f.values[g.ghinv]
    # objective = mean_{g,h} f(gh^-1) x(g)^H y(h) = tr(X^H F Y) / n^2
    objective = abs(np.einsum("gd,gh,hd->", x.conj(), fmat, y)) / g.order**2
    return SvdWitness(x=x, y=y, objective=float(objective), irrep_index=best)


@dataclass(frozen=True)
class CharacterNorm:
    """max_chi |mean f conj(chi)| over multiplicative characters, with the argmax."""

    value: float
    index: int
    character: np.ndarray


def abelian_character_norm(f: GroupFunction, table: Optional[IrrepTable] = None) -> CharacterNorm:
    """||f|| for abelian groups via characters; the argmax character witnesses it.

    For abelian groups the spectral norm equals the complex infinity-to-one
    norm, attained at a multiplicative character.
    """
    g = f.group
    if not g.is_abelian:
        raise ValueError("character norm is defined for abelian groups only")
    table = table or build_irrep_table(g)
    if any(r.dim != 1 for r in table.irreps):
        raise ValueError("abelian irrep table must consist of characters")
    chars = np.stack([r.matrices[:, 0, 0] for r in table.irreps])
    corr = np.abs(chars.conj() @ f.values) / g.order
    idx = int(np.argmax(corr))
    return CharacterNorm(value=float(corr[idx]), index=idx, character=chars[idx])
