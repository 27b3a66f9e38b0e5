"""Cayley matrices, automorphism certificates, and lifts to group functions.

A weighted Cayley graph on a group G with weight function f has matrix
entries ``a[g, h] = f(g h^-1)``.  The base vertex for transitivity
certificates and lifts is index 0 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .errors import CapacityError
from .groups import GroupFunction, GroupTable, PermGroup, Permutation, group_closure

AUTOMORPHISM_SEARCH_LIMIT = 64


@dataclass(frozen=True)
class CayleyMatrix:
    """The matrix ``a[g, h] = f(g h^-1)`` of a weighted Cayley graph."""

    group: GroupTable
    f: GroupFunction
    matrix: np.ndarray
    symmetric: bool

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def row_sum(self) -> float:
        """Common row sum: every row sums to sum_s f(s)."""
        return float(self.f.values.sum())


@dataclass(frozen=True)
class TransitiveCertificate:
    """One automorphism per vertex mapping the base vertex onto it.

    ``perms[t]`` is an automorphism with ``perms[t](base) = t``; ``subgroup``
    is the closure of all of them, a transitive group of automorphisms.  The
    closure is enumerated lazily: for highly symmetric matrices it can be
    factorially large, in which case accessing it raises CapacityError while
    the transitivity decision itself stands.
    """

    base: int
    perms: tuple[Permutation, ...]

    @cached_property
    def subgroup(self) -> PermGroup:
        gens = list(dict.fromkeys(self.perms))
        return group_closure(self.perms[0].degree, gens)


def cayley_matrix(group: GroupTable, f: GroupFunction) -> CayleyMatrix:
    """Build the Cayley matrix of f; flags symmetry when f(g) = f(g^-1)."""
    if not f.group.same_as(group):
        raise ValueError("function is defined on a different group")
    matrix = f.values[group.ghinv].copy()
    matrix.setflags(write=False)
    return CayleyMatrix(group=group, f=f, matrix=matrix, symmetric=f.is_symmetric())


def cayley_from_set(group: GroupTable, subset: Iterable[int]) -> CayleyMatrix:
    """Cayley matrix of the indicator of a subset S; undirected iff S = S^-1."""
    f = GroupFunction.indicator(group, subset)
    return cayley_matrix(group, f)


def center_regular(a: np.ndarray, d: float) -> np.ndarray:
    """Return ``A - (d/n) J`` for a square matrix A."""
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("center_regular needs a square matrix")
    return a - (d / n)


def _valueset_signatures(a: np.ndarray):
    """Row/column/diagonal fingerprints invariant under automorphisms."""
    row = [np.sort(a[s]).tobytes() for s in range(a.shape[0])]
    col = [np.sort(a[:, s]).tobytes() for s in range(a.shape[0])]
    diag = [a[s, s] for s in range(a.shape[0])]
    return row, col, diag


def _extend_automorphism(a: np.ndarray, target: int, compat: np.ndarray) -> Optional[Permutation]:
    """Backtracking search for the lexicographically first automorphism with 0 -> target.

    Vertices are assigned in ascending index order; candidate images are
    tried in ascending order, pruned by the precomputed compatibility mask
    and by consistency with every previously assigned vertex.
    """
    n = a.shape[0]
    if not compat[0, target]:
        return None
    images = np.full(n, -1, dtype=np.int64)
    used = np.zeros(n, dtype=bool)
    images[0] = target
    used[target] = True
    assigned = np.array([target], dtype=np.int64)

    # cursor[s] = next candidate image to try for vertex s
    cursor = np.zeros(n, dtype=np.int64)
    s = 1
    while 0 < s < n:
        found = False
        img_prefix = images[:s]
        for v in range(cursor[s], n):
            if used[v] or not compat[s, v]:
                continue
            if not np.array_equal(a[img_prefix, v], a[:s, s]):
                continue
            if not np.array_equal(a[v, img_prefix], a[s, :s]):
                continue
            images[s] = v
            used[v] = True
            cursor[s] = v + 1
            found = True
            break
        if found:
            s += 1
            if s < n:
                cursor[s] = 0
        else:
            cursor[s] = 0
            s -= 1
            if s >= 1:
                used[images[s]] = False
                images[s] = -1
    if s == 0:
        return None
    return Permutation(tuple(int(x) for x in images))


def find_transitive_automorphisms(a: np.ndarray) -> Optional[TransitiveCertificate]:
    """Decide vertex-transitivity constructively for a square matrix.

    Returns a certificate with one automorphism sending the base vertex 0 to
    each vertex, or None if some vertex is unreachable.  Worst case is
    factorial, so matrices above AUTOMORPHISM_SEARCH_LIMIT are rejected.
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("automorphism search needs a square matrix")
    if n > AUTOMORPHISM_SEARCH_LIMIT:
        raise CapacityError(
            f"automorphism search capped at n = {AUTOMORPHISM_SEARCH_LIMIT}, got {n}"
        )
    row, col, diag = _valueset_signatures(a)
    compat = np.array(
        [
            [row[s] == row[v] and col[s] == col[v] and diag[s] == diag[v] for v in range(n)]
            for s in range(n)
        ],
        dtype=bool,
    )
    perms = []
    for t in range(n):
        sigma = _extend_automorphism(a, t, compat)
        if sigma is None:
            return None
        perms.append(sigma)
    return TransitiveCertificate(base=0, perms=tuple(perms))


def cayley_certificate(cm: CayleyMatrix) -> TransitiveCertificate:
    """The right-translation certificate of a Cayley matrix.

    The map g -> g*t is an automorphism sending the identity to t, so Cayley
    matrices are always vertex-transitive; no search is needed.
    """
    g = cm.group
    perms = tuple(
        Permutation(tuple(int(x) for x in g.mul[:, t])) for t in range(g.order)
    )
    return TransitiveCertificate(base=0, perms=perms)


def lift_to_group(a: np.ndarray, group: PermGroup, base: int = 0) -> GroupFunction:
    """Lift a vertex-transitive matrix to a function on a transitive group.

    Given a transitive group of automorphisms (as permutations of the index
    set), returns f with ``f(g) = a[g(base), base]`` on the group's abstract
    table.  The point of the construction is that the lift multiplies the
    spectral norm by n and the Grothendieck norm by n^2; those identities
    are checked by the norms module, not here.
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if a.ndim != 2 or a.shape != (n, n):
        raise ValueError("lift needs a square matrix")
    if group.degree != n:
        raise ValueError(f"group degree {group.degree} != matrix size {n}")
    for g_idx, perm in enumerate(group.elements):
        img = np.asarray(perm.images)
        if not np.array_equal(a[np.ix_(img, img)], a):
            bad = np.argwhere(a[np.ix_(img, img)] != a)[0]
            raise ValueError(
                f"element {g_idx} is not an automorphism: entry (s,t) = "
                f"({bad[0]},{bad[1]}) maps to a different value"
            )
    if not group.is_transitive():
        raise ValueError("group does not act transitively on the index set")
    values = np.array([a[p.images[base], base] for p in group.elements])
    return GroupFunction(group.table, values)
