"""Weyl groups as permutations of the root list.

Elements are enumerated by breadth-first search from the identity, so the
BFS depth is the Coxeter length.  Coset and double-coset representatives
are found with descent filters over the full enumeration.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .rootsys import RootSystemData, full_mask, mask_indices

DEFAULT_MAX_WEYL = 1_000_000


class WeylSizeError(RuntimeError):
    pass


def max_weyl_size() -> int:
    return int(os.environ.get("STEINBERG_MAX_WEYL", DEFAULT_MAX_WEYL))


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]
    length: int

    def __call__(self, root_index: int) -> int:
        return self.perm[root_index]

    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i
        return WeylElement(tuple(inv), self.length)

    def compose(self, other: "WeylElement") -> tuple[int, ...]:
        """Permutation of ``self * other`` (apply ``other`` first)."""
        return tuple(self.perm[j] for j in other.perm)


class WeylGroup:
    """All elements of W in (length, lex permutation) order."""

    def __init__(self, rs: RootSystemData):
        self.rs = rs
        self.perms, self.lengths = _enumerate(rs)
        self.inv_perms = np.argsort(self.perms, axis=1)
        self._right_ok: dict[int, np.ndarray] = {}
        self._left_ok: dict[int, np.ndarray] = {}

    def __len__(self):
        return self.perms.shape[0]

    def __getitem__(self, k: int) -> WeylElement:
        return WeylElement(tuple(int(x) for x in self.perms[k]), int(self.lengths[k]))

    @cached_property
    def elements(self) -> list[WeylElement]:
        return [self[k] for k in range(len(self))]

    @cached_property
    def lookup(self) -> dict[bytes, int]:
        return {row.tobytes(): k for k, row in enumerate(self.perms)}

    def index_of(self, perm) -> int:
        return self.lookup[np.asarray(perm, dtype=self.perms.dtype).tobytes()]

    def _simple(self, J: int) -> list[int]:
        return [self.rs.simple_indices[i] for i in mask_indices(J)]

    def right_ok(self, J: int) -> np.ndarray:
        """w(alpha) > 0 for all alpha in J: minimal in its coset w W_J."""
        if J not in self._right_ok:
            cols = self._simple(J)
            pos = self.rs.positive_mask
            self._right_ok[J] = pos[self.perms[:, cols]].all(axis=1) if cols else np.ones(len(self), bool)
        return self._right_ok[J]

    def left_ok(self, J: int) -> np.ndarray:
        """w^{-1}(alpha) > 0 for all alpha in J: minimal in W_J w."""
        if J not in self._left_ok:
            cols = self._simple(J)
            pos = self.rs.positive_mask
            self._left_ok[J] = pos[self.inv_perms[:, cols]].all(axis=1) if cols else np.ones(len(self), bool)
        return self._left_ok[J]

    def parabolic_mask(self, J: int) -> np.ndarray:
        """Membership in W_J: w permutes the roots outside Phi_J among positives."""
        inside = np.zeros(self.rs.n_roots, bool)
        inside[self.rs.roots_in_span(J)] = True
        pos_out = np.array([i for i in self.rs.positive_indices if not inside[i]], dtype=np.int64)
        if pos_out.size == 0:
            return np.ones(len(self), bool)
        return self.rs.positive_mask[self.perms[:, pos_out]].all(axis=1)

    def poincare(self) -> list[int]:
        """Coefficients of sum_w q^{l(w)}."""
        return np.bincount(self.lengths).astype(int).tolist()


def _enumerate(rs: RootSystemData) -> tuple[np.ndarray, np.ndarray]:
    cap = max_weyl_size()
    n_roots = rs.n_roots
    dtype = np.int16 if n_roots < 2**15 else np.int32
    ident = np.arange(n_roots, dtype=dtype)
    seen = {ident.tobytes()}
    levels = [ident[None, :]]
    frontier = ident[None, :]
    refl = rs.reflections.astype(dtype)
    total = 1
    while frontier.shape[0]:
        new = []
        for i in range(rs.rank):
            # left multiplication by s_i
            cand = refl[i][frontier]
            for row in cand:
                key = row.tobytes()
                if key not in seen:
                    seen.add(key)
                    new.append(row)
        total += len(new)
        if total > cap:
            raise WeylSizeError(
                f"Weyl group exceeds the size cap {cap} (set STEINBERG_MAX_WEYL to raise it)"
            )
        frontier = np.array(new, dtype=dtype).reshape(len(new), n_roots)
        if len(new):
            levels.append(frontier)
    perms, lengths = [], []
    for depth, block in enumerate(levels):
        order = np.lexsort(block.T[::-1]) if n_roots else np.arange(block.shape[0])
        perms.append(block[order])
        lengths.append(np.full(block.shape[0], depth, dtype=np.int64))
    perms = np.concatenate(perms)
    lengths = np.concatenate(lengths)
    perms.setflags(write=False)
    lengths.setflags(write=False)
    return perms, lengths


@lru_cache(maxsize=None)
def weyl_group(rs: RootSystemData) -> WeylGroup:
    return WeylGroup(rs)


def enumerate_weyl(rs: RootSystemData) -> list[WeylElement]:
    return weyl_group(rs).elements


def element_length(rs: RootSystemData, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    pos = rs.positive_mask
    return int(sum(1 for i in rs.positive_indices if not pos[w.perm[i]]))


def min_coset_reps(rs: RootSystemData, J: int) -> list[WeylElement]:
    W = weyl_group(rs)
    return [W[k] for k in np.nonzero(W.right_ok(J))[0]]


def min_double_coset_reps(rs: RootSystemData, J1: int, J2: int) -> list[WeylElement]:
    """D_{J1,J2}: the minimal-length element of each W_{J1} \\ W / W_{J2}."""
    return [W_k for W_k in _double_coset_iter(rs, J1, J2)]


def double_coset_indices(rs: RootSystemData, J1: int, J2: int) -> np.ndarray:
    W = weyl_group(rs)
    return np.nonzero(W.left_ok(J1) & W.right_ok(J2))[0]


def _double_coset_iter(rs, J1, J2):
    W = weyl_group(rs)
    for k in double_coset_indices(rs, J1, J2):
        yield W[k]


def kilmoyer_intersection(
    rs: RootSystemData, w: WeylElement, J1: int, J2: int, check: bool = False
) -> int:
    """J1 ∩ w·J2 as a bitmask of simple roots.

    With ``check=True`` verify that Phi_{J1} ∩ w Phi_{J2} is exactly the
    root subsystem of the result, which fails when ``w`` is not minimal.
    """
    simple = rs.simple_indices
    where = {r: i for i, r in enumerate(simple)}
    inv = w.inverse().perm
    out = 0
    for i in mask_indices(J1):
        j = where.get(inv[simple[i]])
        if j is not None and (J2 >> j) & 1:
            out |= 1 << i
    if check:
        lhs = set(int(x) for x in rs.roots_in_span(J1)) & {
            w.perm[int(x)] for x in rs.roots_in_span(J2)
        }
        rhs = set(int(x) for x in rs.roots_in_span(out))
        if lhs != rhs:
            raise AssertionError("w is not a minimal double coset representative")
    return out


def kilmoyer_by_index(rs: RootSystemData, k: int, J1: int, J2: int) -> int:
    """Same as ``kilmoyer_intersection`` for the k-th enumerated element."""
    W = weyl_group(rs)
    simple = rs.simple_indices
    inv = W.inv_perms[k]
    out = 0
    for i in mask_indices(J1):
        img = int(inv[simple[i]])
        for j in mask_indices(J2):
            if simple[j] == img:
                out |= 1 << i
                break
    return out


def root_subsystem(rs: RootSystemData, J: int) -> frozenset[int]:
    return frozenset(int(x) for x in rs.roots_in_span(J))


def associate_classes(rs: RootSystemData) -> list[list[int]]:
    """Partition of all subsets of simple roots into associate classes.

    J1 ~ J2 when Phi(J2) = w Phi(J1) for some w.  Classes are sorted
    internally and ordered by their smallest bitmask, which is also the
    canonical representative.
    """
    W = weyl_group(rs)
    n = rs.rank
    by_span = {root_subsystem(rs, J): J for J in range(1 << n)}
    cls = {}
    classes = []
    for J in range(1 << n):
        if J in cls:
            continue
        idx = np.array(sorted(root_subsystem(rs, J)), dtype=np.int64)
        members = {J}
        if idx.size:
            images = np.sort(W.perms[:, idx], axis=1)
            images = np.unique(images, axis=0)
            for row in images:
                other = by_span.get(frozenset(int(x) for x in row))
                if other is not None:
                    members.add(other)
        members = sorted(members)
        for m in members:
            cls[m] = len(classes)
        classes.append(members)
    return classes


def associate_representative(rs: RootSystemData, J: int) -> int:
    for c in associate_classes_cached(rs):
        if J in c:
            return c[0]
    raise KeyError(J)


@lru_cache(maxsize=None)
def associate_classes_cached(rs: RootSystemData) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(c) for c in associate_classes(rs))


__all__ = [
    "WeylElement",
    "WeylGroup",
    "WeylSizeError",
    "weyl_group",
    "enumerate_weyl",
    "element_length",
    "min_coset_reps",
    "min_double_coset_reps",
    "double_coset_indices",
    "kilmoyer_intersection",
    "kilmoyer_by_index",
    "associate_classes",
    "associate_representative",
    "full_mask",
]
