"""Root systems of split reductive groups, in simple-root coordinates.

A reductive datum is a list of Cartan types plus the rank of the maximal
torus.  Roots are integer vectors in the basis of simple roots; the full
root set is obtained by closing the simple roots under simple reflections.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

SERIES = "ABCDEFG"
# Weyl groups of E7/E8 are too big to enumerate element by element here.
SUPPORTED = {
    "A": range(1, 8),
    "B": range(2, 5),
    "C": range(2, 5),
    "D": range(4, 6),
    "E": range(6, 7),
    "F": range(4, 5),
    "G": range(2, 3),
}
LEGAL = {
    "A": range(1, 100),
    "B": range(2, 100),
    "C": range(2, 100),
    "D": range(4, 100),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}


class DatumError(ValueError):
    pass


def cartan_matrix(series: str, rank: int) -> np.ndarray:
    """Cartan matrix ``A[i, j] = <alpha_j, alpha_i^vee>`` in Bourbaki numbering.

    B_n has alpha_n short, C_n has alpha_n long, G2 has alpha_1 short.
    """
    n = rank
    a = 2 * np.eye(n, dtype=np.int64)
    if series in "ABCD":
        for i in range(n - 1):
            a[i, i + 1] = a[i + 1, i] = -1
        if series == "B":
            a[n - 1, n - 2] = -2
        elif series == "C":
            a[n - 2, n - 1] = -2
        elif series == "D":
            a[n - 2, n - 1] = a[n - 1, n - 2] = 0
            a[n - 3, n - 1] = a[n - 1, n - 3] = -1
    elif series == "E":
        # 1-3-4-5-6(-7-8), with 2 attached to 4
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)]
        for i, j in edges:
            if i <= n and j <= n:
                a[i - 1, j - 1] = a[j - 1, i - 1] = -1
    elif series == "F":
        a[0, 1] = a[1, 0] = -1
        a[1, 2] = -1
        a[2, 1] = -2
        a[2, 3] = a[3, 2] = -1
    elif series == "G":
        a[0, 1] = -3
        a[1, 0] = -1
    else:
        raise DatumError(f"unknown series {series!r}")
    return a


@dataclass(frozen=True)
class ReductiveDatum:
    """Combinatorial presentation of a split reductive group.

    ``components`` lists ``(series, rank)`` pairs; their simple roots are
    concatenated in order.  ``cartan`` may be given explicitly (used for Levi
    subgroups, whose simple roots keep the parent's order); otherwise it is
    the block-diagonal Cartan matrix of the components.
    """

    components: tuple[tuple[str, int], ...]
    torus_rank: int
    cartan: tuple[tuple[int, ...], ...] | None = field(default=None, compare=False)
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        comps = tuple((str(s).upper(), int(r)) for s, r in self.components)
        object.__setattr__(self, "components", comps)
        for s, r in comps:
            if s not in LEGAL:
                raise DatumError(f"unknown series {s!r}")
            if r not in LEGAL[s]:
                raise DatumError(f"illegal Cartan type {s}{r}")
        if self.cartan is None:
            object.__setattr__(self, "cartan", _block_cartan(comps))
        else:
            c = tuple(tuple(int(x) for x in row) for row in self.cartan)
            object.__setattr__(self, "cartan", c)
            if len(c) != self.semisimple_rank:
                raise DatumError("explicit Cartan matrix does not match the components")
        if self.torus_rank < self.semisimple_rank:
            raise DatumError(
                f"torus rank {self.torus_rank} below semisimple rank {self.semisimple_rank}"
            )

    # equality/hash include the Cartan matrix, the only thing the formulas see
    def __eq__(self, other):
        if not isinstance(other, ReductiveDatum):
            return NotImplemented
        return (self.cartan, self.torus_rank) == (other.cartan, other.torus_rank)

    def __hash__(self):
        return hash((self.cartan, self.torus_rank))

    @property
    def semisimple_rank(self) -> int:
        return sum(r for _, r in self.components)

    @property
    def is_gl(self) -> bool:
        """True for the GL_n presentation (A_{n-1} with torus rank n)."""
        if not self.components:
            return self.torus_rank == 1
        return (
            len(self.components) == 1
            and self.components[0][0] == "A"
            and self.torus_rank == self.components[0][1] + 1
        )

    def check_supported(self):
        for s, r in self.components:
            if r not in SUPPORTED[s]:
                raise DatumError(
                    f"{s}{r} is outside the supported range for full Weyl group enumeration"
                )

    def __str__(self):
        if self.name:
            return self.name
        body = "x".join(f"{s}{r}" for s, r in self.components) or "T"
        return f"{body}+t{self.torus_rank}"


def _block_cartan(comps) -> tuple[tuple[int, ...], ...]:
    n = sum(r for _, r in comps)
    a = np.zeros((n, n), dtype=np.int64)
    k = 0
    for s, r in comps:
        a[k : k + r, k : k + r] = cartan_matrix(s, r)
        k += r
    return tuple(tuple(int(x) for x in row) for row in a)


def gl(n: int) -> ReductiveDatum:
    comps = (("A", n - 1),) if n > 1 else ()
    return ReductiveDatum(comps, n, name=f"GL{n}")


def sl(n: int) -> ReductiveDatum:
    if n < 2:
        raise DatumError("SL_n needs n >= 2")
    return ReductiveDatum((("A", n - 1),), n - 1, name=f"SL{n}")


_COMP_RE = re.compile(r"^([A-Ga-g])(\d+)$")


def parse_datum(text: str) -> ReductiveDatum:
    """Parse ``"A2"``, ``"GL3"``, ``"SL3"``, ``"B2"`` or ``"A1xA1+t2"``.

    Without a ``+tN`` suffix the torus rank equals the semisimple rank.
    """
    s = text.strip()
    m = re.fullmatch(r"(?i)gl(\d+)", s)
    if m:
        return gl(int(m.group(1)))
    m = re.fullmatch(r"(?i)sl(\d+)", s)
    if m:
        return sl(int(m.group(1)))
    torus = None
    if "+" in s:
        s, suffix = s.split("+", 1)
        m = re.fullmatch(r"(?i)t(\d+)", suffix.strip())
        if not m:
            raise DatumError(f"bad torus suffix in {text!r}")
        torus = int(m.group(1))
    comps = []
    if s and s.upper() != "T":
        for part in s.split("x"):
            m = _COMP_RE.match(part.strip())
            if not m:
                raise DatumError(f"cannot parse component {part!r} in {text!r}")
            comps.append((m.group(1).upper(), int(m.group(2))))
    rank = sum(r for _, r in comps)
    return ReductiveDatum(tuple(comps), rank if torus is None else torus, name=text.strip())


@dataclass(frozen=True, eq=False)
class RootSystemData:
    """All roots of a datum, indexed, with the negation involution.

    ``roots`` is an ``(N, rank)`` integer array in simple-root coordinates,
    sorted by (height, coordinates).  ``reflections[i]`` is the permutation of
    root indices induced by the i-th simple reflection.
    """

    cartan: np.ndarray
    roots: np.ndarray
    neg: np.ndarray
    simple_indices: tuple[int, ...]
    positive_indices: tuple[int, ...]
    reflections: np.ndarray

    @property
    def rank(self) -> int:
        return self.cartan.shape[0]

    @property
    def n_roots(self) -> int:
        return self.roots.shape[0]

    @property
    def n_positive(self) -> int:
        return len(self.positive_indices)

    @cached_property
    def positive_mask(self) -> np.ndarray:
        m = np.zeros(self.n_roots, dtype=bool)
        m[list(self.positive_indices)] = True
        return m

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(x) for x in r): i for i, r in enumerate(self.roots)}

    def root_index(self, coords: Sequence[int]) -> int:
        return self.index[tuple(int(x) for x in coords)]

    def reflect(self, i: int, coords: np.ndarray) -> np.ndarray:
        """s_i(beta) = beta - <beta, alpha_i^vee> alpha_i."""
        c = np.array(coords, dtype=np.int64)
        c[i] -= int(self.cartan[i] @ c)
        return c

    def roots_in_span(self, mask: int) -> np.ndarray:
        """Indices of roots supported on the simple roots in ``mask``."""
        outside = [i for i in range(self.rank) if not (mask >> i) & 1]
        if not outside:
            return np.arange(self.n_roots)
        keep = np.all(self.roots[:, outside] == 0, axis=1)
        return np.nonzero(keep)[0]


def _closure(cartan: np.ndarray) -> list[tuple[int, ...]]:
    n = cartan.shape[0]
    seen = set()
    frontier = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                c = list(r)
                c[i] -= sum(cartan[i, j] * r[j] for j in range(n))
                t = tuple(int(x) for x in c)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return list(seen)


@lru_cache(maxsize=None)
def _build(cartan: tuple[tuple[int, ...], ...]) -> RootSystemData:
    a = np.array(cartan, dtype=np.int64).reshape(len(cartan), len(cartan))
    n = a.shape[0]
    roots = sorted(_closure(a), key=lambda r: (sum(r), r)) if n else []
    arr = np.array(roots, dtype=np.int64).reshape(len(roots), n)
    index = {r: i for i, r in enumerate(roots)}
    neg = np.array([index[tuple(-x for x in r)] for r in roots], dtype=np.int64)
    simple = tuple(index[tuple(int(i == j) for j in range(n))] for i in range(n))
    positive = tuple(i for i, r in enumerate(roots) if sum(r) > 0)
    refl = np.zeros((n, len(roots)), dtype=np.int64)
    for i in range(n):
        pairing = arr @ a[i]
        img = arr.copy()
        img[:, i] -= pairing
        refl[i] = [index[tuple(int(x) for x in row)] for row in img]
    for x in (arr, neg, refl):
        x.setflags(write=False)
    return RootSystemData(a, arr, neg, simple, positive, refl)


def build_root_system(datum: ReductiveDatum) -> RootSystemData:
    """Root system of ``datum``; raises ``DatumError`` for unsupported types."""
    datum.check_supported()
    return _build(datum.cartan)


def root_system_from_cartan(cartan) -> RootSystemData:
    c = tuple(tuple(int(x) for x in row) for row in np.asarray(cartan).tolist())
    return _build(c)


def mask_indices(mask: int) -> list[int]:
    out, i = [], 0
    while mask >> i:
        if (mask >> i) & 1:
            out.append(i)
        i += 1
    return out


def indices_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def full_mask(rank: int) -> int:
    return (1 << rank) - 1


@dataclass(frozen=True, eq=False)
class LeviSystem:
    """Root subsystem Phi_J with J as simple roots.

    ``system`` uses J-local coordinates; ``parent_indices[k]`` is the index in
    the ambient system of local root ``k``.
    """

    J: int
    embedding: tuple[int, ...]
    system: RootSystemData
    parent_indices: np.ndarray
    components: tuple[tuple[str, int], ...]


def levi_subsystem(rs: RootSystemData, J: int) -> LeviSystem:
    emb = tuple(mask_indices(J))
    if emb and emb[-1] >= rs.rank:
        raise DatumError("subset is not contained in the simple roots")
    sub = rs.cartan[np.ix_(emb, emb)] if emb else np.zeros((0, 0), dtype=np.int64)
    local = root_system_from_cartan(sub)
    if local.n_roots:
        full = np.zeros((local.n_roots, rs.rank), dtype=np.int64)
        full[:, list(emb)] = local.roots
        parent = np.array([rs.root_index(r) for r in full], dtype=np.int64)
    else:
        parent = np.zeros(0, dtype=np.int64)
    return LeviSystem(J, emb, local, parent, classify_cartan(sub))


def pairing(root: Sequence[int], simple_pairings: Sequence[int]) -> int:
    """<alpha, mu> extended linearly from the simple-root values."""
    if len(root) != len(simple_pairings):
        raise ValueError(
            f"dimension mismatch: root has {len(root)} coordinates, cocharacter {len(simple_pairings)}"
        )
    return int(sum(int(c) * int(a) for c, a in zip(root, simple_pairings)))


def dynkin_components(cartan: np.ndarray) -> list[list[int]]:
    """Connected components of the Dynkin diagram, each sorted."""
    n = cartan.shape[0]
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and cartan[i, j] != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_connected(a: np.ndarray) -> tuple[str, int]:
    n = a.shape[0]
    if n == 1:
        return ("A", 1)
    bonds = {}
    for i in range(n):
        for j in range(i + 1, n):
            if a[i, j]:
                bonds[(i, j)] = int(a[i, j] * a[j, i])
    deg = [sum(1 for e in bonds if i in e) for i in range(n)]
    mult = max(bonds.values())
    if mult == 3:
        return ("G", 2)
    if mult == 2:
        (i, j), = [e for e, m in bonds.items() if m == 2]
        if n == 4 and deg[i] == 2 and deg[j] == 2:
            return ("F", 4)
        if n == 2:
            return ("B", 2)
        leaf, other = (i, j) if deg[i] == 1 else (j, i)
        # |a[other, leaf]| == 2 means the leaf is the long root
        return ("C", n) if abs(a[other, leaf]) == 2 else ("B", n)
    if max(deg) == 3:
        centre = deg.index(3)
        arms = []
        for nb in [j for j in range(n) if a[centre, j] and j != centre]:
            length, prev, cur = 1, centre, nb
            while True:
                nxt = [k for k in range(n) if a[cur, k] and k not in (cur, prev)]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return ("D", n)
        return ("E", n)
    return ("A", n)


def classify_cartan(cartan: np.ndarray) -> tuple[tuple[str, int], ...]:
    """Cartan types of the connected components, in order of first node."""
    cartan = np.asarray(cartan)
    return tuple(
        _classify_connected(cartan[np.ix_(c, c)]) for c in dynkin_components(cartan)
    )
