"""Permutation-group engine.

Permutations are tuples of images: p[i] is the image of point i, points act
on the right, and compose(g, h) applies g first.  On top of the elementary
helpers this module provides cycle types, parity, orbits, minimal blocks of
imprimitivity, and a deterministic Schreier-Sims stabilizer chain giving
exact arbitrary-precision group orders and membership tests.
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass

import numpy as np

Perm = tuple[int, ...]
CycleType = Counter  # cycle length -> multiplicity


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------

def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(g: Perm, h: Perm) -> Perm:
    """Apply g, then h."""
    return tuple(h[x] for x in g)


def compose_all(perms, n: int) -> Perm:
    acc = identity(n)
    for p in perms:
        acc = compose(acc, p)
    return acc


def inverse(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def is_identity(g: Perm) -> bool:
    return all(i == x for i, x in enumerate(g))


def moved_points(g: Perm) -> list[int]:
    return [i for i, x in enumerate(g) if i != x]


def conjugate(g: Perm, by: Perm) -> Perm:
    """by^-1 * g * by, i.e. g transported along by."""
    return compose(compose(inverse(by), g), by)


def cycle_type(p: Perm, domain) -> CycleType:
    """Multiset of cycle lengths of p restricted to domain.

    Fixed points count as 1-cycles.  Raises ValueError if the domain is not
    invariant under p.
    """
    dom = sorted(set(domain))
    dom_set = set(dom)
    for d in dom:
        if p[d] not in dom_set:
            raise ValueError("domain is not invariant under the permutation")
    seen: set[int] = set()
    ct: Counter = Counter()
    for d in dom:
        if d in seen:
            continue
        length = 0
        x = d
        while x not in seen:
            seen.add(x)
            x = p[x]
            length += 1
        ct[length] += 1
    return ct


def format_cycle_type(ct: CycleType) -> str:
    return ".".join(f"{length}^{ct[length]}" for length in sorted(ct))


def parity(p: Perm) -> str:
    """'even' or 'odd': (moved points - cycles on the support) mod 2."""
    seen: set[int] = set()
    moved = 0
    cycles = 0
    for i, x in enumerate(p):
        if i == x or i in seen:
            continue
        cycles += 1
        while i not in seen:
            seen.add(i)
            moved += 1
            i = p[i]
    return "odd" if (moved - cycles) % 2 else "even"


# ---------------------------------------------------------------------------
# Orbits and blocks
# ---------------------------------------------------------------------------

def _orbit_of(gens, a: int) -> set[int]:
    # Forward closure equals the orbit: finite group, injective generators.
    orb = {a}
    stack = [a]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orb:
                orb.add(y)
                stack.append(y)
    return orb


def orbits(gens, domain) -> list[tuple[int, ...]]:
    """Partition of the domain into orbits, ordered by least element."""
    dom = sorted(set(domain))
    dom_set = set(dom)
    for g in gens:
        for d in dom:
            if g[d] not in dom_set:
                raise ValueError("domain is not invariant under the generators")
    out = []
    left = set(dom)
    for d in dom:
        if d in left:
            orb = _orbit_of(gens, d)
            out.append(tuple(sorted(orb)))
            left -= orb
    return out


def _min_block_unchecked(gens, a: int, b: int, dom_set) -> tuple[int, ...]:
    # Union-find congruence closure: merging a,b forces merging of images.
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != x:
            parent[x], x = root, parent[x]
        return root

    pending = deque([(a, b)])
    while pending:
        u, v = pending.popleft()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        parent[ru] = rv
        for g in gens:
            pending.append((g[u], g[v]))
    ra = find(a)
    return tuple(sorted(x for x in dom_set if find(x) == ra))


def minimal_block(gens, a: int, b: int, domain=None) -> tuple[int, ...]:
    """Smallest block of imprimitivity containing both a and b.

    The domain defaults to the orbit of a; an explicit domain must be a
    single orbit (it is an error to pass an intransitive action).  Returns
    the full domain when no proper block contains the pair.
    """
    if a == b:
        raise ValueError("the two block points must be distinct")
    orb = _orbit_of(gens, a)
    if domain is None:
        dom_set = orb
    else:
        dom_set = set(domain)
        if orb != dom_set:
            raise ValueError("the action is not transitive on the domain")
    if b not in dom_set:
        raise ValueError("the action is not transitive on the domain")
    return _min_block_unchecked(gens, a, b, dom_set)


def is_primitive(gens, domain) -> bool:
    """Whether a transitive action on the domain has only trivial blocks.

    A block system preserved by a transitive subgroup certificate: if some
    subset of the generators already acts transitively and admits no
    nontrivial block, the full group is primitive, so the check escalates
    through growing generator prefixes and only falls back to the complete
    generating set when a smaller prefix exhibits a proper block.
    """
    dom = sorted(set(domain))
    if len(dom) < 2:
        return True
    gens = list(gens)
    d0 = dom[0]
    dom_set = set(dom)
    if _orbit_of(gens, d0) != dom_set:
        raise ValueError("the action is not transitive on the domain")

    sizes = sorted({min(k, len(gens)) for k in (16, 64, 4 * len(dom), len(gens))})
    for size in sizes:
        subset = gens[:size]
        if _orbit_of(subset, d0) != dom_set:
            continue
        proper = False
        for d in dom[1:]:
            if len(_min_block_unchecked(subset, d0, d, dom_set)) != len(dom):
                proper = True
                break
        if not proper:
            return True
        if size == len(gens):
            return False
    return False  # every prefix intransitive except the full set: unreachable


# ---------------------------------------------------------------------------
# Deterministic Schreier-Sims
# ---------------------------------------------------------------------------

class _Level:
    __slots__ = ("base", "gens", "orbit", "orbit_pos", "U", "UINV", "queue")

    def __init__(self, base: int, degree: int):
        self.base = base
        self.gens: list[np.ndarray] = []
        self.orbit: list[int] = [base]
        self.orbit_pos = np.full(degree, -1, dtype=np.int32)
        self.orbit_pos[base] = 0
        eye = np.arange(degree, dtype=np.int32)
        self.U: list[np.ndarray] = [eye]
        self.UINV: list[np.ndarray] = [eye]
        self.queue: deque[tuple[int, int]] = deque()


class StabilizerChain:
    """Base and strong generating set with explicit orbit transversals.

    Built incrementally: a generator is sifted and, if some level cannot
    absorb it, the residue is installed as a strong generator and all newly
    created Schreier generators are processed (deepest level first) until
    every one sifts to the identity.  A residue spawned while processing
    level i is a word in level-i data, hence already a member of the groups
    above level i; it is therefore only installed at levels below i, which
    keeps the per-level generating sets small.  Deterministic throughout:
    base points are the smallest point moved by the residue that creates
    each level.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self._levels: list[_Level] = []
        self._eye = np.arange(degree, dtype=np.int32)
        # Indices of input generators that grew the chain; they generate the
        # same group as the full input and stay small even for huge inputs.
        self.generating_indices: list[int] = []

    # -- public surface ------------------------------------------------

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self._levels]

    @property
    def order(self) -> int:
        out = 1
        for lv in self._levels:
            out *= len(lv.orbit)
        return out

    def orbit_sizes(self) -> list[int]:
        return [len(lv.orbit) for lv in self._levels]

    def strong_generators(self, level: int) -> list[Perm]:
        return [tuple(int(x) for x in g) for g in self._levels[level].gens]

    def extend(self, perm: Perm) -> bool:
        """Add a generator; returns True if the group grew."""
        arr = np.asarray(perm, dtype=np.int32)
        residue, stuck = self._sift_arr(arr, 0)
        if residue is None:
            return False
        self._install(residue, -1, stuck)
        self._drain()
        return True

    def sift(self, perm: Perm) -> Perm | None:
        """Residue of the permutation, or None if it sifts to the identity."""
        if len(perm) != self.degree:
            raise ValueError("degree mismatch")
        residue, _ = self._sift_arr(np.asarray(perm, dtype=np.int32), 0)
        return None if residue is None else tuple(int(x) for x in residue)

    def __contains__(self, perm: Perm) -> bool:
        return self.sift(perm) is None

    # -- construction ----------------------------------------------------

    def _sift_arr(self, arr, start: int):
        cur = arr
        levels = self._levels
        for idx in range(start, len(levels)):
            lv = levels[idx]
            d = int(cur[lv.base])
            if d == lv.base:
                continue
            r = int(lv.orbit_pos[d])
            if r < 0:
                return cur, idx
            cur = lv.UINV[r][cur]
        if (cur == self._eye).all():
            return None, len(levels)
        return cur, len(levels)

    def _install(self, residue, spawn: int, stuck: int):
        if stuck == len(self._levels):
            base = int(np.argmax(residue != self._eye))
            self._levels.append(_Level(base, self.degree))
        for m in range(spawn + 1, stuck + 1):
            lv = self._levels[m]
            gi = len(lv.gens)
            lv.gens.append(residue)
            lv.queue.extend((gi, oi) for oi in range(len(lv.orbit)))
            self._grow_orbit(m, gi)

    def _grow_orbit(self, m: int, gi_new: int | None):
        lv = self._levels[m]
        stack: deque[tuple[int, int | None]] = deque()
        stack.extend((oi, gi_new) for oi in range(len(lv.orbit)))
        while stack:
            oi, which = stack.popleft()
            row = lv.U[oi]
            p = lv.orbit[oi]
            for gi in (range(len(lv.gens)) if which is None else (which,)):
                g = lv.gens[gi]
                t = int(g[p])
                if lv.orbit_pos[t] >= 0:
                    continue
                new_row = g[row]
                inv = np.empty_like(new_row)
                inv[new_row] = self._eye
                new_oi = len(lv.orbit)
                lv.orbit_pos[t] = new_oi
                lv.orbit.append(t)
                lv.U.append(new_row)
                lv.UINV.append(inv)
                lv.queue.extend((gj, new_oi) for gj in range(len(lv.gens)))
                stack.append((new_oi, None))

    def _drain(self):
        levels = self._levels
        m = len(levels) - 1
        while m >= 0:
            lv = levels[m]
            if not lv.queue:
                m -= 1
                continue
            gi, oi = lv.queue.popleft()
            g = lv.gens[gi]
            p = lv.orbit[oi]
            r = int(lv.orbit_pos[int(g[p])])
            sg = lv.UINV[r][g[lv.U[oi]]]
            residue, stuck = self._sift_arr(sg, m + 1)
            if residue is not None:
                self._install(residue, m, stuck)
                m = stuck


def schreier_sims(gens, degree: int) -> StabilizerChain:
    """Deterministic stabilizer chain for the group the generators produce.

    Large inputs are handled in two phases: the chain is grown from the
    first 4*degree generators, then every remaining generator is sifted and
    appended only if it is not already a member.  Every input generator is
    membership-checked against the final chain.
    """
    arrays = []
    for g in gens:
        if len(g) != degree:
            raise ValueError("inconsistent degrees in generator list")
        arr = np.asarray(g, dtype=np.int32)
        if not ((arr >= 0).all() and (arr < degree).all()
                and len(np.unique(arr)) == degree):
            raise ValueError("generator is not a bijection of the domain")
        arrays.append(arr)

    chain = StabilizerChain(degree)
    head = min(len(arrays), 4 * degree)
    grew = []
    for i in range(head):
        if chain.extend(tuple(arrays[i])):
            grew.append(i)
    for i in range(head, len(arrays)):
        residue, stuck = chain._sift_arr(arrays[i], 0)
        if residue is not None:
            chain._install(residue, -1, stuck)
            chain._drain()
            grew.append(i)
    # Generators that were sifted to the identity are members by that very
    # computation; membership of the ones that grew the chain is rechecked.
    for i in grew:
        if chain._sift_arr(arrays[i], 0)[0] is not None:
            raise AssertionError("chain failed to absorb an input generator")
    chain.generating_indices = grew
    return chain


def group_order(chain: StabilizerChain) -> int:
    return chain.order


def contains(chain: StabilizerChain, perm: Perm) -> bool:
    return chain.sift(perm) is None


# ---------------------------------------------------------------------------
# Classification by exact order
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupClass:
    tag: str  # 'symmetric' | 'alternating' | 'other'
    order: int
    degree: int


def classify(order: int, degree: int) -> GroupClass:
    if order < 1:
        raise ValueError("group order must be positive")
    fact = math.factorial(degree)
    if order == fact:
        tag = "symmetric"
    elif 2 * order == fact:
        tag = "alternating"
    else:
        tag = "other"
    return GroupClass(tag, order, degree)
