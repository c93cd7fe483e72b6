"""Elementary moves of the generalized fifteen-puzzle on PG(2,q).

A move with hole beta and counter gamma swaps the two points and applies the
line involution <u + s*v> -> <u - s*v> (u, v representatives of beta, gamma)
to the rest of their common line, so it is a product of (q+1)/2 disjoint
transpositions supported exactly on that line.  Chaining moves along a hole
path and closing the path at a fixed point alpha yields the hole-group
generators.

Permutations act on the right of points and products read left to right:
compose_path applies the move for (path[0], path[1]) first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .permgrp import Perm
from .plane import Plane, line_through


@dataclass(frozen=True)
class GroupoidElement:
    """A concatenation of elementary moves along a hole path."""

    path: tuple[int, ...]
    perm: Perm

    @property
    def source(self) -> int:
        return self.path[0]

    @property
    def target(self) -> int:
        return self.path[-1]


# ---------------------------------------------------------------------------
# Sparse images: dicts holding only the moved points.
# ---------------------------------------------------------------------------

def involution_images(
    pl: Plane, beta: int, gamma: int, u=None, v=None
) -> dict[int, int]:
    """Moved points of the involution fixing beta, gamma and their line's
    complement: <u + s*v> -> <u - s*v> for s != 0.

    The representatives default to the canonical ones; any scalar multiples
    produce the identical map (s is simply reparametrized).
    """
    if beta == gamma:
        raise ValueError("the involution needs two distinct points")
    f = pl.field
    if u is None:
        u = pl.point_coords[beta]
    if v is None:
        v = pl.point_coords[gamma]
    out: dict[int, int] = {}
    for s in range(1, pl.q):
        ns = f.neg(s)
        a = pl.point_id(tuple(f.add(u[i], f.mul(s, v[i])) for i in range(3)))
        b = pl.point_id(tuple(f.add(u[i], f.mul(ns, v[i])) for i in range(3)))
        out[a] = b
    return out


def move_images(pl: Plane, beta: int, gamma: int) -> dict[int, int]:
    """Moved points of the elementary move with hole beta, counter gamma."""
    out = involution_images(pl, beta, gamma)
    out[beta] = gamma
    out[gamma] = beta
    return out


def _sparse_to_perm(pl: Plane, images: dict[int, int]) -> Perm:
    full = list(range(pl.n))
    for a, b in images.items():
        full[a] = b
    return tuple(full)


# ---------------------------------------------------------------------------
# Full permutations
# ---------------------------------------------------------------------------

def involution_t(pl: Plane, beta: int, gamma: int) -> Perm:
    return _sparse_to_perm(pl, involution_images(pl, beta, gamma))


def elementary_move(pl: Plane, beta: int, gamma: int) -> Perm:
    return _sparse_to_perm(pl, move_images(pl, beta, gamma))


def compose_path(pl: Plane, path) -> GroupoidElement:
    """Product of the elementary moves along a hole path, left to right."""
    path = tuple(path)
    if not path:
        raise ValueError("a hole path needs at least its starting point")
    for a, b in zip(path, path[1:]):
        if a == b:
            raise ValueError("invalid move: the hole cannot stay in place")
    images = list(range(pl.n))
    for a, b in zip(path, path[1:]):
        step = move_images(pl, a, b)
        for p in range(pl.n):
            images[p] = step.get(images[p], images[p])
    return GroupoidElement(path, tuple(images))


def x_images(
    pl: Plane,
    alpha: int,
    beta: int,
    gamma: int,
    move_cache: dict | None = None,
) -> dict[int, int]:
    """Moved points of the closed-path generator h[a,b] h[b,c] h[c,a]."""
    if alpha == beta or beta == gamma or alpha == gamma:
        raise ValueError("generator points must be pairwise distinct")
    steps = []
    for pair in ((alpha, beta), (beta, gamma), (gamma, alpha)):
        if move_cache is None:
            steps.append(move_images(pl, *pair))
        else:
            m = move_cache.get(pair)
            if m is None:
                m = move_cache[pair] = move_images(pl, *pair)
            steps.append(m)
    m1, m2, m3 = steps
    out: dict[int, int] = {}
    for p in set(m1) | set(m2) | set(m3):
        img = m1.get(p, p)
        img = m2.get(img, img)
        img = m3.get(img, img)
        if img != p:
            out[p] = img
    return out


def x_generator(pl: Plane, alpha: int, beta: int, gamma: int) -> Perm:
    return _sparse_to_perm(pl, x_images(pl, alpha, beta, gamma))


def hole_group_generators(pl: Plane, alpha: int) -> list[Perm]:
    """x generators for every ordered pair of distinct points of the
    punctured plane, in pair-lexicographic order, identities dropped.

    Identity generators occur only for collinear triples at q = 3; callers
    that report the raw pair count should use raw_generator_count.
    """
    cache: dict = {}
    omega = [p for p in range(pl.n) if p != alpha]
    out = []
    for beta in omega:
        for gamma in omega:
            if beta == gamma:
                continue
            images = x_images(pl, alpha, beta, gamma, cache)
            if images:
                out.append(_sparse_to_perm(pl, images))
    return out


def raw_generator_count(pl: Plane) -> int:
    omega = pl.n - 1
    return omega * (omega - 1)


def line_group_generators(pl: Plane, alpha: int, ell: int) -> list[Perm]:
    """Generators from ordered point pairs of one line through alpha."""
    line = pl.lines[ell]
    if alpha not in line.point_ids:
        raise ValueError("alpha must lie on the line")
    cache: dict = {}
    pts = [p for p in line.point_ids if p != alpha]
    out = []
    for beta in pts:
        for gamma in pts:
            if beta == gamma:
                continue
            images = x_images(pl, alpha, beta, gamma, cache)
            if images:
                out.append(_sparse_to_perm(pl, images))
    return out
