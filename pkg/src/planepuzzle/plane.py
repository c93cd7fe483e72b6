"""The projective plane PG(2,q): indexed points and lines, incidence, and
projective matrix actions.

Points are 1-spaces of GF(q)^3 represented by the unique vector whose first
nonzero coordinate is 1; lines are represented the same way by covectors.
Both are enumerated canonically: (1, y, z) for all y, z in code order, then
(0, 1, z), then (0, 0, 1), which makes id <-> coordinates conversion O(1)
and stable across runs.  A Plane is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import Field

Vec = tuple[int, int, int]


@dataclass(frozen=True)
class Line:
    id: int
    covector: Vec
    point_ids: tuple[int, ...]


class Plane:
    __slots__ = (
        "field", "q", "n", "point_coords", "lines", "lines_through", "_line_tab",
    )

    def __init__(self, field: Field):
        self.field = field
        self.q = field.q
        self.n = field.q**2 + field.q + 1
        self.point_coords: list[Vec] = []
        self.lines: list[Line] = []
        self.lines_through: list[tuple[int, ...]] = []
        self._line_tab: list[int] = []

    # -- coordinates -------------------------------------------------------

    def normalize(self, v: Vec) -> Vec:
        """Scale v so its first nonzero coordinate is 1."""
        f = self.field
        for c in v:
            if c:
                if c == 1:
                    return tuple(v)
                s = f.inv(c)
                return tuple(f.mul(s, x) for x in v)
        raise ValueError("zero vector has no projective class")

    def point_id(self, v: Vec) -> int:
        x, y, z = self.normalize(v)
        q = self.q
        if x == 1:
            return y * q + z
        if y == 1:
            return q * q + z
        return q * q + q

    def line_id(self, covector: Vec) -> int:
        # Covectors use the same canonical enumeration as points.
        return self.point_id(covector)

    def incident(self, point: int, line: int) -> bool:
        f = self.field
        p = self.point_coords[point]
        w = self.lines[line].covector
        acc = 0
        for a, b in zip(p, w):
            acc = f.add(acc, f.mul(a, b))
        return acc == 0


def _coords_in_order(q: int, f: Field):
    for y in range(q):
        for z in range(q):
            yield (1, y, z)
    for z in range(q):
        yield (0, 1, z)
    yield (0, 0, 1)


def _null_basis(cov: Vec, f: Field) -> tuple[Vec, Vec]:
    """Two independent vectors orthogonal to the covector."""
    a, b, c = cov
    if a == 1:
        return (f.neg(b), 1, 0), (f.neg(c), 0, 1)
    if b == 1:
        return (1, 0, 0), (0, f.neg(c), 1)
    return (1, 0, 0), (0, 1, 0)


def build_plane(field: Field) -> Plane:
    """Construct PG(2,q) with all incidence data precomputed."""
    pl = Plane(field)
    f, q, n = field, field.q, pl.n

    pl.point_coords = [v for v in _coords_in_order(q, f)]

    through: list[list[int]] = [[] for _ in range(n)]
    tab = [-1] * (n * n)
    for lid, cov in enumerate(_coords_in_order(q, f)):
        u, v = _null_basis(cov, f)
        pts = [pl.point_id(v)]
        for s in range(q):
            w = tuple(f.add(u[i], f.mul(s, v[i])) for i in range(3))
            pts.append(pl.point_id(w))
        pts.sort()
        line = Line(lid, cov, tuple(pts))
        pl.lines.append(line)
        for i, p1 in enumerate(pts):
            through[p1].append(lid)
            base = p1 * n
            for p2 in pts[i + 1:]:
                tab[base + p2] = lid
                tab[p2 * n + p1] = lid
    pl.lines_through = [tuple(ls) for ls in through]
    pl._line_tab = tab
    return pl


def line_through(pl: Plane, a: int, b: int) -> int:
    """The unique line containing two distinct points."""
    if a == b:
        raise ValueError("two coincident points do not span a line")
    return pl._line_tab[a * pl.n + b]


def collinear(pl: Plane, a: int, b: int, c: int) -> bool:
    if a == b or b == c or a == c:
        raise ValueError("collinearity requires pairwise distinct points")
    return c in pl.lines[line_through(pl, a, b)].point_ids


# ---------------------------------------------------------------------------
# Projective matrix actions (right multiplication of row vectors).
# ---------------------------------------------------------------------------

Mat = tuple[Vec, Vec, Vec]


def mat_mul(f: Field, a: Mat, b: Mat) -> Mat:
    return tuple(
        tuple(
            _dot3(f, a[i], tuple(b[r][j] for r in range(3)))
            for j in range(3)
        )
        for i in range(3)
    )


def _dot3(f: Field, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x, y))
    return acc


def mat_det(f: Field, m: Mat) -> int:
    (a, b, c), (d, e, g), (h, i, j) = m
    t1 = f.mul(a, f.sub(f.mul(e, j), f.mul(g, i)))
    t2 = f.mul(b, f.sub(f.mul(d, j), f.mul(g, h)))
    t3 = f.mul(c, f.sub(f.mul(d, i), f.mul(e, h)))
    return f.add(f.sub(t1, t2), t3)


def mat_inv(f: Field, m: Mat) -> Mat:
    det = mat_det(f, m)
    if det == 0:
        raise ValueError("singular matrix")
    s = f.inv(det)
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            c = [k for k in range(3) if k != j]
            minor = f.sub(
                f.mul(m[r[0]][c[0]], m[r[1]][c[1]]),
                f.mul(m[r[0]][c[1]], m[r[1]][c[0]]),
            )
            if (i + j) % 2:
                minor = f.neg(minor)
            cof[j][i] = f.mul(s, minor)  # transpose for the adjugate
    return tuple(tuple(row) for row in cof)


class ProjMatrix:
    """An invertible 3x3 matrix over the plane's field, acting on points by
    right multiplication of their row-vector representatives."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("expected a 3x3 matrix")
        if mat_det(field, rows) == 0:
            raise ValueError("singular matrix")
        self.field = field
        self.rows = rows

    def __matmul__(self, other: "ProjMatrix") -> "ProjMatrix":
        return ProjMatrix(self.field, mat_mul(self.field, self.rows, other.rows))


def apply_matrix(pl: Plane, m: ProjMatrix, a: int) -> int:
    """Image of point a under right multiplication by m."""
    f = pl.field
    v = pl.point_coords[a]
    img = tuple(_dot3(f, v, tuple(m.rows[r][j] for r in range(3))) for j in range(3))
    return pl.point_id(img)


def perm_from_matrix(pl: Plane, m: ProjMatrix) -> tuple[int, ...]:
    """The permutation of point ids induced by m; always a bijection."""
    return tuple(apply_matrix(pl, m, a) for a in range(pl.n))


def line_stabilizer_element(
    pl: Plane, alpha: int, ell: int, params: tuple[int, int, int, int, int]
) -> ProjMatrix:
    """An element of the joint stabilizer of the point alpha and line ell.

    The triangular shape [[1,0,0],[d,a,0],[e,f,b]] fixes <e1> and the line
    z = 0; it is conjugated by the deterministic change of basis sending
    e1 -> rep(alpha), e2 -> rep of the least-id other point of ell, and
    e3 -> rep of the least-id point off ell.  Requires a, b nonzero.
    """
    a, b, d, e, f_ = params
    if a == 0 or b == 0:
        raise ValueError("parameters a and b must be nonzero")
    line = pl.lines[ell]
    if alpha not in line.point_ids:
        raise ValueError("alpha must lie on the line")
    f = pl.field
    other = min(p for p in line.point_ids if p != alpha)
    on_line = set(line.point_ids)
    off = next(p for p in range(pl.n) if p not in on_line)
    basis: Mat = (
        pl.point_coords[alpha],
        pl.point_coords[other],
        pl.point_coords[off],
    )
    core: Mat = ((1, 0, 0), (d, a, 0), (e, f_, b))
    rows = mat_mul(f, mat_mul(f, mat_inv(f, basis), core), basis)
    return ProjMatrix(f, rows)
