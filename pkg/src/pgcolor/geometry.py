"""The projective space PG(n,q): points, lines, subspaces, incidence.

Points are canonical representatives of projective classes (first nonzero
coordinate equal to 1) with dense ids assigned in lexicographic order of the
normalized coordinate vectors.  Lines get dense ids in lexicographic order of
their sorted point-id tuples.  Subspaces are keyed by their reduced
row-echelon basis over GF(q), which is the unique canonical basis.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import NamedTuple

from .errors import Overflow, SizeLimit
from .fields import FieldTable, field_of_order

LINE_CAP_DEFAULT = 20_000
_UINT128_MAX = 1 << 128


def gaussian_coeff(n: int, k: int, q: int) -> int:
    """Gaussian binomial [n k]_q: number of k-dim subspaces of GF(q)^n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = 1
    den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    value, rem = divmod(num, den)
    assert rem == 0
    if value >= _UINT128_MAX:
        raise Overflow(f"[{n} {k}]_{q} exceeds 128 bits")
    return value


# ---------------------------------------------------------------------------
# Vector helpers over a FieldTable
# ---------------------------------------------------------------------------

def vec_add(gf: FieldTable, u, v) -> tuple[int, ...]:
    add = gf.add_table
    return tuple(add[a][b] for a, b in zip(u, v))


def vec_scale(gf: FieldTable, c: int, u) -> tuple[int, ...]:
    row = gf.mul_table[c]
    return tuple(row[a] for a in u)


def normalize(gf: FieldTable, u) -> tuple[int, ...] | None:
    """Canonical projective representative, or None for the zero vector."""
    for a in u:
        if a:
            if a == 1:
                return tuple(u)
            return vec_scale(gf, gf.inv_table[a], u)
    return None


def rref(gf: FieldTable, rows) -> tuple[tuple[int, ...], ...]:
    """Reduced row-echelon form over GF(q); zero rows dropped."""
    mat = [list(r) for r in rows]
    n_cols = len(mat[0]) if mat else 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col]:
                pivot = r
                break
        if pivot is None:
            continue
        mat[pivot_row], mat[pivot] = mat[pivot], mat[pivot_row]
        inv = gf.inv_table[mat[pivot_row][col]]
        if inv != 1:
            mat[pivot_row] = [gf.mul_table[inv][x] for x in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col]:
                c = mat[r][col]
                row_p = mat[pivot_row]
                neg = gf.neg_table[c]
                mul = gf.mul_table[neg]
                add = gf.add_table
                mat[r] = [add[x][mul[y]] for x, y in zip(mat[r], row_p)]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return tuple(tuple(r) for r in mat[:pivot_row])


def pivot_columns(basis) -> tuple[int, ...]:
    cols = []
    for row in basis:
        for j, x in enumerate(row):
            if x:
                cols.append(j)
                break
    return tuple(cols)


# ---------------------------------------------------------------------------
# Core types
# ---------------------------------------------------------------------------

class Point(NamedTuple):
    id: int
    coords: tuple[int, ...]


@dataclass(frozen=True)
class Subspace:
    """A projective subspace, keyed by its canonical RREF basis."""

    dim: int
    basis: tuple[tuple[int, ...], ...]
    point_ids: tuple[int, ...] = field(compare=False)

    def __hash__(self):
        return hash(self.basis)


class SpaceModel:
    """All points and lines of PG(n,q) with canonical ids and incidence maps.

    Immutable after build; every query is read-only.
    """

    def __init__(self, n: int, q: int, line_cap: int | None = LINE_CAP_DEFAULT):
        if n < 1:
            raise ValueError("projective dimension must be >= 1")
        gf = field_of_order(q)
        self.n = n
        self.q = q
        self.field = gf

        self.v = gaussian_coeff(n + 1, 1, q)
        self.num_lines = gaussian_coeff(n + 1, 2, q)
        self.r = gaussian_coeff(n, 1, q)  # lines per point
        if line_cap is not None and self.num_lines > line_cap:
            raise SizeLimit(
                f"PG({n},{q}) has {self.num_lines} lines, above the cap {line_cap}"
            )

        coords_list = []
        for pivot in range(n + 1):
            head = (0,) * pivot + (1,)
            for tail in product(range(q), repeat=n - pivot):
                coords_list.append(head + tail)
        coords_list.sort()
        assert len(coords_list) == self.v
        self.points = [Point(i, c) for i, c in enumerate(coords_list)]
        self.coord_to_id = {c: i for i, c in enumerate(coords_list)}

        self._build_lines()

    # -- construction -------------------------------------------------------

    def _line_points(self, i: int, j: int) -> tuple[int, ...]:
        gf = self.field
        u = self.points[i].coords
        w = self.points[j].coords
        ids = [i, j]
        for lam in range(1, self.q):
            vec = normalize(gf, vec_add(gf, u, vec_scale(gf, lam, w)))
            ids.append(self.coord_to_id[vec])
        ids.sort()
        return tuple(ids)

    def _build_lines(self) -> None:
        gf = self.field
        line_through: dict[tuple[int, int], int] = {}
        line_to_points: list[tuple[int, ...]] = []
        for i in range(self.v):
            for j in range(i + 1, self.v):
                if (i, j) in line_through:
                    continue
                pts = self._line_points(i, j)
                lid = len(line_to_points)
                line_to_points.append(pts)
                for a, b in combinations(pts, 2):
                    line_through[(a, b)] = lid
        assert len(line_to_points) == self.num_lines
        self.line_to_points = line_to_points
        self.line_through = line_through

        p2l: list[list[int]] = [[] for _ in range(self.v)]
        for lid, pts in enumerate(line_to_points):
            for p in pts:
                p2l[p].append(lid)
        self.point_to_lines = [tuple(ls) for ls in p2l]
        for ls in self.point_to_lines:
            assert len(ls) == self.r

        self.lines = [
            Subspace(
                dim=1,
                basis=rref(gf, (self.points[pts[0]].coords, self.points[pts[1]].coords)),
                point_ids=pts,
            )
            for pts in line_to_points
        ]
        self.line_mask = [0] * self.num_lines
        for lid, pts in enumerate(line_to_points):
            m = 0
            for p in pts:
                m |= 1 << p
            self.line_mask[lid] = m

    # -- queries ------------------------------------------------------------

    def point_subspace(self, pid: int) -> Subspace:
        return Subspace(dim=0, basis=(self.points[pid].coords,), point_ids=(pid,))

    def line_id(self, p1: int, p2: int) -> int:
        """The unique line through two distinct points."""
        if p1 > p2:
            p1, p2 = p2, p1
        return self.line_through[(p1, p2)]

    def line_id_of_subspace(self, s: Subspace) -> int:
        if s.dim != 1:
            raise ValueError("not a line")
        return self.line_id(s.point_ids[0], s.point_ids[1])

    def subspace_points(self, basis) -> tuple[int, ...]:
        """Ids of all projective points spanned by an RREF basis."""
        gf = self.field
        k1 = len(basis)
        ids = []
        for pivot in range(k1):
            for tail in product(range(self.q), repeat=k1 - pivot - 1):
                coeff = (0,) * pivot + (1,) + tail
                vec = basis[pivot]
                for c, row in zip(coeff[pivot + 1:], basis[pivot + 1:]):
                    if c:
                        vec = vec_add(gf, vec, vec_scale(gf, c, row))
                ids.append(self.coord_to_id[normalize(gf, vec)])
        ids.sort()
        return tuple(ids)

    def make_subspace(self, vectors) -> Subspace:
        """Subspace spanned by arbitrary vectors (canonical basis, all points)."""
        basis = rref(self.field, vectors)
        return Subspace(dim=len(basis) - 1, basis=basis, point_ids=self.subspace_points(basis))

    def descriptor(self) -> dict:
        gf = self.field
        return {
            "n": self.n,
            "q": self.q,
            "p": gf.p,
            "e": gf.e,
            "irr": list(gf.irr),
            "points": self.v,
            "lines": self.num_lines,
            "line_table_sha256": self.descriptor_hash(),
        }

    def descriptor_hash(self) -> str:
        h = hashlib.sha256()
        h.update(f"PG({self.n},{self.q});irr={list(self.field.irr)};".encode())
        for pts in self.line_to_points:
            h.update(",".join(map(str, pts)).encode())
            h.update(b";")
        return h.hexdigest()

    def __repr__(self) -> str:
        return f"SpaceModel(PG({self.n},{self.q}): {self.v} points, {self.num_lines} lines)"


def build_space(n: int, q: int, line_cap: int | None = LINE_CAP_DEFAULT) -> SpaceModel:
    """Build PG(n,q) with deterministic ids."""
    return SpaceModel(n, q, line_cap=line_cap)


def span(space: SpaceModel, a: Subspace, b: Subspace) -> Subspace:
    """Smallest subspace containing both; dim(a)+dim(b)+1 when disjoint."""
    return space.make_subspace(a.basis + b.basis)


def lines_in_subspace(space: SpaceModel, s: Subspace) -> list[int]:
    """Ids of every line fully contained in the subspace."""
    if s.dim < 1:
        raise ValueError("subspace must have dimension >= 1")
    seen = set()
    pts = s.point_ids
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            seen.add(space.line_through[(pts[i], pts[j])])
    expected = gaussian_coeff(s.dim + 1, 2, space.q)
    assert len(seen) == expected
    return sorted(seen)


def lines_meeting(space: SpaceModel, line_id: int) -> tuple[int, ...]:
    """All lines other than the given one that share at least one point with it."""
    out: set[int] = set()
    for p in space.line_to_points[line_id]:
        out.update(space.point_to_lines[p])
    out.discard(line_id)
    return tuple(sorted(out))


def sub_model(space: SpaceModel, carrier: Subspace, local: SpaceModel | None = None):
    """Canonical PG(k,q) model of a subspace, plus id maps in both directions.

    Points of the carrier are mapped through coefficient extraction at the
    pivot columns of the carrier's RREF basis, which is a collineation onto
    the fresh model.  Returns (model, point maps, line maps) where maps are
    (global->local, local->global) dicts for points and lists for lines.
    A prebuilt local PG(dim,q) model may be passed in to avoid rebuilding.
    """
    if local is None:
        local = build_space(carrier.dim, space.q)
    assert local.n == carrier.dim and local.q == space.q
    gf = space.field
    pivots = pivot_columns(carrier.basis)
    g2l_point: dict[int, int] = {}
    l2g_point: dict[int, int] = {}
    for gp in carrier.point_ids:
        vec = space.points[gp].coords
        local_vec = normalize(gf, tuple(vec[c] for c in pivots))
        lp = local.coord_to_id[local_vec]
        g2l_point[gp] = lp
        l2g_point[lp] = gp
    assert len(l2g_point) == local.v

    g2l_line: dict[int, int] = {}
    l2g_line: list[int] = [0] * local.num_lines
    for gl in lines_in_subspace(space, carrier):
        pts = space.line_to_points[gl]
        ll = local.line_id(g2l_point[pts[0]], g2l_point[pts[1]])
        g2l_line[gl] = ll
        l2g_line[ll] = gl
    assert len(g2l_line) == local.num_lines
    return local, g2l_point, l2g_point, g2l_line, l2g_line
