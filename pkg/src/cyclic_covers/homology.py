r"""
Cylinders and first homology of square-tiled surfaces.

The cellular chain complex of the tiling has

- `C_2`: the `M` squares,
- `C_1`: `2M` edges, the bottom edge `h_s` (oriented rightwards) and the
  left edge `v_s` (oriented upwards) of each square `s`; edges are indexed
  `s` and `M + s`,
- `C_0`: the vertices, i.e. cycles of the commutator of `\pi_h, \pi_v`.

With `\partial_2(s) = h_s + v_{\pi_h(s)} - h_{\pi_v(s)} - v_s`, the first
homology is `\ker \partial_1 / \mathrm{im}\, \partial_2` and has rank
`2g`. All linear algebra is exact, over the integers.

EXAMPLES::

    >>> from cyclic_covers.origami import stairs
    >>> [(c.width, c.height) for c in cylinders(stairs(5))]
    [(5, 1)]
    >>> homology_rank(stairs(5)), homological_dim_surface(stairs(5))
    (6, 1)
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .origami import Origami, genus_of, perm_cycles, vertex_cycles


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------

def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        row = [x // g for x in row]
    return row


class _Echelon:
    """Integer row echelon basis grown one vector at a time."""

    def __init__(self):
        self.rows = []

    def reduce(self, vec):
        r = list(vec)
        for p, b in self.rows:
            if r[p]:
                c, d = b[p], r[p]
                r = _primitive([c * x - d * y for x, y in zip(r, b)])
        return r

    def add(self, vec) -> bool:
        r = self.reduce(vec)
        for p, x in enumerate(r):
            if x:
                self.rows.append((p, r))
                return True
        return False

    def __len__(self):
        return len(self.rows)


def rank(vectors) -> int:
    """Rank over the rationals of a list of integer vectors."""
    e = _Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def nullspace(rows, ncols) -> List[List[int]]:
    """Integer basis of `{x : A x = 0}` for the matrix with the given rows."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    i = 0
    for col in range(ncols):
        k = next((k for k in range(i, len(m)) if m[k][col]), None)
        if k is None:
            continue
        m[i], m[k] = m[k], m[i]
        p = m[i][col]
        m[i] = [x / p for x in m[i]]
        for k in range(len(m)):
            if k != i and m[k][col]:
                c = m[k][col]
                m[k] = [x - c * y for x, y in zip(m[k], m[i])]
        pivots.append(col)
        i += 1
    basis = []
    free = [c for c in range(ncols) if c not in set(pivots)]
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in enumerate(pivots):
            x[p] = -m[r][f]
        den = 1
        for y in x:
            den = den * y.denominator // gcd(den, y.denominator)
        basis.append(_primitive([int(y * den) for y in x]))
    return basis


# ---------------------------------------------------------------------------
# chain complex
# ---------------------------------------------------------------------------

def corner_vertices(o: Origami) -> List[int]:
    """Index of the vertex at the bottom left corner of every square."""
    vid = [0] * o.squares
    for i, c in enumerate(vertex_cycles(o)):
        for s in c:
            vid[s] = i
    # vertex cycles track top right corners; the bottom left corner of s is
    # the top right corner of the square diagonally below-left of it
    return [vid[o._vi[o._hi[s]]] for s in range(o.squares)]


def boundary_1(o: Origami) -> List[List[int]]:
    """Matrix of `\\partial_1` as a list of columns (one per edge)."""
    M = o.squares
    bl = corner_vertices(o)
    nv = len(vertex_cycles(o))
    cols = []
    for g in (o._h, o._v):
        for s in range(M):
            col = [0] * nv
            col[bl[g[s]]] += 1
            col[bl[s]] -= 1
            cols.append(col)
    return cols


def boundary_2(o: Origami) -> List[List[int]]:
    """Images `\\partial_2(s)` in the edge basis, one per square."""
    M = o.squares
    out = []
    for s in range(M):
        c = [0] * (2 * M)
        c[s] += 1
        c[M + o._h[s]] += 1
        c[o._v[s]] -= 1
        c[M + s] -= 1
        out.append(c)
    return out


def _transpose(cols, nrows):
    return [[c[i] for c in cols] for i in range(nrows)]


def cycle_space(o: Origami) -> List[List[int]]:
    """Integer basis of `\\ker \\partial_1`."""
    cols = boundary_1(o)
    nv = len(cols[0])
    return nullspace(_transpose(cols, nv), 2 * o.squares)


def is_cycle(o: Origami, chain: Sequence[int]) -> bool:
    cols = boundary_1(o)
    nv = len(cols[0])
    return all(sum(x * c[i] for x, c in zip(chain, cols)) == 0 for i in range(nv))


def homology_rank(o: Origami) -> int:
    M = o.squares
    cols = boundary_1(o)
    nv = len(cols[0])
    z = 2 * M - rank(_transpose(cols, nv))
    return z - rank(boundary_2(o))


# ---------------------------------------------------------------------------
# intersection form
# ---------------------------------------------------------------------------

def _dual_cycle(o: Origami, b):
    """
    A cycle of the dual complex homologous to the primal cycle ``b``.

    The dual edge crossing `h_s` runs from the centre of `\\pi_v^{-1}(s)`
    to the centre of `s`, the one crossing `v_s` from `\\pi_h^{-1}(s)` to
    `s`; they are stored at the index of the primal edge they cross.
    Every primal edge is pushed by `(1/2, 1/2)` onto a dual edge and the
    resulting chain is closed up by arcs around the vertices.
    """
    M = o.squares
    h, v, hi, vi = o._h, o._v, o._hi, o._vi
    dual = [0] * (2 * M)
    for s in range(M):
        if b[s]:
            dual[M + h[s]] += b[s]
        if b[M + s]:
            dual[v[s]] += b[M + s]
    beta = [0] * M
    for t in range(M):
        x = dual[t]
        if x:
            beta[t] += x
            beta[vi[t]] -= x
        x = dual[M + t]
        if x:
            beta[t] += x
            beta[hi[t]] -= x
    # squares sharing a bottom left corner, in counterclockwise order
    around = [v[h[vi[hi[s]]]] for s in range(M)]
    for cyc in perm_cycles(around):
        acc = 0
        for x in cyc:
            acc += beta[x]
            if acc:
                y = vi[hi[x]]
                dual[M + x] -= acc
                dual[hi[x]] -= acc
                dual[M + h[y]] += acc
                dual[v[h[y]]] += acc
        assert acc == 0
    return dual


def intersection(o: Origami, a: Sequence[int], b: Sequence[int]) -> int:
    """
    Algebraic intersection number of the 1-cycles ``a`` and ``b``.

    A horizontal edge crossed upwards counts `+1`, a vertical edge crossed
    rightwards `-1`; on the one-square torus `h \\cdot v = 1`.
    """
    M = o.squares
    d = _dual_cycle(o, b)
    return sum(a[s] * d[s] for s in range(M)) - sum(a[M + s] * d[M + s] for s in range(M))


# ---------------------------------------------------------------------------
# cylinders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cylinder:
    """
    Maximal horizontal cylinder; ``rows`` lists 1-indexed squares from
    bottom to top, each row in left-to-right order, stacked rigidly.
    """
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @property
    def height(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class HomologyClass:
    """A 1-cycle in the edge basis; see the module docstring."""
    coordinates: Tuple[int, ...]


def cylinders(o: Origami) -> List[Cylinder]:
    """
    Maximal horizontal cylinders, sorted by their least square.

    A row (cycle of `\\pi_h`) continues into the row above it when `\\pi_v`
    commutes with `\\pi_h` on every square of the row, i.e. when its top
    boundary carries no cone point. On a torus, where no vertex is
    singular, the bottom left corner of square 1 is the marked point.
    """
    M = o.squares
    h, v = o._h, o._v
    rows = perm_cycles(list(h))
    row_of = [0] * M
    for i, r in enumerate(rows):
        for s in r:
            row_of[s] = i

    marked_tr = None
    if all(len(c) == 1 for c in vertex_cycles(o)):
        # top right corner of the square diagonally below-left of square 1
        marked_tr = o._vi[o._hi[0]]

    def continues(r):
        return all(v[h[s]] == h[v[s]] for s in r) and (
            marked_tr is None or marked_tr not in r)

    up = {}
    for i, r in enumerate(rows):
        if continues(r):
            up[i] = row_of[v[r[0]]]
    has_below = set(up.values())

    out = []
    for i, r in enumerate(rows):
        if i in has_below:
            continue
        stack = [list(r)]
        j = i
        while j in up:
            stack.append([v[s] for s in stack[-1]])
            j = up[j]
        out.append(Cylinder(tuple(tuple(s + 1 for s in row) for row in stack)))
    assert sum(c.width * c.height for c in out) == M
    return sorted(out, key=lambda c: min(min(row) for row in c.rows))


def waist_classes(o: Origami) -> List[HomologyClass]:
    """Core curve of every cylinder: the bottom edges of its lowest row."""
    out = []
    for c in cylinders(o):
        x = [0] * (2 * o.squares)
        for s in c.rows[0]:
            x[s - 1] += 1
        out.append(HomologyClass(tuple(x)))
    return out


def homological_dim_surface(o: Origami) -> int:
    """Dimension of the span of the waist curves in `H_1(S, R)`."""
    e = _Echelon()
    for b in boundary_2(o):
        e.add(b)
    base = len(e)
    for w in waist_classes(o):
        e.add(w.coordinates)
    return len(e) - base


@dataclass(frozen=True)
class IntersectionReport:
    dimension: int
    genus: int
    homology_rank: int
    isotropic: bool

    @property
    def ok(self) -> bool:
        return self.isotropic and self.dimension <= self.genus \
            and self.homology_rank == 2 * self.genus


def intersection_rank_check(o: Origami) -> IntersectionReport:
    """
    Check that the waist curves span an isotropic subspace, which bounds
    their span by the genus.
    """
    ws = [w.coordinates for w in waist_classes(o)]
    iso = all(intersection(o, a, b) == 0 for a in ws for b in ws)
    return IntersectionReport(homological_dim_surface(o), genus_of(o),
                              homology_rank(o), iso)
