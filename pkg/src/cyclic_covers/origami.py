r"""
Square-tiled surfaces (origamis).

An origami on `M` squares is a pair of permutations `(\pi_h, \pi_v)` of
`{1, ..., M}`: `\pi_h(s)` is the square to the right of `s` and `\pi_v(s)`
the square atop `s`. Squares are 1-indexed in the public interface and
permutations are given by their image arrays; internally everything is
0-indexed.

EXAMPLES::

    >>> o = stairs(4)
    >>> o
    Origami(h=[2, 3, 4, 1], v=[4, 3, 2, 1])
    >>> stratum(o), genus_of(o)
    (Stratum(1, 1), 2)
    >>> [list(s) for s in automorphisms(o)]
    [[1, 2, 3, 4], [3, 4, 1, 2]]
    >>> isomorphic(quotient(o, [3, 4, 1, 2]), stairs(2))
    True
"""

import json
from dataclasses import dataclass
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .errors import (
    Disconnected,
    LengthMismatch,
    NotAbelianCase,
    NotAutomorphism,
    NotPermutation,
    ParseError,
)
from .spectra import CoverParams, is_abelian_square


def perm_invert(p):
    q = [0] * len(p)
    for i, j in enumerate(p):
        q[j] = i
    return q


def perm_cycles(p):
    """Cycles of a 0-indexed permutation, each starting at its least element."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if not seen[i]:
            c = []
            j = i
            while not seen[j]:
                seen[j] = True
                c.append(j)
                j = p[j]
            cycles.append(c)
    return cycles


def perms_are_transitive(perms, n):
    if n == 0:
        return True
    seen = [False] * n
    seen[0] = True
    todo = [0]
    count = 1
    while todo:
        i = todo.pop()
        for p in perms:
            j = p[i]
            if not seen[j]:
                seen[j] = True
                count += 1
                todo.append(j)
    return count == n


def _check_perm(p, name):
    n = len(p)
    try:
        ok = sorted(p) == list(range(1, n + 1))
    except TypeError:
        ok = False
    if not ok or any(isinstance(x, bool) or not isinstance(x, int) for x in p):
        raise NotPermutation("%s is not a permutation of 1..%d: %r" % (name, n, list(p)))


class Origami:
    """
    Connected square-tiled surface given by the right and up neighbours.

    Instances are immutable; equality compares the labeled permutations.
    Use :func:`isomorphic` for equality up to relabeling of the squares.
    """
    __slots__ = ("_h", "_v", "_hi", "_vi")

    def __init__(self, h, v, check=True):
        h = list(h)
        v = list(v)
        if check:
            if len(h) != len(v):
                raise LengthMismatch("h has %d entries but v has %d" % (len(h), len(v)))
            if not h:
                raise NotPermutation("an origami needs at least one square")
            _check_perm(h, "h")
            _check_perm(v, "v")
        self._h = tuple(x - 1 for x in h)
        self._v = tuple(x - 1 for x in v)
        if check and not perms_are_transitive([self._h, self._v], len(h)):
            raise Disconnected("the permutations do not act transitively on the squares")
        self._hi = tuple(perm_invert(self._h))
        self._vi = tuple(perm_invert(self._v))

    @classmethod
    def _from0(cls, h, v, check=False):
        return cls([x + 1 for x in h], [x + 1 for x in v], check=check)

    @property
    def squares(self) -> int:
        return len(self._h)

    @property
    def h(self) -> Tuple[int, ...]:
        return tuple(x + 1 for x in self._h)

    @property
    def v(self) -> Tuple[int, ...]:
        return tuple(x + 1 for x in self._v)

    def __eq__(self, other):
        if not isinstance(other, Origami):
            return NotImplemented
        return self._h == other._h and self._v == other._v

    def __hash__(self):
        return hash((self._h, self._v))

    def __repr__(self):
        return "Origami(h=%s, v=%s)" % (list(self.h), list(self.v))

    def to_dict(self) -> dict:
        return {"squares": self.squares, "h": list(self.h), "v": list(self.v)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict) or set(d) != {"squares", "h", "v"}:
            raise ParseError("origami JSON must have exactly the keys squares, h, v")
        h, v, m = d["h"], d["v"], d["squares"]
        if not isinstance(h, list) or not isinstance(v, list) or not isinstance(m, int):
            raise ParseError("origami JSON: h and v must be lists, squares an integer")
        if m != len(h):
            raise LengthMismatch("squares = %d but h has %d entries" % (m, len(h)))
        return cls(h, v)

    @classmethod
    def from_json(cls, s: str):
        try:
            d = json.loads(s)
        except json.JSONDecodeError as e:
            raise ParseError("invalid JSON: %s" % e) from None
        return cls.from_dict(d)


def make_origami(h: Sequence[int], v: Sequence[int]) -> Origami:
    return Origami(h, v)


def torus() -> Origami:
    return Origami([1], [1])


def stairs(N: int) -> Origami:
    """
    The one-cylinder surface `S(N)`: `N` squares in a row, the top of
    square `k` glued to the bottom of square `N + 1 - k`.
    """
    if N < 1:
        raise ValueError("N must be positive")
    return Origami([k % N + 1 for k in range(1, N + 1)],
                   [N + 1 - k for k in range(1, N + 1)])


# ---------------------------------------------------------------------------
# vertices, strata, genus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Stratum:
    """Degrees of the zeros, sorted decreasingly; empty for the torus."""
    zero_degrees: Tuple[int, ...]

    def __init__(self, degrees=()):
        object.__setattr__(self, "zero_degrees",
                           tuple(sorted((d for d in degrees if d), reverse=True)))

    @property
    def genus(self) -> int:
        return sum(self.zero_degrees) // 2 + 1

    def __repr__(self):
        return "Stratum(%s)" % ", ".join(map(str, self.zero_degrees))

    def __str__(self):
        return "H(%s)" % ",".join(map(str, self.zero_degrees))


def vertex_permutation(o: Origami) -> List[int]:
    r"""
    The commutator `\pi_v^{-1} \pi_h^{-1} \pi_v \pi_h` (0-indexed).

    Going right, up, left and down from `s` turns once around the top
    right corner of `s`; the cycles are the vertices of the tiling and a
    cycle of length `\ell` is a cone point of angle `2 \pi \ell`.
    """
    h, v, hi, vi = o._h, o._v, o._hi, o._vi
    return [vi[hi[v[h[s]]]] for s in range(o.squares)]


def vertex_cycles(o: Origami) -> List[List[int]]:
    return perm_cycles(vertex_permutation(o))


def stratum(o: Origami) -> Stratum:
    return Stratum(len(c) - 1 for c in vertex_cycles(o))


def genus_of(o: Origami) -> int:
    V = len(vertex_cycles(o))
    chi = V - o.squares
    assert chi % 2 == 0
    return (2 - chi) // 2


# ---------------------------------------------------------------------------
# relabelings
# ---------------------------------------------------------------------------

def _relabel_from(o, base):
    # BFS labeling using (h, v, h^-1, v^-1) in that order
    n = o.squares
    gens = (o._h, o._v, o._hi, o._vi)
    label = [-1] * n
    label[base] = 0
    order = [base]
    i = 0
    while i < len(order):
        s = order[i]
        i += 1
        for g in gens:
            t = g[s]
            if label[t] < 0:
                label[t] = len(order)
                order.append(t)
    H = [0] * n
    V = [0] * n
    for s in range(n):
        H[label[s]] = label[o._h[s]]
        V[label[s]] = label[o._v[s]]
    return tuple(H), tuple(V)


def canonical_form(o: Origami) -> Origami:
    """
    Representative of the isomorphism class of ``o``.

    Among the `M` breadth-first relabelings (one per base square) take the
    lexicographically least pair of image arrays.
    """
    best = min(_relabel_from(o, b) for b in range(o.squares))
    return Origami._from0(*best)


def isomorphic(o1: Origami, o2: Origami) -> bool:
    if o1.squares != o2.squares:
        return False
    return canonical_form(o1) == canonical_form(o2)


def _commuting_map(o, target):
    # the unique map s0 -> target commuting with h and v, or None
    n = o.squares
    phi = [-1] * n
    phi[0] = target
    todo = [0]
    while todo:
        s = todo.pop()
        for g in (o._h, o._v, o._hi, o._vi):
            t, u = g[s], g[phi[s]]
            if phi[t] < 0:
                phi[t] = u
                todo.append(t)
            elif phi[t] != u:
                return None
    if len(set(phi)) != n:
        return None
    return phi


def automorphisms(o: Origami) -> List[Tuple[int, ...]]:
    """
    Translation automorphisms: permutations of the squares commuting with
    both `\\pi_h` and `\\pi_v`, as 1-indexed image tuples, sorted.

    A commuting permutation is determined by the image of one square, so
    there are at most `M` of them.
    """
    auts = []
    for t in range(o.squares):
        phi = _commuting_map(o, t)
        if phi is not None:
            auts.append(tuple(x + 1 for x in phi))
    return sorted(auts)


def is_automorphism(o: Origami, sigma: Sequence[int]) -> bool:
    s = [x - 1 for x in sigma]
    return all(s[o._h[i]] == o._h[s[i]] and s[o._v[i]] == o._v[s[i]]
               for i in range(o.squares))


def quotient(o: Origami, sigma: Sequence[int]) -> Origami:
    """
    Quotient of ``o`` by the cyclic group generated by the translation
    automorphism ``sigma`` (1-indexed images).

    The orbits of `\\langle\\sigma\\rangle` are numbered by their least
    element.
    """
    sigma = list(sigma)
    if len(sigma) != o.squares:
        raise LengthMismatch("sigma has %d entries, the origami %d squares"
                             % (len(sigma), o.squares))
    _check_perm(sigma, "sigma")
    if not is_automorphism(o, sigma):
        raise NotAutomorphism("sigma does not commute with both h and v")
    cycles = perm_cycles([x - 1 for x in sigma])
    orbit_of = {}
    for i, c in enumerate(cycles):
        for s in c:
            orbit_of[s] = i
    h = [orbit_of[o._h[c[0]]] for c in cycles]
    v = [orbit_of[o._v[c[0]]] for c in cycles]
    return Origami._from0(h, v, check=True)


# ---------------------------------------------------------------------------
# square-tiled cyclic covers
# ---------------------------------------------------------------------------
#
# The pillow is a white square W and a black square B glued along their
# boundaries. In the holomorphic chart of B its top and bottom are the
# pillow's bottom and top edges; gluings across the pillow's top/bottom
# edges are translations, across left/right they are half-turns. The
# sheet index jumps by g_e when crossing edge e from W to B. Clockwise
# from the top-left, the corners carry the exponents a1, a3, a2, a4 and
# going clockwise around a corner shifts the sheet by its exponent. With
# this placement the half-turn of the pillow about the centres of W and B
# swaps z1 <-> z2 and z3 <-> z4. In the abelian case squares are turned
# upside down according to the parity of the sheet, which makes every
# gluing a translation.

@dataclass(frozen=True)
class CoverTiling:
    """An origami realizing `M_N(a_1, ..., a_4)` with its pillow bookkeeping.

    Square ``j + 1`` is the white square on sheet ``j`` and square
    ``N + j + 1`` the black one, `j = 0, ..., N-1`.
    """
    params: CoverParams
    origami: Origami
    deck: Tuple[int, ...]
    tau: Optional[Tuple[int, ...]]


def _edge_shifts(p):
    N = p.N
    a1, a2, a3, a4 = p.a
    return {"L": 0, "T": -a1 % N, "R": (-a1 - a3) % N, "Bo": (-a1 - a2 - a3) % N}


def _cover_tiling(p: CoverParams) -> CoverTiling:
    if not is_abelian_square(p):
        raise NotAbelianCase("%s: need N even and all a_i odd" % p)
    N = p.N
    g = _edge_shifts(p)

    def W(j):
        return j % N

    def B(j):
        return N + j % N

    h = [0] * (2 * N)
    v = [0] * (2 * N)
    for j in range(N):
        upright_w = j % 2 == 0
        upright_b = (j - g["T"]) % 2 == 0
        # white square: chart edges R, L, T, Bo
        h[W(j)] = B(j + g["R"]) if upright_w else B(j + g["L"])
        v[W(j)] = B(j + g["T"]) if upright_w else B(j + g["Bo"])
        # black square: chart right R, left L, top Bo, bottom T
        h[B(j)] = W(j - g["R"]) if upright_b else W(j - g["L"])
        v[B(j)] = W(j - g["Bo"]) if upright_b else W(j - g["T"])
    o = Origami._from0(h, v, check=True)

    deck = tuple(W(j + 1) + 1 for j in range(N)) + tuple(B(j + 1) + 1 for j in range(N))

    tau = None
    for c_w in range(N):
        for c_b in range(N):
            sigma = [W(c_w - j) + 1 for j in range(N)] + [B(c_b - j) + 1 for j in range(N)]
            if sigma != sorted(sigma) and is_automorphism(o, sigma):
                tau = tuple(sigma)
                break
        if tau is not None:
            break
    return CoverTiling(p, o, deck, tau)


def cyclic_cover_origami(p: CoverParams) -> Origami:
    """
    The `2N`-square origami of the abelian cyclic cover `M_N(a_1, ..., a_4)`.

    The deck generator `(colour, j) -> (colour, j + 1)` maps squares to
    squares but acts on the flat structure by a half-turn; its square is a
    translation automorphism.
    """
    return _cover_tiling(p).origami


def deck_generator(p: CoverParams) -> Tuple[int, ...]:
    return _cover_tiling(p).deck


def cover_involution(p: CoverParams) -> Optional[Tuple[int, ...]]:
    r"""
    The translation involution `\tau` of the cover sending the white
    square of sheet `j` to the white square of sheet `c - j` and the black
    square of sheet `j` to the black square of sheet `c' - j`, if any
    (least `(c, c')`).

    It exists for covers `M_N(a, N-a, b, N-b)`, where it lifts the
    involution of the sphere swapping `z_1 \leftrightarrow z_2` and
    `z_3 \leftrightarrow z_4`, and satisfies `\tau T \tau = T^{-1}`.
    """
    return _cover_tiling(p).tau


def stratum_from_params(p: CoverParams) -> Stratum:
    r"""
    Stratum of the abelian cover read off from the ramification: over
    `z_i` there are `\gcd(a_i, N)` points of cone angle
    `N \pi / \gcd(a_i, N)`.
    """
    if not is_abelian_square(p):
        raise NotAbelianCase("%s: need N even and all a_i odd" % p)
    N = p.N
    degrees = []
    for x in p.a:
        d = gcd(x, N)
        degrees.extend([N // (2 * d) - 1] * d)
    return Stratum(degrees)
