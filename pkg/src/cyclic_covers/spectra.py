r"""
Exact Lyapunov spectra of square-tiled cyclic covers.

A cyclic cover `M_N(a_1, a_2, a_3, a_4)` is the Riemann surface

.. MATH::

    w^N = (z - z_1)^{a_1} (z - z_2)^{a_2} (z - z_3)^{a_3} (z - z_4)^{a_4}

with deck group `Z/N`. The cohomology splits into eigenspaces `V(k)`,
`k = 1, ..., N-1`, whose dimensions and degrees are governed by the
fractional parts `t_i(k) = {a_i k / N}`. Everything here is exact: values
are :class:`fractions.Fraction` and the hot loops work on the integer
residues `a_i k mod N`.

EXAMPLES::

    >>> p = validate_params(30, [3, 5, 9, 13])
    >>> genus(p)
    25
    >>> lyapunov_spectrum(p)
    SpectrumMultiset({1:1, 2/5:4, 1/3:2, 4/15:2, 1/5:6, 0:10})
"""

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Optional, Tuple

from .errors import (
    GcdViolation,
    InclusionViolation,
    KOutOfRange,
    NoHolomorphicForm,
    NotLineBundle,
    NotOddN,
    ParseError,
    RangeViolation,
    SumViolation,
    WrongTSum,
)

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"-?\d+(/\d+)?")


def format_rational(x) -> str:
    """Wire format of a rational: ``"p/q"`` reduced, integers bare."""
    return str(Fraction(x))


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not _RATIONAL_RE.fullmatch(s):
        raise ParseError("not a rational in p/q form: %r" % s)
    try:
        return Fraction(s)
    except ZeroDivisionError:
        raise ParseError("zero denominator: %r" % s) from None


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverParams:
    """
    Validated parameters `(N, a_1, ..., a_4)` of a cyclic cover.

    Construction checks `0 < a_i <= N`, `gcd(N, a_1, ..., a_4) = 1` and
    `a_1 + ... + a_4 = 0 mod N`.

        >>> CoverParams(4, (2, 2, 2, 2))
        Traceback (most recent call last):
        ...
        cyclic_covers.errors.GcdViolation: gcd(N, a1, ..., a4) = 2, expected 1
    """
    N: int
    a: Tuple[int, int, int, int]

    def __post_init__(self):
        N = self.N
        a = tuple(self.a)
        if isinstance(N, bool) or not isinstance(N, int) or any(
                isinstance(x, bool) or not isinstance(x, int) for x in a):
            raise TypeError("cover parameters must be integers")
        if len(a) != 4:
            raise RangeViolation("expected four exponents a1..a4, got %d" % len(a))
        if N < 1:
            raise RangeViolation("N must be positive, got %d" % N)
        for i, x in enumerate(a):
            if not 0 < x <= N:
                raise RangeViolation("a%d = %d violates 0 < a_i <= N = %d" % (i + 1, x, N))
        g = gcd(N, *a)
        if g != 1:
            raise GcdViolation("gcd(N, a1, ..., a4) = %d, expected 1" % g)
        if sum(a) % N:
            raise SumViolation("a1 + ... + a4 = %d is not divisible by N = %d" % (sum(a), N))
        object.__setattr__(self, "a", a)

    def __str__(self):
        return "M_%d(%s)" % (self.N, ",".join(map(str, self.a)))


def validate_params(N, a) -> CoverParams:
    return CoverParams(N, tuple(a))


def _check_k(p, k, lo=1, hi=None):
    hi = p.N - 1 if hi is None else hi
    if not lo <= k <= hi:
        raise KOutOfRange("k = %d outside %d..%d for %s" % (k, lo, hi, p))


def _residues(p, k):
    N = p.N
    return tuple(x * k % N for x in p.a)


def _tsum(p, k):
    # t(k) as an integer, no range check
    N = p.N
    return sum(x * k % N for x in p.a) // N


# ---------------------------------------------------------------------------
# per-k quantities
# ---------------------------------------------------------------------------

def frac_profile(p: CoverParams, k: int) -> Tuple[Fraction, ...]:
    """The four fractional parts `t_i(k) = {a_i k / N}`."""
    _check_k(p, k)
    return tuple(Fraction(r, p.N) for r in _residues(p, k))


def t_sum(p: CoverParams, k: int) -> int:
    _check_k(p, k)
    return _tsum(p, k)


def eigen_dims(p: CoverParams, k: int) -> Tuple[int, int, int]:
    """
    Dimensions of `V^{1,0}(k)`, `V^{0,1}(k)` and `V(k)`.

    `dim V^{1,0}(k) = t(N-k) - 1` and `dim V^{0,1}(k) = t(k) - 1`.
    """
    _check_k(p, k)
    d10 = _tsum(p, p.N - k) - 1
    d01 = _tsum(p, k) - 1
    return d10, d01, d10 + d01


def degree_from_profile(t: Iterable) -> Fraction:
    r"""
    `\min(t_1, 1 - t_1, \ldots, t_4, 1 - t_4)` for any quadruple.

    This is the orbifold degree `d(k)` when evaluated on `t_i(k)`.
    """
    return min(min(Fraction(x), 1 - Fraction(x)) for x in t)


def cusp_orders_from_profile(t: Iterable) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Orders of the canonical section at the cusps `z_3 -> 0, 1, infinity`.

    The sum of the three equals :func:`degree_from_profile` whenever the
    entries lie in `[0, 1)` and add up to `2`.
    """
    t1, t2, t3, t4 = (Fraction(x) for x in t)
    return (min(ZERO, 1 - (t1 + t3)),
            min(ZERO, 1 - (t2 + t3)),
            t3 + min(ZERO, 1 - (t3 + t4)))


def _degree_num(res, N):
    # numerator of d over N
    return min(min(r, N - r) for r in res)


def _cusp_nums(res, N):
    # numerators over N of the three cusp orders
    r1, r2, r3, r4 = res
    return (min(0, N - r1 - r3), min(0, N - r2 - r3), r3 + min(0, N - r3 - r4))


def degree_d(p: CoverParams, k: int) -> Fraction:
    """
    Orbifold degree of the line bundle `V^{1,0}(k)`.

    Only defined when `t(N-k) = 2`; it is positive iff `t(k) = 2`.
    """
    _check_k(p, k)
    if _tsum(p, p.N - k) != 2:
        raise NotLineBundle("t(N-k) = %d for k = %d; V^{1,0}(k) is not a line bundle"
                            % (_tsum(p, p.N - k), k))
    return Fraction(_degree_num(_residues(p, k), p.N), p.N)


def cusp_orders(p: CoverParams, k: int) -> Tuple[Fraction, Fraction, Fraction]:
    _check_k(p, k)
    if _tsum(p, k) != 2:
        raise WrongTSum("cusp orders need t(k) = 2, got %d for k = %d" % (_tsum(p, k), k))
    return tuple(Fraction(x, p.N) for x in _cusp_nums(_residues(p, k), p.N))


def form_exponents(p: CoverParams, k: int) -> Tuple[int, int, int, int]:
    r"""
    Exponents `b_i = [a_i k / N]` of the holomorphic eigenform

    .. MATH::

        (z - z_1)^{b_1} \cdots (z - z_4)^{b_4} \frac{dz}{w^k}.

    No such form is holomorphic when `t(k) = 1`.
    """
    _check_k(p, k)
    if _tsum(p, k) == 1:
        raise NoHolomorphicForm("t(%d) = 1: the form is not holomorphic for any b_i" % k)
    return tuple(x * k // p.N for x in p.a)


@dataclass(frozen=True)
class EigenBlock:
    k: int
    t_parts: Tuple[Fraction, Fraction, Fraction, Fraction]
    t_sum: int
    dim_V10: int
    dim_V01: int
    dim_V: int
    degree: Optional[Fraction] = None
    form_exponents: Optional[Tuple[int, int, int, int]] = None
    cusp_orders: Optional[Tuple[Fraction, Fraction, Fraction]] = None


def eigen_block(p: CoverParams, k: int) -> EigenBlock:
    """Everything known about the eigenspace `V(k)` in one record."""
    _check_k(p, k)
    d10, d01, d = eigen_dims(p, k)
    t = _tsum(p, k)
    return EigenBlock(
        k=k,
        t_parts=frac_profile(p, k),
        t_sum=t,
        dim_V10=d10,
        dim_V01=d01,
        dim_V=d,
        degree=degree_d(p, k) if d10 == 1 else None,
        form_exponents=form_exponents(p, k) if t >= 2 else None,
        cusp_orders=cusp_orders(p, k) if t == 2 else None,
    )


# ---------------------------------------------------------------------------
# global invariants
# ---------------------------------------------------------------------------

def genus(p: CoverParams) -> int:
    r"""
    Genus `g = N + 1 - \frac{1}{2} \sum_i \gcd(a_i, N)`.

        >>> genus(validate_params(6, [5, 1, 6, 6]))
        0
    """
    s = sum(gcd(x, p.N) for x in p.a)
    twice = 2 * p.N + 2 - s
    assert twice % 2 == 0 and twice >= 0, p
    return twice // 2


def is_abelian_square(p: CoverParams) -> bool:
    """Whether the pulled back pillow differential is a global square."""
    return p.N % 2 == 0 and all(x % 2 for x in p.a)


@dataclass(frozen=True)
class WBlock:
    """Real variation `W(k)`, with `W(k) (x) C = V(k) + V(N-k)` for `k < N/2`."""
    k: int
    signature: Tuple[int, int]
    dim_W: int
    spectrum: Tuple[Fraction, ...]


def block_classification(p: CoverParams, k: int) -> WBlock:
    """
    Full (signed) Lyapunov spectrum of the block `W(k)`, `1 <= k <= N/2`.

    Only signature `(1, 1)` carries nonzero exponents `+-2 d(k)`; every
    other signature is unitary. The middle block `W(N/2)` has spectrum
    `{1, -1}` in the abelian case and vanishes otherwise.
    """
    N = p.N
    _check_k(p, k, 1, N // 2)
    tk, tnk = _tsum(p, k), _tsum(p, N - k)
    signature = (tnk - 1, tk - 1)
    dim_V = tk + tnk - 2
    if 2 * k == N:
        if is_abelian_square(p):
            return WBlock(k, signature, 2, (ONE, -ONE))
        # two of the a_i are even, so V(N/2) = 0
        assert dim_V == 0
        return WBlock(k, signature, 0, ())
    dim_W = 2 * dim_V
    if signature == (1, 1):
        lam = 2 * Fraction(_degree_num(_residues(p, k), N), N)
        spec = (lam, lam, -lam, -lam)
    else:
        spec = (ZERO,) * dim_W
    return WBlock(k, signature, dim_W, spec)


# ---------------------------------------------------------------------------
# multisets
# ---------------------------------------------------------------------------

class SpectrumMultiset:
    r"""
    Multiset of exact rationals in `[0, 1]`.

    Iteration yields the values with repetition, in descending order.

        >>> s = SpectrumMultiset.from_values([1, Fraction(1, 3), Fraction(1, 3)])
        >>> len(s), s.to_string()
        (3, '1:1;1/3:2')
    """
    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        c = {}
        for value, mult in dict(entries or {}).items():
            value = Fraction(value)
            if not ZERO <= value <= ONE:
                raise ValueError("spectrum value %s outside [0, 1]" % value)
            if not isinstance(mult, int) or mult < 0:
                raise ValueError("bad multiplicity %r" % (mult,))
            if mult:
                c[value] = c.get(value, 0) + mult
        self._entries = c

    @classmethod
    def from_values(cls, values):
        return cls(Counter(Fraction(v) for v in values))

    @classmethod
    def parse(cls, s: str):
        """Inverse of :meth:`to_string`."""
        s = s.strip()
        if not s:
            return cls()
        entries = {}
        for item in s.split(";"):
            value, sep, mult = item.partition(":")
            if not sep or not mult.strip().isdigit():
                raise ParseError("bad spectrum item %r" % item)
            value = parse_rational(value)
            if value in entries:
                raise ParseError("repeated spectrum value %s" % value)
            entries[value] = int(mult)
        return cls(entries)

    @property
    def entries(self) -> Dict[Fraction, int]:
        return dict(self._entries)

    def items(self):
        """Pairs `(value, multiplicity)` by decreasing value."""
        return sorted(self._entries.items(), reverse=True)

    def multiplicity(self, value) -> int:
        return self._entries.get(Fraction(value), 0)

    def __len__(self):
        return sum(self._entries.values())

    def __iter__(self):
        for v, m in self.items():
            for _ in range(m):
                yield v

    def __eq__(self, other):
        if not isinstance(other, SpectrumMultiset):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __add__(self, other):
        c = Counter(self._entries)
        c.update(other._entries)
        return SpectrumMultiset(c)

    def __sub__(self, other):
        c = Counter(self._entries)
        for v, m in other._entries.items():
            if c[v] < m:
                raise InclusionViolation(
                    "value %s occurs %d times, cannot remove %d" % (v, c[v], m))
            c[v] -= m
        return SpectrumMultiset(c)

    def total(self) -> Fraction:
        return sum((v * m for v, m in self._entries.items()), ZERO)

    def to_string(self) -> str:
        return ";".join("%s:%d" % (v, m) for v, m in self.items())

    def __repr__(self):
        return "SpectrumMultiset({%s})" % ", ".join("%s:%d" % vm for vm in self.items())


def lyapunov_spectrum(p: CoverParams) -> SpectrumMultiset:
    """
    Nonnegative part of the Lyapunov spectrum of the Hodge bundle.

    For each `k = 1, ..., N-1`: `t(k) = 3` contributes two zeros,
    `t(k) = 2` contributes `2 d(k)` (possibly zero), `t(k) = 1` nothing.
    """
    N = p.N
    c = Counter()
    for k in range(1, N):
        res = _residues(p, k)
        t = sum(res) // N
        if t == 3:
            c[ZERO] += 2
        elif t == 2:
            c[Fraction(2 * _degree_num(res, N), N)] += 1
    return SpectrumMultiset(c)


# ---------------------------------------------------------------------------
# quadratic differentials: orientation double cover for odd N
# ---------------------------------------------------------------------------

def double_cover_params(p: CoverParams) -> CoverParams:
    """
    Parameters of the canonical double cover `M_{2N}(a'_1, ..., a'_4)`.

    Odd exponents are kept, even ones are shifted by `N`. Only odd `N`
    is supported: for even `N` the double cover is not cyclic.
    """
    if p.N % 2 == 0:
        raise NotOddN("N = %d is even: the canonical double cover is not a cyclic cover" % p.N)
    return CoverParams(2 * p.N, tuple(x if x % 2 else x + p.N for x in p.a))


def minus_spectrum(p: CoverParams) -> Tuple[SpectrumMultiset, int]:
    """
    Spectrum of the anti-invariant part of the double cover and the
    effective genus `g_eff = genus(double cover) - genus(p)`.
    """
    q = double_cover_params(p)
    minus = lyapunov_spectrum(q) - lyapunov_spectrum(p)
    g_eff = genus(q) - genus(p)
    if len(minus) != g_eff:
        raise InclusionViolation("|spectrum_-| = %d differs from g_eff = %d" % (len(minus), g_eff))
    return minus, g_eff


# ---------------------------------------------------------------------------
# identities
# ---------------------------------------------------------------------------

def frac_sum(a: int, N: int) -> Fraction:
    """`sum_{k=1}^{N-1} {a k / N}` by direct summation."""
    return Fraction(sum(a * k % N for k in range(1, N)), N)


@dataclass(frozen=True)
class IdentityReport:
    params: CoverParams
    genus: int
    sum_t_minus_one: int
    frac_sums: Tuple[Fraction, ...]
    frac_expected: Tuple[Fraction, ...]

    @property
    def genus_residual(self) -> int:
        return self.sum_t_minus_one - self.genus

    @property
    def frac_residuals(self) -> Tuple[Fraction, ...]:
        return tuple(s - e for s, e in zip(self.frac_sums, self.frac_expected))

    @property
    def ok(self) -> bool:
        return self.genus_residual == 0 and not any(self.frac_residuals)


def check_identities(p: CoverParams) -> IdentityReport:
    """
    Evaluate `sum_k (t(k) - 1) = g` and, for each `a_i`,
    `sum_k {a_i k / N} = (N - gcd(a_i, N)) / 2`.
    """
    N = p.N
    return IdentityReport(
        params=p,
        genus=genus(p),
        sum_t_minus_one=sum(_tsum(p, k) - 1 for k in range(1, N)),
        frac_sums=tuple(frac_sum(x, N) for x in p.a),
        frac_expected=tuple(Fraction(N - gcd(x, N), 2) for x in p.a),
    )
