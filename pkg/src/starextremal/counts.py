"""Exact closed-form arithmetic for star counts of the two extremal families.

A *t-star* is a copy of K_{1,t}.  A graph with degree sequence d_1..d_n
contains sum C(d_v, t) of them for t >= 2; for t = 1 the count is the edge
count e(G) = (1/2) sum d_v.  Everything here is plain integer arithmetic on
family parameters; no graph objects are involved.

Two parametrized families are supported, named G and H (the names the CLI
uses in ``construct --family``):

* family G:  K_{i+l} + (I_i u K_{n-2i-l}),  -1 <= l <= n-3,
  1 <= i <= (n-1-l)/2.  When i+l = 0 this degenerates to I_1 u K_{n-1}.
  Members of this family fail the hamiltonicity-type property matching
  the offset l (l=0 non-hamiltonian, l=-1 non-traceable, l=1 not
  hamiltonian-connected, l=k not k-edge-hamiltonian / not k-hamiltonian).
* family H:  K_{k-1} + (K_i u K_{n-k-i+1}),  1 <= k <= n-2,
  1 <= i <= (n-k+1)/2.  When k = 1 this is K_i u K_{n-i}.  Members are
  not k-connected.

For a minimum-degree floor d, two member indices matter: ``ID``, the index
forced by the degree floor, and ``I0``, the top of the index range.  The
maximum star count over all graphs with min degree >= d lacking the
property is attained at one of these two indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import comb
from operator import add, le, mul, sub
from typing import Callable, Iterable, Literal, Optional

from .errors import DegreeListError, EmptyDomainError, ParameterError

ArgmaxTag = Literal["ID", "I0", "BOTH"]
Ordering = Literal["G1_LARGER", "I0_LARGER", "EQUAL"]


# ---------------------------------------------------------------------------
# basic arithmetic
# ---------------------------------------------------------------------------

def binom(m: int, t: int) -> int:
    """C(m, t) as an exact integer; 0 when t > m.  Inputs must be >= 0."""
    if m < 0 or t < 0:
        raise ParameterError(f"binom requires nonnegative arguments, got ({m}, {t})")
    return comb(m, t)


_COLUMNS: list[list[int]] = []
_COLUMNS_REV: list[list[int]] = []
_COLUMNS_LIMIT = -1


def binomial_columns(limit: int) -> list[list[int]]:
    """Table ``cols[t][m] = C(m, t)`` for 0 <= t, m <= limit, zero-padded
    below the diagonal so the bulk range checks can index without
    branching.  One lookup beats math.comb once the entries stop fitting
    in a machine word."""
    global _COLUMNS, _COLUMNS_REV, _COLUMNS_LIMIT
    if limit > _COLUMNS_LIMIT:
        cols = [[1] * (limit + 1)]
        for t in range(1, limit + 1):
            prev = cols[t - 1]
            col = [0] * (limit + 1)
            for m in range(t, limit + 1):
                col[m] = col[m - 1] + prev[m - 1]
            cols.append(col)
        _COLUMNS = cols
        _COLUMNS_REV = [col[::-1] for col in cols]
        _COLUMNS_LIMIT = limit
    return _COLUMNS


def _binomial_columns_rev(limit: int) -> list[list[int]]:
    """``revcols[t][j] = C(limit - j, t)``: the columns reversed, so slices
    that walk m downward become forward islices."""
    binomial_columns(limit)
    return _COLUMNS_REV


def stars_from_degrees(degrees: Iterable[int], t: int) -> int:
    """Star count of a graph given its degree list.

    t = 1 returns half the degree sum (the edge count); t >= 2 returns
    sum C(d, t).  Degrees need not be sorted.
    """
    degs = list(degrees)
    n = len(degs)
    if not 1 <= t <= max(n - 1, 1):
        raise ParameterError(f"t={t} outside [1, n-1] for n={n}")
    for d in degs:
        if not 0 <= d <= n - 1:
            raise DegreeListError(f"degree {d} outside [0, {n - 1}]")
    if t == 1:
        total = sum(degs)
        if total % 2:
            raise DegreeListError(f"odd degree sum {total} cannot come from a graph")
        return total // 2
    return sum(comb(d, t) for d in degs)


# ---------------------------------------------------------------------------
# family parameters
# ---------------------------------------------------------------------------

def index_i0_g(n: int, ell: int) -> int:
    """Top member index of family G: floor((n-1-ell)/2)."""
    return (n - 1 - ell) // 2


def index_id_g(d: int, ell: int) -> int:
    """Member index forced by a minimum-degree floor d: max(1, d-ell)."""
    return max(1, d - ell)


def max_degree_floor_g(n: int, ell: int) -> int:
    """Largest valid degree floor: floor((n+ell-1)/2).  Above this no
    graph lacking the matching property exists."""
    return (n + ell - 1) // 2


def index_i0_h(n: int, k: int) -> int:
    return (n - k + 1) // 2


def index_id_h(d: int, k: int) -> int:
    return max(1, d - k + 2)


def max_degree_floor_h(n: int, k: int) -> int:
    return (n + k - 3) // 2


def _check_g_range(n: int, ell: int) -> None:
    if n < 3:
        raise ParameterError(f"family G needs n >= 3, got n={n}")
    if not -1 <= ell <= n - 3:
        raise ParameterError(f"offset ell={ell} outside [-1, n-3] for n={n}")


def _check_h_range(n: int, k: int) -> None:
    if n < 3:
        raise ParameterError(f"family H needs n >= 3, got n={n}")
    if not 1 <= k <= n - 2:
        raise ParameterError(f"connectivity k={k} outside [1, n-2] for n={n}")


def _check_t(n: int, t: int) -> None:
    if not 1 <= t <= n - 1:
        raise ParameterError(f"t={t} outside [1, n-1] for n={n}")


def _check_degree_floor_g(n: int, ell: int, d: int) -> None:
    if d < 0:
        raise ParameterError(f"degree floor d={d} must be >= 0")
    if d > max_degree_floor_g(n, ell):
        raise EmptyDomainError(
            f"d={d} > floor((n+ell-1)/2)={max_degree_floor_g(n, ell)}: every "
            f"graph on {n} vertices with that minimum degree has the property"
        )


def _check_degree_floor_h(n: int, k: int, d: int) -> None:
    if d < 0:
        raise ParameterError(f"degree floor d={d} must be >= 0")
    if d > max_degree_floor_h(n, k):
        raise EmptyDomainError(
            f"d={d} > floor((n+k-3)/2)={max_degree_floor_h(n, k)}: every "
            f"graph on {n} vertices with that minimum degree is {k}-connected"
        )


@dataclass(frozen=True)
class FamilyParams:
    """Validated (n, ell, i) naming one member of family G."""

    n: int
    ell: int
    i: int

    def __post_init__(self) -> None:
        _check_g_range(self.n, self.ell)
        if not 1 <= self.i <= index_i0_g(self.n, self.ell):
            raise ParameterError(
                f"index i={self.i} outside [1, {index_i0_g(self.n, self.ell)}] "
                f"for (n={self.n}, ell={self.ell})"
            )

    @property
    def i0(self) -> int:
        return index_i0_g(self.n, self.ell)

    def id_for(self, d: int) -> int:
        _check_degree_floor_g(self.n, self.ell, d)
        return index_id_g(d, self.ell)


@dataclass(frozen=True)
class ConnFamilyParams:
    """Validated (n, k, i) naming one member of family H."""

    n: int
    k: int
    i: int

    def __post_init__(self) -> None:
        _check_h_range(self.n, self.k)
        if not 1 <= self.i <= index_i0_h(self.n, self.k):
            raise ParameterError(
                f"index i={self.i} outside [1, {index_i0_h(self.n, self.k)}] "
                f"for (n={self.n}, k={self.k})"
            )

    @property
    def i0(self) -> int:
        return index_i0_h(self.n, self.k)

    def id_for(self, d: int) -> int:
        _check_degree_floor_h(self.n, self.k, d)
        return index_id_h(d, self.k)


# ---------------------------------------------------------------------------
# degree lists and closed-form star counts
# ---------------------------------------------------------------------------

def degree_list_g(n: int, ell: int, i: int) -> list[int]:
    """Nondecreasing degree list of the family-G member (n, ell, i):
    i copies of i+ell, then n-2i-ell copies of n-i-1, then i+ell copies
    of n-1.  The member is the unique graph with this list."""
    FamilyParams(n, ell, i)
    return [i + ell] * i + [n - i - 1] * (n - 2 * i - ell) + [n - 1] * (i + ell)


def degree_list_h(n: int, k: int, i: int) -> list[int]:
    """Nondecreasing degree list of the family-H member (n, k, i):
    i copies of i+k-2, then n-k-i+1 copies of n-i-1, then k-1 copies
    of n-1."""
    ConnFamilyParams(n, k, i)
    return [i + k - 2] * i + [n - i - 1] * (n - k - i + 1) + [n - 1] * (k - 1)


def stars_g(n: int, ell: int, i: int, t: int) -> int:
    """Exact star count of the family-G member, from the closed form
    i*C(i+l,t) + (n-2i-l)*C(n-i-1,t) + (i+l)*C(n-1,t); halved degree sum
    at t = 1."""
    FamilyParams(n, ell, i)
    _check_t(n, t)
    if t == 1:
        total = i * (i + ell) + (n - 2 * i - ell) * (n - i - 1) + (i + ell) * (n - 1)
        return total // 2
    return (
        i * comb(i + ell, t)
        + (n - 2 * i - ell) * comb(n - i - 1, t)
        + (i + ell) * comb(n - 1, t)
    )


def stars_h(n: int, k: int, i: int, t: int) -> int:
    """Exact star count of the family-H member, analogous to stars_g."""
    ConnFamilyParams(n, k, i)
    _check_t(n, t)
    if t == 1:
        total = i * (i + k - 2) + (n - k - i + 1) * (n - i - 1) + (k - 1) * (n - 1)
        return total // 2
    return (
        i * comb(i + k - 2, t)
        + (n - k - i + 1) * comb(n - i - 1, t)
        + (k - 1) * comb(n - 1, t)
    )


# ---------------------------------------------------------------------------
# series over the index range
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarSeries:
    """Star counts of one family along a contiguous index range.

    At t = 1 the values are degree sums (twice the edge count) so that the
    integer delta formulas hold without halving; for t >= 2 they are plain
    star counts.  ``deltas[j] = values[j+1] - values[j]``.
    """

    family: Literal["G", "H"]
    n: int
    offset: int  # ell for family G, k for family H
    t: int
    i_lo: int
    i_hi: int
    values: tuple[int, ...]
    deltas: tuple[int, ...]

    def deltas_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.deltas, self.deltas[1:]))


def _series(family: str, n: int, offset: int, t: int, i_lo: int, i_hi: int,
            point: Callable[[int], int]) -> StarSeries:
    if i_lo > i_hi:
        raise ParameterError(f"empty index range [{i_lo}, {i_hi}]")
    values = tuple(point(i) for i in range(i_lo, i_hi + 1))
    deltas = tuple(b - a for a, b in zip(values, values[1:]))
    return StarSeries(family, n, offset, t, i_lo, i_hi, values, deltas)  # type: ignore[arg-type]


def star_series_g(n: int, ell: int, t: int, i_lo: int, i_hi: int) -> StarSeries:
    FamilyParams(n, ell, i_lo)
    FamilyParams(n, ell, i_hi)
    _check_t(n, t)
    if t == 1:
        point = lambda i: 2 * stars_g(n, ell, i, 1)
    else:
        point = lambda i: stars_g(n, ell, i, t)
    return _series("G", n, ell, t, i_lo, i_hi, point)


def star_series_h(n: int, k: int, t: int, i_lo: int, i_hi: int) -> StarSeries:
    ConnFamilyParams(n, k, i_lo)
    ConnFamilyParams(n, k, i_hi)
    _check_t(n, t)
    if t == 1:
        point = lambda i: 2 * stars_h(n, k, i, 1)
    else:
        point = lambda i: stars_h(n, k, i, t)
    return _series("H", n, k, t, i_lo, i_hi, point)


def h_t1_delta(n: int, k: int, i: int) -> int:
    """Closed form for the degree-sum delta of family H at t = 1:
    4i + 2k - 2n - 4, which is <= -2 throughout the index range."""
    return 4 * i + 2 * k - 2 * n - 4


# ---------------------------------------------------------------------------
# endpoint bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StarBound:
    """Maximum star count over a family index range plus which endpoint
    attains it."""

    value: int
    tag: ArgmaxTag
    i_id: int
    i_i0: int
    value_id: int
    value_i0: int


def star_bound_g(n: int, ell: int, d: int, t: int) -> StarBound:
    """Largest star count among graphs with min degree >= d lacking the
    property matching ell: max of the two endpoint members."""
    _check_g_range(n, ell)
    _check_t(n, t)
    _check_degree_floor_g(n, ell, d)
    i_id = index_id_g(d, ell)
    i_i0 = index_i0_g(n, ell)
    v_id = stars_g(n, ell, i_id, t)
    v_i0 = stars_g(n, ell, i_i0, t)
    if v_id == v_i0:
        tag: ArgmaxTag = "BOTH"
    elif v_id > v_i0:
        tag = "ID"
    else:
        tag = "I0"
    return StarBound(max(v_id, v_i0), tag, i_id, i_i0, v_id, v_i0)


def star_bound_h(n: int, k: int, d: int, t: int) -> StarBound:
    """Largest star count among graphs with min degree >= d that are not
    k-connected.  At t = 1 the series is strictly decreasing, so the ID
    endpoint alone gives the bound; for t >= 2 both endpoints compete."""
    _check_h_range(n, k)
    _check_t(n, t)
    _check_degree_floor_h(n, k, d)
    i_id = index_id_h(d, k)
    i_i0 = index_i0_h(n, k)
    v_id = stars_h(n, k, i_id, t)
    v_i0 = stars_h(n, k, i_i0, t)
    if t == 1:
        tag: ArgmaxTag = "BOTH" if v_id == v_i0 else "ID"
        return StarBound(v_id, tag, i_id, i_i0, v_id, v_i0)
    if v_id == v_i0:
        tag = "BOTH"
    elif v_id > v_i0:
        tag = "ID"
    else:
        tag = "I0"
    return StarBound(max(v_id, v_i0), tag, i_id, i_i0, v_id, v_i0)


# ---------------------------------------------------------------------------
# extremal-set description
# ---------------------------------------------------------------------------

def family_size(n: int, ell: int, i: int) -> int:
    """Number of labeled members of the family around member (n, ell, i):
    spanning subgraphs missing only clique-internal edges, 2^C(n-2i-l, 2)."""
    FamilyParams(n, ell, i)
    return 1 << comb(n - 2 * i - ell, 2)


@dataclass(frozen=True)
class ExtremalEntry:
    """One component of an extremal set: either the single member graph at
    index ``i``, or the whole spanning-subgraph family around it."""

    kind: Literal["single", "family"]
    i: int
    labeled_count: int


@dataclass(frozen=True)
class ExtremalDescription:
    """All graphs attaining star_bound_g, per the three-way case split on
    which endpoint wins and whether t exceeds n - i - 1."""

    n: int
    ell: int
    d: int
    t: int
    bound: int
    case: Literal["id_larger", "i0_larger", "tie"]
    entries: tuple[ExtremalEntry, ...]

    @property
    def labeled_count(self) -> int:
        return sum(e.labeled_count for e in self.entries)


def extremal_description(n: int, ell: int, d: int, t: int) -> ExtremalDescription:
    """Describe the set of graphs with min degree >= d lacking the property
    that attain the star bound.

    When the winning endpoint index i satisfies t <= n-i-1 the winner is
    the unique extremal graph; once t > n-i-1 the clique-part degrees stop
    contributing C(d, t) terms, and every spanning subgraph missing only
    clique-internal edges ties, so the whole family is extremal.  Ties
    between the two endpoints combine both sides.
    """
    b = star_bound_g(n, ell, d, t)
    i_id, i_i0 = b.i_id, b.i_i0

    def single(i: int) -> ExtremalEntry:
        return ExtremalEntry("single", i, 1)

    def fam(i: int) -> ExtremalEntry:
        return ExtremalEntry("family", i, family_size(n, ell, i))

    if b.value_id > b.value_i0:
        case: Literal["id_larger", "i0_larger", "tie"] = "id_larger"
        entries = (single(i_id),) if t <= n - i_id - 1 else (fam(i_id),)
    elif b.value_id < b.value_i0:
        case = "i0_larger"
        entries = (single(i_i0),) if t <= n - i_i0 - 1 else (fam(i_i0),)
    else:
        case = "tie"
        if i_id == i_i0:
            entries = (single(i_i0),) if t <= n - i_i0 - 1 else (fam(i_i0),)
        elif t <= n - i_i0 - 1:
            entries = (single(i_id), single(i_i0))
        elif t <= n - i_id - 1:
            entries = (fam(i_i0), single(i_id))
        else:
            entries = (fam(i_id), fam(i_i0))
    return ExtremalDescription(n, ell, d, t, b.value, case, entries)


# ---------------------------------------------------------------------------
# the gap between the first and top members (ell = 0)
# ---------------------------------------------------------------------------

def gap_closed_form(n: int, t: int) -> int:
    """The first-minus-top star gap at ell = 0 from the simplified closed
    forms (one for odd n, one for even n).  Valid for t >= 2; exact via
    rational arithmetic."""
    if n < 4:
        raise ParameterError(f"gap closed form needs n >= 4, got {n}")
    if not 2 <= t <= n - 1:
        raise ParameterError(f"gap closed form needs 2 <= t <= n-1, got t={t}")
    if n % 2:
        val = (
            Fraction(comb(n - 1, t))
            * (Fraction(n - 1, 2) - t + Fraction(t, n - 1))
            - Fraction(comb((n - 1) // 2, t)) * Fraction(n + 1, 2)
        )
    else:
        val = (
            Fraction(comb(n - 1, t))
            * (Fraction(n, 2) - t + Fraction(t, n - 1))
            - Fraction(comb(n // 2, t))
            * (Fraction(n, 2) - t + 1 + Fraction(2 * t, n))
        )
    assert val.denominator == 1
    return int(val)


def gap_first_vs_top(n: int, t: int) -> int:
    """s_t(first member) - s_t(top member) at ell = 0.

    Computed by direct subtraction of the closed forms; on 3 <= t <= n/2,
    where the simplified expressions apply, the result is cross-checked
    against gap_closed_form and a mismatch raises.
    """
    if n < 4:
        raise ParameterError(f"gap needs n >= 4, got {n}")
    _check_t(n, t)
    val = stars_g(n, 0, 1, t) - stars_g(n, 0, index_i0_g(n, 0), t)
    if 3 <= t <= n // 2:
        closed = gap_closed_form(n, t)
        if closed != val:
            raise AssertionError(
                f"gap mismatch at (n={n}, t={t}): subtraction {val} vs closed {closed}"
            )
    return val


# ---------------------------------------------------------------------------
# threshold comparison and the conjecture scanner
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThresholdComparison:
    """Exact ordering of the first vs top member star counts, plus whether
    the proven threshold statement applies and agrees."""

    n: int
    ell: int
    t: int
    ordering: Ordering
    strict: bool
    predicted: Optional[Ordering]  # weak prediction, None when no statement applies
    predicted_strict: bool
    consistent: Optional[bool]


def threshold_compare(n: int, ell: int, t: int) -> ThresholdComparison:
    _check_g_range(n, ell)
    _check_t(n, t)
    diff = stars_g(n, ell, 1, t) - stars_g(n, ell, index_i0_g(n, ell), t)
    if diff > 0:
        ordering: Ordering = "G1_LARGER"
    elif diff < 0:
        ordering = "I0_LARGER"
    else:
        ordering = "EQUAL"
    strict = diff != 0

    predicted: Optional[Ordering] = None
    predicted_strict = False
    if 2 * t >= n + ell + 1:
        # large t: the top member dominates, strictly for 0 <= ell <= n-5
        predicted = "I0_LARGER"
        predicted_strict = 0 <= ell <= n - 5
    elif ell == 0 and n >= 4:
        # small t at ell = 0: the first member dominates, strictly for n >= 6
        predicted = "G1_LARGER"
        predicted_strict = n >= 6

    if predicted is None:
        consistent: Optional[bool] = None
    else:
        if predicted_strict:
            consistent = ordering == predicted
        else:
            consistent = ordering in (predicted, "EQUAL")
    return ThresholdComparison(n, ell, t, ordering, strict, predicted,
                               predicted_strict, consistent)


@dataclass(frozen=True)
class ScanRow:
    n: int
    ell: int
    t: int
    sign: int  # sign of s_t(top) - s_t(first); the conjectured value is -1


@dataclass(frozen=True)
class ConjectureScan:
    rows: tuple[ScanRow, ...]
    # per ell: least scanned n from which every larger scanned n has all
    # rows strictly in the conjectured direction; None if the tail is dirty
    persistent_from: dict[int, Optional[int]]


def conjecture_scan(n_lo: int, n_hi: int, ell_lo: int, ell_hi: int,
                    emit: Optional[Callable[[ScanRow], None]] = None) -> ConjectureScan:
    """Tabulate the sign of s_t(top) - s_t(first) for every t below the
    proven threshold, i.e. 2t < n + ell + 1.

    This only reports evidence; nothing is asserted.  For each ell the
    summary records the least scanned n after which the strict conjectured
    ordering holds for every larger n in the scan.
    """
    if n_lo > n_hi or ell_lo > ell_hi:
        raise ParameterError(
            f"empty scan range n=[{n_lo},{n_hi}] ell=[{ell_lo},{ell_hi}]")
    if ell_lo < -1:
        raise ParameterError(f"ell must be >= -1, got {ell_lo}")
    rows: list[ScanRow] = []
    clean_by_ell: dict[int, list[tuple[int, bool]]] = {}
    for n in range(max(n_lo, 3), n_hi + 1):
        for ell in range(ell_lo, min(ell_hi, n - 3) + 1):
            i0 = index_i0_g(n, ell)
            all_strict = True
            saw_row = False
            for t in range(1, n):
                if 2 * t >= n + ell + 1:
                    break
                diff = stars_g(n, ell, i0, t) - stars_g(n, ell, 1, t)
                sign = (diff > 0) - (diff < 0)
                row = ScanRow(n, ell, t, sign)
                rows.append(row)
                saw_row = True
                if emit is not None:
                    emit(row)
                if sign >= 0:
                    all_strict = False
            if saw_row:
                clean_by_ell.setdefault(ell, []).append((n, all_strict))
    persistent: dict[int, Optional[int]] = {}
    for ell, flags in clean_by_ell.items():
        start: Optional[int] = None
        for n, ok in flags:
            if ok:
                if start is None:
                    start = n
            else:
                start = None
        persistent[ell] = start
    return ConjectureScan(tuple(rows), persistent)


def threshold_scan(n_lo: int, n_hi: int, ell: int) -> list[ThresholdComparison]:
    """threshold_compare over every valid (n, t) with this ell."""
    if n_lo > n_hi:
        raise ParameterError(f"empty scan range [{n_lo}, {n_hi}]")
    out = []
    for n in range(max(n_lo, max(3, ell + 3)), n_hi + 1):
        for t in range(1, n):
            out.append(threshold_compare(n, ell, t))
    return out


# ---------------------------------------------------------------------------
# bulk range checks (the arithmetic acceptance suites)
# ---------------------------------------------------------------------------
# These return violation lists (expected empty) rather than booleans so a
# failure pinpoints the offending parameters.  They use the shared Pascal
# table and drop terms that are constant in i, which second differences
# cannot see; this keeps the n <= 300 sweeps inside their time budget.

def _series_fast(ct: list[int], ctr: list[int], limit: int, n: int,
                 off_a: int, coef_b_start: int, coef_b_step: int,
                 i0: int) -> list[int]:
    """[i*C(i+off_a, t) + coef_b(i)*C(n-i-1, t) for i in 1..i0] built with
    C-level map pipelines; ct/ctr are a column and its reverse from the
    shared table of size limit+1."""
    a = map(mul, range(1, i0 + 1), islice(ct, off_a + 1, off_a + i0 + 1))
    b = map(mul, range(coef_b_start, coef_b_start + coef_b_step * i0, coef_b_step),
            islice(ctr, limit - n + 2, limit - n + 2 + i0))
    return list(map(add, a, b))


def convexity_violations_g(n: int) -> list[tuple[int, int, int]]:
    """(ell, t, i) triples where the family-G series delta decreases.
    The (i+ell)*C(n-1,t) term is linear in i and dropped: second
    differences cannot see it."""
    cols = binomial_columns(n)
    colsrev = _binomial_columns_rev(n)
    limit = len(cols[0]) - 1
    bad: list[tuple[int, int, int]] = []
    for ell in range(-1, n - 2):
        i0 = index_i0_g(n, ell)
        if i0 < 3:
            continue
        for t in range(1, n):
            g = _series_fast(cols[t], colsrev[t], limit, n,
                             ell, n - 2 - ell, -2, i0)
            d = list(map(sub, islice(g, 1, None), g))
            if not all(map(le, d, islice(d, 1, None))):
                for j in range(len(d) - 1):
                    if d[j + 1] < d[j]:
                        bad.append((ell, t, j + 2))
    return bad


def convexity_violations_h(n: int) -> list[tuple[int, int, int]]:
    """(k, t, i) triples where the family-H series delta decreases."""
    cols = binomial_columns(n)
    colsrev = _binomial_columns_rev(n)
    limit = len(cols[0]) - 1
    bad: list[tuple[int, int, int]] = []
    for k in range(1, n - 1):
        i0 = index_i0_h(n, k)
        if i0 < 3:
            continue
        for t in range(1, n):
            h = _series_fast(cols[t], colsrev[t], limit, n,
                             k - 2, n - k, -1, i0)
            d = list(map(sub, islice(h, 1, None), h))
            if not all(map(le, d, islice(d, 1, None))):
                for j in range(len(d) - 1):
                    if d[j + 1] < d[j]:
                        bad.append((k, t, j + 2))
    return bad


def interior_max_violations_g(n: int) -> list[tuple[int, int, int, int]]:
    """(ell, t, a, i) where an interior index i of the range [a, i0] matches
    or beats both endpoints.  a runs over every value the degree floor can
    force, i.e. all of [1, i0]."""
    cols = binomial_columns(n)
    bad: list[tuple[int, int, int, int]] = []
    for ell in range(-1, n - 2):
        i0 = index_i0_g(n, ell)
        if i0 < 3:
            continue
        for t in range(1, n):
            ct = cols[t]
            cnl = ct[n - 1]
            g = [
                i * ct[i + ell] + (n - 2 * i - ell) * ct[n - i - 1]
                + (i + ell) * cnl
                for i in range(1, i0 + 1)
            ]
            top = g[-1]
            # suffix_max[j] = max g over positions j..len-2 (interior side)
            suffix_max = [0] * len(g)
            running = None
            for j in range(len(g) - 2, -1, -1):
                running = g[j] if running is None else max(running, g[j])
                suffix_max[j] = running
            for a_idx in range(0, len(g) - 2):
                if suffix_max[a_idx + 1] >= max(g[a_idx], top):
                    # locate one offending interior index for the report
                    for j in range(a_idx + 1, len(g) - 1):
                        if g[j] >= max(g[a_idx], top):
                            bad.append((ell, t, a_idx + 1, j + 1))
                            break
    return bad


def h_t1_delta_violations(n: int) -> list[tuple[int, int]]:
    """(k, i) pairs where the family-H degree-sum delta at t = 1 differs
    from 4i+2k-2n-4 or exceeds -2."""
    bad: list[tuple[int, int]] = []
    for k in range(1, n - 1):
        i0 = index_i0_h(n, k)
        if i0 < 2:
            continue
        prev = 2 * stars_h(n, k, 1, 1)
        for i in range(2, i0 + 1):
            cur = 2 * stars_h(n, k, i, 1)
            delta = cur - prev
            if delta != h_t1_delta(n, k, i) or delta > -2:
                bad.append((k, i))
            prev = cur
    return bad


def threshold_violations_ell0(n: int) -> list[int]:
    """t values where the ell = 0 two-branch threshold fails at this n:
    the first member dominates below t = (n+1)/2 and the top member at or
    above it, strictly once n >= 6.  Evaluated through gap_first_vs_top,
    so the closed-form cross-check runs on its validated domain too."""
    if n < 4:
        raise ParameterError(f"threshold check needs n >= 4, got {n}")
    bad: list[int] = []
    for t in range(1, n):
        diff = gap_first_vs_top(n, t)
        if 2 * t >= n + 1:
            ok = diff < 0 if n >= 6 else diff <= 0
        else:
            ok = diff > 0 if n >= 6 else diff >= 0
        if not ok:
            bad.append(t)
    return bad


def threshold_violations_large_t(n: int) -> list[tuple[int, int]]:
    """(ell, t) pairs with 2t >= n+ell+1 where the top member fails to
    dominate the first (strictly for 0 <= ell <= n-5)."""
    bad: list[tuple[int, int]] = []
    cols = binomial_columns(n)

    def s(ell: int, i: int, t: int) -> int:
        ct = cols[t]
        return (i + ell) * ct[n - 1] + i * ct[i + ell] \
            + (n - 2 * i - ell) * ct[n - i - 1]

    for ell in range(-1, n - 2):
        i0 = index_i0_g(n, ell)
        t_start = (n + ell + 2) // 2  # least t with 2t >= n+ell+1
        for t in range(max(1, t_start), n):
            diff = s(ell, 1, t) - s(ell, i0, t)
            ok = diff < 0 if 0 <= ell <= n - 5 else diff <= 0
            if not ok:
                bad.append((ell, t))
    return bad
