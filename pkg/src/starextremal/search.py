"""Isomorph-free exhaustive generation of small graphs and the brute-force
oracle that verifies the star-count bounds and extremal-set predictions.

Generation follows the canonical-construction-path scheme: a graph on m
vertices is produced only from the parent obtained by deleting its
canonically chosen vertex, so each isomorphism class appears exactly once
without a global seen-set.  The canonical deletion is the vertex whose
deletion maximizes (sorted degree list, canonical key) of the remainder;
a cheap degree-list prefilter keeps canonical-labeling calls rare.

Two independent counting routes cross-validate the generator: an explicit
orbit sweep over all labeled graphs (n <= 7) and a cycle-index count over
the pair action of the symmetric group (n <= 8).
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Iterator, Literal, Optional, Sequence

from . import counts
from .canon import canonical_form, canonical_key
from .errors import BudgetExceededError, EmptyDomainError, ParameterError
from .graphs import Graph, build_g, build_h, enumerate_family
from .properties import (
    PropertySpec,
    chvatal_witness,
    is_hamiltonian,
    is_hamiltonian_connected,
    is_traceable,
    k_edge_failure_size,
    k_ham_failure_size,
    vertex_connectivity,
)

GENERATION_CEILING = 10
KEDGE_DEFAULT_MAX_N = 7
KEDGE_DEFAULT_MAX_K = 3

Verdict = Literal["MATCHES_BOUND", "BELOW_BOUND", "VIOLATION", "EMPTY_DOMAIN"]
Mode = Literal["MAX_ONLY", "MAX_WITH_EXTREMALS"]


# ---------------------------------------------------------------------------
# isomorph-free generation
# ---------------------------------------------------------------------------

def _delete_vertex(rows: Sequence[int], w: int) -> tuple[int, ...]:
    low = (1 << w) - 1
    out = []
    for v, r in enumerate(rows):
        if v == w:
            continue
        out.append((r & low) | ((r >> (w + 1)) << w))
    return tuple(out)


def _deletion_degseq(degs: Sequence[int], rows: Sequence[int], w: int) -> tuple[int, ...]:
    rw = rows[w]
    return tuple(sorted(
        degs[v] - (rw >> v & 1) for v in range(len(degs)) if v != w))


def _is_canonical_child(rows: tuple[int, ...], degs: Sequence[int]) -> bool:
    """True iff the newly added vertex (the last one) is a canonically
    chosen deletion, i.e. its deletion key ties the maximum."""
    m = len(rows)
    u = m - 1
    inv_u = _deletion_degseq(degs, rows, u)
    shortlist = [u]
    for w in range(m - 1):
        inv_w = _deletion_degseq(degs, rows, w)
        if inv_w > inv_u:
            return False
        if inv_w == inv_u and w != u:
            shortlist.append(w)
    if len(shortlist) == 1:
        return True
    key_u = canonical_key(Graph(m - 1, _delete_vertex(rows, u)))
    for w in shortlist:
        if w == u:
            continue
        if canonical_key(Graph(m - 1, _delete_vertex(rows, w))) > key_u:
            return False
    return True


def enumerate_graphs(n: int, min_degree: int = 0) -> Iterator[Graph]:
    """Every isomorphism class of simple n-vertex graphs with minimum
    degree >= min_degree, each exactly once.

    Intermediate levels keep a graph only if every vertex can still reach
    the degree floor with one augmentation step per remaining vertex.
    """
    if n > GENERATION_CEILING:
        raise ParameterError(
            f"exhaustive enumeration is capped at n={GENERATION_CEILING}; "
            f"n={n} would be infeasible for the property deciders")
    if n < 1:
        raise ParameterError("enumeration needs n >= 1")
    if min_degree > n - 1:
        return
    level: list[tuple[int, ...]] = [(0,)]
    if 0 + (n - 1) < min_degree:
        return
    if n == 1:
        yield Graph(1, (0,))
        return
    for m in range(2, n + 1):
        slack = n - m
        nxt: list[tuple[int, ...]] = []
        for parent in level:
            pdegs = [r.bit_count() for r in parent]
            seen_children: set[tuple[int, int]] = set()
            for smask in range(1 << (m - 1)):
                if smask.bit_count() + slack < min_degree:
                    continue
                degs = [pdegs[v] + (smask >> v & 1) for v in range(m - 1)]
                degs.append(smask.bit_count())
                if any(dv + slack < min_degree for dv in degs):
                    continue
                rows = tuple(
                    r | ((smask >> v & 1) << (m - 1))
                    for v, r in enumerate(parent)
                ) + (smask,)
                if not _is_canonical_child(rows, degs):
                    continue
                key = canonical_key(Graph(m, rows))
                if key in seen_children:
                    continue
                seen_children.add(key)
                nxt.append(rows)
        level = nxt
    for rows in level:
        yield Graph(n, rows)


# ---------------------------------------------------------------------------
# independent counting oracles
# ---------------------------------------------------------------------------

def unlabeled_count_by_orbit_sweep(n: int, min_degree: int = 0) -> int:
    """Number of isomorphism classes with min degree >= min_degree, by
    sweeping all 2^C(n,2) labeled graphs and marking whole relabeling
    orbits.  Independent of the canonical-labeling machinery.  n <= 7."""
    if not 1 <= n <= 7:
        raise ParameterError("orbit sweep supported for 1 <= n <= 7")
    pairs = list(combinations(range(n), 2))
    eidx = {p: i for i, p in enumerate(pairs)}
    nedges = len(pairs)
    eperms = []
    for p in permutations(range(n)):
        eperms.append(tuple(
            eidx[tuple(sorted((p[u], p[v])))] for u, v in pairs))
    vmask = [0] * n
    for i, (u, v) in enumerate(pairs):
        vmask[u] |= 1 << i
        vmask[v] |= 1 << i
    seen = bytearray(1 << nedges)
    count = 0
    for mask in range(1 << nedges):
        if seen[mask]:
            continue
        if min_degree == 0 or all(
                (mask & vm).bit_count() >= min_degree for vm in vmask):
            count += 1
        for ep in eperms:
            m2 = 0
            r = mask
            while r:
                b = r & -r
                r ^= b
                m2 |= 1 << ep[b.bit_length() - 1]
            seen[m2] = 1
    return count


def unlabeled_count_by_cycle_index(n: int) -> int:
    """Number of isomorphism classes of n-vertex graphs via Burnside's
    lemma on the pair action: (1/n!) sum over permutations of 2^(cycles).
    A second independent route, practical to n = 8."""
    if not 1 <= n <= 8:
        raise ParameterError("cycle-index count supported for 1 <= n <= 8")
    pairs = list(combinations(range(n), 2))
    eidx = {p: i for i, p in enumerate(pairs)}
    total = 0
    for p in permutations(range(n)):
        ep = [eidx[tuple(sorted((p[u], p[v])))] for u, v in pairs]
        seen = [False] * len(pairs)
        cycles = 0
        for i in range(len(pairs)):
            if seen[i]:
                continue
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = ep[j]
        total += 1 << cycles
    return total // factorial(n)


# ---------------------------------------------------------------------------
# per-level property records
# ---------------------------------------------------------------------------

@dataclass
class GraphRecord:
    rows: tuple[int, ...]
    degseq: tuple[int, ...]
    min_deg: int
    hamiltonian: bool
    traceable: bool
    ham_connected: bool
    kham_fail: Optional[int]   # least deletion size breaking hamiltonicity
    kedge_fail: Optional[int]  # least forest size not extending; None = none found
    kedge_checked_to: int      # forest sizes examined (0 = k-edge not evaluated)
    connectivity: int


def _record_for(rows: tuple[int, ...], n: int, kedge_max_k: int) -> GraphRecord:
    g = Graph(n, rows)
    degseq = tuple(sorted(r.bit_count() for r in rows))
    kham_cap = max(n - 3, 0)
    kedge_fail = None
    if kedge_max_k > 0:
        kedge_fail = k_edge_failure_size(g, kedge_max_k)
    return GraphRecord(
        rows=rows,
        degseq=degseq,
        min_deg=degseq[0],
        hamiltonian=is_hamiltonian(g),
        traceable=is_traceable(g),
        ham_connected=is_hamiltonian_connected(g),
        kham_fail=k_ham_failure_size(g, kham_cap),
        kedge_fail=kedge_fail,
        kedge_checked_to=kedge_max_k,
        connectivity=vertex_connectivity(g),
    )


def _record_batch(args: tuple[list[tuple[int, ...]], int, int]) -> list[GraphRecord]:
    rows_list, n, kedge_max_k = args
    return [_record_for(rows, n, kedge_max_k) for rows in rows_list]


def level_records(n: int, kedge_max_k: int = 0, workers: int = 1) -> list[GraphRecord]:
    """Property records for every isomorphism class on n vertices."""
    all_rows = [g.rows for g in enumerate_graphs(n, 0)]
    if workers <= 1 or len(all_rows) < 256:
        return [_record_for(rows, n, kedge_max_k) for rows in all_rows]
    chunks = max(1, len(all_rows) // (workers * 8))
    batches = [all_rows[i:i + chunks] for i in range(0, len(all_rows), chunks)]
    with multiprocessing.Pool(workers) as pool:
        parts = pool.map(_record_batch, [(b, n, kedge_max_k) for b in batches])
    return [rec for part in parts for rec in part]


# ---------------------------------------------------------------------------
# search tasks and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchTask:
    n: int
    min_degree: int
    prop: PropertySpec
    t: int
    mode: Mode = "MAX_WITH_EXTREMALS"


@dataclass(frozen=True)
class SearchReport:
    n: int
    family: Literal["G", "H"]
    property_label: str
    ell_or_k: int
    d: int
    t: int
    bound: Optional[int]
    observed_max: Optional[int]
    verdict: Verdict
    extremal_g6: tuple[str, ...]          # canonical forms of the maximizers
    predicted_g6: tuple[str, ...]         # empty when no prediction applies
    extremal_set_matches: Optional[bool]  # None = no prediction (connectivity)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "property": self.property_label,
            "ell_or_k": self.ell_or_k,
            "d": self.d,
            "t": self.t,
            "bound": self.bound,
            "observed_max": self.observed_max,
            "verdict": self.verdict,
            "extremal_count": len(self.extremal_g6),
            "extremal_g6": list(self.extremal_g6),
            "extremal_set_matches": self.extremal_set_matches,
        }


def predicted_extremal_g6(n: int, ell: int, d: int, t: int,
                          cap: int = 4096) -> set[str]:
    """Canonical forms of the predicted extremal set (dedup over the
    labeled family members)."""
    desc = counts.extremal_description(n, ell, d, t)
    out: set[str] = set()
    for entry in desc.entries:
        if entry.kind == "single":
            out.add(canonical_form(build_g(n, ell, entry.i)))
        else:
            for member in enumerate_family(n, ell, entry.i, cap=cap):
                out.add(canonical_form(member))
    return out


def _lacks(rec: GraphRecord, spec: PropertySpec) -> bool:
    if spec.kind == "hamiltonian":
        return not rec.hamiltonian
    if spec.kind == "traceable":
        return not rec.traceable
    if spec.kind == "hamiltonian_connected":
        return not rec.ham_connected
    if spec.kind == "k_hamiltonian":
        return rec.kham_fail is not None and rec.kham_fail <= spec.k
    if spec.kind == "k_edge_hamiltonian":
        if spec.k > rec.kedge_checked_to:
            raise ParameterError(
                f"records only cover k-edge checks to k={rec.kedge_checked_to}")
        return rec.kedge_fail is not None and rec.kedge_fail <= spec.k
    return not (len(rec.degseq) > spec.k and rec.connectivity >= spec.k)


def _cell_report(n: int, spec: PropertySpec, d: int, t: int,
                 elig: list[GraphRecord],
                 star_cache: dict[tuple[int, ...], list[int]],
                 canon_cache: dict[tuple[int, ...], str],
                 collect: bool) -> SearchReport:
    family: Literal["G", "H"] = "H" if spec.kind == "k_connected" else "G"
    ell_or_k = spec.k if spec.kind == "k_connected" else spec.ell
    if family == "G":
        bound = counts.star_bound_g(n, spec.ell, d, t)
    else:
        bound = counts.star_bound_h(n, spec.k, d, t)
    best = -1
    argmax: list[GraphRecord] = []
    for rec in elig:
        vals = star_cache.get(rec.degseq)
        if vals is None:
            vals = [counts.stars_from_degrees(rec.degseq, tt) for tt in range(1, n)]
            star_cache[rec.degseq] = vals
        v = vals[t - 1]
        if v > best:
            best = v
            argmax = [rec]
        elif v == best and collect:
            argmax.append(rec)
    if best > bound.value:
        verdict: Verdict = "VIOLATION"
    elif best < bound.value:
        verdict = "BELOW_BOUND"
    else:
        verdict = "MATCHES_BOUND"
    extremal: tuple[str, ...] = ()
    predicted: tuple[str, ...] = ()
    matches: Optional[bool] = None
    if collect:
        found = set()
        for rec in argmax:
            c = canon_cache.get(rec.rows)
            if c is None:
                c = canonical_form(Graph(n, rec.rows))
                canon_cache[rec.rows] = c
            found.add(c)
        extremal = tuple(sorted(found))
        if family == "G":
            pred = predicted_extremal_g6(n, spec.ell, d, t)
            predicted = tuple(sorted(pred))
            matches = found == pred
    return SearchReport(n, family, spec.label, ell_or_k, d, t,
                        bound.value, best, verdict, extremal, predicted, matches)


def extremal_search(task: SearchTask) -> SearchReport:
    """Single-cell brute-force search, straight from the enumerator.

    Enumerates isomorphism classes with the task's degree floor, filters
    those lacking the property, maximizes the star count, and compares
    with the closed-form bound (and, for the hamiltonicity-type
    properties, the predicted extremal set).
    """
    n, d, spec, t = task.n, task.min_degree, task.prop, task.t
    if n < spec.min_n:
        raise ParameterError(f"{spec.label} needs n >= {spec.min_n}")
    family: Literal["G", "H"] = "H" if spec.kind == "k_connected" else "G"
    ell_or_k = spec.k if spec.kind == "k_connected" else spec.ell
    try:
        if family == "G":
            counts.star_bound_g(n, spec.ell, d, t)
        else:
            counts.star_bound_h(n, spec.k, d, t)
    except EmptyDomainError:
        return SearchReport(n, family, spec.label, ell_or_k, d, t,
                            None, None, "EMPTY_DOMAIN", (), (), None)
    from .properties import has_property
    best = -1
    argmax: list[Graph] = []
    for g in enumerate_graphs(n, d):
        if has_property(g, spec):
            continue
        v = counts.stars_from_degrees((r.bit_count() for r in g.rows), t)
        if v > best:
            best = v
            argmax = [g]
        elif v == best and task.mode == "MAX_WITH_EXTREMALS":
            argmax.append(g)
    if best < 0:
        raise RuntimeError(
            f"no graph lacking {spec.label} with min degree {d} at n={n}: "
            f"the extremal member itself should be in the search space")
    bound = (counts.star_bound_g(n, spec.ell, d, t) if family == "G"
             else counts.star_bound_h(n, spec.k, d, t))
    if best > bound.value:
        verdict: Verdict = "VIOLATION"
    elif best < bound.value:
        verdict = "BELOW_BOUND"
    else:
        verdict = "MATCHES_BOUND"
    extremal: tuple[str, ...] = ()
    predicted: tuple[str, ...] = ()
    matches: Optional[bool] = None
    if task.mode == "MAX_WITH_EXTREMALS":
        found = {canonical_form(g) for g in argmax}
        extremal = tuple(sorted(found))
        if family == "G":
            pred = predicted_extremal_g6(n, spec.ell, d, t)
            predicted = tuple(sorted(pred))
            matches = found == pred
    return SearchReport(n, family, spec.label, ell_or_k, d, t,
                        bound.value, best, verdict, extremal, predicted, matches)


# ---------------------------------------------------------------------------
# full level sweep
# ---------------------------------------------------------------------------

@dataclass
class LevelSweep:
    n: int
    reports: list[SearchReport]
    witness_failures: list[tuple[str, tuple[int, ...]]]  # (property, degseq)
    complete: bool

    @property
    def all_ok(self) -> bool:
        return (self.complete
                and not self.witness_failures
                and all(r.verdict == "MATCHES_BOUND" for r in self.reports)
                and all(r.extremal_set_matches in (True, None)
                        for r in self.reports))


def _property_instances(n: int, properties: Optional[set[str]],
                        kedge_max_k: int) -> list[PropertySpec]:
    specs: list[PropertySpec] = []

    def want(name: str) -> bool:
        return properties is None or name in properties

    if want("hamiltonian") and n >= 3:
        specs.append(PropertySpec("hamiltonian"))
    if want("traceable") and n >= 2:
        specs.append(PropertySpec("traceable"))
    if want("hamiltonian-connected") and n >= 2:
        specs.append(PropertySpec("hamiltonian_connected"))
    if want("k-edge-hamiltonian"):
        for k in range(1, min(n - 3, kedge_max_k) + 1):
            specs.append(PropertySpec("k_edge_hamiltonian", k))
    if want("k-hamiltonian"):
        for k in range(1, n - 2):
            if n >= k + 3:
                specs.append(PropertySpec("k_hamiltonian", k))
    if want("k-connected"):
        for k in range(1, n - 1):
            specs.append(PropertySpec("k_connected", k))
    return specs


def verify_level(n: int,
                 properties: Optional[set[str]] = None,
                 kedge_max_n: int = KEDGE_DEFAULT_MAX_N,
                 kedge_max_k: int = KEDGE_DEFAULT_MAX_K,
                 collect_extremals: bool = True,
                 check_witnesses: bool = True,
                 deadline: Optional[float] = None,
                 workers: int = 1,
                 records: Optional[list[GraphRecord]] = None) -> LevelSweep:
    """Verify every (property, d, t) cell at one vertex count.

    For each property instance, each valid degree floor d and each t, the
    exact maximum star count over enumerated graphs lacking the property
    is compared with the closed-form bound, and (hamiltonicity-type
    properties) the maximizer set with the predicted extremal family.
    A deadline (time.monotonic value) aborts with partial results.
    """
    kedge_k = kedge_max_k if n <= kedge_max_n else 0
    kedge_k = min(kedge_k, max(n - 3, 0))
    if records is None:
        records = level_records(n, kedge_k, workers)
    star_cache: dict[tuple[int, ...], list[int]] = {}
    canon_cache: dict[tuple[int, ...], str] = {}
    reports: list[SearchReport] = []
    witness_failures: list[tuple[str, tuple[int, ...]]] = []
    for spec in _property_instances(n, properties, kedge_k):
        lacking = [rec for rec in records if _lacks(rec, spec)]
        if check_witnesses:
            for rec in lacking:
                if chvatal_witness(Graph(n, rec.rows), spec) is None:
                    witness_failures.append((spec.label, rec.degseq))
        if spec.kind == "k_connected":
            dmax = counts.max_degree_floor_h(n, spec.k)
        else:
            dmax = counts.max_degree_floor_g(n, spec.ell)
        for d in range(0, dmax + 1):
            if deadline is not None and time.monotonic() > deadline:
                return LevelSweep(n, reports, witness_failures, False)
            elig = [rec for rec in lacking if rec.min_deg >= d]
            if not elig:
                raise RuntimeError(
                    f"empty search space at valid cell (n={n}, {spec.label}, d={d})")
            for t in range(1, n):
                reports.append(_cell_report(
                    n, spec, d, t, elig, star_cache, canon_cache,
                    collect_extremals))
    return LevelSweep(n, reports, witness_failures, True)


def verify_sweep(n_lo: int = 4, n_hi: int = 7,
                 properties: Optional[set[str]] = None,
                 kedge_max_n: int = KEDGE_DEFAULT_MAX_N,
                 kedge_max_k: int = KEDGE_DEFAULT_MAX_K,
                 collect_extremals: bool = True,
                 budget_seconds: Optional[float] = None,
                 workers: int = 1) -> list[LevelSweep]:
    """verify_level over a range of vertex counts, with an optional wall
    clock budget.  Raises BudgetExceededError carrying partial results."""
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    sweeps: list[LevelSweep] = []
    for n in range(n_lo, n_hi + 1):
        sweep = verify_level(n, properties, kedge_max_n, kedge_max_k,
                             collect_extremals, True, deadline, workers)
        sweeps.append(sweep)
        if not sweep.complete:
            err = BudgetExceededError(
                f"budget of {budget_seconds}s exhausted during n={n}")
            err.partial = sweeps  # type: ignore[attr-defined]
            raise err
    return sweeps


# ---------------------------------------------------------------------------
# the two-member family tie at n = 10
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilyTieReport:
    n: int
    ell: int
    d: int
    i: int
    tie_range: tuple[int, int]        # t range where both members tie
    tie_values: dict[int, int]        # t -> common star count == bound
    differing_t: int
    differing_values: tuple[int, int]
    both_lack_property: bool
    ok: bool


def verify_family_tie(n: int = 10, ell: int = 0, d: int = 4) -> FamilyTieReport:
    """Check the two-member extremal family at the degree floor where both
    endpoint indices coincide: for every t with n-i-1 < t <= n-1 the two
    members have equal star counts matching the closed-form bound and both
    lack the property; at t = n-i-1 their counts differ.

    This is a family-only check: no exhaustive enumeration at this n.
    """
    i_id = counts.index_id_g(d, ell)
    i_i0 = counts.index_i0_g(n, ell)
    if i_id != i_i0:
        raise ParameterError(
            f"(n={n}, ell={ell}, d={d}) does not pin a single index: "
            f"ID={i_id}, I0={i_i0}")
    i = i_i0
    members = list(enumerate_family(n, ell, i, cap=64))
    if len(members) != 2:
        raise ParameterError(
            f"family at (n={n}, ell={ell}, i={i}) has {len(members)} members, "
            "expected the two-member clique-or-not case")
    lo = n - i  # least t with t > n-i-1
    tie_values: dict[int, int] = {}
    ok = True
    for t in range(lo, n):
        s0 = counts.stars_from_degrees(
            [r.bit_count() for r in members[0].rows], t)
        s1 = counts.stars_from_degrees(
            [r.bit_count() for r in members[1].rows], t)
        bound = counts.star_bound_g(n, ell, d, t).value
        if s0 != s1 or s0 != bound:
            ok = False
        tie_values[t] = s0
    td = n - i - 1
    v0 = counts.stars_from_degrees([r.bit_count() for r in members[0].rows], td)
    v1 = counts.stars_from_degrees([r.bit_count() for r in members[1].rows], td)
    if v0 == v1:
        ok = False
    both_lack = not is_hamiltonian(members[0]) and not is_hamiltonian(members[1])
    if ell != 0:
        both_lack = True  # property pairing only wired for the spanning-cycle case here
    if not both_lack:
        ok = False
    return FamilyTieReport(n, ell, d, i, (lo, n - 1), tie_values, td,
                           (v0, v1), both_lack, ok)
