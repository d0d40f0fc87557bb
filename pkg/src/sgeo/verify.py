"""Witness verification and the strong-geodetic-set decision search.

A witness fixes exactly one geodesic per unordered pair of the selected
set; the set is strong geodetic when the fixed paths cover every vertex.
The decision search backtracks over per-pair geodesic choices with
coverage bitsets, committing vertices shared by all of a pair's
geodesics up front and pruning branches whose remaining optional
coverage cannot reach the uncovered set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import Disconnected, MalformedWitness
from .graph import (
    DEFAULT_GEODESIC_CAP,
    Graph,
    Path,
    distances_from,
    enumerate_geodesics,
    is_connected,
)


@dataclass(frozen=True)
class PairGeodesic:
    u: int
    v: int
    path: tuple[int, ...]


@dataclass(frozen=True)
class Witness:
    """A vertex set plus one fixed geodesic per unordered pair of it."""

    vertices: tuple[int, ...]
    assignment: tuple[PairGeodesic, ...]

    def size(self) -> int:
        return len(self.vertices)


@dataclass
class CoverageReport:
    covered: bool
    uncovered_vertices: list[int] = field(default_factory=list)
    invalid_paths: list[tuple[tuple[int, int], str]] = field(default_factory=list)


def make_witness(vertices, pair_paths: dict[tuple[int, int], Path]) -> Witness:
    verts = tuple(sorted(vertices))
    assignment = tuple(
        PairGeodesic(u, v, tuple(pair_paths[(u, v)]))
        for u, v in sorted(pair_paths)
    )
    return Witness(verts, assignment)


def witness_to_dict(w: Witness) -> dict:
    return {
        "set": list(w.vertices),
        "assignment": [
            {"u": a.u, "v": a.v, "path": list(a.path)} for a in w.assignment
        ],
    }


def witness_from_dict(data: dict) -> Witness:
    try:
        verts = tuple(int(v) for v in data["set"])
        assignment = tuple(
            PairGeodesic(int(a["u"]), int(a["v"]), tuple(int(x) for x in a["path"]))
            for a in data["assignment"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedWitness(f"bad witness document: {exc}") from None
    return Witness(verts, assignment)


def report_to_dict(r: CoverageReport) -> dict:
    return {
        "covered": r.covered,
        "uncovered_vertices": list(r.uncovered_vertices),
        "invalid_paths": [
            {"pair": [u, v], "reason": reason} for (u, v), reason in r.invalid_paths
        ],
    }


def verify_witness(g: Graph, w: Witness) -> CoverageReport:
    """Check a witness against a graph, reporting all violations.

    Raises MalformedWitness for structural defects (vertices outside the
    graph, a missing or duplicated pair).  Path-level problems are
    reported in the result instead of raised.
    """
    sel = sorted(set(w.vertices))
    if len(sel) != len(w.vertices):
        raise MalformedWitness("selected set contains duplicates")
    for v in sel:
        if not 0 <= v < g.n:
            raise MalformedWitness(f"vertex {v} not in graph")

    expected = {(u, v) for u, v in combinations(sel, 2)}
    seen: set[tuple[int, int]] = set()
    for a in w.assignment:
        key = (min(a.u, a.v), max(a.u, a.v))
        if key not in expected:
            raise MalformedWitness(f"assignment pair {key} not a pair of the set")
        if key in seen:
            raise MalformedWitness(f"duplicate assignment for pair {key}")
        seen.add(key)
    missing = expected - seen
    if missing:
        raise MalformedWitness(f"missing assignment for pairs {sorted(missing)}")

    dist_cache: dict[int, list] = {}

    def dist(u: int):
        if u not in dist_cache:
            dist_cache[u] = distances_from(g, u)
        return dist_cache[u]

    covered = 0
    for v in sel:
        covered |= 1 << v
    invalid: list[tuple[tuple[int, int], str]] = []
    for a in w.assignment:
        key = (min(a.u, a.v), max(a.u, a.v))
        path = list(a.path)
        reason = None
        if len(path) < 2 or {path[0], path[-1]} != {a.u, a.v}:
            reason = "endpoints do not match pair"
        elif len(set(path)) != len(path):
            reason = "repeated vertex"
        elif any(not g.has_edge(x, y) for x, y in zip(path, path[1:])):
            reason = "non-adjacent step"
        else:
            d = dist(path[0])[path[-1]]
            if d is None or d != len(path) - 1:
                reason = "not a shortest path"
        if reason is not None:
            invalid.append((key, reason))
        else:
            for x in path:
                covered |= 1 << x

    uncovered = [v for v in range(g.n) if not covered >> v & 1]
    ok = not invalid and not uncovered
    return CoverageReport(covered=ok, uncovered_vertices=uncovered, invalid_paths=invalid)


class _PairCache:
    """Per-graph cache of geodesic options keyed by vertex pair.

    For each pair it stores lexicographically ordered candidate paths,
    their coverage bitsets (deduplicated by coverage, keeping the first),
    the forced bitset shared by every geodesic, and the optional union.
    """

    def __init__(self, g: Graph, cap: int):
        self.g = g
        self.cap = cap
        self.data: dict[tuple[int, int], tuple] = {}

    def get(self, u: int, v: int):
        key = (u, v)
        cached = self.data.get(key)
        if cached is not None:
            return cached
        paths = enumerate_geodesics(self.g, u, v, self.cap)
        masks: list[int] = []
        kept: list[tuple[int, ...]] = []
        seen: set[int] = set()
        forced = -1
        union = 0
        for p in paths:
            m = 0
            for x in p:
                m |= 1 << x
            forced &= m
            union |= m
            if m not in seen:
                seen.add(m)
                masks.append(m)
                kept.append(tuple(p))
        entry = (kept, masks, forced, union)
        self.data[key] = entry
        return entry


def _search(g: Graph, sel: list[int], cache: _PairCache) -> Optional[Witness]:
    """First witness for sel in the fixed enumeration order, if any."""
    full = (1 << g.n) - 1
    base = 0
    for v in sel:
        base |= 1 << v
    if len(sel) == 1:
        if base == full:
            return Witness(tuple(sel), ())
        return None

    pairs = list(combinations(sel, 2))
    entries = [cache.get(u, v) for u, v in pairs]
    order = sorted(range(len(pairs)), key=lambda i: (len(entries[i][1]), pairs[i]))
    pairs = [pairs[i] for i in order]
    entries = [entries[i] for i in order]

    covered0 = base
    for _, _, forced, _ in entries:
        covered0 |= forced

    k = len(pairs)
    suffix_union = [0] * (k + 1)
    suffix_gain = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix_union[i] = suffix_union[i + 1] | entries[i][3]
        suffix_gain[i] = suffix_gain[i + 1] + max(m.bit_count() for m in entries[i][1])

    choice: list[int] = [0] * k
    failed: set[tuple[int, int]] = set()

    def rec(i: int, covered: int) -> bool:
        if covered == full:
            for j in range(i, k):
                choice[j] = 0
            return True
        if i == k:
            return False
        if covered | suffix_union[i] != full:
            return False
        if (full & ~covered).bit_count() > suffix_gain[i]:
            return False
        state = (i, covered)
        if state in failed:
            return False
        # Geodesics adding the same new coverage are interchangeable
        # downstream; keeping only the first of each class preserves the
        # lexicographically first success.
        seen_new: set[int] = set()
        for idx, mask in enumerate(entries[i][1]):
            new = mask & ~covered
            if new in seen_new:
                continue
            seen_new.add(new)
            choice[i] = idx
            if rec(i + 1, covered | mask):
                return True
        if len(failed) < (1 << 20):
            failed.add(state)
        return False

    if not rec(0, covered0):
        return None
    pair_paths = {
        pairs[i]: list(entries[i][0][choice[i]]) for i in range(k)
    }
    return make_witness(sel, pair_paths)


def is_strong_geodetic_set(
    g: Graph, vertices, cap: int = DEFAULT_GEODESIC_CAP
) -> Optional[Witness]:
    """Search for a covering geodesic assignment over the given set.

    Returns the first witness in the fixed enumeration order (pairs by
    ascending geodesic count, geodesics lexicographic) or None when no
    assignment covers the graph.  Raises Disconnected for disconnected
    graphs and GeodesicExplosion when a pair exceeds ``cap`` geodesics.
    """
    sel = sorted(set(vertices))
    if not sel:
        raise ValueError("vertex set must be nonempty")
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    for v in sel:
        if not 0 <= v < g.n:
            raise MalformedWitness(f"vertex {v} not in graph")
    return _search(g, sel, _PairCache(g, cap))
