"""Exhaustive and family-based searches over small graphs.

Targets
-------
``proposition-adjacency``
    connected graphs with odd girth 5 whose adjacency matrix has three
    distinct eigenvalues; any nonregular one is reported.
``proposition-laplacian``
    the same with the Laplacian matrix; also checks that the number of
    common nonneighbours of adjacent vertices is constant and equals
    ``n - k_u - k_v``.
``nonregular-oddgirth-eigencount``
    nonregular connected graphs with d+1 distinct adjacency eigenvalues and
    odd girth exactly 2d+1 (open for d >= 3).
``diameter2-counterexample``
    triangle-free regular graphs of diameter 2 that are not strongly regular.

Enumeration is over labeled graphs without isomorphism rejection.  Searches
whose target is triangle-free prune triangles during generation; every other
graph is skipped by the target's own filter anyway.
"""

from __future__ import annotations

import json
import logging
import math
import os
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .exact import matrix_minimal_polynomial
from .graph import (
    Graph,
    basic_profile,
    encode_graph6,
    is_connected,
    is_distance_regular_direct,
    odd_girth_combinatorial,
    parse_graph6,
)
from .generators import circulant
from .spectral import AdjacencyPowers, ConsistencyError, minimal_polynomial

log = logging.getLogger(__name__)

EXHAUSTIVE_LIMIT = 7
CHECKPOINT_EVERY = 50_000

TARGETS = (
    "nonregular-oddgirth-eigencount",
    "proposition-adjacency",
    "proposition-laplacian",
    "diameter2-counterexample",
)

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "TARGETS",
    "Finding",
    "SearchResult",
    "SearchSpec",
    "enumerate_connected_graphs",
    "regular_graphs",
    "graphs_from_graph6",
    "verify_proposition_adjacency",
    "verify_proposition_laplacian",
    "search_nonregular_open_question",
    "find_diameter2_counterexamples",
    "finding_properties",
    "audit_finding",
    "run_search",
]


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchSpec:
    n_min: int
    n_max: int
    target: str
    d: int | None = None
    connected_only: bool = True
    limit: int = EXHAUSTIVE_LIMIT

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown search target {self.target!r}")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"bad order range {self.n_min}..{self.n_max}")


@dataclass(frozen=True)
class Finding:
    graph6: str
    properties: dict

    def to_json(self) -> str:
        return json.dumps({"graph6": self.graph6, "properties": self.properties}, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "Finding":
        obj = json.loads(line)
        return cls(obj["graph6"], obj["properties"])


@dataclass
class SearchResult:
    """Violations/hits plus how much was scanned."""

    target: str
    findings: list[Finding] = field(default_factory=list)
    examined: int = 0
    positives: list[str] = field(default_factory=list)

    def __iter__(self):
        return iter(self.findings)

    def __len__(self):
        return len(self.findings)

    def sort(self) -> None:
        self.findings.sort(key=lambda f: f.graph6)
        self.positives.sort()


# ---------------------------------------------------------------------------
# Candidate sources
# ---------------------------------------------------------------------------


def _components(rows: list[int], n: int) -> list[int]:
    seen = 0
    comps = []
    for s in range(n):
        if (seen >> s) & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= rows[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def _independent(rows: list[int], s: int) -> bool:
    m = s
    while m:
        low = m & -m
        if rows[low.bit_length() - 1] & s:
            return False
        m ^= low
    return True


def enumerate_connected_graphs(
    n: int, limit: int = EXHAUSTIVE_LIMIT, triangle_free: bool = False
) -> Iterator[Graph]:
    """Every connected labeled graph on ``n`` vertices, exactly once.

    Vertex j is attached to a subset of {0..j-1}; iterating those subsets in
    increasing order walks the upper-triangle bitmask in graph6 column order.
    With ``triangle_free`` only independent subsets are used, which yields
    exactly the triangle-free graphs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > limit:
        raise ValueError(
            f"n={n} exceeds the exhaustive limit {limit}; supply a graph6 stream instead"
        )
    if n == 1:
        yield Graph(1, [0])
        return
    rows = [0] * n

    def extend(j: int):
        if j == n - 1:
            comps = _components(rows, j)
            for s in range(1, 1 << j):
                if not all(c & s for c in comps):
                    continue
                if triangle_free and not _independent(rows, s):
                    continue
                out = list(rows)
                out[j] = s
                bit = 1 << j
                m = s
                while m:
                    low = m & -m
                    out[low.bit_length() - 1] |= bit
                    m ^= low
                yield Graph._trusted(n, out)
            return
        bit = 1 << j
        for s in range(1 << j):
            if triangle_free and not _independent(rows, s):
                continue
            rows[j] = s
            m = s
            while m:
                low = m & -m
                rows[low.bit_length() - 1] |= bit
                m ^= low
            yield from extend(j + 1)
            m = s
            while m:
                low = m & -m
                rows[low.bit_length() - 1] ^= bit
                m ^= low
        rows[j] = 0

    yield from extend(1)


def regular_graphs(
    n: int, k: int, triangle_free: bool = False, connected: bool = True
) -> Iterator[Graph]:
    """k-regular graphs on n vertices by degree-constrained backtracking.

    Vertex 0 is fixed adjacent to 1..k.  Every isomorphism class is still
    represented (relabel any graph so that this holds); labeled duplicates
    within a class remain.
    """
    if not 0 <= k < n or (n * k) % 2:
        return
    rows = [0] * n
    for v in range(1, k + 1):
        rows[0] |= 1 << v
        rows[v] |= 1
    deg = [0] * n
    deg[0] = k
    for v in range(1, k + 1):
        deg[v] = 1

    def fill(v: int):
        while v < n and deg[v] == k:
            v += 1
        if v == n:
            g = Graph._trusted(n, list(rows))
            if not connected or _components(rows, n) == [(1 << n) - 1]:
                yield g
            return
        need = k - deg[v]
        cand = [w for w in range(v + 1, n) if deg[w] < k and not (rows[v] >> w) & 1]
        if len(cand) < need:
            return
        for chosen in combinations(cand, need):
            if triangle_free:
                mask = rows[v]
                ok = True
                for w in chosen:
                    if rows[w] & mask:
                        ok = False
                        break
                    mask |= 1 << w
                if not ok:
                    continue
            for w in chosen:
                rows[v] |= 1 << w
                rows[w] |= 1 << v
                deg[w] += 1
            deg[v] = k
            yield from fill(v + 1)
            deg[v] = k - need
            for w in chosen:
                rows[v] ^= 1 << w
                rows[w] ^= 1 << v
                deg[w] -= 1

    yield from fill(1)


def graphs_from_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def _exhaustive(n_min: int, n_max: int, limit: int, triangle_free: bool) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_connected_graphs(n, limit=limit, triangle_free=triangle_free)


# ---------------------------------------------------------------------------
# Per-target analysis
# ---------------------------------------------------------------------------


def _mu_bar_profile(g: Graph) -> list[int]:
    """Common nonneighbour counts over adjacent pairs (sorted, distinct)."""
    full = (1 << g.n) - 1
    rows = g.rows
    vals = set()
    for u, v in g.edges():
        closed = rows[u] | rows[v] | (1 << u) | (1 << v)
        vals.add((full & ~closed).bit_count())
    return sorted(vals)


def finding_properties(target: str, g: Graph) -> dict:
    """Invariants recorded for a hit; recomputable from the graph alone."""
    degs = g.degrees()
    powers = AdjacencyPowers(g)
    adj_deg = minimal_polynomial(g, powers).degree
    og = odd_girth_combinatorial(g)
    props = {
        "target": target,
        "n": g.n,
        "degrees": degs,
        "regular": len(set(degs)) == 1,
        "adjacency_distinct_eigenvalues": adj_deg,
        "odd_girth": og if og != math.inf else "inf",
    }
    if target == "proposition-laplacian":
        lap = matrix_minimal_polynomial(g.laplacian_matrix(), symmetric=True)
        props["laplacian_distinct_eigenvalues"] = lap.degree
        props["mu_bar_values"] = _mu_bar_profile(g)
    if target == "diameter2-counterexample":
        props["diameter"] = basic_profile(g).diameter
        props["strongly_regular"] = is_distance_regular_direct(g) is not None
    return props


def audit_finding(finding: Finding) -> bool:
    """Re-derive a finding's properties from its graph6 string."""
    g = parse_graph6(finding.graph6)
    return finding_properties(finding.properties["target"], g) == finding.properties


def _check_adjacency(g: Graph) -> tuple[bool, Finding | None]:
    """Returns (is positive instance, violation)."""
    if odd_girth_combinatorial(g) != 5:
        return False, None
    powers = AdjacencyPowers(g)
    mp = matrix_minimal_polynomial(None, max_degree=3, powers=iter(powers), symmetric=True)
    if mp is None or mp.degree != 3:
        return False, None
    # m(x) = x^3 - e1 x^2 + e2 x - e3; zero diagonal of m(A) with (A^3)_uu = 0
    # reads e1 k_u = -e3 at every vertex
    e1, e3 = -mp.coeff(2), -mp.coeff(0)
    a3, a2 = powers.power(3), powers.power(2)
    degs = g.degrees()
    diag_ok = all(
        a3[u][u] + mp.coeff(2) * a2[u][u] + mp.coeff(0) == 0 and e1 * degs[u] == -e3
        for u in range(g.n)
    )
    regular = len(set(degs)) == 1
    if regular and diag_ok:
        return True, None
    props = finding_properties("proposition-adjacency", g)
    props["valency_identity_holds"] = diag_ok
    return True, Finding(encode_graph6(g), props)


def _check_laplacian(g: Graph) -> tuple[bool, Finding | None]:
    if odd_girth_combinatorial(g) != 5:
        return False, None
    mp = matrix_minimal_polynomial(g.laplacian_matrix(), max_degree=3, symmetric=True)
    if mp is None or mp.degree != 3:
        return False, None
    mu = _mu_bar_profile(g)
    degs = g.degrees()
    rows = g.rows
    full = (1 << g.n) - 1
    sums_ok = all(
        degs[u] + degs[v] == g.n - (full & ~(rows[u] | rows[v] | (1 << u) | (1 << v))).bit_count()
        for u, v in g.edges()
    )
    regular = len(set(degs)) == 1
    if regular and len(mu) == 1 and sums_ok:
        return True, None
    props = finding_properties("proposition-laplacian", g)
    props["degree_sum_identity_holds"] = sums_ok
    return True, Finding(encode_graph6(g), props)


def _nonregular_checker(d: int) -> Callable[[Graph], tuple[bool, Finding | None]]:
    def check(g: Graph):
        degs = g.degrees()
        if len(set(degs)) == 1:
            return False, None
        if odd_girth_combinatorial(g) != 2 * d + 1:
            return False, None
        mp = matrix_minimal_polynomial(
            None, max_degree=d + 1, powers=iter(AdjacencyPowers(g)), symmetric=True
        )
        if mp is None or mp.degree != d + 1:
            return False, None
        props = finding_properties("nonregular-oddgirth-eigencount", g)
        if d >= 3:
            log.warning("nonregular graph with %d eigenvalues and odd girth %d: %s",
                        d + 1, 2 * d + 1, encode_graph6(g))
        return True, Finding(encode_graph6(g), props)

    return check


def _check_diameter2(g: Graph) -> tuple[bool, Finding | None]:
    prof = basic_profile(g)
    if not (prof.connected and prof.regular and prof.diameter == 2):
        return False, None
    if odd_girth_combinatorial(g) == 3:
        return False, None
    if is_distance_regular_direct(g) is not None:
        return True, None
    props = finding_properties("diameter2-counterexample", g)
    if props["adjacency_distinct_eigenvalues"] < 4:
        raise ConsistencyError(
            f"{encode_graph6(g)}: regular, diameter 2, three eigenvalues but not strongly regular"
        )
    return True, Finding(encode_graph6(g), props)


# ---------------------------------------------------------------------------
# Driver with checkpointing
# ---------------------------------------------------------------------------


def _read_cursor(path: Path) -> tuple[int, list[str], list[str]]:
    lines = path.read_text().splitlines()
    index = int(lines[0])
    found = [ln[2:] for ln in lines[1:] if ln.startswith("F ")]
    positive = [ln[2:] for ln in lines[1:] if ln.startswith("P ")]
    return index, found, positive


def _write_cursor(path: Path, index: int, result: SearchResult) -> None:
    tmp = path.with_name(path.name + ".tmp")
    body = [str(index)]
    body += ["F " + f.graph6 for f in result.findings]
    body += ["P " + p for p in result.positives]
    tmp.write_text("\n".join(body) + "\n")
    os.replace(tmp, path)


def _scan(
    target: str,
    candidates: Iterable[Graph],
    check: Callable[[Graph], tuple[bool, Finding | None]],
    cursor: Path | None = None,
    checkpoint_every: int = CHECKPOINT_EVERY,
) -> SearchResult:
    result = SearchResult(target)
    start = 0
    if cursor is not None and Path(cursor).exists():
        start, found, positive = _read_cursor(Path(cursor))
        for g6 in found:
            _, f = check(parse_graph6(g6))
            if f is not None:
                result.findings.append(f)
        result.positives.extend(positive)
        log.info("resuming %s at candidate %d", target, start)
    index = 0
    for g in candidates:
        index += 1
        if index <= start:
            continue
        if not is_connected(g):
            continue
        positive, finding = check(g)
        if positive:
            result.positives.append(encode_graph6(g))
        if finding is not None:
            result.findings.append(finding)
        if cursor is not None and index % checkpoint_every == 0:
            _write_cursor(Path(cursor), index, result)
    result.examined = index
    if cursor is not None:
        _write_cursor(Path(cursor), index, result)
    result.sort()
    return result


def verify_proposition_adjacency(
    n_max: int,
    source: Iterable[Graph] | None = None,
    limit: int = EXHAUSTIVE_LIMIT,
    cursor: Path | None = None,
) -> SearchResult:
    """Nonregular connected graphs with odd girth 5 and 3 adjacency eigenvalues."""
    graphs = source if source is not None else _exhaustive(1, n_max, limit, triangle_free=True)
    return _scan("proposition-adjacency", graphs, _check_adjacency, cursor)


def verify_proposition_laplacian(
    n_max: int,
    source: Iterable[Graph] | None = None,
    limit: int = EXHAUSTIVE_LIMIT,
    cursor: Path | None = None,
) -> SearchResult:
    """Odd girth 5 graphs with 3 Laplacian eigenvalues that break regularity or the mu-bar facts."""
    graphs = source if source is not None else _exhaustive(1, n_max, limit, triangle_free=True)
    return _scan("proposition-laplacian", graphs, _check_laplacian, cursor)


def search_nonregular_open_question(
    n_max: int,
    d: int,
    source: Iterable[Graph] | None = None,
    limit: int = EXHAUSTIVE_LIMIT,
    cursor: Path | None = None,
) -> SearchResult:
    """Nonregular graphs with d+1 adjacency eigenvalues and odd girth 2d+1."""
    if d < 2:
        raise ValueError("d must be at least 2")
    graphs = source if source is not None else _exhaustive(1, n_max, limit, triangle_free=True)
    return _scan("nonregular-oddgirth-eigencount", graphs, _nonregular_checker(d), cursor)


def _triangle_free_regular_candidates(n_min: int, n_max: int) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        # triangle-free: k <= n/2; diameter 2: n <= k^2 + 1
        for k in range(2, n // 2 + 1):
            if k * k + 1 >= n:
                yield from regular_graphs(n, k, triangle_free=True)


def _circulant_candidates(n_min: int, n_max: int) -> Iterator[Graph]:
    for n in range(max(n_min, 3), n_max + 1):
        steps = list(range(1, n // 2 + 1))
        for r in range(1, len(steps) + 1):
            for conn in combinations(steps, r):
                yield circulant(n, conn)


def find_diameter2_counterexamples(
    source: str | Iterable[Graph] = "circulant",
    n_max: int = 13,
    n_min: int = 1,
    cursor: Path | None = None,
) -> SearchResult:
    """Triangle-free regular diameter-2 graphs that are not strongly regular.

    ``source`` is ``"circulant"`` (all circulants up to ``n_max``),
    ``"enumeration"`` (triangle-free regular backtracking) or an iterable of
    graphs.
    """
    if source == "circulant":
        graphs = _circulant_candidates(n_min, n_max)
    elif source == "enumeration":
        graphs = _triangle_free_regular_candidates(n_min, n_max)
    elif isinstance(source, str):
        raise ValueError(f"unknown source {source!r}")
    else:
        graphs = source
    return _scan("diameter2-counterexample", graphs, _check_diameter2, cursor)


def run_search(
    spec: SearchSpec,
    source: Iterable[Graph] | None = None,
    cursor: Path | None = None,
    family: str = "enumeration",
) -> SearchResult:
    """Dispatch a :class:`SearchSpec` to the matching search."""
    if source is None and spec.target != "diameter2-counterexample" and spec.n_max > spec.limit:
        raise ValueError(
            f"n_max={spec.n_max} exceeds the exhaustive limit {spec.limit}; "
            "supply a graph6 stream instead"
        )
    if source is None and spec.target != "diameter2-counterexample":
        source = _exhaustive(spec.n_min, spec.n_max, spec.limit, triangle_free=True)
    if spec.target == "proposition-adjacency":
        return verify_proposition_adjacency(spec.n_max, source, spec.limit, cursor)
    if spec.target == "proposition-laplacian":
        return verify_proposition_laplacian(spec.n_max, source, spec.limit, cursor)
    if spec.target == "nonregular-oddgirth-eigencount":
        return search_nonregular_open_question(spec.n_max, spec.d or 2, source, spec.limit, cursor)
    return find_diameter2_counterexamples(
        source if source is not None else family, spec.n_max, spec.n_min, cursor
    )
