"""Occurrence enumeration: where does a pattern sit inside a host?

An occurrence of a pattern F in a host H is a set of host edge ids whose
edge multiset, together with the vertices it spans, is isomorphic to F.
Occurrences are the vertices of general Kneser hypergraphs and the forbidden
configurations of the Turan-type searches, so everything downstream leans on
this module being exactly right about multiset semantics: parallel host
edges have distinct ids and can jointly match a multigraph pattern, while a
single simple pattern never matches two parallel copies of the same edge
plus anything else, because duplicated member sets are not isomorphic to
distinct ones.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidParameterError, SizeCapError
from .hyperstruct import Hypergraph, canonical_dumps, strip_isolated

DEFAULT_OCCURRENCE_CAP = 2_000_000
DEFAULT_HOST_EDGE_CAP = 4096
CACHE_ENV_VAR = "KNESERTURAN_CACHE_DIR"


@dataclass(frozen=True)
class PatternFamily:
    """A finite family of patterns. Members may not have isolated vertices."""

    members: tuple[Hypergraph, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.members:
            raise InvalidParameterError("pattern family must be nonempty")
        for i, f in enumerate(self.members):
            if f.n_edges == 0:
                raise InvalidParameterError(f"pattern {i} has no edges")
            if f.isolated_vertices:
                raise InvalidParameterError(
                    f"pattern {i} has isolated vertices {sorted(f.isolated_vertices)}; "
                    "strip them first (they never affect occurrences)"
                )

    def iso_representatives(self) -> tuple[int, ...]:
        """Lowest member index of each isomorphism class, in index order."""
        reps: list[int] = []
        for i, f in enumerate(self.members):
            if not any(are_isomorphic(self.members[r], f) for r in reps):
                reps.append(i)
        return tuple(reps)

    def canonical_json(self) -> str:
        return canonical_dumps([f.to_json_dict() for f in self.members])


@dataclass(frozen=True)
class PatternOccurrence:
    pattern_index: int
    edge_ids: frozenset[int]

    def to_json_dict(self) -> dict:
        return {"pattern": self.pattern_index, "edges": sorted(self.edge_ids)}


def _vertex_signature(h: Hypergraph) -> list[tuple[int, tuple[int, ...]]]:
    """Per-vertex fingerprint: (degree, sorted incident edge sizes)."""
    sizes: list[list[int]] = [[] for _ in range(h.n_vertices)]
    for e in h.edges:
        for v in e:
            sizes[v].append(len(e))
    return [(h.degrees[v], tuple(sorted(sizes[v]))) for v in range(h.n_vertices)]


def are_isomorphic(a: Hypergraph, b: Hypergraph, ignore_isolated: bool = False) -> bool:
    """Exact multihypergraph isomorphism by backtracking vertex bijection."""
    if ignore_isolated:
        a, _ = strip_isolated(a)
        b, _ = strip_isolated(b)
    return find_isomorphism(a, b) is not None


def find_isomorphism(a: Hypergraph, b: Hypergraph) -> tuple[int, ...] | None:
    """A vertex bijection a->b carrying edge multiset onto edge multiset."""
    if a.n_vertices != b.n_vertices or a.n_edges != b.n_edges:
        return None
    if sorted(len(e) for e in a.edges) != sorted(len(e) for e in b.edges):
        return None
    sig_a = _vertex_signature(a)
    sig_b = _vertex_signature(b)
    if sorted(sig_a) != sorted(sig_b):
        return None
    n = a.n_vertices
    edges_b = Counter(b.edges)
    # rarest signature first keeps the branching factor down
    sig_count = Counter(sig_a)
    order = sorted(range(n), key=lambda v: (sig_count[sig_a[v]], v))
    image = [-1] * n
    used_b = [False] * n

    def mapped_edges_ok(depth: int) -> bool:
        # every a-edge fully inside the mapped domain must land on a b-edge,
        # with multiplicities
        dom = set(order[: depth + 1])
        need = Counter(
            frozenset(image[v] for v in e) for e in a.edges if set(e) <= dom
        )
        return all(edges_b[e] >= c for e, c in need.items())

    def rec(depth: int) -> bool:
        if depth == n:
            got = Counter(frozenset(image[v] for v in e) for e in a.edges)
            return got == edges_b
        v = order[depth]
        for w in range(n):
            if used_b[w] or sig_b[w] != sig_a[v]:
                continue
            image[v] = w
            used_b[w] = True
            if mapped_edges_ok(depth) and rec(depth + 1):
                return True
            used_b[w] = False
            image[v] = -1
        return False

    return tuple(image) if rec(0) else None


def _pattern_edge_order(f: Hypergraph) -> list[int]:
    """Edges by descending size, then descending vertex-incidence weight.

    Placing the heaviest, most entangled pattern edges first makes the
    forward checks bite early.
    """
    weight = [sum(f.degrees[v] for v in e) for e in f.edges]
    return sorted(range(f.n_edges), key=lambda i: (-len(f.edges[i]), -weight[i], i))


def _occurrences_of(host: Hypergraph, f: Hypergraph, cap: int, found_total: int) -> set[frozenset[int]]:
    """All edge-id sets of subhypergraphs of ``host`` isomorphic to ``f``."""
    order = _pattern_edge_order(f)
    pat_edges = [tuple(sorted(f.edges[i])) for i in order]
    host_by_size: dict[int, list[int]] = {}
    for j, e in enumerate(host.edges):
        host_by_size.setdefault(len(e), []).append(j)

    image: dict[int, int] = {}   # pattern vertex -> host vertex
    used_hv: set[int] = set()    # host vertices already images
    chosen: list[int] = []
    used_edges: set[int] = set()
    out: set[frozenset[int]] = set()

    from itertools import permutations

    def rec(t: int):
        if t == len(pat_edges):
            out.add(frozenset(chosen))
            if found_total + len(out) > cap:
                raise SizeCapError(
                    f"occurrence count exceeds cap {cap}; raise the cap explicitly"
                )
            return
        pe = pat_edges[t]
        mapped = [v for v in pe if v in image]
        free = [v for v in pe if v not in image]
        need = {image[v] for v in mapped}
        for j in host_by_size.get(len(pe), ()):
            if j in used_edges:
                continue
            he = host.edges[j]
            if not need <= he:
                continue
            # host members already claimed by vertices outside this pattern
            # edge would break injectivity
            leftover = he - need
            if leftover & used_hv:
                continue
            used_edges.add(j)
            chosen.append(j)
            for assign in permutations(sorted(leftover)):
                for v, w in zip(free, assign):
                    image[v] = w
                    used_hv.add(w)
                rec(t + 1)
                for v in free:
                    used_hv.discard(image[v])
                    del image[v]
            chosen.pop()
            used_edges.discard(j)

    rec(0)
    return out


def enumerate_occurrences(
    host: Hypergraph,
    family: PatternFamily,
    occurrence_cap: int = DEFAULT_OCCURRENCE_CAP,
    host_edge_cap: int = DEFAULT_HOST_EDGE_CAP,
) -> tuple[PatternOccurrence, ...]:
    """Every occurrence of every family member in the host, deduplicated.

    One entry per distinct edge-id set per pattern isomorphism class
    (isomorphic members are collapsed to the lowest index). Output sorted by
    sorted edge-id tuple, then pattern index. Exceeding the caps raises
    SizeCapError; there is no silent truncation.
    """
    if host.n_edges > host_edge_cap:
        raise SizeCapError(
            f"host has {host.n_edges} edges, above the cap {host_edge_cap}"
        )
    occs: list[PatternOccurrence] = []
    total = 0
    for p in family.iso_representatives():
        sets = _occurrences_of(host, family.members[p], occurrence_cap, total)
        total += len(sets)
        occs.extend(PatternOccurrence(p, s) for s in sets)
    occs.sort(key=lambda o: (tuple(sorted(o.edge_ids)), o.pattern_index))
    return tuple(occs)


def occurrences_to_jsonl(occs) -> str:
    return "".join(canonical_dumps(o.to_json_dict()) + "\n" for o in occs)


@lru_cache(maxsize=256)
def _pattern_hypergraph_cached(host_json: str, family_json: str) -> Hypergraph:
    host = Hypergraph.from_json_dict(_loads(host_json))
    members = tuple(Hypergraph.from_json_dict(d) for d in _loads(family_json))
    family = PatternFamily(members)
    occs = enumerate_occurrences(host, family)
    edge_sets = sorted({frozenset(o.edge_ids) for o in occs}, key=sorted)
    return Hypergraph(host.n_edges, tuple(edge_sets))


def _loads(text: str):
    import json

    return json.loads(text)


def pattern_hypergraph(host: Hypergraph, family: PatternFamily) -> Hypergraph:
    """The hypergraph whose vertices are host edge ids and whose edges are
    the occurrence id-sets (duplicates across patterns collapsed).

    Host edges covered by no occurrence remain as isolated vertices, which is
    what makes them count toward independence there. Results are memoized in
    memory, and on disk as well when the KNESERTURAN_CACHE_DIR environment
    variable points at a writable directory.
    """
    host_json = host.canonical_json()
    family_json = family.canonical_json()
    cache_dir = os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        import hashlib
        import json as _json

        key = hashlib.sha256((host_json + "|" + family_json).encode()).hexdigest()
        path = os.path.join(cache_dir, f"pattern-{key}.json")
        if os.path.exists(path):
            with open(path) as fh:
                return Hypergraph.from_json_dict(_json.load(fh))
        result = _pattern_hypergraph_cached(host_json, family_json)
        os.makedirs(cache_dir, exist_ok=True)
        with open(path, "w") as fh:
            fh.write(result.canonical_json())
        return result
    return _pattern_hypergraph_cached(host_json, family_json)


def family_of(*hypergraphs: Hypergraph) -> PatternFamily:
    return PatternFamily(tuple(hypergraphs))
