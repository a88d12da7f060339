"""Exhaustive search for elusive pairs at fixed (m, q, delta).

The decision procedure: a code C with minimum distance delta admits an
elusive pair iff the FULL setwise stabiliser of its neighbour set in
Aut(H(m,q)) moves C — that stabiliser is the weakest group that could
work, so testing it decides the question for every subgroup at once.

Codes are enumerated one per equivalence class by canonical
augmentation: grow by vertex index above the current maximum, keep a
branch only while the sorted index sequence is the lexicographic
minimum over the full automorphism orbit.  Removing the largest element
of a lex-minimal set leaves a lex-minimal set, so every canonical code
is reached from the canonical singleton {0} and pruning non-canonical
nodes loses nothing.

The traversal always runs to exhaustion (no early exit), which makes
the certificate counts independent of the worker count; "Found" is the
first hit in deterministic branch order.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .autgroup import (
    Automorphism,
    Group,
    apply,
    full_group_generators,
    generate_group,
    vertex_action_table,
)
from .caps import ResourceCapError, group_cap, vertex_cap
from .codes import Code, format_code, min_distance
from .hamming import Vertex, distance, space_size, sphere, vertex_from_index

__all__ = [
    "PreSet",
    "PartitionCheck",
    "SearchCertificate",
    "common_neighbours",
    "fourth_vertex",
    "pre_codewords",
    "check_partition_lemma",
    "enumerate_codes",
    "search_elusive",
    "format_certificate",
    "write_certificate",
]


# ---------------------------------------------------------------------------
# the distance-2 geometry behind the pruning lemmas

def common_neighbours(a: Vertex, b: Vertex) -> frozenset[Vertex]:
    """The two shared neighbours of a pair at distance 2."""
    if distance(a, b) != 2:
        raise ValueError("common neighbours are only taken at distance exactly 2")
    i, j = (k for k in range(a.m) if a.entries[k] != b.entries[k])
    return frozenset((a.replace(i, b.entries[i]), a.replace(j, b.entries[j])))


def fourth_vertex(a: Vertex, mu: Vertex, nu: Vertex) -> Vertex:
    """The unique b with common_neighbours(a, b) == {mu, nu}.

    mu and nu must be neighbours of a at mutual distance 2; b takes
    mu's change and nu's change simultaneously.
    """
    if distance(a, mu) != 1 or distance(a, nu) != 1 or distance(mu, nu) != 2:
        raise ValueError("need two neighbours of a at mutual distance 2")
    (i,) = (k for k in range(a.m) if a.entries[k] != mu.entries[k])
    (j,) = (k for k in range(a.m) if a.entries[k] != nu.entries[k])
    return a.replace(i, mu.entries[i]).replace(j, nu.entries[j])


@dataclass(frozen=True)
class PreSet:
    """Vertices at distance 2 from ``base`` that the mover sends back into the code."""

    base: Vertex
    mover: Automorphism
    members: frozenset[Vertex]


def pre_codewords(C: Code, x: Automorphism, alpha: Vertex) -> PreSet:
    """All pi with d(alpha, pi) = 2 and pi^x in C.

    Only defined when alpha is a codeword that x moves out of the code,
    and the code has minimum distance at least 3.
    """
    if alpha not in C:
        raise ValueError("alpha must be a codeword")
    if apply(x, alpha) in C:
        raise ValueError("x must move alpha out of the code")
    if min_distance(C) < 3:
        raise ValueError("pre-codewords need minimum distance >= 3")
    members = frozenset(pi for pi in sphere(alpha, 2) if apply(x, pi) in C)
    return PreSet(alpha, x, members)


@dataclass(frozen=True)
class PartitionCheck:
    """Outcome of the three partition clauses around one (codeword, mover) pair."""

    passed: bool
    base_partition_ok: bool  # parts Γ1(alpha)∩Γ1(pi) tile Γ1(alpha)
    pre_partition_ok: bool  # for each pi: parts Γ1(pi)∩Γ1(beta) tile Γ1(pi)
    entry_separation_ok: bool  # other pre-codewords change some third entry
    part_sizes_two: bool
    part_count: int
    expected_part_count: float


def _is_partition(parts: Sequence[frozenset[Vertex]], whole: frozenset[Vertex]) -> bool:
    seen: set[Vertex] = set()
    for part in parts:
        if not part or (part & seen):
            return False
        seen.update(part)
    return seen == whole


def check_partition_lemma(C: Code, x: Automorphism, alpha: Vertex) -> PartitionCheck:
    """Check the pre-codeword partition structure at one codeword.

    Verifies that the common-neighbour parts of the pre-codewords tile
    the neighbourhood of alpha, that codeword parts tile each
    pre-codeword's neighbourhood, and that distinct pre-codewords
    disagree with alpha in distinct entry pairs; all parts must have
    size 2.
    """
    pre = pre_codewords(C, x, alpha)
    sphere1_alpha = frozenset(sphere(alpha, 1))
    members = sorted(pre.members)

    base_parts = [sphere1_alpha & frozenset(sphere(pi, 1)) for pi in members]
    base_partition_ok = _is_partition(base_parts, sphere1_alpha)
    sizes_ok = all(len(p) == 2 for p in base_parts)

    pre_partition_ok = True
    for pi in members:
        sphere1_pi = frozenset(sphere(pi, 1))
        codewords_at_2 = [beta for beta in C.words if distance(pi, beta) == 2]
        parts = [sphere1_pi & frozenset(sphere(beta, 1)) for beta in codewords_at_2]
        if not _is_partition(parts, sphere1_pi):
            pre_partition_ok = False
        if not all(len(p) == 2 for p in parts):
            sizes_ok = False

    entry_separation_ok = True
    for pi in members:
        changed = {k for k in range(alpha.m) if alpha.entries[k] != pi.entries[k]}
        for other in members:
            if other == pi:
                continue
            part = sphere1_alpha & frozenset(sphere(other, 1))
            if not any(
                next(k for k in range(alpha.m) if alpha.entries[k] != v.entries[k]) not in changed
                for v in part
            ):
                entry_separation_ok = False

    expected = alpha.m * (alpha.q - 1) / 2
    return PartitionCheck(
        passed=base_partition_ok and pre_partition_ok and entry_separation_ok and sizes_ok,
        base_partition_ok=base_partition_ok,
        pre_partition_ok=pre_partition_ok,
        entry_separation_ok=entry_separation_ok,
        part_sizes_two=sizes_ok,
        part_count=len(base_parts),
        expected_part_count=expected,
    )


# ---------------------------------------------------------------------------
# orderly enumeration

class _SearchSpace:
    """Shared read-only arrays for one (m, q, delta) search."""

    def __init__(self, m: int, q: int, delta: int, group: Group):
        if group.elements is None:
            raise ResourceCapError("search needs the full group enumerated")
        self.m, self.q, self.delta = m, q, delta
        self.group = group
        self.n = space_size(m, q)
        self.table = vertex_action_table(group.elements, m, q)
        entries = np.array(
            [vertex_from_index(i, m, q).entries for i in range(self.n)], dtype=np.int16
        )
        self.dist = (entries[:, None, :] != entries[None, :, :]).sum(axis=2).astype(np.int16)
        # adjacency rows: the m(q-1) neighbouring indices of each vertex
        self.adj = np.array(
            [np.nonzero(self.dist[v] == 1)[0] for v in range(self.n)], dtype=np.int32
        )

    def code_of(self, idxs: Sequence[int]) -> Code:
        return Code(tuple(vertex_from_index(int(i), self.m, self.q) for i in idxs))

    def masks(self, idxs: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
        code_mask = np.zeros(self.n, dtype=np.uint8)
        arr = np.asarray(idxs, dtype=np.int32)
        code_mask[arr] = 1
        nb_mask = np.zeros(self.n, dtype=np.uint8)
        nb_mask[self.adj[arr].ravel()] = 1
        nb_mask[arr] = 0
        return nb_mask, code_mask


@dataclass
class _SubtreeResult:
    examined: int = 0
    max_size: int = 0
    hits: list = None  # list of (code index tuple, mover row)

    def __post_init__(self):
        if self.hits is None:
            self.hits = []


def _walk(
    space: _SearchSpace,
    code: list[int],
    cand: np.ndarray,
    cur_min: int,
    max_size: int | None,
    out: _SubtreeResult,
    scan_movers: bool,
) -> None:
    arr = np.array(code, dtype=np.int32)
    if not _kernels.is_canonical(space.table, arr):
        return
    if len(code) >= 2:
        out.examined += 1
        if len(code) > out.max_size:
            out.max_size = len(code)
        if scan_movers and cur_min == space.delta:
            nb_mask, code_mask = space.masks(code)
            row = _kernels.first_mover(space.table, nb_mask, code_mask)
            if row >= 0:
                out.hits.append((tuple(code), row))
    if max_size is not None and len(code) >= max_size:
        return
    for pos in range(cand.size):
        v = int(cand[pos])
        rest = cand[pos + 1 :]
        new_cand = rest[space.dist[v, rest] >= space.delta]
        new_min = min(cur_min, int(space.dist[v, arr].min()))
        _walk(space, code + [v], new_cand, new_min, max_size, out, scan_movers)


def _root_candidates(space: _SearchSpace) -> np.ndarray:
    idx = np.arange(space.n, dtype=np.int32)
    return idx[(idx > 0) & (space.dist[0, idx] >= space.delta)]


def enumerate_codes(
    m: int,
    q: int,
    delta: int,
    max_size: int | None = None,
    group: Group | None = None,
) -> Iterator[Code]:
    """One representative per equivalence class of codes with |C| >= 2 and
    pairwise distance >= delta, in canonical depth-first order."""
    if delta < 1 or delta > m:
        raise ValueError(f"need 1 <= delta <= m, got delta={delta}, m={m}")
    if group is None:
        expected = math.factorial(q) ** m * math.factorial(m)
        if expected > group_cap():
            raise ResourceCapError(f"Aut(H({m},{q})) order {expected} over the group cap")
        group = generate_group(full_group_generators(m, q))
    if space_size(m, q) > vertex_cap():
        raise ResourceCapError(f"H({m},{q}) too large to enumerate")
    space = _SearchSpace(m, q, delta, group)

    def rec(code: list[int], cand: np.ndarray) -> Iterator[Code]:
        arr = np.array(code, dtype=np.int32)
        if not _kernels.is_canonical(space.table, arr):
            return
        if len(code) >= 2:
            yield space.code_of(code)
        if max_size is not None and len(code) >= max_size:
            return
        for pos in range(cand.size):
            v = int(cand[pos])
            rest = cand[pos + 1 :]
            yield from rec(code + [v], rest[space.dist[v, rest] >= space.delta])

    yield from rec([0], _root_candidates(space))


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class SearchCertificate:
    m: int
    q: int
    delta: int
    outcome: str  # Found | NoneExhaustive | Aborted
    canonical_codes_examined: int
    max_code_size_seen: int
    found_pair: tuple[Code, Group] | None
    filters_applied: tuple[str, ...]
    wall_time: float


def search_elusive(
    m: int,
    q: int,
    delta: int,
    *,
    parity_filter: bool = True,
    threads: int = 1,
    max_size: int | None = None,
) -> SearchCertificate:
    """Exhaustively decide whether (m, q, delta) admits an elusive pair.

    Every enumerated code with minimum distance exactly delta is tested
    against the setwise stabiliser of its neighbour set in the full
    automorphism group.  The traversal is always complete, so the counts
    are identical for any thread count; Found reports the first hit in
    branch order together with that full stabiliser.
    """
    start = time.perf_counter()
    if m < 1 or q < 2 or delta < 1:
        raise ValueError(f"bad parameters m={m} q={q} delta={delta}")
    filters = ("parity",) if parity_filter else ()

    def cert(outcome, examined=0, max_seen=0, found=None):
        return SearchCertificate(
            m=m,
            q=q,
            delta=delta,
            outcome=outcome,
            canonical_codes_examined=examined,
            max_code_size_seen=max_seen,
            found_pair=found,
            filters_applied=filters,
            wall_time=time.perf_counter() - start,
        )

    if parity_filter and delta == 3 and (m * (q - 1)) % 2 == 1:
        # no elusive pair can have delta=3 with m(q-1) odd
        return cert("NoneExhaustive")
    if delta > m:
        return cert("NoneExhaustive")

    expected_order = math.factorial(q) ** m * math.factorial(m)
    if expected_order > group_cap() or space_size(m, q) > vertex_cap():
        return cert("Aborted")
    group = generate_group(full_group_generators(m, q))
    if group.elements is None:
        return cert("Aborted")
    space = _SearchSpace(m, q, delta, group)

    roots = _root_candidates(space)
    tasks: list[tuple[list[int], np.ndarray]] = []
    for pos in range(roots.size):
        v = int(roots[pos])
        rest = roots[pos + 1 :]
        tasks.append(([0, v], rest[space.dist[v, rest] >= delta]))

    def run_task(task) -> _SubtreeResult:
        code, cand = task
        out = _SubtreeResult()
        _walk(space, code, cand, int(space.dist[code[0], code[1]]), max_size, out, True)
        return out

    if threads <= 1:
        results = [run_task(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_task, tasks))

    examined = sum(r.examined for r in results)
    max_seen = max((r.max_size for r in results), default=0)
    for r in results:
        if r.hits:
            idxs, _mover_row = r.hits[0]
            found_code = space.code_of(idxs)
            nb_mask, _ = space.masks(idxs)
            rows = np.nonzero(_kernels.stabiliser_rows(space.table, nb_mask))[0]
            members = tuple(group.elements[int(i)] for i in rows)
            stab = Group(m, q, members, members)
            return cert("Found", examined, max_seen, (found_code, stab))
    return cert("NoneExhaustive", examined, max_seen)


def format_certificate(cert: SearchCertificate, *, wall_time: bool = True) -> str:
    pair = cert.found_pair
    lines = [
        f"canonical_codes_examined={cert.canonical_codes_examined}",
        f"delta={cert.delta}",
        f"filters_applied={','.join(cert.filters_applied)}",
        f"found_stabiliser_order={'' if pair is None else pair[1].order}",
        f"m={cert.m}",
        f"max_code_size_seen={cert.max_code_size_seen}",
        f"outcome={cert.outcome}",
        f"q={cert.q}",
    ]
    if wall_time:
        lines.append(f"wall_time_seconds={cert.wall_time:.6f}")
    text = "\n".join(lines) + "\n"
    if pair is not None:
        text += "found_code_begin\n" + format_code(pair[0]) + "found_code_end\n"
    return text


def write_certificate(path, cert: SearchCertificate) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_certificate(cert))
