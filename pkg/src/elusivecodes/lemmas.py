"""Executable lemma batteries behind the ``lemmas`` CLI subcommand.

Each suite returns (name, ok, detail) triples; a battery passes when
every triple is ok.  Everything here is exhaustive at desk scale except
the explicitly seeded random spot checks in the action suite.
"""

from __future__ import annotations

import random
from itertools import product as _iproduct

from . import constructions as cons
from . import perms
from .autgroup import (
    apply,
    compose,
    diag,
    diag_top_generators,
    full_group_generators,
    identity_automorphism,
    top,
    wreath_embed,
    wreath_generators,
)
from .codes import neighbour_set
from .elusive import verify_elusive
from .hamming import Vertex, all_vertices, distance, neighbours, sphere
from .search import check_partition_lemma, common_neighbours, fourth_vertex

__all__ = ["suite_same", "suite_act", "suite_partition", "suite_neigh", "SUITES"]

Check = tuple[str, bool, str]


def _check(name: str, ok: bool, detail: str = "") -> Check:
    return (name, bool(ok), detail)


def suite_same() -> list[Check]:
    """Neighbour-set identities across the constructed families."""
    out = []
    for q in (3, 4, 5):
        a, s, o = cons.alt_code(q), cons.sym_code(q), cons.odd_coset_code(q)
        same = neighbour_set(a) == neighbour_set(s) == neighbour_set(o)
        out.append(_check(f"gamma1-even-odd-full-q{q}", same, "neighbour sets differ"))
        out.append(
            _check(
                f"even-odd-union-q{q}",
                a.word_set | o.word_set == s.word_set and not (a.word_set & o.word_set),
                "even/odd words do not split the full permutation code",
            )
        )
    for q, l in ((3, 2), (3, 3)):
        prod = cons.product_code(cons.sym_code(q), l)
        par = cons.parity_code(q, l)
        out.append(
            _check(
                f"gamma1-product-parity-q{q}l{l}",
                neighbour_set(prod) == neighbour_set(par),
                "parity subcode has a different neighbour set",
            )
        )
    for q, l in ((3, 2), (3, 3), (4, 2)):
        par = cons.parity_code(q, l)
        odd = cons.parity_code(q, l, "odd")
        prod = cons.product_code(cons.sym_code(q), l)
        ok = par.word_set | odd.word_set == prod.word_set and not (par.word_set & odd.word_set)
        out.append(_check(f"parity-split-q{q}l{l}", ok, "even/odd blocks do not split the product"))
    for q in (4, 5):
        a, r = cons.alt_code(q), cons.rep_code(q, q)
        u = cons.union_code(a, r)
        na, nr = neighbour_set(a), neighbour_set(r)
        ok = neighbour_set(u) == na | nr and not (na & nr)
        out.append(_check(f"gamma1-union-disjoint-q{q}", ok, "union neighbour set is not a disjoint union"))
    return out


def _act_identity_holds(q: int) -> bool:
    sq = perms.symmetric_group(q)
    for y in sq:
        for z in sq:
            x = compose(diag(y, q), top(z))
            z_inv = perms.inverse(z)
            for g in sq:
                target = perms.compose(perms.compose(z_inv, g), y)
                if apply(x, cons.perm_vertex(g)) != cons.perm_vertex(target):
                    return False
                for i in range(q):
                    for j in range(q):
                        if i == j:
                            continue
                        lhs = apply(x, cons.nu(g, i, j))
                        if lhs != cons.nu(target, z.images[i], z.images[j]):
                            return False
    return True


def _nu_swap_holds(q: int) -> bool:
    for g in perms.symmetric_group(q):
        for i in range(q):
            for j in range(q):
                if i != j:
                    swapped = perms.compose(perms.transposition(q, i, j), g)
                    if cons.nu(g, i, j) != cons.nu(swapped, j, i):
                        return False
    return True


def _nu_covers_neighbours(q: int) -> bool:
    for g in perms.symmetric_group(q):
        images = {cons.nu(g, i, j) for i in range(q) for j in range(q) if i != j}
        if images != sphere(cons.perm_vertex(g), 1):
            return False
    return True


def _mu_equivariance_holds() -> bool:
    q, l = 3, 2
    blocks = cons.sym_code(q).words
    sigma = perms.transposition(l, 0, 1)
    x = wreath_embed([identity_automorphism(q, q)] * l, sigma)
    for a0, a1 in _iproduct(blocks, repeat=2):
        bold = (a0, a1)
        permuted = (a1, a0)
        for i in range(l):
            for nb in neighbours(bold[i]):
                lhs = apply(x, cons.mu(bold, nb, i))
                if lhs != cons.mu(permuted, nb, sigma.images[i]):
                    return False
    return True


def suite_act(seed: int = 0) -> list[Check]:
    """The group-action identity on permutation words, plus action axioms."""
    out = [
        _check("act-identity-q3", _act_identity_holds(3), "diag/top action identity fails"),
        _check("act-identity-q4", _act_identity_holds(4), "diag/top action identity fails"),
        _check("nu-swap-q3", _nu_swap_holds(3), "swap identity fails"),
        _check("nu-swap-q4", _nu_swap_holds(4), "swap identity fails"),
        _check("nu-covers-q3", _nu_covers_neighbours(3), "neighbour parametrisation misses vertices"),
        _check("mu-equivariance-q3l2", _mu_equivariance_holds(), "block equivariance fails"),
    ]
    rng = random.Random(seed)
    gens = full_group_generators(4, 3)
    verts = list(all_vertices(4, 3))

    def random_element():
        x = identity_automorphism(4, 3)
        for _ in range(rng.randrange(1, 7)):
            x = compose(x, rng.choice(gens))
        return x

    ok_axiom = ok_isometry = True
    for _ in range(100):
        x, y = random_element(), random_element()
        u, v = rng.choice(verts), rng.choice(verts)
        if apply(compose(x, y), u) != apply(y, apply(x, u)):
            ok_axiom = False
        if distance(apply(x, u), apply(x, v)) != distance(u, v):
            ok_isometry = False
    out.append(_check("action-axiom-random-h43", ok_axiom, "compose/apply mismatch"))
    out.append(_check("isometry-random-h43", ok_isometry, "distance not preserved"))
    return out


def _elusive_pairs_for_partition():
    yield "alt-q3", cons.alt_code(3), diag_top_generators(3)
    yield "alt-q4", cons.alt_code(4), diag_top_generators(4)
    yield "parity-q3l2", cons.parity_code(3, 2), wreath_generators(3, 2)
    yield "parity-q3l3", cons.parity_code(3, 3), wreath_generators(3, 3)
    yield "union-q4", cons.union_code(cons.alt_code(4), cons.rep_code(4, 4)), diag_top_generators(4)


def suite_partition() -> list[Check]:
    """Pre-codeword partition clauses on every verified elusive pair here."""
    out = []
    for name, C, gens in _elusive_pairs_for_partition():
        report = verify_elusive(C, gens, enum_cap=1)
        if not report.is_elusive:
            out.append(_check(f"partition-{name}", False, "pair failed to verify as elusive"))
            continue
        x = report.witness_mover
        expected = C.m * (C.q - 1) // 2
        moved = [w for w in C.words if apply(x, w) not in C]
        ok = bool(moved)
        detail = ""
        for alpha in moved:
            res = check_partition_lemma(C, x, alpha)
            if not (res.passed and res.part_count == expected):
                ok = False
                detail = f"failure at codeword {alpha}"
                break
        out.append(_check(f"partition-{name}", ok, detail))
    return out


def suite_neigh() -> list[Check]:
    """Distance-2 geometry of H(4,3): common neighbours and reconstruction."""
    verts = list(all_vertices(4, 3))
    ok_pairs = ok_recon = ok_unique = True
    for a in verts:
        part_owner: dict[frozenset, Vertex] = {}
        for b in verts:
            if b != a and distance(a, b) == 2:
                pair = common_neighbours(a, b)
                mu_v, nu_v = sorted(pair)
                if len(pair) != 2 or distance(mu_v, nu_v) != 2:
                    ok_pairs = False
                if distance(a, mu_v) != 1 or distance(b, mu_v) != 1:
                    ok_pairs = False
                if fourth_vertex(a, mu_v, nu_v) != b:
                    ok_recon = False
                if pair in part_owner:
                    ok_unique = False
                part_owner[pair] = b
        # exhaustive converse: every neighbour pair at mutual distance 2 is hit once
        nbs = sorted(neighbours(a))
        expected = sum(
            1
            for s in range(len(nbs))
            for t in range(s + 1, len(nbs))
            if distance(nbs[s], nbs[t]) == 2
        )
        if len(part_owner) != expected:
            ok_unique = False
    return [
        _check("common-neighbours-count-h43", ok_pairs, "pair at distance 2 without exactly two shared neighbours"),
        _check("fourth-vertex-reconstruction-h43", ok_recon, "reconstruction mismatch"),
        _check("fourth-vertex-uniqueness-h43", ok_unique, "a neighbour pair determines more than one vertex"),
    ]


SUITES = {
    "same": lambda seed=0: suite_same(),
    "act": suite_act,
    "partition": lambda seed=0: suite_partition(),
    "neigh": lambda seed=0: suite_neigh(),
}
