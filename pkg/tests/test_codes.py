import itertools
import random

import pytest

from elusivecodes import perms
from elusivecodes.autgroup import (
    diag,
    diag_top_generators,
    full_group_generators,
    generate_group,
    top,
)
from elusivecodes.caps import ResourceCapError
from elusivecodes.codes import (
    Code,
    apply_to_code,
    are_equivalent,
    covering_radius,
    fixes_setwise,
    format_code,
    format_vertex_set,
    gamma_r,
    is_neighbour_transitive,
    is_transitive,
    min_distance,
    neighbour_set,
    parse_code,
    read_code,
    setwise_stabiliser,
    words_array,
    write_code,
)
from elusivecodes.hamming import Vertex, all_vertices, distance


def V(text, q=3):
    return Vertex(tuple(int(c) for c in text), q)


REP33 = Code.from_words([V("000"), V("111"), V("222")])


def test_code_construction_sorts_and_dedups():
    C = Code.from_words([V("222"), V("000"), V("111"), V("000")])
    assert C.words == (V("000"), V("111"), V("222"))
    assert len(C) == 3 and V("111") in C and V("012") not in C
    assert list(C) == list(C.words)


def test_code_rejects_mixed_spaces():
    with pytest.raises(ValueError):
        Code.from_words([V("000"), Vertex((0, 0), 3)])
    with pytest.raises(ValueError):
        Code.from_words([V("000"), Vertex((0, 0, 0), 4)])
    with pytest.raises(ValueError):
        Code.from_words([])


def test_words_array():
    arr = words_array(REP33)
    assert arr.shape == (3, 3)
    assert arr.tolist() == [[0, 0, 0], [1, 1, 1], [2, 2, 2]]


def test_min_distance():
    assert min_distance(REP33) == 3
    assert min_distance(Code.from_words([V("000"), V("011")])) == 2
    with pytest.raises(ValueError):
        min_distance(Code.from_words([V("000")]))
    # oracle: brute pairwise minimum on a random code
    rng = random.Random(11)
    verts = list(all_vertices(4, 3))
    for _ in range(20):
        words = rng.sample(verts, rng.randrange(2, 10))
        C = Code.from_words(words)
        brute = min(distance(a, b) for a, b in itertools.combinations(C.words, 2))
        assert min_distance(C) == brute


def test_covering_radius():
    # 012 sits at distance 2 from every repeat word
    assert covering_radius(REP33) == 2
    assert covering_radius(Code.from_words([V("000")])) == 3
    assert covering_radius(Code.from_words(all_vertices(3, 3))) == 0


def test_neighbour_set_is_gamma_one():
    rng = random.Random(12)
    verts = list(all_vertices(3, 3))
    for _ in range(20):
        C = Code.from_words(rng.sample(verts, rng.randrange(1, 8)))
        assert neighbour_set(C) == gamma_r(C, 1)
    assert len(neighbour_set(REP33)) == 18
    assert gamma_r(REP33, 0) == REP33.word_set
    # the six all-distinct words are the whole distance-2 shell
    assert gamma_r(REP33, 2) == frozenset(
        v for v in all_vertices(3, 3) if len(set(v.entries)) == 3
    )


def test_gamma_r_partitions_space():
    C = Code.from_words([V("000"), V("012")])
    shells = [gamma_r(C, r) for r in range(4)]
    assert sum(len(s) for s in shells) == 27
    for a, b in itertools.combinations(shells, 2):
        assert not (a & b)


def test_apply_to_code_and_fixes_setwise():
    x = diag(perms.cycle(3, (0, 1, 2)), 3)
    assert apply_to_code(x, REP33) == REP33
    assert fixes_setwise(x, REP33)
    y = diag(perms.transposition(3, 0, 1), 3)
    D = Code.from_words([V("000"), V("011")])
    assert apply_to_code(y, D) == Code.from_words([V("111"), V("100")])
    assert not fixes_setwise(y, D)
    assert fixes_setwise(y, {V("001"), V("110")})


def test_is_transitive():
    gens = diag_top_generators(3)
    assert is_transitive(gens, REP33)
    with pytest.raises(ValueError):
        is_transitive(gens, {V("000"), V("011")})
    with pytest.raises(ValueError):
        is_transitive(gens, set())
    assert is_transitive([], {V("000")})


def test_setwise_stabiliser(full33):
    # oracle: 000, 111, 222 are fixed setwise by any position shuffle (3! = 6)
    # combined with a diagonal alphabet map (3! = 6); no mixed-coordinate map
    # keeps all three words constant, so the stabiliser has order 36
    H = setwise_stabiliser(full33, REP33)
    assert H.order == 36
    assert all(fixes_setwise(x, REP33) for x in H.elements)
    # complement within the big group moves the code
    moved = sum(1 for x in full33.elements if not fixes_setwise(x, REP33))
    assert moved == full33.order - H.order
    with pytest.raises(ResourceCapError):
        setwise_stabiliser(generate_group(full_group_generators(3, 3), cap=1), REP33)


def test_are_equivalent(full33):
    C = Code.from_words([V("000"), V("111")])
    D = Code.from_words([V("222"), V("111")])
    y = are_equivalent(C, D, full33)
    assert y is not None and apply_to_code(y, C) == D
    E = Code.from_words([V("000"), V("011")])  # distance 2, not 3
    assert are_equivalent(C, E, full33) is None
    assert are_equivalent(C, REP33, full33) is None  # different sizes


def test_is_neighbour_transitive():
    assert is_neighbour_transitive(diag_top_generators(3), REP33)
    # top maps fix every repeat word pointwise, so they cannot be transitive
    tops = [top(perms.transposition(3, 0, 1), 3), top(perms.cycle(3, (0, 1, 2)), 3)]
    assert not is_neighbour_transitive(tops, REP33)
    # a generator that moves the code fails immediately
    bad = [diag(perms.transposition(3, 0, 1), 2)]
    C2 = Code.from_words([Vertex((0, 0), 3), Vertex((1, 2), 3)])
    assert not is_neighbour_transitive(bad, C2)


def test_format_and_parse_roundtrip():
    text = format_code(REP33, header_comments=["three repeats"])
    assert text.startswith("# three repeats\n3 3\n")
    assert parse_code(text) == REP33
    rng = random.Random(13)
    verts = list(all_vertices(4, 3))
    for _ in range(20):
        C = Code.from_words(rng.sample(verts, rng.randrange(1, 9)))
        assert parse_code(format_code(C)) == C


def test_format_vertex_set_empty():
    assert format_vertex_set([], 3, 3) == "3 3\n"


def test_parse_code_errors():
    with pytest.raises(ValueError):
        parse_code("")
    with pytest.raises(ValueError):
        parse_code("3 3\n")
    with pytest.raises(ValueError):
        parse_code("3\n0 0 0\n")
    with pytest.raises(ValueError):
        parse_code("3 3\n0 0\n")
    with pytest.raises(ValueError):
        parse_code("3 3\n0 0 0\n0 0 0\n")
    with pytest.raises(ValueError):
        parse_code("3 3\n0 0 5\n")


def test_write_read_roundtrip(tmp_path):
    p = tmp_path / "code.txt"
    write_code(p, REP33, header_comments=["a comment"])
    assert read_code(p) == REP33


def test_stabiliser_is_a_group(full33):
    H = setwise_stabiliser(full33, REP33)
    elems = set(H.elements)
    sample = list(H.elements)[:15]
    for a in sample:
        for b in sample:
            from elusivecodes.autgroup import compose

            assert compose(a, b) in elems
