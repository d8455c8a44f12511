import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import record_certificate
from twelverep.catalog import is_F_avoiding_generic, load_shape
from twelverep.grid import (CornerNodeError, GridEmbedding, Kind, build_corner_representant,
                            build_representant, classify, corner_nodes, end_squares, find_X,
                            glue_line_length1, is_F_avoiding, k_suitable,
                            necessary_conditions_line, parse_embedding,
                            representant_from_good_labeling, squares, to_labeled_graph,
                            trace_good_labeling)
from twelverep.grid.embedding import ascii_art, format_embedding
from twelverep.grid.forbidden import FCheck, chordless_cycles, f_check
from twelverep.grid.goodlabel import PreconditionError
from twelverep.lab.enumerate import enumerate_embeddings
from twelverep.represent import verify

SQUARE = GridEmbedding(frozenset({(0, 0), (1, 0), (0, 1), (1, 1)}))
# an L of three squares topped by a fourth; (2, 0) is its only corner node
STAIR = parse_embedding("0 0\n1 0\n2 0\n0 1\n1 1\n2 1\n1 2\n2 2\n1 3\n2 3\n")

SMALL_SQUARE_GRIDS = enumerate_embeddings(12, kind=Kind.SQUARE_GRID)


def _pts(text):
    return GridEmbedding(frozenset(tuple(map(int, p.split(","))) for p in text.split()))


def test_classification():
    assert classify(_pts("0,0")) == Kind.DEGENERATE
    assert classify(_pts("0,0 1,0")) == Kind.DEGENERATE
    assert classify(SQUARE) == Kind.SQUARE_GRID
    assert classify(_pts("0,0 1,0 0,1 1,1 2,0")) == Kind.LINE_GRID


def test_embedding_text_roundtrip_and_canonical_translation():
    e = parse_embedding("# comment\n5 7\n6 7\n5 8\n6 8\n")
    assert e == SQUARE
    assert parse_embedding(format_embedding(STAIR, "stair")) == STAIR
    with pytest.raises(ValueError):
        parse_embedding("0 0\n0 0\n")
    with pytest.raises(ValueError):
        parse_embedding("0 0\n3 3\n")


def test_end_squares_and_corner_nodes():
    assert len(squares(STAIR)) == 4
    assert len(end_squares(STAIR)) == 2
    assert corner_nodes(STAIR) == {(2, 0)}
    assert len(end_squares(SQUARE)) == 1
    assert corner_nodes(SQUARE) == set()


def test_ascii_art_shows_labels():
    art = ascii_art(SQUARE, {(0, 0): 1, (1, 0): 3, (0, 1): 4, (1, 1): 2})
    assert art.splitlines() == ["4-2", "| |", "1-3"]


def test_find_X_on_the_shipped_shape():
    x = load_shape("x")
    w = find_X(x)
    assert w is not None and set(w) == x.points
    chk = f_check(x)
    assert not chk and chk.entry == "X"


def test_long_cycles_are_forbidden_short_ones_are_not():
    ring8 = _pts("0,0 1,0 2,0 2,1 2,2 1,2 0,2 0,1")
    chk = f_check(ring8)
    assert not chk and chk.entry == "C8"
    assert is_F_avoiding(SQUARE)
    assert {len(c) for c in chordless_cycles(ring8)} == {8}


def test_geometric_and_generic_f_detection_agree_exhaustively():
    for e in enumerate_embeddings(9):
        if classify(e) != Kind.DEGENERATE:
            assert f_check(e).avoiding == is_F_avoiding_generic(e).avoiding, e.points


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_geometric_and_generic_f_detection_agree_on_larger_square_grids(seed):
    shapes = _square_grids_16()
    e = shapes[seed % len(shapes)]
    assert is_F_avoiding(e).avoiding == is_F_avoiding_generic(e).avoiding


_CACHE = {}


def _square_grids_16():
    if "sq16" not in _CACHE:
        _CACHE["sq16"] = enumerate_embeddings(16, kind=Kind.SQUARE_GRID)
    return _CACHE["sq16"]


def test_builder_on_small_square_grids():
    for e in SMALL_SQUARE_GRIDS:
        c = build_representant(e)
        if isinstance(c, FCheck):
            assert not is_F_avoiding(e)
            continue
        g = to_labeled_graph(e, c.labeling)
        verify(c.word, g)
        record_certificate(c.word, g, "builder")


def test_builder_rejects_line_grids():
    with pytest.raises(ValueError):
        build_representant(_pts("0,0 1,0 0,1 1,1 2,0"))


def test_corner_representant_on_stair():
    c = build_corner_representant(STAIR)
    g = to_labeled_graph(STAIR, c.labeling)
    verify(c.word, g)
    corner_label = c.labeling[(2, 0)]
    positions = [i for i, x in enumerate(c.word) if x == corner_label]
    assert len(positions) == 2 and positions[1] - positions[0] == 3
    assert all(c.word.count(x) == 1 for x in set(c.word) - {corner_label})


def test_good_labeling_construction_on_square():
    lab = {(0, 0): 1, (1, 1): 2, (1, 0): 3, (0, 1): 4}
    w = representant_from_good_labeling(SQUARE, lab)
    assert w[0] == 3 and w.count(3) == 1
    verify(w, to_labeled_graph(SQUARE, lab))


def test_good_labeling_construction_preconditions():
    with pytest.raises(PreconditionError):
        # 1-3-2 with 1 and 2 adjacent along an edge is an I3
        representant_from_good_labeling(SQUARE, {(0, 0): 1, (1, 0): 2, (1, 1): 3, (0, 1): 4})
    with pytest.raises(PreconditionError):
        representant_from_good_labeling(SQUARE, {(0, 0): 1, (1, 0): 2, (1, 1): 3})
    with pytest.raises(PreconditionError):
        representant_from_good_labeling(_pts("0,0 1,0 0,1 1,1 2,0"),
                                        {(0, 0): 1, (1, 0): 2, (1, 1): 3, (0, 1): 4, (2, 0): 5})


def test_trace_names_its_steps():
    lab = {(0, 0): 1, (1, 1): 2, (1, 0): 3, (0, 1): 4}
    t = trace_good_labeling(SQUARE, lab)
    assert t.steps and not t.used_search


def test_glue_local_max_and_min():
    lab = {(0, 0): 1, (1, 1): 2, (1, 0): 3, (0, 1): 4}
    word = representant_from_good_labeling(SQUARE, lab)
    cases = set()
    for v in SQUARE.points:
        out = glue_line_length1(SQUARE, v, word, lab)
        verify(out.word, out.graph)
        record_certificate(out.word, out.graph, "glue")
        assert classify(out.embedding) == Kind.LINE_GRID
        cases.add(out.case)
    assert cases == {"local-max", "local-min"}


def test_glue_rejects_corner_nodes_and_bad_targets():
    c = build_corner_representant(STAIR)
    with pytest.raises(CornerNodeError):
        glue_line_length1(STAIR, (2, 0), c.word, c.labeling)
    with pytest.raises(ValueError):
        glue_line_length1(STAIR, (5, 5), c.word, c.labeling)
    with pytest.raises(ValueError):
        glue_line_length1(STAIR, (0, 0), c.word, c.labeling, new_point=(3, 3))


def test_glue_on_random_nodes_of_f_avoiding_grids():
    rng = random.Random(7)
    pool = [e for e in SMALL_SQUARE_GRIDS if is_F_avoiding(e)]
    done = 0
    while done < 10:
        e = rng.choice(pool)
        c = build_corner_representant(e)
        free = [v for v in sorted(e.points - corner_nodes(e)) if k_suitable(e, v, 1)]
        if not free:
            continue
        out = glue_line_length1(e, rng.choice(free), c.word, c.labeling)
        verify(out.word, out.graph)
        done += 1


def test_k_suitable():
    s = k_suitable(SQUARE, (0, 0), 3)
    assert s and s.straight and len(s.path) == 3
    # the middle of a 3x3 block has no room at all
    block = _pts(" ".join(f"{x},{y}" for x in range(3) for y in range(3)))
    assert not k_suitable(block, (1, 1), 1)
    with pytest.raises(ValueError):
        k_suitable(SQUARE, (0, 0), 0)


def test_necessary_conditions_on_the_g_shapes():
    for name in ("g3", "g4", "g5", "g6"):
        rules = {v.rule for v in necessary_conditions_line(load_shape(name))}
        assert "addline2" in rules, name
    b = necessary_conditions_line(load_shape("b333"))
    assert [v.rule for v in b] == ["lineaddline"]
    assert len(b[0].witness) == 10


def test_necessary_conditions_pass_at_an_end_square():
    e = _pts("0,0 1,0 0,1 1,1 2,0 3,0")
    assert necessary_conditions_line(e) == []
    with pytest.raises(ValueError):
        necessary_conditions_line(SQUARE)
