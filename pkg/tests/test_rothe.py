import random

import pytest

from towertab.core import InvariantError, TowerDiagram
from towertab.enumeration import shape_of
from towertab.natural import natural_labelling, natural_word
from towertab.perm import (
    Permutation,
    all_permutations,
    coxeter_length,
    reduced_words_oracle,
    word_to_permutation,
)
from towertab.read import read
from towertab.rothe import (
    RotheDiagram,
    complete_tableau,
    drop_last_natural_letter,
    format_rothe,
    parse_rothe,
    rothe_diagram,
    rothe_right_action,
    rothify,
    tower_from_rothe,
    virtual_diagram,
)
from towertab.slide import recording_tableau

P = Permutation((4, 5, 1, 2, 6, 3))
P_ROTHE = {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (5, 3)}


def hook_rothe(p):
    """Cells left uncovered after shading the hooks right of and below each cross."""
    n = p.degree
    covered = set()
    for i in range(1, n + 1):
        j = p(i)
        covered |= {(i, c) for c in range(j, n + 1)}
        covered |= {(r, j) for r in range(i, n + 1)}
    return {(r, c) for r in range(1, n + 1) for c in range(1, n + 1)} - covered


def test_rothe_examples():
    assert rothe_diagram(Permutation((2, 1, 4, 6, 3, 5))).cells == {(1, 1), (3, 3), (4, 3), (4, 5)}
    assert rothe_diagram(Permutation.identity()).cells == set()
    assert rothe_diagram(P).cells == P_ROTHE


def test_rothe_matches_hook_construction_and_length():
    for p in all_permutations(5):
        d = rothe_diagram(p)
        assert d.cells == hook_rothe(p)
        assert len(d) == coxeter_length(p)


def test_right_action_examples():
    p = Permutation((2, 1, 4, 6, 3, 5))
    assert len(rothe_right_action(p, 3)) == len(rothe_diagram(p)) + 1
    assert rothe_right_action(Permutation.identity(), 1).cells == {(1, 1)}
    w0 = Permutation((4, 3, 2, 1))
    assert len(rothe_right_action(w0, 1)) == 5
    assert rothe_right_action(w0, 1) == rothe_diagram(Permutation((3, 4, 2, 1)))


def test_right_action_two_ways_s5():
    for p in all_permutations(5):
        for i in range(1, 6):
            assert rothe_right_action(p, i) == rothe_diagram(p.times_simple(i))


def test_tower_from_rothe():
    assert tower_from_rothe(P) == TowerDiagram((2, 2, 3)) == shape_of(P)
    assert tower_from_rothe(Permutation.identity()) == TowerDiagram()
    assert tower_from_rothe(Permutation((2, 1, 4, 6, 3, 5))) == TowerDiagram((1, 0, 2, 0, 1))
    for p in all_permutations(5):
        assert tower_from_rothe(p) == shape_of(p)


def test_virtual_diagram_examples():
    assert virtual_diagram((3, 4, 5, 2, 3, 1, 2)).row_lengths == (3, 3, 0, 0, 1)
    for k in range(1, 6):
        v = virtual_diagram((k,))
        assert v.row(k) == 1 and v.size == 1
    assert virtual_diagram((3, 2, 1, 3, 2, 3)).row_lengths == (3, 2, 1)
    with pytest.raises(ValueError):
        virtual_diagram((1, 1))


def test_virtual_diagram_independent_of_reduced_word():
    for p in all_permutations(4):
        shapes = {virtual_diagram(w) for w in reduced_words_oracle(p)}
        assert len(shapes) == 1


def test_complete_tableau_example():
    ct = complete_tableau(P)
    assert ct.upper == natural_labelling(TowerDiagram((2, 2, 3)))
    assert [ct.virtual_label(1, c) for c in range(3)] == [2, 4, 7]
    assert [ct.virtual_label(2, c) for c in range(3)] == [1, 3, 6]
    assert ct.virtual_label(5, 0) == 5
    assert ct.virtual.row_lengths == (3, 3, 0, 0, 1)


def test_complete_tableau_identity_and_w0():
    ct = complete_tableau(Permutation.identity())
    assert ct.length == 0 and ct.virtual.size == 0
    w0 = Permutation((4, 3, 2, 1))
    ct = complete_tableau(w0)
    assert ct.reflected == recording_tableau((3, 2, 1, 3, 2, 3))


def test_reading_words_are_reverse():
    for p in all_permutations(5):
        ct = complete_tableau(p)
        assert read(ct.reflected) == read(ct.upper)[::-1]


def test_rothify():
    assert rothify(P).cells == P_ROTHE
    assert rothify(Permutation.identity()).cells == set()
    for p in all_permutations(5):
        assert rothify(p) == rothe_diagram(p)
    rng = random.Random(3)
    for _ in range(100):
        line = list(range(1, 7))
        rng.shuffle(line)
        p = Permutation(tuple(line))
        assert rothify(p) == rothe_diagram(p)


def test_row_below_virtual_one_is_empty():
    for p in all_permutations(5):
        ct = complete_tableau(p)
        if ct.length:
            r, c = ct.virtual_cell_of(1)
            assert c == 0
            assert ct.virtual.row(r + 1) == 0


def test_drop_last_natural_letter_s5():
    for p in all_permutations(5):
        ct = complete_tableau(p)
        if not ct.length:
            continue
        eta = natural_word(shape_of(p))
        assert drop_last_natural_letter(ct) == complete_tableau(p.times_simple(eta[-1]))


def test_drop_last_rejects_identity():
    with pytest.raises(ValueError):
        drop_last_natural_letter(complete_tableau(Permutation.identity()))


def test_rothe_codec():
    d = rothe_diagram(P)
    text = format_rothe(d)
    assert text.splitlines()[0] == "1 1"
    assert text.splitlines()[-1] == "5 3"
    assert parse_rothe(text) == d
    assert parse_rothe("") == RotheDiagram()
