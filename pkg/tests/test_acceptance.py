"""Acceptance criteria, one test per criterion, each under its time budget.

The summary section printed by ``conftest.py`` lists one PASS/FAIL line per
criterion.  Fast paths go through the raw height-sequence helpers
(``path_in_heights``, ``slide_heights``) so the large sweeps stay in budget.
"""

import itertools
import random
import time
from collections import defaultdict

from towertab.core import TowerDiagram
from towertab.enumeration import count_stt, enumerate_stt, reduced_words, shape_of
from towertab.flight import corner_cells, flight_number, path_in_heights
from towertab.natural import is_natural_word, natural_word
from towertab.perm import (
    Permutation,
    all_permutations,
    is_reduced_oracle,
    reduced_words_oracle,
    word_to_permutation,
)
from towertab.read import read
from towertab.rothe import (
    complete_tableau,
    drop_last_natural_letter,
    rothe_diagram,
    rothify,
    tower_from_rothe,
)
from towertab.slide import Landed, SRPair, Terminated, recording_tableau, slide, slide_heights, sr_algorithm, sr_shape

SEED = 20120601


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def _words(alphabet, length):
    return itertools.product(range(1, alphabet + 1), repeat=length)


def _random_heights(rng):
    return [rng.randint(0, 8) for _ in range(rng.randint(0, 10))]


def _pipeline(heights, *values):
    hs = list(heights)
    for v in values:
        if slide_heights(hs, v) is None:
            return None
    return TowerDiagram(tuple(hs))


def test_criterion_1_golden_examples():
    with Budget(1.0):
        T = TowerDiagram((1, 0, 4, 2, 0, 0, 2))
        result = sr_algorithm((7, 8, 4, 5, 3, 4, 5, 6, 1))
        assert isinstance(result, SRPair) and result.shape == T
        assert result.sliding.columns == ((1,), (), (3, 4, 5, 6), (4, 5), (), (), (7, 8))
        assert result.recording.columns == ((9,), (), (5, 6, 7, 8), (3, 4), (), (), (1, 2))

        landings = {2: (1, 1), 3: (5, 0), 5: (4, 2), 7: (3, 4), 9: (7, 2)}
        landings.update({k: (k, 0) for k in range(10, 30)})
        for v, cell in landings.items():
            bigger, out = slide(T, v)
            assert out == Landed(cell) and bigger.size == T.size + 1
        for v in (1, 4, 6, 8):
            assert slide(T, v) == (T, Terminated())

        F = TowerDiagram((0, 1, 4, 2, 1, 0, 4))
        assert {c for c in F.cells() if flight_number(F, c) is None} == {(3, 0), (4, 0), (5, 0), (7, 0)}
        assert flight_number(F, (3, 1)) == flight_number(F, (4, 1)) == 4
        assert set(corner_cells(F)) == {(2, 0), (3, 3), (4, 1), (7, 3)}

        stt = enumerate_stt(TowerDiagram((2, 1, 0, 1)))
        assert len(stt) == 8
        assert {read(t) for t in stt} == {
            (4, 2, 1, 2), (2, 1, 4, 2), (2, 4, 1, 2), (4, 1, 2, 1),
            (1, 4, 2, 1), (1, 2, 4, 1), (1, 2, 1, 4), (2, 1, 2, 4),
        }

        assert natural_word(TowerDiagram((2, 1, 0, 1))) == (4, 2, 1, 2)
        assert natural_word(TowerDiagram((3, 2, 1))) == (3, 2, 3, 1, 2, 3)

        assert rothe_diagram(Permutation((2, 1, 4, 6, 3, 5))).cells == {(1, 1), (3, 3), (4, 3), (4, 5)}
        p = word_to_permutation((3, 4, 5, 2, 3, 1, 2))
        assert p == Permutation((4, 5, 1, 2, 6, 3))
        cells = {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (5, 3)}
        assert rothify(p).cells == rothe_diagram(p).cells == cells


def test_criterion_2_reducibility_equivalence():
    with Budget(5.0):
        checked = accepted = 0
        for alphabet, length in ((4, 6), (5, 5)):
            for w in _words(alphabet, length):
                by_sliding = sr_shape(w) is not None
                assert by_sliding == is_reduced_oracle(w), w
                checked += 1
                accepted += by_sliding
        assert checked == 4**6 + 5**5
        assert accepted > 0


def test_criterion_3_bijection_round_trips():
    with Budget(30.0):
        accepted = 0
        for alphabet, length in ((4, 6), (5, 5)):
            for w in _words(alphabet, length):
                if sr_shape(w) is None:
                    continue
                assert read(recording_tableau(w)) == w
                accepted += 1
        assert accepted > 0

        tableaux = 0
        for hs in itertools.product(range(6), repeat=5):
            if sum(hs) > 8:
                continue
            for t in enumerate_stt(TowerDiagram(hs)):
                assert recording_tableau(read(t)) == t
                tableaux += 1
        assert tableaux > 10**4


def test_criterion_4_shape_bijection():
    with Budget(60.0):
        shapes_of = defaultdict(set)
        perms_of = defaultdict(set)
        for p in all_permutations(4):
            for w in reduced_words_oracle(p):
                shape = sr_shape(w)
                shapes_of[p].add(shape)
                perms_of[shape].add(word_to_permutation(w))
        assert len(shapes_of) == 24 and len(perms_of) == 24
        assert all(len(s) == 1 for s in shapes_of.values())
        assert all(len(s) == 1 for s in perms_of.values())

        for p in all_permutations(4):
            assert count_stt(shape_of(p)) == len(reduced_words_oracle(p))
        assert count_stt(shape_of(Permutation((4, 3, 2, 1)))) == 16

        rng = random.Random(SEED)
        for p in rng.sample(list(all_permutations(5)), 50):
            oracle = reduced_words_oracle(p)
            assert count_stt(shape_of(p)) == len(oracle)
            assert reduced_words(p) == oracle


def test_criterion_5_sliding_and_flight_properties():
    with Budget(30.0):
        rng = random.Random(SEED)

        pairs = 0
        for _ in range(10**4):
            hs = _random_heights(rng)
            for i, h in enumerate(hs, start=1):
                numbers = []
                for j in range(h):
                    path = path_in_heights(hs, i, j)
                    if path is not None:
                        numbers.append((j, sum(path[-1])))
                for (j1, f1), (j2, f2) in itertools.combinations(numbers, 2):
                    assert abs(f1 - f2) >= abs(j1 - j2)
                    if abs(j1 - j2) == 1:
                        assert abs(f1 - f2) == 1
                    pairs += 1
        assert pairs > 10**4

        landed = 0
        for _ in range(10**4):
            hs = _random_heights(rng)
            a = rng.randint(1, 20)
            b = rng.choice([v for v in range(1, 21) if abs(v - a) >= 2])
            left, right = _pipeline(hs, b, a), _pipeline(hs, a, b)
            assert left == right
            landed += left is not None
        assert landed > 1000

        landed = 0
        for _ in range(10**4):
            hs = _random_heights(rng)
            a = rng.randint(1, 19)
            left, right = _pipeline(hs, a, a + 1, a), _pipeline(hs, a + 1, a, a + 1)
            assert left == right
            landed += left is not None
        assert landed > 1000

        # flightVSslide: every corner of every diagram in the 6x6 box
        corners = 0
        for hs in itertools.product(range(7), repeat=6):
            for i, h in enumerate(hs, start=1):
                if not h:
                    continue
                path = path_in_heights(hs, i, h - 1)
                if path is None:
                    continue
                beta = sum(path[-1])
                smaller = list(hs)
                smaller[i - 1] -= 1
                assert slide_heights(smaller, beta) == (i, h - 1)
                assert tuple(smaller) == hs
                corners += 1
        assert corners > 4 * 10**5


def test_criterion_6_rothe_correspondence():
    with Budget(60.0):
        for p in all_permutations(5):
            assert tower_from_rothe(p) == shape_of(p)
            assert rothify(p) == rothe_diagram(p)
            ct = complete_tableau(p)
            if ct.length == 0:
                continue
            r, offset = ct.virtual_cell_of(1)
            assert offset == 0
            assert ct.virtual.row(r + 1) == 0
            last = natural_word(shape_of(p))[-1]
            assert drop_last_natural_letter(ct) == complete_tableau(p.times_simple(last))

        rng = random.Random(SEED)
        for _ in range(100):
            line = list(range(1, 7))
            rng.shuffle(line)
            p = Permutation(tuple(line))
            assert rothify(p) == rothe_diagram(p)


def test_criterion_7_natural_word_uniqueness():
    with Budget(10.0):
        for p in all_permutations(4):
            naturals = [w for w in reduced_words_oracle(p) if is_natural_word(w)]
            assert naturals == [natural_word(shape_of(p))]
