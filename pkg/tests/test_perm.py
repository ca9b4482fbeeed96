import itertools
import random

import pytest

from quandles.perm import (
    Perm,
    all_perms,
    are_conjugate,
    compose,
    cycle_decomposition,
    cycle_notation,
    inverse,
    pattern,
    power,
)


def perm(*cycles, n):
    return Perm.from_cycles(n, cycles)


class TestBasics:
    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Perm((1, 1, 3))

    def test_identity(self):
        assert Perm.identity(4).image == (1, 2, 3, 4)

    def test_compose_identity(self):
        i6 = Perm.identity(6)
        assert compose(i6, i6) == i6

    def test_compose_size_mismatch(self):
        with pytest.raises(ValueError):
            compose(Perm.identity(3), Perm.identity(4))

    def test_compose_with_inverse_is_identity(self):
        p = perm((1, 6), (2, 5), n=6)
        assert compose(p, inverse(p)) == Perm.identity(6)

    def test_compose_squares_three_cycles(self):
        # applying (2 5 3)(4 6 7) twice reverses each 3-cycle
        p = perm((2, 5, 3), (4, 6, 7), n=7)
        assert compose(p, p) == perm((2, 3, 5), (4, 7, 6), n=7)

    def test_inverse_of_identity(self):
        assert inverse(Perm.identity(5)) == Perm.identity(5)

    def test_involution_is_self_inverse(self):
        p = perm((1, 6), (2, 5), n=6)
        assert inverse(p) == p

    def test_inverse_reverses_cycles(self):
        p = perm((2, 5, 3), (4, 6, 7), n=7)
        assert inverse(p) == perm((2, 3, 5), (4, 7, 6), n=7)


class TestPower:
    def test_zeroth_power(self):
        p = perm((1, 2, 3, 4), n=5)
        assert power(p, 0) == Perm.identity(5)

    def test_square_of_four_cycle(self):
        p = perm((1, 2, 3, 4), n=5)
        assert power(p, 2) == perm((1, 3), (2, 4), n=5)

    def test_involution_squared(self):
        p = perm((1, 6), (2, 5), n=6)
        assert power(p, 2) == Perm.identity(6)

    def test_negative_power(self):
        p = perm((1, 2, 3), n=3)
        assert power(p, -1) == inverse(p)
        assert power(p, -2) == p


class TestCycleDecomposition:
    def test_q61_r4(self, q61):
        from quandles.quandle import right_translation

        r4 = right_translation(q61, 4)
        assert cycle_decomposition(r4) == ((1, 6), (2, 5), (3,), (4,))
        assert cycle_notation(r4) == "(1 6)(2 5)(3)(4)"

    def test_q72_r1(self, q72):
        from quandles.quandle import right_translation

        r1 = right_translation(q72, 1)
        assert cycle_notation(r1) == "(1)(2 5 3)(4 6 7)"

    def test_identity(self):
        assert cycle_decomposition(Perm.identity(3)) == ((1,), (2,), (3,))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_roundtrip_exhaustive(self, n):
        for p in all_perms(n):
            assert Perm.from_cycles(n, cycle_decomposition(p)) == p

    def test_roundtrip_random_larger(self):
        rng = random.Random(7)
        for n in (6, 7, 8):
            for _ in range(200):
                image = list(range(1, n + 1))
                rng.shuffle(image)
                p = Perm(tuple(image))
                assert Perm.from_cycles(n, cycle_decomposition(p)) == p


class TestPattern:
    def test_paper_example(self):
        assert pattern(perm((1, 6), (2, 5), n=6)) == (1, 1, 2, 2)

    def test_two_three_cycles(self):
        assert pattern(perm((2, 5, 3), (4, 6, 7), n=7)) == (1, 3, 3)

    def test_identity(self):
        assert pattern(Perm.identity(4)) == (1, 1, 1, 1)

    def test_conjugation_invariance(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(2, 8)
            images = []
            for _ in range(2):
                img = list(range(1, n + 1))
                rng.shuffle(img)
                images.append(Perm(tuple(img)))
            p, w = images
            conj = compose(inverse(w), compose(p, w))
            assert pattern(conj) == pattern(p)


class TestConjugacy:
    def test_identity_pair(self):
        ok, w = are_conjugate(Perm.identity(4), Perm.identity(4))
        assert ok and w == Perm.identity(4)

    def test_different_patterns(self):
        assert are_conjugate(perm((1, 2), n=3), perm((1, 2, 3), n=3)) == (
            False,
            None,
        )

    def test_q72_translations(self, q72):
        from quandles.quandle import right_translation

        r1 = right_translation(q72, 1)
        r2 = right_translation(q72, 2)
        ok, w = are_conjugate(r1, r2)
        assert ok
        assert compose(inverse(w), compose(r1, w)) == r2

    def test_witness_validates_exhaustively(self):
        for p, q in itertools.product(all_perms(4), repeat=2):
            ok, w = are_conjugate(p, q)
            assert ok == (pattern(p) == pattern(q))
            if ok:
                assert compose(inverse(w), compose(p, w)) == q
