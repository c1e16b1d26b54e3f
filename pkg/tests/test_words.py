import pytest

from leavitt_lp import AlphabetMismatchError, Word, empty_word, mono_mul, word_concat
from leavitt_lp.words import word_from_index, word_index, words_of_length


def w(letters, d=2):
    return Word(tuple(letters), d)


class TestWord:
    def test_letters_validated(self):
        with pytest.raises(ValueError):
            Word((0,), 2)
        with pytest.raises(ValueError):
            Word((3,), 2)
        with pytest.raises(ValueError):
            Word((), 1)

    def test_concat(self):
        assert word_concat(w([1, 2]), w([1])).letters == (1, 2, 1)
        assert word_concat(empty_word(2), w([2])).letters == (2,)
        assert word_concat(w([1]), w([1, 2])).letters == (1, 1, 2)

    def test_concat_length_adds(self):
        a, b = w([1, 2, 2]), w([2, 1])
        assert len(word_concat(a, b)) == len(a) + len(b)

    def test_concat_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            word_concat(w([1], 2), w([1], 3))


def rewrite_oracle(alpha, beta, gamma, delta):
    """Independent one-letter-at-a-time junction rewriting.

    Cancels t_{b0} s_{c0} pairs individually: 1 on a match, dead on a
    mismatch. Returns the surviving (row, col) words or None.
    """
    b, c = list(beta), list(gamma)
    while b and c:
        if b[0] != c[0]:
            return None
        b.pop(0)
        c.pop(0)
    return tuple(alpha) + tuple(c), tuple(delta) + tuple(b)


class TestMonoMul:
    def test_projection_squares(self):
        left = (w([1]), w([1]))
        assert mono_mul(left, left) == (w([1]), w([1]))

    def test_orthogonal_dies(self):
        assert mono_mul((w([1]), w([1])), (w([2]), w([])) ) is None

    def test_unequal_lengths_frozen_case(self):
        # (s1 t12)(s12 t2) -> (s1, t2); value frozen from the rewrite oracle
        assert rewrite_oracle((1,), (1, 2), (1, 2), (2,)) == ((1,), (2,))
        got = mono_mul((w([1]), w([1, 2])), (w([1, 2]), w([2])))
        assert got == (w([1]), w([2]))

    @pytest.mark.parametrize("d", [2, 3])
    def test_agrees_with_rewrite_oracle(self, d, rng):
        for _ in range(400):
            words = [
                tuple(rng.randint(1, d) for _ in range(rng.randint(0, 3)))
                for _ in range(4)
            ]
            a, b, c, e = words
            expected = rewrite_oracle(a, b, c, e)
            got = mono_mul((w(a, d), w(b, d)), (w(c, d), w(e, d)))
            if expected is None:
                assert got is None
            else:
                assert got == (w(expected[0], d), w(expected[1], d))

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetMismatchError):
            mono_mul((w([1], 2), w([1], 2)), (w([1], 3), w([1], 3)))


class TestWordIndexing:
    @pytest.mark.parametrize("d,n", [(2, 0), (2, 3), (3, 2)])
    def test_lexicographic_round_trip(self, d, n):
        all_words = list(words_of_length(d, n))
        assert all_words == sorted(all_words)
        assert len(all_words) == d ** n
        for i, letters in enumerate(all_words):
            assert word_index(letters, d) == i
            assert word_from_index(i, d, n) == letters
