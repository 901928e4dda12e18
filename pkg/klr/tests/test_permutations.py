from math import comb

from django.test import SimpleTestCase

from klr import permutations as perms


class TestReducedWords(SimpleTestCase):
    def test_longest_element_uses_smallest_word(self):
        """The longest element of S_3 is written 1 2 1, not 2 1 2."""
        self.assertEqual(perms.reduced_word(perms.longest(3)), (1, 2, 1))

    def test_reduced_word_round_trip(self):
        """Every permutation of S_4 is rebuilt from its reduced word."""
        for arr in perms.all_permutations(4):
            with self.subTest(arr=arr):
                word = perms.reduced_word(arr)
                self.assertEqual(len(word), perms.length(arr))
                self.assertEqual(perms.from_word(word, 4), arr)

    def test_length_of_longest(self):
        """w0 in S_n has n(n-1)/2 inversions."""
        for n in range(1, 6):
            with self.subTest(n=n):
                self.assertEqual(perms.length(perms.longest(n)), n * (n - 1) // 2)

    def test_identity_has_empty_word(self):
        self.assertEqual(perms.reduced_word(perms.identity(3)), ())


class TestComposition(SimpleTestCase):
    def test_inverse(self):
        """w composed with its inverse is the identity."""
        for arr in perms.all_permutations(3):
            with self.subTest(arr=arr):
                self.assertEqual(perms.compose(arr, perms.inverse(arr)), perms.identity(3))

    def test_target_of_crossing(self):
        """A single crossing swaps the colours on top."""
        self.assertEqual(perms.target((1, 0), ("i", "j")), ("j", "i"))

    def test_concatenate(self):
        """Side by side diagrams shift the right block."""
        self.assertEqual(perms.concatenate((1, 0), (0, 1)), (1, 0, 2, 3))


class TestCosets(SimpleTestCase):
    def test_minimal_coset_count(self):
        """|S_n / (S_b1 x S_b2)| is a binomial coefficient."""
        for blocks in ((2, 1), (2, 2), (1, 3)):
            with self.subTest(blocks=blocks):
                self.assertEqual(
                    len(perms.minimal_coset_representatives(blocks)), comb(sum(blocks), blocks[0])
                )

    def test_double_coset_count(self):
        """There are min(n, l) + 1 double cosets of S_n x S_l in S_(n+l)."""
        for n in range(1, 6):
            for ell in range(1, 7 - n):
                with self.subTest(n=n, ell=ell):
                    self.assertEqual(
                        len(perms.double_coset_representatives(n, ell)), min(n, ell) + 1
                    )
