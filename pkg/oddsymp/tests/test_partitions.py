from math import comb

from django.test import SimpleTestCase

from oddsymp.exceptions import LengthError, PartitionError
from oddsymp.partitions import (
    EMPTY,
    IndexSet,
    Partition,
    enumerate_bounded,
    exponent_vector,
    index_set,
    make_partition,
    partition_from_index_set,
    partitions_up_to,
    prepend_rect,
    rectangle,
)


class PartitionTests(SimpleTestCase):
    def test_trailing_zeros_are_dropped(self):
        self.assertEqual(make_partition([2, 1, 0, 0]), Partition((2, 1)))
        self.assertEqual(make_partition([2, 1, 0, 0]).length(), 2)
        self.assertEqual(make_partition([]), EMPTY)
        self.assertEqual(EMPTY.length(), 0)

    def test_rejects_bad_parts(self):
        with self.assertRaises(PartitionError):
            make_partition([1, 2])
        with self.assertRaises(PartitionError):
            make_partition([1, -1])

    def test_parse(self):
        self.assertEqual(Partition.parse("2,1"), Partition((2, 1)))
        self.assertEqual(Partition.parse(" 3, 3 ,1 "), Partition((3, 3, 1)))
        for text in ("", "0", "-", "∅"):
            self.assertEqual(Partition.parse(text), EMPTY)
        with self.assertRaises(PartitionError):
            Partition.parse("2,a")
        with self.assertRaises(PartitionError):
            Partition.parse("1,2")

    def test_accessors(self):
        lam = Partition((3, 1))
        self.assertEqual(lam.size(), 4)
        self.assertEqual(lam.part(1), 3)
        self.assertEqual(lam.part(5), 0)
        self.assertEqual(lam.first(), 3)
        self.assertEqual(EMPTY.first(), 0)
        self.assertEqual(lam.padded(4), (3, 1, 0, 0))
        self.assertEqual(lam.tail(), Partition((1,)))
        self.assertEqual(lam.to_json(), [3, 1])
        self.assertEqual(str(lam), "(3,1)")
        self.assertEqual(str(EMPTY), "∅")

    def test_length_bounds(self):
        with self.assertRaises(LengthError):
            Partition((1, 1, 1)).padded(2)
        with self.assertRaises(LengthError):
            Partition((1, 1, 1)).check_length(2)
        self.assertEqual(Partition((1, 1)).check_length(2), Partition((1, 1)))


class EnumerationTests(SimpleTestCase):
    def test_small_box(self):
        self.assertEqual(enumerate_bounded(2, 1), [EMPTY, Partition((1,)), Partition((1, 1))])
        self.assertEqual(enumerate_bounded(0, 5), [EMPTY])
        self.assertEqual(enumerate_bounded(3, 0), [EMPTY])

    def test_counts_match_binomials(self):
        for max_len in range(4):
            for max_part in range(4):
                box = enumerate_bounded(max_len, max_part)
                self.assertEqual(len(box), comb(max_len + max_part, max_len))
                self.assertEqual(len(set(box)), len(box))
                for lam in box:
                    self.assertLessEqual(lam.length(), max_len)
                    self.assertLessEqual(lam.first(), max_part)

    def test_order_is_deterministic(self):
        self.assertEqual(enumerate_bounded(2, 2), enumerate_bounded(2, 2))
        self.assertEqual(len(enumerate_bounded(2, 2)), 6)

    def test_negative_box(self):
        with self.assertRaises(PartitionError):
            enumerate_bounded(-1, 2)

    def test_partitions_up_to(self):
        up_to_two = partitions_up_to(2, 2)
        self.assertEqual(set(up_to_two), {EMPTY, Partition((1,)), Partition((2,)), Partition((1, 1))})
        self.assertTrue(all(lam.size() <= 3 for lam in partitions_up_to(3, 3)))


class RectangleTests(SimpleTestCase):
    def test_prepend_rect(self):
        self.assertEqual(prepend_rect(2, 2, Partition((1,))), Partition((2, 2, 1)))
        self.assertEqual(prepend_rect(3, 0, Partition((2, 1))), Partition((2, 1)))
        self.assertEqual(rectangle(2, 3), Partition((2, 2, 2)))
        with self.assertRaises(PartitionError):
            prepend_rect(1, 2, Partition((2,)))

    def test_prepend_rect_size(self):
        for lam in enumerate_bounded(3, 2):
            for k in range(3):
                self.assertEqual(prepend_rect(2, k, lam).size(), 2 * k + lam.size())


class IndexSetTests(SimpleTestCase):
    def test_examples(self):
        self.assertEqual(index_set(Partition((2, 1)), 3), IndexSet(frozenset({4, 2, 0})))
        self.assertEqual(index_set(EMPTY, 3).descending(), (2, 1, 0))
        self.assertEqual(index_set(Partition((5,)), 1).ascending(), (5,))
        with self.assertRaises(LengthError):
            index_set(Partition((1, 1, 1)), 2)

    def test_injective_and_round_trip(self):
        box = enumerate_bounded(3, 3)
        sets = [index_set(lam, 3) for lam in box]
        self.assertEqual(len(set(sets)), len(box))
        for lam, indices in zip(box, sets):
            self.assertEqual(len(indices), 3)
            self.assertEqual(partition_from_index_set(indices), lam)

    def test_exponent_vector(self):
        self.assertEqual(exponent_vector(Partition((2, 1)), 3), (4, 2, 0))
        self.assertEqual(exponent_vector(EMPTY, 2), (1, 0))
