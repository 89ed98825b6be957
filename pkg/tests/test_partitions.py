from fractions import Fraction

import pytest

from chromstrip.partitions import PartitionX, coeff_c, enumerate_partitions
from chromstrip.polycore import Q


def test_parse_forms():
    assert PartitionX.parse("[31]") == PartitionX((3, 1))
    assert PartitionX.parse("211") == PartitionX((2, 1, 1))
    assert PartitionX.parse("") == PartitionX(())
    assert PartitionX.parse("0").d == 0
    assert PartitionX.parse([2, 2]).label == "[22]"
    assert PartitionX(()).label == "[0]"


def test_invalid_partitions_rejected():
    with pytest.raises(ValueError):
        PartitionX((1, 2))
    with pytest.raises(ValueError):
        PartitionX((2, 0))


def test_shifted_partition():
    X = PartitionX.parse("[31]")
    assert X.x(1) == 3 and X.x(2) == 1 and X.x(3) == 0 and X.x(4) == 0
    assert X.y == (6, 3, 1, 0)


@pytest.mark.parametrize("d, count", [(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)])
def test_partition_counts(d, count):
    parts = enumerate_partitions(d)
    assert len(parts) == count
    assert all(p.d == d for p in parts)


def test_enumeration_order():
    assert [p.label for p in enumerate_partitions(4)] == ["[4]", "[31]", "[22]", "[211]", "[1111]"]


# c_{X,d} as printed for d = 2, 3, 4
PRINTED = {
    "[2]": Q * (Q - 3) / 2,
    "[11]": (Q - 1) * (Q - 2) / 2,
    "[3]": Q * (Q - 1) * (Q - 5) / 6,
    "[21]": Q * (Q - 2) * (Q - 4) / 6,
    "[111]": (Q - 1) * (Q - 2) * (Q - 3) / 6,
    "[4]": Q * (Q - 1) * (Q - 2) * (Q - 7) / 24,
    "[31]": Q * (Q - 1) * (Q - 3) * (Q - 6) / 24,
    "[22]": Q * (Q - 1) * (Q - 4) * (Q - 5) / 24,
    "[211]": Q * (Q - 2) * (Q - 3) * (Q - 5) / 24,
    "[1111]": (Q - 1) * (Q - 2) * (Q - 3) * (Q - 4) / 24,
}


@pytest.mark.parametrize("label", sorted(PRINTED))
def test_coefficient_polynomials(label):
    assert coeff_c(PartitionX.parse(label)) == PRINTED[label]


def test_low_levels():
    assert coeff_c(PartitionX(())) == 1
    assert coeff_c(PartitionX((1,))) == Q - 1
    assert coeff_c(PartitionX((2, 1)))(Fraction(4)) == 0
