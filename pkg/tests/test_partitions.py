import pytest
from hypothesis import given, strategies as st

from oracles import all_partitions, conjugate_by_cells, interlace_filter
from rectkron.partitions import (
    EMPTY,
    Partition,
    complement_in_rectangle,
    conjugate,
    count_distinct_odd_in_range,
    enumerate_partitions,
    interlaces,
    partwise_sum,
    pieri_down,
    pieri_up,
    self_conjugate_count,
)

P = Partition


def upto(n):
    return [P(p) for m in range(n + 1) for p in all_partitions(m)]


class TestPartition:
    def test_canonical_form_drops_trailing_zeros(self):
        assert P([3, 1, 0, 0]) == P((3, 1))
        assert P([0]) == EMPTY
        assert P().size == 0 and P().length == 0

    @pytest.mark.parametrize("bad", [[1, 2], [2, -1], [2, 0, 1]])
    def test_rejects_non_partitions(self, bad):
        with pytest.raises(ValueError):
            P(bad)

    def test_parse(self):
        assert P.parse("3,1") == P((3, 1))
        assert P.parse("") == EMPTY
        assert str(P((3, 1))) == "3,1"
        with pytest.raises(ValueError):
            P.parse("3, x")

    def test_partwise_sum(self):
        assert partwise_sum((2, 1), (3,)) == P((5, 1))


class TestConjugate:
    def test_examples(self):
        assert conjugate(()) == EMPTY
        assert conjugate((3, 3)) == P((2, 2, 2))
        assert conjugate((3, 1)) == P((2, 1, 1))

    @pytest.mark.parametrize("lam", upto(12))
    def test_involution_and_cell_oracle(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam) == P(conjugate_by_cells(lam))


class TestInterlacing:
    def test_examples(self):
        assert interlaces((2, 1), (2, 1))
        assert interlaces((2, 1), (1, 1))
        assert not interlaces((1, 1), (2,))

    def test_pieri_down_examples(self):
        assert pieri_down(()) == [EMPTY]
        assert set(pieri_down((3,))) == {EMPTY, P((1,)), P((2,)), P((3,))}
        assert set(pieri_down((2, 1))) == {P((2, 1)), P((2,)), P((1, 1)), P((1,))}

    def test_pieri_up_examples(self):
        assert pieri_up((), 0) == [EMPTY]
        assert set(pieri_up((1,), 3)) == {P((3,)), P((2, 1))}
        assert pieri_up((2, 1), 3) == [P((2, 1))]
        assert pieri_up((2, 1), 2) == []

    @pytest.mark.parametrize("nu", upto(10))
    def test_pieri_down_matches_filter(self, nu):
        expected = {t for t in upto(nu.size) if interlace_filter(nu, t)}
        got = pieri_down(nu)
        assert len(got) == len(set(got))
        assert set(got) == expected
        assert all(interlaces(nu, t) for t in got)
        for t in got:
            assert t.size <= nu.size and t.length <= nu.length <= t.length + 1

    def test_pieri_down_product_formula(self):
        for nu in upto(10):
            steps = [nu.part(i) - nu.part(i + 1) + 1 for i in range(nu.length)]
            expected = 1
            for s in steps:
                expected *= s
            assert len(pieri_down(nu)) == expected

    def test_adjointness(self):
        for nu in upto(10):
            down = set(pieri_down(nu))
            for theta in upto(nu.size):
                assert (theta in down) == (nu in pieri_up(theta, nu.size))

    def test_interlaces_matches_filter(self):
        for nu in upto(7):
            for theta in upto(7):
                assert interlaces(nu, theta) == interlace_filter(nu, theta)


class TestRectangle:
    def test_examples(self):
        assert complement_in_rectangle((), 3, 2) == P((3, 3))
        assert complement_in_rectangle((2, 1), 2, 2) == P((1,))
        assert complement_in_rectangle((3,), 2, 2) is None

    def test_degenerate(self):
        assert complement_in_rectangle((), 0, 4) == EMPTY
        assert complement_in_rectangle((1,), 0, 4) is None

    def test_involution(self):
        for d in range(6):
            for n in range(6):
                for a in upto(d * n):
                    comp = complement_in_rectangle(a, d, n)
                    if comp is None:
                        assert a.length > n or a.part(0) > d
                    else:
                        assert comp.size == d * n - a.size
                        assert complement_in_rectangle(comp, d, n) == a


class TestEnumeration:
    def test_examples(self):
        assert enumerate_partitions(0) == [EMPTY]
        assert enumerate_partitions(4) == [P(p) for p in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]]
        assert enumerate_partitions(6, min_part=2) == [P((6,)), P((4, 2)), P((3, 3)), P((2, 2, 2))]

    @pytest.mark.parametrize("m", range(13))
    def test_matches_oracle_in_order(self, m):
        assert enumerate_partitions(m) == [P(p) for p in all_partitions(m)]

    @given(
        m=st.integers(0, 14),
        max_length=st.one_of(st.none(), st.integers(0, 6)),
        min_part=st.one_of(st.none(), st.integers(1, 4)),
        max_part=st.one_of(st.none(), st.integers(1, 8)),
        distinct=st.booleans(),
        odd_only=st.booleans(),
    )
    def test_constraints(self, m, max_length, min_part, max_part, distinct, odd_only):
        got = enumerate_partitions(m, max_length, min_part, max_part, distinct, odd_only)

        def ok(p):
            return (
                (max_length is None or len(p) <= max_length)
                and (min_part is None or all(x >= min_part for x in p))
                and (max_part is None or all(x <= max_part for x in p))
                and (not distinct or len(set(p)) == len(p))
                and (not odd_only or all(x % 2 for x in p))
            )

        assert got == [P(p) for p in all_partitions(m) if ok(p)]


class TestCounts:
    def test_distinct_odd_examples(self):
        assert count_distinct_odd_in_range(5, 3, 9) == 1
        assert count_distinct_odd_in_range(4, 3, 7) == 0
        assert count_distinct_odd_in_range(0, 3, 3) == 1

    def test_distinct_odd_rejects_bad_range(self):
        with pytest.raises(ValueError):
            count_distinct_odd_in_range(4, 2, 7)

    def test_self_conjugate_examples(self):
        assert self_conjugate_count(1) == 1
        assert self_conjugate_count(3) == 1
        assert self_conjugate_count(4) == 1

    @pytest.mark.parametrize("m", range(21))
    def test_self_conjugate_equals_distinct_odd(self, m):
        assert self_conjugate_count(m) == count_distinct_odd_in_range(m, 1, 2 * m + 1)
        assert self_conjugate_count(m) == len(enumerate_partitions(m, distinct=True, odd_only=True))
