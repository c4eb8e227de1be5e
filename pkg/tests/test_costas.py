import pytest

from rootcosets.costas import (
    SOFT_LIMIT,
    enumerate_costas,
    is_costas,
    is_costas_via_roots,
    verify_costas_height_property,
)
from rootcosets.permutation import Permutation, all_permutations, identity, parse_one_line
from rootcosets.roots import act, positive_roots

# counts confirmed against a brute-force filter over the full group
KNOWN_COUNTS = {1: 1, 2: 2, 3: 4, 4: 12, 5: 40, 6: 116, 7: 200}


def brute_force(n):
    return [w for w in all_permutations(n) if is_costas(w)]


class TestMembership:
    def test_trivial_ranks(self):
        assert is_costas(identity(1))
        assert is_costas(identity(2))
        assert not is_costas(identity(3))

    def test_known_member(self):
        # gap-1 differences 2,-1,-2; gap-2 differences 1,-3; all distinct
        assert is_costas(parse_one_line("2431", 4))

    def test_known_non_member(self):
        # columns one apart repeat the difference +1
        assert not is_costas(parse_one_line("1234", 4))
        # columns one apart repeat the difference +2
        assert not is_costas(parse_one_line("2413", 4))
        assert not is_costas(parse_one_line("3412", 4))

    def test_rank3_membership(self):
        members = {str(w) for w in all_permutations(3) if is_costas(w)}
        assert members == {"132", "213", "231", "312"}

    @pytest.mark.parametrize("n", range(1, 7))
    def test_two_membership_tests_agree(self, n):
        for w in all_permutations(n):
            assert is_costas(w) == is_costas_via_roots(w)

    def test_root_criterion_statement(self):
        # for a member, roots of one height land on pairwise distinct heights
        w = parse_one_line("2431", 4)
        assert is_costas(w)
        for h in range(1, 4):
            layer = [r for r in positive_roots(4) if r.height == h]
            images = [act(w, r).height for r in layer]
            assert len(set(images)) == len(images)

    def test_reverse_symmetry(self):
        # reversing the one-line word preserves membership
        for w in all_permutations(5):
            rev = Permutation(tuple(reversed(w.images)))
            assert is_costas(w) == is_costas(rev)

    def test_complement_symmetry(self):
        for w in all_permutations(5):
            comp = Permutation(tuple(6 - v for v in w.images))
            assert is_costas(w) == is_costas(comp)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", sorted(KNOWN_COUNTS.items()))
    def test_counts(self, n, count):
        assert len(enumerate_costas(n)) == count

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force(self, n):
        assert enumerate_costas(n) == brute_force(n)

    def test_sorted_and_distinct(self):
        found = enumerate_costas(6)
        assert found == sorted(found, key=lambda w: w.images)
        assert len(set(found)) == len(found)

    def test_every_result_is_a_member(self):
        assert all(is_costas(w) for w in enumerate_costas(7))

    def test_rejects_nonpositive_rank(self):
        with pytest.raises(ValueError):
            enumerate_costas(0)

    def test_warns_above_soft_limit(self):
        with pytest.warns(RuntimeWarning):
            found = enumerate_costas(SOFT_LIMIT + 1)
        assert len(found) == 444


class TestHeightVerifier:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_passes(self, n):
        report = verify_costas_height_property(n)
        assert report.passed
        assert report.rank == n
        assert report.costas_count == KNOWN_COUNTS[n]
        assert report.counterexamples == []

    def test_rank_limits(self):
        with pytest.raises(ValueError):
            verify_costas_height_property(2)
        with pytest.raises(ValueError):
            verify_costas_height_property(8)

    def test_force_lifts_ceiling(self):
        with pytest.warns(RuntimeWarning):
            report = verify_costas_height_property(8, force=True)
        assert report.passed
        assert report.costas_count == 444
