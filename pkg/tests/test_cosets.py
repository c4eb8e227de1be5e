import pytest

from rootcosets.cosets import (
    MIN_RANK,
    coset_count,
    coset_of,
    fixed_cosets_count,
    fixed_roots_count,
    in_parabolic,
    max_rep,
    max_rep_length,
    min_rep,
    parabolic_elements,
    parabolic_generators,
    verify_character_identity,
)
from rootcosets.permutation import (
    Permutation,
    all_permutations,
    conjugacy_class_representatives,
    identity,
    parse_one_line,
    simple_reflection,
)
from rootcosets.roots import Root, act, all_roots


def cosets_as_sets(n):
    """Partition of the full group keyed by the root labelling each coset."""
    blocks = {}
    for w in all_permutations(n):
        blocks.setdefault(coset_of(w), set()).add(w)
    return blocks


class TestParabolicSubgroup:
    def test_generators(self):
        assert parabolic_generators(6) == (1, 2, 3)
        assert parabolic_generators(5) == (1, 2)
        assert parabolic_generators(3) == ()

    @pytest.mark.parametrize("n,size", [(3, 1), (4, 2), (5, 6), (6, 24)])
    def test_size(self, n, size):
        elements = parabolic_elements(n)
        assert len(elements) == size
        assert len(set(elements)) == size

    def test_fixes_last_two_positions(self):
        for u in parabolic_elements(6):
            assert u(5) == 5 and u(6) == 6

    def test_matches_generated_subgroup(self):
        # close the generating set under multiplication, fully independently
        for n in (4, 5, 6):
            gens = [simple_reflection(i, n) for i in parabolic_generators(n)]
            group = {identity(n)}
            frontier = [identity(n)]
            while frontier:
                w = frontier.pop()
                for s in gens:
                    ws = w * s
                    if ws not in group:
                        group.add(ws)
                        frontier.append(ws)
            assert group == set(parabolic_elements(n))
            assert group == {w for w in all_permutations(n) if in_parabolic(w)}

    def test_in_parabolic(self):
        assert in_parabolic(identity(5))
        assert in_parabolic(Permutation((3, 1, 2, 4, 5)))
        assert not in_parabolic(Permutation((1, 2, 3, 5, 4)))


class TestCosetLabel:
    def test_reads_last_two_entries(self):
        w = parse_one_line("653124", 6)
        assert coset_of(w) == Root(2, 4, 6)
        assert coset_of(identity(4)) == Root(3, 4, 4)

    def test_constant_on_cosets(self):
        for n in (4, 5):
            for w in all_permutations(n):
                r = coset_of(w)
                for u in parabolic_elements(n):
                    assert coset_of(w * u) == r

    def test_distinguishes_cosets(self):
        # same label if and only if same coset w^{-1}w' in the subgroup
        for w in all_permutations(4):
            for v in all_permutations(4):
                same_label = coset_of(w) == coset_of(v)
                same_coset = in_parabolic(w.inverse() * v)
                assert same_label == same_coset

    @pytest.mark.parametrize("n", range(3, 7))
    def test_label_count(self, n):
        blocks = cosets_as_sets(n)
        assert len(blocks) == coset_count(n) == n * (n - 1)
        for members in blocks.values():
            assert len(members) == len(parabolic_elements(n))

    def test_intertwines_group_action(self):
        # relabelling after left multiplication is the root action
        for x in all_permutations(4):
            for w in all_permutations(4):
                assert coset_of(x * w) == act(x, coset_of(w))


class TestRepresentatives:
    def test_known_max_reps(self):
        assert str(max_rep(Root(2, 4, 6))) == "653124"
        assert str(max_rep(Root(1, 3, 6))) == "654213"
        assert str(max_rep(Root(5, 6, 6))) == "432156"
        assert str(max_rep(Root(1, 2, 3))) == "312"

    def test_known_min_reps(self):
        assert str(min_rep(Root(2, 4, 6))) == "135624"
        assert str(min_rep(Root(1, 3, 6))) == "245613"
        assert min_rep(Root(4, 5, 5)) == identity(5)

    def test_reps_carry_their_own_label(self):
        for n in range(3, 8):
            for r in all_roots(n):
                assert coset_of(max_rep(r)) == r
                assert coset_of(min_rep(r)) == r

    def test_max_rep_is_unique_longest(self):
        for n in (4, 5, 6):
            for r, members in cosets_as_sets(n).items():
                top = max_rep(r)
                rest = members - {top}
                assert top in members
                assert all(w.length() < top.length() for w in rest)

    def test_min_rep_is_unique_shortest(self):
        for n in (4, 5, 6):
            for r, members in cosets_as_sets(n).items():
                bottom = min_rep(r)
                assert bottom in members
                assert all(
                    w.length() > bottom.length() for w in members - {bottom}
                )

    def test_distinct_reps_across_cosets(self):
        for n in (4, 5, 6):
            reps = [max_rep(r) for r in all_roots(n)]
            assert len(set(reps)) == len(reps)


class TestLengthStatistic:
    def test_known_values(self):
        assert max_rep_length(Root(2, 4, 6)) == 11
        assert max_rep_length(Root(1, 2, 3)) == 2
        assert max_rep_length(Root(5, 6, 6)) == 6

    def test_identity_coset_hits_floor(self):
        # the coset containing the identity has the shortest longest-element
        for n in range(3, 9):
            floor = (n - 2) * (n - 3) // 2
            values = [max_rep_length(r) for r in all_roots(n)]
            assert min(values) == floor
            assert max_rep_length(Root(n - 1, n, n)) == floor
            assert max(values) == n * (n - 1) // 2
            assert max_rep_length(Root(2, 1, n)) == n * (n - 1) // 2

    def test_spread_between_reps_is_constant(self):
        for n in range(3, 9):
            spread = (n - 2) * (n - 3) // 2
            for r in all_roots(n):
                assert max_rep_length(r) - min_rep(r).length() == spread


class TestFixedPointCounts:
    def test_identity_fixes_everything(self):
        assert fixed_roots_count(identity(6)) == 30
        assert fixed_cosets_count(identity(6)) == 30

    def test_reflection_example(self):
        # two fixed points (3 and 4) give two fixed ordered pairs
        s = simple_reflection(1, 4)
        assert fixed_roots_count(s) == 2
        assert fixed_cosets_count(s) == 2

    def test_counts_agree_exhaustively(self):
        for n in (3, 4, 5):
            for w in all_permutations(n):
                assert fixed_roots_count(w) == fixed_cosets_count(w)

    def test_coset_count_matches_setwise_stabiliser(self):
        # independent of the conjugation shortcut: a coset is fixed exactly
        # when left multiplication maps it onto itself as a set
        for n in (4, 5):
            blocks = cosets_as_sets(n)
            for x in all_permutations(n):
                direct = sum(
                    1
                    for members in blocks.values()
                    if {x * w for w in members} == members
                )
                assert fixed_cosets_count(x) == direct

    def test_probe_representative_is_irrelevant(self):
        for n in (4, 5):
            for x in all_permutations(n):
                via_max = sum(
                    1
                    for r in all_roots(n)
                    if in_parabolic(max_rep(r).inverse() * x * max_rep(r))
                )
                assert fixed_cosets_count(x) == via_max

    def test_class_function(self):
        # both counts only depend on the conjugacy class
        for x in all_permutations(5):
            for g in (Permutation((2, 3, 4, 5, 1)), Permutation((5, 4, 3, 2, 1))):
                conj = g * x * g.inverse()
                assert fixed_roots_count(conj) == fixed_roots_count(x)
                assert fixed_cosets_count(conj) == fixed_cosets_count(x)


class TestCharacterVerifier:
    @pytest.mark.parametrize("n", range(3, 7))
    def test_passes_exhaustively(self, n):
        report = verify_character_identity(n)
        assert report.passed
        assert report.check == "character"
        assert report.rank == n
        assert report.counterexamples == []
        assert report.elapsed >= 0.0

    def test_rank_seven_uses_class_representatives(self):
        report = verify_character_identity(7)
        assert report.passed
        # sanity: the sample really is one element per class
        assert len(conjugacy_class_representatives(7)) == 15

    def test_rank_limits(self):
        with pytest.raises(ValueError):
            verify_character_identity(MIN_RANK - 1)
        with pytest.raises(ValueError):
            verify_character_identity(8)

    def test_force_lifts_ceiling(self):
        report = verify_character_identity(8, force=True)
        assert report.passed and report.rank == 8
