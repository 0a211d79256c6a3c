import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aggparadox.aggregation.paradox import (
    brute_force_cr,
    check_paradox,
    irrational_voters,
    is_collectively_rational,
    required_profiles,
)
from aggparadox.aggregation.profiles import format_profile, parse_profile
from aggparadox.aggregation.rules import MAJORITY, majority
from aggparadox.errors import (
    BudgetExceededError,
    EvenVoterCountError,
    InputFileError,
    IrrationalIndividualError,
    LengthMismatchError,
)
from aggparadox.logic.parser import parse
from aggparadox.models.domain import CertifiedSafe, ParadoxWitness
from aggparadox.models.schemas import Ballot, IssueSet, Profile


@st.composite
def odd_profiles(draw, max_issues=4, max_voters=9):
    """Profiles with an odd number of voters"""
    issues = draw(st.integers(1, max_issues))
    voters = draw(st.sampled_from([n for n in range(1, max_voters + 1, 2)]))
    rows = draw(
        st.lists(
            st.lists(st.integers(0, 1), min_size=issues, max_size=issues),
            min_size=voters,
            max_size=voters,
        )
    )
    return Profile.from_rows(rows)


class TestMajorityRule:
    """Issue-wise majority and its axiomatic properties"""

    def test_example_outcome(self):
        profile = Profile.from_rows([(0, 1, 0), (1, 0, 0), (1, 1, 1)])
        assert majority(profile) == Ballot.of(1, 1, 0)
        assert MAJORITY.name == "majority"

    def test_even_voters_rejected(self):
        with pytest.raises(EvenVoterCountError):
            MAJORITY(Profile.from_rows([(1, 0), (0, 1)]))

    @settings(max_examples=100, deadline=None)
    @given(profile=odd_profiles(), data=st.data())
    def test_anonymity(self, profile, data):
        order = data.draw(st.permutations(list(profile.ballots)))
        permuted = Profile(issues=profile.issues, ballots=tuple(order))
        assert majority(permuted) == majority(profile)

    @settings(max_examples=100, deadline=None)
    @given(profile=odd_profiles(), data=st.data())
    def test_issue_neutrality(self, profile, data):
        """Flipping every vote on one issue flips the outcome on that issue only"""
        j = data.draw(st.integers(0, profile.issues.count - 1))
        flipped = Profile.from_rows(
            [tuple(1 - b if k == j else b for k, b in enumerate(row)) for row in profile.rows()],
            profile.issues,
        )
        before, after = majority(profile), majority(flipped)
        for k in range(profile.issues.count):
            assert after[k] == (1 - before[k] if k == j else before[k])

    @settings(max_examples=100, deadline=None)
    @given(profile=odd_profiles(), data=st.data())
    def test_issue_permutation(self, profile, data):
        """Reordering the issues reorders the outcome the same way"""
        order = data.draw(st.permutations(range(profile.issues.count)))
        permuted = Profile.from_rows(
            [tuple(row[k] for k in order) for row in profile.rows()], profile.issues
        )
        outcome = majority(profile)
        assert majority(permuted).bits == tuple(outcome.bits[k] for k in order)

    @settings(max_examples=100, deadline=None)
    @given(profile=odd_profiles(), data=st.data())
    def test_monotonicity(self, profile, data):
        voter = data.draw(st.integers(0, profile.voters - 1))
        j = data.draw(st.integers(0, profile.issues.count - 1))
        rows = [list(row) for row in profile.rows()]
        rows[voter][j] = 1
        raised = Profile.from_rows(rows, profile.issues)
        if majority(profile)[j] == 1:
            assert majority(raised)[j] == 1


class TestCheckParadox:
    """Paradox detection on a single profile"""

    def test_paradox_found(self, implication):
        profile = Profile.from_rows([(0, 1, 0), (1, 0, 0), (1, 1, 1)], implication.issues)
        witness = check_paradox(MAJORITY, profile, implication)
        assert isinstance(witness, ParadoxWitness)
        assert witness.outcome == Ballot.of(1, 1, 0)
        assert witness.violated.render(implication.issues) == "~p1 | ~p2 | p3"
        assert witness.rule == "majority"

    def test_rational_outcome_is_no_paradox(self, implication):
        profile = Profile.from_rows([(1, 1, 1), (1, 1, 1), (0, 0, 0)], implication.issues)
        assert check_paradox(MAJORITY, profile, implication) is None

    def test_irrational_individuals_listed(self, implication):
        profile = Profile.from_rows([(0, 0, 0), (1, 1, 0), (1, 1, 0)], implication.issues)
        assert irrational_voters(implication, profile) == [2, 3]
        with pytest.raises(IrrationalIndividualError) as info:
            check_paradox(MAJORITY, profile, implication)
        assert info.value.voters == [2, 3]
        assert "voter(s) 2, 3" in str(info.value)

    def test_dimension_mismatch(self, implication):
        profile = Profile.from_rows([(0, 1), (1, 0), (1, 1)])
        with pytest.raises(LengthMismatchError):
            check_paradox(MAJORITY, profile, implication)


class TestBruteForce:
    """Exhaustive collective rationality oracle"""

    def test_safe_disjunction_checks_every_profile(self):
        ic = parse("p1 | p2", IssueSet.default(2))
        result = brute_force_cr(MAJORITY, ic, 3)
        assert isinstance(result, CertifiedSafe)
        assert result.profiles_checked == 27
        assert is_collectively_rational(MAJORITY, ic, 3)

    def test_witness_for_implication(self, implication):
        result = brute_force_cr(MAJORITY, implication, 3)
        assert isinstance(result, ParadoxWitness)
        assert result.outcome == Ballot.of(1, 1, 0)
        assert all(implication.evaluate(b) for b in result.profile.ballots)

    def test_multiset_scan(self, implication):
        ic = parse("p1 | p2", IssueSet.default(2))
        assert brute_force_cr(MAJORITY, ic, 3, any_witness=True).profiles_checked == 10
        assert isinstance(brute_force_cr(MAJORITY, implication, 5, any_witness=True), ParadoxWitness)

    def test_budget(self, implication):
        assert required_profiles(7, 3) == 343
        assert required_profiles(7, 3, any_witness=True) == 84
        with pytest.raises(BudgetExceededError) as info:
            brute_force_cr(MAJORITY, implication, 3, budget=100)
        assert info.value.required == 343
        assert info.value.budget == 100

    def test_even_voters_checked_before_budget(self, implication):
        with pytest.raises(EvenVoterCountError):
            brute_force_cr(MAJORITY, implication, 4, budget=1)

    def test_unsatisfiable_constraint_is_vacuously_safe(self, issues3):
        result = brute_force_cr(MAJORITY, parse("FALSE", issues3), 3)
        assert isinstance(result, CertifiedSafe)
        assert result.profiles_checked == 0

    def test_small_chunks_give_same_witness(self, implication, monkeypatch):
        from aggparadox import config

        first = brute_force_cr(MAJORITY, implication, 3)
        monkeypatch.setenv("AGG_CHUNK_SIZE", "5")
        config.get_settings.cache_clear()
        try:
            assert brute_force_cr(MAJORITY, implication, 3).profile == first.profile
        finally:
            monkeypatch.delenv("AGG_CHUNK_SIZE")
            config.get_settings.cache_clear()

    def test_plain_callable_rule(self, implication):
        def dictator(profile):
            return profile.ballots[0]

        result = brute_force_cr(dictator, implication, 3)
        assert isinstance(result, CertifiedSafe)
        assert result.rule == "dictator"


class TestProfileFiles:
    def test_parse_and_format(self):
        text = "issues: E S F A\n# table\n1 0 0 0\n0 0 1 0\n1 0 1 1\n"
        profile = parse_profile(text)
        assert profile.voters == 3
        assert profile.issues.names == ("E", "S", "F", "A")
        assert parse_profile(format_profile(profile)) == profile

    def test_bad_rows_report_line(self):
        with pytest.raises(InputFileError) as info:
            parse_profile("issues: p1 p2\n1 0\n1 2\n", path="bad.profile")
        assert info.value.line == 3
        assert str(info.value).startswith("bad.profile:3:")

        with pytest.raises(InputFileError) as info:
            parse_profile("issues: p1 p2\n1 0 1\n")
        assert info.value.line == 2

    def test_empty_profile(self):
        with pytest.raises(InputFileError):
            parse_profile("issues: p1\n")
