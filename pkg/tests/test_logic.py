import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aggparadox.errors import (
    EmptyAssignmentError,
    FormulaSyntaxError,
    InputFileError,
    IssueCountTooLargeError,
    IssueSetMismatchError,
    LengthMismatchError,
    UnknownIdentifierError,
)
from aggparadox.logic.formula import (
    And,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    Var,
    conjoin,
    from_models,
    partial_to_conjunction,
)
from aggparadox.logic.parser import (
    FormulaParser,
    format_formula_file,
    parse,
    parse_formula_file,
)
from aggparadox.logic.sampling import boolean_function, random_formula
from aggparadox.logic.semantics import (
    check_enumerable,
    clause_formula,
    entails,
    equivalent,
    extensions,
    first_violated_clause,
    is_extendable,
    is_mifap,
    max_prime_implicate_size,
    mifap_assignments,
    models,
    prime_implicates,
    truth_table,
)
from aggparadox.models.schemas import Ballot, Clause, IssueSet, PartialAssignment


class TestParser:
    """Concrete syntax, precedence and error positions"""

    def test_precedence(self, issues3):
        assert parse("p1 & p2 -> p3", issues3).root == Implies(And(Var(0), Var(1)), Var(2))
        assert parse("~p1 | p2 & p3", issues3).root == Or(Not(Var(0)), And(Var(1), Var(2)))
        assert parse("p1 -> p2 <-> p3", issues3).root == Iff(Implies(Var(0), Var(1)), Var(2))

    def test_associativity(self, issues3):
        assert parse("p1 -> p2 -> p3", issues3).root == Implies(Var(0), Implies(Var(1), Var(2)))
        assert parse("p1 & p2 & p3", issues3).root == And(And(Var(0), Var(1)), Var(2))
        assert parse("p1 <-> p2 <-> p3", issues3).root == Iff(Iff(Var(0), Var(1)), Var(2))

    def test_alternative_operators_and_constants(self, issues3):
        assert parse("p1 /\\ p2 \\/ !p3", issues3) == parse("p1 & p2 | ~p3", issues3)
        assert parse("TRUE", issues3).root == Top()
        assert parse("~FALSE", issues3).root == Not(Bottom())

    def test_unknown_identifier(self, issues3):
        with pytest.raises(UnknownIdentifierError) as info:
            parse("p1 & p4", issues3)
        assert info.value.name == "p4"
        assert info.value.column == 6

    def test_syntax_errors_report_position(self, issues3):
        with pytest.raises(FormulaSyntaxError) as info:
            parse("p1 & & p2", issues3)
        assert (info.value.line, info.value.column) == (1, 6)

        with pytest.raises(FormulaSyntaxError) as info:
            parse("(p1", issues3)
        assert "expected ')'" in str(info.value)

        with pytest.raises(FormulaSyntaxError):
            parse("p1 $ p2", issues3)

    def test_validate(self, issues3):
        parser = FormulaParser(issues3)
        assert parser.validate("p1 -> (p2 | ~p3)")
        assert not parser.validate("p1 ->")

    @settings(max_examples=200, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1), depth=st.integers(0, 4))
    def test_pretty_print_round_trip(self, seed, depth):
        issues = IssueSet.default(4)
        f = random_formula(issues, random.Random(seed), depth)
        assert parse(f.pretty(), issues) == f

    def test_pretty_printer_parenthesises_mixed_operators(self, issues3):
        assert str(parse("p1 & p2 -> p3", issues3)) == "(p1 & p2) -> p3"
        assert str(parse("~(p1 | p2)", issues3)) == "~(p1 | p2)"
        assert str(parse("p1 & (p2 & p3)", issues3)) == "p1 & (p2 & p3)"

    def test_long_chain_on_one_line(self, issues3):
        f = parse(" | ".join(["p1", "p2"] * 1500), issues3)
        assert equivalent(f, parse("p1 | p2", issues3))
        assert parse(f.pretty(), issues3) == f

    def test_hand_built_chains_round_trip(self):
        issues = IssueSet.default(4)
        p1, p2, p3, p4 = (Var(i) for i in range(4))
        balanced = Formula(And(And(p1, p2), And(p3, p4)), issues)
        left_deep = Formula(And(And(And(p1, p2), p3), p4), issues)
        assert str(balanced) == "p1 & p2 & p3 & p4"
        assert str(left_deep) == "(p1 & p2 & p3) & p4"
        for f in (balanced, left_deep):
            assert parse(f.pretty(), issues) == f


class TestFormulaFiles:
    """Header, implicit conjunction and line numbers in errors"""

    def test_implicit_conjunction_with_comments(self):
        text = "# a comment\nissues: a b c\n\na | b   # trailing\n~b | c\n"
        f = parse_formula_file(text)
        assert f.issues.names == ("a", "b", "c")
        assert len(f.conjuncts()) == 2
        assert equivalent(f, parse("(a | b) & (~b | c)", f.issues))

    def test_empty_formula_list_is_true(self):
        f = parse_formula_file("issues: p1 p2\n")
        assert f.root == Top()

    def test_error_reports_file_line(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_formula_file("issues: p1 p2\np1 | p2\np1 &\n")
        assert info.value.line == 3
        assert info.value.column == 5

        with pytest.raises(UnknownIdentifierError) as info:
            parse_formula_file("issues: p1 p2\n\nq\n")
        assert info.value.line == 3

    def test_missing_or_bad_header(self):
        with pytest.raises(InputFileError):
            parse_formula_file("")
        with pytest.raises(InputFileError):
            parse_formula_file("p1 | p2\n")
        with pytest.raises(InputFileError):
            parse_formula_file("issues: p1 p1\n")

    def test_constants_cannot_name_issues(self):
        with pytest.raises(ValueError, match="constant"):
            IssueSet.of("p1", "TRUE")
        with pytest.raises(InputFileError):
            parse_formula_file("issues: p1 FALSE\np1 | FALSE\n")

    def test_many_lines(self):
        text = "issues: p1 p2 p3\n" + "p1 | p2\n" * 1500
        f = parse_formula_file(text)
        assert len(f.conjuncts()) == 1500
        assert equivalent(f, parse("p1 | p2", f.issues))
        assert max_prime_implicate_size(f) == 2

    def test_format_round_trip(self, two_cnf):
        text = format_formula_file(two_cnf, ["two clauses"])
        assert text.splitlines()[0] == "issues: p1 p2 p3"
        assert "# two clauses" in text
        again = parse_formula_file(text)
        assert again == two_cnf


class TestFormula:
    def test_evaluate(self, implication):
        assert implication.evaluate(Ballot.of(1, 1, 0)) == 0
        assert implication.evaluate(Ballot.of(1, 1, 1)) == 1
        with pytest.raises(LengthMismatchError):
            implication.evaluate(Ballot.of(1, 1))

    def test_variable_range_checked(self, issues3):
        with pytest.raises(ValueError):
            Formula(Var(3), issues3)

    def test_partial_to_conjunction(self, issues3):
        rho = PartialAssignment(bindings={0: 1, 1: 1, 2: 0})
        assert str(partial_to_conjunction(rho, issues3)) == "p1 & p2 & ~p3"
        with pytest.raises(EmptyAssignmentError):
            partial_to_conjunction(PartialAssignment(), issues3)

    def test_from_models(self, issues3):
        chosen = [Ballot.of(1, 0, 1), Ballot.of(0, 1, 1)]
        f = from_models(issues3, chosen)
        assert models(f) == sorted(chosen, key=lambda b: b.bits)
        assert from_models(issues3, []).root == Bottom()

    def test_long_conjunction_stays_shallow(self, issues3):
        f = Formula(conjoin([Or(Var(0), Var(1))] * 5000), issues3)
        assert len(f.conjuncts()) == 5000
        assert f.evaluate(Ballot.of(0, 0, 1)) == 0
        assert models(f) == models(parse("p1 | p2", issues3))

    def test_mismatched_issue_sets(self, issues3):
        other = parse("a", IssueSet.of("a", "b", "c"))
        with pytest.raises(IssueSetMismatchError):
            entails(parse("p1", issues3), other)


class TestSemantics:
    """Models, entailment, prime implicates and mifap-assignments"""

    def test_models_are_lexicographic(self, implication):
        found = models(implication)
        assert len(found) == 7
        assert found[0] == Ballot.of(0, 0, 0)
        assert Ballot.of(1, 1, 0) not in found
        assert [b.to_code() for b in found] == [0, 1, 2, 3, 4, 5, 7]

    @settings(max_examples=200, deadline=None)
    @given(
        seed=st.integers(min_value=0, max_value=2**32 - 1),
        count=st.integers(1, 4),
        depth=st.integers(0, 4),
    )
    def test_evaluate_agrees_with_truth_table(self, seed, count, depth):
        f = random_formula(IssueSet.default(count), random.Random(seed), depth)
        table = truth_table(f)
        for code in range(2**count):
            assert f.evaluate(Ballot.from_code(code, count)) == int(table[code])

    def test_extensions(self, implication):
        first = PartialAssignment(bindings={0: 1})
        assert extensions(implication, first) == [
            Ballot.of(1, 0, 0),
            Ballot.of(1, 0, 1),
            Ballot.of(1, 1, 1),
        ]
        assert extensions(implication, PartialAssignment(bindings={0: 1, 1: 1, 2: 0})) == []
        assert extensions(implication, PartialAssignment()) == models(implication)

    def test_truth_table_is_read_only(self, implication):
        table = truth_table(implication)
        assert table.shape == (8,)
        with pytest.raises(ValueError):
            table[0] = False

    def test_entailment_and_equivalence(self, issues3):
        assert equivalent(parse("p1 -> p2", issues3), parse("~p1 | p2", issues3))
        assert entails(parse("p1 & p2", issues3), parse("p1 | p3", issues3))
        assert not entails(parse("p1 | p2", issues3), parse("p1", issues3))

    def test_prime_implicates_of_implication(self, implication):
        clauses = prime_implicates(implication)
        assert clauses == [Clause(literals=[(0, False), (1, False), (2, True)])]
        assert clauses[0].render(implication.issues) == "~p1 | ~p2 | p3"
        assert max_prime_implicate_size(implication) == 3

    def test_prime_implicates_include_resolvents(self, two_cnf):
        rendered = [c.render(two_cnf.issues) for c in prime_implicates(two_cnf)]
        assert rendered == ["p1 | p2", "p1 | p3", "~p2 | p3"]
        assert max_prime_implicate_size(two_cnf) == 2

    def test_tautology_and_contradiction(self, issues3):
        assert prime_implicates(parse("p1 | ~p1", issues3)) == []
        assert prime_implicates(parse("p1 & ~p1", issues3)) == [Clause()]
        assert mifap_assignments(parse("FALSE", issues3)) == [PartialAssignment()]
        assert max_prime_implicate_size(parse("TRUE", issues3)) == 0

    def test_mifap_assignments(self, implication):
        rho = PartialAssignment(bindings={0: 1, 1: 1, 2: 0})
        assert mifap_assignments(implication) == [rho]
        assert is_mifap(implication, rho)
        assert not is_extendable(implication, rho)
        assert not is_mifap(implication, rho.without(2))

    def test_first_violated_clause(self, two_cnf):
        assert first_violated_clause(two_cnf, Ballot.of(0, 0, 1)).render(two_cnf.issues) == "p1 | p2"
        assert first_violated_clause(two_cnf, Ballot.of(1, 1, 1)) is None

    def test_enumeration_bound(self):
        with pytest.raises(IssueCountTooLargeError):
            check_enumerable(25)
        with pytest.raises(IssueCountTooLargeError):
            truth_table(Formula(Top(), IssueSet.default(17)))

    def test_prime_implicates_exhaustive_three_issues(self, issues3):
        """All 256 Boolean functions: conjunction equivalence, minimality, mifap duality"""
        for code in range(256):
            f = boolean_function(issues3, code)
            clauses = prime_implicates(f)
            rebuilt = Formula(conjoin(clause_formula(c, f).root for c in clauses), issues3)
            assert equivalent(rebuilt, f), code
            for clause in clauses:
                assert entails(f, clause_formula(clause, f))
                for dropped in clause.literals:
                    smaller = Clause(literals=[lit for lit in clause.literals if lit != dropped])
                    assert not entails(f, clause_formula(smaller, f)), code
            assert sorted(c.negation().sort_key for c in clauses) == [
                rho.sort_key for rho in mifap_assignments(f)
            ]
            assert all(is_mifap(f, rho) for rho in mifap_assignments(f))

    def test_mifap_assignments_match_naive_search(self, issues3):
        candidates = [
            PartialAssignment(bindings={i: v for i, v in enumerate(values) if v is not None})
            for values in product((None, 0, 1), repeat=3)
        ]
        for code in range(256):
            f = boolean_function(issues3, code)
            naive = sorted((rho for rho in candidates if is_mifap(f, rho)), key=lambda r: r.sort_key)
            assert mifap_assignments(f) == naive, code
