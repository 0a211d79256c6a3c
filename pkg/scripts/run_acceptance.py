#!/usr/bin/env python3
"""
Acceptance sweep for the majority-safety classifier.
Reproduces the classical tables, then compares classify() with the
brute-force oracle on every 3-issue function and on seeded 4-issue formulas.
"""

import random
import sys
import time
from pathlib import Path

# Add parent directory to path for imports
sys.path.append(str(Path(__file__).parent.parent))

from aggparadox.aggregation.paradox import brute_force_cr, check_paradox
from aggparadox.aggregation.rules import MAJORITY
from aggparadox.encoders.scenarios import SCENARIOS
from aggparadox.logic.sampling import (
    boolean_function,
    random_boolean_function,
    random_formula,
    random_rational_profile,
    random_two_cnf,
)
from aggparadox.models.domain import CertifiedSafe
from aggparadox.models.schemas import IssueSet
from aggparadox.safety.classifier import classify, construct_paradox

SEED = 20240601

EXPECTED_MAJORITY = {
    "condorcet": (1, 1, 0),
    "discursive": (1, 1, 0),
    "ostrogorski": (1, 0, 1, 0),
    "ostrogorski-strict": (1, 1, 1, 0),
    "divided-government": (1, 0, 0),
    "mep": (1, 1, 1),
}


def oracle_safe(ic, voters, any_witness=False):
    return isinstance(brute_force_cr(MAJORITY, ic, voters, any_witness=any_witness), CertifiedSafe)


def check_tables():
    """Majority rows of the classical scenarios"""
    print("📋 Classical tables")
    print("=" * 40)
    failures = 0
    for name, build in SCENARIOS.items():
        scenario = build()
        witness = check_paradox(MAJORITY, scenario.profile, scenario.constraint)
        positions = [scenario.issues.index(c) for c in scenario.columns]
        row = tuple(witness.outcome.bits[p] for p in positions) if witness else None
        ok = witness is not None and row == EXPECTED_MAJORITY[name]
        failures += not ok
        print(f"  {'✓' if ok else '✗'} {name}: majority {row}")
    return failures


def check_classifier():
    """classify() against the oracle, plus witnesses for every unsafe constraint"""
    print("\n⚖️  Classifier versus brute force")
    print("=" * 40)
    rng = random.Random(SEED)
    three = [boolean_function(IssueSet.default(3), code) for code in range(256)]
    four = [random_formula(IssueSet.default(4), rng) for _ in range(250)]
    four += [random_boolean_function(IssueSet.default(4), rng) for _ in range(250)]

    disagreements = 0
    invalid = 0
    for k, ic in enumerate(three + four):
        verdict = classify(ic)
        if verdict.safe != oracle_safe(ic, 3):
            disagreements += 1
            print(f"  ✗ n=3 disagreement on {ic}")
        if k >= len(three) and (k - len(three)) % 10 == 0:
            if verdict.safe != oracle_safe(ic, 5, any_witness=True):
                disagreements += 1
                print(f"  ✗ n=5 disagreement on {ic}")
        if not verdict.safe:
            for voters in (3, 5, 7):
                witness = construct_paradox(ic, voters)
                if not verdict.critical_assignment.agrees_with(witness.outcome):
                    invalid += 1
    print(f"  formulas checked: {len(three) + len(four)}")
    print(f"  {'✓' if disagreements == 0 else '✗'} disagreements: {disagreements}")
    print(f"  {'✓' if invalid == 0 else '✗'} witnesses off rho*: {invalid}")
    return disagreements + invalid


def check_two_cnf():
    """Random 2-CNF constraints never produce a paradox"""
    print("\n🛡️  2-CNF property sweep")
    print("=" * 40)
    rng = random.Random(SEED)
    witnesses = 0
    for _ in range(100):
        ic = random_two_cnf(IssueSet.default(rng.randint(1, 6)), rng)
        for _ in range(100):
            profile = random_rational_profile(ic, rng.choice((3, 5, 7, 9)), rng)
            if profile is not None and check_paradox(MAJORITY, profile, ic) is not None:
                witnesses += 1
    print(f"  {'✓' if witnesses == 0 else '✗'} witnesses found: {witnesses}")
    return witnesses


def main():
    """Run every sweep and exit non-zero on any failure"""
    print("🔬 Majority paradox acceptance sweep")
    print("=" * 60)
    started = time.perf_counter()

    try:
        failures = check_tables() + check_classifier() + check_two_cnf()
    except Exception as e:
        print(f"\n❌ Error during sweep: {e}")
        import traceback
        traceback.print_exc()
        return 1

    print("\n" + "=" * 60)
    elapsed = time.perf_counter() - started
    if failures:
        print(f"❌ {failures} failure(s) in {elapsed:.1f}s")
        return 1
    print(f"🎉 All sweeps passed in {elapsed:.1f}s")
    print("=" * 60)
    return 0


if __name__ == "__main__":
    sys.exit(main())
