"""
Verification Harness
Runs every property over seeded random inputs and prints a pass/fail summary
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from config.config import Config
from ..profile.llull_matrix import aggregate
from ..utils.logger import logger, tally_logger
from .generators import (
    planted_clones,
    planted_dominance,
    planted_majority,
    random_fixed_point,
    random_gamma_matrix,
    random_lift,
    random_profile,
    random_total_order_profile,
)
from .properties import (
    SearchResult,
    check_clones,
    check_closure_laws,
    check_condorcet_smith,
    check_decomposition,
    check_fixed_point,
    check_idempotence,
    check_image,
    check_mean_rank_agreement,
    check_monotonicity,
    check_oracles,
    check_projected_structure,
    check_rates_bridge,
    check_xi_independence,
    continuity_sweep,
    maximin_condorcet_smith_search,
    strict_monotonicity_search,
)

Trial = Callable[[np.random.Generator], Tuple[Optional[bool], str]]

CONTINUITY_EXPONENTS = tuple(range(3, 13))
CONTINUITY_LIMIT = Fraction(1, 1000)


@dataclass
class PropertyResult:
    """Tally of one property over its trials"""
    name: str
    trials: int = 0
    failures: int = 0
    skipped: int = 0
    first_failure: str = ''

    @property
    def passed(self) -> bool:
        return self.failures == 0


class VerificationHarness:
    """Executes the guaranteed properties and the expected-failure searches"""

    def __init__(self, seed: Optional[int] = None, trials: Optional[int] = None,
                 search_budget: Optional[int] = None, verbose: bool = True):
        """
        Initialize harness

        Args:
            seed: Base seed; trial k of every property uses seed + k
            trials: Base trial count (heavier properties run 2.5x, continuity 1/10)
            search_budget: Seeds tried by each expected-failure search
            verbose: Print progress and summary to stdout
        """
        self.seed = Config.DEFAULT_SEED if seed is None else seed
        self.trials = Config.PROPERTY_TRIALS if trials is None else trials
        self.search_budget = Config.SEARCH_BUDGET if search_budget is None else search_budget
        self.verbose = verbose
        self.results: List[PropertyResult] = []
        self.searches: List[SearchResult] = []

    def _say(self, text: str = '') -> None:
        if self.verbose:
            print(text)

    def _count(self, factor: float) -> int:
        return max(1, int(round(self.trials * factor)))

    def run_property(self, name: str, count: int, trial: Trial) -> PropertyResult:
        """Run one property; each trial gets its own generator seeded with seed + k"""
        result = PropertyResult(name)
        for k in range(count):
            seed = self.seed + k
            try:
                passed, detail = trial(np.random.default_rng(seed))
            except Exception as e:
                passed, detail = False, f"{type(e).__name__}: {e}"
            result.trials += 1
            if passed is None:
                result.skipped += 1
            elif not passed:
                result.failures += 1
                if not result.first_failure:
                    result.first_failure = f"seed {seed}: {detail}"
                    logger.error(f"{name} failed at seed {seed}: {detail}")
        self.results.append(result)
        mark = "✅ PASSED" if result.passed else "❌ FAILED"
        self._say(f"{mark}  {name}  ({result.trials} trials, {result.failures} failures, "
                  f"{result.skipped} skipped)")
        if result.first_failure:
            self._say(f"         first failure: {result.first_failure}")
        return result

    # -- properties -------------------------------------------------------

    def oracle_equivalence(self) -> None:
        for n in (3, 4, 5, 6):
            self.run_property(f"closure = path enumeration = max-min power (N={n})",
                              self._count(2.5), lambda rng, n=n: check_oracles(random_gamma_matrix(rng, n)))

    def closure_laws(self) -> None:
        self.run_property("closure dominates, is idempotent, yields a partial order", self._count(1),
                          lambda rng: check_closure_laws(random_gamma_matrix(rng, int(rng.integers(2, 8)))))

    def xi_independence(self) -> None:
        def trial(rng):
            return check_xi_independence(aggregate(random_profile(rng, int(rng.integers(2, 6)),
                                                                  tie_probability=0.4)))
        self.run_property("projection does not depend on the admissible order", self._count(1), trial)

    def idempotence(self) -> None:
        self.run_property("projection is idempotent", self._count(2.5),
                          lambda rng: check_idempotence(random_gamma_matrix(rng, int(rng.integers(1, 9)))))

    def image(self) -> None:
        self.run_property("projected scores satisfy the fixed-point conditions", self._count(1),
                          lambda rng: check_image(random_gamma_matrix(rng, int(rng.integers(2, 8)))))
        self.run_property("matrices meeting the fixed-point conditions are fixed", self._count(1),
                          lambda rng: check_fixed_point(random_fixed_point(rng, int(rng.integers(2, 8)))))
        self.run_property("projected scores are monotone along the order", self._count(1),
                          lambda rng: check_projected_structure(random_gamma_matrix(rng, int(rng.integers(2, 8)))))

    def rate_conditions(self) -> None:
        self.run_property("rates match scores, comparison relation and extremes", self._count(1),
                          lambda rng: check_rates_bridge(aggregate(random_profile(rng, int(rng.integers(1, 7))))))

        def mean_ranks(rng):
            n = int(rng.integers(2, 6))
            profile = random_total_order_profile(rng, n, voters=(1, 3))
            return check_mean_rank_agreement(profile)
        self.run_property("rates equal mean ranks on fixed-point profiles", self._count(1), mean_ranks)

    def decomposition(self) -> None:
        def planted(rng):
            p = planted_dominance(rng, int(rng.integers(2, 7)))
            report = check_decomposition(p.profile, p.X, p.Y)
            return all(report.conditions), f"conditions {report.conditions}"

        def unstructured(rng):
            profile = random_profile(rng, int(rng.integers(2, 7)), voters=(3, 12))
            names = profile.candidates.names
            size = int(rng.integers(1, len(names)))
            X = set(names[i] for i in rng.choice(len(names), size=size, replace=False))
            report = check_decomposition(profile, X, set(names) - X)
            return report.consistent, f"conditions {report.conditions}"

        self.run_property("decomposition holds under planted unanimity", self._count(1), planted)
        self.run_property("decomposition conditions agree on unstructured profiles", self._count(1), unstructured)

    def condorcet_smith(self) -> None:
        self.run_property("majority of X over Y puts X above Y", self._count(1),
                          lambda rng: check_condorcet_smith(planted_majority(rng, int(rng.integers(4, 8)))))

    def clones(self) -> None:
        def trial(rng):
            n = int(rng.integers(3, 7))
            return check_clones(planted_clones(rng, n, size=int(rng.integers(2, n))))
        self.run_property("clone sets stay autonomous and contraction commutes", self._count(1), trial)

    def monotonicity(self) -> None:
        def trial(rng):
            v = aggregate(random_profile(rng, 5))
            lift = random_lift(rng, v)
            return check_monotonicity(v, lift.a, lift)
        self.run_property("raising a candidate never hurts it", self._count(2.5), trial)

    def continuity(self) -> None:
        def trial(rng):
            v = random_gamma_matrix(rng, 6)
            observed = continuity_sweep(v, CONTINUITY_EXPONENTS, trials=5,
                                        seed=int(rng.integers(0, 2 ** 31)))
            if any(later > earlier for earlier, later in zip(observed, observed[1:])):
                return False, "observed change grows as eps shrinks"
            if observed[-1] >= CONTINUITY_LIMIT:
                return False, f"change {float(observed[-1]):.2e} at eps=2^-{CONTINUITY_EXPONENTS[-1]}"
            return True, ''
        self.run_property("rates depend continuously on the scores", self._count(0.1), trial)

    def expected_failure_searches(self) -> None:
        for search in (maximin_condorcet_smith_search, strict_monotonicity_search):
            result = search(self.seed, self.search_budget)
            self.searches.append(result)
            self._say(f"🔎 {result}")

    # -- runner -----------------------------------------------------------

    def run_all(self) -> Dict:
        """
        Run every property and both searches

        Returns:
            Summary dictionary with counts and per-property results
        """
        self._say("\n" + "=" * 70)
        self._say(f"  VERIFICATION HARNESS (seed {self.seed}, base trials {self.trials})")
        self._say("=" * 70)

        self.oracle_equivalence()
        self.closure_laws()
        self.xi_independence()
        self.idempotence()
        self.image()
        self.rate_conditions()
        self.decomposition()
        self.condorcet_smith()
        self.clones()
        self.monotonicity()
        self.continuity()
        self.expected_failure_searches()

        passed = sum(1 for r in self.results if r.passed)
        failed = len(self.results) - passed
        total = len(self.results)
        pass_rate = (passed / total * 100) if total > 0 else 0

        self._say("\n" + "=" * 70)
        self._say("  📊 VERIFICATION SUMMARY")
        self._say("=" * 70)
        self._say(f"\nTotal Properties: {total}")
        self._say(f"✅ Passed: {passed}")
        self._say(f"❌ Failed: {failed}")
        self._say(f"Pass Rate: {pass_rate:.1f}%")
        for result in self.searches:
            self._say(f"Expected-failure search, {result}")
        if failed == 0:
            self._say("\n🎉 ALL PROPERTIES HOLD")
        else:
            self._say("\n⚠️  SOME PROPERTIES FAILED")
        self._say("=" * 70 + "\n")

        summary = {
            'Properties': total,
            'Passed': passed,
            'Failed': failed,
            'Searches': '; '.join(str(s) for s in self.searches),
        }
        tally_logger.log_summary('verification', summary)
        return {'total': total, 'passed': passed, 'failed': failed,
                'results': self.results, 'searches': self.searches}

