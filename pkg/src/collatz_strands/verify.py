"""Named invariant sweeps run by ``collatz-strands verify``.

Each suite takes an upper bound for its sweep and yields CheckResult rows.
A check records the first counterexample instead of stopping the suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cadogan, core, criteria, search, trajectory
from .errors import NotDivisible


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None


def _run(suite, name, cases, pred):
    n = 0
    for case in cases:
        n += 1
        if not pred(case):
            return CheckResult(suite, name, False, n, repr(case))
    return CheckResult(suite, name, True, n)


def valuation(bound):
    def ok(n):
        v, k = core.collatz_step(n)
        return v % 2 == 1 and v << k == 3 * n + 1
    yield _run("valuation", "odd result and exact power-of-two factor", range(bound + 1), ok)


def mod3_exclusion(bound):
    yield _run("mod3-exclusion", "gamma(n) is never a multiple of 3", range(bound + 1),
               lambda n: core.collatz_step(n).value % 3 != 0)


def inverse_roundtrip(bound):
    def ok(n):
        v, k = core.collatz_step(n)
        return core.collatz_inverse(k, v) == n
    yield _run("inverse-roundtrip", "two-operand inverse undoes gamma", range(bound + 1), ok)


def row_inverse(bound):
    def ok(n):
        r = core.collatz_inverse_row(n)
        i, j = cadogan.c(n)
        return core.collatz_step(r) == (n, 1) and cadogan.c(r) == (i + 1, (j - 1) // 3) and (j - 1) % 3 == 0
    cases = (n for n in range(3, bound + 1, 2) if n % 3 == 2)
    yield _run("row-inverse", "one-operand inverse steps one row up with k = 1", cases, ok)


def bijection(bound):
    yield _run("bijection", "c_inv(c(n)) = n for odd n", range(1, bound + 1, 2),
               lambda n: cadogan.c_inv(cadogan.c(n)) == n)
    cases = ((i, j) for i in range(1, 21) for j in range(bound + 1))
    yield _run("bijection", "c(c_inv(i, j)) = (i, j), i <= 20", cases,
               lambda ij: cadogan.c(cadogan.c_inv(ij)) == ij)


def strand_valuation(bound):
    cases = ((i, j) for i in range(2, 21) for j in range(bound + 1))
    yield _run("strand-valuation", "k = 1 for every row above 1, i <= 20", cases,
               lambda ij: core.collatz_step(cadogan.c_inv(ij)).k == 1)


def transport(bound):
    cases = ((i, j) for i in range(2, 13) for j in range(bound + 1))
    yield _run("transport", "gamma moves (i, j) to (i-1, 3j+1), i <= 12", cases,
               lambda ij: cadogan.c(core.collatz_step(cadogan.c_inv(ij)).value) == trajectory.coord_step(ij))


def closed_forms(bound):
    cases = [(j, m) for j in range(bound + 1) for m in range(21)]

    def iterated(j, m):
        for _ in range(m):
            j = trajectory.g(j)
        return j
    yield _run("closed-forms", "closed form equals iterated g, m <= 20", cases,
               lambda jm: trajectory.g_pow(*jm) == iterated(*jm))
    yield _run("closed-forms", "inverse closed form undoes g_pow exactly", cases,
               lambda jm: trajectory.g_inv_pow(trajectory.g_pow(*jm), jm[1]) == jm[0])


def row_one(bound):
    yield _run("row-one", "gamma(4j + 1) = gamma(j)", range(1, bound + 1),
               lambda j: core.collatz_step(4 * j + 1).value == core.collatz_step(j).value)


def domination(bound):
    yield _run("domination", "g(j) >= gamma(j)", range(bound + 1),
               lambda j: trajectory.g(j) >= core.collatz_step(j).value)
    cases = ((i, j) for i in range(2, 13) for j in range(bound + 1))
    yield _run("domination", "3n + 1 = 2 gamma(n) above row 1", cases,
               lambda ij: 3 * cadogan.c_inv(ij) + 1 == 2 * core.collatz_step(cadogan.c_inv(ij)).value)


def parallel_boundaries(bound):
    cases = ((J, i) for J in range(1, bound) for i in range(1, 31))
    yield _run("parallel-boundaries", "boundary columns keep the order of J", cases,
               lambda Ji: trajectory.boundary_column(Ji[0], Ji[1]) < trajectory.boundary_column(Ji[0] + 1, Ji[1]))


def determinant(bound):
    cases = ((J, i) for J in range(1, bound + 1) for i in range(1, 31))
    yield _run("determinant", "determinant equals boundary column", cases,
               lambda Ji: criteria.determinant(Ji[1], Ji[0]) == trajectory.boundary_column(Ji[0], Ji[1]))


def parametrization(bound):
    yield _run("parametrization", "every J inverts to parameters that rebuild it", range(1, bound + 1),
               lambda J: criteria.synthesize_J(criteria.case_params(J)) == J)


def consistency(bound):
    side = max(1, min(bound, criteria.DEFAULT_SWEEP_BOUND))
    pts = list(criteria.iter_params(side, positive_only=False))
    yield _run("consistency", f"parameters reproduce themselves, t,u,v <= {side}", pts,
               criteria.check_consistency)
    yield _run("consistency", "cleared integer form orders like j vs D", pts,
               lambda p: criteria.synthesize_J(p) == 0 or criteria.classify_cleared(p) is criteria.classify_params(p))

    def no_spurious(p):
        j, i, k = criteria.expand_params(p)
        try:
            core.collatz_inverse(k, cadogan.c_inv((i, j)))
        except NotDivisible:
            return False
        return True
    yield _run("consistency", "assembled gamma(J) has a natural inverse", pts, no_spurious)


def boundary_cycles(bound):
    yield _run("boundary-cycles", "no restart lands on its boundary", range(1, bound + 1),
               lambda J: trajectory.classify_restart(J) is not trajectory.Classification.ON)
    xv = search.cross_validate(bound)
    yield CheckResult("boundary-cycles", "boundary oracle agrees with unified equation",
                      bool(xv), xv.checked,
                      None if xv else f"J={xv.first_disagreement}")


SUITES = {
    "valuation": valuation,
    "mod3-exclusion": mod3_exclusion,
    "inverse-roundtrip": inverse_roundtrip,
    "row-inverse": row_inverse,
    "bijection": bijection,
    "strand-valuation": strand_valuation,
    "transport": transport,
    "closed-forms": closed_forms,
    "row-one": row_one,
    "domination": domination,
    "parallel-boundaries": parallel_boundaries,
    "determinant": determinant,
    "parametrization": parametrization,
    "consistency": consistency,
    "boundary-cycles": boundary_cycles,
}

# numbered aliases accepted on the command line
ALIASES = {
    "lemma-1.1": "inverse-roundtrip",
    "lemma-1.2": "mod3-exclusion",
    "lemma-3.4": "bijection",
    "lemma-3.7": "strand-valuation",
    "lemma-3.7.3": "row-inverse",
    "lemma-4.3": "transport",
    "lemma-4.5": "domination",
    "lemma-4.9": "closed-forms",
    "lemma-4.14": "row-one",
    "lemma-5.4": "parallel-boundaries",
    "lemma-5.7": "boundary-cycles",
    "lemma-6.6": "determinant",
    "lemma-7.5": "parametrization",
    "lemma-7.6": "consistency",
}


def resolve(name: str) -> list[str]:
    if name == "all":
        return list(SUITES)
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(name)
    return [name]


def run_suites(name: str, bound: int) -> list[CheckResult]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = []
    for s in resolve(name):
        out.extend(SUITES[s](bound))
    return out

