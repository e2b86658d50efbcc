"""Registry of partition-sum identities and an exact evaluator for them.

Each registered identity sums a term over the partitions of n (written as
``l1 >= l2 >= ... >= ln >= 0``), optionally restricted by the parity of the
largest part, and compares the total with a closed form in n. Two further
checks are not partition sums over all of n: ``FINE`` (multinomial sum over
partitions with exactly k parts) and ``DELTA`` (the central-binomial
convolution that vanishes for n > 0).
"""
from __future__ import annotations

import enum
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .exact import binomial, double_factorial, factorial, multinomial, pow2
from .partitions import enumerate_compositions, enumerate_partitions, multiplicities, partitions_with_parts
from .weights import WeightKind, chain_weight, weight_parts


class RangeError(ValueError):
    """An identity was asked for an n (or k) outside its stated range."""


class Verdict(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    EQUALITY_AT_BOUNDARY = "EQUALITY_AT_BOUNDARY"


class Filter(str, enum.Enum):
    ALL = "all"
    ODD = "odd"
    EVEN = "even"

    def accepts(self, largest: int) -> bool:
        if self is Filter.ALL:
            return True
        return (largest % 2 == 1) == (self is Filter.ODD)


class Scalar(str, enum.Enum):
    NONE = "1"
    N_OVER_L1 = "n/l1"
    L1_OVER_N1 = "l1/(n+1)"
    ONE_PLUS_L1 = "1+l1"

    def factor(self, n: int, l1: int) -> Fraction:
        if self is Scalar.NONE:
            return Fraction(1)
        if self is Scalar.N_OVER_L1:
            return Fraction(n, l1)
        if self is Scalar.L1_OVER_N1:
            return Fraction(l1, n + 1)
        return Fraction(1 + l1)


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    filter: Filter
    scalar: Scalar
    rhs: Callable[[int], Fraction]
    relation: str = "="
    signed: bool = False
    weight: Optional[WeightKind] = None
    valid_from: int = 1
    rhs_text: str = ""

    def describe_term(self) -> str:
        bits = []
        if self.signed:
            bits.append("(-1)^(1+l1)")
        if self.scalar is not Scalar.NONE:
            bits.append(self.scalar.value)
        bits.append("B")
        if self.weight is not None:
            bits.append(self.weight.value)
        return "*".join(bits)


_W1, _W2 = WeightKind.W1, WeightKind.W2
_A, _O, _E = Filter.ALL, Filter.ODD, Filter.EVEN
_ONE, _NL, _LN, _PL = Scalar.NONE, Scalar.N_OVER_L1, Scalar.L1_OVER_N1, Scalar.ONE_PLUS_L1

_SPECS = [
    IdentitySpec("T1.1", _A, _ONE, lambda n: pow2(n - 1), rhs_text="2^(n-1)"),
    IdentitySpec("T1.2", _A, _NL, lambda n: pow2(n) - 1, rhs_text="2^n-1"),
    IdentitySpec("T1.3", _A, _LN, lambda n: pow2(n - 2), rhs_text="2^(n-2)"),
    IdentitySpec("T1A.1", _O, _ONE, lambda n: pow2(n - 2), valid_from=2, rhs_text="2^(n-2)"),
    IdentitySpec("T1A.2", _E, _ONE, lambda n: pow2(n - 2), valid_from=2, rhs_text="2^(n-2)"),
    IdentitySpec("T1A.3", _O, _NL, lambda n: pow2(n - 1), valid_from=2, rhs_text="2^(n-1)"),
    IdentitySpec("T1A.4", _E, _NL, lambda n: pow2(n - 1) - 1, valid_from=2, rhs_text="2^(n-1)-1"),
    IdentitySpec("T1A.5", _O, _LN, lambda n: pow2(n - 3), valid_from=2, rhs_text="2^(n-3)"),
    IdentitySpec("T1A.6", _E, _LN, lambda n: pow2(n - 3), valid_from=2, rhs_text="2^(n-3)"),
    IdentitySpec("T2.1", _A, _NL, lambda n: pow2(n - 1), weight=_W1, rhs_text="2^(n-1)"),
    IdentitySpec("T2.2", _A, _NL, lambda n: pow2(n - 1), signed=True, weight=_W2, rhs_text="2^(n-1)"),
    IdentitySpec(
        "T4.1", _A, _ONE, lambda n: Fraction(double_factorial(2 * n - 1), factorial(n)),
        weight=_W1, rhs_text="(2n-1)!!/n!",
    ),
    IdentitySpec(
        "T4.2", _A, _ONE, lambda n: Fraction(double_factorial(abs(2 * n - 3)), factorial(n)),
        signed=True, weight=_W2, rhs_text="|2n-3|!!/n!",
    ),
    IdentitySpec(
        "C.1", _A, _LN,
        lambda n: Fraction(double_factorial(2 * n) - double_factorial(2 * n - 1), factorial(n + 1)),
        weight=_W1, rhs_text="((2n)!!-(2n-1)!!)/(n+1)!",
    ),
    IdentitySpec(
        "C.2", _A, _LN, lambda n: Fraction(-double_factorial(2 * n - 3), factorial(n + 1)),
        signed=True, weight=_W2, rhs_text="-(2n-3)!!/(n+1)!",
    ),
    IdentitySpec("C1.1", _O, _NL, lambda n: pow2(n - 2), ">", weight=_W1, valid_from=2, rhs_text="2^(n-2)"),
    IdentitySpec("C1.2", _E, _NL, lambda n: pow2(n - 2), "<", weight=_W1, valid_from=2, rhs_text="2^(n-2)"),
    IdentitySpec("C1.3", _O, _NL, lambda n: pow2(n), ">", weight=_W2, valid_from=2, rhs_text="2^n"),
    IdentitySpec("C1.4", _E, _NL, lambda n: pow2(n - 1), ">", weight=_W2, valid_from=2, rhs_text="2^(n-1)"),
    IdentitySpec("C2.1", _A, _PL, lambda n: pow2(n), weight=_W1, valid_from=2, rhs_text="2^n"),
    IdentitySpec("C2.2", _A, _PL, lambda n: Fraction(0), signed=True, weight=_W2, valid_from=2, rhs_text="0"),
]

REGISTRY: dict[str, IdentitySpec] = {s.id: s for s in _SPECS}

FINE = "FINE"
DELTA = "DELTA"
SPECIAL_VALID_FROM = {FINE: 1, DELTA: 0}

ALL_IDS: tuple[str, ...] = (*REGISTRY, FINE, DELTA)
CONJECTURE_IDS: tuple[str, ...] = ("C.1", "C.2", "C1.1", "C1.2", "C1.3", "C1.4", "C2.1", "C2.2")
_ORDER = {name: i for i, name in enumerate(ALL_IDS)}


def valid_from(identity: str) -> int:
    if identity in REGISTRY:
        return REGISTRY[identity].valid_from
    if identity in SPECIAL_VALID_FROM:
        return SPECIAL_VALID_FROM[identity]
    raise KeyError(f"unknown identity {identity!r}; valid ids: {', '.join(ALL_IDS)}")


def _spec(identity: str, n: int) -> IdentitySpec:
    if identity not in REGISTRY:
        raise KeyError(f"{identity!r} is not a partition-sum identity; valid ids: {', '.join(REGISTRY)}")
    spec = REGISTRY[identity]
    if n < spec.valid_from:
        raise RangeError(f"{identity} is stated for n >= {spec.valid_from}, got n={n}")
    return spec


def _sum_terms(spec: IdentitySpec, n: int) -> tuple[Fraction, int]:
    # sign and scalar depend only on the largest part: bucket by it, apply once per bucket
    by_largest: dict[int, Fraction | int] = {}
    count = 0
    for p in enumerate_partitions(n):
        l1 = p[0]
        if not spec.filter.accepts(l1):
            continue
        count += 1
        b = chain_weight(p)
        if spec.weight is None:
            term = b
        else:
            num, den = weight_parts(p, spec.weight)
            term = Fraction(b * num, den)
        by_largest[l1] = by_largest.get(l1, 0) + term
    total = Fraction(0)
    for l1, s in by_largest.items():
        sign = -1 if spec.signed and l1 % 2 == 0 else 1
        total += sign * spec.scalar.factor(n, l1) * s
    return total, count


def term(identity: str, lam: Sequence[int], n: int) -> Fraction:
    """The summand of ``identity`` for one (padded or unpadded) partition of n, ignoring the filter."""
    spec = _spec(identity, n)
    l1 = lam[0]
    value = Fraction(chain_weight(lam)) * spec.scalar.factor(n, l1)
    if spec.weight is not None:
        num, den = weight_parts(lam, spec.weight)
        value *= Fraction(num, den)
    if spec.signed and l1 % 2 == 0:
        value = -value
    return value


def evaluate_lhs(identity: str, n: int) -> Fraction:
    """Exact left-hand side: the filtered, weighted sum over all partitions of n."""
    return _sum_terms(_spec(identity, n), n)[0]


def expected_rhs(identity: str, n: int) -> Fraction:
    return _spec(identity, n).rhs(n)


@dataclass(frozen=True)
class VerificationResult:
    id: str
    n: int
    lhs: Fraction
    rhs: Fraction
    relation: str
    verdict: Verdict
    term_count: int
    k: Optional[int] = None

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_ORDER.get(self.id, len(_ORDER)), self.n, self.k or 0)


def judge(lhs: Fraction, rhs: Fraction, relation: str) -> Verdict:
    if relation == "=":
        return Verdict.PASS if lhs == rhs else Verdict.FAIL
    if lhs == rhs:
        return Verdict.EQUALITY_AT_BOUNDARY
    holds = lhs > rhs if relation == ">" else lhs < rhs
    return Verdict.PASS if holds else Verdict.FAIL


def verify(identity: str, n: int) -> VerificationResult:
    spec = _spec(identity, n)
    lhs, count = _sum_terms(spec, n)
    rhs = spec.rhs(n)
    return VerificationResult(spec.id, n, lhs, rhs, spec.relation, judge(lhs, rhs, spec.relation), count)


def fine_lhs(n: int, k: int) -> tuple[int, int]:
    """Sum of multinomials over partitions of n with k parts, and how many there were."""
    total = 0
    count = 0
    for p in partitions_with_parts(n, k):
        total += multinomial(multiplicities(p, n))
        count += 1
    return total, count


def verify_fine(n: int, k: int) -> VerificationResult:
    """Multinomials over k-part partitions of n sum to C(n-1, k-1).

    The sum is additionally checked against a direct count of the k-part
    compositions of n; any disagreement is reported as FAIL.
    """
    if n < 1 or k < 1 or k > n:
        raise RangeError(f"FINE needs 1 <= k <= n, got n={n}, k={k}")
    lhs, count = fine_lhs(n, k)
    rhs = binomial(n - 1, k - 1)
    compositions = sum(1 for _ in enumerate_compositions(n, k))
    verdict = Verdict.PASS if lhs == rhs == compositions else Verdict.FAIL
    return VerificationResult(FINE, n, Fraction(lhs), Fraction(rhs), "=", verdict, count, k=k)


def delta_lhs(n: int) -> Fraction:
    return sum(
        (Fraction(-binomial(2 * k, k), 2 * k - 1) * binomial(2 * n - 2 * k, n - k) for k in range(n + 1)),
        Fraction(0),
    )


def verify_delta(n: int) -> VerificationResult:
    if n < 0:
        raise RangeError(f"DELTA needs n >= 0, got n={n}")
    lhs = delta_lhs(n)
    rhs = Fraction(1 if n == 0 else 0)
    return VerificationResult(DELTA, n, lhs, rhs, "=", judge(lhs, rhs, "="), n + 1)


def tasks_for(identity: str, n_min: int, n_max: int) -> list[tuple]:
    if identity == FINE:
        return [(FINE, n, k) for n in range(n_min, n_max + 1) for k in range(1, n + 1)]
    return [(identity, n) for n in range(n_min, n_max + 1)]


def run_task(task: tuple) -> VerificationResult:
    if task[0] == FINE:
        return verify_fine(task[1], task[2])
    if task[0] == DELTA:
        return verify_delta(task[1])
    return verify(task[0], task[1])


@dataclass
class ScanReport:
    ids: list[str]
    n_min: int
    n_max: int
    results: list[VerificationResult]
    notices: list[str] = field(default_factory=list)

    def counts(self, identity: Optional[str] = None) -> Counter:
        return Counter(r.verdict for r in self.results if identity is None or r.id == identity)

    @property
    def summary(self) -> dict[str, int]:
        c = self.counts()
        return {
            "pass": c[Verdict.PASS],
            "fail": c[Verdict.FAIL],
            "boundary": c[Verdict.EQUALITY_AT_BOUNDARY],
        }

    def per_id_summary(self) -> dict[str, dict[str, int]]:
        out = {}
        for identity in self.ids:
            c = self.counts(identity)
            out[identity] = {
                "pass": c[Verdict.PASS],
                "fail": c[Verdict.FAIL],
                "boundary": c[Verdict.EQUALITY_AT_BOUNDARY],
            }
        return out

    @property
    def all_pass(self) -> bool:
        return all(r.verdict is Verdict.PASS for r in self.results)


def default_workers() -> int:
    return os.cpu_count() or 1


def run_tasks(tasks: Iterable[tuple], workers: int = 1) -> list[VerificationResult]:
    """Evaluate tasks, serially or on a process pool, and return them sorted by (id, n, k)."""
    tasks = list(tasks)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if workers == 1 or len(tasks) <= 1:
        results = [run_task(t) for t in tasks]
    else:
        # Largest n first so the long tail does not land on one worker at the end.
        ordered = sorted(tasks, key=lambda t: -t[1])
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_task, ordered, chunksize=1))
    return sorted(results, key=lambda r: r.sort_key)


def scan(
    ids: Iterable[str],
    n_min: Optional[int],
    n_max: int,
    workers: int = 1,
    clip: bool = False,
) -> ScanReport:
    """Verify every id for every n in ``[n_min, n_max]``.

    With ``clip`` an id whose stated range starts above ``n_min`` is run from
    its own starting point and a notice is recorded; otherwise that is a
    :class:`RangeError`. ``n_min=None`` starts each id at its own lower bound.
    """
    ids = sorted(dict.fromkeys(ids), key=lambda i: _ORDER.get(i, len(_ORDER)))
    if not ids:
        raise ValueError("no identities requested")
    for identity in ids:
        valid_from(identity)
    if n_min is None:
        n_min = min(valid_from(i) for i in ids)
        clip, quiet = True, True
    else:
        quiet = False
    if n_max < n_min:
        raise RangeError(f"n_max ({n_max}) is below n_min ({n_min})")
    notices = []
    tasks: list[tuple] = []
    for identity in ids:
        lo = valid_from(identity)
        start = n_min
        if n_min < lo:
            if not clip:
                raise RangeError(f"{identity} is stated for n >= {lo}, got n_min={n_min}")
            if not quiet:
                notices.append(f"{identity}: n_min clipped from {n_min} to {lo}")
            start = lo
        tasks.extend(tasks_for(identity, start, n_max))
    return ScanReport(list(ids), n_min, n_max, run_tasks(tasks, workers), notices)
