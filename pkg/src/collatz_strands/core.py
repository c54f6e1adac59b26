"""The odd-to-odd Collatz map, its inverses and iteration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import BudgetExhausted, EvenInput, NotDivisible

DEFAULT_MAX_STEPS = 10**5


class StepResult(NamedTuple):
    value: int
    k: int


@dataclass(frozen=True)
class Trace:
    start: int
    steps: tuple[StepResult, ...] = field(default_factory=tuple)

    @property
    def m(self) -> int:
        return len(self.steps)

    @property
    def values(self) -> list[int]:
        return [s.value for s in self.steps]


def _check_natural(n: int) -> None:
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")


def trailing_zeros(x: int) -> int:
    """2-adic valuation of a positive integer via a single bit scan."""
    return (x & -x).bit_length() - 1


def collatz_step(n: int) -> StepResult:
    """Apply gamma once: (3n + 1) with every factor of two removed.

    >>> collatz_step(5)
    StepResult(value=1, k=4)
    """
    _check_natural(n)
    x = 3 * n + 1
    k = trailing_zeros(x)
    return StepResult(x >> k, k)


def collatz_inverse(k: int, n: int) -> int:
    """(n * 2**k - 1) / 3, raising NotDivisible when it is not a natural."""
    _check_natural(k)
    _check_natural(n)
    if n % 2 == 0:
        raise EvenInput(f"inverse is defined on odd values, got {n}")
    q, r = divmod((n << k) - 1, 3)
    if r:
        raise NotDivisible(f"{n}*2^{k} - 1 is not a multiple of 3")
    return q


def collatz_inverse_row(n: int) -> int:
    # the unique k = 1 predecessor; exists only for n = 2 (mod 3)
    _check_natural(n)
    if n % 2 == 0:
        raise EvenInput(f"inverse is defined on odd values, got {n}")
    if n % 3 != 2:
        raise NotDivisible(f"{n} mod 3 = {n % 3}, need 2")
    return (2 * n - 1) // 3


def iterate(n: int, m: int) -> int:
    _check_natural(m)
    for _ in range(m):
        n = collatz_step(n).value
    return n


def trace_to_one(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> Trace:
    """Apply gamma until the value 1 appears.

    1 itself needs zero applications. Raises BudgetExhausted carrying the
    partial Trace if 1 has not been reached after ``max_steps`` steps.
    """
    _check_natural(n)
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    if n == 1:
        return Trace(n)
    steps = []
    value = n
    for _ in range(max_steps):
        s = collatz_step(value)
        steps.append(s)
        value = s.value
        if value == 1:
            return Trace(n, tuple(steps))
    raise BudgetExhausted(
        f"{n} did not reach 1 within {max_steps} steps", Trace(n, tuple(steps))
    )


def exception_candidate(n: int) -> bool:
    """True iff n is one of the values that actually needs testing: odd, > 1, not a multiple of 3."""
    return n > 1 and n % 2 == 1 and n % 3 != 0
