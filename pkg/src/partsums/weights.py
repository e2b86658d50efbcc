"""Per-partition factors used by the partition-sum identities."""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Sequence

from .exact import multinomial


class WeightKind(enum.Enum):
    """Which odd-number product sits over ``1^l1 2^l2 ... n^ln``.

    W1 uses bases |2i-3| (1, 1, 3, 5, ...), W2 uses 2i-1 (1, 3, 5, ...).
    """

    W1 = "W1"
    W2 = "W2"

    def base(self, i: int) -> int:
        if self is WeightKind.W1:
            return abs(2 * i - 3)
        return 2 * i - 1


def chain_weight(lam: Sequence[int]) -> int:
    """C(l1, l2) C(l2, l3) ... C(ln, 0).

    Works on padded or unpadded partitions alike: trailing C(0, 0) factors
    are 1 and the last nonzero entry meets the implicit zero sentinel.
    """
    result = 1
    for a, b in zip(lam, lam[1:]):
        if b == 0:
            break
        result *= math.comb(a, b)
    return result


def multinomial_weight(t: Sequence[int]) -> int:
    return multinomial(t)


def weight_parts(lam: Sequence[int], kind: WeightKind) -> tuple[int, int]:
    """Numerator and denominator of :func:`rational_weight`, before reduction."""
    num = 1
    den = 1
    for i, x in enumerate(lam, start=1):
        if x == 0:
            break
        num *= kind.base(i) ** x
        den *= i**x
    return num, den


def rational_weight(lam: Sequence[int], kind: WeightKind) -> Fraction:
    num, den = weight_parts(lam, kind)
    return Fraction(num, den)


def sign_lambda1(lam: Sequence[int]) -> int:
    """(-1)**(1 + l1)."""
    if not lam or lam[0] < 1:
        raise ValueError("sign needs a partition with a positive first part")
    return 1 if lam[0] % 2 else -1
