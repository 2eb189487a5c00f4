"""
Convergence accelerators shared by the special functions and the series engine:
the Levin u-transform on partial sums and Cohen-Villegas-Zagier weights for
alternating series, both driven through mpmath.
"""
import logging
import math
from typing import Any, List, Optional, Sequence, Tuple

logger = logging.getLogger('acceleration-service')

LEVIN_MIN_ORDER = 8
LEVIN_MAX_ORDER = 300
CVZ_RATE = 3 + math.sqrt(8)
CVZ_EXTRA_ORDERS = 6


def cvz_order_for(target, leading_magnitude) -> int:
    """Number of CVZ terms whose worst-case error 2|A_0|/(3+sqrt 8)^n meets target"""
    leading = float(abs(leading_magnitude)) or 1.0
    tiny = float(target) or 1e-300
    if math.isinf(leading):
        return 64
    return max(8, int(math.ceil(math.log(2 * leading / tiny) / math.log(CVZ_RATE))) + 2)


def cvz_bound(n: int, leading_magnitude, mp) -> Any:
    return 2 * abs(leading_magnitude) / mp.mpf(CVZ_RATE) ** n


def cvz_sum(magnitudes: Sequence[Any], mp) -> Any:
    """sum_k (-1)^k A[k] with CVZ weights over all supplied terms."""
    n = len(magnitudes)
    # cohen_alt expects the signed terms
    terms = [a if k % 2 == 0 else -a for k, a in enumerate(magnitudes)]
    # the weights reach (3+sqrt 8)^n, so cancellation costs about 2.55 n bits
    with mp.extraprec(int(2.6 * n) + 16):
        value, _ = mp.cohen_alt().update(terms)
    return +value


class LevinAccumulator:
    """Incremental Levin u-transform over partial sums.

    The heuristic error after each order is the largest discrepancy with the
    two previous orders. The accumulator remembers the order with the smallest
    error and reports it when the run ends.
    """

    def __init__(self, mp, first_index: int, target, min_order: int = LEVIN_MIN_ORDER):
        self.mp = mp
        self.target = target
        self.min_order = min_order
        self._levin = mp.levin(method='levin', variant='u')
        # u-variant weights become (theta + i) * a_i = n * a_n
        self._levin.theta = max(first_index, 1)
        self.partial_sums: List[Any] = []
        self.history: List[Any] = []
        self.best: Optional[Tuple[Any, Any]] = None
        self.streak = 0
        self.failed = False

    @property
    def terms_used(self) -> int:
        return len(self.partial_sums)

    @property
    def done(self) -> bool:
        return self.failed or self.streak >= 2

    def push(self, term) -> None:
        previous = self.partial_sums[-1] if self.partial_sums else 0
        self.partial_sums.append(previous + term)
        if self.failed or len(self.partial_sums) < self.min_order:
            return
        try:
            value, _ = self._levin.update_psum(self.partial_sums)
        except (ValueError, ZeroDivisionError) as e:
            logger.debug(f"Levin transform stopped after {len(self.partial_sums)} terms: {e}")
            self.failed = True
            return
        self.history.append(value)
        if len(self.history) < 3:
            return
        err = max(abs(self.history[-1] - self.history[-2]), abs(self.history[-1] - self.history[-3]))
        if self.best is None or err < self.best[1]:
            self.best = (value, err)
        self.streak = self.streak + 1 if err < self.target else 0

    def result(self) -> Tuple[Any, Any, bool]:
        """(value, est_err, reached)"""
        if self.best is None:
            last = self.partial_sums[-1] if self.partial_sums else self.mp.zero
            tail = abs(self.partial_sums[-1] - self.partial_sums[-2]) if len(self.partial_sums) > 1 else abs(last)
            return last, tail, False
        value, err = self.best
        return value, err, err < self.target
