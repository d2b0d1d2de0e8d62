"""Closed-form WRE values for the benchmark state families.

Note the Haar-mean value is the annealed average -ln(E[M]) of the second
moment, not E[-ln M]; that is how the averaged quantity is defined.
"""

import math
from dataclasses import dataclass

CLOSED_FORM_KINDS = ("haar-mean", "ghz", "w", "pbell", "product")

_LN_3PI = math.log(3.0 * math.pi)
_LN_4PI = math.log(4.0 * math.pi)


@dataclass(frozen=True)
class ClosedForm:
    kind: str
    n: int
    value: float


def wre_closed_form(kind, n):
    """Closed-form WRE in nats for one of the benchmark families."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "haar-mean":
        return n * _LN_4PI - math.log(2.0) + math.log1p(2.0 ** (-n))
    if kind == "ghz":
        return n * _LN_3PI + math.log(2.0) - math.log1p(2.0 ** (-n + 1))
    if kind == "w":
        return n * _LN_3PI + math.log(2.0) - math.log1p(1.0 / n)
    if kind == "pbell":
        if n % 2 != 0:
            raise ValueError("pbell requires an even number of qubits")
        return n * math.log(2.0 * math.sqrt(3.0) * math.pi)
    if kind == "product":
        return n * _LN_3PI
    raise ValueError(f"unknown closed-form kind {kind!r}")


def closed_form(kind, n):
    return ClosedForm(kind=kind, n=n, value=wre_closed_form(kind, n))


def haar_mean_second_moment(n):
    """Haar average of the Husimi second moment: 2 / ((2^N + 1) 2^N pi^N)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2.0 / ((2.0**n + 1.0) * 2.0**n * math.pi**n)


def wre_bounds(n):
    """(lower, upper) = (N ln(3 pi), N ln(4 pi)); valid for every state."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * _LN_3PI, n * _LN_4PI
