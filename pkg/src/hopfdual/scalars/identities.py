"""Scalar identities that the vanishing and divided-power arguments rely on."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from hopfdual.reporting.report import Report
from hopfdual.scalars.combinatorics import q_binomial, q_factorial, stirling_partial

__all__ = ["verify_scalar_identities"]

logger = logging.getLogger(__name__)


def verify_scalar_identities(*, r_max: int = 8, l_max: int = 8, qs: Sequence[int | Fraction] = (2,)) -> Report:
    """Stirling partial sums vanish below the diagonal; q-binomials are symmetric
    and agree with the q-factorial formula at generic q."""

    report = Report(suite="scalars", family="-")
    for r in range(1, r_max + 1):
        for s in range(r):
            report.check(stirling_partial(r, s) == 0, lambda: f"stirling_partial({r}, {s}) != 0")
    for q in qs:
        for l in range(l_max + 1):
            for k in range(l + 1):
                value = q_binomial(l, k, q)
                report.check(value == q_binomial(l, l - k, q), lambda: f"C({l},{k})_{q} is not symmetric")
                formula = Fraction(q_factorial(l, q)) / (Fraction(q_factorial(k, q)) * q_factorial(l - k, q))
                report.check(value == formula, lambda: f"C({l},{k})_{q} = {value} but factorials give {formula}")
    logger.debug("scalar identities: %d cases", report.cases_total)
    return report
