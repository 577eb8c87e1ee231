"""Relation, coproduct, counit and antipode identities of the dual generators.

Every identity is checked by evaluation: products as convolutions pointwise on
a basis slice, coproducts as <f, b b'> against the claimed tensor on sampled
pairs, antipodes as <f, S(b)> against the claimed functional.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Hashable, Sequence

from hopfdual.duals.functionals import DualFunctional, LinearCombination, dual_antipode_eval, dual_pair_eval
from hopfdual.duals.generators import DDual, LiuDual, TaftDual, dual_generators
from hopfdual.duals.presented import sample_basis_pairs, theta_constants
from hopfdual.errors import UnsupportedSuiteError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import SECTOR_U
from hopfdual.reporting.report import Report
from hopfdual.scalars.combinatorics import discrete_log
from hopfdual.scalars.cyclotomic import CycloScalar, Scalar

__all__ = ["LEMMA_IDS", "available_lemmas", "verify_dual_lemma"]

logger = logging.getLogger(__name__)

# (coefficient, left functional, right functional)
TensorExpr = list[tuple[Scalar, DualFunctional, DualFunctional]]


def _tprod(left: TensorExpr, right: TensorExpr) -> TensorExpr:
    return [(c1 * c2, f1 * f2, g1 * g2) for c1, f1, g1 in left for c2, f2, g2 in right]


@dataclass
class _LemmaRun:
    algebra: FamilyAlgebra
    basis: list[Hashable]
    pairs: list[tuple[Hashable, Hashable]]
    samples: list[CycloScalar]
    report: Report
    gens: object = field(init=False)

    def __post_init__(self) -> None:
        self.gens = dual_generators(self.algebra)
        self.structure = self.algebra.structure()
        self.fmt = self.algebra.format_basis

    @property
    def zero(self) -> DualFunctional:
        functional = LinearCombination(self.structure, ())
        functional.label = "0"
        return functional

    def same(self, lhs: DualFunctional, rhs: DualFunctional, label: str) -> None:
        bad = next((b for b in self.basis if lhs(b) != rhs(b)), None)
        self.report.check(bad is None, lambda: f"{label}: {lhs(bad)} != {rhs(bad)} at {self.fmt(bad)}")

    def closed_form(self, f: DualFunctional, formula: Callable[[Hashable], Scalar], label: str) -> None:
        ctx = self.algebra.ctx
        bad = next((b for b in self.basis if f(b) != ctx.scalar(formula(b))), None)
        self.report.check(bad is None, lambda: f"{label}: {f(bad)} at {self.fmt(bad)}")

    def coproduct(self, f: DualFunctional, claimed: TensorExpr, label: str) -> None:
        ctx = self.algebra.ctx
        for b, b2 in self.pairs:
            lhs = dual_pair_eval(f, b, b2)
            rhs = ctx.zero
            for c, f1, f2 in claimed:
                left = f1(b)
                if not left.is_zero():
                    rhs = rhs + c * left * f2(b2)
            if lhs != rhs:
                self.report.check(False, f"Delta({label}) on {self.fmt(b)} (x) {self.fmt(b2)}: {lhs} != {rhs}")
                return
        self.report.check(True, "")

    def counit(self, f: DualFunctional, expected: Scalar, label: str) -> None:
        value = f(self.algebra.unit_key())
        self.report.check(value == expected, lambda: f"eps({label}) = {value}, expected {expected}")

    def antipode(self, f: DualFunctional, claimed: DualFunctional, label: str) -> None:
        bad = next((b for b in self.basis if dual_antipode_eval(f, b) != claimed(b)), None)
        self.report.check(bad is None, lambda: f"S({label}) differs at {self.fmt(bad)}")


# -- Taft -------------------------------------------------------------------------


def _taft_correction(gens: TaftDual, factor: Scalar) -> TensorExpr:
    m = gens.m
    return [(factor, gens.e1_divided(k), gens.omega() ** k * gens.e1_divided(m - k)) for k in range(1, m)]


def _taft_relations(run: _LemmaRun) -> None:
    gens: TaftDual = run.gens
    p = run.algebra.params
    eps = gens.counit()
    omega, e1, e2 = gens.omega(), gens.e1(), gens.e2()
    for lam in run.samples:
        for lam2 in run.samples:
            run.same(gens.psi(lam) * gens.psi(lam2), gens.psi(lam + lam2), f"psi({lam}) psi({lam2})")
        psi = gens.psi(lam)
        run.same(omega * psi, psi * omega, f"omega psi({lam})")
        run.same(e2 * psi, psi * e2, f"E2 psi({lam})")
        if gens.m > 1:
            run.same(e1 * psi, psi * e1, f"E1 psi({lam})")
    run.same(gens.psi(0), eps, "psi(0) = eps")
    run.same(omega**p.n, eps, "omega^n = eps")
    run.same(e2 * omega, omega * e2, "E2 omega = omega E2")
    if gens.m > 1:
        run.same(e1**gens.m, run.zero, "E1^m = 0")
        run.same(e1 * omega, omega * e1 * p.q, "E1 omega = xi^v omega E1")
        run.same(e1 * e2, e2 * e1, "E1 E2 = E2 E1")
    for k in range(p.n):
        for s in range(2):
            for k1 in range(gens.m):
                f = omega**k * gens.e2_divided(s) * gens.e1_divided(k1)
                run.closed_form(
                    f,
                    lambda b, k=k, s=s, k1=k1: p.xi ** (b.j * k) if b.l == s * gens.m + k1 else 0,
                    f"omega^{k} E2^[{s}] E1^[{k1}]",
                )
    # sigma_c are orthogonal idempotents summing to eps
    classes = p.n // gens.m
    total = gens.sigma(0)
    for c in range(classes):
        for c2 in range(classes):
            run.same(gens.sigma(c) * gens.sigma(c2), gens.sigma(c) if c == c2 else run.zero, f"sigma_{c} sigma_{c2}")
        if c:
            total = total + gens.sigma(c)
    run.same(total, eps, "sum of sigma_c = eps")


def _taft_structure_maps(run: _LemmaRun) -> None:
    gens: TaftDual = run.gens
    p = run.algebra.params
    m, n, xi = gens.m, p.n, p.xi
    eps, omega, e1, e2 = gens.counit(), gens.omega(), gens.e1(), gens.e2()
    run.coproduct(omega, [(1, omega, omega)], "omega")
    run.coproduct(e2, [(1, eps, e2), (1, e2, omega**m)] + _taft_correction(gens, 1), "E2")
    if m > 1:
        run.coproduct(e1, [(1, eps, e1), (1, e1, omega)], "E1")
    for lam in run.samples:
        psi = gens.psi(lam)
        group = [(1, gens.psi(lam * xi ** (m * c)), psi * gens.sigma(c)) for c in range(n // m)]
        claimed = _tprod(group, [(1, eps, eps)] + _taft_correction(gens, lam))
        run.coproduct(psi, claimed, f"psi({lam})")
        run.counit(psi, 1, f"psi({lam})")
        s_psi = gens.psi(-lam) * gens.sigma(0)
        for c in range(1, n // m):
            s_psi = s_psi + gens.psi(-lam * xi ** (-m * c)) * gens.sigma(c)
        run.antipode(psi, s_psi, f"psi({lam})")
    run.counit(omega, 1, "omega")
    run.counit(e2, 0, "E2")
    run.antipode(omega, omega ** (n - 1), "omega")
    run.antipode(e2, -(omega ** (n - m) * e2), "E2")
    if m > 1:
        run.counit(e1, 0, "E1")
        run.antipode(e1, omega ** (n - 1) * e1 * -(p.q ** -1), "E1")


# -- Liu --------------------------------------------------------------------------


def _liu_pairs(gens: LiuDual, samples: Sequence[CycloScalar]) -> list[tuple[CycloScalar, CycloScalar]]:
    p = gens.algebra.params
    pairs = {(gens.ctx.one, gens.ctx.one), (gens.ctx.one, p.gamma)}
    pairs.update((s**p.n, s**p.omega) for s in samples if not s.is_zero())
    return sorted(pairs)


def _liu_correction(gens: LiuDual, factor: Scalar) -> TensorExpr:
    p = gens.algebra.params
    return [
        (factor, gens.e1_divided(k), gens.psi(1, p.gamma**k) * gens.e1_divided(p.n - k)) for k in range(1, p.n)
    ]


def _liu_relations(run: _LemmaRun) -> None:
    gens: LiuDual = run.gens
    p = run.algebra.params
    pairs = _liu_pairs(gens, run.samples)
    e2 = gens.e2()
    for a, b in pairs:
        psi = gens.psi(a, b)
        for a2, b2 in pairs:
            run.same(psi * gens.psi(a2, b2), gens.psi(a * a2, b * b2), f"psi({a},{b}) psi({a2},{b2})")
        run.same(e2 * psi, psi * e2, f"E2 psi({a},{b})")
        if p.n > 1:
            run.same(gens.e1() * psi, psi * gens.e1() * b, f"E1 psi({a},{b})")
    run.same(gens.psi(1, 1), gens.counit(), "psi(1,1) = eps")
    if p.n > 1:
        e1 = gens.e1()
        run.same(e1**p.n, run.zero, "E1^n = 0")
        run.same(e1 * e2, e2 * e1 + e1 * Fraction(1, p.n), "E1 E2 = E2 E1 + (1/n) E1")


def _liu_structure_maps(run: _LemmaRun) -> None:
    gens: LiuDual = run.gens
    p = run.algebra.params
    eps, e2 = gens.counit(), gens.e2()
    run.coproduct(e2, [(1, eps, e2), (1, e2, eps)] + _liu_correction(gens, -1), "E2")
    run.counit(e2, 0, "E2")
    run.antipode(e2, -e2, "E2")
    if p.n > 1:
        e1 = gens.e1()
        run.coproduct(e1, [(1, eps, e1), (1, e1, gens.psi(1, p.gamma))], "E1")
        run.counit(e1, 0, "E1")
        claimed = gens.psi(1, p.gamma ** (p.n - 1)) * e1 * -(p.gamma ** (p.n - 1))
        run.antipode(e1, claimed, "E1")
    for a, b in _liu_pairs(gens, run.samples):
        psi = gens.psi(a, b)
        claimed = _tprod([(1, psi, psi)], [(1, eps, eps)] + _liu_correction(gens, 1 - a**p.omega))
        run.coproduct(psi, claimed, f"psi({a},{b})")
        run.counit(psi, 1, f"psi({a},{b})")
        run.antipode(psi, gens.psi(a.inverse(), b.inverse()), f"psi({a},{b})")


# -- D ----------------------------------------------------------------------------


def _d_pairs(gens: DDual, samples: Sequence[CycloScalar], shifted: bool) -> list[tuple[CycloScalar, CycloScalar]]:
    """(alpha, alpha^d), and with ``shifted`` also (alpha, alpha^d gamma)."""

    p = gens.algebra.params
    pairs = set()
    for alpha in samples:
        if alpha.is_zero():
            continue
        pairs.add((alpha, alpha**p.d))
        if shifted and p.m > 1:
            pairs.add((alpha, alpha**p.d * p.gamma))
    return sorted(pairs)


def _d_relations(run: _LemmaRun) -> None:
    gens: DDual = run.gens
    p = run.algebra.params
    pairs = _d_pairs(gens, run.samples, shifted=True)
    e2 = gens.e2()
    for a, b in pairs:
        zeta, chi = gens.zeta(a, b), gens.chi(a, b)
        for a2, b2 in pairs:
            run.same(zeta * gens.zeta(a2, b2), gens.zeta(a * a2, b * b2), f"zeta({a},{b}) zeta({a2},{b2})")
            run.same(chi * gens.chi(a2, b2), gens.chi(a * a2, b * b2), f"chi({a},{b}) chi({a2},{b2})")
            run.same(zeta * gens.chi(a2, b2), run.zero, f"zeta({a},{b}) chi({a2},{b2}) = 0")
            run.same(chi * gens.zeta(a2, b2), run.zero, f"chi({a},{b}) zeta({a2},{b2}) = 0")
        run.same(e2 * zeta, zeta * e2, f"E2 zeta({a},{b})")
        run.same(e2 * chi, chi * e2, f"E2 chi({a},{b})")
        if p.m > 1:
            e1 = gens.e1()
            run.same(e1 * zeta, zeta * e1 * b, f"E1 zeta({a},{b})")
            run.same(e1 * chi, chi * e1 * (a ** (-p.d) * b), f"E1 chi({a},{b})")
    run.same(gens.zeta(1, 1) + gens.chi(1, 1), gens.counit(), "zeta(1,1) + chi(1,1) = eps")
    if p.m > 1:
        e1 = gens.e1()
        kappa = (1 - p.gamma) ** (-p.m)
        run.same(e1**p.m, gens.chi(1, 1) * kappa, "E1^m = chi(1,1)/(1-gamma)^m")
        run.same(e1 * e2, e2 * e1 + gens.zeta(1, 1) * e1 * Fraction(1, p.m), "E1 E2 = E2 E1 + (1/m) zeta(1,1) E1")


def _d_sign(gens: DDual) -> DualFunctional:
    return gens.zeta(1, 1) - gens.chi(1, 1)


def _d_generator_maps(run: _LemmaRun) -> None:
    gens: DDual = run.gens
    p = run.algebra.params
    m = p.m
    eps, e2 = gens.counit(), gens.e2()
    sign = _d_sign(gens)
    claimed: TensorExpr = [(1, sign, e2), (1, e2, eps)]
    if m > 1:
        e1 = gens.e1()
        run.coproduct(e1, [(1, eps, e1), (1, e1, gens.grouplike(1))], "E1")
        run.counit(e1, 0, "E1")
        claimed += [(-1, sign * gens.e1_divided(k), gens.grouplike(k - m) * gens.e1_divided(m - k)) for k in range(1, m)]
    run.coproduct(e2, claimed, "E2")
    run.counit(e2, 0, "E2")
    run.same(sign, gens.grouplike(m), "zeta(1,1) - chi(1,1) = G^m")


def _d_zeta_chi_coproducts(run: _LemmaRun) -> None:
    gens: DDual = run.gens
    p = run.algebra.params
    m, d, xi, gamma = p.m, p.d, p.xi, p.gamma
    eps = gens.counit()
    g = gens.grouplike(1)
    run.coproduct(g, [(1, g, g)], "G")
    run.counit(g, 1, "G")
    for alpha in run.samples:
        if alpha.is_zero():
            continue
        mu, lam = alpha**d, alpha**p.omega
        th = theta_constants(p, alpha)
        run.report.check(th.total() == 1 - lam, lambda: f"theta product for alpha={alpha}: {th.total()}")
        a_inv, mu_inv = alpha.inverse(), mu.inverse()
        lead = alpha ** ((1 - m) * d // 2)
        zeta, chi = gens.zeta(alpha, mu), gens.chi(alpha, mu)
        z_claim: TensorExpr = [(1, zeta, zeta), (lead * th.product_except(0), chi, gens.chi(a_inv, mu_inv))]
        x_claim: TensorExpr = [(1, zeta, chi), (1, chi, gens.zeta(a_inv, mu_inv))]
        for k in range(1, m):
            left, right = gens.e1_divided(k), gens.e1_divided(m - k)
            z_claim.append((1 - lam, zeta * left, gens.zeta(alpha, mu * gamma**k) * right))
            z_claim.append(
                (lead * xi**k * th.product_except(m - k), chi * left, gens.chi(a_inv, mu_inv * gamma**k) * right)
            )
            x_claim.append((-(xi**k) * th.prefix(k), zeta * left, gens.chi(alpha, mu * gamma**k) * right))
            x_claim.append(
                (-(mu ** (k - m)) * th.prefix(m - k), chi * left, gens.zeta(a_inv, mu_inv * gamma**k) * right)
            )
        run.coproduct(zeta, z_claim, f"zeta({alpha},{mu})")
        run.coproduct(chi, x_claim, f"chi({alpha},{mu})")
        run.counit(zeta, 1, f"zeta({alpha},{mu})")
        run.counit(chi, 0, f"chi({alpha},{mu})")
    run.counit(eps, 1, "eps")


def _d_antipodes(run: _LemmaRun) -> None:
    gens: DDual = run.gens
    p = run.algebra.params
    m, d, gamma = p.m, p.d, p.gamma
    e2 = gens.e2()
    claimed = gens.chi(1, 1) * e2 - gens.zeta(1, 1) * e2 + gens.chi(1, 1) * Fraction(1 - m, 2 * m)
    run.antipode(e2, claimed, "E2")
    run.antipode(gens.grouplike(1), gens.grouplike(-1), "G")
    if m > 1:
        run.antipode(gens.e1(), gens.grouplike(-1) * gens.e1() * -(gamma ** -1), "E1")
    for a, b in _d_pairs(gens, run.samples, shifted=True):
        run.antipode(gens.zeta(a, b), gens.zeta(a.inverse(), b.inverse()), f"zeta({a},{b})")
        k = _shift(gens, a, b)
        coeff = a ** ((1 - m) * d // 2) * gamma ** (-k)
        run.antipode(gens.chi(a, b), gens.chi(a, a**d * gamma ** (-k)) * coeff, f"chi({a},{b})")


def _shift(gens: DDual, alpha: CycloScalar, beta: CycloScalar) -> int:
    p = gens.algebra.params
    return discrete_log(p.gamma, beta * (alpha**p.d).inverse(), p.m)


def _dihedral(run: _LemmaRun) -> None:
    gens: DDual = run.gens
    eps, e2 = gens.counit(), gens.e2()
    sign = gens.dihedral_zeta(1) - gens.dihedral_chi(1)
    lams = [lam for lam in run.samples if not lam.is_zero()]
    for lam in lams:
        zeta, chi = gens.dihedral_zeta(lam), gens.dihedral_chi(lam)
        for lam2 in lams:
            run.same(zeta * gens.dihedral_zeta(lam2), gens.dihedral_zeta(lam * lam2), f"zeta({lam}) zeta({lam2})")
            run.same(chi * gens.dihedral_chi(lam2), gens.dihedral_chi(lam * lam2), f"chi({lam}) chi({lam2})")
            run.same(zeta * gens.dihedral_chi(lam2), run.zero, f"zeta({lam}) chi({lam2}) = 0")
        run.same(e2 * zeta, zeta * e2, f"E2 zeta({lam})")
        run.same(e2 * chi, chi * e2, f"E2 chi({lam})")
        inv = lam.inverse()
        run.coproduct(zeta, [(1, zeta, zeta), (1, chi, gens.dihedral_chi(inv))], f"zeta({lam})")
        run.coproduct(chi, [(1, zeta, chi), (1, chi, gens.dihedral_zeta(inv))], f"chi({lam})")
        run.counit(zeta, 1, f"zeta({lam})")
        run.counit(chi, 0, f"chi({lam})")
        run.antipode(zeta, gens.dihedral_zeta(inv), f"zeta({lam})")
        run.antipode(chi, chi, f"chi({lam})")
        # g^j x^k -> lam^j and (-1)^k lam^j
        run.closed_form(zeta + chi, lambda b, lam=lam: lam**b.j, f"zeta({lam}) + chi({lam})")
        run.closed_form(
            zeta - chi,
            lambda b, lam=lam: lam**b.j * (-1 if b.sector == SECTOR_U else 1),
            f"zeta({lam}) - chi({lam})",
        )
    run.same(gens.dihedral_zeta(1) + gens.dihedral_chi(1), eps, "zeta(1) + chi(1) = eps")
    run.coproduct(e2, [(1, sign, e2), (1, e2, eps)], "E2")
    run.counit(e2, 0, "E2")
    run.antipode(e2, -(sign * e2), "E2")


_LEMMAS: dict[str, tuple[tuple[str, ...], Callable[[_LemmaRun], None]]] = {
    "L3.1": (("taft",), _taft_relations),
    "L3.2": (("taft",), _taft_structure_maps),
    "L4.1": (("liu",), _liu_relations),
    "L4.2": (("liu",), _liu_structure_maps),
    "L5.2": (("dmx",), _d_relations),
    "L5.3": (("dmx",), _d_generator_maps),
    "L5.4": (("dmx",), _d_zeta_chi_coproducts),
    "L5.5": (("dmx",), _d_antipodes),
    "R5.8": (("dihedral",), _dihedral),
}

LEMMA_IDS = tuple(_LEMMAS)


def available_lemmas(family: str) -> list[str]:
    return [lemma for lemma, (families, _) in _LEMMAS.items() if family in families]


def verify_dual_lemma(
    algebra: FamilyAlgebra,
    lemma_id: str,
    *,
    bound: int,
    samples: Sequence[Scalar],
    pair_count: int = 80,
    seed: int = 0,
) -> Report:
    """Check one lemma's identities on the basis slice given by ``bound``.

    ``bound`` is l_max for Taft and the |j| bound otherwise; ``samples`` are
    lambda values (Taft, dihedral) or alpha values (Liu, D).
    """

    entry = _LEMMAS.get(lemma_id)
    if entry is None or algebra.family not in entry[0]:
        raise UnsupportedSuiteError(lemma_id, algebra.family)
    basis = algebra.basis(bound)
    report = Report(suite=lemma_id, family=algebra.family, params=algebra.params.as_dict())
    run = _LemmaRun(
        algebra=algebra,
        basis=basis,
        pairs=sample_basis_pairs(basis, pair_count, seed),
        samples=[algebra.ctx.scalar(s) for s in samples],
        report=report,
    )
    entry[1](run)
    logger.debug("%s on %s: %d cases, %d failed", lemma_id, algebra.family, report.cases_total, report.cases_failed)
    return report
