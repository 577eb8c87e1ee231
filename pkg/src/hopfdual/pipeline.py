"""Run the requested verification suites for one configuration and assemble the run document.

Suites are independent, so they fan out over worker threads with
``asyncio.gather``; reports come back in requested order.
"""

from __future__ import annotations

import asyncio
import json
import logging
import random
import time
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Callable

from tqdm import tqdm

from hopfdual import __version__
from hopfdual.algebra.hopf import verify_associativity, verify_hopf_axioms
from hopfdual.config import RunConfig
from hopfdual.duals.lemmas import available_lemmas, verify_dual_lemma
from hopfdual.duals.presented import presented_dual, sample_basis_pairs, theta_constants, verify_theta
from hopfdual.duals.rewriting import random_words, verify_confluence
from hopfdual.errors import UnsupportedSuiteError
from hopfdual.families.base import FamilyAlgebra
from hopfdual.families.dmx import DAlgebra
from hopfdual.families.liu import LiuAlgebra
from hopfdual.families.taft import TaftAlgebra
from hopfdual.linalg.lemmas import verify_matrix_lemmas
from hopfdual.pairing.gram import GramSpec, gram_rank
from hopfdual.pairing.hbullet import HBulletBasisSpec, hbullet_basis, verify_hbullet_closure, verify_pairing_axioms
from hopfdual.pairing.ideals import taft_independence_rank, verify_ideal_vanishing
from hopfdual.pairing.proof_matrices import proof_matrix
from hopfdual.reporting.report import Report
from hopfdual.scalars.identities import verify_scalar_identities

__all__ = ["available_suites", "build_document", "run_config", "run_suites", "write_document"]

logger = logging.getLogger(__name__)

SuiteRunner = Callable[[RunConfig, FamilyAlgebra], Report]

# associativity runs on all triples, so it gets its own small sample
_ASSOCIATIVITY_SAMPLE = 10
_CONFLUENCE_SEEDS = (0, 1, 2)


def _new_report(suite: str, algebra: FamilyAlgebra) -> Report:
    return Report(suite=suite, family=algebra.family, params=algebra.params.as_dict())


def _hopf_axioms(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = _new_report("hopf-axioms", algebra)
    structure = algebra.structure()
    basis = algebra.basis(config.basis_bound)
    pairs = sample_basis_pairs(basis, config.bounds.pair_count, config.seed)
    report.absorb(verify_hopf_axioms(structure, basis, pairs), "H")
    rng = random.Random(config.seed)
    sample = rng.sample(basis, min(_ASSOCIATIVITY_SAMPLE, len(basis)))
    report.absorb(verify_associativity(structure, sample), "associativity")
    return report


def _dual_lemmas(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = _new_report("dual-lemmas", algebra)
    for lemma_id in available_lemmas(algebra.family):
        sub = verify_dual_lemma(
            algebra,
            lemma_id,
            bound=config.basis_bound,
            samples=config.scalars(config.samples),
            pair_count=config.bounds.pair_count,
            seed=config.seed,
        )
        report.absorb(sub, lemma_id)
    return report


def _theta(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = _new_report("theta", algebra)
    dual = presented_dual(algebra)
    samples = config.scalars(config.samples)
    bounds = config.bounds
    basis = algebra.basis(config.basis_bound)
    report.absorb(
        verify_theta(
            dual,
            word_length=bounds.word_length,
            basis=basis,
            samples=samples,
            s_max=bounds.s_max,
            pair_count=bounds.pair_count,
            seed=config.seed,
        ),
        "theta",
    )
    words = dual.sample_words(samples, bounds.s_max)
    word_pairs = sample_basis_pairs(words, bounds.pair_count, config.seed)
    report.absorb(verify_hopf_axioms(dual.structure(), words, word_pairs, suite="presented-hopf-axioms"), "presented")
    letters = random_words(dual, samples, length=bounds.word_length + 2, count=12, seed=config.seed)
    report.absorb(verify_confluence(dual, letters, _CONFLUENCE_SEEDS), "rewriting")
    return report


def _pairing_axioms(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = _new_report("pairing-axioms", algebra)
    dual = presented_dual(algebra)
    spec = HBulletBasisSpec(config.bounds.s_max)
    functionals = hbullet_basis(dual, spec)
    elements = algebra.basis(config.basis_bound)
    report.absorb(
        verify_pairing_axioms(dual, functionals, elements, count=config.bounds.pair_count, seed=config.seed),
        "axioms",
    )
    report.absorb(verify_hbullet_closure(dual, spec), "closure")
    return report


def _gram(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = _new_report("gram", algebra)
    result = gram_rank(algebra, GramSpec(config.bounds.gram_n))
    report.check(
        result.full_rank,
        lambda: f"Gram matrix {result.matrix.rows}x{result.matrix.cols} has rank {result.rank}",
    )
    report.details.update(result.to_dict())
    return report


def _proof_matrices(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = _new_report("proof-matrix", algebra)
    r = config.bounds.r
    samples = config.scalars(config.proof_samples)
    results = []
    for value in samples:
        if isinstance(algebra, TaftAlgebra):
            results.append(proof_matrix(algebra, "P3.3", r, lam=value, cross_check=True))
            report.absorb(verify_ideal_vanishing(algebra, r, lam=value, seed=config.seed), f"ideal lambda={value}")
        elif isinstance(algebra, LiuAlgebra):
            results.append(proof_matrix(algebra, "P4.3", r, alpha=value, cross_check=True))
            report.absorb(verify_ideal_vanishing(algebra, r, alpha=value, seed=config.seed), f"ideal alpha={value}")
        elif isinstance(algebra, DAlgebra):
            results.append(proof_matrix(algebra, "P5.6-case1", r, alpha=value))
            report.absorb(verify_ideal_vanishing(algebra, r, alpha=value, seed=config.seed), f"ideal alpha={value}")
    if isinstance(algebra, DAlgebra):
        results.append(proof_matrix(algebra, "P5.6-case2", r))
        results.append(proof_matrix(algebra, "P5.6-case3", r))
    if isinstance(algebra, TaftAlgebra) and len(samples) > 1:
        found, size = taft_independence_rank(algebra, samples, r)
        report.check(found == size, lambda: f"independence matrix has rank {found} of {size}")
        report.details["independence"] = {"rank": found, "size": size}
    for result in results:
        report.check(result.passed, lambda: f"{result.prop_id}: {result.to_dict()}")
    report.details["matrices"] = [result.to_dict() for result in results]
    return report


def _matrix_lemmas(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    return verify_matrix_lemmas(seed=config.seed)


def _scalars(config: RunConfig, algebra: FamilyAlgebra) -> Report:
    report = verify_scalar_identities()
    if isinstance(algebra, DAlgebra):
        for alpha in config.scalars(config.samples):
            if alpha.is_zero():
                continue
            constants = theta_constants(algebra.params, alpha)
            expected = 1 - alpha**algebra.params.omega
            report.check(
                constants.total() == expected,
                lambda: f"theta product at alpha={alpha}: {constants.total()} != {expected}",
            )
    return report


_SUITES: dict[str, SuiteRunner] = {
    "hopf-axioms": _hopf_axioms,
    "dual-lemmas": _dual_lemmas,
    "theta": _theta,
    "pairing-axioms": _pairing_axioms,
    "gram": _gram,
    "proof-matrix": _proof_matrices,
    "matrix-lemmas": _matrix_lemmas,
    "scalars": _scalars,
}


def available_suites() -> list[str]:
    return list(_SUITES)


def _timed(runner: SuiteRunner, config: RunConfig, algebra: FamilyAlgebra) -> Report:
    started = time.perf_counter()
    report = runner(config, algebra)
    report.elapsed = time.perf_counter() - started
    logger.info("suite %s: %s in %.2fs", report.suite, report.status, report.elapsed)
    return report


async def run_suites(config: RunConfig, *, progress: bool = False) -> list[Report]:
    """Run every suite of ``config`` concurrently; parameter errors propagate."""

    algebra = config.build_algebra()
    for suite in config.suites:
        if suite not in _SUITES:
            raise UnsupportedSuiteError(suite, config.family)
    bar = tqdm(total=len(config.suites), desc="suites", unit="suite", disable=not progress)

    async def one(suite: str) -> Report:
        report = await asyncio.to_thread(_timed, _SUITES[suite], config, algebra)
        bar.update(1)
        return report

    try:
        reports = await asyncio.gather(*(one(suite) for suite in config.suites))
    finally:
        bar.close()
    return list(reports)


def build_document(config: RunConfig, reports: list[Report]) -> dict[str, Any]:
    return {
        "config": config.to_dict(),
        "suites": [report.to_dict() for report in reports],
        "version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def write_document(document: dict[str, Any], path: Path) -> Path:
    path.write_text(json.dumps(document, indent=2))
    return path


def run_config(config: RunConfig, *, progress: bool = False) -> tuple[dict[str, Any], bool]:
    """Run synchronously; returns the run document and whether every suite passed."""

    reports = asyncio.run(run_suites(config, progress=progress))
    document = build_document(config, reports)
    return document, all(report.passed for report in reports)
