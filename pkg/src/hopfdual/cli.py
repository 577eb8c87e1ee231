"""Command-line interface for the hopfdual verification suites."""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click
from colorama import Fore, Style, just_fix_windows_console

from hopfdual.config import ALL_SUITES, RunConfig, available_families
from hopfdual.errors import HopfDualError
from hopfdual.pairing.gram import GramSpec, gram_rank
from hopfdual.pipeline import run_config, write_document
from hopfdual.reporting.summary import write_summary

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def _status(passed: bool) -> str:
    if passed:
        return f"{Fore.GREEN}PASS{Style.RESET_ALL}"
    return f"{Fore.RED}FAIL{Style.RESET_ALL}"


def _split(value: str | None) -> list[str] | None:
    if value is None:
        return None
    return [item.strip() for item in value.split(",") if item.strip()]


def family_options(command):
    """Family selection and parameters shared by every subcommand."""

    options = [
        click.option("--family", type=click.Choice(available_families()), help="Hopf algebra family."),
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path)),
        click.option("--n", "n", type=int, help="Taft/Liu n."),
        click.option("--v", "v", type=int, help="Taft v."),
        click.option("--omega", "omega", type=int, help="Liu omega."),
        click.option("--m", "m", type=int, help="D m."),
        click.option("--d", "d", type=int, help="D d."),
        click.option("--xi", "root", help="Root of unity as zetaN^t (gamma for Liu)."),
        click.option("--verbose", is_flag=True, help="Log at DEBUG level."),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _load(family, config_path, params, overrides) -> RunConfig:
    return RunConfig.from_sources(family, config_path, {"params": params, **overrides})


def _fail_usage(exc: HopfDualError) -> None:
    click.echo(f"[-] {exc}", err=True)
    sys.exit(EXIT_USAGE)


@click.group()
def main() -> None:
    """Exact checks of finite duals and Hopf pairings."""

    just_fix_windows_console()


@main.command()
@family_options
@click.option("--suites", help=f"Comma-separated subset of: {', '.join(ALL_SUITES)}.")
@click.option("--samples", help="Comma-separated exact lambda/alpha samples.")
@click.option("--proof-samples", help="Comma-separated samples for the proof matrices.")
@click.option("--l-max", type=int, help="Taft x-degree bound.")
@click.option("--j-max", type=int, help="|j| bound for Liu and D.")
@click.option("--s-max", type=int, help="F2-degree bound.")
@click.option("--word-length", type=int, help="Longest generator word for the Theta checks.")
@click.option("--N", "gram_n", type=int, help="Gram truncation.")
@click.option("--r", "r", type=int, help="Proof-matrix depth.")
@click.option("--pairs", "pair_count", type=int, help="Sampled pairs per check.")
@click.option("--seed", type=int)
@click.option("--out", "output", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--summary", type=click.Path(dir_okay=False, path_type=Path), help="Markdown summary path.")
@click.option("--no-progress", is_flag=True)
def verify(
    family,
    config_path,
    n,
    v,
    omega,
    m,
    d,
    root,
    verbose,
    suites,
    samples,
    proof_samples,
    l_max,
    j_max,
    s_max,
    word_length,
    gram_n,
    r,
    pair_count,
    seed,
    output,
    summary,
    no_progress,
) -> None:
    """Run verification suites and write a JSON report."""

    _configure_logging(verbose)
    try:
        config = _load(
            family,
            config_path,
            {"n": n, "v": v, "omega": omega, "m": m, "d": d},
            {
                "root": root,
                "suites": _split(suites),
                "samples": _split(samples),
                "proof_samples": _split(proof_samples),
                "bounds": {
                    "l_max": l_max,
                    "j_max": j_max,
                    "s_max": s_max,
                    "word_length": word_length,
                    "gram_n": gram_n,
                    "r": r,
                    "pair_count": pair_count,
                },
                "seed": seed,
                "output": output,
                "summary": summary,
            },
        )
        click.echo(f"[+] Verifying {config.family} {config.params} over Q(zeta_{config.order})")
        document, passed = run_config(config, progress=not no_progress)
    except HopfDualError as exc:
        _fail_usage(exc)
        return

    for suite in document["suites"]:
        prefix = "[+]" if suite["status"] == "pass" else "[-]"
        click.echo(
            f"{prefix} {suite['suite']:<16} {_status(suite['status'] == 'pass')} "
            f"{suite['cases_total'] - suite['cases_failed']}/{suite['cases_total']} ({suite['elapsed']}s)"
        )
        for witness in suite["witnesses"]:
            click.echo(f"      {witness}")

    if config.output is not None:
        write_document(document, config.output)
        click.echo(f"[+] Wrote {config.output}")
    if config.summary is not None:
        write_summary(document, config.summary)
        click.echo(f"[+] Wrote {config.summary}")
    sys.exit(EXIT_PASS if passed else EXIT_FAIL)


@main.command()
@family_options
@click.option("--N", "gram_n", type=int, default=1, show_default=True, help="Gram truncation.")
@click.option("--out", "output", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False, path_type=Path), help="Dump the matrix.")
def gram(family, config_path, n, v, omega, m, d, root, verbose, gram_n, output, csv_path) -> None:
    """Certify non-degeneracy of the H-bullet pairing at truncation N."""

    _configure_logging(verbose)
    try:
        config = _load(
            family,
            config_path,
            {"n": n, "v": v, "omega": omega, "m": m, "d": d},
            {"root": root, "suites": ["gram"], "bounds": {"gram_n": gram_n}, "output": output},
        )
        algebra = config.build_algebra()
        result = gram_rank(algebra, GramSpec(config.bounds.gram_n))
    except HopfDualError as exc:
        _fail_usage(exc)
        return

    rows, cols = result.matrix.shape
    prefix = "[+]" if result.full_rank else "[-]"
    click.echo(f"{prefix} Gram {rows}x{cols} rank {result.rank} {_status(result.full_rank)}")
    if config.output is not None:
        config.output.write_text(_gram_json(config, result))
        click.echo(f"[+] Wrote {config.output}")
    if csv_path is not None:
        result.matrix.to_csv(csv_path)
        click.echo(f"[+] Wrote {csv_path}")
    sys.exit(EXIT_PASS if result.full_rank else EXIT_FAIL)


def _gram_json(config: RunConfig, result) -> str:
    return json.dumps({"config": config.to_dict(), "gram": result.to_dict()}, indent=2)


if __name__ == "__main__":
    main()
