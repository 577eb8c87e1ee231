"""Run the hopfdual CLI from a checkout without installing the package."""

from __future__ import annotations

import sys
from pathlib import Path

SRC = Path(__file__).resolve().parent / "src"


def main() -> None:
    if not (SRC / "hopfdual").is_dir():
        raise RuntimeError(f"hopfdual sources not found under {SRC}")
    if str(SRC) not in sys.path:
        sys.path.insert(0, str(SRC))

    from hopfdual.cli import main as cli_main

    cli_main(prog_name="hopfdual")


if __name__ == "__main__":
    main()
