import sys
from pathlib import Path

from hypothesis import settings


def _ensure_src_on_path() -> None:
    src = Path(__file__).resolve().parents[1] / "src"
    if src.exists() and str(src) not in sys.path:
        sys.path.insert(0, str(src))


_ensure_src_on_path()

# exact arithmetic in cyclotomic fields has uneven per-example cost
settings.register_profile("hopfdual", deadline=None)
settings.load_profile("hopfdual")
