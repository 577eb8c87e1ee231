import re

import pytest

from hopfdual.config import ALL_SUITES, Bounds, RunConfig, available_families, load_yaml
from hopfdual.errors import ParameterError
from hopfdual.families.dmx import DAlgebra
from hopfdual.families.liu import LiuAlgebra
from hopfdual.reporting.summary import render_summary


def test_families_and_suites():
    assert available_families() == ["dihedral", "dmx", "liu", "taft"]
    assert len(ALL_SUITES) == 8


def test_family_defaults():
    config = RunConfig.for_family("liu")
    assert config.params == {"n": 2, "omega": 2}
    assert config.root_text == "zeta2^1"
    assert config.order == 2
    assert isinstance(config.build_algebra(), LiuAlgebra)
    assert config.basis_bound == config.bounds.j_max


def test_order_covers_samples_and_root():
    config = RunConfig.for_family("taft", samples=["zeta4^1"])
    assert config.order == 12
    dmx = RunConfig.for_family("dmx")
    assert dmx.order == 6
    assert isinstance(dmx.build_algebra(), DAlgebra)


def test_merged_ignores_none_and_merges_bounds():
    config = RunConfig.for_family("taft").merged({"params": {"n": 4, "v": None}, "bounds": {"r": 2}, "seed": None})
    assert config.params == {"n": 4, "v": 1}
    assert config.bounds.r == 2
    assert config.bounds.l_max == 6
    assert config.seed == 0


def test_config_errors():
    with pytest.raises(ParameterError, match="unknown family"):
        RunConfig.for_family("quantum")
    with pytest.raises(ParameterError, match="missing parameter"):
        RunConfig("taft", params={"n": 3})
    with pytest.raises(ParameterError, match="unknown suite"):
        RunConfig.for_family("taft", suites=["nope"])
    with pytest.raises(ParameterError, match="unknown configuration key"):
        RunConfig.for_family("taft", colour="red")
    with pytest.raises(ParameterError, match="N >= 1"):
        Bounds(gram_n=0)
    with pytest.raises(ParameterError, match="non-negative"):
        Bounds(l_max=-1)


def test_from_sources_layers_yaml_under_overrides(tmp_path):
    path = tmp_path / "run.yaml"
    path.write_text("family: taft\nparams:\n  n: 4\nbounds:\n  l_max: 3\nseed: 7\n")
    config = RunConfig.from_sources(None, path, {"bounds": {"l_max": 5}})
    assert config.family == "taft"
    assert config.params["n"] == 4
    assert config.bounds.l_max == 5
    assert config.seed == 7


def test_load_yaml_rejects_bad_files(tmp_path):
    broken = tmp_path / "broken.yaml"
    broken.write_text("family: [taft\n")
    with pytest.raises(ParameterError, match="invalid YAML"):
        load_yaml(broken)
    listing = tmp_path / "list.yaml"
    listing.write_text("- taft\n")
    with pytest.raises(ParameterError, match="must contain a mapping"):
        load_yaml(listing)


def test_summary_lists_failure_witnesses():
    document = {
        "config": {"family": "taft", "params": {"n": "3", "v": "1"}},
        "suites": [
            {"suite": "gram", "status": "pass", "cases_total": 1, "cases_failed": 0, "elapsed": 0.1, "witnesses": []},
            {
                "suite": "theta",
                "status": "fail",
                "cases_total": 4,
                "cases_failed": 1,
                "elapsed": 0.2,
                "witnesses": ["unit mismatch"],
            },
        ],
        "version": "0.1.0",
        "generated_at": "2026-01-01T00:00:00+00:00",
    }
    text = render_summary(document)
    assert "# hopfdual run: taft (n=3, v=1)" in text
    assert "| theta | FAIL | 4 | 1 | 0.2 |" in text
    assert "- `unit mismatch`" in text
    assert "suites passed" not in text


@pytest.mark.parametrize(
    "body, message",
    [
        ("family: taft\nbounds:\n  r: two\n", "'bounds.r' must be an integer"),
        ("family: taft\nbounds: 5\n", "'bounds' must be a mapping"),
        ("family: taft\nparams: [3, 1]\n", "'params' must be a mapping"),
        ("family: taft\nparams:\n  n: three\n", "'params.n' must be an integer"),
        ("family: taft\nbounds:\n  depth: 2\n", "unknown bound"),
        ("family: taft\nsamples: 2\n", "'samples' must be a list"),
        ("family: taft\nseed: soon\n", "'seed' must be an integer"),
        ("family: [taft]\n", "family must be a name"),
    ],
)
def test_malformed_yaml_values_are_parameter_errors(tmp_path, body, message):
    path = tmp_path / "run.yaml"
    path.write_text(body)
    with pytest.raises(ParameterError, match=re.escape(message)):
        RunConfig.from_sources(None, path, {})
