"""Markdown summary of a run document, rendered with jinja2."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from jinja2 import Environment, StrictUndefined

__all__ = ["SUMMARY_TEMPLATE", "render_summary", "write_summary"]

SUMMARY_TEMPLATE = """\
# hopfdual run: {{ config.family }} ({{ params_line }})

Generated {{ generated_at }} by hopfdual {{ version }}.

| suite | status | cases | failed | seconds |
|---|---|---:|---:|---:|
{% for suite in suites -%}
| {{ suite.suite }} | {{ suite.status | upper }} | {{ suite.cases_total }} | {{ suite.cases_failed }} | {{ suite.elapsed }} |
{% endfor %}
{%- set failing = suites | selectattr("status", "equalto", "fail") | list %}
{% if failing %}
## Failure witnesses
{% for suite in failing %}
### {{ suite.suite }}
{% for witness in suite.witnesses %}
- `{{ witness }}`
{%- endfor %}
{% endfor %}
{%- else %}
All {{ suites | length }} suites passed.
{% endif %}
"""

_ENV = Environment(undefined=StrictUndefined, keep_trailing_newline=True)


def render_summary(document: dict[str, Any]) -> str:
    config = document["config"]
    params = config.get("params", {})
    params_line = ", ".join(f"{key}={value}" for key, value in params.items())
    template = _ENV.from_string(SUMMARY_TEMPLATE)
    return template.render(
        config=config,
        params_line=params_line,
        suites=document["suites"],
        version=document["version"],
        generated_at=document["generated_at"],
    )


def write_summary(document: dict[str, Any], path: Path) -> Path:
    path.write_text(render_summary(document))
    return path
