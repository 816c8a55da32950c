"""Generate the HTML verification report: per-suite summary plus every cell."""

import os
from datetime import datetime, timezone

from jinja2 import Template

from fibcube.config import Config

from .suites import results_frame, summarize

# ---------------------------------------------------------------------------
# Jinja2 HTML Template
# ---------------------------------------------------------------------------

VERIFY_REPORT_TEMPLATE = r"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="UTF-8">
<meta name="viewport" content="width=device-width, initial-scale=1.0">
<title>Fibonacci Cube Verification · {{ report_date }}</title>
<style>
:root {
    --bg: #faf9f6;
    --bg-card: #ffffff;
    --text: #111111;
    --text-muted: #777777;
    --border: #d4d4d4;
    --green: #15803d;
    --red: #b91c1c;
    --gold: #b8860b;
}
* { margin: 0; padding: 0; box-sizing: border-box; }
body {
    font-family: 'Source Serif 4', Georgia, serif;
    background: var(--bg);
    color: var(--text);
    line-height: 1.6;
}
.masthead {
    text-align: center;
    padding: 28px 20px 18px;
    border-bottom: 3px double var(--text);
    background: var(--bg-card);
}
.masthead-title { font-size: 36px; font-weight: 900; }
.masthead-date { font-family: Inter, sans-serif; font-size: 13px; color: var(--text-muted); }
.container { max-width: 960px; margin: 0 auto; padding: 24px 20px; }
h2 { font-size: 22px; margin: 28px 0 10px; border-bottom: 1px solid var(--border); }
table { width: 100%; border-collapse: collapse; font-family: Inter, sans-serif; font-size: 13px; }
th, td { text-align: left; padding: 6px 8px; border-bottom: 1px solid var(--border); }
th { text-transform: uppercase; letter-spacing: 1px; font-size: 11px; color: var(--text-muted); }
.ok { color: var(--green); font-weight: 600; }
.fail { color: var(--red); font-weight: 600; }
.skip { color: var(--gold); }
.verdict { font-size: 18px; margin-top: 8px; }
</style>
</head>
<body>
<div class="masthead">
    <div class="masthead-title">Fibonacci Cube Verification</div>
    <div class="masthead-date">{{ report_date }} · {{ report_time }} UTC · p ≤ {{ bounds.p_max }}, r ≤ {{ bounds.r_max }}, n ≤ {{ bounds.n_max }}</div>
    <div class="verdict {{ 'ok' if passed else 'fail' }}">{{ 'ALL CELLS PASS' if passed else 'FAILURES PRESENT' }}</div>
</div>
<div class="container">
    <h2>Summary</h2>
    <table>
        <tr><th>Suite</th><th>Passed</th><th>Failed</th><th>Skipped</th></tr>
        {% for row in summary %}
        <tr>
            <td>{{ row.suite }}</td>
            <td class="ok">{{ row.passed }}</td>
            <td class="{{ 'fail' if row.failed else '' }}">{{ row.failed }}</td>
            <td class="skip">{{ row.skipped }}</td>
        </tr>
        {% endfor %}
    </table>
    {% for suite, cells in suites.items() %}
    <h2>{{ suite }}</h2>
    <table>
        <tr><th>Cell</th><th>Result</th><th>Detail</th></tr>
        {% for cell in cells %}
        <tr>
            <td>{{ cell.cell }}</td>
            {% if cell.skipped %}<td class="skip">skip</td>
            {% elif cell.ok %}<td class="ok">ok</td>
            {% else %}<td class="fail">not ok</td>{% endif %}
            <td>{{ cell.detail }}</td>
        </tr>
        {% endfor %}
    </table>
    {% endfor %}
</div>
</body>
</html>"""


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------

def render_verify_report(results: list, bounds) -> str:
    now = datetime.now(timezone.utc)
    frame = results_frame(results)
    suites = {suite: group.to_dict("records") for suite, group in frame.groupby("suite", sort=False)}
    template = Template(VERIFY_REPORT_TEMPLATE)
    return template.render(
        report_date=now.strftime("%B %d, %Y"),
        report_time=now.strftime("%H:%M"),
        bounds=bounds,
        passed=all(r.ok for r in results),
        summary=summarize(results).to_dict("records"),
        suites=suites,
    )


def generate_verify_report(results: list, bounds, reports_dir: str = None) -> str:
    """Write the report (timestamped and as verify-latest.html); returns the timestamped path."""
    html = render_verify_report(results, bounds)
    reports_dir = reports_dir or Config.REPORTS_DIR
    os.makedirs(reports_dir, exist_ok=True)

    now = datetime.now(timezone.utc)
    filepath = os.path.join(reports_dir, f"verify-{now.strftime('%Y%m%d-%H%M%S')}.html")
    with open(filepath, "w", encoding="utf-8") as f:
        f.write(html)

    latest = os.path.join(reports_dir, "verify-latest.html")
    with open(latest, "w", encoding="utf-8") as f:
        f.write(html)

    return filepath
