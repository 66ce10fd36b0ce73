"""Figure rendering for the CLI report path.

Renders the rows of an output record (curve or table commands) to an image
file next to the delimited data.  Uses the object-oriented matplotlib API
with an Agg canvas, so no interactive backend is touched.
"""
from __future__ import annotations

__all__ = ["render"]


def _figure():
    from matplotlib.figure import Figure

    fig = Figure(figsize=(6.4, 4.2), dpi=150)
    return fig, fig.subplots()


def _column(record, name):
    i = record.columns.index(name)
    return [row[i] for row in record.rows]


def _render_curve(record, path: str) -> None:
    fig, ax = _figure()
    xs = _column(record, "x")
    kind = record.params.get("kind", "cdf")
    n = record.params.get("n")
    if kind == "cdf":
        ax.plot(xs, _column(record, "cdf"), lw=1.4, label=f"n={n}")
        if "circle_cdf" in record.columns:
            ax.plot(xs, _column(record, "circle_cdf"), lw=1.0, ls="--",
                    color="gray", label="circle")
        ax.set_ylabel("P(chord length ≤ x)")
    else:
        ax.plot(xs, _column(record, "pdf"), lw=1.4, label=f"point distance, n={n}")
        chord = [(x, y) for x, y in zip(xs, _column(record, "chord_pdf"))
                 if y is not None]
        if chord:
            ax.plot(*zip(*chord), lw=1.0, ls=":", label="chord length (numeric)")
        if "circle_pdf" in record.columns:
            ax.plot(xs, _column(record, "circle_pdf"), lw=1.0, ls="--",
                    color="gray", label="circle")
        ax.set_ylabel("density")
    ax.set_xlabel("x")
    ax.legend(frameon=False)
    ax.grid(alpha=0.25)
    fig.tight_layout()
    fig.savefig(path)


def _render_table(record, path: str) -> None:
    fig, ax = _figure()
    ns = _column(record, "n")
    values = _column(record, "value")
    finite = [(n, v) for n, v in zip(ns, values) if n != float("inf")]
    ax.plot(*zip(*finite), "o-", ms=3.5, lw=1.0)
    limit = [v for n, v in zip(ns, values) if n == float("inf")]
    if limit:
        ax.axhline(limit[0], color="gray", ls="--", lw=1.0, label="circle limit")
        ax.legend(frameon=False)
    label = record.params.get("m", "value")
    ax.set_xlabel("number of sides n")
    ax.set_ylabel(f"moment m={label}" if label != "var" else "variance")
    ax.grid(alpha=0.25)
    fig.tight_layout()
    fig.savefig(path)


def render(record, path: str) -> None:
    """Write the figure for a curve or table record to ``path``."""
    if record.command == "curve":
        _render_curve(record, path)
    elif record.command == "table":
        _render_table(record, path)
    else:
        raise ValueError(f"no figure defined for command {record.command!r}")
