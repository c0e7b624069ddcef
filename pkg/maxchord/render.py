from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .diagram import AxisType, ChordDiagram  # noqa: E402

LABEL_RADIUS = 1.13
AXIS_RADIUS = 1.25


def _position(k: float, points: int) -> tuple[float, float]:
    # point 0 at the top, labels increasing clockwise
    angle = math.pi / 2 - 2 * math.pi * k / points
    return math.cos(angle), math.sin(angle)


def _axis_ends(axis: AxisType, points: int) -> tuple[float, float]:
    half = points / 2
    if axis is AxisType.TYPE_I:
        return 0.0, half
    return -0.5, half - 0.5


def render_svg(d: ChordDiagram, path: Path | str, *, axis: AxisType | str | None = None) -> Path:
    """Draw the diagram as an SVG. Points are labelled 1..2n; every artist carries a gid."""
    path = Path(path)
    points = d.points
    with plt.rc_context({"svg.hashsalt": "maxchord", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(4, 4))
        ax.set_aspect("equal")
        ax.set_axis_off()
        ax.set_xlim(-1.4, 1.4)
        ax.set_ylim(-1.4, 1.4)

        circle = plt.Circle((0.0, 0.0), 1.0, fill=False, linewidth=1.2, color="black")
        circle.set_gid("circle")
        ax.add_patch(circle)

        for a, b in d.chords():
            (x1, y1), (x2, y2) = _position(a, points), _position(b, points)
            (line,) = ax.plot([x1, x2], [y1, y2], color="tab:blue", linewidth=1.4)
            line.set_gid(f"chord-{a + 1}-{b + 1}")

        for k in range(points):
            x, y = _position(k, points)
            (dot,) = ax.plot([x], [y], "o", color="black", markersize=4)
            dot.set_gid(f"point-{k + 1}")
            label = ax.text(LABEL_RADIUS * x, LABEL_RADIUS * y, str(k + 1), ha="center", va="center", fontsize=9)
            label.set_gid(f"label-{k + 1}")

        if axis is not None and points:
            axis = AxisType(axis)
            start, end = _axis_ends(axis, points)
            (x1, y1), (x2, y2) = _position(start, points), _position(end, points)
            (line,) = ax.plot(
                [AXIS_RADIUS * x1, AXIS_RADIUS * x2],
                [AXIS_RADIUS * y1, AXIS_RADIUS * y2],
                linestyle="--",
                color="tab:red",
                linewidth=1.0,
            )
            line.set_gid(f"axis-{axis.value}")

        fig.tight_layout()
        try:
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
    return path
