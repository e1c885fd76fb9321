"""Deterministic SVG rendering of curve configurations.

Output is plain SVG 1.1 with stable element ids and elements emitted in a
fixed order, so identical scenes produce byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .arrangement import Arrangement
from .curves import Bridge, PolyCurve, mutual_crossings, self_crossings
from .geom import Point, add, scale

_CURVE_COLORS = ("#1f4e9c", "#b03a2e", "#1e8449", "#7d3c98")


def _fmt(x) -> str:
    return f"{float(x):.4f}"


def _path(points: Sequence[Point], closed: bool) -> str:
    cmds = [f"M {_fmt(points[0][0])} {_fmt(points[0][1])}"]
    for p in points[1:]:
        cmds.append(f"L {_fmt(p[0])} {_fmt(p[1])}")
    if closed:
        cmds.append("Z")
    return " ".join(cmds)


@dataclass
class Scene:
    curves: List[PolyCurve] = field(default_factory=list)
    bridge_polyline: Optional[Tuple[Point, ...]] = None
    winding_labels: bool = True
    crossings: bool = True
    margin: mpq = mpq(2)

    def bbox(self):
        xs: List[mpq] = []
        ys: List[mpq] = []
        for c in self.curves:
            x0, y0, x1, y1 = c.bbox()
            xs += [x0, x1]
            ys += [y0, y1]
        if self.bridge_polyline:
            xs += [p[0] for p in self.bridge_polyline]
            ys += [p[1] for p in self.bridge_polyline]
        m = self.margin
        return min(xs) - m, min(ys) - m, max(xs) + m, max(ys) + m


def render_svg(scene: Scene) -> str:
    x0, y0, x1, y1 = scene.bbox()
    w, h = x1 - x0, y1 - y0
    scale_px = 640 / max(float(w), float(h))
    lines: List[str] = []
    lines.append('<?xml version="1.0" encoding="UTF-8"?>')
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{float(w) * scale_px:.0f}" height="{float(h) * scale_px:.0f}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">'
    )
    # flip the y axis so the mathematical orientation reads correctly
    lines.append(f'<g transform="translate(0 {_fmt(y0 + y1)}) scale(1 -1)">')

    for i, c in enumerate(scene.curves):
        color = _CURVE_COLORS[i % len(_CURVE_COLORS)]
        lines.append(
            f'<path id="curve-{i}" d="{_path(c.vertices, True)}" '
            f'fill="none" stroke="{color}" stroke-width="0.12"/>'
        )
    if scene.bridge_polyline:
        lines.append(
            f'<path id="bridge-0" d="{_path(scene.bridge_polyline, False)}" '
            f'fill="none" stroke="#555555" stroke-width="0.1" '
            f'stroke-dasharray="0.4 0.25"/>'
        )

    if scene.crossings:
        marks: List[Point] = []
        for c in scene.curves:
            marks.extend(cr.point for cr in self_crossings(c))
        for i in range(len(scene.curves)):
            for j in range(i + 1, len(scene.curves)):
                marks.extend(
                    cr.point for cr in mutual_crossings(scene.curves[i], scene.curves[j])
                )
        marks.sort()
        for k, p in enumerate(marks):
            lines.append(
                f'<circle id="crossing-{k}" cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" '
                f'r="0.18" fill="#222222"/>'
            )

    if scene.winding_labels and scene.curves:
        arr = Arrangement(scene.curves)
        labeled = 0
        for face in arr.faces:
            if not face.bounded:
                continue
            text = ",".join(str(wn) for wn in face.winding)
            wx, wy = face.witness
            lines.append(
                f'<text id="winding-{labeled}" x="{_fmt(wx)}" y="{_fmt(wy)}" '
                f'font-size="0.7" text-anchor="middle" fill="#333333" '
                f'transform="translate(0 {_fmt(2 * wy)}) scale(1 -1)">{text}</text>'
            )
            labeled += 1

    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_configuration(c0: PolyCurve, c1: Optional[PolyCurve] = None,
                         bridge: Optional[Bridge] = None, *,
                         winding_labels: bool = True) -> str:
    curves = [c0] if c1 is None else [c0, c1]
    poly = None
    if bridge is not None and c1 is not None:
        poly = bridge.polyline(c0, c1)
    return render_svg(Scene(curves=curves, bridge_polyline=poly,
                            winding_labels=winding_labels))


def render_filmstrip(c0: PolyCurve, c1: PolyCurve, events, direction: Point,
                     *, max_panels: int = 8) -> str:
    """Before/at/after panels around each event of a separation run; the
    first curve is drawn at the three relevant positions."""
    panels: List[str] = []
    lines: List[str] = []
    shown = list(events)[:max_panels]
    lines.append('<?xml version="1.0" encoding="UTF-8"?>')
    lines.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{320 * max(1, len(shown) * 3)}" height="320">'
    )
    panel = 0
    for k, ev in enumerate(shown):
        for phase, dt in (("before", mpq(-1, 4)), ("at", mpq(0)), ("after", mpq(1, 4))):
            t = ev.time + dt
            moved = c0.translate(scale(direction, t))
            sub = Scene(curves=[moved, c1], winding_labels=False, crossings=False)
            x0, y0, x1, y1 = sub.bbox()
            w, h = x1 - x0, y1 - y0
            s = 300 / max(float(w), float(h))
            lines.append(
                f'<g id="panel-{k}-{phase}" transform="translate({panel * 320 + 10} 310) '
                f'scale({s:.4f} -{s:.4f}) translate({_fmt(-x0)} {_fmt(-y0)})">'
            )
            lines.append(
                f'<path d="{_path(moved.vertices, True)}" fill="none" '
                f'stroke="{_CURVE_COLORS[0]}" stroke-width="{2/s:.4f}"/>'
            )
            lines.append(
                f'<path d="{_path(c1.vertices, True)}" fill="none" '
                f'stroke="{_CURVE_COLORS[1]}" stroke-width="{2/s:.4f}"/>'
            )
            if phase == "at":
                lines.append(
                    f'<circle cx="{_fmt(ev.point[0])}" cy="{_fmt(ev.point[1])}" '
                    f'r="{6/s:.4f}" fill="none" stroke="#d68910" '
                    f'stroke-width="{2/s:.4f}"/>'
                )
            lines.append("</g>")
            panel += 1
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
