"""Static SVG and DOT drawings of a level certificate: spine on a circle, fragments inside."""

from __future__ import annotations

import math

from .leveling import LevelCertificate

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]
SPINE_COLOR = "#222222"


def level_color(level: int) -> str:
    return PALETTE[(level - 1) % len(PALETTE)]


def layout(cert: LevelCertificate, radius: float = 1.0) -> dict[int, tuple[float, float]]:
    """Spine vertices evenly on the circle; a fragment's internal vertices near its attachments' centroid."""
    spine = cert.spine.vertices
    t = len(spine)
    pos = {}
    for i, v in enumerate(spine):
        a = 2 * math.pi * i / t - math.pi / 2
        pos[v] = (radius * math.cos(a), radius * math.sin(a))
    for f in cert.fragments:
        if f.is_chord:
            continue
        pts = [pos[spine[p]] for p in f.attachments]
        cx = sum(x for x, _ in pts) / len(pts) * 0.5
        cy = sum(y for _, y in pts) / len(pts) * 0.5
        k = len(f.internal_vertices)
        for j, v in enumerate(f.internal_vertices):
            a = 2 * math.pi * j / k
            spread = 0.0 if k == 1 else 0.15 * radius
            pos[v] = (cx + spread * math.cos(a), cy + spread * math.sin(a))
    return pos


def to_svg(cert: LevelCertificate, size: int = 400) -> str:
    r = size * 0.42
    c = size / 2
    pos = {v: (c + r * x, c + r * y) for v, (x, y) in layout(cert).items()}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<circle cx="{c:.2f}" cy="{c:.2f}" r="{r:.2f}" fill="none" stroke="{SPINE_COLOR}" stroke-width="2"/>',
    ]
    for f, lv in zip(cert.fragments, cert.levels):
        color = level_color(lv)
        out.append(f'<g class="fragment level-{lv}" stroke="{color}" stroke-width="1.5" fill="none">')
        for u, v in f.edges:
            (x1, y1), (x2, y2) = pos[u], pos[v]
            if f.is_chord:
                # bow the chord toward the centre so nested chords stay apart
                qx, qy = (x1 + x2) / 2 * 0.6 + c * 0.4, (y1 + y2) / 2 * 0.6 + c * 0.4
                out.append(f'<path d="M {x1:.2f} {y1:.2f} Q {qx:.2f} {qy:.2f} {x2:.2f} {y2:.2f}"/>')
            else:
                out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
        out.append("</g>")
        for v in f.internal_vertices:
            x, y = pos[v]
            out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{color}"/>')
    for v in cert.spine.vertices:
        x, y = pos[v]
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="white" stroke="{SPINE_COLOR}"/>')
        out.append(f'<text x="{x:.2f}" y="{y - 8:.2f}" font-size="11" text-anchor="middle">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def to_dot(cert: LevelCertificate) -> str:
    pos = layout(cert, radius=3.0)
    lines = ["graph certificate {", "  node [shape=circle, fixedsize=true, width=0.3, fontsize=10];"]
    for v in sorted(pos):
        x, y = pos[v]
        lines.append(f'  {v} [pos="{x:.3f},{-y:.3f}!"];')
    spine = cert.spine.vertices
    for i, v in enumerate(spine):
        w = spine[(i + 1) % len(spine)]
        lines.append(f'  {v} -- {w} [color="{SPINE_COLOR}", penwidth=2];')
    for f, lv in zip(cert.fragments, cert.levels):
        for u, v in f.edges:
            lines.append(f'  {u} -- {v} [color="{level_color(lv)}", label="L{lv}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
