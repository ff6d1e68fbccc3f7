"""Minimal SVG rendering of an inclusion region next to the Cauchy disk."""

import numpy as np

SIZE = 600


def render_svg(region, cauchy_radius, eigenvalues=None, size=SIZE):
    """SVG text: Cauchy circle stroked, region disks filled, eigenvalues as dots.

    The viewport is the square of half-width ``1.1 * cauchy_radius`` around 0.
    """
    half = 1.1 * cauchy_radius if cauchy_radius > 0 else 1.0
    scale = size / (2 * half)
    px = lambda z: ((z.real + half) * scale, (half - z.imag) * scale)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<line x1="0" y1="{size / 2:.3f}" x2="{size}" y2="{size / 2:.3f}" stroke="#ccc"/>',
        f'<line x1="{size / 2:.3f}" y1="0" x2="{size / 2:.3f}" y2="{size}" stroke="#ccc"/>',
        f'<circle cx="{size / 2:.3f}" cy="{size / 2:.3f}" r="{cauchy_radius * scale:.3f}" '
        'fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for d in region.disks:
        x, y = px(complex(d.center))
        out.append(
            f'<circle cx="{x:.3f}" cy="{y:.3f}" r="{d.radius * scale:.3f}" '
            'fill="steelblue" fill-opacity="0.35" stroke="steelblue"/>'
        )
    if eigenvalues is not None:
        for z in np.asarray(eigenvalues, dtype=complex):
            x, y = px(z)
            out.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="2" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
