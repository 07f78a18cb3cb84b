"""Serializations of lattice paths: ASCII grid art, DOT, SVG, JSON."""
from __future__ import annotations

import json

from .semimodule import LatticePath


def path_json(path: LatticePath) -> str:
    return json.dumps(
        {"alpha": path.alpha, "beta": path.beta,
         "turns": [[a, b] for a, b in path.turns]},
        separators=(",", ":"))


def path_ascii(path: LatticePath) -> str:
    """Grid of lattice points with the staircase drawn on it.

    Points sit on even character rows/columns; '#' marks a path vertex,
    '*' an ES-turn, '-' and '|' the edges.
    """
    width, height = 2 * path.beta + 1, 2 * path.alpha + 1
    grid = [[" "] * width for _ in range(height)]
    for y in range(path.alpha + 1):
        for x in range(path.beta + 1):
            grid[2 * (path.alpha - y)][2 * x] = "."
    verts = path.vertices()
    for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
        if x1 == x2:
            for y in range(min(y1, y2), max(y1, y2)):
                grid[2 * path.alpha - 2 * y - 1][2 * x1] = "|"
        else:
            for x in range(min(x1, x2), max(x1, x2)):
                grid[2 * (path.alpha - y1)][2 * x + 1] = "-"
    for x, y in verts:
        grid[2 * (path.alpha - y)][2 * x] = "#"
    for a, b in path.turns:
        grid[2 * (path.alpha - b)][2 * a] = "*"
    return "\n".join("".join(row).rstrip() for row in grid) + "\n"


def path_dot(path: LatticePath) -> str:
    verts = path.vertices()
    lines = ["digraph lattice_path {", "  rankdir=LR;"]
    names = []
    for x, y in verts:
        name = f'"({x},{y})"'
        names.append(name)
        shape = "doublecircle" if (x, y) in path.turns else "circle"
        lines.append(f"  {name} [shape={shape}];")
    for a, b in zip(names, names[1:]):
        lines.append(f"  {a} -> {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def path_svg(path: LatticePath, cell: int = 24) -> str:
    """Self-contained SVG: grid, bounding diagonal, staircase, turn markers."""
    w, h = path.beta * cell, path.alpha * cell
    pad = cell // 2

    def pt(x, y):
        return f"{pad + x * cell},{pad + (path.alpha - y) * cell}"

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'width="{w + 2 * pad}" height="{h + 2 * pad}" '
        f'viewBox="0 0 {w + 2 * pad} {h + 2 * pad}">',
    ]
    for x in range(path.beta + 1):
        parts.append(f'<line x1="{pad + x * cell}" y1="{pad}" x2="{pad + x * cell}" '
                     f'y2="{pad + h}" stroke="#ccc" stroke-width="1"/>')
    for y in range(path.alpha + 1):
        parts.append(f'<line x1="{pad}" y1="{pad + y * cell}" x2="{pad + w}" '
                     f'y2="{pad + y * cell}" stroke="#ccc" stroke-width="1"/>')
    x1, y1 = pt(0, path.alpha).split(",")
    x2, y2 = pt(path.beta, 0).split(",")
    parts.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
                 f'stroke="#888" stroke-width="1"/>')
    pts = " ".join(pt(x, y) for x, y in path.vertices())
    parts.append(f'<polyline points="{pts}" fill="none" stroke="#000" stroke-width="3"/>')
    for a, b in path.turns:
        cx, cy = pt(a, b).split(",")
        parts.append(f'<circle cx="{cx}" cy="{cy}" r="4" fill="#000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
