"""Deterministic CSV and SVG emitters for root tables."""
from __future__ import annotations

import io
import math
from dataclasses import dataclass

from .roots import BOUND_SLACK, RootReport


@dataclass(frozen=True)
class RootRow:
    z: complex
    modulus: float
    shifted_modulus: float
    verdicts: dict[str, bool]


def _fmt(x: float) -> str:
    s = f"{x:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


def descent_rows(report: RootReport, m: int) -> list[RootRow]:
    """Rows for roots of ``d_I``; the shifted column is ``|z|``, i.e. ``|t + m|`` for ``t = z - m``."""
    rows = []
    for z, err in zip(report.roots, report.errors):
        slack = BOUND_SLACK + err
        rows.append(RootRow(z, abs(z), abs(z), {
            "modulus": abs(z) <= m + slack,
            "real_part": z.real >= -1 - slack,
        }))
    return rows


def excitation_rows(report: RootReport, m: int) -> list[RootRow]:
    rows = []
    for z, err in zip(report.roots, report.errors):
        slack = BOUND_SLACK + err
        rows.append(RootRow(z, abs(z), abs(z + m), {
            "shift_m": abs(z + m) <= m + slack,
            "shift_1": abs(z + 1) <= m + slack,
        }))
    return rows


def to_csv(rows: list[RootRow]) -> str:
    out = io.StringIO()
    out.write("re,im,modulus,shifted_modulus,verdicts\n")
    for r in rows:
        verdicts = ";".join(f"{k}:{str(v).lower()}" for k, v in r.verdicts.items())
        out.write(f"{_fmt(r.z.real)},{_fmt(r.z.imag)},{_fmt(r.modulus)},{_fmt(r.shifted_modulus)},{verdicts}\n")
    return out.getvalue()


def to_svg(roots: list[complex], m: int, title: str = "", scale: int = 40) -> str:
    """Shade ``{|z| <= m, Re z >= -1}``, draw a unit grid and axes, and mark each root."""
    lo, hi = -m - 1, m + 1
    size = (hi - lo) * scale
    X = lambda x: (x - lo) * scale  # noqa: E731
    Y = lambda y: (hi - y) * scale  # noqa: E731
    f = lambda v: f"{v:.3f}".rstrip("0").rstrip(".")  # noqa: E731
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
    ]
    if title:
        parts.append(f"<title>{title}</title>")
    parts.append(f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>')
    if m > 1:
        h = math.sqrt(m * m - 1)
        parts.append(
            f'<path d="M {f(X(-1))} {f(Y(h))} A {f(m * scale)} {f(m * scale)} 0 1 1 '
            f'{f(X(-1))} {f(Y(-h))} Z" fill="#cfe0f5" stroke="#4a78b5" stroke-width="1"/>'
        )
    else:
        parts.append(f'<circle cx="{f(X(0))}" cy="{f(Y(0))}" r="{f(m * scale)}" '
                     f'fill="#cfe0f5" stroke="#4a78b5" stroke-width="1"/>')
    for k in range(lo, hi + 1):
        parts.append(f'<line x1="{f(X(k))}" y1="0" x2="{f(X(k))}" y2="{size}" stroke="#dddddd" stroke-width="0.5"/>')
        parts.append(f'<line x1="0" y1="{f(Y(k))}" x2="{size}" y2="{f(Y(k))}" stroke="#dddddd" stroke-width="0.5"/>')
    parts.append(f'<line x1="0" y1="{f(Y(0))}" x2="{size}" y2="{f(Y(0))}" stroke="black" stroke-width="1"/>')
    parts.append(f'<line x1="{f(X(0))}" y1="0" x2="{f(X(0))}" y2="{size}" stroke="black" stroke-width="1"/>')
    for z in roots:
        parts.append(f'<circle cx="{f(X(z.real))}" cy="{f(Y(z.imag))}" r="3" fill="#c0392b">'
                     f"<title>{_fmt(z.real)} {_fmt(z.imag)}i</title></circle>")
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
