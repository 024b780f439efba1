"""Output formats for ``Upsilon(t)/t``: exact breakpoints, CSV samples, SVG."""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .upsilon import PLFunction

__all__ = ["format_decimal", "sample_grid", "breakpoints_text", "csv_text", "svg_text"]


def format_decimal(x: Fraction, digits: int = 6) -> str:
    x = Fraction(x)
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    s = format(d, "f") if abs(d.adjusted()) < digits else format(d, "e")
    if "." in s and "e" not in s:
        s = s.rstrip("0").rstrip(".")
    return s


def sample_grid(step: Fraction) -> list[Fraction]:
    """``step, 2 step, ...`` up to 2 inclusive."""
    step = Fraction(step)
    if step <= 0:
        raise ValueError("grid step must be positive")
    out = []
    k = 1
    while k * step <= 2:
        out.append(k * step)
        k += 1
    return out


def breakpoints_text(f: PLFunction) -> str:
    """Exact breakpoints of ``Upsilon``; the ``t = 0`` quotient is the initial slope."""
    lines = ["t upsilon upsilon_over_t"]
    for t, v in f.pairs():
        lines.append(f"{t} {v} {f.over_t(t)}")
    return "\n".join(lines) + "\n"


def csv_text(f: PLFunction, step=Fraction(1, 120), digits: int = 6) -> str:
    lines = ["t,upsilon,upsilon_over_t"]
    for t in sample_grid(step):
        lines.append(f"{format_decimal(t, digits)},{format_decimal(f(t), digits)},{format_decimal(f.over_t(t), digits)}")
    return "\n".join(lines) + "\n"


def svg_text(f: PLFunction, step=Fraction(1, 120), title: str = "", digits: int = 6) -> str:
    """Self-contained SVG of ``Upsilon(t)/t`` on ``(0, 2]`` with breakpoint markers."""
    ts = sorted(set(sample_grid(step)) | {t for t in f.breakpoints if t > 0})
    pts = [(t, f.over_t(t)) for t in ts]
    ys = [y for _, y in pts] + [Fraction(0), f.initial_slope]
    ymin, ymax = min(ys), max(ys)
    if ymin == ymax:
        ymin, ymax = ymin - 1, ymax + 1
    pad = (ymax - ymin) / 10
    ymin, ymax = ymin - pad, ymax + pad
    W, H, L, R, T, B = 640, 400, 60, 20, 30, 40

    def X(t):
        return float(L + (W - L - R) * Fraction(t) / 2)

    def Y(y):
        return float(T + (H - T - B) * (ymax - Fraction(y)) / (ymax - ymin))

    def n(v):
        return f"{v:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">',
        f'<rect x="0" y="0" width="{W}" height="{H}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{W // 2}" y="18" text-anchor="middle" font-family="sans-serif" font-size="13">{_esc(title)}</text>')
    # axes
    y0 = Y(0) if ymin <= 0 <= ymax else Y(ymin)
    out.append(f'<line x1="{L}" y1="{n(y0)}" x2="{W - R}" y2="{n(y0)}" stroke="black"/>')
    out.append(f'<line x1="{L}" y1="{T}" x2="{L}" y2="{H - B}" stroke="black"/>')
    for k in range(5):
        t = Fraction(k, 2)
        out.append(f'<line x1="{n(X(t))}" y1="{n(y0)}" x2="{n(X(t))}" y2="{n(y0 + 4)}" stroke="black"/>')
        out.append(
            f'<text x="{n(X(t))}" y="{n(y0 + 16)}" text-anchor="middle" font-family="sans-serif" font-size="11">{t}</text>'
        )
    for k in range(6):
        y = ymin + (ymax - ymin) * Fraction(k, 5)
        out.append(f'<line x1="{L - 4}" y1="{n(Y(y))}" x2="{L}" y2="{n(Y(y))}" stroke="black"/>')
        out.append(
            f'<text x="{L - 6}" y="{n(Y(y) + 4)}" text-anchor="end" font-family="sans-serif" font-size="11">'
            f"{format_decimal(y, 3)}</text>"
        )
    poly = " ".join(f"{n(X(t))},{n(Y(y))}" for t, y in pts)
    out.append(f'<polyline fill="none" stroke="#1f4e9c" stroke-width="2" points="{poly}"/>')
    for t in f.breakpoints:
        if 0 < t < 2:
            out.append(f'<circle cx="{n(X(t))}" cy="{n(Y(f.over_t(t)))}" r="3" fill="#c0392b"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
