"""Upsilon profiles of torus knot sums, printed exactly and plotted as SVG.

Run with ``python3 demos/02_upsilon_profiles.py [outdir]``.  The CSV and SVG
files go to ``outdir`` (default: a fresh temporary directory).
"""

import sys
import tempfile
from fractions import Fraction
from pathlib import Path

from altknots import expr_upsilon, parse_expr, torus_upsilon
from altknots.render import csv_text, svg_text
from altknots.upsilon import first_singularity, psi, staircase_from_alexander, torus_alexander

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp(prefix="upsilon-"))
out.mkdir(parents=True, exist_ok=True)

# %% A single torus knot: the staircase read off the Alexander polynomial, then the envelope.
print("T(3,7) staircase:", staircase_from_alexander(torus_alexander(3, 7)).generators)
print("T(3,7) upsilon:  ", torus_upsilon(3, 7).to_text())
print("T(4,5) upsilon:  ", torus_upsilon(4, 5).to_text())

# %% Differences of torus knots.  T(3,7) - T(4,5) has the same tau on both
# sides, so Upsilon/t starts at 0; it drops away at the first singularity.
for text in ("T(3,7) - T(4,5)", "T(3,7) - T(2,11)"):
    f = expr_upsilon(parse_expr(text))
    print(f"\n{text}")
    print("  breakpoints:", f.to_text())
    print("  first singularity:", first_singularity(f))
    print("  psi(0, 2/3):", psi(0, Fraction(2, 3), f))
    slug = text.replace(" ", "").replace("(", "").replace(")", "").replace(",", "_")
    (out / f"{slug}.csv").write_text(csv_text(f, Fraction(1, 60)))
    (out / f"{slug}.svg").write_text(svg_text(f, Fraction(1, 120), title=f"Upsilon of {text}"))

print("\nwrote CSV and SVG files to", out)
