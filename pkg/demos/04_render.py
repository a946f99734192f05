"""Pictures: the sixty Pascals, and one Kirkman range on its Cayley line.

Run: python demos/04_render.py [outdir]
"""

import sys
from pathlib import Path

from mysticum import RangeSpec, build_multimysticum, extract_range, fixture_sextuple
from mysticum.ranges import carrier
from mysticum.render import Drawable, collect_elements, render_svg, select

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)
m = build_multimysticum(fixture_sextuple(), 4)

pascals = select(collect_elements(m, (0,)), "P *")
(out / "pascals.svg").write_text(render_svg(pascals, m.sextuple, show_labels=False))

spec = RangeSpec.parse("K(3;05)")
members = [Drawable(f"{spec}[{k}]", e, k - 2 if k >= 2 else None)
           for k, e in enumerate(extract_range(m, spec, 4))]
svg = render_svg(members, m.sextuple, carrier=Drawable("carrier", carrier(m, spec)), title=str(spec))
(out / "kirkman_range.svg").write_text(svg)
print("wrote", out / "pascals.svg", "and", out / "kirkman_range.svg")
