"""Every one of the 300 ranges reads off the same sequence.

Run: python demos/03_ranges_and_theorem.py
"""

import time

from mysticum import (
    RangeSpec,
    build_multimysticum,
    proof_witnesses,
    random_sextuple,
    range_coordinates,
    verify_all,
    veronese_sequence,
)
from mysticum.projective import format_scalar

print("sequence:", " ".join(format_scalar(t) for t in veronese_sequence(12)))

m = build_multimysticum(random_sextuple(seed=42), 8)
print("random sextuple:", ", ".join(str(t) for t in m.sextuple.params))

for text in ("K(3;05)", "P(3;05)", "M(12;34)", "L(12;34)"):
    r = range_coordinates(m, RangeSpec.parse(text), 6)
    print(f"  {text:9s}", " ".join(format_scalar(c) for c in r.coordinates))

t0 = time.perf_counter()
summary = verify_all(m, 8)
print(f"\nall ranges at depth 8: {summary} in {time.perf_counter() - t0:.2f}s")
print("  ", summary.by_kind())

for w in proof_witnesses(m):
    print(f"  {'ok ' if w.ok else 'BAD'} {w.name}")
