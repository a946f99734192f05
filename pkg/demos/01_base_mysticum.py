"""Sixty Pascal lines from six points on a conic, and what they meet in.

Run: python demos/01_base_mysticum.py
"""

from mysticum import build_base, fixture_sextuple, validate_general_position
from mysticum.labels import KirkmanLabel, PascalLabel, hexagon_of_pascal_label
from mysticum.projective import incident

s = fixture_sextuple()
print("sextuple parameters:", ", ".join(str(t) for t in s.params))

hm = build_base(s)
for family, n in hm.counts().items():
    print(f"  {family:8s} {n}")

# every Pascal line carries a hexagon; the label is read off through zeta
p = PascalLabel(1, (2, 3))
print(f"\n{p} is the Pascal line of hexagon {hexagon_of_pascal_label(p)}")
print("  coordinates", hm.pascals[p])
for pair in ((0, 4), (0, 5), (4, 5)):
    k = KirkmanLabel(1, pair)
    print(f"  contains {k}: {incident(hm.kirkmans[k], hm.pascals[p])}")

# the build checks each theorem as it goes; this scans for stray incidences too
report = validate_general_position(s, hm)
print(f"\nscanned {report.pairs_checked} node/line pairs, no undocumented incidence")
