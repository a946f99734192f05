"""Climbing the tower: linking lines, new Kirkmans, meeting points, new Pascals.

Run: python demos/02_mutation_tower.py
"""

from mysticum import build_multimysticum, fixture_sextuple
from mysticum.labels import CayleyLabel, KirkmanLabel, Split

m = build_multimysticum(fixture_sextuple(), 6)

k = KirkmanLabel(1, (3, 4))
axis = m.base.cayley[CayleyLabel(k.rest)]
print(f"{k} at each height, all on L {''.join(map(str, k.rest))}:")
for i in range(m.height + 1):
    p = m.kirkman(k, i)
    bits = max(abs(c) for c in p.coords).bit_length()
    print(f"  height {i}: {p}  ({bits} bits)")

for il in m.interlayers[:3]:
    print(f"inter-layer {il.lower}->{il.lower + 1}: 90 {il.kind} elements")

s = Split((1, 2), (3, 4))
print("\nLadd line L 12.34 from odd heights 1, 3, 5:")
print("  ", {m.ladd_line(s, i) for i in (1, 3, 5)})
print("Veronese node N 12.34 from even heights 0, 2, 4:")
print("  ", {m.veronese_node(s, i) for i in (0, 2, 4)})
