"""Acceptance criteria, one check per criterion.

Each check prints a single ``PASS``/``FAIL`` line. Run with ``pytest -s`` to see
them inline, or execute this file directly for the bare table.
"""

import json
import random
import sys
import time
from fractions import Fraction as F
from itertools import permutations
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
import oracles  # noqa: E402

from mysticum import serialize  # noqa: E402
from mysticum.base import (  # noqa: E402
    build_pascal,
    fixture_sextuple,
    random_sextuple,
)
from mysticum.cli import main  # noqa: E402
from mysticum.labels import (  # noqa: E402
    CayleyLabel,
    LetterPerm,
    NumberPerm,
    PascalLabel,
    SteinerLabel,
    complement,
    enumerate_labels,
    hexagon_of_pascal_label,
    zeta,
    zeta_inv,
)
from mysticum.labels import Split  # noqa: E402
from mysticum.mutation import build_multimysticum  # noqa: E402
from mysticum.projective import INF, Line, dependent_triple, incident  # noqa: E402
from mysticum.ranges import proof_witnesses, verify_all, veronese_sequence  # noqa: E402

FIRST_TWELVE = [INF, F(0), F(1), F(1, 2), F(3, 2), F(3, 7), F(11, 7), F(11, 26),
           F(41, 26), F(41, 97), F(153, 97), F(153, 362)]
RANDOM_SEEDS = range(5)
HEIGHT = 8


def _line(n, name, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] AC{n} {name}" + (f": {detail}" if detail else ""))
    return ok


def _emit(capsys, n, name, ok, detail=""):
    if capsys is None:
        return _line(n, name, ok, detail)
    with capsys.disabled():
        print()
        _line(n, name, ok, detail)
    return ok


def check_sequence():
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["sequence", "12"])
    text_ok = code == 0 and buf.getvalue().split() == [
        "inf" if t is INF else str(t) for t in FIRST_TWELVE]
    reps = 200
    t0 = time.perf_counter()
    for _ in range(reps):
        terms = veronese_sequence(12)
    per_call = (time.perf_counter() - t0) / reps
    ok = text_ok and terms == FIRST_TWELVE and per_call < 1e-3
    return ok, f"12 terms exact, {per_call * 1e6:.0f} us per call"


def _theorem_for(s):
    t0 = time.perf_counter()
    m = build_multimysticum(s, HEIGHT)
    summary = verify_all(m, HEIGHT)
    dt = time.perf_counter() - t0
    exact = all(r.coordinates == veronese_sequence(HEIGHT + 3) for r in summary.reports)
    return summary.ok and summary.total == 300 and exact and dt < 30, str(summary), dt


def check_main_theorem():
    rows = []
    ok = True
    sextuples = [fixture_sextuple()] + [random_sextuple(seed) for seed in RANDOM_SEEDS]
    for s in sextuples:
        ok &= all(abs(t.numerator) <= 20 and t.denominator <= 20 for t in s.params)
        good, tally, dt = _theorem_for(s)
        ok &= good
        rows.append(f"{tally} in {dt:.2f}s")
    return ok, f"{len(sextuples)} sextuples at height {HEIGHT}: " + ", ".join(rows)


def check_base_incidences():
    s = fixture_sextuple()
    m = build_multimysticum(s, 0)
    b = m.base
    # Pascal's theorem for every class (build_pascal verifies the third point)
    pascal_ok = all(build_pascal(s, hexagon_of_pascal_label(l)) == p for l, p in b.pascals.items())
    oracle_ok = all(
        build_pascal(s, w) == Line(*c) for w, c in oracles.all_pascal_lines(s.params).items()
    )
    kirk_ok = all(
        sum(incident(k, p) for p in b.pascals.values()) == 3
        and incident(k, b.cayley[CayleyLabel(lbl.rest)])
        for lbl, k in b.kirkmans.items()
    )
    steiner_ok = all(
        incident(n, b.cayley[c]) == (not set(sl.triple) & set(c.triple))
        for sl, n in b.steiner.items() for c in b.cayley
    ) and all(
        incident(b.steiner[SteinerLabel(lbl.rest)], p) for lbl, p in b.pascals.items()
    )
    plucker_ok = all(
        sum(incident(n, l) for n in b.steiner.values()) == 4 for l in b.plucker.values()
    )
    salmon_ok = all(
        sum(incident(n, l) for l in b.cayley.values()) == 4 for n in b.salmon.values()
    )
    counts = [len(b.pascals), len(b.kirkmans), len(b.steiner), len(b.cayley),
              len(b.plucker), len(b.salmon), len(b.meeting)]
    counts_ok = counts == [60, 60, 20, 20, 15, 15, 45]
    distinct = len(set(b.pascals.values())) == 60
    cross = (not any(incident(k, l) for k in b.kirkmans.values() for l in b.plucker.values())
             and not any(incident(n, l) for n in b.salmon.values() for l in b.pascals.values()))
    ok = all([pascal_ok, oracle_ok, kirk_ok, steiner_ok, plucker_ok, salmon_ok,
              counts_ok, distinct, cross])
    return ok, "counts " + "/".join(map(str, counts))


def check_mutation():
    m = build_multimysticum(fixture_sextuple(), HEIGHT)
    b = m.base
    coincide = True
    for i, il in enumerate(m.interlayers):
        upper = m.layers[i + 1]
        for lbl in enumerate_labels("kirkman"):
            trio = [il.elements[Split((lbl.x, u), lbl.pair)] for u in complement(lbl.x, *lbl.pair)]
            coincide &= dependent_triple(*trio)
            if i % 2 == 0:
                coincide &= all(incident(upper.kirkmans[lbl], e) for e in trio)
            else:
                coincide &= all(incident(e, upper.pascals[PascalLabel(lbl.x, lbl.pair)]) for e in trio)
    ninety = all(len(il.elements) == len(set(il.elements.values())) == 90 for il in m.interlayers)
    fixed = all(
        incident(k, b.cayley[CayleyLabel(lbl.rest)])
        and incident(b.steiner[SteinerLabel(lbl.rest)], layer.pascals[PascalLabel(lbl.x, lbl.pair)])
        for layer in m.layers for lbl, k in layer.kirkmans.items()
    )
    ok = coincide and ninety and fixed and len(b.meeting) == 45
    return ok, f"heights 0..{m.height}, {len(m.interlayers)} inter-layers of 90 vs 45 meeting points"


def check_height_independence():
    m = build_multimysticum(fixture_sextuple(), 4)
    ladd = all(m.ladd_line(s, 1) == m.ladd_line(s, 3) for s in enumerate_labels("ladd"))
    node = all(m.veronese_node(s, 0) == m.veronese_node(s, 2) for s in enumerate_labels("veronese"))
    return ladd and node, "45 Ladd lines (i=1 vs 3), 45 Veronese nodes (i=0 vs 2)"


def check_witnesses():
    m = build_multimysticum(fixture_sextuple(), HEIGHT)
    ws = proof_witnesses(m, depth=6, pairs=4)
    sums = ws[2].detail["pair_sums"]
    ok = all(w.ok for w in ws) and sums == ["3"] * 4 and ws[3].detail["cross_ratio"] == "1/2"
    return ok, "; ".join(f"{w.name}={'ok' if w.ok else 'bad'}" for w in ws)


def check_oracle():
    alpha = veronese_sequence(2 + 20)[2:]
    up = oracles.convergents_one_plus_inv_sqrt3(20)[0::2][:10]
    down = oracles.convergents_one_minus_inv_sqrt3(20)[1::2][:10]
    ok = alpha[0::2] == up and alpha[1::2] == down
    return ok, "10 even terms vs 1+1/sqrt3, 10 odd terms vs 1-1/sqrt3"


def check_zeta():
    rng = random.Random(1)
    perms = [LetterPerm(p) for p in permutations(range(6))]
    hom = all(zeta(p * q) == zeta(p) * zeta(q)
              for p, q in ((rng.choice(perms), rng.choice(perms)) for _ in range(500)))
    swap = {(2,): (2, 2, 2), (2, 2, 2): (2,), (3,): (3, 3), (3, 3): (3,), (6,): (2, 3), (2, 3): (6,)}
    table = all(zeta(p).cycle_type() == swap.get(p.cycle_type(), p.cycle_type()) for p in perms)
    named = (zeta_inv(NumberPerm.from_cycles("25")) == LetterPerm.from_cycles("ae", "bd", "cf")
               and zeta(LetterPerm.from_cycles("acebfd")) == NumberPerm.from_cycles("04", "153"))
    return hom and table and named, "500 random pairs, 720-element class table, named images"


def check_determinism():
    import io
    from contextlib import redirect_stdout

    def build():
        buf = io.StringIO()
        with redirect_stdout(buf):
            main(["verify", "--random", "--seed", "3", "--height", "3", "--format", "json"])
        doc = json.loads(buf.getvalue())
        doc.pop("timing")
        return serialize.dumps(doc), doc

    text_a, doc = build()
    text_b, _ = build()
    m = build_multimysticum(random_sextuple(3), 3)
    back = serialize.multimysticum_from_dict(json.loads(serialize.dumps(serialize.multimysticum_to_dict(m))))
    before = [(r.verdict, r.coordinates) for r in verify_all(m, 3).reports]
    after = [(r.verdict, r.coordinates) for r in verify_all(back, 3).reports]
    ok = text_a == text_b and before == after and doc["verdict"]["ok"]
    return ok, f"report bytes equal, {len(after)} verdicts preserved"


CRITERIA = [
    (1, "Veronese sequence", check_sequence),
    (2, "main theorem, 300 ranges", check_main_theorem),
    (3, "base incidence suite", check_base_incidences),
    (4, "mutation suite", check_mutation),
    (5, "height independence", check_height_independence),
    (6, "proof witnesses", check_witnesses),
    (7, "continued-fraction oracle", check_oracle),
    (8, "outer automorphism", check_zeta),
    (9, "determinism and round trip", check_determinism),
]


@pytest.mark.parametrize("n,name,check", CRITERIA, ids=[f"AC{n}" for n, _, _ in CRITERIA])
def test_criterion(n, name, check, capsys):
    ok, detail = check()
    assert _emit(capsys, n, name, ok, detail)


if __name__ == "__main__":
    results = [_line(n, name, *check()) for n, name, check in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
