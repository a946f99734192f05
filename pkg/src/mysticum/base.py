"""The hexagrammum mysticum of six points on the conic xz = y^2.

Every element fixed by a concurrency or collinearity theorem is computed
from two of its defining elements and then checked against the others, so a
successful build is also an exact check of the classical incidence theorems.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .labels import (
    CayleyLabel,
    KirkmanLabel,
    LETTERS,
    OrdinaryMeetingLabel,
    PascalLabel,
    PluckerLabel,
    SalmonLabel,
    SteinerLabel,
    chords_of_meeting,
    complement,
    enumerate_labels,
    hexagon_of_pascal_label,
    hexagon_permutation,
)
from .projective import (
    INF,
    GeometryError,
    conic_point,
    incident,
    join,
    meet,
    parse_scalar,
)

__all__ = [
    "DegenerateSextuple",
    "PascalViolation",
    "Sextuple",
    "BaseMysticum",
    "ValidationReport",
    "build_pascal",
    "build_base",
    "ordinary_meeting_point",
    "validate_general_position",
    "documented_incidence",
    "random_sextuple",
    "find_fixture",
    "FIXTURE_PARAMS",
    "fixture_sextuple",
]


class DegenerateSextuple(GeometryError):
    """A construction step failed or an unexpected coincidence appeared."""

    def __init__(self, step, detail=""):
        self.step = step
        self.detail = detail
        msg = f"degenerate sextuple at step {step!r}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class PascalViolation(DegenerateSextuple):
    pass


class Sextuple:
    """Six distinct parameters on the conic, one per letter a..f."""

    __slots__ = ("params", "points")

    def __init__(self, params):
        params = tuple(p if p is INF else parse_scalar(p) for p in params)
        if len(params) != 6:
            raise ValueError("a sextuple needs exactly six parameters")
        if len(set(params)) != 6:
            raise DegenerateSextuple("distinct parameters", "two parameters coincide")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "points", tuple(conic_point(t) for t in params))

    def __setattr__(self, name, value):
        raise AttributeError("Sextuple is immutable")

    def __eq__(self, other):
        return isinstance(other, Sextuple) and other.params == self.params

    def __hash__(self):
        return hash(self.params)

    def __repr__(self):
        return "Sextuple(%s)" % ", ".join(str(p) for p in self.params)

    def point(self, letter):
        return self.points[LETTERS.index(letter)]

    def chord(self, letters):
        a, b = letters
        return join(self.point(a), self.point(b))


def _step(name, fn, *args):
    try:
        return fn(*args)
    except GeometryError as exc:
        if isinstance(exc, DegenerateSextuple):
            raise
        raise DegenerateSextuple(name, str(exc)) from exc


def _common_point(step, lines):
    p = _step(step, meet, lines[0], lines[1])
    for extra in lines[2:]:
        if not incident(p, extra):
            raise DegenerateSextuple(step, "lines are not concurrent")
    return p


def _common_line(step, points):
    l = _step(step, join, points[0], points[1])
    for extra in points[2:]:
        if not incident(extra, l):
            raise DegenerateSextuple(step, "points are not collinear")
    return l


def build_pascal(s, word):
    """Pascal line of the inscribed hexagon ``word`` (e.g. ``"abcdef"``)."""
    hexagon_permutation(word)
    step = f"Pascal L({word})"
    chord = lambda i, j: _step(step, s.chord, word[i % 6] + word[j % 6])
    pts = [
        _step(step, meet, chord(k, k + 1), chord(k + 3, k + 4))
        for k in range(3)
    ]
    line = _step(step, join, pts[0], pts[1])
    if not incident(pts[2], line):
        raise PascalViolation(step, "opposite-side intersections are not collinear")
    return line


@dataclass(frozen=True)
class BaseMysticum:
    sextuple: Sextuple
    pascals: dict
    kirkmans: dict
    steiner: dict
    cayley: dict
    plucker: dict
    salmon: dict
    meeting: dict = field(default_factory=dict)

    def element(self, label):
        """Look up any base element by its label object."""
        for table in (self.pascals, self.kirkmans, self.steiner, self.cayley,
                      self.plucker, self.salmon, self.meeting):
            hit = table.get(label)
            if hit is not None:
                return hit
        raise KeyError(label)

    def counts(self):
        return {
            "pascal": len(self.pascals),
            "kirkman": len(self.kirkmans),
            "steiner": len(self.steiner),
            "cayley": len(self.cayley),
            "plucker": len(self.plucker),
            "salmon": len(self.salmon),
            "meeting": len(self.meeting),
        }

    def points(self):
        """All base points keyed by label, in a stable order."""
        out = {}
        for table in (self.kirkmans, self.steiner, self.salmon, self.meeting):
            out.update(table)
        return out

    def lines(self):
        out = {}
        for table in (self.pascals, self.cayley, self.plucker):
            out.update(table)
        return out


def kirkmans_from_pascals(pascals, step_prefix, cls=KirkmanLabel):
    """K(x;yz) is the common point of the three P(x;uv) with uv inside the rest."""
    out = {}
    for lbl in enumerate_labels("kirkman"):
        trio = [pascals[PascalLabel(lbl.x, uv)] for uv in combinations(lbl.rest, 2)]
        out[lbl] = _common_point(f"{step_prefix}{lbl}", trio)
    return out


def pascals_from_kirkmans(kirkmans, step_prefix):
    """P(x;yz) is the line through the three K(x;uv) with uv inside the rest."""
    out = {}
    for lbl in enumerate_labels("pascal"):
        trio = [kirkmans[KirkmanLabel(lbl.x, uv)] for uv in combinations(lbl.rest, 2)]
        out[lbl] = _common_line(f"{step_prefix}{lbl}", trio)
    return out


def steiner_trio(triple):
    """Labels (x;yz) whose symbols are exactly the complement of ``triple``."""
    u, v, w = complement(*triple)
    return [(u, (v, w)), (v, (u, w)), (w, (u, v))]


def build_base(s):
    """Construct the 95 points and 95 lines plus the 45 ordinary meeting points."""
    pascals = {
        lbl: build_pascal(s, hexagon_of_pascal_label(lbl))
        for lbl in enumerate_labels("pascal")
    }
    kirkmans = kirkmans_from_pascals(pascals, "Kirkman ")
    steiner, cayley = {}, {}
    for lbl in enumerate_labels("steiner"):
        trio = steiner_trio(lbl.triple)
        steiner[lbl] = _common_point(
            f"Steiner {lbl}", [pascals[PascalLabel(x, p)] for x, p in trio]
        )
        cl = CayleyLabel(lbl.triple)
        cayley[cl] = _common_line(
            f"Cayley {cl}", [kirkmans[KirkmanLabel(x, p)] for x, p in trio]
        )
    plucker, salmon = {}, {}
    for lbl in enumerate_labels("plucker"):
        four = [SteinerLabel(t) for t in combinations(complement(*lbl.pair), 3)]
        plucker[lbl] = _common_line(f"Plucker {lbl}", [steiner[t] for t in four])
        sl = SalmonLabel(lbl.pair)
        salmon[sl] = _common_point(
            f"Salmon {sl}", [cayley[CayleyLabel(t.triple)] for t in four]
        )
    hm = BaseMysticum(s, pascals, kirkmans, steiner, cayley, plucker, salmon)
    for lbl in enumerate_labels("meeting"):
        hm.meeting[lbl] = ordinary_meeting_point(hm, lbl)
    return hm


def meeting_pascals(lbl):
    """The four Pascal labels through the ordinary meeting point xy.zw."""
    (x, y), (z, w) = lbl.first, lbl.second
    return [
        PascalLabel(x, (z, w)),
        PascalLabel(y, (z, w)),
        PascalLabel(z, (x, y)),
        PascalLabel(w, (x, y)),
    ]


def ordinary_meeting_point(hm, lbl):
    """Chord intersection named ``xy.zw``, checked on its four Pascals."""
    if not isinstance(lbl, OrdinaryMeetingLabel):
        lbl = OrdinaryMeetingLabel(lbl.first, lbl.second)
    step = f"meeting point {lbl}"
    c1, c2 = chords_of_meeting(lbl)
    s = hm.sextuple
    p = _step(step, meet, _step(step, s.chord, c1), _step(step, s.chord, c2))
    for pl in meeting_pascals(lbl):
        if not incident(p, hm.pascals[pl]):
            raise DegenerateSextuple(step, f"not on {pl}")
    return p


def documented_incidence(point_label, line_label):
    """Whether the classical theorems force ``point_label`` onto ``line_label``.

    Covers the Kirkman, Steiner and Salmon nodes against the Pascal, Cayley
    and Plucker lines of the base mysticum.
    """
    P, L = point_label, line_label
    if isinstance(P, KirkmanLabel):
        if isinstance(L, PascalLabel):
            return L.x == P.x and set(L.pair) <= set(P.rest)
        if isinstance(L, CayleyLabel):
            return set(L.triple) == set(P.rest)
        return False
    if isinstance(P, SalmonLabel):
        if isinstance(L, CayleyLabel):
            return not set(P.pair) & set(L.triple)
        return False
    if isinstance(P, SteinerLabel):
        if isinstance(L, PascalLabel):
            return set(P.triple) == set(L.rest)
        if isinstance(L, CayleyLabel):
            return not set(P.triple) & set(L.triple)
        if isinstance(L, PluckerLabel):
            return not set(P.triple) & set(L.pair)
        return False
    raise TypeError(f"not a base node label: {P!r}")


@dataclass(frozen=True)
class ValidationReport:
    params: tuple
    pairs_checked: int
    distinct_points: int
    distinct_lines: int
    meeting_points_checked: int

    @property
    def ok(self):
        return True


def validate_general_position(s, hm=None):
    """Check that ``s`` is in general position; raise DegenerateSextuple if not.

    Runs the full construction (if ``hm`` is not supplied), then scans every
    node/line pair of the 95 + 95 elements against the documented incidence
    list, and checks each ordinary meeting point lies on exactly four Pascals.
    """
    if not isinstance(s, Sextuple):
        s = Sextuple(s)
    if hm is None:
        hm = build_base(s)
    if len(set(hm.pascals.values())) != 60:
        raise DegenerateSextuple("distinct Pascals", "two Pascal lines coincide")
    nodes = {**hm.kirkmans, **hm.steiner, **hm.salmon}
    lines = {**hm.pascals, **hm.cayley, **hm.plucker}
    if len(set(nodes.values())) != 95:
        raise DegenerateSextuple("distinct nodes", "two nodes coincide")
    if len(set(lines.values())) != 95:
        raise DegenerateSextuple("distinct lines", "two lines coincide")
    pairs = 0
    for pl, p in nodes.items():
        for ll, l in lines.items():
            pairs += 1
            if incident(p, l) != documented_incidence(pl, ll):
                what = "unexpected" if incident(p, l) else "missing"
                raise DegenerateSextuple("incidence scan", f"{what} incidence {pl} / {ll}")
    if len(set(hm.meeting.values())) != 45:
        raise DegenerateSextuple("distinct meeting points", "two meeting points coincide")
    for ml, m in hm.meeting.items():
        on = sum(incident(m, l) for l in hm.pascals.values())
        if on != 4:
            raise DegenerateSextuple("meeting point scan", f"{ml} lies on {on} Pascals")
    return ValidationReport(s.params, pairs, len(nodes), len(lines), len(hm.meeting))


def random_sextuple(seed=None, bound=20, rng=None):
    """Six distinct rationals p/q with |p|, q <= bound, in general position.

    Draws are repeated until validation passes, so a fixed seed always yields
    the same sextuple.
    """
    rng = rng or random.Random(seed)
    while True:
        params = set()
        while len(params) < 6:
            params.add(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))
        s = Sextuple(sorted(params))
        try:
            validate_general_position(s)
        except DegenerateSextuple:
            continue
        return s


def find_fixture(max_height=8):
    """First increasing integer sextuple (by largest entry, then lexicographic)
    that is in general position and survives mutation up to ``max_height``."""
    from .mutation import build_multimysticum, MutationDegeneracy

    n = 5
    while True:
        for combo in combinations(range(n), 5):
            params = combo + (n,)
            try:
                s = Sextuple(params)
                hm = build_base(s)
                validate_general_position(s, hm)
                build_multimysticum(s, max_height, base=hm)
            except (DegenerateSextuple, MutationDegeneracy):
                continue
            return s
        n += 1


FIXTURE_PARAMS = (0, 1, 2, 6, 7, 9)


def fixture_sextuple():
    return Sextuple(FIXTURE_PARAMS)
