"""The four families of absolutely invariant ranges and their certification.

A range is an ordered run of collinear points or concurrent lines. Its first
three members fix a projective frame (inf, 0, 1); every later member then has
an exact rational coordinate. All 300 ranges of the multimysticum are
checked term-by-term against the Veronese sequence
``inf, 0, 1, 1/2, 3/2, 3/7, 11/7, ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .labels import (
    CayleyLabel,
    KirkmanLabel,
    OrdinaryMeetingLabel,
    PascalLabel,
    PluckerLabel,
    SalmonLabel,
    Split,
    SteinerLabel,
    enumerate_labels,
)
from .mutation import HeightNotBuilt
from .projective import (
    INF,
    GeometryError,
    Point,
    cross_ratio_lines,
    cross_ratio_points,
    format_scalar,
    incident,
    join,
)

__all__ = [
    "veronese_sequence",
    "RangeSpec",
    "RangeReport",
    "VerificationSummary",
    "Witness",
    "all_range_specs",
    "extract_range",
    "range_coordinates",
    "frame_coordinates",
    "verify_all",
    "proof_witnesses",
    "required_height",
]

KINDS = ("kirkman", "pascal", "meeting", "linking")


def veronese_sequence(n):
    """The first ``n`` terms ``inf, 0, alpha_0, alpha_1, ...``.

    alpha_0 = 1; alpha_i + alpha_{i+1} = 2 for odd i and
    1/alpha_i + 1/alpha_{i+1} = 3 for even i.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    terms = [INF, Fraction(0)]
    alpha = Fraction(1)
    i = 0
    while len(terms) < n:
        terms.append(alpha)
        if i % 2:
            alpha = 2 - alpha
        else:
            alpha = 1 / (3 - 1 / alpha)
        i += 1
    return terms[:n]


@dataclass(frozen=True, order=True)
class RangeSpec:
    """Which range: kind plus its label.

    Kirkman/Pascal ranges are labelled by (x;yz), meeting/linking ranges by
    an ordered split ``xy;zw``.
    """

    kind: str
    label: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown range kind {self.kind!r}")

    @property
    def carrier_label(self):
        if self.kind == "kirkman":
            return CayleyLabel(self.label.rest)
        if self.kind == "pascal":
            return SteinerLabel(self.label.rest)
        if self.kind == "meeting":
            return f"L {self.label.unordered()}"
        return f"N {self.label.unordered()}"

    @property
    def is_pencil(self):
        return self.kind in ("pascal", "linking")

    def __str__(self):
        tag = {"kirkman": "K", "pascal": "P", "meeting": "M", "linking": "L"}[self.kind]
        if self.kind in ("kirkman", "pascal"):
            return f"{tag}({self.label.x};{''.join(map(str, self.label.pair))})"
        return f"{tag}({self.label})"

    @classmethod
    def parse(cls, text):
        text = text.strip()
        kinds = {"K": "kirkman", "P": "pascal", "M": "meeting", "L": "linking"}
        kind = kinds[text[0]]
        body = text[2:-1]
        if kind in ("kirkman", "pascal"):
            x, pair = body.split(";")
            lbl = (KirkmanLabel if kind == "kirkman" else PascalLabel)(int(x), tuple(pair))
        else:
            a, b = body.split(";")
            lbl = Split(tuple(a), tuple(b))
        return cls(kind, lbl)


def all_range_specs():
    """60 Kirkman + 60 Pascal + 90 meeting + 90 linking specs."""
    specs = [RangeSpec("kirkman", l) for l in enumerate_labels("kirkman")]
    specs += [RangeSpec("pascal", l) for l in enumerate_labels("pascal")]
    splits = enumerate_labels("split")
    specs += [RangeSpec("meeting", s) for s in splits]
    specs += [RangeSpec("linking", s) for s in splits]
    return specs


def required_height(spec, depth):
    """Tower height needed to read ``depth + 3`` members of ``spec``."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if spec.kind in ("kirkman", "pascal"):
        return depth
    if spec.kind == "meeting":
        # alpha_k (k >= 1) lives on inter-layer 2*ceil(k/2) - 1; the
        # Plucker-Ladd node already needs inter-layer 1
        return max(2, 2 * ((depth + 1) // 2))
    # linking: alpha_k lives on inter-layer 2*floor(k/2)
    return 2 * (depth // 2) + 1


def carrier(m, spec):
    """The line (point ranges) or point (line ranges) every member shares."""
    if spec.kind == "kirkman":
        return m.base.cayley[spec.carrier_label]
    if spec.kind == "pascal":
        return m.base.steiner[spec.carrier_label]
    if spec.kind == "meeting":
        return m.ladd_line(spec.label)
    return m.veronese_node(spec.label)


def extract_range(m, spec, depth):
    """The ``depth + 3`` leading members of a range.

    Kirkman (x;yz):  N yz, N xyz, K(x;yz) at heights 0, 1, ..., depth
    Pascal (x;yz):   L xyz, L yz, P(x;yz) at heights 0, 1, ..., depth
    Meeting xy;zw:   Salmon node of the rest, Plucker-Ladd node, xy.zw,
                     then p_1, q_1, p_3, q_3, ...
    Linking xy;zw:   Salmon-Veronese line, Plucker line of the rest,
                     then r_0, s_0, r_2, s_2, ...
    where p_i = zw(i+1).xy(i), q_i = xy(i+1).zw(i) and likewise r/s.
    """
    need = required_height(spec, depth)
    if need > m.height:
        raise HeightNotBuilt(
            f"{spec} at depth {depth} needs height {need}, have {m.height}"
        )
    lbl = spec.label
    count = depth + 3
    if spec.kind == "kirkman":
        head = [m.base.salmon[SalmonLabel(lbl.pair)],
                m.base.steiner[SteinerLabel((lbl.x, *lbl.pair))]]
        return head + [m.kirkman(lbl, i) for i in range(depth + 1)]
    if spec.kind == "pascal":
        head = [m.base.cayley[CayleyLabel((lbl.x, *lbl.pair))],
                m.base.plucker[PluckerLabel(lbl.pair)]]
        return head + [m.pascal(lbl, i) for i in range(depth + 1)]
    rest = lbl.rest
    swapped = lbl.swapped()
    if spec.kind == "meeting":
        out = [m.base.salmon[SalmonLabel(rest)],
               m.plucker_ladd_node(lbl),
               m.base.meeting[OrdinaryMeetingLabel(lbl.first, lbl.second)]]
        i = 1
    else:
        out = [m.salmon_veronese_line(lbl), m.base.plucker[PluckerLabel(rest)]]
        i = 0
    while len(out) < count:
        inter = m.interlayer(i).elements
        out.append(inter[swapped])
        out.append(inter[lbl])
        i += 2
    return out[:count]


def frame_coordinates(elements, frame=None):
    """Coordinates of ``elements`` in the frame of ``frame`` (default: first three)."""
    frame = list(elements[:3] if frame is None else frame)
    if isinstance(frame[0], Point):
        return [cross_ratio_points(*frame, e) for e in elements]
    return [cross_ratio_lines(*frame, e) for e in elements]


@dataclass(frozen=True)
class RangeReport:
    spec: RangeSpec
    coordinates: list
    expected: list
    verdict: bool
    mismatch_index: int | None = None
    carrier_ok: bool = True

    def to_dict(self):
        d = {
            "range": str(self.spec),
            "kind": self.spec.kind,
            "carrier": str(self.spec.carrier_label),
            "coordinates": [format_scalar(c) for c in self.coordinates],
            "verdict": self.verdict,
        }
        if self.mismatch_index is not None:
            k = self.mismatch_index
            d["mismatch"] = {
                "index": k,
                "found": (format_scalar(self.coordinates[k])
                          if k < len(self.coordinates) else "undefined"),
                "expected": format_scalar(self.expected[k]),
            }
        return d


def range_coordinates(m, spec, depth):
    """Exact coordinates of one range and their comparison with the sequence."""
    elements = extract_range(m, spec, depth)
    base = carrier(m, spec)
    if spec.is_pencil:
        carrier_ok = all(incident(base, e) for e in elements)
    else:
        carrier_ok = all(incident(e, base) for e in elements)
    expected = veronese_sequence(len(elements))
    coords = []
    mismatch = None
    for k, e in enumerate(elements):
        try:
            value = frame_coordinates([e], frame=elements[:3])[0]
        except GeometryError:
            # a member off the carrier or a collapsed frame: no coordinate
            mismatch = k
            break
        coords.append(value)
        if mismatch is None and value != expected[k]:
            mismatch = k
    if mismatch is None and not carrier_ok:
        mismatch = 0
    return RangeReport(spec, coords, expected, mismatch is None, mismatch, carrier_ok)


@dataclass
class VerificationSummary:
    depth: int
    reports: list = field(default_factory=list)

    @property
    def passed(self):
        return sum(r.verdict for r in self.reports)

    @property
    def total(self):
        return len(self.reports)

    @property
    def ok(self):
        return self.passed == self.total

    def by_kind(self):
        out = {k: [0, 0] for k in KINDS}
        for r in self.reports:
            out[r.spec.kind][0] += r.verdict
            out[r.spec.kind][1] += 1
        return {k: f"{a}/{b}" for k, (a, b) in out.items()}

    def failures(self):
        return [r for r in self.reports if not r.verdict]

    def __str__(self):
        return f"{self.passed}/{self.total}"


def verify_all(m, depth, specs=None):
    """Check every range to ``depth`` (the tower is extended if it is too short).

    Meeting and linking ranges reach one inter-layer past ``depth``, so the
    tower may need up to ``depth + 1`` layers.
    """
    specs = all_range_specs() if specs is None else specs
    need = max((required_height(s, depth) for s in specs), default=0)
    m = m.elevated_to(need)
    summary = VerificationSummary(depth)
    for spec in specs:
        summary.reports.append(range_coordinates(m, spec, depth))
    return summary


@dataclass(frozen=True)
class Witness:
    name: str
    ok: bool
    detail: dict

    def to_dict(self):
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _fmt(values):
    return [format_scalar(v) for v in values]


def _alignment_witness(m, depth):
    # K-range (2;04) on Cayley L135 and P-range (2;15) through Steiner N034
    k_spec = RangeSpec("kirkman", KirkmanLabel(2, (0, 4)))
    p_spec = RangeSpec("pascal", PascalLabel(2, (1, 5)))
    nodes = extract_range(m, k_spec, depth)
    lines = extract_range(m, p_spec, depth)
    columns = [incident(e, q) for e, q in zip(nodes, lines)]
    centre = carrier(m, p_spec)
    axis = carrier(m, k_spec)
    k_coords = frame_coordinates(nodes)
    p_coords = frame_coordinates(lines)
    ok = all(columns) and not incident(centre, axis) and k_coords == p_coords
    return Witness("alignment K(2;04) ~ P(2;15)", ok, {
        "columns_incident": columns,
        "centre_off_axis": not incident(centre, axis),
        "coordinates": _fmt(k_coords),
    })


def _ladd_involution_witness(m, depth):
    top = RangeSpec("meeting", Split((1, 2), (3, 4)))
    bottom = RangeSpec("meeting", Split((3, 4), (1, 2)))
    first = extract_range(m, top, depth)
    second = extract_range(m, bottom, depth)
    z = frame_coordinates(first)
    w = frame_coordinates(second, frame=first[:3])
    # f(z) = 2 - z must carry the top row onto the bottom row wherever both are
    # defined by the pairing: index 0 (Salmon node), 2 (xy.zw), and 3 onwards.
    checks = []
    for k in [0, 2] + list(range(3, len(z))):
        image = INF if z[k] is INF else 2 - z[k]
        checks.append(image == w[k])
    same_ends = first[0] == second[0] and first[2] == second[2]
    pairs_swapped = all(
        first[k] == second[k + 1] and first[k + 1] == second[k]
        for k in range(3, len(first) - 1, 2)
    )
    ok = all(checks) and same_ends and pairs_swapped and first[1] != second[1]
    return Witness("Ladd involution z -> 2 - z on L 12.34", ok, {
        "top": _fmt(z),
        "bottom_in_top_frame": _fmt(w),
        "mu": format_scalar(w[1]),
    })


def _linking_involution_witness(m, pairs):
    depth = 2 * pairs - 1
    top = RangeSpec("linking", Split((1, 2), (3, 4)))
    bottom = RangeSpec("linking", Split((3, 4), (1, 2)))
    first = extract_range(m, top, depth)
    second = extract_range(m, bottom, depth)
    z = frame_coordinates(first)
    w = frame_coordinates(second, frame=first[:3])
    # f(z) = z / (r z - 1) swaps r_{2m} and s_{2m}; r = 1/z + 1/f(z) per pair.
    sums = []
    for k in range(2, len(z) - 1, 2):
        sums.append(1 / z[k] + 1 / z[k + 1])
    r = sums[0] if sums else None
    ok = first[1] == second[1] and len(set(sums)) == 1 and r == 3
    if ok:
        f = lambda v: INF if r * v == 1 else v / (r * v - 1)
        ok = all(f(z[k]) == w[k] for k in range(1, len(z)))
    return Witness("linking involution z -> z/(3z - 1) at N 12.34", ok, {
        "pair_sums": _fmt(sums),
        "r": format_scalar(r) if r is not None else None,
        "top": _fmt(z),
        "bottom_in_top_frame": _fmt(w),
    })


def _harmonic_witness(m):
    centre = m.base.meeting[OrdinaryMeetingLabel((0, 1), (4, 5))]
    first = extract_range(m, RangeSpec("kirkman", KirkmanLabel(0, (2, 3))), 1)
    second = extract_range(m, RangeSpec("kirkman", KirkmanLabel(1, (2, 3))), 1)
    rays = [join(centre, p) for p in first]
    rays2 = [join(centre, p) for p in second]
    expected_rays = [
        m.ladd_line(Split((0, 1), (4, 5))),
        m.base.pascals[PascalLabel(1, (4, 5))],
        m.base.pascals[PascalLabel(0, (4, 5))],
        m.linking_element(Split((0, 1), (2, 3)), 0),
    ]
    swapped = rays2 == [rays[0], rays[2], rays[1], rays[3]]
    point_ratio = cross_ratio_points(*first)
    line_ratio = cross_ratio_lines(*rays)
    ok = (swapped and rays == expected_rays
          and point_ratio == Fraction(1, 2) and line_ratio == Fraction(1, 2))
    return Witness("harmonic quadruple through 01.45", ok, {
        "rays_named": rays == expected_rays,
        "middle_pair_swapped": swapped,
        "cross_ratio": format_scalar(point_ratio),
        "pencil_cross_ratio": format_scalar(line_ratio),
    })


def proof_witnesses(m, depth=6, pairs=4):
    """Exact checks of the devices behind the main theorem.

    alignment of a Kirkman range with a Pascal range; the involution 2 - z on
    a Ladd line; the involution z/(rz - 1) on a linking pencil with r = 3 over
    ``pairs`` consecutive pairs; and the harmonic quadruple through 01.45.
    """
    need = max(required_height(RangeSpec("meeting", Split((1, 2), (3, 4))), depth),
               required_height(RangeSpec("linking", Split((1, 2), (3, 4))), 2 * pairs - 1))
    m = m.elevated_to(need)
    return [
        _alignment_witness(m, depth),
        _ladd_involution_witness(m, depth),
        _linking_involution_witness(m, pairs),
        _harmonic_witness(m),
    ]
