"""Veronese mutations: the infinite tower of Kirkman/Pascal layers.

From an even height the Kirkman nodes are joined in pairs by 90 linking
lines; three of these meet in each new Kirkman node. From an odd height the
Pascal lines are intersected in pairs in 90 meeting points; three of these
lie on each new Pascal line. Ladd lines and Veronese nodes tie consecutive
inter-layers together and do not depend on the height used to build them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .base import (
    build_base,
    kirkmans_from_pascals,
    pascals_from_kirkmans,
    DegenerateSextuple,
)
from .labels import (
    CayleyLabel,
    HigherMeetingLabel,
    KirkmanLabel,
    LaddLabel,
    LinkingLabel,
    PascalLabel,
    PluckerLabel,
    SalmonLabel,
    Split,
    SteinerLabel,
    VeroneseNodeLabel,
    complement,
    enumerate_labels,
)
from .projective import GeometryError, incident, join, meet

__all__ = [
    "MutationDegeneracy",
    "HeightNotBuilt",
    "ParityMismatch",
    "Layer",
    "InterLayer",
    "Multimysticum",
    "elevate",
    "build_multimysticum",
    "DEFAULT_MAX_HEIGHT",
]

DEFAULT_MAX_HEIGHT = 8


class MutationDegeneracy(GeometryError):
    def __init__(self, step, detail=""):
        self.step = step
        self.detail = detail
        msg = f"mutation degenerates at {step!r}"
        super().__init__(f"{msg}: {detail}" if detail else msg)


class HeightNotBuilt(LookupError):
    pass


class ParityMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Layer:
    height: int
    kirkmans: dict
    pascals: dict


@dataclass(frozen=True)
class InterLayer:
    """The 90 elements between heights ``lower`` and ``lower + 1``.

    Keys are :class:`Split` objects ``xy;zw`` standing for ``xy(i+1).zw(i)``.
    Even ``lower``: linking lines. Odd ``lower``: higher meeting points.
    """

    lower: int
    elements: dict

    @property
    def kind(self):
        return "meeting" if self.lower % 2 else "linking"

    def label(self, split):
        cls = HigherMeetingLabel if self.lower % 2 else LinkingLabel
        return cls(split.first, split.second, self.lower)


def _rebrand(exc, step):
    if isinstance(exc, DegenerateSextuple):
        return MutationDegeneracy(exc.step, exc.detail)
    return MutationDegeneracy(step, str(exc))


def _interlayer(layer):
    i = layer.height
    out = {}
    for sp in enumerate_labels("split"):
        z, w = sp.second
        try:
            if i % 2 == 0:
                # xy(i+1).zw(i) joins K(z;xy) and K(w;xy)
                out[sp] = join(
                    layer.kirkmans[KirkmanLabel(z, sp.first)],
                    layer.kirkmans[KirkmanLabel(w, sp.first)],
                )
            else:
                # xy(i+1).zw(i) is where P(z;xy) meets P(w;xy)
                out[sp] = meet(
                    layer.pascals[PascalLabel(z, sp.first)],
                    layer.pascals[PascalLabel(w, sp.first)],
                )
        except GeometryError as exc:
            raise _rebrand(exc, f"{InterLayer(i, {}).label(sp)}") from exc
    if len(set(out.values())) != 90:
        raise MutationDegeneracy(f"inter-layer {i}", "elements are not pairwise distinct")
    return InterLayer(i, out)


def _upper_trio(x, pair, inter):
    # the three xu(i+1).yz(i) with u outside {x, y, z}
    return [inter.elements[Split((x, u), pair)] for u in complement(x, *pair)]


def _next_layer(layer, inter):
    i = layer.height
    new = i + 1
    try:
        if i % 2 == 0:
            kirkmans = {}
            for lbl in enumerate_labels("kirkman"):
                trio = _upper_trio(lbl.x, lbl.pair, inter)
                step = f"{lbl} at height {new}"
                p = meet(trio[0], trio[1])
                if not incident(p, trio[2]):
                    raise MutationDegeneracy(step, "linking lines are not concurrent")
                kirkmans[lbl] = p
            pascals = pascals_from_kirkmans(kirkmans, f"height {new} ")
        else:
            pascals = {}
            for lbl in enumerate_labels("pascal"):
                trio = _upper_trio(lbl.x, lbl.pair, inter)
                step = f"{lbl} at height {new}"
                l = join(trio[0], trio[1])
                if not incident(trio[2], l):
                    raise MutationDegeneracy(step, "meeting points are not collinear")
                pascals[lbl] = l
            kirkmans = kirkmans_from_pascals(pascals, f"height {new} ")
    except MutationDegeneracy:
        raise
    except GeometryError as exc:
        raise _rebrand(exc, f"height {new}") from exc
    if len(set(kirkmans.values())) != 60 or len(set(pascals.values())) != 60:
        raise MutationDegeneracy(f"height {new}", "layer elements are not pairwise distinct")
    return Layer(new, kirkmans, pascals)


@dataclass(frozen=True)
class Multimysticum:
    """The fixed part plus layers 0..height and the inter-layers between them.

    Instances are never mutated; :meth:`elevate` returns an extended copy that
    shares all existing data.
    """

    base: object
    layers: tuple
    interlayers: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def height(self):
        return len(self.layers) - 1

    @property
    def sextuple(self):
        return self.base.sextuple

    def elevate(self):
        top = self.layers[-1]
        inter = _interlayer(top)
        layer = _next_layer(top, inter)
        _check_fixed_incidences(self.base, layer)
        return Multimysticum(
            self.base, self.layers + (layer,), self.interlayers + (inter,)
        )

    def elevated_to(self, height):
        m = self
        while m.height < height:
            m = m.elevate()
        return m

    def layer(self, i):
        if not 0 <= i <= self.height:
            raise HeightNotBuilt(f"height {i} not built (have 0..{self.height})")
        return self.layers[i]

    def kirkman(self, lbl, i=0):
        if not isinstance(lbl, KirkmanLabel):
            lbl = KirkmanLabel(lbl.x, lbl.pair)
        return self.layer(i).kirkmans[lbl]

    def pascal(self, lbl, i=0):
        if not isinstance(lbl, PascalLabel):
            lbl = PascalLabel(lbl.x, lbl.pair)
        return self.layer(i).pascals[lbl]

    def interlayer(self, i):
        if not 0 <= i < len(self.interlayers):
            raise HeightNotBuilt(
                f"inter-layer {i}->{i + 1} not built (height is {self.height})"
            )
        return self.interlayers[i]

    def linking_element(self, lbl, i=None):
        """Linking line (even i) or higher meeting point (odd i).

        ``lbl`` may be a LinkingLabel/HigherMeetingLabel carrying its own
        height, or a Split together with ``i``.
        """
        if isinstance(lbl, Split):
            if i is None:
                raise ValueError("a height is required with a Split")
            split = lbl
        else:
            if i is not None and i != lbl.height:
                raise ParityMismatch(f"label height {lbl.height} differs from {i}")
            i = lbl.height
            want = HigherMeetingLabel if i % 2 else LinkingLabel
            if not isinstance(lbl, want):
                raise ParityMismatch(f"{type(lbl).__name__} at height {i}")
            split = lbl.split
        return self.interlayer(i).elements[split]

    def _pair_through(self, split, i):
        inter = self.interlayer(i)
        a = inter.elements[split]
        b = inter.elements[split.swapped()]
        return a, b

    def ladd_line(self, lbl, height=None):
        """Line through xy(i+1).zw(i) and zw(i+1).xy(i) for odd i (default 1)."""
        split = _as_split(lbl)
        i = 1 if height is None else height
        if i % 2 == 0:
            raise ParityMismatch("Ladd lines come from odd inter-layers")
        key = ("ladd", split.unordered(), i)
        if key not in self._cache:
            a, b = self._pair_through(split, i)
            self._cache[key] = join(a, b)
        return self._cache[key]

    def veronese_node(self, lbl, height=None):
        """Meet of xy(i+1).zw(i) and zw(i+1).xy(i) for even i (default 0)."""
        split = _as_split(lbl)
        i = 0 if height is None else height
        if i % 2:
            raise ParityMismatch("Veronese nodes come from even inter-layers")
        key = ("veronese", split.unordered(), i)
        if key not in self._cache:
            a, b = self._pair_through(split, i)
            self._cache[key] = meet(a, b)
        return self._cache[key]

    def plucker_ladd_node(self, split):
        """Meet of the Plucker line on the second pair with the Ladd line."""
        split = _as_split(split)
        return meet(self.base.plucker[PluckerLabel(split.second)], self.ladd_line(split))

    def salmon_veronese_line(self, split):
        """Join of the Salmon node on the second pair with the Veronese node."""
        split = _as_split(split)
        return join(self.base.salmon[SalmonLabel(split.second)], self.veronese_node(split))

    def ladd_lines(self):
        return {LaddLabel(s.first, s.second): self.ladd_line(s)
                for s in enumerate_labels("ladd")}

    def veronese_nodes(self):
        return {VeroneseNodeLabel(s.first, s.second): self.veronese_node(s)
                for s in enumerate_labels("veronese")}


def _as_split(lbl):
    if isinstance(lbl, Split):
        return lbl
    return Split(lbl.first, lbl.second)


def _check_fixed_incidences(base, layer):
    """K(x;yz) stays on Cayley L(rest) and P(x;yz) on Steiner N(rest) at every height."""
    for lbl, k in layer.kirkmans.items():
        if not incident(k, base.cayley[CayleyLabel(lbl.rest)]):
            raise MutationDegeneracy(f"{lbl} at height {layer.height}", "left its Cayley line")
    for lbl, l in layer.pascals.items():
        if not incident(base.steiner[SteinerLabel(lbl.rest)], l):
            raise MutationDegeneracy(f"{lbl} at height {layer.height}", "misses its Steiner node")


def elevate(m):
    return m.elevate()


def build_multimysticum(s, max_height=DEFAULT_MAX_HEIGHT, base=None):
    """Build the base mysticum of ``s`` and elevate it to ``max_height``."""
    if max_height < 0:
        raise ValueError("max_height must be nonnegative")
    base = base or build_base(s)
    layer0 = Layer(0, base.kirkmans, base.pascals)
    return Multimysticum(base, (layer0,)).elevated_to(max_height)
