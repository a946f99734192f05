"""Permutations of six symbols, the outer automorphism and mysticum labels.

Letters ``a..f`` name the six points on the conic; numbers ``0..5`` are the
dual alphabet in which every element of the mysticum is labelled. The
isomorphism ``zeta`` between the two symmetric groups is not induced by any
bijection of alphabets: it sends transpositions to triple transpositions.

Composition convention: ``p * q`` applies ``q`` first, then ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "LETTERS",
    "NUMBERS",
    "LetterPerm",
    "NumberPerm",
    "ZETA_TABLE",
    "zeta",
    "zeta_inv",
    "RepeatedLetter",
    "PascalLabel",
    "KirkmanLabel",
    "SteinerLabel",
    "CayleyLabel",
    "PluckerLabel",
    "SalmonLabel",
    "OrdinaryMeetingLabel",
    "LaddLabel",
    "VeroneseNodeLabel",
    "Split",
    "LinkingLabel",
    "HigherMeetingLabel",
    "pascal_label_of_hexagon",
    "hexagon_of_pascal_label",
    "hexagon_permutation",
    "chords_of_meeting",
    "enumerate_labels",
    "parse_label",
    "complement",
]

LETTERS = "abcdef"
NUMBERS = "012345"


class RepeatedLetter(ValueError):
    pass


class Perm6:
    """A permutation of a six-symbol alphabet, stored as an image tuple."""

    alphabet = ""
    __slots__ = ("images",)

    def __init__(self, images=None):
        if images is None:
            images = tuple(range(6))
        images = tuple(images)
        if sorted(images) != list(range(6)):
            raise ValueError(f"not a permutation of six symbols: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("permutations are immutable")

    @classmethod
    def from_cycles(cls, *cycles):
        """Build from cycles written in the alphabet, e.g. ``"ab", "cd"``."""
        img = list(range(6))
        seen = set()
        for cyc in cycles:
            idx = [cls.alphabet.index(s) for s in str(cyc)]
            if seen & set(idx) or len(set(idx)) != len(idx):
                raise ValueError(f"cycles overlap: {cycles}")
            seen.update(idx)
            for k, i in enumerate(idx):
                img[i] = idx[(k + 1) % len(idx)]
        return cls(img)

    @classmethod
    def parse(cls, text):
        """Parse dotted cycle notation such as ``"21.53.04"`` or ``"2.04.153"``."""
        return cls.from_cycles(*[c for c in re.split(r"[.\s()]+", text) if c])

    def __mul__(self, other):
        if type(other) is not type(self):
            raise TypeError("cannot compose permutations of different alphabets")
        return type(self)(self.images[i] for i in other.images)

    def __call__(self, symbol):
        return self.alphabet[self.images[self.alphabet.index(symbol)]]

    def __eq__(self, other):
        return type(other) is type(self) and other.images == self.images

    def __hash__(self):
        return hash((self.alphabet, self.images))

    def inverse(self):
        inv = [0] * 6
        for i, j in enumerate(self.images):
            inv[j] = i
        return type(self)(inv)

    def is_identity(self):
        return self.images == tuple(range(6))

    def cycles(self):
        """All cycles, fixed points included, each as a string of symbols."""
        seen = set()
        out = []
        for i in range(6):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append("".join(self.alphabet[k] for k in cyc))
        return out

    def cycle_type(self):
        """Sorted lengths of the nontrivial cycles, e.g. ``(2, 2, 2)``."""
        return tuple(sorted(len(c) for c in self.cycles() if len(c) > 1))

    def __str__(self):
        cyc = self.cycles()
        if self.cycle_type() == (2, 3):
            # 1+2+3 elements are written with their fixed point: 2.04.153
            return ".".join(sorted(cyc, key=len))
        nontrivial = [c for c in cyc if len(c) > 1]
        return ".".join(nontrivial) if nontrivial else "1"

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class LetterPerm(Perm6):
    alphabet = LETTERS
    __slots__ = ()


class NumberPerm(Perm6):
    alphabet = NUMBERS
    __slots__ = ()


# Images of the fifteen letter transpositions; the rest of zeta follows from these.
ZETA_TABLE = {
    "ab": "21.53.04", "ac": "24.51.03", "ad": "20.54.13", "ae": "25.01.34", "af": "23.50.14",
    "bc": "23.54.01", "bd": "25.03.14", "be": "24.50.13", "bf": "20.51.34",
    "cd": "21.50.34", "ce": "20.53.14", "cf": "25.04.13",
    "de": "23.51.04", "df": "24.53.01",
    "ef": "21.54.03",
}


def _build_zeta():
    gens = {
        LetterPerm.from_cycles(pair): NumberPerm.parse(img)
        for pair, img in ZETA_TABLE.items()
    }
    ident = LetterPerm()
    table = {ident: NumberPerm()}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for t, zt in gens.items():
                q = t * p
                zq = zt * table[p]
                known = table.get(q)
                if known is None:
                    table[q] = zq
                    nxt.append(q)
                elif known != zq:
                    raise RuntimeError("transposition table is not a homomorphism")
        frontier = nxt
    if len(table) != 720 or len(set(table.values())) != 720:
        raise RuntimeError("transposition table does not generate an isomorphism")
    return table, {v: k for k, v in table.items()}


_ZETA, _ZETA_INV = _build_zeta()


def zeta(p):
    """Outer automorphism from letter permutations to number permutations."""
    if not isinstance(p, LetterPerm):
        raise TypeError("zeta expects a LetterPerm")
    return _ZETA[p]


def zeta_inv(q):
    if not isinstance(q, NumberPerm):
        raise TypeError("zeta_inv expects a NumberPerm")
    return _ZETA_INV[q]


def _num(s):
    s = int(s)
    if not 0 <= s <= 5:
        raise ValueError(f"symbol out of range: {s}")
    return s


def _pair(a, b):
    a, b = _num(a), _num(b)
    if a == b:
        raise ValueError("a pair needs two different symbols")
    return (a, b) if a < b else (b, a)


def _digits(t):
    return "".join(str(v) for v in t)


def complement(*symbols):
    used = set(symbols)
    return tuple(k for k in range(6) if k not in used)


@dataclass(frozen=True, order=True)
class _PointedPair:
    x: int
    pair: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", _num(self.x))
        object.__setattr__(self, "pair", _pair(*self.pair))
        if self.x in self.pair:
            raise ValueError("x must not belong to the pair")

    @property
    def rest(self):
        return complement(self.x, *self.pair)


@dataclass(frozen=True, order=True)
class PascalLabel(_PointedPair):
    """``P x;yz``: the Pascal line with fixed symbol x and transposition yz."""

    def __str__(self):
        return f"P {self.x};{_digits(self.pair)}"


@dataclass(frozen=True, order=True)
class KirkmanLabel(_PointedPair):
    """``K x;yz``: the Kirkman node on P(x;uv) for uv inside the rest."""

    def __str__(self):
        return f"K {self.x};{_digits(self.pair)}"


@dataclass(frozen=True, order=True)
class _Triple:
    triple: tuple

    def __post_init__(self):
        t = tuple(sorted(_num(v) for v in self.triple))
        if len(set(t)) != 3:
            raise ValueError("three different symbols expected")
        object.__setattr__(self, "triple", t)


@dataclass(frozen=True, order=True)
class SteinerLabel(_Triple):
    def __str__(self):
        return f"N {_digits(self.triple)}"


@dataclass(frozen=True, order=True)
class CayleyLabel(_Triple):
    def __str__(self):
        return f"L {_digits(self.triple)}"


@dataclass(frozen=True, order=True)
class _Pair:
    pair: tuple

    def __post_init__(self):
        object.__setattr__(self, "pair", _pair(*self.pair))


@dataclass(frozen=True, order=True)
class PluckerLabel(_Pair):
    def __str__(self):
        return f"L {_digits(self.pair)}"


@dataclass(frozen=True, order=True)
class SalmonLabel(_Pair):
    def __str__(self):
        return f"N {_digits(self.pair)}"


def _disjoint_pairs(first, second):
    first, second = _pair(*first), _pair(*second)
    if set(first) & set(second):
        raise ValueError("the two pairs must be disjoint")
    return first, second


@dataclass(frozen=True, order=True)
class _PairPair:
    first: tuple
    second: tuple

    def __post_init__(self):
        a, b = sorted(_disjoint_pairs(self.first, self.second))
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    @property
    def rest(self):
        return complement(*self.first, *self.second)

    def split(self):
        return Split(self.first, self.second)


@dataclass(frozen=True, order=True)
class OrdinaryMeetingLabel(_PairPair):
    """``xy.zw``; the two halves commute, so they are stored sorted."""

    def __str__(self):
        return f"{_digits(self.first)}.{_digits(self.second)}"


@dataclass(frozen=True, order=True)
class LaddLabel(_PairPair):
    def __str__(self):
        return f"L {_digits(self.first)}.{_digits(self.second)}"


@dataclass(frozen=True, order=True)
class VeroneseNodeLabel(_PairPair):
    def __str__(self):
        return f"N {_digits(self.first)}.{_digits(self.second)}"


@dataclass(frozen=True, order=True)
class Split:
    """An ordered pair of disjoint pairs ``xy;zw`` (order matters)."""

    first: tuple
    second: tuple

    def __post_init__(self):
        a, b = _disjoint_pairs(self.first, self.second)
        object.__setattr__(self, "first", a)
        object.__setattr__(self, "second", b)

    @property
    def rest(self):
        return complement(*self.first, *self.second)

    def swapped(self):
        return Split(self.second, self.first)

    def unordered(self):
        return OrdinaryMeetingLabel(self.first, self.second)

    def __str__(self):
        return f"{_digits(self.first)};{_digits(self.second)}"


@dataclass(frozen=True, order=True)
class _InterLabel:
    upper: tuple
    lower: tuple
    height: int

    def __post_init__(self):
        a, b = _disjoint_pairs(self.upper, self.lower)
        object.__setattr__(self, "upper", a)
        object.__setattr__(self, "lower", b)
        if self.height < 0:
            raise ValueError("height must be nonnegative")

    @property
    def split(self):
        return Split(self.upper, self.lower)

    def __str__(self):
        i = self.height
        return f"{_digits(self.upper)}({i + 1}).{_digits(self.lower)}({i})"


@dataclass(frozen=True, order=True)
class LinkingLabel(_InterLabel):
    """``xy(i+1).zw(i)``: joins K(z;xy) and K(w;xy) at the even height i."""

    def __post_init__(self):
        super().__post_init__()
        if self.height % 2:
            raise ValueError("linking lines live at even heights")


@dataclass(frozen=True, order=True)
class HigherMeetingLabel(_InterLabel):
    """``xy(i+1).zw(i)``: meet of P(z;xy) and P(w;xy) at the odd height i."""

    def __post_init__(self):
        super().__post_init__()
        if not self.height % 2:
            raise ValueError("higher meeting points live at odd heights")


def hexagon_permutation(word):
    """The 6-cycle a1 -> a2 -> ... -> a6 -> a1 of a hexagon word."""
    word = str(word)
    if len(word) != 6 or set(word) != set(LETTERS):
        raise RepeatedLetter(f"hexagon must use each of a..f once: {word!r}")
    return LetterPerm.from_cycles(word)


def pascal_label_of_hexagon(word):
    """Dual label of the Pascal line L(word).

    >>> str(pascal_label_of_hexagon("acebfd"))
    'P 2;04'
    """
    img = zeta(hexagon_permutation(word))
    cyc = img.cycles()
    fixed = next(c for c in cyc if len(c) == 1)
    two = next(c for c in cyc if len(c) == 2)
    return PascalLabel(int(fixed), (int(two[0]), int(two[1])))


def _canonical_word(cycle):
    # rotate to start at 'a', then take the direction with the smaller second letter
    k = cycle.index("a")
    fwd = cycle[k:] + cycle[:k]
    back = fwd[0] + fwd[:0:-1]
    return min(fwd, back)


def hexagon_of_pascal_label(lbl):
    """Hexagon word (starting at ``a``) whose Pascal line carries ``lbl``."""
    y, z = lbl.pair
    u, v, w = lbl.rest
    q = NumberPerm.from_cycles(f"{y}{z}", f"{u}{v}{w}")
    six = zeta_inv(q).cycles()[0]
    return _canonical_word(six)


def chords_of_meeting(lbl):
    """The two letter chords whose intersection is the meeting point ``lbl``."""
    q = NumberPerm.from_cycles(_digits(lbl.first), _digits(lbl.second))
    chords = [c for c in zeta_inv(q).cycles() if len(c) == 2]
    return tuple(sorted(chords))


def _pascals():
    for x in range(6):
        for pair in combinations(complement(x), 2):
            yield PascalLabel(x, pair)


def _splits():
    for four in combinations(range(6), 4):
        for first in combinations(four, 2):
            yield Split(first, tuple(k for k in four if k not in first))


def _unordered_splits():
    for s in _splits():
        if s.first < s.second:
            yield s


def enumerate_labels(kind, height=0):
    """All labels of one family, in a fixed order.

    ``kind`` is one of pascal, kirkman, steiner, cayley, plucker, salmon,
    meeting, ladd, veronese, split, linking, higher_meeting. ``height`` only
    matters for the inter-layer families.
    """
    kind = kind.lower().replace("-", "_").replace(" ", "_")
    if kind == "pascal":
        return list(_pascals())
    if kind == "kirkman":
        return [KirkmanLabel(p.x, p.pair) for p in _pascals()]
    if kind == "steiner":
        return [SteinerLabel(t) for t in combinations(range(6), 3)]
    if kind == "cayley":
        return [CayleyLabel(t) for t in combinations(range(6), 3)]
    if kind == "plucker":
        return [PluckerLabel(p) for p in combinations(range(6), 2)]
    if kind == "salmon":
        return [SalmonLabel(p) for p in combinations(range(6), 2)]
    if kind in ("meeting", "ordinary_meeting"):
        return [OrdinaryMeetingLabel(s.first, s.second) for s in _unordered_splits()]
    if kind == "ladd":
        return [LaddLabel(s.first, s.second) for s in _unordered_splits()]
    if kind in ("veronese", "veronese_node"):
        return [VeroneseNodeLabel(s.first, s.second) for s in _unordered_splits()]
    if kind == "split":
        return list(_splits())
    if kind in ("linking", "higher_meeting"):
        cls = LinkingLabel if kind == "linking" else HigherMeetingLabel
        return [cls(s.first, s.second, height) for s in _splits()]
    raise ValueError(f"unknown label family: {kind!r}")


_LABEL_PATTERNS = [
    (re.compile(r"^P ([0-5]);([0-5])([0-5])$"), lambda m: PascalLabel(int(m[1]), (m[2], m[3]))),
    (re.compile(r"^K ([0-5]);([0-5])([0-5])$"), lambda m: KirkmanLabel(int(m[1]), (m[2], m[3]))),
    (re.compile(r"^N ([0-5])([0-5])([0-5])$"), lambda m: SteinerLabel((m[1], m[2], m[3]))),
    (re.compile(r"^L ([0-5])([0-5])([0-5])$"), lambda m: CayleyLabel((m[1], m[2], m[3]))),
    (re.compile(r"^L ([0-5])([0-5])$"), lambda m: PluckerLabel((m[1], m[2]))),
    (re.compile(r"^N ([0-5])([0-5])$"), lambda m: SalmonLabel((m[1], m[2]))),
    (re.compile(r"^L ([0-5])([0-5])\.([0-5])([0-5])$"), lambda m: LaddLabel((m[1], m[2]), (m[3], m[4]))),
    (re.compile(r"^N ([0-5])([0-5])\.([0-5])([0-5])$"), lambda m: VeroneseNodeLabel((m[1], m[2]), (m[3], m[4]))),
    (re.compile(r"^([0-5])([0-5])\.([0-5])([0-5])$"), lambda m: OrdinaryMeetingLabel((m[1], m[2]), (m[3], m[4]))),
    (re.compile(r"^([0-5])([0-5]);([0-5])([0-5])$"), lambda m: Split((m[1], m[2]), (m[3], m[4]))),
]
_INTER = re.compile(r"^([0-5])([0-5])\((\d+)\)\.([0-5])([0-5])\((\d+)\)$")


def parse_label(text):
    """Inverse of ``str`` for every label family."""
    text = " ".join(str(text).split())
    m = _INTER.match(text)
    if m:
        hi, lo = int(m[3]), int(m[6])
        if hi != lo + 1:
            raise ValueError(f"upper height must be lower height + 1: {text!r}")
        cls = HigherMeetingLabel if lo % 2 else LinkingLabel
        return cls((m[1], m[2]), (m[4], m[5]), lo)
    for pat, make in _LABEL_PATTERNS:
        m = pat.match(text)
        if m:
            return make(m)
    raise ValueError(f"unrecognised label: {text!r}")
