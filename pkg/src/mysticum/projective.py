"""Exact projective geometry in the rational plane.

Points and lines are stored as canonical integer triples: denominators
cleared, divided by the gcd, first nonzero entry positive. Two elements are
equal exactly when their triples are, so they can be hashed and compared
structurally. Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

__all__ = [
    "INF",
    "Infinity",
    "Point",
    "Line",
    "GeometryError",
    "ZeroVector",
    "CoincidentPoints",
    "CoincidentLines",
    "DuplicateElement",
    "NotCollinear",
    "NotConcurrent",
    "DegenerateFrame",
    "canonicalize",
    "parse_scalar",
    "format_scalar",
    "join",
    "meet",
    "incident",
    "dependent_triple",
    "cross_ratio_points",
    "cross_ratio_lines",
    "conic_point",
    "on_conic",
    "transform_point",
]


class GeometryError(ValueError):
    pass


class ZeroVector(GeometryError):
    pass


class CoincidentPoints(GeometryError):
    pass


class CoincidentLines(GeometryError):
    pass


class DuplicateElement(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NotConcurrent(GeometryError):
    pass


class DegenerateFrame(GeometryError):
    pass


class Infinity:
    """The point at infinity of the projective line. There is only one."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()


def parse_scalar(text):
    """Parse ``"inf"``, an integer or ``"p/q"`` into an extended rational."""
    text = str(text).strip()
    if text.lower() in ("inf", "infinity", "oo", "∞"):
        return INF
    return Fraction(text)


def format_scalar(value):
    """Inverse of :func:`parse_scalar`; never emits a decimal point."""
    if value is INF:
        return "inf"
    return str(Fraction(value))


def _as_fraction(v):
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, Rational):
        return Fraction(v.numerator, v.denominator)
    if isinstance(v, str):
        return Fraction(v)
    raise TypeError(f"exact rational expected, got {type(v).__name__}")


def canonicalize(raw):
    """Return the canonical integer representative of a homogeneous triple.

    >>> canonicalize((2, 4, 6))
    (1, 2, 3)
    >>> canonicalize((Fraction(-1, 2), 1, 0))
    (1, -2, 0)
    """
    if len(raw) != 3:
        raise ValueError("homogeneous triple expected")
    if all(type(v) is int for v in raw):
        ints = list(raw)
    else:
        fr = [_as_fraction(v) for v in raw]
        den = lcm(*(f.denominator for f in fr))
        ints = [f.numerator * (den // f.denominator) for f in fr]
    g = gcd(*ints)
    if g == 0:
        raise ZeroVector("all three homogeneous coordinates are zero")
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return tuple(v // g for v in ints)


class _Homogeneous:
    __slots__ = ("coords", "_hash")

    def __init__(self, *raw):
        if len(raw) == 1:
            raw = tuple(raw[0])
        coords = canonicalize(raw)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "_hash", hash((type(self).__name__, coords)))

    @classmethod
    def _trusted(cls, coords):
        # coords already canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "coords", coords)
        object.__setattr__(obj, "_hash", hash((cls.__name__, coords)))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __reduce__(self):
        return (type(self), self.coords)

    def to_strings(self):
        return [str(c) for c in self.coords]


class Point(_Homogeneous):
    __slots__ = ()

    def __repr__(self):
        return "Point(%d:%d:%d)" % self.coords

    def affine(self):
        """Affine (x/z, y/z) as fractions, or None for points at infinity."""
        x, y, z = self.coords
        if z == 0:
            return None
        return Fraction(x, z), Fraction(y, z)


class Line(_Homogeneous):
    __slots__ = ()

    def __repr__(self):
        return "Line[%d:%d:%d]" % self.coords


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _det(u, v, w):
    return _dot(u, _cross(v, w))


def join(p, q):
    """The line through two distinct points."""
    c = _cross(p.coords, q.coords)
    if c == (0, 0, 0):
        raise CoincidentPoints(f"cannot join {p!r} with itself")
    return Line._trusted(canonicalize(c))


def meet(l, m):
    """The common point of two distinct lines."""
    c = _cross(l.coords, m.coords)
    if c == (0, 0, 0):
        raise CoincidentLines(f"cannot meet {l!r} with itself")
    return Point._trusted(canonicalize(c))


def incident(p, l):
    return _dot(p.coords, l.coords) == 0


def dependent_triple(a, b, c):
    """Collinearity of three points, or concurrency of three lines."""
    if a == b or b == c or a == c:
        raise DuplicateElement("dependent_triple needs three distinct elements")
    if not (type(a) is type(b) is type(c)):
        raise TypeError("dependent_triple needs three points or three lines")
    return _det(a.coords, b.coords, c.coords) == 0


_AXES = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _ratio(num, den):
    if den == 0:
        return INF
    return Fraction(num, den)


def _bracket_cross_ratio(e1, e2, e3, e4, carrier):
    # Brackets det(O, a, b) against a reference O off the carrier give a
    # projective coordinate pair on the carrier.
    k = next(i for i in range(3) if carrier[i] != 0)
    ref = _AXES[k]

    def br(a, b):
        return _det(ref, a, b)

    return _ratio(br(e4, e2) * br(e3, e1), br(e4, e1) * br(e3, e2))


def cross_ratio_points(p1, p2, p3, p4):
    """Coordinate of ``p4`` in the frame sending p1, p2, p3 to inf, 0, 1.

    >>> cross_ratio_points(Point(1, 0, 0), Point(0, 0, 1), Point(1, 0, 1), Point(2, 0, 1))
    Fraction(2, 1)
    """
    if p1 == p2 or p2 == p3 or p1 == p3:
        raise DegenerateFrame("frame points must be pairwise distinct")
    carrier = join(p1, p2)
    if not (incident(p3, carrier) and incident(p4, carrier)):
        raise NotCollinear("the four points are not collinear")
    return _bracket_cross_ratio(
        p1.coords, p2.coords, p3.coords, p4.coords, carrier.coords
    )


def cross_ratio_lines(l1, l2, l3, l4, transversal=None):
    """Cross-ratio of four concurrent lines, read off on a transversal.

    The value does not depend on which transversal is used as long as it
    misses the common point; when none is given a coordinate line is picked.
    """
    if l1 == l2 or l2 == l3 or l1 == l3:
        raise DegenerateFrame("frame lines must be pairwise distinct")
    centre = meet(l1, l2)
    if not (incident(centre, l3) and incident(centre, l4)):
        raise NotConcurrent("the four lines are not concurrent")
    if transversal is None:
        k = next(i for i in range(3) if centre.coords[i] != 0)
        transversal = Line._trusted(_AXES[k])
    elif incident(centre, transversal):
        raise ValueError("transversal passes through the centre of the pencil")
    pts = [meet(l, transversal) for l in (l1, l2, l3, l4)]
    return cross_ratio_points(*pts)


def conic_point(t):
    """Point of the conic x*z = y**2 with parameter t (``INF`` allowed)."""
    if t is INF:
        return Point._trusted((1, 0, 0))
    t = _as_fraction(t)
    return Point(t * t, t, 1)


def on_conic(p):
    x, y, z = p.coords
    return x * z == y * y


def transform_point(matrix, p):
    """Apply a 3x3 matrix (rows of rationals) to a point."""
    v = p.coords
    return Point(*(sum(_as_fraction(r[j]) * v[j] for j in range(3)) for r in matrix))
