"""Independent reference computations used to freeze expected values.

Nothing here imports the package: these are second implementations kept
deliberately naive.
"""

from fractions import Fraction
from itertools import permutations
from math import gcd


def _sign_surd(u, d):
    """Sign of u + sqrt(d) for integer u and positive non-square d."""
    if u >= 0:
        return 1
    return 1 if d > u * u else -1


def _floor_quadratic(p, d, q):
    # floor((p + sqrt(d)) / q), found by exact comparison against integers
    approx = int((p + d ** 0.5) / q)
    a = approx - 2
    s = 1 if q > 0 else -1
    # smallest a with (p + sqrt d)/q < a + 1
    while _sign_surd(p - (a + 1) * q, d) * s >= 0:
        a += 1
    return a


def cf_partial_quotients(p, d, q, n):
    """First n partial quotients of (p + sqrt(d)) / q.

    Requires q | d - p*p, which keeps every complete quotient in the same form.
    """
    if (d - p * p) % q:
        raise ValueError("q must divide d - p^2")
    out = []
    for _ in range(n):
        a = _floor_quadratic(p, d, q)
        out.append(a)
        p = a * q - p
        q = (d - p * p) // q
    return out


def convergents(quotients):
    h0, h1 = 1, quotients[0]
    k0, k1 = 0, 1
    out = [Fraction(h1, k1)]
    for a in quotients[1:]:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        out.append(Fraction(h1, k1))
    return out


def convergents_one_plus_inv_sqrt3(n):
    # 1 + 1/sqrt3 = (3 + sqrt3) / 3
    return convergents(cf_partial_quotients(3, 3, 3, n))


def convergents_one_minus_inv_sqrt3(n):
    # 1 - 1/sqrt3 = (-3 + sqrt3) / (-3)
    return convergents(cf_partial_quotients(-3, 3, -3, n))


# plain integer geometry on the conic x z = y^2

def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def normalise(v):
    den = 1
    for c in v:
        den = den * Fraction(c).denominator // gcd(den, Fraction(c).denominator)
    v = [int(Fraction(c) * den) for c in v]
    g = 0
    for c in v:
        g = gcd(g, c)
    v = [c // g for c in v]
    lead = next(c for c in v if c)
    return tuple(-c for c in v) if lead < 0 else tuple(v)


def conic(t):
    if t is None:
        return (1, 0, 0)
    t = Fraction(t)
    return (t * t, t, Fraction(1))


def pascal_line(params, word):
    """Pascal line of the hexagon ``word`` from chord meets ab.de, bc.ef, cd.fa."""
    pts = {c: conic(t) for c, t in zip("abcdef", params)}
    h = [pts[c] for c in word]
    meets = [cross(cross(h[i], h[i + 1]), cross(h[i + 3], h[(i + 4) % 6])) for i in range(3)]
    line = cross(meets[0], meets[1])
    assert sum(a * b for a, b in zip(line, meets[2])) == 0
    return normalise(line)


def all_pascal_lines(params):
    """Distinct Pascal lines over every hexagon through a (brute force)."""
    out = {}
    for rest in permutations("bcdef"):
        if rest[0] > rest[-1]:
            continue
        word = "a" + "".join(rest)
        out[word] = pascal_line(params, word)
    return out


def veronese_by_recurrence(n):
    """Sequence terms ``None`` (infinity), 0, alpha_0, ... from the two recurrences."""
    out = [None, Fraction(0)]
    a = Fraction(1)
    for i in range(n - 2):
        out.append(a)
        a = 2 - a if i % 2 else 1 / (3 - 1 / a)
    return out[:n]
