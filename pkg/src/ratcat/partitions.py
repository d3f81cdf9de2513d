"""Partitions and the box/triangle statistics: arm, leg, h+, h-, frontiers,
minimum level, and cyclic-shift orbits."""

from __future__ import annotations

from math import factorial, gcd

from .paths import cyclic_shift, levels


def normalize(parts):
    """Canonical partition: weakly decreasing tuple, no trailing zeros."""
    parts = tuple(parts)
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    if any(p < 0 for p in parts):
        raise ValueError("negative parts are not allowed")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def size(mu):
    return sum(mu)


def length(mu):
    return len(normalize(mu))


def conjugate(mu):
    mu = normalize(mu)
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def multiplicities(mu):
    """m_j(mu) for j = 1..max part, as a dict."""
    out = {}
    for p in normalize(mu):
        out[p] = out.get(p, 0) + 1
    return out


def z_lambda(mu):
    """Centralizer order prod_j j^{m_j} m_j!."""
    z = 1
    for j, mj in multiplicities(mu).items():
        z *= j ** mj * factorial(mj)
    return z


def partitions_of(n, max_part=None):
    """All partitions of n with parts bounded by max_part, reverse-lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_box(s, r):
    """All partitions with at most s parts, each at most r."""
    def rec(rows_left, max_part, prefix):
        yield normalize(prefix)
        if rows_left == 0:
            return
        for part in range(max_part, 0, -1):
            yield from rec(rows_left - 1, part, prefix + (part,))

    yield from rec(s, r if s > 0 else 0, ())


def in_box(mu, s, r):
    mu = normalize(mu)
    return len(mu) <= s and (not mu or mu[0] <= r)


def in_triangle(mu, a, b):
    """mu fits under the staircase: a*mu_j <= b*(a-j) for each row j."""
    mu = normalize(mu)
    if not in_box(mu, a, b):
        return False
    return all(a * p <= b * (a - j) for j, p in enumerate(mu, start=1))


def enumerate_triangle(a, b):
    for mu in enumerate_box(a, b):
        if in_triangle(mu, a, b):
            yield mu


def frontier(mu, a, b):
    """Boundary path of mu in the a x b box, read from (0,0) to (b,a).

    Row j of mu is the j-th row from the top of the box; the north step at
    height y therefore sits at x = mu_{a-y}.
    """
    mu = normalize(mu)
    if not in_box(mu, a, b):
        raise ValueError(f"{mu} does not fit in the {a} x {b} box")
    padded = mu + (0,) * (a - len(mu))
    steps = []
    x = 0
    for y in range(a):
        target = padded[a - 1 - y]
        steps.append("E" * (target - x))
        steps.append("N")
        x = target
    steps.append("E" * (b - x))
    return "".join(steps)


def partition_of_frontier(word, a, b):
    """Inverse of frontier: read off the north-step x-positions."""
    if word.count("N") != a or word.count("E") != b:
        raise ValueError(f"word {word!r} is not in R(N^{a} E^{b})")
    xs = []
    x = 0
    for step in word:
        if step == "N":
            xs.append(x)
        else:
            x += 1
    return normalize(tuple(reversed(xs)))


def cells(mu):
    """1-based (row from top, column from left) cell coordinates."""
    for i, p in enumerate(normalize(mu), start=1):
        for j in range(1, p + 1):
            yield (i, j)


def arm_leg(mu, cell):
    """(arm, leg) of a cell: cells to the right in its row, below in its column."""
    mu = normalize(mu)
    i, j = cell
    if not (1 <= i <= len(mu) and 1 <= j <= mu[i - 1]):
        raise ValueError(f"cell {cell} not in diagram of {mu}")
    conj = conjugate(mu)
    return mu[i - 1] - j, conj[j - 1] - i


def h_plus(mu, a, b):
    """Cells with -a < a*arm - b*leg <= b."""
    return _h_count(mu, a, b, plus=True)


def h_minus(mu, a, b):
    """Cells with -a <= a*arm - b*leg < b."""
    return _h_count(mu, a, b, plus=False)


def _h_count(mu, a, b, plus):
    mu = normalize(mu)
    conj = conjugate(mu)
    count = 0
    for i, p in enumerate(mu, start=1):
        for j in range(1, p + 1):
            v = a * (p - j) - b * (conj[j - 1] - i)
            if (-a < v <= b) if plus else (-a <= v < b):
                count += 1
    return count


def min_level(mu, a, b):
    """Minimum level on the frontier of mu; zero iff mu is in the triangle."""
    return min(levels(frontier(mu, a, b), a, b))


def h_via_levels(mu, a, b, sign):
    """h+/h- computed from frontier levels instead of arm/leg windows.

    sign '+': pairs i < j with w_i = E, w_j = N, 1 <= l_{i-1} - l_{j-1} <= a+b.
    sign '-': pairs i < j with w_i = E, w_j = N, 1 <= l_j - l_i <= a+b.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    w = frontier(mu, a, b)
    lv = levels(w, a, b)
    n = len(w)
    count = 0
    for i in range(1, n + 1):
        if w[i - 1] != "E":
            continue
        for j in range(i + 1, n + 1):
            if w[j - 1] != "N":
                continue
            diff = lv[i - 1] - lv[j - 1] if sign == "+" else lv[j] - lv[i]
            if 1 <= diff <= a + b:
                count += 1
    return count


def cshift_partition(mu, a, b):
    """The partition whose frontier is the one-step cyclic shift of mu's."""
    return partition_of_frontier(cyclic_shift(frontier(mu, a, b), 1), a, b)


def orbit(mu0, a, b):
    """The a+b successive cyclic shifts of mu0, starting at mu0."""
    out = [normalize(mu0)]
    for _ in range(a + b - 1):
        out.append(cshift_partition(out[-1], a, b))
    return out


def orbit_decompose(a, b):
    """Partition the a x b box into cyclic-shift orbits, one triangle
    representative each; verifies sizes, coverage, and |mu0| = |mu| + ml."""
    if gcd(a, b) != 1:
        raise ValueError("orbit decomposition requires gcd(a,b)=1")
    seen = set()
    orbits = []
    for mu0 in enumerate_triangle(a, b):
        members = orbit(mu0, a, b)
        if len(set(members)) != a + b:
            raise AssertionError(f"orbit of {mu0} has repeated members")
        in_tri = [m for m in members if in_triangle(m, a, b)]
        if in_tri != [mu0]:
            raise AssertionError(f"orbit of {mu0} meets the triangle at {in_tri}")
        for m in members:
            if size(mu0) != size(m) + min_level(m, a, b):
                raise AssertionError(f"|mu0| != |mu| + ml for {m} in orbit of {mu0}")
        seen.update(members)
        orbits.append((mu0, members))
    box = set(enumerate_box(a, b))
    if seen != box:
        raise AssertionError("orbits do not cover the box")
    return orbits


def lem3_check(mu0, a, b):
    """Orbit h+ values are h+(mu0)+0..a+b-1, with the member of minimum level
    -i_k landing at offset k, where i_k are the sorted frontier levels of mu0."""
    mu0 = normalize(mu0)
    if not in_triangle(mu0, a, b):
        raise ValueError(f"{mu0} is not in the ({a},{b}) triangle")
    members = orbit(mu0, a, b)
    base = h_plus(mu0, a, b)
    values = sorted(h_plus(m, a, b) for m in members)
    if values != list(range(base, base + a + b)):
        return False
    sorted_levels = sorted(levels(frontier(mu0, a, b), a, b)[: a + b])
    for m in members:
        ml = min_level(m, a, b)
        k = sorted_levels.index(-ml)
        if h_plus(m, a, b) - base != k:
            return False
    return True
