"""Classical and rational parking functions.

A parking function is a Dyck path plus north-step labels listed bottom to
top, strictly increasing within each vertical run. Classical objects live in
an n x n frame; rational objects in a coprime (a,b) frame. The stretched
object P'' used by the rational dinv statistic carries multiset labels and is
exempt from the permutation check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .paths import DyckPath, area, east_counts, levels, sweep


@dataclass(frozen=True)
class ParkingFunction:
    word: str
    labels: tuple
    a: int
    b: int
    multiset: bool = False

    def __post_init__(self):
        path = DyckPath(self.word, self.a, self.b)  # validates frame + Dyck
        del path
        if len(self.labels) != self.a:
            raise ValueError("one label per north step required")
        if not self.multiset and sorted(self.labels) != list(range(1, self.a + 1)):
            raise ValueError(f"labels {self.labels} are not a permutation of 1..{self.a}")
        for run in _run_label_groups(self.word, self.labels):
            if any(run[i] >= run[i + 1] for i in range(len(run) - 1)):
                if not self.multiset:
                    raise ValueError(f"labels {run} do not increase up a column")

    @property
    def path(self):
        return DyckPath(self.word, self.a, self.b)

    def area(self):
        return area(self.path)

    def to_json(self):
        return {"word": self.word, "labels": list(self.labels), "frame": [self.a, self.b]}

    @classmethod
    def from_json(cls, data):
        return cls(data["word"], tuple(data["labels"]), *data["frame"])


def _run_label_groups(word, labels):
    """Labels grouped by maximal vertical run, bottom to top."""
    groups = []
    it = iter(labels)
    run = []
    for step in word:
        if step == "N":
            run.append(next(it))
        elif run:
            groups.append(run)
            run = []
    if run:
        groups.append(run)
    return groups


# -- classical encoding ----------------------------------------------------


class NotAParkingFunction(ValueError):
    pass


def from_preference_vector(v):
    """Build the labeled n x n Dyck path for a preference vector.

    Valid iff the increasing rearrangement b_1 <= ... <= b_n has b_i <= i.
    Car j labels vertical run i when v_j = i.
    """
    n = len(v)
    if any(not 1 <= x <= n for x in v):
        raise NotAParkingFunction(f"{v} has preferences outside 1..{n}")
    if any(x > i for i, x in enumerate(sorted(v), start=1)):
        raise NotAParkingFunction(f"{v} fails the rearrangement test")
    runs = [[] for _ in range(n)]
    for car, pref in enumerate(v, start=1):
        runs[pref - 1].append(car)
    word = "".join("N" * len(r) + "E" for r in runs)
    labels = tuple(itertools.chain.from_iterable(sorted(r) for r in runs))
    return ParkingFunction(word, labels, n, n)


def to_preference_vector(pf):
    """Inverse of from_preference_vector (classical n x n frame only)."""
    if pf.a != pf.b:
        raise ValueError("preference vectors are defined for the classical frame")
    prefs = {}
    run_index = 1
    it = iter(pf.labels)
    for step in pf.word:
        if step == "N":
            prefs[next(it)] = run_index
        else:
            run_index += 1
    return tuple(prefs[j] for j in range(1, pf.a + 1))


def enumerate_pf(a, b):
    """All valid labelings of all (a,b)-Dyck paths."""
    from .paths import enumerate_dyck

    for d in enumerate_dyck(a, b):
        yield from labelings_of(d)


def labelings_of(d: DyckPath):
    """All parking functions with underlying path d."""
    run_sizes = [len(g) for g in _run_label_groups(d.word, range(d.a))]
    for labels in _distribute(list(range(1, d.a + 1)), run_sizes):
        yield ParkingFunction(d.word, labels, d.a, d.b)


def _distribute(pool, sizes):
    if not sizes:
        yield ()
        return
    k = sizes[0]
    for chosen in itertools.combinations(pool, k):
        rest = [x for x in pool if x not in chosen]
        for tail in _distribute(rest, sizes[1:]):
            yield chosen + tail


# -- classical statistics --------------------------------------------------


def gp_vectors(pf):
    """(g, p): area-cell counts and labels per row, bottom to top."""
    if pf.a != pf.b:
        raise ValueError("gp vectors are defined for the classical frame")
    xs = east_counts(pf.word)
    g = tuple(i - x for i, x in enumerate(xs))
    return g, tuple(pf.labels)


def dinv_classical(pf):
    """Pairs i < j with g_i = g_j, p_i < p_j or g_i = g_j + 1, p_i > p_j."""
    g, p = gp_vectors(pf)
    n = len(g)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n)
        if (g[i] == g[j] and p[i] < p[j]) or (g[i] == g[j] + 1 and p[i] > p[j])
    )


def drw_classical(pf):
    """Diagonal reading word: higher diagonals first, each scanned NE to SW."""
    g, p = gp_vectors(pf)
    order = sorted(range(len(g)), key=lambda i: (-g[i], -i))
    return tuple(p[i] for i in order)


def drw_rational(pf):
    """Labels of north steps read by increasing level of bottom endpoints."""
    lv = levels(pf.word, pf.a, pf.b)
    tagged = []
    row = 0
    for i, step in enumerate(pf.word):
        if step == "N":
            tagged.append((lv[i], pf.labels[row]))
            row += 1
    tagged.sort()
    return tuple(label for _, label in tagged)


def ides(word):
    """Inverse descent set: j with j+1 left of j in the word."""
    n = len(word)
    if sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"{word} is not a permutation word")
    pos = {x: i for i, x in enumerate(word)}
    return frozenset(j for j in range(1, n) if pos[j + 1] < pos[j])


# -- the zeta map ----------------------------------------------------------


@dataclass(frozen=True)
class RootNotationPF:
    """Classical parking function in root notation: path plus the permutation
    written along the diagonal y = x."""

    word: str
    diagonal_word: tuple

    def __post_init__(self):
        n = len(self.diagonal_word)
        DyckPath(self.word, n, n)
        for j, k in _left_turns(self.word):
            if self.diagonal_word[j - 1] >= self.diagonal_word[k - 1]:
                raise ValueError("left-turn square has a non-increasing label pair")


def _left_turns(word):
    """Squares (column, row) sitting above an E step and left of an N step."""
    out = []
    x = y = 0
    prev = None
    for step in word:
        if step == "N" and prev == "E":
            out.append((x, y + 1))
        if step == "N":
            y += 1
        else:
            x += 1
        prev = step
    return out


def zeta(pf) -> RootNotationPF:
    """Map coset notation to root notation.

    The diagonal word is the reverse of the diagonal reading word; the path
    is the unique Dyck path whose left-turn squares are the valley pairs
    (positions of vertically adjacent labels). Valley pairs are non-nesting,
    so the path exists; we rebuild and check the left-turn set regardless.
    """
    n = pf.a
    diag = tuple(reversed(drw_classical(pf)))
    pos = {x: i + 1 for i, x in enumerate(diag)}
    valleys = []
    for run in _run_label_groups(pf.word, pf.labels):
        for low, high in zip(run, run[1:]):
            valleys.append((pos[low], pos[high]))
    # valley square (column j, row k) forces an EN corner at vertex (j, k-1)
    verts = sorted((j, k - 1) for j, k in valleys)
    for (x1, y1), (x2, y2) in zip(verts, verts[1:]):
        if x1 >= x2 or y1 >= y2:
            raise AssertionError(f"nested valley vertices {verts} for {pf}")
    word = []
    px = py = 0
    for x, y in verts:
        word.append("N" * (y - py) + "E" * (x - px))
        px, py = x, y
    word.append("N" * (n - py) + "E" * (n - px))
    word = "".join(word)
    if sorted(_left_turns(word)) != sorted((j, k) for j, k in ((x, y + 1) for x, y in verts)):
        raise AssertionError(f"rebuilt path {word} has wrong left-turn set")
    return RootNotationPF(word, diag)


def area_prime(r: RootNotationPF):
    """Boxes strictly between path and diagonal whose (column-label,
    row-label) pair increases."""
    n = len(r.diagonal_word)
    heights = []
    y = 0
    for step in r.word:
        if step == "N":
            y += 1
        else:
            heights.append(y)
    total = 0
    for p in range(1, n + 1):
        for k in range(p + 1, heights[p - 1] + 1):
            if r.diagonal_word[p - 1] < r.diagonal_word[k - 1]:
                total += 1
    return total


# -- rational dinv via the Bezout stretch ----------------------------------


def bezout_xy(a, b):
    """The solution of x*a + y*b = 1 with -b < x <= 0 and 0 <= y < a."""
    if gcd(a, b) != 1:
        raise ValueError("bezout_xy requires gcd(a,b)=1")
    if a == 1:
        raise ValueError("the window -b < x <= 0, 0 <= y < a is empty for a=1")
    x = pow(b, -1, a)  # y candidate: y*b = 1 (mod a)
    y = x % a
    x = (1 - y * b) // a
    if not (-b < x <= 0 and 0 <= y < a):
        raise AssertionError(f"window reduction failed for ({a},{b})")
    return x, y


def stretch_to_ppp(pf: ParkingFunction) -> ParkingFunction:
    """P'': stretch N steps |x|-fold and E steps y-fold, drop the final E.

    The result is a classical parking function on an n x n frame with
    n = |x|*a and multiset labels (each original label repeated |x| times,
    copies kept adjacent within their run).
    """
    x, y = bezout_xy(pf.a, pf.b)
    nx = -x
    word = []
    labels = []
    row = 0
    for step in pf.word:
        if step == "N":
            word.append("N" * nx)
            labels.extend([pf.labels[row]] * nx)
            row += 1
        else:
            word.append("E" * y)
    word = "".join(word)
    assert word.endswith("E")
    n = nx * pf.a
    return ParkingFunction(word[:-1], tuple(labels), n, n, multiset=True)


def dinv_multiset(pf):
    """Classical dinv on a possibly-multiset-labeled square-frame object."""
    return dinv_classical(pf)


_MAX_DINV_CACHE = {}


def max_stretched_dinv(d: DyckPath):
    """m(D): maximum of dinv(P'') over all labelings of d."""
    key = (d.word, d.a, d.b)
    if key not in _MAX_DINV_CACHE:
        best = 0
        for pf in labelings_of(d):
            best = max(best, dinv_classical(stretch_to_ppp(pf)))
        _MAX_DINV_CACHE[key] = best
    return _MAX_DINV_CACHE[key]


def d_stat(d: DyckPath):
    """d(P) = area(sweep(D))."""
    return area(sweep(d))


def dinv_rational(pf: ParkingFunction):
    """dinv(P) = dinv(P'') + d(P) - m(P); identically 0 when a = 1."""
    if pf.a == 1:
        return 0
    d = pf.path
    value = dinv_classical(stretch_to_ppp(pf)) + d_stat(d) - max_stretched_dinv(d)
    assert 0 <= value <= d_stat(d)
    return value
