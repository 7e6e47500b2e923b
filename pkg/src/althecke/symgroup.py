"""Symmetric group combinatorics: words, lengths, conjugacy classes.

Permutations are stored in one-line notation over {1..n} and compose as
functions acting on the left, so ``(u * v)(i) == u(v(i))``.  With this
convention ``from_word([i1, ..., ik])`` is the product s_{i1} ... s_{ik}
read left to right, and appending a generator on the right of a word
multiplies the permutation by s_i on the right.  Generator indices are
1-based throughout, matching s_i = (i, i+1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache


class MalformedWordError(ValueError):
    """A generator index was outside 1..n-1."""


class MalformedCompositionError(ValueError):
    """A composition had a non-positive part."""


class OddPermutationClassError(ValueError):
    """The requested class does not lie in the alternating group."""


class Permutation:
    """A permutation of {1..n} in one-line notation (image of i at slot i-1)."""

    __slots__ = ("one_line", "_len")

    def __init__(self, one_line):
        ol = tuple(one_line)
        n = len(ol)
        if sorted(ol) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {ol}")
        object.__setattr__(self, "one_line", ol)
        object.__setattr__(self, "_len", None)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def _raw(ol: tuple) -> "Permutation":
        p = Permutation.__new__(Permutation)
        object.__setattr__(p, "one_line", ol)
        object.__setattr__(p, "_len", None)
        return p

    # -- basics -----------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("cannot multiply permutations of different degrees")
        a, b = self.one_line, other.one_line
        return Permutation._raw(tuple(a[b[i] - 1] for i in range(len(a))))

    def inverse(self) -> "Permutation":
        ol = self.one_line
        inv = [0] * len(ol)
        for i, v in enumerate(ol):
            inv[v - 1] = i + 1
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.one_line))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __repr__(self):
        return f"Permutation({list(self.one_line)})"

    # -- length and parity --------------------------------------------------
    def length(self) -> int:
        """Coxeter length = inversion count."""
        cached = self._len
        if cached is None:
            ol = self.one_line
            n = len(ol)
            cached = sum(1 for i in range(n) for j in range(i + 1, n) if ol[i] > ol[j])
            object.__setattr__(self, "_len", cached)
        return cached

    def eps(self) -> int:
        return -1 if self.length() % 2 else 1

    def is_even(self) -> bool:
        return self.length() % 2 == 0

    # -- generator actions ----------------------------------------------------
    def right_mult_s(self, i: int) -> "Permutation":
        """self * s_i: swaps the entries in positions i, i+1."""
        ol = list(self.one_line)
        ol[i - 1], ol[i] = ol[i], ol[i - 1]
        return Permutation._raw(tuple(ol))

    def left_mult_s(self, i: int) -> "Permutation":
        """s_i * self: swaps the values i, i+1."""
        ol = list(self.one_line)
        a, b = ol.index(i), ol.index(i + 1)
        ol[a], ol[b] = ol[b], ol[a]
        return Permutation._raw(tuple(ol))

    def conj_s(self, i: int) -> "Permutation":
        return self.left_mult_s(i).right_mult_s(i)

    def has_right_descent(self, i: int) -> bool:
        """True iff length(self * s_i) < length(self)."""
        return self.one_line[i - 1] > self.one_line[i]

    def has_left_descent(self, i: int) -> bool:
        ol = self.one_line
        return ol.index(i) > ol.index(i + 1)

    def reduced_word(self) -> tuple:
        """Deterministic reduced word: repeatedly strip the leftmost descent.

        Stripping the leftmost right descent of w yields a word for w**-1 in
        reverse; the reversal is returned, so from_word(w.reduced_word()) == w
        and the word length equals the inversion count.
        """
        ol = list(self.one_line)
        n = len(ol)
        rev = []
        while True:
            for i in range(n - 1):
                if ol[i] > ol[i + 1]:
                    ol[i], ol[i + 1] = ol[i + 1], ol[i]
                    rev.append(i + 1)
                    break
            else:
                break
        return tuple(reversed(rev))

    # -- cycles -----------------------------------------------------------
    def cycles(self) -> list:
        """Disjoint cycles (including fixed points), each starting at its
        minimum, sorted by that minimum."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cyc = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                cyc.append(j)
                seen[j - 1] = True
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))


def identity(n: int) -> Permutation:
    return Permutation._raw(tuple(range(1, n + 1)))


def from_word(word, n: int) -> Permutation:
    w = identity(n)
    for i in word:
        if not 1 <= i < n:
            raise MalformedWordError(f"generator index {i} outside 1..{n - 1}")
        w = w.right_mult_s(i)
    return w


def w_of_composition(kappa, n: int | None = None) -> Permutation:
    """The product of consecutive cycles (1..k1)(k1+1..k1+k2)... for kappa."""
    kappa = tuple(kappa)
    if any(k < 1 for k in kappa):
        raise MalformedCompositionError(f"composition parts must be positive: {kappa}")
    total = sum(kappa)
    if n is None:
        n = total
    elif n != total:
        raise MalformedCompositionError(f"composition {kappa} does not sum to {n}")
    ol = []
    start = 1
    for k in kappa:
        ol.extend(range(start + 1, start + k))
        ol.append(start)
        start += k
    return Permutation._raw(tuple(ol))


def composition_of(w: Permutation):
    """The composition kappa with w == w_of_composition(kappa), or None."""
    ol = w.one_line
    n = len(ol)
    kappa = []
    start = 1
    while start <= n:
        j = start
        while ol[j - 1] == j + 1:
            j += 1
        if j > n or ol[j - 1] != start:
            return None
        kappa.append(j - start + 1)
        start = j + 1
    return tuple(kappa)


def is_min_length(w: Permutation) -> bool:
    """Minimal length in its conjugacy class: l(w) == n - #cycles."""
    return w.length() == w.n - len(w.cycle_type())


def increasing_word(kappa) -> tuple:
    """The increasing reduced word of w_of_composition(kappa): all indices
    1..n-1 except the block boundaries."""
    word = []
    start = 1
    for k in kappa:
        word.extend(range(start, start + k - 1))
        start += k
    return tuple(word)


# ---------------------------------------------------------------------------
# Alternating classes
# ---------------------------------------------------------------------------

def is_split_type(kappa) -> bool:
    """An even class splits in the alternating group iff all cycle lengths
    are odd and distinct (and some part exceeds 1)."""
    parts = tuple(kappa)
    return (sum(parts) > 1
            and all(k % 2 == 1 for k in parts)
            and len(set(parts)) == len(parts))


@dataclass(frozen=True)
class ConjClass:
    cycle_type: tuple
    alt_sign: str = "whole"  # whole | plus | minus

    def __post_init__(self):
        if self.alt_sign not in ("whole", "plus", "minus"):
            raise ValueError(f"bad alt_sign {self.alt_sign!r}")
        if self.alt_sign != "whole" and not is_split_type(self.cycle_type):
            raise ValueError(f"class {self.cycle_type} does not split")

    def label(self) -> str:
        base = ",".join(str(k) for k in self.cycle_type)
        if self.alt_sign == "whole":
            return f"({base})"
        return f"({base}){'+' if self.alt_sign == 'plus' else '-'}"


def split_class_reps(kappa):
    """Minimal length representatives (w+, w-) of an even class; w- is None
    for non-split classes.

    w- is s_r w+ s_r where r - 1 is the total size of the leading parts
    equal to 1 (for a partition, r == 1 whenever some part exceeds 1).
    """
    kappa = tuple(kappa)
    n = sum(kappa)
    if (n - len(kappa)) % 2:
        raise OddPermutationClassError(f"class {kappa} consists of odd permutations")
    wplus = w_of_composition(kappa)
    if not is_split_type(kappa):
        return wplus, None
    d = next(i for i, k in enumerate(kappa) if k > 1)
    r = sum(kappa[:d]) + 1
    wminus = wplus.conj_s(r)
    return wplus, wminus


def an_classes_partitions(n: int):
    """Partitions kappa of n with w_kappa even, in increasing lex order."""
    out = [kappa for kappa in _partitions(n) if (n - len(kappa)) % 2 == 0]
    out.sort()
    return out


def _partitions(n: int, max_part: int | None = None):
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def alt_classes(n: int):
    """(ConjClass, minimal length representative) for every alternating
    conjugacy class; split classes contribute a plus and a minus entry."""
    if n < 0:
        raise ValueError("negative degree")
    if n < 2:
        return [(ConjClass((1,) * n), identity(n))]
    out = []
    for kappa in an_classes_partitions(n):
        wplus, wminus = split_class_reps(kappa)
        if wminus is None:
            out.append((ConjClass(kappa), wplus))
        else:
            out.append((ConjClass(kappa, "plus"), wplus))
            out.append((ConjClass(kappa, "minus"), wminus))
    return out


def an_class_of(w: Permutation) -> ConjClass:
    """The alternating conjugacy class of an even permutation.

    For split cycle types the two classes are told apart by the parity of
    any permutation conjugating the canonical representative into w; the
    cycles all have odd length, so the parity does not depend on choices.
    """
    if not w.is_even():
        raise OddPermutationClassError(f"{w!r} is odd")
    kappa = w.cycle_type()
    if not is_split_type(kappa):
        return ConjClass(kappa)
    cycles = sorted(w.cycles(), key=len, reverse=True)
    image = []
    for cyc in cycles:
        image.extend(cyc)
    x = Permutation._raw(tuple(image))  # x maps w_kappa's blocks onto w's cycles
    return ConjClass(kappa, "plus" if x.is_even() else "minus")


# ---------------------------------------------------------------------------
# Conjugation-rewriting toward composition form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Drop2Step:
    s: int
    source: Permutation
    target: Permutation  # s * source * s, two shorter


@dataclass(frozen=True)
class FlatStep:
    s: int
    source: Permutation
    target: Permutation  # s * source * s, same length
    witness: Permutation  # the shorter of s*source, source*s
    side: str  # "sw" or "ws"


def _flat_witness(w: Permutation, s: int):
    sw = w.left_mult_s(s)
    if sw.length() < w.length():
        return sw, "sw"
    ws = w.right_mult_s(s)
    if ws.length() < w.length():
        return ws, "ws"
    raise AssertionError("flat conjugation with no shorter one-sided product")


def reduce_to_composition(w: Permutation):
    """A deterministic path of elementary conjugations from w to some w_sigma.

    Each stage runs a breadth-first search through same-length conjugates
    (FLAT steps, smallest conjugating generator first) until it finds either
    a composition-form element (done) or an element admitting a conjugation
    that drops the length by two (DROP2), which is taken immediately.
    Termination is guaranteed because every element reaches minimal length
    by such moves and minimal elements reach composition form by flat ones.
    """
    path = []
    cur = w
    while True:
        kappa = composition_of(cur)
        if kappa is not None:
            return kappa, path
        found = _bfs_stage(cur)
        steps, kind = found
        for st in steps:
            path.append(st)
        cur = path[-1].target
        if kind == "target":
            return composition_of(cur), path


def _bfs_stage(start: Permutation):
    """One BFS stage: returns (steps, kind) where steps lead from start
    either through FLATs to a composition element (kind == "target") or
    through FLATs plus one final DROP2 (kind == "drop")."""
    n = start.n
    ln = start.length()
    parent = {start.one_line: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        drop_s = None
        for s in range(1, n):
            v = u.conj_s(s)
            dl = v.length() - ln
            if dl == -2:
                drop_s = s
                break
        if drop_s is not None:
            steps = _unwind(parent, u)
            steps.append(Drop2Step(drop_s, u, u.conj_s(drop_s)))
            return steps, "drop"
        if composition_of(u) is not None and u != start:
            return _unwind(parent, u), "target"
        for s in range(1, n):
            v = u.conj_s(s)
            if v.length() == ln and v != u and v.one_line not in parent:
                parent[v.one_line] = (u, s)
                queue.append(v)
    raise AssertionError(f"conjugation BFS exhausted from {start!r}")


def _unwind(parent, u: Permutation):
    chain = []
    key = u.one_line
    while parent[key] is not None:
        prev, s = parent[key]
        witness, side = _flat_witness(prev, s)
        chain.append(FlatStep(s, prev, prev.conj_s(s), witness, side))
        key = prev.one_line
    chain.reverse()
    return chain


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Bruhat order via the sorted-prefix dominance criterion."""
    if u.n != v.n:
        raise ValueError("degrees differ")
    if u.length() > v.length():
        return False
    a, b = u.one_line, v.one_line
    n = u.n
    ua, va = [], []
    for k in range(n - 1):
        _insort(ua, a[k])
        _insort(va, b[k])
        for x, y in zip(ua, va):
            if x > y:
                return False
    return True


def _insort(lst, x):
    lo, hi = 0, len(lst)
    while lo < hi:
        mid = (lo + hi) // 2
        if lst[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    lst.insert(lo, x)


@lru_cache(maxsize=None)
def all_permutations(n: int) -> tuple:
    """All of S_n sorted by (length, one_line)."""
    import itertools

    perms = [Permutation._raw(p) for p in itertools.permutations(range(1, n + 1))]
    perms.sort(key=lambda w: (w.length(), w.one_line))
    return tuple(perms)


def serialize_word(word) -> str:
    return ",".join(str(i) for i in word)


def parse_word(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(t) for t in text.split(","))
