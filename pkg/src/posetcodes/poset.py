"""Partial orders on {1, ..., n} and their lower order ideals.

A poset stores, for every element j, the bitmask of its principal
down-set {i : i <= j} (bit i-1 of ``below[j-1]`` set iff i <= j).
Ideals are plain int bitmasks over the same bit layout: bit i-1
represents element i.  Enumerations are deterministic, ascending in the
integer value of the mask.
"""

from __future__ import annotations

import itertools

from .errors import CycleDetected, IndexOutOfRange


class Poset:
    """An immutable partial order on the ground set {1, ..., n}."""

    __slots__ = ("n", "below")

    def __init__(self, n: int, below):
        self.n = n
        self.below = tuple(below)
        if len(self.below) != n:
            raise IndexOutOfRange("below table length must equal n")
        for j, m in enumerate(self.below):
            if not (m >> j) & 1:
                raise CycleDetected("relation is not reflexive")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, covers) -> "Poset":
        """Build from cover pairs (i, j) meaning i < j, 1-based.

        The stored relation is the reflexive-transitive closure.  Raises
        CycleDetected if the pairs create a directed cycle and
        IndexOutOfRange for elements outside 1..n.
        """
        if n < 0:
            raise IndexOutOfRange("n must be nonnegative")
        up = [[] for _ in range(n)]   # edges i -> j (i covered by j)
        indeg = [0] * n
        seen = set()
        for i, j in covers:
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexOutOfRange(f"cover ({i},{j}) outside 1..{n}")
            if i == j:
                raise CycleDetected(f"self-relation ({i},{j})")
            if (i, j) in seen:
                continue
            seen.add((i, j))
            up[i - 1].append(j - 1)
            indeg[j - 1] += 1
        # Kahn's algorithm; the topological order drives the closure DP
        order = [v for v in range(n) if indeg[v] == 0]
        head = 0
        below = [1 << v for v in range(n)]
        while head < len(order):
            v = order[head]
            head += 1
            for w in up[v]:
                below[w] |= below[v]
                indeg[w] -= 1
                if indeg[w] == 0:
                    order.append(w)
        if head != n:
            raise CycleDetected("cover relations contain a cycle")
        return cls(n, below)

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(n, [1 << v for v in range(n)])

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(n, [(1 << (v + 1)) - 1 for v in range(n)])

    # -- order relation ------------------------------------------------------

    def leq(self, i: int, j: int) -> bool:
        """Whether i <= j in the poset (1-based)."""
        self._check(i)
        self._check(j)
        return bool((self.below[j - 1] >> (i - 1)) & 1)

    def _check(self, i):
        if not (1 <= i <= self.n):
            raise IndexOutOfRange(f"element {i} outside 1..{self.n}")

    def covers(self):
        """Recover the cover pairs (i, j) with i covered by j, sorted."""
        out = []
        for j in range(self.n):
            strict = self.below[j] & ~(1 << j)
            for i in range(self.n):
                if not (strict >> i) & 1:
                    continue
                # i is covered by j iff no c with i < c < j
                between = strict & ~(1 << i)
                blocked = False
                while between:
                    low = between & -between
                    c = low.bit_length() - 1
                    between ^= low
                    if (self.below[c] >> i) & 1:
                        blocked = True
                        break
                if not blocked:
                    out.append((i + 1, j + 1))
        return sorted(out)

    def minimal_elements(self):
        return tuple(j + 1 for j in range(self.n) if self.below[j] == 1 << j)

    # -- ideals ----------------------------------------------------------------

    def ideal(self, elems) -> int:
        """Smallest lower order ideal containing ``elems`` as a bitmask.

        ``elems`` may be an iterable of 1-based elements or an int mask.
        """
        mask = 0
        if isinstance(elems, int):
            bits = elems
            while bits:
                low = bits & -bits
                mask |= self.below[low.bit_length() - 1]
                bits ^= low
        else:
            for i in elems:
                self._check(i)
                mask |= self.below[i - 1]
        return mask

    def is_ideal(self, mask: int) -> bool:
        """Whether the bitmask is downward closed."""
        bits = mask
        while bits:
            low = bits & -bits
            if self.below[low.bit_length() - 1] & ~mask:
                return False
            bits ^= low
        return True

    def ideals_of_size(self, k: int):
        """All ideals with exactly k members, ascending as bitmasks."""
        if not 0 <= k <= self.n:
            raise IndexOutOfRange(f"size {k} outside 0..{self.n}")
        for mask in range(1 << self.n):
            if mask.bit_count() == k and self.is_ideal(mask):
                yield mask

    def all_ideals(self):
        for mask in range(1 << self.n):
            if self.is_ideal(mask):
                yield mask

    @staticmethod
    def members(mask: int):
        """1-based elements of a bitmask, ascending."""
        out = []
        i = 1
        while mask:
            if mask & 1:
                out.append(i)
            mask >>= 1
            i += 1
        return tuple(out)

    # -- identity and serialization ---------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.below == other.below

    def __hash__(self):
        return hash((self.n, self.below))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers()]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poset":
        return cls.from_covers(int(obj["n"]), [tuple(c) for c in obj["covers"]])


def poset_from_covers(n: int, covers) -> Poset:
    return Poset.from_covers(n, covers)


def all_posets(n: int):
    """Every labeled poset on {1..n}, in a fixed deterministic order.

    Each unordered pair {i < j} independently gets one of three states
    (incomparable, i < j, j < i); assignments are scanned in
    lexicographic order and the transitive ones are kept.  Counts grow
    as 1, 1, 3, 19, 219, 4231, ... so this is practical for n <= 5 only.
    """
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        below = [1 << v for v in range(n)]
        for (i, j), s in zip(pairs, states):
            if s == 1:
                below[j] |= 1 << i
            elif s == 2:
                below[i] |= 1 << j
        if _is_transitive(n, below):
            yield Poset(n, below)


def _is_transitive(n, below):
    for j in range(n):
        bits = below[j] & ~(1 << j)
        while bits:
            low = bits & -bits
            if below[low.bit_length() - 1] & ~below[j]:
                return False
            bits ^= low
    return True


def random_poset(n: int, rng, density: float = 0.4) -> Poset:
    """A random labeled poset: a random linear extension with random
    upward relations, then the transitive closure."""
    perm = list(range(n))
    rng.shuffle(perm)
    below = [1 << v for v in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                below[perm[b]] |= 1 << perm[a]
    # closure in topological (perm) order
    for b in range(n):
        j = perm[b]
        bits = below[j] & ~(1 << j)
        while bits:
            low = bits & -bits
            below[j] |= below[low.bit_length() - 1]
            bits ^= low
    return Poset(n, below)
