"""
Permutations, compositions and diagrams in an n x n grid.

Rows and columns are 1-based throughout, matching the usual matrix
convention: box (i, j) sits in row i (from the top) and column j (from the
left).  A diagram is stored column by column, each column being the set of
row indices holding a box.

>>> d = rothe_diagram(Permutation.parse("365142"))
>>> format_diagram(d)
'1,2,3;1,2,3,5;;2,3;2;'
>>> [movable_interval(d, j).as_tuple() for j in range(1, 7)]
[(), (4, 5), (), (1, 3), (1, 2), ()]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "Composition", "Diagram", "MovableInterval",
    "rothe_diagram", "skyline_diagram", "movable_interval", "movable_intervals",
    "criterion_check", "contains_pattern", "avoids_lattice_free_patterns",
    "LATTICE_FREE_PATTERNS", "hook_condition", "composition_avoids_02",
    "upper_closure_weight", "theta_word", "theta_column", "theta",
    "parse_diagram", "format_diagram", "to_mask", "from_mask",
    "all_permutations", "standardize", "contains_pattern_bruteforce",
]


def to_mask(subset: Iterable[int]) -> int:
    """Bitmask of a subset of [n]; element i sets bit i-1."""
    m = 0
    for i in subset:
        m |= 1 << (i - 1)
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] in one-line notation."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(a) for a in self.word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"not a permutation of [{len(word)}]: {word}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``"365142"`` or ``"[3,6,5,1,4,2]"``."""
        text = text.strip()
        if text.startswith("["):
            if not text.endswith("]"):
                raise ValueError(f"unterminated permutation: {text!r}")
            body = text[1:-1].strip()
            return cls(tuple(int(a) for a in body.split(",")) if body else ())
        if not text.isdigit():
            raise ValueError(f"bad permutation: {text!r}")
        if len(text) > 9:
            raise ValueError("permutations with n > 9 need the bracketed form")
        return cls(tuple(int(c) for c in text))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    def __str__(self) -> str:
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return "[" + ",".join(map(str, self.word)) + "]"

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    @property
    def n(self) -> int:
        return len(self.word)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, a in enumerate(self.word, 1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def swap(self, i: int) -> Permutation:
        """``w s_i``: exchange the entries in positions i and i+1."""
        w = list(self.word)
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))

    def length(self) -> int:
        """Number of inversions."""
        w = self.word
        return sum(1 for a, b in combinations(range(self.n), 2) if w[a] > w[b])

    def ascents(self) -> list[int]:
        return [i for i in range(1, self.n) if self.word[i - 1] < self.word[i]]


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        if any(a < 0 for a in parts):
            raise ValueError(f"composition parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Composition:
        text = text.strip()
        if not text:
            raise ValueError("empty composition")
        return cls(tuple(int(a) for a in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    def is_weakly_decreasing(self) -> bool:
        p = self.parts
        return all(p[i] >= p[i + 1] for i in range(len(p) - 1))


@dataclass(frozen=True)
class MovableInterval:
    """A run of consecutive rows ``lo..hi``, or the empty interval."""
    lo: int | None = None
    hi: int | None = None

    def __post_init__(self):
        if (self.lo is None) != (self.hi is None):
            raise ValueError("both ends must be given, or neither")
        if self.lo is not None and self.lo > self.hi:
            raise ValueError(f"empty range {self.lo}..{self.hi}")

    @property
    def empty(self) -> bool:
        return self.lo is None

    def as_set(self) -> frozenset[int]:
        if self.empty:
            return frozenset()
        return frozenset(range(self.lo, self.hi + 1))

    def as_tuple(self) -> tuple[int, ...]:
        return () if self.empty else (self.lo, self.hi)

    def __len__(self) -> int:
        return 0 if self.empty else self.hi - self.lo + 1

    def overlap(self, other: MovableInterval) -> int:
        if self.empty or other.empty:
            return 0
        return max(0, min(self.hi, other.hi) - max(self.lo, other.lo) + 1)


@dataclass(frozen=True)
class Diagram:
    """Boxes in an n x n grid, stored as a tuple of n column row-sets."""
    n: int
    columns: tuple[frozenset[int], ...]

    def __post_init__(self):
        cols = tuple(frozenset(int(i) for i in c) for c in self.columns)
        if len(cols) > self.n:
            raise ValueError(f"{len(cols)} columns do not fit in n={self.n}")
        cols = cols + (frozenset(),) * (self.n - len(cols))
        for c in cols:
            for i in c:
                if not 1 <= i <= self.n:
                    raise ValueError(f"row {i} outside [1, {self.n}]")
        object.__setattr__(self, "columns", cols)

    @classmethod
    def from_boxes(cls, n: int, boxes: Iterable[tuple[int, int]]) -> Diagram:
        cols: list[set[int]] = [set() for _ in range(n)]
        for i, j in boxes:
            if not 1 <= j <= n:
                raise ValueError(f"column {j} outside [1, {n}]")
            cols[j - 1].add(i)
        return cls(n, tuple(frozenset(c) for c in cols))

    @property
    def size(self) -> int:
        """Total number of boxes, #D."""
        return sum(len(c) for c in self.columns)

    def boxes(self) -> list[tuple[int, int]]:
        return sorted((i, j) for j, c in enumerate(self.columns, 1) for i in c)

    @cached_property
    def column_masks(self) -> tuple[int, ...]:
        return tuple(to_mask(c) for c in self.columns)

    @cached_property
    def theta_table(self) -> tuple[int, ...]:
        # theta_D(I) for every I, indexed by bitmask
        n = self.n
        table = [0] * (1 << n)
        for c in self.column_masks:
            for mask in range(1 << n):
                table[mask] += _theta_masks(c, mask, n)
        return tuple(table)

    def __str__(self) -> str:
        return format_diagram(self)


def format_diagram(d: Diagram) -> str:
    return ";".join(",".join(map(str, sorted(c))) for c in d.columns)


def parse_diagram(text: str, n: int) -> Diagram:
    """Read ``"1,3;2,3;1"``; missing trailing columns are empty."""
    cols = []
    for part in text.split(";"):
        part = part.strip()
        cols.append(frozenset(int(a) for a in part.split(",")) if part else frozenset())
    return Diagram(n, tuple(cols))


def _as_perm(w) -> Permutation:
    if isinstance(w, Permutation):
        return w
    if isinstance(w, str):
        return Permutation.parse(w)
    return Permutation(tuple(w))


def _as_comp(a) -> Composition:
    if isinstance(a, Composition):
        return a
    if isinstance(a, str):
        return Composition.parse(a)
    return Composition(tuple(a))


def rothe_diagram(w) -> Diagram:
    """Boxes (i, j) with w(i) > j and w^{-1}(j) > i."""
    w = _as_perm(w)
    winv = w.inverse()
    n = w.n
    cols = tuple(
        frozenset(i for i in range(1, n + 1) if w(i) > j and winv(j) > i)
        for j in range(1, n + 1)
    )
    return Diagram(n, cols)


def skyline_diagram(alpha, n: int | None = None) -> Diagram:
    """alpha_i left-justified boxes in row i; column j is {i : alpha_i >= j}."""
    alpha = _as_comp(alpha)
    n = alpha.n if n is None else n
    if alpha.n > n:
        raise ValueError(f"composition of length {alpha.n} exceeds n={n}")
    if any(a > n for a in alpha.parts):
        raise ValueError(f"part {max(alpha.parts)} exceeds ambient size n={n}")
    cols = tuple(
        frozenset(i for i, a in enumerate(alpha.parts, 1) if a >= j)
        for j in range(1, n + 1)
    )
    return Diagram(n, cols)


def movable_interval(d: Diagram, j: int) -> MovableInterval:
    """Rows from the topmost empty position down to the bottommost box of column j.

    Empty when no box lies below an empty position (including empty columns
    and columns of the form {1..k}).
    """
    col = d.columns[j - 1]
    if not col:
        return MovableInterval()
    first_gap = next((i for i in range(1, d.n + 1) if i not in col), None)
    last_box = max(col)
    if first_gap is None or first_gap > last_box:
        return MovableInterval()
    return MovableInterval(first_gap, last_box)


def movable_intervals(d: Diagram) -> list[MovableInterval]:
    return [movable_interval(d, j) for j in range(1, d.n + 1)]


def criterion_check(d: Diagram, mode: str = "at-most-one") -> tuple[bool, tuple[int, int] | None]:
    """Compare movable intervals pairwise.

    ``mode="at-most-one"`` allows intersections of size one, ``"disjoint"``
    allows none.  Returns ``(ok, witness)`` where the witness is the
    lexicographically smallest violating column pair.
    """
    if mode not in ("at-most-one", "disjoint"):
        raise ValueError(f"unknown mode {mode!r}")
    limit = 1 if mode == "at-most-one" else 0
    ms = movable_intervals(d)
    for i in range(d.n):
        for j in range(i + 1, d.n):
            if ms[i].overlap(ms[j]) > limit:
                return False, (i + 1, j + 1)
    return True, None


LATTICE_FREE_PATTERNS = (
    Permutation((1, 4, 2, 3)),
    Permutation((1, 4, 3, 2)),
    Permutation((1, 3, 2, 5, 4)),
)


def contains_pattern(w, tau) -> tuple[bool, tuple[int, ...] | None]:
    """Search for positions i_1 < ... < i_k with w restricted there order-isomorphic to tau.

    Depth-first over positions with prefix pruning: a partial choice is kept
    only if it already has the relative order of the matching prefix of tau.
    The first witness found is the lexicographically smallest one.
    """
    w = _as_perm(w).word
    tau = _as_perm(tau).word
    n, k = len(w), len(tau)
    if k > n:
        return False, None
    if k == 0:
        return True, ()
    chosen: list[int] = []

    def consistent(pos: int) -> bool:
        m = len(chosen)
        v = w[pos]
        for a in range(m):
            if (w[chosen[a]] < v) != (tau[a] < tau[m]):
                return False
        return True

    def search(start: int) -> bool:
        m = len(chosen)
        if m == k:
            return True
        for pos in range(start, n - (k - m) + 1):
            if consistent(pos):
                chosen.append(pos)
                if search(pos + 1):
                    return True
                chosen.pop()
        return False

    if search(0):
        return True, tuple(p + 1 for p in chosen)
    return False, None


def avoids_lattice_free_patterns(w) -> bool:
    """True iff w avoids 1423, 1432 and 13254."""
    w = _as_perm(w)
    return not any(contains_pattern(w, tau)[0] for tau in LATTICE_FREE_PATTERNS)


def hook_condition(w) -> bool:
    """Every hook has at most one column with boxes strictly to its lower right."""
    w = _as_perm(w)
    d = rothe_diagram(w)
    for i in range(1, w.n + 1):
        cols = 0
        for j in range(w(i) + 1, w.n + 1):
            if any(r > i for r in d.columns[j - 1]):
                cols += 1
                if cols > 1:
                    return False
    return True


def composition_avoids_02(alpha) -> bool:
    """No i < j with alpha_j - alpha_i >= 2."""
    p = _as_comp(alpha).parts
    lowest = None
    for a in p:
        if lowest is not None and a - lowest >= 2:
            return False
        lowest = a if lowest is None else min(lowest, a)
    return True


def upper_closure_weight(d: Diagram) -> tuple[int, ...]:
    """Row weights of the upper closure: entry i counts columns with i <= max(D_j)."""
    tops = [max(c) for c in d.columns if c]
    return tuple(sum(1 for t in tops if i <= t) for i in range(1, d.n + 1))


def theta_word(column: Iterable[int], subset: Iterable[int], n: int) -> str:
    """word_I(D_j), read top to bottom: '(' empty&in I, ')' box&not in I, '*' box&in I."""
    col = set(column)
    sub = set(subset)
    out = []
    for i in range(1, n + 1):
        if i in col:
            out.append("*" if i in sub else ")")
        elif i in sub:
            out.append("(")
    return "".join(out)


def _theta_masks(col: int, sub: int, n: int) -> int:
    opened = 0
    total = 0
    for i in range(n):
        bit = 1 << i
        if col & bit:
            if sub & bit:
                total += 1
            elif opened:
                opened -= 1
                total += 1
        elif sub & bit:
            opened += 1
    return total


def theta_column(column: Iterable[int], subset: Iterable[int], n: int) -> int:
    """Matched parenthesis pairs plus stars in word_I(D_j)."""
    return _theta_masks(to_mask(column), to_mask(subset), n)


def theta(d: Diagram, subset: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """theta_D(I) together with the per-column values."""
    sub = to_mask(subset)
    if sub >> d.n:
        raise ValueError(f"subset not contained in [{d.n}]")
    per = tuple(_theta_masks(c, sub, d.n) for c in d.column_masks)
    return sum(per), per


def all_permutations(n: int) -> list[Permutation]:
    from itertools import permutations
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Replace values by their ranks 1..k."""
    order = sorted(values)
    return tuple(order.index(v) + 1 for v in values)


def contains_pattern_bruteforce(w, tau) -> bool:
    """Containment by standardizing every length-k subsequence of w."""
    w = _as_perm(w).word
    tau = _as_perm(tau).word
    if len(tau) > len(w):
        return False
    return any(standardize(sub) == tau for sub in combinations(w, len(tau)))
