"""Explicit bijections on S_n.

* Foata's first transformation and its inverse (excedances -> descents).
* The two ways of growing S_n into S_{n+1}: inserting n+1 into a gap, and the
  I-insertion that overwrites position i with n+1 and appends the displaced
  value.
* Theta_n, built one length at a time, carrying adj_{X,Y} to val_{X,Y} for
  disjoint X, Y.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .permutation import CycleForm, Permutation, check_cap, to_cycles
from .setspec import SetSpec, disjoint_on
from .stats import Family, StatId, evaluate

__all__ = [
    "foata", "foata_inverse", "foata_trace", "insert_max", "insert_I",
    "SlotLabeling", "NotDisjoint", "adjacency_effects", "value_effects",
    "label_adjacency_slots", "label_value_slots", "BijectionTable", "build_theta",
]

UP, DOWN, SAME = 1, -1, 0


def _e(sigma) -> tuple[int, ...]:
    return sigma.entries if isinstance(sigma, Permutation) else tuple(sigma)


# ------------------------------------------------------------------- Foata

def foata(w) -> Permutation:
    """Canonical cycle form, reverse every cycle, drop the parentheses."""
    cycles = to_cycles(Permutation(_e(w))).cycles
    return Permutation(tuple(v for c in cycles for v in reversed(c)))


def foata_trace(w) -> tuple[CycleForm, Permutation]:
    w = Permutation(_e(w))
    return to_cycles(w), foata(w)


def foata_inverse(tau) -> Permutation:
    # each reversed cycle starts at a left-to-right maximum of tau
    e = _e(tau)
    blocks: list[list[int]] = []
    top = 0
    for v in e:
        if v > top:
            blocks.append([v])
            top = v
        else:
            blocks[-1].append(v)
    out = [0] * len(e)
    for b in blocks:
        cyc = b[::-1]
        for a, c in zip(cyc, cyc[1:] + cyc[:1]):
            out[a - 1] = c
    return Permutation(tuple(out))


# ------------------------------------------------------------- insertions

def insert_max(sigma, gap: int) -> Permutation:
    """Insert n+1 after the first ``gap`` entries (gap in 0..n)."""
    e = _e(sigma)
    if not 0 <= gap <= len(e):
        raise ValueError(f"gap must be in 0..{len(e)}, got {gap}")
    return Permutation(e[:gap] + (len(e) + 1,) + e[gap:])


def insert_I(sigma, i: int) -> Permutation:
    """I^{(n+1)} appends n+1; I^{(i)}, i <= n, puts n+1 at position i and
    moves the old sigma_i to the end."""
    e = _e(sigma)
    n = len(e)
    if not 1 <= i <= n + 1:
        raise ValueError(f"locus must be in 1..{n + 1}, got {i}")
    if i == n + 1:
        return Permutation(e + (n + 1,))
    return Permutation(e[:i - 1] + (n + 1,) + e[i:] + (e[i - 1],))


# ---------------------------------------------------------- slot labelling

def adjacency_effects(sigma, X: SetSpec, Y: SetSpec) -> list[int]:
    """Change in adj_{X,Y} when n+1 goes into gap g, for g = 0..n."""
    e = _e(sigma)
    n = len(e)
    N = n + 1
    inx, iny = N in X, N in Y
    out = []
    for g in range(n + 1):
        left_x = g >= 1 and e[g - 1] in X
        right_y = g < n and e[g] in Y
        if not inx and not iny:
            out.append(DOWN if left_x and right_y else SAME)
        elif inx and iny:
            out.append(UP if left_x or right_y else SAME)
        elif inx:
            out.append(UP if right_y and not left_x else SAME)
        else:
            out.append(UP if left_x and not right_y else SAME)
    return out


def value_effects(tau, X: SetSpec, Y: SetSpec) -> list[int]:
    """Change in val_{X,Y} under I^{(i)}, for i = 1..n+1."""
    e = _e(tau)
    n = len(e)
    N = n + 1
    inx, iny = N in X, N in Y
    out = []
    for i in range(1, n + 1):
        pos_x, val_y = i in X, e[i - 1] in Y
        if not inx and not iny:
            out.append(DOWN if pos_x and val_y else SAME)
        elif inx and iny:
            out.append(UP if pos_x or val_y else SAME)
        elif inx:
            out.append(UP if val_y and not pos_x else SAME)
        else:
            out.append(UP if pos_x and not val_y else SAME)
    out.append(UP if inx and iny else SAME)
    return out


class NotDisjoint(ValueError):
    pass


@dataclass(frozen=True)
class SlotLabeling:
    """Insertion loci of one permutation.

    ``loci`` are gap indices 0..n (kind ``"gap"``) or I-loci 1..n+1 (kind
    ``"position"``).  ``labels`` follow the left-to-right rule that puts
    loci sitting in an existing (X,Y)-pair first; ``effects`` are the
    statistic change (+1/-1/0) caused by inserting n+1 there.
    """
    kind: str
    loci: tuple[int, ...]
    labels: tuple[int, ...]
    effects: tuple[int, ...]

    def changing(self) -> int:
        return sum(1 for f in self.effects if f != SAME)

    def matching_labels(self) -> tuple[int, ...]:
        """Labels used by Theta: statistic-changing loci left to right, then
        the unchanged ones left to right."""
        order = [j for j, f in enumerate(self.effects) if f != SAME] + \
                [j for j, f in enumerate(self.effects) if f == SAME]
        labels = [0] * len(order)
        for lab, j in enumerate(order, 1):
            labels[j] = lab
        return tuple(labels)

    def locus_for(self, label: int, matching: bool = True) -> int:
        labels = self.matching_labels() if matching else self.labels
        return self.loci[labels.index(label)]


def _pair_first(flags: list[bool]) -> tuple[int, ...]:
    order = [j for j, f in enumerate(flags) if f] + [j for j, f in enumerate(flags) if not f]
    labels = [0] * len(flags)
    for lab, j in enumerate(order, 1):
        labels[j] = lab
    return tuple(labels)


def _require_disjoint(X: SetSpec, Y: SetSpec, n: int) -> None:
    if not disjoint_on(X, Y, n):
        raise NotDisjoint(f"X = {X} and Y = {Y} intersect on [{n}]; "
                          "adjacencies and place-value pairs agree only for disjoint sets")


def label_adjacency_slots(sigma, X: SetSpec, Y: SetSpec) -> SlotLabeling:
    e = _e(sigma)
    n = len(e)
    _require_disjoint(X, Y, n + 1)
    in_pair = [0 < g < n and e[g - 1] in X and e[g] in Y for g in range(n + 1)]
    return SlotLabeling("gap", tuple(range(n + 1)), _pair_first(in_pair),
                        tuple(adjacency_effects(e, X, Y)))


def label_value_slots(tau, X: SetSpec, Y: SetSpec) -> SlotLabeling:
    e = _e(tau)
    n = len(e)
    _require_disjoint(X, Y, n + 1)
    in_pair = [i in X and e[i - 1] in Y for i in range(1, n + 1)] + [False]
    labels = list(_pair_first(in_pair[:n])) + [n + 1]
    return SlotLabeling("position", tuple(range(1, n + 2)), tuple(labels),
                        tuple(value_effects(e, X, Y)))


# ------------------------------------------------------------------ Theta

@dataclass
class BijectionTable:
    n: int
    forward: dict
    source_stat: StatId
    target_stat: StatId

    def __getitem__(self, sigma) -> Permutation:
        return Permutation(self.forward[_e(sigma)])

    def __len__(self) -> int:
        return len(self.forward)

    def is_bijection(self) -> bool:
        image = set(self.forward.values())
        return len(image) == len(self.forward) and image == set(permutations(range(1, self.n + 1)))

    def rows(self) -> Iterator[tuple[Permutation, Permutation, int, int]]:
        for s in sorted(self.forward):
            t = self.forward[s]
            yield (Permutation(s), Permutation(t),
                   evaluate(s, self.source_stat), evaluate(t, self.target_stat))

    def transports(self) -> bool:
        return all(a == b for _, _, a, b in self.rows())

    def csv_lines(self) -> Iterator[str]:
        for s, t, a, b in self.rows():
            sep = ";" if self.n > 9 else ""
            yield f"{_fmt(s, sep)},{_fmt(t, sep)},{a},{b}"


def _fmt(p: Permutation, sep: str) -> str:
    return sep.join(str(v) for v in p.entries)


def build_theta(n: int, X: SetSpec, Y: SetSpec, cap: int | None = None) -> BijectionTable:
    """Theta_n with adj_{X,Y}(sigma) = val_{X,Y}(Theta_n(sigma)).

    Theta_{m+1}(sigma^{(L)}) = Theta_m(sigma)^{(L)}: label L names a gap of
    sigma on one side and an I-locus of Theta_m(sigma) on the other, matched
    through :meth:`SlotLabeling.matching_labels`.
    """
    check_cap(n, cap)
    _require_disjoint(X, Y, n)
    table: dict = {(): ()}
    for m in range(n):
        nxt = {}
        for s, t in table.items():
            a = label_adjacency_slots(s, X, Y)
            v = label_value_slots(t, X, Y)
            for lab in range(1, m + 2):
                s2 = insert_max(s, a.locus_for(lab)).entries
                t2 = insert_I(t, v.locus_for(lab)).entries
                nxt[s2] = t2
        table = nxt
    return BijectionTable(n, table, Family("adj", X, Y), Family("val", X, Y))
