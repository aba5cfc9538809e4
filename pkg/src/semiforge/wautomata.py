"""Weighted automata over Q: evaluation, forward/backward state-space
restriction (the minimal-automaton construction), and the finiteness
decision through the transition monoid of the minimized automaton.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Mat, Subspace, _frac
from .semigroup import FinitenessResult, MorphismTable, decide_finiteness


class UnknownLetter(KeyError):
    pass


@dataclass
class WeightedAutomaton:
    """States are coordinates; the value of a word is alpha * M(w) * eta^T."""

    table: MorphismTable
    alpha: tuple[Fraction, ...]
    eta: tuple[Fraction, ...]

    def __post_init__(self):
        self.alpha = tuple(_frac(x) for x in self.alpha)
        self.eta = tuple(_frac(x) for x in self.eta)
        if len(self.alpha) != self.table.n or len(self.eta) != self.table.n:
            raise ValueError("state vectors must have one entry per state")

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.table.alphabet


def evaluate(A: WeightedAutomaton, word) -> Fraction:
    v = list(A.alpha)
    for a in word:
        if a not in A.table.mapping:
            raise UnknownLetter(a)
        m = A.table.mapping[a]
        v = [sum(v[i] * m.data[i][j] for i in range(A.n)) for j in range(A.n)]
    return sum(x * y for x, y in zip(v, A.eta)) if A.n else Fraction(0)


def _reach_space(start: tuple, mats: list[Mat], n: int) -> tuple[Subspace, int]:
    """Span of start vector under repeated right multiplication; returns
    the space and the number of expansion rounds until stable."""
    space = Subspace.from_rows(n, (start,) if any(start) else ())
    frontier = [start] if any(start) else []
    rounds = 0
    while frontier:
        fresh = []
        for v in frontier:
            for m in mats:
                u = tuple(sum(v[i] * m.data[i][j] for i in range(n)) for j in range(n))
                if not space.contains(u):
                    space = Subspace.from_rows(n, space.basis.data + (u,))
                    fresh.append(u)
        frontier = fresh
        if fresh:
            rounds += 1
    return space, rounds


def forward_space(A: WeightedAutomaton) -> Subspace:
    """span{alpha * M(w) : w over the alphabet}."""
    mats = [A.table.mapping[a] for a in A.alphabet]
    return _reach_space(A.alpha, mats, A.n)[0]


def backward_space(A: WeightedAutomaton) -> Subspace:
    """span{eta * M(w)^T}: the forward space of the reversed automaton."""
    return forward_space(reverse(A))


def reverse(A: WeightedAutomaton) -> WeightedAutomaton:
    table = MorphismTable(A.n, A.alphabet,
                          {a: A.table.mapping[a].transpose() for a in A.alphabet})
    return WeightedAutomaton(table, A.eta, A.alpha)


def _forward_restrict(A: WeightedAutomaton) -> WeightedAutomaton:
    F = forward_space(A)
    f = F.dim
    if f == 0:
        empty = MorphismTable(0, A.alphabet, {a: Mat((), cols=0) for a in A.alphabet})
        return WeightedAutomaton(empty, (), ())
    basis = F.basis
    alpha = F.coords(A.alpha)
    mapping = {}
    for a in A.alphabet:
        fm = basis * A.table.mapping[a]
        # rows stay inside the forward space, so coordinates are exact
        mapping[a] = Mat(tuple(F.coords(row) for row in fm.data), cols=f)
    eta = tuple(sum(x * y for x, y in zip(row, A.eta)) for row in basis.data)
    return WeightedAutomaton(MorphismTable(f, A.alphabet, mapping), alpha, eta)


def minimize(A: WeightedAutomaton) -> WeightedAutomaton:
    """Forward restriction followed by a backward restriction; the result
    computes the same word function on as few states as possible."""
    return reverse(_forward_restrict(reverse(_forward_restrict(A))))


def decide_wa_finiteness(A: WeightedAutomaton, cap: int | None = None) -> FinitenessResult:
    """Whether the value set {alpha*M(w)*eta^T} is finite.

    Minimizes first; on the minimal automaton, finiteness of the value set
    coincides with finiteness of the transition monoid.
    """
    B = minimize(A)
    if B.n == 0:
        return FinitenessResult("finite")
    return decide_finiteness(B.table, cap)
