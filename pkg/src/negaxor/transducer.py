"""Deterministic Mealy transducers over the digit alphabet ``{0, ..., b-1}``.

A :class:`Transducer` is complete: every state has exactly one transition and
one output word per input digit.  Input and output strings are processed
least-significant digit first, the same order :mod:`negaxor.numeral` uses.

Reading digit ``d`` in state ``q`` emits ``output[q][d]`` and then moves to
``delta[q][d]``.  Numbers have an unbounded supply of leading zeros, so a run
keeps feeding ``0`` after the input is exhausted until it sits in a
*quiescent* state, one from which zeros can only ever produce zeros.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .numeral import DigitString, DomainError, check_radix, from_base, to_base


class TransducerError(ValueError):
    """Malformed machine or an operation applied to the wrong kind of machine."""


class NonTerminatingError(RuntimeError):
    """The zero tail of a run never reaches a quiescent state."""


@dataclass(frozen=True)
class Transducer:
    """Complete deterministic Mealy machine.

    ``delta[q][d]`` is the successor of state index ``q`` on digit ``d``;
    ``output[q][d]`` is the word (tuple of digits) emitted on that step.
    ``labels`` are display names only and never take part in equality of
    behaviour; use :func:`isomorphic` for that.
    """

    radix: int
    labels: tuple
    initial: int
    delta: tuple
    output: tuple

    def __post_init__(self):
        b = check_radix(self.radix)
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(
            self, "output",
            tuple(tuple(tuple(w) for w in row) for row in self.output))
        if n == 0:
            raise TransducerError("a transducer needs at least one state")
        if not 0 <= self.initial < n:
            raise TransducerError(f"initial state {self.initial} out of range")
        if len(self.delta) != n or len(self.output) != n:
            raise TransducerError("delta/output need one row per state")
        for q in range(n):
            if len(self.delta[q]) != b or len(self.output[q]) != b:
                raise TransducerError(
                    f"state {self.labels[q]!r} is not complete over {b} digits")
            for d in range(b):
                if not 0 <= self.delta[q][d] < n:
                    raise TransducerError(
                        f"transition ({self.labels[q]!r}, {d}) leaves the machine")
                if any(not 0 <= x < b for x in self.output[q][d]):
                    raise TransducerError(
                        f"output on ({self.labels[q]!r}, {d}) has a digit >= {b}")

    @classmethod
    def from_step(cls, radix: int, states: Sequence[Hashable], initial,
                  step: Callable) -> Transducer:
        """Build from ``step(state, digit) -> (next_state, output)``.

        ``output`` may be a single digit or a sequence of digits.
        """
        check_radix(radix)
        states = list(states)
        index = {s: i for i, s in enumerate(states)}
        if len(index) != len(states):
            raise TransducerError("duplicate state")
        delta, output = [], []
        for s in states:
            drow, orow = [], []
            for d in range(radix):
                nxt, out = step(s, d)
                if nxt not in index:
                    raise TransducerError(f"step({s!r}, {d}) -> unknown state {nxt!r}")
                drow.append(index[nxt])
                orow.append((out,) if isinstance(out, int) else tuple(out))
            delta.append(drow)
            output.append(orow)
        return cls(radix, tuple(str(s) for s in states), index[initial],
                   delta, output)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def states(self) -> range:
        return range(len(self.labels))

    @property
    def is_letter_to_letter(self) -> bool:
        return all(len(w) == 1 for row in self.output for w in row)

    def transitions(self):
        """Yield ``(source, digit, target, word)`` in state then digit order."""
        for q in self.states:
            for d in range(self.radix):
                yield q, d, self.delta[q][d], self.output[q][d]

    def __call__(self, n: int) -> int:
        """Run on the base-b expansion of ``n`` and read the output in base b."""
        return from_base(run(self, to_base(n, self.radix)).output)


@dataclass(frozen=True)
class RunResult:
    output: DigitString
    final_state: int
    padded_steps: int


def quiescent_states(t: Transducer) -> frozenset:
    """Largest set S where reading 0 from S emits only zeros and stays in S."""
    alive = {q for q in t.states if not any(t.output[q][0])}
    changed = True
    while changed:
        changed = False
        for q in list(alive):
            if t.delta[q][0] not in alive:
                alive.discard(q)
                changed = True
    return frozenset(alive)


def run(t: Transducer, digits: Iterable[int]) -> RunResult:
    """Feed ``digits`` (LSB first), then zeros until quiescent."""
    b = t.radix
    q = t.initial
    out = []
    for d in digits:
        if not 0 <= d < b:
            raise DomainError(f"digit {d} out of range for radix {b}")
        out.extend(t.output[q][d])
        q = t.delta[q][d]
    quiet = quiescent_states(t)
    padded = 0
    while q not in quiet:
        if padded >= t.size:
            raise NonTerminatingError(
                f"zero tail from state {t.labels[q]!r} never goes quiet")
        out.extend(t.output[q][0])
        q = t.delta[q][0]
        padded += 1
    return RunResult(DigitString(out, b).canonical(), q, padded)


def _require_letter_to_letter(t: Transducer, what: str):
    if not t.is_letter_to_letter:
        raise TransducerError(f"{what} requires letter-to-letter machines")


def _bfs_order(t: Transducer) -> list:
    seen = {t.initial: 0}
    order = [t.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for d in range(t.radix):
            r = t.delta[q][d]
            if r not in seen:
                seen[r] = len(order)
                order.append(r)
                queue.append(r)
    return order


def reachable(t: Transducer) -> Transducer:
    """Restrict to states reachable from the initial state.

    States are renumbered in breadth-first order (digits ascending), so the
    initial state becomes index 0.
    """
    order = _bfs_order(t)
    if order == list(t.states):
        return t
    new = {q: i for i, q in enumerate(order)}
    return Transducer(
        t.radix,
        tuple(t.labels[q] for q in order),
        0,
        [[new[t.delta[q][d]] for d in range(t.radix)] for q in order],
        [t.output[q] for q in order],
    )


def product(t1: Transducer, t2: Transducer,
            combine: Callable[[int, int], int]) -> Transducer:
    """Run ``t1`` and ``t2`` side by side, emitting ``combine(o1, o2)``.

    Only pairs reachable from ``(t1.initial, t2.initial)`` are built.  Labels
    are ``"label1,label2"``.
    """
    if t1.radix != t2.radix:
        raise TransducerError(f"radix mismatch: {t1.radix} vs {t2.radix}")
    _require_letter_to_letter(t1, "product")
    _require_letter_to_letter(t2, "product")
    b = t1.radix
    start = (t1.initial, t2.initial)
    index = {start: 0}
    pairs = [start]
    delta, output = [], []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        drow, orow = [], []
        for d in range(b):
            nxt = (t1.delta[p][d], t2.delta[q][d])
            if nxt not in index:
                index[nxt] = len(pairs)
                pairs.append(nxt)
            drow.append(index[nxt])
            c = combine(t1.output[p][d][0], t2.output[q][d][0])
            orow.append((c,))
        delta.append(drow)
        output.append(orow)
        i += 1
    labels = tuple(f"{t1.labels[p]},{t2.labels[q]}" for p, q in pairs)
    return Transducer(b, labels, 0, delta, output)


def relabel_outputs(t: Transducer, f: Callable[[int], int]) -> Transducer:
    """Map every emitted digit through ``f``; transitions are untouched."""
    return Transducer(
        t.radix, t.labels, t.initial, t.delta,
        [[tuple(f(x) for x in w) for w in row] for row in t.output])


def relabel_outputs_with_input(t: Transducer,
                               g: Callable[[int, int], int]) -> Transducer:
    """Replace the output on input ``d`` by ``g(d, old_output)``."""
    _require_letter_to_letter(t, "relabel_outputs_with_input")
    return Transducer(
        t.radix, t.labels, t.initial, t.delta,
        [[(g(d, row[d][0]),) for d in range(t.radix)] for row in t.output])


def minimize(t: Transducer) -> Transducer:
    """Quotient of the reachable part by output equivalence.

    Moore-style refinement: start from blocks of states with identical output
    rows, split by the blocks of their successors until nothing changes.
    Merged states are labelled ``"{a|b|...}"``; singletons keep their label.
    """
    _require_letter_to_letter(t, "minimize")
    t = reachable(t)
    b = t.radix
    block = _canon_blocks([t.output[q] for q in t.states])
    while True:
        sig = [(block[q],) + tuple(block[t.delta[q][d]] for d in range(b))
               for q in t.states]
        refined = _canon_blocks(sig)
        if max(refined) == max(block):
            break
        block = refined
    count = max(block) + 1
    members = [[] for _ in range(count)]
    for q in t.states:
        members[block[q]].append(q)
    labels = tuple(
        t.labels[m[0]] if len(m) == 1
        else "{" + "|".join(t.labels[q] for q in m) + "}"
        for m in members)
    reps = [m[0] for m in members]
    return Transducer(
        b, labels, block[t.initial],
        [[block[t.delta[r][d]] for d in range(b)] for r in reps],
        [t.output[r] for r in reps])


def _canon_blocks(keys) -> list:
    # number blocks by first appearance so state 0 (the initial) is block 0
    ids = {}
    return [ids.setdefault(k, len(ids)) for k in keys]


@dataclass(frozen=True)
class IsomorphismWitness:
    """``mapping[q]`` is the state of the second machine matched to ``q``."""

    mapping: tuple

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Mismatch:
    """Why two machines are not the same up to relabeling.

    ``kind`` is ``"radix"``, ``"state-count"``, ``"output"`` or
    ``"transition"``; the last two carry the offending state and digit.
    """

    kind: str
    detail: str
    state: int | None = None
    digit: int | None = None

    def __bool__(self):
        return False


def isomorphic(t1: Transducer, t2: Transducer):
    """Return an :class:`IsomorphismWitness` or a falsy :class:`Mismatch`.

    Walks both machines in lockstep from their initial states, breadth first
    with digits ascending.  Because the machines are deterministic this fixes
    the only candidate bijection; every transition is checked against it.
    Minimize first if the question is behavioural equivalence.
    """
    if t1.radix != t2.radix:
        return Mismatch("radix", f"radix {t1.radix} vs {t2.radix}")
    _require_letter_to_letter(t1, "isomorphic")
    _require_letter_to_letter(t2, "isomorphic")
    if t1.size != t2.size:
        return Mismatch("state-count", f"{t1.size} states vs {t2.size}")
    fwd = {t1.initial: t2.initial}
    bwd = {t2.initial: t1.initial}
    queue = deque([t1.initial])
    while queue:
        p = queue.popleft()
        q = fwd[p]
        for d in range(t1.radix):
            if t1.output[p][d] != t2.output[q][d]:
                return Mismatch(
                    "output",
                    f"({t1.labels[p]!r}, {d}) emits {list(t1.output[p][d])}, "
                    f"({t2.labels[q]!r}, {d}) emits {list(t2.output[q][d])}",
                    p, d)
            p2, q2 = t1.delta[p][d], t2.delta[q][d]
            if p2 in fwd or q2 in bwd:
                if fwd.get(p2) != q2 or bwd.get(q2) != p2:
                    return Mismatch(
                        "transition",
                        f"({t1.labels[p]!r}, {d}) -> {t1.labels[p2]!r} does not "
                        f"match ({t2.labels[q]!r}, {d}) -> {t2.labels[q2]!r}",
                        p, d)
            else:
                fwd[p2] = q2
                bwd[q2] = p2
                queue.append(p2)
    if len(fwd) != t1.size:
        # both have unreachable states; a lockstep walk cannot pair them
        return Mismatch("state-count",
                        f"only {len(fwd)} of {t1.size} states are reachable")
    return IsomorphismWitness(tuple(fwd[p] for p in t1.states))
