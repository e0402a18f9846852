"""The concrete transducers behind ``(b+1)n ⊖ n`` and ``n ⊕_{-b} (-n)``.

Diagrams are written as lists of guarded edges
``(source, guard, output, target)`` where ``guard`` and ``output`` are
functions of the input digit.  :func:`compile_edges` turns such a list into a
complete machine and refuses guards that overlap or leave a digit uncovered.
"""

from __future__ import annotations

from .numeral import check_radix
from .transducer import (Transducer, TransducerError, minimize, product,
                         relabel_outputs, relabel_outputs_with_input)


def _all(d):
    return True


def compile_edges(b: int, states, initial, edges) -> Transducer:
    b = check_radix(b)
    table = {}
    for src, guard, out, dst in edges:
        for d in range(b):
            if not guard(d):
                continue
            if (src, d) in table:
                raise TransducerError(
                    f"overlapping guards on state {src!r}, digit {d}")
            table[src, d] = (dst, out(d))
    missing = [(s, d) for s in states for d in range(b) if (s, d) not in table]
    if missing:
        raise TransducerError(f"diagram leaves {missing[0]} undefined")
    return Transducer.from_step(b, states, initial, lambda s, d: table[s, d])


def conv_n_to_negabase(b: int) -> Transducer:
    """Base-b digits of ``n`` -> base-(-b) digits of ``n``."""
    b = check_radix(b)
    edges = [
        ("even 0", _all, lambda d: d, "odd 0"),
        ("odd 0", lambda d: d == 0, lambda d: 0, "even 0"),
        ("odd 0", lambda d: d > 0, lambda d: b - d, "even 1"),
        ("even 1", lambda d: d < b - 1, lambda d: d + 1, "odd 0"),
        ("even 1", lambda d: d == b - 1, lambda d: 0, "odd 1"),
        ("odd 1", _all, lambda d: b - 1 - d, "even 1"),
    ]
    return compile_edges(b, ["even 0", "odd 0", "even 1", "odd 1"],
                         "even 0", edges)


def conv_neg_n_to_negabase(b: int) -> Transducer:
    """Base-b digits of ``n`` -> base-(-b) digits of ``-n``.

    Same shape as :func:`conv_n_to_negabase` with the parities swapped; the
    machine still starts in ``"even 0"``.
    """
    b = check_radix(b)
    edges = [
        ("odd 0", _all, lambda d: d, "even 0"),
        ("even 0", lambda d: d == 0, lambda d: 0, "odd 0"),
        ("even 0", lambda d: d > 0, lambda d: b - d, "odd 1"),
        ("odd 1", lambda d: d < b - 1, lambda d: d + 1, "even 0"),
        ("odd 1", lambda d: d == b - 1, lambda d: 0, "even 1"),
        ("even 1", _all, lambda d: b - 1 - d, "odd 1"),
    ]
    return compile_edges(b, ["even 0", "odd 0", "odd 1", "even 1"],
                         "even 0", edges)


def lemma1_machine(b: int) -> Transducer:
    """Three-state machine for ``n -> n ⊕_{-b} (-n)``."""
    b = check_radix(b)
    edges = [
        ("00", lambda d: d == 0, lambda d: 0, "00"),
        ("00", lambda d: d > 0, lambda d: 0, "10"),
        ("10", lambda d: d == 0, lambda d: 1, "00"),
        # empty when b == 2
        ("10", lambda d: 0 < d < b - 1, lambda d: 1, "10"),
        ("10", lambda d: d == b - 1, lambda d: 1, "11"),
        ("11", lambda d: d == b - 1, lambda d: 0, "11"),
        ("11", lambda d: d < b - 1, lambda d: 0, "10"),
    ]
    return compile_edges(b, ["00", "10", "11"], "00", edges)


def mult_by_b_plus_1(b: int) -> Transducer:
    """Carry machine for multiplication by ``b + 1``; states are carries 0..b."""
    b = check_radix(b)

    def step(c, a):
        return (a + c) // b + a, (a + c) % b

    return Transducer.from_step(b, range(b + 1), 0, step)


def ominus_mult_machine(b: int) -> Transducer:
    """``n -> ((b+1)n) ⊖ n``: the carry machine with the input digit
    subtracted from each output digit, which leaves the carry ``c mod b``."""
    return relabel_outputs_with_input(mult_by_b_plus_1(b),
                                      lambda a, o: (o - a) % b)


def theorem_machine(b: int) -> Transducer:
    """Minimal machine for the double-bar reduction of ``((b+1)n) ⊖ n``.

    Obtained mechanically, not drawn by hand: clamp the outputs of
    :func:`ominus_mult_machine` to ``{0, 1}`` and minimize.
    """
    return minimize(relabel_outputs(ominus_mult_machine(b), lambda d: min(d, 1)))


def figure1_product(b: int) -> Transducer:
    """Both negabase converters run together, digits summed mod b."""
    b = check_radix(b)
    return product(conv_n_to_negabase(b), conv_neg_n_to_negabase(b),
                   lambda x, y: (x + y) % b)


MACHINES = {
    "conv_n_to_negabase": conv_n_to_negabase,
    "conv_neg_n_to_negabase": conv_neg_n_to_negabase,
    "lemma1_machine": lemma1_machine,
    "mult_by_b_plus_1": mult_by_b_plus_1,
    "ominus_mult_machine": ominus_mult_machine,
    "theorem_machine": theorem_machine,
    "figure1_product": figure1_product,
}

ALIASES = {
    "conv-n": "conv_n_to_negabase",
    "conv-neg-n": "conv_neg_n_to_negabase",
    "lemma1": "lemma1_machine",
    "mult": "mult_by_b_plus_1",
    "ominus-mult": "ominus_mult_machine",
    "theorem": "theorem_machine",
    "figure1-product": "figure1_product",
}


def by_name(name: str, b: int) -> Transducer:
    """Look up a constructor by function name, dashed name, or short alias."""
    key = ALIASES.get(name, name.replace("-", "_"))
    try:
        ctor = MACHINES[key]
    except KeyError:
        known = sorted(set(MACHINES) | set(ALIASES))
        raise KeyError(f"unknown machine {name!r}; choose from {', '.join(known)}") from None
    return ctor(b)
