"""JSON and Graphviz DOT forms of a :class:`~negaxor.transducer.Transducer`.

JSON document::

    {"radix": 2,
     "states": ["00", "10", "11"],
     "initial": 0,
     "transitions": [{"from": 0, "input": 0, "to": 0, "output": [0]}, ...]}

``from``/``to``/``initial`` are indices into ``states``.  Transitions are
written in state-then-digit order so the output is byte-stable.
"""

from __future__ import annotations

import json

from .transducer import Transducer, TransducerError


def to_dict(t: Transducer) -> dict:
    return {
        "radix": t.radix,
        "states": list(t.labels),
        "initial": t.initial,
        "transitions": [
            {"from": q, "input": d, "to": r, "output": list(w)}
            for q, d, r, w in t.transitions()
        ],
    }


def from_dict(doc: dict) -> Transducer:
    try:
        b = doc["radix"]
        labels = list(doc["states"])
        n = len(labels)
        delta = [[None] * b for _ in range(n)]
        output = [[None] * b for _ in range(n)]
        for tr in doc["transitions"]:
            q, d = tr["from"], tr["input"]
            if not (0 <= q < n and 0 <= d < b):
                raise TransducerError(f"transition ({q}, {d}) out of range")
            if delta[q][d] is not None:
                raise TransducerError(f"duplicate transition ({q}, {d})")
            delta[q][d] = tr["to"]
            output[q][d] = tuple(tr["output"])
        initial = doc["initial"]
    except (KeyError, TypeError) as exc:
        raise TransducerError(f"malformed transducer document: {exc}") from None
    for q in range(n):
        for d in range(b):
            if delta[q][d] is None:
                raise TransducerError(
                    f"missing transition for state {labels[q]!r} on {d}")
    return Transducer(b, tuple(labels), initial, delta, output)


def dumps(t: Transducer, **kwargs) -> str:
    return json.dumps(to_dict(t), **kwargs)


def loads(text: str) -> Transducer:
    return from_dict(json.loads(text))


def _word(w, b) -> str:
    if not w:
        return "ε"
    return ("" if b <= 10 else ",").join(str(x) for x in w)


def _digit_set(ds) -> str:
    # compress runs: [1, 2, 3, 5] -> "1..3,5"
    parts = []
    start = prev = ds[0]
    for d in ds[1:] + [None]:
        if d is not None and d == prev + 1:
            prev = d
            continue
        if start == prev:
            parts.append(str(start))
        elif prev == start + 1:
            parts.append(f"{start},{prev}")
        else:
            parts.append(f"{start}..{prev}")
        if d is not None:
            start = prev = d
    return ",".join(parts)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(t: Transducer, merge_edges: bool = False, name: str = "T") -> str:
    """Graphviz source.  Edges are labelled ``"d|w"``.

    With ``merge_edges`` parallel edges sharing endpoints and output word are
    drawn once, labelled with the digit set, e.g. ``"1..3|0"``.
    """
    b = t.radix
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;",
             '  __start [shape=point, label=""];']
    for q in t.states:
        lines.append(f"  s{q} [shape=circle, label={_quote(t.labels[q])}];")
    lines.append(f"  __start -> s{t.initial};")
    if merge_edges:
        groups = {}
        for q, d, r, w in t.transitions():
            groups.setdefault((q, r, w), []).append(d)
        for (q, r, w), ds in groups.items():
            label = f"{_digit_set(ds)}|{_word(w, b)}"
            lines.append(f"  s{q} -> s{r} [label={_quote(label)}];")
    else:
        for q, d, r, w in t.transitions():
            lines.append(f"  s{q} -> s{r} [label={_quote(f'{d}|{_word(w, b)}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_text(t: Transducer) -> str:
    """Plain transition table, one row per (state, digit)."""
    b = t.radix
    width = max(len(s) for s in t.labels)
    rows = [f"radix {b}, {t.size} states, initial {t.labels[t.initial]!r}"]
    for q, d, r, w in t.transitions():
        rows.append(f"  {t.labels[q]:<{width}}  --{d}|{_word(w, b)}-->  {t.labels[r]}")
    return "\n".join(rows) + "\n"
