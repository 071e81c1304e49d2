"""JSON instance files.

::

    {
      "vertices": ["a", "b", "c"],
      "edges": [[0, 1], [1, 2]],
      "psi": {"0": ["1", "2"], "1": ["1/2"]}
    }

Labels are strings (``"p/q"`` or integers) so no value ever passes through
a float.  Errors carry the JSON path and the line it starts on.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Sequence, Union

from .psi_graph import PsiGraph

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")
_INDEX = re.compile(r"^(0|[1-9]\d*)$")


class InstanceError(ValueError):
    def __init__(self, problems: Sequence[str]):
        super().__init__("\n".join(problems))
        self.problems = list(problems)


def _line_of(text: str, path: Sequence[Union[str, int]]) -> int:
    """1-based line where the value at ``path`` begins (best effort)."""
    dec = json.JSONDecoder()
    ws = " \t\n\r"

    def skip(i):
        while i < len(text) and text[i] in ws:
            i += 1
        return i

    i = skip(0)
    try:
        for step in path:
            opener = text[i]
            i = skip(i + 1)
            k = 0
            while text[i] not in "]}":
                if opener == "{":
                    key, i = dec.raw_decode(text, i)
                    i = skip(skip(i) + 1)
                    hit = key == step
                else:
                    hit = k == step
                if hit:
                    break
                _, i = dec.raw_decode(text, i)
                i = skip(i)
                if text[i] == ",":
                    i = skip(i + 1)
                k += 1
            else:
                break
    except (IndexError, ValueError):
        pass
    return text.count("\n", 0, i) + 1


def _reject_duplicate_keys(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ValueError(f"duplicate key {k!r}")
        out[k] = v
    return out


def parse_rational(s) -> Fraction:
    if isinstance(s, int) and not isinstance(s, bool):
        return Fraction(s)
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise ValueError(f"{s!r} is not an integer or p/q string")
    num, _, den = s.replace(" ", "").partition("/")
    if den and int(den) == 0:
        raise ValueError(f"{s!r} has zero denominator")
    return Fraction(int(num), int(den) if den else 1)


def parse_instance(text: str) -> PsiGraph:
    try:
        doc = json.loads(text, object_pairs_hook=_reject_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise InstanceError([f"line {exc.lineno}: invalid JSON: {exc.msg}"]) from None
    except ValueError as exc:
        raise InstanceError([f"invalid JSON: {exc}"]) from None

    problems: list[str] = []

    def bad(path, msg):
        where = "".join(f"[{p!r}]" if isinstance(p, str) else f"[{p}]" for p in path)
        problems.append(f"line {_line_of(text, path)}: {where or '<root>'}: {msg}")

    if not isinstance(doc, dict):
        bad([], "expected a JSON object")
        raise InstanceError(problems)
    for key in sorted(set(doc) - {"vertices", "edges", "psi"}):
        bad([key], "unknown key")

    names = doc.get("vertices")
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        bad(["vertices"], "expected a list of vertex names")
        raise InstanceError(problems)
    n = len(names)
    seen_names = set()
    for i, s in enumerate(names):
        if s in seen_names:
            bad(["vertices", i], f"duplicate vertex name {s!r}")
        seen_names.add(s)

    edges = []
    raw_edges = doc.get("edges", [])
    if not isinstance(raw_edges, list):
        bad(["edges"], "expected a list of index pairs")
        raw_edges = []
    seen_edges = {}
    for k, e in enumerate(raw_edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)
        ):
            bad(["edges", k], f"expected a pair of vertex indices, got {e!r}")
            continue
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            bad(["edges", k], f"index out of range 0..{n - 1} in {e}")
            continue
        if u == v:
            bad(["edges", k], f"self-loop at {u}")
            continue
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            bad(["edges", k], f"duplicate edge {list(key)} (first at edges[{seen_edges[key]}])")
            continue
        seen_edges[key] = k
        edges.append(key)

    psi: dict[int, list[Fraction]] = {}
    raw_psi = doc.get("psi", {})
    if not isinstance(raw_psi, dict):
        bad(["psi"], "expected an object mapping vertex index to a list of values")
        raw_psi = {}
    for key, values in raw_psi.items():
        if not _INDEX.match(key) or int(key) >= n:
            bad(["psi", key], f"{key!r} is not a vertex index in 0..{n - 1}")
            continue
        if not isinstance(values, list):
            bad(["psi", key], "expected a list of rational strings")
            continue
        vals: list[Fraction] = []
        for j, s in enumerate(values):
            try:
                a = parse_rational(s)
            except ValueError as exc:
                bad(["psi", key, j], str(exc))
                continue
            if a in vals:
                bad(["psi", key, j], f"duplicate value {a}")
                continue
            vals.append(a)
        psi[int(key)] = vals

    if problems:
        raise InstanceError(problems)
    return PsiGraph.build(n, edges, psi, names)


def load_instance(path) -> PsiGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def dump_instance(g: PsiGraph) -> str:
    """Normalized form: edges sorted with ``u < v``, labels ascending, empty
    labels omitted."""
    doc = {
        "vertices": list(g.names),
        "edges": [list(e) for e in g.sorted_edges()],
        "psi": {str(v): [str(a) for a in sorted(g.psi[v])] for v in range(g.n) if g.psi[v]},
    }
    return json.dumps(doc, indent=2) + "\n"
