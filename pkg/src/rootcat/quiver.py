"""Bound quiver algebras with monomial relations.

Composition convention: a path written ``b∘a`` (JSON ``["b", "a"]``) means
"``a`` first, then ``b``". Internally a :class:`Path` stores its arrows in
traversal order (first arrow first) together with its source vertex, so the
trivial path ``e_v`` is ``Path(v, v, ())``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path as FsPath

import numpy as np

from .errors import InfiniteDimensional, SpecError, UnsupportedRelation


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if len(self.vertices) < 1:
            raise SpecError("a quiver needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise SpecError("duplicate vertex identifiers")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise SpecError("arrow names must be unique")
        for a in self.arrows:
            if not (0 <= a.source < len(self.vertices) and 0 <= a.target < len(self.vertices)):
                raise SpecError(f"arrow {a.name} refers to an undeclared vertex")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, label) -> int:
        label = str(label)
        try:
            return self.vertices.index(label)
        except ValueError:
            raise SpecError(f"unknown vertex {label!r}") from None

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise SpecError(f"unknown arrow {name!r}")


@dataclass(frozen=True)
class Path:
    source: int
    target: int
    arrows: tuple[int, ...]  # traversal order

    def __len__(self):
        return len(self.arrows)

    def contains(self, sub: tuple[int, ...]) -> bool:
        k = len(sub)
        return any(self.arrows[i:i + k] == sub for i in range(len(self.arrows) - k + 1))


@dataclass(frozen=True)
class MonomialIdeal:
    relations: tuple[tuple[int, ...], ...]  # each in traversal order

    @property
    def max_length(self) -> int:
        return max((len(r) for r in self.relations), default=0)


class BoundAlgebra:
    """``kQ/I`` for a monomial admissible ideal ``I``, with an explicit path basis."""

    def __init__(self, quiver: Quiver, ideal: MonomialIdeal, name: str = ""):
        self.quiver = quiver
        self.ideal = ideal
        self.name = name
        self.paths: tuple[Path, ...] = tuple(_enumerate_paths(quiver, ideal))
        self._index = {(p.source, p.arrows): i for i, p in enumerate(self.paths)}
        self._check_subpath_closure()

    @property
    def n(self) -> int:
        return self.quiver.n

    @property
    def dim(self) -> int:
        return len(self.paths)

    def path_index(self, source: int, arrows: tuple[int, ...]):
        return self._index.get((source, tuple(arrows)))

    def idempotent(self, v: int) -> int:
        return self._index[(v, ())]

    def paths_between(self, source: int, target: int) -> list[int]:
        return self._between[source][target]

    @cached_property
    def _between(self):
        table = [[[] for _ in range(self.n)] for _ in range(self.n)]
        for i, p in enumerate(self.paths):
            table[p.source][p.target].append(i)
        return table

    @cached_property
    def mult(self) -> np.ndarray:
        """``mult[a, b]`` is the index of the basis path ``a∘b`` (b first), or -1."""
        d = self.dim
        table = -np.ones((d, d), dtype=np.int64)
        for ia, a in enumerate(self.paths):
            for ib, b in enumerate(self.paths):
                if b.target != a.source:
                    continue
                idx = self._index.get((b.source, b.arrows + a.arrows))
                if idx is not None:
                    table[ia, ib] = idx
        return table

    @cached_property
    def structure(self) -> np.ndarray:
        """Structure tensor ``T[a, b, c] = 1`` iff ``a∘b = c``."""
        d = self.dim
        t = np.zeros((d, d, d), dtype=np.int64)
        ia, ib = np.nonzero(self.mult >= 0)
        t[ia, ib, self.mult[ia, ib]] = 1
        return t

    @cached_property
    def radical_mask(self) -> np.ndarray:
        return np.array([len(p) > 0 for p in self.paths])

    def is_hereditary_quiver(self) -> bool:
        return len(self.ideal.relations) == 0

    def path_label(self, i: int) -> str:
        p = self.paths[i]
        if not p.arrows:
            return f"e{self.quiver.vertices[p.source]}"
        return "*".join(self.quiver.arrows[a].name for a in reversed(p.arrows))

    def to_dict(self) -> dict:
        q = self.quiver
        return {
            "vertices": list(q.vertices),
            "arrows": [
                {"name": a.name, "from": q.vertices[a.source], "to": q.vertices[a.target]}
                for a in q.arrows
            ],
            "relations": [
                [q.arrows[a].name for a in reversed(rel)] for rel in self.ideal.relations
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def fingerprint(self) -> str:
        import hashlib

        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]

    def _check_subpath_closure(self):
        for p in self.paths:
            for i in range(len(p.arrows)):
                for j in range(i + 1, len(p.arrows) + 1):
                    sub = p.arrows[i:j]
                    src = self.quiver.arrows[sub[0]].source
                    assert (src, sub) in self._index, "path basis is not subpath-closed"

    def __repr__(self):
        return f"BoundAlgebra({self.name or '?'}: n={self.n}, dim={self.dim})"


def _enumerate_paths(quiver: Quiver, ideal: MonomialIdeal):
    """Breadth-first extension with relation pruning; ordered by length then arrow names."""
    rels = set(ideal.relations)
    r = max(ideal.max_length, 2)
    out_arrows = [[] for _ in range(quiver.n)]
    for i, a in enumerate(quiver.arrows):
        out_arrows[a.source].append(i)

    def ok(arrows):
        return not any(arrows[len(arrows) - len(rel):] == rel for rel in rels if len(rel) <= len(arrows))

    layer = [Path(v, v, ()) for v in range(quiver.n)]
    result = list(layer)
    # a relation-free path longer than (#relation-free paths of length < r) + r repeats an automaton state
    states = sum(1 for p in result)
    length = 0
    while layer:
        length += 1
        nxt = []
        for p in layer:
            for a in out_arrows[p.target]:
                arrows = p.arrows + (a,)
                if ok(arrows):
                    nxt.append(Path(p.source, quiver.arrows[a].target, arrows))
        if length < r:
            states += len(nxt)
        if nxt and length > states + r:
            raise InfiniteDimensional("infinite-dimensional algebra: a cycle is not cut by any relation")
        result.extend(nxt)
        layer = nxt

    names = [a.name for a in quiver.arrows]

    def key(p: Path):
        return (len(p), p.source if not p.arrows else -1, tuple(names[a] for a in reversed(p.arrows)))

    return sorted(result, key=key)


def parse_algebra(spec, name: str = "") -> BoundAlgebra:
    """Build a :class:`BoundAlgebra` from a quiver-spec document (dict, JSON text or file path)."""
    if isinstance(spec, (str, FsPath)):
        text = str(spec)
        try:
            if text.lstrip().startswith("{"):
                spec = json.loads(text)
            else:
                with open(text) as fh:
                    spec = json.load(fh)
                name = name or FsPath(text).stem
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from None
        except OSError as exc:
            raise SpecError(f"cannot read quiver spec: {exc}") from None
    if not isinstance(spec, dict):
        raise SpecError("quiver spec must be a JSON object")
    try:
        vertices = tuple(str(v) for v in spec["vertices"])
        raw_arrows = spec.get("arrows", [])
        raw_rel = spec.get("relations", [])
    except (KeyError, TypeError) as exc:
        raise SpecError(f"malformed quiver spec: {exc}") from None
    vindex = {v: i for i, v in enumerate(vertices)}
    arrows = []
    for a in raw_arrows:
        try:
            src, tgt = str(a["from"]), str(a["to"])
            arrows.append(Arrow(str(a["name"]), vindex[src], vindex[tgt]))
        except KeyError as exc:
            raise SpecError(f"malformed arrow {a!r}: {exc}") from None
    quiver = Quiver(vertices, tuple(arrows))
    relations = []
    for rel in raw_rel:
        if not isinstance(rel, (list, tuple)) or not all(isinstance(x, str) for x in rel):
            raise UnsupportedRelation(f"unsupported relation type: {rel!r} (only monomial paths)")
        if len(rel) < 2:
            raise SpecError(f"relation {rel!r} is not admissible (length < 2)")
        trav = tuple(quiver.arrow_index(x) for x in reversed(rel))
        for a, b in zip(trav, trav[1:]):
            if quiver.arrows[a].target != quiver.arrows[b].source:
                raise SpecError(f"relation {rel!r} is not a composable path")
        relations.append(trav)
    return BoundAlgebra(quiver, MonomialIdeal(tuple(relations)), name=name or spec.get("name", ""))


# ---------------------------------------------------------------- bundled specs


def ex53_spec(m: int, n: int, both_arrows: bool = False) -> dict:
    """The quiver 0 ⇉ 1, 1 → 2 → … → n, 1 → n+1 → … → n+m with relations β∘α, γ∘α.

    ``both_arrows`` also kills the composites through the second parallel arrow.
    """
    if m < 1 or n < 2:
        raise SpecError("the family needs m >= 1 and n >= 2")
    verts = [str(i) for i in range(n + m + 1)]
    arrows = [
        {"name": "alpha", "from": "0", "to": "1"},
        {"name": "alpha2", "from": "0", "to": "1"},
        {"name": "gamma", "from": "1", "to": "2"},
    ]
    for i in range(2, n):
        arrows.append({"name": f"c{i}", "from": str(i), "to": str(i + 1)})
    arrows.append({"name": "beta", "from": "1", "to": str(n + 1)})
    for i in range(n + 1, n + m):
        arrows.append({"name": f"b{i}", "from": str(i), "to": str(i + 1)})
    relations = [["beta", "alpha"], ["gamma", "alpha"]]
    if both_arrows:
        relations += [["beta", "alpha2"], ["gamma", "alpha2"]]
    return {"name": f"ex53-m{m}n{n}", "vertices": verts, "arrows": arrows, "relations": relations}


def bundled_names() -> list[str]:
    root = resources.files("rootcat") / "data"
    names = []
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            names.append(entry.name[:-5])
        elif entry.is_dir():
            for sub in sorted(entry.iterdir(), key=lambda p: p.name):
                if sub.name.endswith(".json"):
                    names.append(f"{entry.name}/{sub.name[:-5]}")
    return names


def opposite_spec(spec: dict) -> dict:
    """Reverse every arrow and every relation: modules over the result are right modules over ``spec``."""
    out = dict(spec)
    out["name"] = spec.get("name", "algebra") + "-op"
    out["arrows"] = [dict(a, **{"from": a["to"], "to": a["from"]}) for a in spec["arrows"]]
    out["relations"] = [list(reversed(r)) for r in spec.get("relations", [])]
    return out


def load_bundled(name: str) -> BoundAlgebra:
    """Load a bundled algebra: ``a2``, ``dynkin/*``, ``ex32``, ``ex33``, ``ex53-m{M}n{N}``."""
    if name.startswith("ex53-"):
        import re

        mt = re.fullmatch(r"ex53-m(\d+)n(\d+)(-both)?", name)
        if not mt:
            raise SpecError(f"bad ex53 name {name!r}; expected ex53-m<M>n<N>")
        spec = ex53_spec(int(mt.group(1)), int(mt.group(2)), both_arrows=bool(mt.group(3)))
        return parse_algebra(spec, name=name)
    ref = resources.files("rootcat") / "data" / f"{name}.json"
    if not ref.is_file():
        # short Dynkin names such as ``a3`` or ``d4``
        ref = resources.files("rootcat") / "data" / "dynkin" / f"{name}.json"
    if not ref.is_file():
        raise SpecError(f"no bundled algebra named {name!r}")
    return parse_algebra(json.loads(ref.read_text()), name=name)


def load_algebra(target: str) -> BoundAlgebra:
    """A bundled name or a path to a quiver-spec JSON file."""
    if FsPath(target).is_file():
        return parse_algebra(target)
    return load_bundled(target)


def linear_quiver_spec(n: int) -> dict:
    verts = [str(i + 1) for i in range(n)]
    arrows = [{"name": f"a{i + 1}", "from": str(i + 1), "to": str(i + 2)} for i in range(n - 1)]
    return {"vertices": verts, "arrows": arrows, "relations": []}
