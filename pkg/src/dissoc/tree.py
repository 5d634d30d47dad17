"""Labeled trees: validation, rooting, canonical codes and the two gadget attachments.

Trees are immutable. Vertex labels are ``0..n-1``; edges are stored with the
smaller endpoint first and sorted, so two trees with the same edge set compare
equal regardless of the order the edges were given in.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Tree",
    "RootedTree",
    "TreeError",
    "MalformedLineError",
    "LabelRangeError",
    "EdgeCountError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "SelfLoopError",
    "DegreeWarning",
    "parse_tree",
    "serialize_tree",
    "root_at",
    "max_degree",
    "attach_pendant_edge",
    "attach_p5",
    "canonical_code",
    "tree_from_code",
    "relabel",
    "delete_leaf",
    "path",
    "star",
]


class TreeError(ValueError):
    """Base class for parse and validation failures."""


class MalformedLineError(TreeError):
    pass


class LabelRangeError(TreeError):
    pass


class EdgeCountError(TreeError):
    pass


class DisconnectedError(TreeError):
    pass


class DuplicateEdgeError(TreeError):
    pass


class SelfLoopError(TreeError):
    pass


class DegreeWarning(UserWarning):
    """An attachment was made at a vertex that already had degree 3."""


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Tree:
        """Validate and build a tree; raises a :class:`TreeError` subclass on bad input."""
        if n < 1:
            raise LabelRangeError(f"tree order must be >= 1, got {n}")
        normalized = []
        seen = set()
        for e in edges:
            a, b = int(e[0]), int(e[1])
            for x in (a, b):
                if not 0 <= x < n:
                    raise LabelRangeError(f"vertex label {x} out of range 0..{n - 1}")
            if a == b:
                raise SelfLoopError(f"self-loop at vertex {a}")
            pair = (a, b) if a < b else (b, a)
            if pair in seen:
                raise DuplicateEdgeError(f"duplicate edge {pair[0]} {pair[1]}")
            seen.add(pair)
            normalized.append(pair)
        if len(normalized) != n - 1:
            raise EdgeCountError(f"a tree on {n} vertices needs {n - 1} edges, got {len(normalized)}")
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in normalized:
            adj[a].append(b)
            adj[b].append(a)
        # n - 1 edges + connected => acyclic
        seen_v = [False] * n
        seen_v[0] = True
        stack = [0]
        reached = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen_v[w]:
                    seen_v[w] = True
                    reached += 1
                    stack.append(w)
        if reached != n:
            raise DisconnectedError(f"only {reached} of {n} vertices reachable from vertex 0")
        return cls(n, tuple(sorted(normalized)), tuple(tuple(sorted(a)) for a in adj))

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class RootedTree:
    base: Tree
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    postorder: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def flat_children(self) -> tuple[list[int], list[int]]:
        """CSR layout ``(ptr, idx)`` of the children lists, as consumed by the kernels."""
        ptr = [0]
        idx: list[int] = []
        for ch in self.children:
            idx.extend(ch)
            ptr.append(len(idx))
        return ptr, idx


def _check_label(t: Tree, v: int) -> None:
    if not 0 <= v < t.n:
        raise LabelRangeError(f"vertex label {v} out of range 0..{t.n - 1}")


def parse_tree(text: str) -> Tree:
    """Parse the edge-list format: order on the first line, then one ``u v`` pair per line.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        lines.append((lineno, s))
    if not lines:
        raise MalformedLineError("empty input: expected the tree order on the first line")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise MalformedLineError(f"line {lineno}: expected an integer order, got {head!r}") from None
    edges = []
    for lineno, s in lines[1:]:
        parts = s.split()
        if len(parts) != 2:
            raise MalformedLineError(f"line {lineno}: expected two labels, got {s!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedLineError(f"line {lineno}: non-integer label in {s!r}") from None
    return Tree.from_edges(n, edges)


def serialize_tree(t: Tree) -> str:
    return "".join([f"{t.n}\n"] + [f"{a} {b}\n" for a, b in t.edges])


def root_at(t: Tree, r: int) -> RootedTree:
    _check_label(t, r)
    n = t.n
    parent: list[int | None] = [None] * n
    children: list[list[int]] = [[] for _ in range(n)]
    order = [r]
    visited = [False] * n
    visited[r] = True
    # BFS fixes parents; adjacency lists are sorted so children come out ascending
    for v in order:
        for w in t.adjacency[v]:
            if not visited[w]:
                visited[w] = True
                parent[w] = v
                children[v].append(w)
                order.append(w)
    post: list[int] = []
    stack = [(r, 0)]
    while stack:
        v, i = stack.pop()
        if i < len(children[v]):
            stack.append((v, i + 1))
            stack.append((children[v][i], 0))
        else:
            post.append(v)
    return RootedTree(t, r, tuple(parent), tuple(tuple(c) for c in children), tuple(post))


def max_degree(t: Tree) -> int:
    return max(t.degrees)


def _grow(t: Tree, new_edges: list[tuple[int, int]], added: int) -> Tree:
    return Tree.from_edges(t.n + added, list(t.edges) + new_edges)


def attach_pendant_edge(t: Tree, v: int) -> Tree:
    """Hang a new two-vertex edge ``{n, n+1}`` from ``v`` via the edge ``v-n``."""
    _check_label(t, v)
    if t.degree(v) >= 3:
        warnings.warn(f"pendant edge attached at vertex {v} of degree {t.degree(v)}", DegreeWarning, stacklevel=2)
    a, b = t.n, t.n + 1
    return _grow(t, [(v, a), (a, b)], 2)


def attach_p5(t: Tree, u: int) -> Tree:
    """Attach the five-vertex gadget at ``u``.

    New labels ``n..n+4`` go to ``x, y, z, j, k`` in that order; the added edges
    are ``u-z, z-y, z-j, y-x, j-k``.
    """
    _check_label(t, u)
    if t.degree(u) >= 3:
        warnings.warn(f"P5 attached at vertex {u} of degree {t.degree(u)}", DegreeWarning, stacklevel=2)
    x, y, z, j, k = range(t.n, t.n + 5)
    return _grow(t, [(u, z), (z, y), (z, j), (y, x), (j, k)], 5)


def path(n: int) -> Tree:
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Tree:
    """Star with center 0."""
    return Tree.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def relabel(t: Tree, perm: Sequence[int]) -> Tree:
    """Image of ``t`` under the label map ``v -> perm[v]``."""
    if sorted(perm) != list(range(t.n)):
        raise LabelRangeError("relabeling must be a permutation of 0..n-1")
    return Tree.from_edges(t.n, [(perm[a], perm[b]) for a, b in t.edges])


def delete_leaf(t: Tree, v: int) -> Tree:
    """Remove leaf ``v``; labels above ``v`` shift down by one."""
    _check_label(t, v)
    if t.n == 1 or t.degree(v) != 1:
        raise TreeError(f"vertex {v} is not a leaf")

    def lab(x: int) -> int:
        return x - 1 if x > v else x

    return Tree.from_edges(t.n - 1, [(lab(a), lab(b)) for a, b in t.edges if v not in (a, b)])


def _centroids(t: Tree) -> list[int]:
    n = t.n
    rt = root_at(t, 0)
    size = [1] * n
    for v in rt.postorder:
        p = rt.parent[v]
        if p is not None:
            size[p] += size[v]
    out = []
    for v in range(n):
        worst = n - size[v]
        for c in rt.children[v]:
            if size[c] > worst:
                worst = size[c]
        if 2 * worst <= n:
            out.append(v)
    return out


def _ahu(t: Tree, root: int) -> bytes:
    rt = root_at(t, root)
    codes: list[bytes] = [b""] * t.n
    for v in rt.postorder:
        codes[v] = b"(" + b"".join(sorted(codes[c] for c in rt.children[v])) + b")"
    return codes[root]


def canonical_code(t: Tree) -> bytes:
    """Isomorphism-class code: parenthesized AHU string rooted at the centroid.

    With two centroids the lexicographically smaller of the two rooted codes is used.
    """
    return min(_ahu(t, c) for c in _centroids(t))


def tree_from_code(code: bytes) -> Tree:
    """Inverse of the AHU encoding; vertices are labeled in preorder of the code."""
    edges = []
    stack: list[int] = []
    nxt = 0
    for ch in code:
        if ch == 40:  # "("
            if stack:
                edges.append((stack[-1], nxt))
            stack.append(nxt)
            nxt += 1
        elif ch == 41:  # ")"
            if not stack:
                raise MalformedLineError("unbalanced canonical code")
            stack.pop()
        else:
            raise MalformedLineError(f"unexpected byte {ch!r} in canonical code")
    if stack or nxt == 0:
        raise MalformedLineError("unbalanced canonical code")
    return Tree.from_edges(nxt, edges)
