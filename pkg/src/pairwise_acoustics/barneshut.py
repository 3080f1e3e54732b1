"""Barnes-Hut quadtree engine over the unit-square feature plane.

Three phases: build the tree by repeated insertion, aggregate mass and
center of mass bottom-up, then evaluate each target by walking the tree.
A node stands in for its contents (monopole) when ``l / D < theta``, with
``l`` the node side and ``D`` the distance from the target to the node's
center of mass. A node whose square contains the target is always opened,
so a target never interacts with itself through an aggregate.

Leaves at ``max_depth`` become buckets and are evaluated exactly; this is
how coincident bodies are stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .allpairs import InteractionResult, KernelConfig, as_arrays, pair_kernel
from .errors import InvalidArgumentError, OutOfBoundsError
from .features import Body
from .parallel import run_spans

ROOT_MARGIN = 1e-9
DEFAULT_MAX_DEPTH = 64
NE, NW, SW, SE = range(4)


@dataclass(eq=False)
class QuadNode:
    cx: float
    cy: float
    side: float
    num_models: int = 0
    resident: Body | None = None
    bucket: list[Body] = field(default_factory=list)
    children: list[QuadNode | None] = field(default_factory=lambda: [None] * 4)
    mass: float = 0.0
    com: np.ndarray = field(default_factory=lambda: np.zeros(2))

    @property
    def is_leaf(self) -> bool:
        return all(c is None for c in self.children)

    def bodies(self) -> list[Body]:
        """Bodies stored directly in this node (leaf only)."""
        if self.resident is not None:
            return [self.resident]
        return list(self.bucket)

    def contains(self, p) -> bool:
        h = 0.5 * self.side
        return abs(p[0] - self.cx) <= h and abs(p[1] - self.cy) <= h

    def get_quadrant(self, p) -> int:
        # closed on the north/east side
        east = p[0] >= self.cx
        north = p[1] >= self.cy
        if north:
            return NE if east else NW
        return SE if east else SW

    def subnode(self, quad: int) -> QuadNode:
        child = self.children[quad]
        if child is None:
            q = 0.25 * self.side
            dx = q if quad in (NE, SE) else -q
            dy = q if quad in (NE, NW) else -q
            child = QuadNode(self.cx + dx, self.cy + dy, 0.5 * self.side)
            self.children[quad] = child
        return child

    def walk(self, depth: int = 0):
        """Pre-order ``(depth, node)`` traversal, children in NE, NW, SW, SE order."""
        yield depth, self
        for c in self.children:
            if c is not None:
                yield from c.walk(depth + 1)


@dataclass(eq=False)
class QuadTree:
    root: QuadNode
    max_depth: int
    body_count: int
    body_ids: tuple[int, ...] = ()


def _root_node() -> QuadNode:
    return QuadNode(0.5, 0.5, 1.0 + 2 * ROOT_MARGIN)


def insert_to_node(node: QuadNode, body: Body, depth: int, max_depth: int = DEFAULT_MAX_DEPTH) -> QuadNode:
    """Insert ``body`` below ``node`` (which sits at ``depth``)."""
    if depth >= max_depth:
        # cannot subdivide further: keep a bucket
        if node.resident is not None:
            node.bucket.append(node.resident)
            node.resident = None
        if node.num_models == 0:
            node.resident = body
        else:
            node.bucket.append(body)
    elif node.num_models > 1:
        insert_to_node(node.subnode(node.get_quadrant(body.position)), body, depth + 1, max_depth)
    elif node.num_models == 1:
        existing, node.resident = node.resident, None
        insert_to_node(node.subnode(node.get_quadrant(existing.position)), existing, depth + 1, max_depth)
        insert_to_node(node.subnode(node.get_quadrant(body.position)), body, depth + 1, max_depth)
    else:
        node.resident = body
    node.num_models += 1
    return node


def build_tree(bodies: Sequence[Body], max_depth: int = DEFAULT_MAX_DEPTH) -> QuadTree:
    if len(bodies) == 0:
        raise InvalidArgumentError("build_tree needs at least one body")
    if max_depth < 1:
        raise InvalidArgumentError(f"max_depth must be >= 1, got {max_depth}")
    root = _root_node()
    for b in bodies:
        if not root.contains(b.position):
            raise OutOfBoundsError(b.id, b.position)
        insert_to_node(root, b, 0, max_depth)
    return QuadTree(root, max_depth, len(bodies), tuple(b.id for b in bodies))


def compute_mass_distribution(node: QuadNode) -> QuadNode:
    if node.is_leaf:
        members = node.bodies()
        node.mass = float(sum(b.mass for b in members))
        if len(members) == 1:
            node.com = members[0].position.copy()
        elif members:
            node.com = sum(b.mass * b.position for b in members) / node.mass
        else:
            node.com = np.array([node.cx, node.cy])
        return node
    mass = 0.0
    com = np.zeros(2)
    for child in node.children:
        if child is None or child.num_models == 0:
            continue
        compute_mass_distribution(child)
        mass += child.mass
        com += child.mass * child.com
    node.mass = mass
    node.com = com / mass
    return node


def _accept(node: QuadNode, d: float, theta: float) -> bool:
    return d > 0 and node.side < theta * d


def calculate_force(node: QuadNode, target: Body, k: KernelConfig):
    """Returns ``(force, amplitude, kernel_evaluations)`` on ``target``."""
    force = np.zeros(2)
    amplitude = 0.0
    evals = 0
    if node.num_models == 0:
        return force, amplitude, evals
    if node.is_leaf:
        for b in node.bodies():
            if b.id == target.id:
                continue
            d = b.position - target.position
            phi, fx, fy = pair_kernel(d[0], d[1], target.mass, b.mass, k.g, k.eps_soft)
            amplitude += phi
            force += (fx, fy)
            evals += 1
        return force, amplitude, evals
    d = node.com - target.position
    if not node.contains(target.position) and _accept(node, float(np.hypot(d[0], d[1])), k.theta):
        phi, fx, fy = pair_kernel(d[0], d[1], target.mass, node.mass, k.g, k.eps_soft)
        return np.array([fx, fy]), float(phi), 1
    for child in node.children:
        if child is not None:
            f, a, e = calculate_force(child, target, k)
            force += f
            amplitude += a
            evals += e
    return force, amplitude, evals


def _walk_batch(node, idx, ids, pos, mass, k, force, amp, evals):
    """Vectorized :func:`calculate_force` for the targets ``idx`` at once.

    Per target, contributions are added in the same tree order as the scalar
    walk, so a target's result does not depend on which batch it rides in.
    """
    if node.num_models == 0 or idx.size == 0:
        return
    if node.is_leaf:
        for b in node.bodies():
            t = idx[ids[idx] != b.id]
            dx = b.position[0] - pos[t, 0]
            dy = b.position[1] - pos[t, 1]
            phi, fx, fy = pair_kernel(dx, dy, mass[t], b.mass, k.g, k.eps_soft)
            amp[t] += phi
            force[t, 0] += fx
            force[t, 1] += fy
            evals[t] += 1
        return
    h = 0.5 * node.side
    p = pos[idx]
    inside = (np.abs(p[:, 0] - node.cx) <= h) & (np.abs(p[:, 1] - node.cy) <= h)
    dx = node.com[0] - p[:, 0]
    dy = node.com[1] - p[:, 1]
    dist = np.hypot(dx, dy)
    take = ~inside & (dist > 0) & (node.side < k.theta * dist)
    if take.any():
        t = idx[take]
        phi, fx, fy = pair_kernel(dx[take], dy[take], mass[t], node.mass, k.g, k.eps_soft)
        amp[t] += phi
        force[t, 0] += fx
        force[t, 1] += fy
        evals[t] += 1
    rest = idx[~take]
    for child in node.children:
        if child is not None:
            _walk_batch(child, rest, ids, pos, mass, k, force, amp, evals)


def compute_force(
    tree: QuadTree, bodies: Sequence[Body], k: KernelConfig, workers: int = 1
) -> InteractionResult:
    """Evaluate every body against the tree; the tree must already carry masses."""
    ids, pos, mass = as_arrays(bodies)
    if tree.body_count != ids.size or sorted(tree.body_ids) != sorted(ids.tolist()):
        raise InvalidArgumentError("bodies do not match the set the tree was built from")
    n = ids.size
    force = np.zeros((n, 2))
    amp = np.zeros(n)
    evals = np.zeros(n, dtype=np.int64)

    def span(start: int, stop: int) -> int:
        _walk_batch(tree.root, np.arange(start, stop), ids, pos, mass, k, force, amp, evals)
        return int(evals[start:stop].sum())

    total = run_spans(n, workers, span)
    return InteractionResult(ids, force, amp, total)


def barnes_hut(
    bodies: Sequence[Body], k: KernelConfig, workers: int = 1, max_depth: int = DEFAULT_MAX_DEPTH
) -> InteractionResult:
    """Build, aggregate, evaluate."""
    tree = build_tree(bodies, max_depth)
    compute_mass_distribution(tree.root)
    return compute_force(tree, bodies, k, workers)


def dump_tree(tree: QuadTree) -> str:
    """One line per node: ``depth, center, side, num_models, mass, com``."""
    lines = []
    for depth, node in tree.root.walk():
        lines.append(
            "  " * depth
            + f"{depth}, ({node.cx!r}, {node.cy!r}), {node.side!r}, {node.num_models}, "
            f"{node.mass!r}, ({node.com[0]!r}, {node.com[1]!r})"
        )
    return "\n".join(lines) + "\n"
