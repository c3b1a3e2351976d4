"""Integer partition combinatorics: diagrams, nodes, hooks and cores.

Partitions are weakly decreasing tuples of positive integers; the empty
tuple is the zero partition.  Diagram nodes use 1-based matrix coordinates
(i, j) = (row, column) and the residue of a node modulo l is (j - i) mod l.
Every value is immutable and every function pure, so the whole module is
safe for unrestricted concurrent use.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from typing import NamedTuple

Node = tuple[int, int]


class Partition(tuple):
    """A partition in canonical form: trailing zeros stripped at construction."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        pt = tuple(parts)
        while pt and pt[-1] == 0:
            pt = pt[:-1]
        prev = None
        for p in pt:
            if not isinstance(p, int) or isinstance(p, bool):
                raise ValueError(f"partition parts must be integers, got {p!r}")
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {pt!r}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing, got {pt!r}")
            prev = p
        return super().__new__(cls, pt)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part, 1-based; zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """The parts as a length-n vector, padded with zeros."""
        if n < len(self):
            raise ValueError(f"cannot pad a length-{len(self)} partition to {n}")
        return tuple(self) + (0,) * (n - len(self))

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


EMPTY = Partition()


def _check_l(l: int) -> None:
    if not isinstance(l, int) or isinstance(l, bool) or l < 2:
        raise ValueError(f"quantum characteristic l must be an integer >= 2, got {l!r}")


# ---------------------------------------------------------------------------
# order, transpose, regularity


def transpose(lam: Partition) -> Partition:
    """The conjugate partition: row j of the result counts parts >= j."""
    lam = Partition(lam)
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """True iff every partial sum of lam is bounded by the matching one of mu.

    Only partitions of equal degree are comparable; anything else is a
    usage error rather than False.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.degree != mu.degree:
        raise ValueError("incomparable degrees")
    a = b = 0
    for i in range(1, max(len(lam), len(mu)) + 1):
        a += lam.part(i)
        b += mu.part(i)
        if a > b:
            return False
    return True


def regularity(lam: Partition, l: int) -> tuple[bool, bool]:
    """(is l-regular, is l-restricted).

    Regular: no positive value repeats l or more times.  Restricted: every
    difference lam_i - lam_{i+1}, including the final part, stays below l.
    """
    _check_l(l)
    lam = Partition(lam)
    regular = True
    run, prev = 0, None
    for p in lam:
        run = run + 1 if p == prev else 1
        prev = p
        if run >= l:
            regular = False
            break
    restricted = all(lam.part(i) - lam.part(i + 1) < l for i in range(1, len(lam) + 1))
    return regular, restricted


def is_regular(lam: Partition, l: int) -> bool:
    return regularity(lam, l)[0]


def is_restricted(lam: Partition, l: int) -> bool:
    return regularity(lam, l)[1]


def _from_diffs(diffs: list[int]) -> Partition:
    out: list[int] = []
    total = 0
    for d in reversed(diffs):
        total += d
        out.append(total)
    out.reverse()
    return Partition(out)


def restricted_decompose(lam: Partition, l: int) -> tuple[Partition, Partition]:
    """The unique split lam = head + l*tail with head l-restricted.

    Built from consecutive differences: reducing each difference mod l
    yields the restricted head, the quotients assemble the tail.
    """
    _check_l(l)
    lam = Partition(lam)
    n = len(lam)
    diffs = [lam.part(i) - lam.part(i + 1) for i in range(1, n + 1)]
    head = _from_diffs([d % l for d in diffs])
    tail = _from_diffs([d // l for d in diffs])
    if any(head.part(i) + l * tail.part(i) != lam.part(i) for i in range(1, n + 1)):
        raise RuntimeError("restricted decomposition failed to reconstruct its input")
    return head, tail


# ---------------------------------------------------------------------------
# nodes and residues


def node_residue(node: Node, l: int) -> int:
    _check_l(l)
    i, j = node
    return (j - i) % l


def removable_nodes(lam: Partition) -> list[Node]:
    """Nodes whose removal leaves a partition, top row first."""
    lam = Partition(lam)
    return [(i, lam[i - 1]) for i in range(1, len(lam) + 1) if lam.part(i) > lam.part(i + 1)]


def addable_nodes(lam: Partition) -> list[Node]:
    """Positions whose addition gives a partition, top row first."""
    lam = Partition(lam)
    out = [
        (i, lam[i - 1] + 1)
        for i in range(1, len(lam) + 1)
        if i == 1 or lam[i - 1] < lam[i - 2]
    ]
    out.append((len(lam) + 1, 1))
    return out


def remove_node(lam: Partition, node: Node) -> Partition:
    lam = Partition(lam)
    if node not in removable_nodes(lam):
        raise ValueError(f"{node} is not a removable node of {lam}")
    i = node[0]
    return Partition(lam[: i - 1] + (lam[i - 1] - 1,) + lam[i:])


def add_node(lam: Partition, node: Node) -> Partition:
    lam = Partition(lam)
    if node not in addable_nodes(lam):
        raise ValueError(f"{node} is not an addable node of {lam}")
    i = node[0]
    if i == len(lam) + 1:
        return Partition(tuple(lam) + (1,))
    return Partition(lam[: i - 1] + (lam[i - 1] + 1,) + lam[i:])


class NodeSets(NamedTuple):
    addable: tuple[Node, ...]
    removable: tuple[Node, ...]
    suitable: tuple[Node, ...]
    co_suitable: tuple[Node, ...]


def _suitable(removable: list[Node], addable: list[Node], l: int) -> tuple[Node, ...]:
    # "lower" compares row indices only: strictly larger row = lower node
    return tuple(
        R
        for R in removable
        if all(node_residue(A, l) != node_residue(R, l) for A in addable if A[0] > R[0])
    )


def node_sets(lam: Partition, l: int) -> NodeSets:
    """Addable/removable nodes plus the residue-filtered suitable families.

    A removable node is suitable when no strictly lower addable node shares
    its residue.  A removable node (i, lam_i) is co-suitable when its
    transpose node (lam_i, i) is suitable for the transpose partition.
    """
    _check_l(l)
    lam = Partition(lam)
    add = addable_nodes(lam)
    rem = removable_nodes(lam)
    suit = _suitable(rem, add, l)
    t = transpose(lam)
    t_suit = set(_suitable(removable_nodes(t), addable_nodes(t), l))
    co = tuple(R for R in rem if (R[1], R[0]) in t_suit)
    return NodeSets(tuple(add), tuple(rem), suit, co)


def residue_content(lam: Partition, l: int) -> tuple[int, ...]:
    """Entry r counts the diagram nodes of residue r; entries sum to the degree."""
    _check_l(l)
    lam = Partition(lam)
    out = [0] * l
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            out[(j - i) % l] += 1
    return tuple(out)


# ---------------------------------------------------------------------------
# rim hooks and cores


def cells(lam: Partition) -> Iterator[Node]:
    lam = Partition(lam)
    for i in range(1, len(lam) + 1):
        for j in range(1, lam[i - 1] + 1):
            yield (i, j)


def _connected(strip: frozenset[Node]) -> bool:
    todo = [next(iter(strip))]
    seen = {todo[0]}
    while todo:
        i, j = todo.pop()
        for nb in ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1)):
            if nb in strip and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(strip)


def remove_rim_hook(lam: Partition, hook: Iterable[Node]) -> Partition:
    """Remove a border strip, validating every defining property of one."""
    lam = Partition(lam)
    strip = frozenset((int(i), int(j)) for i, j in hook)
    if not strip:
        raise ValueError("not a rim hook: empty node set")
    if not strip <= set(cells(lam)):
        raise ValueError("not a rim hook: nodes outside the diagram")
    rows: dict[int, list[int]] = {}
    for i, j in strip:
        rows.setdefault(i, []).append(j)
    new_parts = list(lam)
    for i, js in rows.items():
        js.sort()
        if js[-1] != lam[i - 1] or js[-1] - js[0] + 1 != len(js):
            raise ValueError("not a rim hook: row segment is not a suffix of its row")
        new_parts[i - 1] = js[0] - 1
    try:
        result = Partition(new_parts)
    except ValueError:
        raise ValueError("not a rim hook: removal does not leave a partition") from None
    if not _connected(strip):
        raise ValueError("not a rim hook: node set is disconnected")
    for i, j in strip:
        if {(i, j + 1), (i + 1, j), (i + 1, j + 1)} <= strip:
            raise ValueError("not a rim hook: contains a 2x2 block")
    return result


def rim_hooks(lam: Partition, size: int) -> list[frozenset[Node]]:
    """All removable rim hooks with `size` nodes, via first-column hook lengths.

    Each hook corresponds to a beta number b with b - size fresh; the node
    set is recovered as the diagram difference.
    """
    lam = Partition(lam)
    if size <= 0 or not lam:
        return []
    length = len(lam)
    beta = {lam[i] + (length - 1 - i) for i in range(length)}
    lam_cells = set(cells(lam))
    out = []
    for b in sorted(beta, reverse=True):
        if b - size >= 0 and (b - size) not in beta:
            nb = sorted((beta - {b}) | {b - size}, reverse=True)
            mu = Partition(nb[i] - (length - 1 - i) for i in range(length))
            out.append(frozenset(lam_cells - set(cells(mu))))
    out.sort(key=lambda h: tuple(sorted(h)))
    return out


def l_core(lam: Partition, l: int) -> Partition:
    """What remains when no rim l-hook can be removed (abacus push-down).

    Independent of removal order; the randomized cross-check lives in the
    core-residues suite.
    """
    _check_l(l)
    lam = Partition(lam)
    length = len(lam)
    if length == 0:
        return EMPTY
    beta = [lam[i] + (length - 1 - i) for i in range(length)]
    counts = [0] * l
    for b in beta:
        counts[b % l] += 1
    new_beta = sorted(
        (r + l * t for r in range(l) for t in range(counts[r])), reverse=True
    )
    return Partition(new_beta[i] - (length - 1 - i) for i in range(length))


# ---------------------------------------------------------------------------
# box reflection


def dagger(lam: Partition, m: int, l: int, n: int) -> Partition:
    """Reflect within the n-row, m(l-1)-column box: complement in reverse order."""
    _check_l(l)
    lam = Partition(lam)
    if m < 1 or n < 1:
        raise ValueError("dagger needs m >= 1 and n >= 1")
    if len(lam) > n:
        raise ValueError(f"partition has more than n={n} parts")
    cap = m * (l - 1)
    if lam.part(1) > cap:
        raise ValueError("out of reciprocity range")
    return Partition(cap - lam.part(n + 1 - i) for i in range(1, n + 1))


# ---------------------------------------------------------------------------
# assembly


def add(lam: Partition, mu: Partition) -> Partition:
    """Entrywise sum (zero padded)."""
    lam, mu = Partition(lam), Partition(mu)
    n = max(len(lam), len(mu))
    return Partition(lam.part(i) + mu.part(i) for i in range(1, n + 1))


def union(lam: Partition, mu: Partition) -> Partition:
    """Multiset union of the parts, re-sorted."""
    return Partition(sorted(tuple(lam) + tuple(mu), reverse=True))


def concatenate(alpha: Partition, rho: Partition) -> Partition:
    """Append rho below alpha; requires alpha's last part >= rho's first."""
    alpha, rho = Partition(alpha), Partition(rho)
    if alpha and rho and alpha[-1] < rho[0]:
        raise ValueError("incompatible pair")
    return Partition(tuple(alpha) + tuple(rho))


def q_arrange(values: Iterable[int]) -> Partition:
    """Sort nonnegative integers descending and strip zeros."""
    vals = []
    for v in values:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"q_arrange takes nonnegative integers, got {v!r}")
        vals.append(v)
    return Partition(sorted(vals, reverse=True))


# ---------------------------------------------------------------------------
# enumeration and text form


def partitions_of(
    r: int,
    max_len: int | None = None,
    max_part: int | None = None,
    predicate: Callable[[Partition], bool] | None = None,
) -> Iterator[Partition]:
    """Yield the partitions of r in lexicographically descending order.

    Optional bounds cap the number of parts and the largest part; an
    arbitrary predicate filters the stream.
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    top = r if max_part is None else min(r, max_part)
    slots = r if max_len is None else max_len

    def rec(remaining: int, cap: int, left: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if left == 0 or cap == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first, left - 1):
                yield (first,) + rest

    for parts in rec(r, top, slots):
        lam = Partition(parts)
        if predicate is None or predicate(lam):
            yield lam


def parse_partition(text: str) -> Partition:
    """Parse the strict CLI form "a1,a2,...,ak"; "" is the zero partition."""
    if text == "":
        return EMPTY
    parts = []
    for token in text.split(","):
        if not token.isdigit():
            raise ValueError(f"malformed partition text {text!r}")
        parts.append(int(token))
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in Partition(lam))
