"""The l-edge, Mullineux symbols and the Mullineux involution.

The rim of a partition is the set of nodes with no node diagonally below
and to the right, traced from the end of the first row down to the foot of
the first column.  The l-edge selects rim nodes in runs ("segments") of at
most l, each new run starting at the first rim node strictly below the row
where the previous run stopped.  Mullineux components are the row blocks
cut at segment ends; the involution itself is reconstructed stage by stage
from the symbol of successive l-edge removals.

Two independent readings of the edge (the rim walk and the component
formula) are computed side by side and must agree; a mismatch is an
internal error, never a silent wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from typing import NamedTuple

from .partitions import (
    EMPTY,
    Node,
    Partition,
    _check_l,
    is_regular,
    is_restricted,
    node_sets,
    remove_node,
    restricted_decompose,
    transpose,
)


def edge_length(lam: Partition) -> int:
    """e(lam) = lam_1 + length - 1 rim nodes (0 for the zero partition)."""
    lam = Partition(lam)
    return lam[0] + len(lam) - 1 if lam else 0


def rim(lam: Partition) -> list[Node]:
    """The border nodes, ordered from (1, lam_1) to (length, 1)."""
    lam = Partition(lam)
    nodes: list[Node] = []
    for i in range(1, len(lam) + 1):
        low = max(1, lam.part(i + 1))
        for j in range(lam[i - 1], low - 1, -1):
            nodes.append((i, j))
    return nodes


class LEdge(NamedTuple):
    nodes: tuple[Node, ...]
    size: int
    segment_rows: tuple[int, ...]


def mullineux_components(lam: Partition, l: int) -> list[Partition]:
    """Row blocks cut where the l-segments end.

    The first block is (lam_1..lam_h) with h minimal such that
    lam_1 - lam_{h+1} + h >= l (the whole partition when nothing fires),
    then recurse on the remainder.
    """
    _check_l(l)
    lam = Partition(lam)
    if not lam:
        raise ValueError("the zero partition has no component split")
    comps: list[Partition] = []
    rest = lam
    while rest:
        h = len(rest)
        for cand in range(1, len(rest) + 1):
            if rest[0] - rest.part(cand + 1) + cand >= l:
                h = cand
                break
        comps.append(Partition(rest[:h]))
        rest = Partition(rest[h:])
    return comps


def l_edge(lam: Partition, l: int) -> LEdge:
    """Select the l-edge off the rim and cross-check it against components."""
    _check_l(l)
    lam = Partition(lam)
    border = rim(lam)
    taken: list[Node] = []
    seg_rows: list[int] = []
    pos = 0
    while pos < len(border):
        chunk = border[pos : pos + l]
        taken.extend(chunk)
        last_row = chunk[-1][0]
        seg_rows.append(last_row)
        pos += len(chunk)
        while pos < len(border) and border[pos][0] <= last_row:
            pos += 1
    if lam:
        comps = mullineux_components(lam, l)
        expected = l * (len(comps) - 1) + min(l, edge_length(comps[-1]))
        ends = list(accumulate(len(c) for c in comps))
        if expected != len(taken) or ends != seg_rows:
            raise RuntimeError(
                f"edge walk and component formula disagree on {lam} at l={l}"
            )
    return LEdge(tuple(taken), len(taken), tuple(seg_rows))


def remove_l_edge(lam: Partition, l: int) -> Partition:
    """Drop the selected edge nodes row by row; the result is a partition."""
    lam = Partition(lam)
    counts = [0] * (len(lam) + 1)
    for i, _ in l_edge(lam, l).nodes:
        counts[i] += 1
    return Partition(lam[i - 1] - counts[i] for i in range(1, len(lam) + 1))


def is_edge_l_connected(lam: Partition, l: int) -> bool:
    """True iff adjacent components satisfy first-part drop + length = l."""
    _check_l(l)
    lam = Partition(lam)
    if not lam:
        return True
    comps = mullineux_components(lam, l)
    return all(
        comps[i][0] - comps[i + 1][0] + len(comps[i]) == l
        for i in range(len(comps) - 1)
    )


@dataclass(frozen=True)
class MullineuxSymbol:
    """(edge size, length) pairs of the successive l-edge removal stages."""

    rows: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return sum(a for a, _ in self.rows)

    def to_json(self) -> list[list[int]]:
        return [[a, r] for a, r in self.rows]


def mullineux_symbol(mu: Partition, l: int) -> MullineuxSymbol:
    _check_l(l)
    mu = Partition(mu)
    if not is_regular(mu, l):
        raise ValueError("not l-regular")
    rows: list[tuple[int, int]] = []
    stage = mu
    while stage:
        rows.append((l_edge(stage, l).size, len(stage)))
        stage = remove_l_edge(stage, l)
    return MullineuxSymbol(tuple(rows))


def add_l_edge(nu: Partition, a: int, r: int, l: int) -> Partition:
    """The unique partition of length r whose l-edge removal leaves nu.

    Every row of the extension loses between 1 and l nodes when the edge
    is stripped, which bounds the search box; candidates are then settled
    by the round-trip removal check.  No match and multiple matches are
    both hard errors (the latter must never happen on a valid symbol).
    """
    _check_l(l)
    nu = Partition(nu)
    if not (a >= r >= 1):
        raise ValueError(f"need a >= r >= 1, got a={a}, r={r}")
    if len(nu) > r:
        raise ValueError("no edge extension")
    lows = [nu.part(i) + 1 for i in range(1, r + 1)]
    highs = [nu.part(i) + l for i in range(1, r + 1)]
    suffix_lo = list(accumulate(reversed(lows)))[::-1] + [0]
    suffix_hi = list(accumulate(reversed(highs)))[::-1] + [0]
    target = nu.degree + a
    matches: list[Partition] = []

    def search(i: int, cap: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i == r:
            if suffix_lo[i] <= remaining <= suffix_hi[i] and remaining == 0:
                cand = Partition(prefix)
                if remove_l_edge(cand, l) == nu:
                    matches.append(cand)
            return
        if not suffix_lo[i] <= remaining <= suffix_hi[i]:
            return
        hi = min(highs[i], cap, remaining - suffix_lo[i + 1])
        for v in range(hi, lows[i] - 1, -1):
            search(i + 1, v, remaining - v, prefix + (v,))

    search(0, target, target, ())
    if not matches:
        raise ValueError("no edge extension")
    if len(matches) > 1:
        raise ValueError(f"ambiguous extension: {matches}")
    return matches[0]


@lru_cache(maxsize=None)
def _mullineux_cached(mu: Partition, l: int) -> Partition:
    symbol = mullineux_symbol(mu, l)
    out = EMPTY
    for a, length in reversed(symbol.rows):
        target_len = a - length + (0 if a % l == 0 else 1)
        out = add_l_edge(out, a, target_len, l)
    if out.degree != mu.degree or not is_regular(out, l):
        raise RuntimeError(f"reconstruction of the conjugate of {mu} went wrong")
    return out


def mullineux(mu: Partition, l: int) -> Partition:
    """The Mullineux conjugate: flip each symbol row's length and rebuild.

    The flipped length is a - r when l divides a and a - r + 1 otherwise;
    add_l_edge settles each stage uniquely, so remove_l_edge round-trips by
    construction.
    """
    _check_l(l)
    mu = Partition(mu)
    if not is_regular(mu, l):
        raise ValueError("not l-regular")
    return _mullineux_cached(mu, l)


def mullineux_length(mu: Partition, l: int) -> int:
    """Length of the Mullineux conjugate, from the top stage only."""
    _check_l(l)
    mu = Partition(mu)
    if not mu:
        return 0
    if not is_regular(mu, l):
        raise ValueError("not l-regular")
    e = l_edge(mu, l).size
    return e - len(mu) + (0 if e % l == 0 else 1)


# ---------------------------------------------------------------------------
# constructive node selectors


def _postcondition(ok: bool, message: str) -> None:
    if not ok:
        raise RuntimeError(message)


def find_co_suitable_node(mu: Partition, l: int) -> Node:
    """A co-suitable node whose removal keeps regularity and Mullineux length.

    Requires mu l-regular and edge l-disconnected.  The node comes from one
    of two shapes: the top-right corner of the last component (up to the
    first broken junction) whose first two parts differ, or, when all those
    components have equal leading parts, the staircase descent through the
    repeated blocks.
    """
    _check_l(l)
    mu = Partition(mu)
    if not is_regular(mu, l) or is_edge_l_connected(mu, l):
        raise ValueError("precondition violated: need an l-regular, edge l-disconnected partition")
    comps = mullineux_components(mu, l)
    lengths = [len(c) for c in comps]
    offsets = [0] + list(accumulate(lengths))
    k = next(
        i + 1
        for i in range(len(comps) - 1)
        if comps[i][0] - comps[i + 1][0] + lengths[i] != l
    )

    corner_rows = [i for i in range(1, k + 1) if comps[i - 1][0] > comps[i - 1].part(2)]
    node: Node | None = None
    if corner_rows:
        s = max(corner_rows)
        node = (offsets[s - 1] + 1, comps[s - 1][0])
    else:
        top = comps[0][0]
        u = sum(1 for p in comps[0] if p == top)
        for t in range(1, k + 1):
            if u > lengths[t - 1]:
                continue
            row = offsets[t - 1] + u
            col = mu.part(row)
            if col <= mu.part(row + 1):
                continue
            if is_regular(remove_node(mu, (row, col)), l):
                node = (row, col)
                break
    _postcondition(node is not None, f"no co-suitable node found for {mu} at l={l}")
    assert node is not None
    mu_r = remove_node(mu, node)
    _postcondition(node in node_sets(mu, l).co_suitable, f"{node} is not co-suitable in {mu}")
    _postcondition(is_regular(mu_r, l), f"removing {node} from {mu} loses l-regularity")
    _postcondition(
        mullineux_length(mu_r, l) == mullineux_length(mu, l),
        f"removing {node} from {mu} changed the Mullineux length",
    )
    return node


def find_suitable_node_nonrestricted(lam: Partition, l: int) -> Node:
    """A suitable node of a non-restricted partition, lifted from the
    co-suitable node of the transposed restricted part.

    Requires the scaled part no longer than the restricted part and the
    transpose of the restricted part edge l-disconnected.  All the
    advertised properties of the three related nodes are hard-checked.
    """
    _check_l(l)
    lam = Partition(lam)
    head, tail = restricted_decompose(lam, l)
    if not tail:
        raise ValueError("precondition violated: partition is l-restricted")
    if len(tail) > len(head):
        raise ValueError("precondition violated: scaled part longer than restricted part")
    mu = transpose(head)
    if is_edge_l_connected(mu, l):
        raise ValueError("precondition violated: transposed restricted part is edge l-connected")
    r_node = find_co_suitable_node(mu, l)
    i = r_node[1]
    s_node = (i, lam.part(i))
    s0_node = (i, head.part(i))
    _postcondition(r_node == (head.part(i), i), "transpose bookkeeping broke")
    _postcondition(
        s_node in node_sets(lam, l).suitable, f"{s_node} is not suitable in {lam}"
    )
    _postcondition(
        s0_node in node_sets(head, l).suitable,
        f"{s0_node} is not suitable in the restricted part {head}",
    )
    _postcondition(
        is_restricted(remove_node(head, s0_node), l),
        "removal from the restricted part is not restricted",
    )
    return s_node
