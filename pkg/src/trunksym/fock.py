"""Level-1 Fock space and its canonical basis: an exact oracle for Hecke
decomposition numbers at quantum characteristic l.

Basis vectors are indexed by partitions with coefficients in Z[v, v^-1].
The residue-i induction operator adds i-nodes with a v-power counting
addable-minus-removable i-nodes on one side of the added node; which side
is pinned at runtime by a degree-2 anchor computation, as both conventions
circulate.  Divided powers divide a repeated application by the balanced
v-factorial, and the division must come out exact, which doubles as an
internal consistency check.

Canonical basis columns are produced by the usual first-approximation /
bar-symmetric Gaussian elimination; terminal columns must be unitriangular
with coefficients in v*Z>=0[v], enforced with hard errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .partitions import (
    EMPTY,
    Partition,
    _check_l,
    add_node,
    addable_nodes,
    cells,
    dominance_leq,
    is_regular,
    is_restricted,
    node_residue,
    partitions_of,
    removable_nodes,
    transpose,
)
from .mullineux import mullineux


class LaurentPoly:
    """Sparse integer Laurent polynomial in one variable v."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        self.c: dict[int, int] = {}
        for e, a in (coeffs or {}).items():
            if a:
                self.c[int(e)] = self.c.get(int(e), 0) + a
                if not self.c[int(e)]:
                    del self.c[int(e)]

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def v(cls, k: int) -> "LaurentPoly":
        return cls({k: 1})

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly) and self.c == other.c

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.c)
        for e, a in other.c.items():
            out[e] = out.get(e, 0) + a
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -a for e, a in self.c.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, a1 in self.c.items():
            for e2, a2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + a1 * a2
        return LaurentPoly(out)

    def bar(self) -> "LaurentPoly":
        """v -> v^-1."""
        return LaurentPoly({-e: a for e, a in self.c.items()})

    def coefficient(self, e: int) -> int:
        return self.c.get(e, 0)

    def evaluate_one(self) -> int:
        return sum(self.c.values())

    def exact_div(self, den: "LaurentPoly") -> "LaurentPoly":
        """Exact division; a nonzero remainder is a hard error."""
        if not den:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly()
        num = dict(self.c)
        dmin = min(den.c)
        dlead = den.c[dmin]
        limit = max(self.c) - max(den.c)
        quot: dict[int, int] = {}
        while num:
            e = min(num)
            if num[e] % dlead or e - dmin > limit:
                raise ValueError("non-exact division")
            f = num[e] // dlead
            quot[e - dmin] = f
            for de, da in den.c.items():
                k = e - dmin + de
                nv = num.get(k, 0) - f * da
                if nv:
                    num[k] = nv
                else:
                    num.pop(k, None)
        return LaurentPoly(quot)

    def __repr__(self) -> str:
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c):
            a = self.c[e]
            if e == 0:
                bits.append(f"{a}")
            elif e == 1:
                bits.append(f"{a}*v")
            else:
                bits.append(f"{a}*v^{e}")
        return " + ".join(bits)


def gauss_integer(k: int) -> LaurentPoly:
    """Balanced quantum integer: v^(k-1) + v^(k-3) + ... + v^(1-k)."""
    if k < 0:
        raise ValueError("quantum integers need k >= 0")
    return LaurentPoly({k - 1 - 2 * j: 1 for j in range(k)})


def gauss_factorial(k: int) -> LaurentPoly:
    out = LaurentPoly.one()
    for j in range(2, k + 1):
        out = out * gauss_integer(j)
    return out


class FockVector:
    """Finitely supported Partition -> LaurentPoly table, degree homogeneous."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Partition, LaurentPoly] | None = None):
        self.entries: dict[Partition, LaurentPoly] = {}
        degree = None
        for lam, poly in (entries or {}).items():
            if not poly:
                continue
            lam = Partition(lam)
            if degree is None:
                degree = lam.degree
            elif lam.degree != degree:
                raise ValueError("mixed degrees in one Fock vector")
            self.entries[lam] = poly

    @classmethod
    def basis(cls, lam: Partition) -> "FockVector":
        return cls({Partition(lam): LaurentPoly.one()})

    def is_zero(self) -> bool:
        return not self.entries

    def coefficient(self, lam: Partition) -> LaurentPoly:
        return self.entries.get(Partition(lam), LaurentPoly.zero())

    def support(self) -> list[Partition]:
        return sorted(self.entries)

    def subtract_scaled(self, poly: LaurentPoly, other: "FockVector") -> "FockVector":
        out = dict(self.entries)
        for lam, p in other.entries.items():
            nv = out.get(lam, LaurentPoly.zero()) - poly * p
            if nv:
                out[lam] = nv
            else:
                out.pop(lam, None)
        return FockVector(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FockVector) and self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        bits = [f"({p!r})|{list(lam)}>" for lam, p in sorted(self.entries.items())]
        return " + ".join(bits) if bits else "0"


# ---------------------------------------------------------------------------
# induction operators


_CONVENTION: str | None = None


def _node_power(lam: Partition, node, i: int, l: int, convention: str) -> int:
    adds = [B for B in addable_nodes(lam) if node_residue(B, l) == i]
    rems = [R for R in removable_nodes(lam) if node_residue(R, l) == i]
    if convention == "above":
        return sum(B[0] < node[0] for B in adds) - sum(R[0] < node[0] for R in rems)
    return sum(B[0] > node[0] for B in adds) - sum(R[0] > node[0] for R in rems)


def _f_single(i: int, x: FockVector, l: int, convention: str) -> FockVector:
    out: dict[Partition, LaurentPoly] = {}
    for lam, coef in x.entries.items():
        for node in addable_nodes(lam):
            if node_residue(node, l) != i:
                continue
            mu = add_node(lam, node)
            power = LaurentPoly.v(_node_power(lam, node, i, l, convention))
            nv = out.get(mu, LaurentPoly.zero()) + coef * power
            if nv:
                out[mu] = nv
            else:
                out.pop(mu, None)
    return FockVector(out)


def _convention() -> str:
    """Pin the v-power side against the degree-2 anchor at l = 2.

    Acting with the residue-1 operator on the single-box partition must
    give the two-box row plus v times the two-box column.
    """
    global _CONVENTION
    if _CONVENTION is None:
        target = FockVector(
            {Partition((2,)): LaurentPoly.one(), Partition((1, 1)): LaurentPoly.v(1)}
        )
        probe = FockVector.basis(Partition((1,)))
        for side in ("above", "below"):
            if _f_single(1, probe, 2, side) == target:
                _CONVENTION = side
                break
        else:
            raise RuntimeError("neither node-counting convention matches the anchor")
    return _CONVENTION


def f_apply(i: int, k: int, x: FockVector, l: int) -> FockVector:
    """Divided power of the residue-i induction operator.

    Applies the single operator k times and divides by the balanced
    v-factorial; division exactness is enforced.
    """
    _check_l(l)
    if not 0 <= i < l:
        raise ValueError("residue out of range")
    if k < 1:
        raise ValueError("divided-power exponent must be positive")
    side = _convention()
    cur = x
    for _ in range(k):
        cur = _f_single(i, cur, l, side)
    if k == 1 or cur.is_zero():
        return cur
    fact = gauss_factorial(k)
    return FockVector({lam: p.exact_div(fact) for lam, p in cur.entries.items()})


# ---------------------------------------------------------------------------
# first approximation and canonical columns


def ladder_index(node, l: int) -> int:
    i, j = node
    return i + (l - 1) * (j - 1)


def ladder_monomial(mu: Partition, l: int) -> FockVector:
    """Divided-power product over the ladders of mu, applied to vacuum.

    The result must be unitriangular: coefficient one on mu, support
    otherwise strictly dominance-below mu.
    """
    _check_l(l)
    mu = Partition(mu)
    if not is_regular(mu, l):
        raise ValueError("not l-regular")
    groups: dict[int, list] = {}
    for cell in cells(mu):
        groups.setdefault(ladder_index(cell, l), []).append(cell)
    vec = FockVector.basis(EMPTY)
    for idx in sorted(groups):
        nodes = groups[idx]
        vec = f_apply(node_residue(nodes[0], l), len(nodes), vec, l)
    if vec.coefficient(mu) != LaurentPoly.one():
        raise RuntimeError(f"ladder monomial of {mu} has a bad leading term")
    for nu in vec.entries:
        if nu != mu and not (dominance_leq(nu, mu) and nu != mu):
            raise RuntimeError(f"ladder monomial of {mu} has support above {mu}")
    return vec


def canonical_column(
    mu: Partition, l: int, prior: Mapping[Partition, FockVector]
) -> FockVector:
    """Bar-symmetric Gaussian elimination of the ladder monomial.

    Repeatedly picks the dominance-maximal defective coefficient (one with
    a term in degree <= 0), subtracts the unique bar-symmetric multiple of
    the prior column that clears it, and finally insists on coefficients
    in v*Z>=0[v] below a unit diagonal.
    """
    mu = Partition(mu)
    vec = ladder_monomial(mu, l)
    rounds = 0
    while True:
        rounds += 1
        if rounds > 100_000:
            raise RuntimeError("canonical column reduction failed to terminate")
        defective = [
            nu
            for nu, p in vec.entries.items()
            if nu != mu and any(e <= 0 for e in p.c)
        ]
        if not defective:
            break
        nu = max(defective)  # lex max is dominance-maximal among these
        c = vec.coefficient(nu)
        dd: dict[int, int] = {}
        for e, a in c.c.items():
            if e < 0:
                dd[e] = dd.get(e, 0) + a
                dd[-e] = dd.get(-e, 0) + a
            elif e == 0:
                dd[0] = dd.get(0, 0) + a
        column = prior.get(nu)
        if column is None:
            raise RuntimeError(
                f"reduction of {mu} needs the column of {nu}, which is unavailable"
            )
        vec = vec.subtract_scaled(LaurentPoly(dd), column)
    if vec.coefficient(mu) != LaurentPoly.one():
        raise RuntimeError(f"canonical column of {mu} lost its unit diagonal")
    for nu, p in vec.entries.items():
        if nu == mu:
            continue
        if not dominance_leq(nu, mu):
            raise RuntimeError(f"canonical column of {mu} has support above it")
        if any(e < 1 for e in p.c) or any(a < 0 for a in p.c.values()):
            raise RuntimeError(
                f"positivity violation in column {mu} at row {nu}: {p!r}"
            )
    return vec


# ---------------------------------------------------------------------------
# decomposition matrices


DEGREE_CAPS = {2: 10, 3: 10}


def degree_cap(l: int) -> int:
    return DEGREE_CAPS.get(l, 8)


@dataclass(frozen=True, eq=False)
class DecompositionMatrix:
    """Rows all partitions of the degree, columns the l-regular ones,
    entries the canonical-basis coefficients at v = 1."""

    l: int
    degree: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    entries: dict

    def entry(self, lam: Partition, mu: Partition) -> int:
        lam, mu = Partition(lam), Partition(mu)
        if lam.degree != self.degree or mu.degree != self.degree:
            raise ValueError("labels do not have the matrix degree")
        if mu not in self.cols:
            raise ValueError(f"{mu} is not a column label (not l-regular?)")
        return self.entries.get((lam, mu), 0)

    def column_support(self, mu: Partition) -> list[Partition]:
        mu = Partition(mu)
        return sorted(lam for (lam, col) in self.entries if col == mu)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, DecompositionMatrix)
            and self.l == other.l
            and self.degree == other.degree
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )


_MATRIX_MEMO: dict[tuple[int, int], DecompositionMatrix] = {}


def decomposition_matrix(
    r: int, l: int, allow_large: bool = False, progress=None
) -> DecompositionMatrix:
    """All canonical columns of one degree, evaluated at v = 1.

    Columns are produced in a dominance-compatible (lex ascending) order so
    each reduction only needs finished columns.  Degrees above the default
    desk-scale cap require allow_large.
    """
    _check_l(l)
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if not allow_large and r > degree_cap(l):
        raise ValueError(
            f"degree {r} is above the default cap {degree_cap(l)} for l={l}; "
            "pass allow_large (CLI: --unsafe-large) to override"
        )
    key = (l, r)
    if key in _MATRIX_MEMO:
        return _MATRIX_MEMO[key]
    rows = tuple(partitions_of(r))
    cols = tuple(lam for lam in rows if is_regular(lam, l))
    prior: dict[Partition, FockVector] = {}
    entries: dict[tuple[Partition, Partition], int] = {}
    for idx, mu in enumerate(sorted(cols)):
        if progress is not None:
            progress(f"l={l} r={r}: column {idx + 1}/{len(cols)}")
        column = canonical_column(mu, l, prior)
        prior[mu] = column
        for lam, poly in column.entries.items():
            val = poly.evaluate_one()
            if val:
                entries[(lam, mu)] = val
    mat = DecompositionMatrix(l=l, degree=r, rows=rows, cols=cols, entries=entries)
    _MATRIX_MEMO[key] = mat
    return mat


def nabla_multiplicity(
    tau: Partition, lam: Partition, l: int, matrix: DecompositionMatrix | None = None
) -> int:
    """Multiplicity of the simple labelled by restricted lam in the standard
    module labelled by tau, read off the canonical-basis matrix."""
    _check_l(l)
    tau, lam = Partition(tau), Partition(lam)
    if not is_restricted(lam, l):
        raise ValueError("label not restricted")
    if tau.degree != lam.degree:
        raise ValueError("labels must have equal degree")
    if matrix is None:
        matrix = decomposition_matrix(lam.degree, l)
    return matrix.entry(tau, mullineux(transpose(lam), l))
