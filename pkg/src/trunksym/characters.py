"""Formal characters: orbit-compressed symmetric polynomials, Schur and
Kostka conversion, Pieri rules, truncated power characters and the graded
freeness identity relating full and truncated tensor characters.

A symmetric polynomial in n variables is stored on dominant (weakly
decreasing) exponent vectors only; the coefficient of a dominant vector is
the coefficient of the whole orbit.  All arithmetic is exact integers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Mapping

from .partitions import Partition, _check_l, partitions_of


@lru_cache(maxsize=None)
def _orbit(key: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Distinct permutations of a multiset, without the n! blowup."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], pool: tuple[int, ...]) -> None:
        if not pool:
            out.append(tuple(prefix))
            return
        seen = set()
        for idx, v in enumerate(pool):
            if v in seen:
                continue
            seen.add(v)
            prefix.append(v)
            rec(prefix, pool[:idx] + pool[idx + 1 :])
            prefix.pop()

    rec([], tuple(sorted(key, reverse=True)))
    return tuple(out)


def _dominant(vec: tuple[int, ...]) -> bool:
    return all(vec[i] >= vec[i + 1] for i in range(len(vec) - 1))


class MonomialChar:
    """A symmetric polynomial compressed onto dominant exponent vectors."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        if n < 1:
            raise ValueError("need at least one variable")
        self.n = n
        clean: dict[tuple[int, ...], int] = {}
        for key, coef in (terms or {}).items():
            key = tuple(key)
            if len(key) != n:
                raise ValueError(f"exponent vector {key} does not have length {n}")
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {key}")
            if not _dominant(key):
                raise ValueError(f"exponent vector {key} is not weakly decreasing")
            if coef:
                clean[key] = clean.get(key, 0) + coef
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MonomialChar":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "MonomialChar":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def from_monomials(cls, n: int, raw: Mapping[tuple[int, ...], int]) -> "MonomialChar":
        """Build from raw monomial data, verifying symmetry orbit by orbit."""
        groups: dict[tuple[int, ...], int] = {}
        cleaned = {tuple(k): v for k, v in raw.items() if v}
        for key, coef in cleaned.items():
            if len(key) != n:
                raise ValueError(f"exponent vector {key} does not have length {n}")
            rep = tuple(sorted(key, reverse=True))
            groups.setdefault(rep, coef)
        for rep in list(groups):
            vals = {cleaned.get(perm, 0) for perm in _orbit(rep)}
            if len(vals) != 1:
                raise ValueError("not symmetric")
            groups[rep] = vals.pop()
        return cls(n, groups)

    # -- queries -----------------------------------------------------------

    def coefficient(self, vec: tuple[int, ...]) -> int:
        return self.terms.get(tuple(sorted(vec, reverse=True)), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self.terms})

    def degree_slice(self, r: int) -> "MonomialChar":
        return MonomialChar(self.n, {k: c for k, c in self.terms.items() if sum(k) == r})

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialChar)
            and self.n == other.n
            and self.terms == other.terms
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "MonomialChar") -> "MonomialChar":
        self._compatible(other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return MonomialChar(self.n, acc)

    def __sub__(self, other: "MonomialChar") -> "MonomialChar":
        return self + other.scale(-1)

    def scale(self, c: int) -> "MonomialChar":
        return MonomialChar(self.n, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "MonomialChar") -> "MonomialChar":
        """Product via full orbit expansion, collecting dominant exponents.

        The coefficient of a dominant vector in the product polynomial is
        exactly its compressed coefficient, so non-dominant sums can be
        dropped on the fly.
        """
        self._compatible(other)
        acc: dict[tuple[int, ...], int] = {}
        for ka, ca in self.terms.items():
            orbit_a = _orbit(ka)
            for kb, cb in other.terms.items():
                c = ca * cb
                for pa in orbit_a:
                    for pb in _orbit(kb):
                        vec = tuple(x + y for x, y in zip(pa, pb))
                        if _dominant(vec):
                            acc[vec] = acc.get(vec, 0) + c
        return MonomialChar(self.n, acc)

    def _compatible(self, other: "MonomialChar") -> None:
        if not isinstance(other, MonomialChar) or self.n != other.n:
            raise ValueError("variable counts differ")

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {c}" for k, c in sorted(self.terms.items()))
        return f"MonomialChar(n={self.n}, {{{inner}}})"


class SchurExpansion:
    """A finitely supported integer combination of Schur functions."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, int] | None = None):
        self.n = n
        clean: dict[Partition, int] = {}
        for lam, c in (coeffs or {}).items():
            lam = Partition(lam)
            if len(lam) > n:
                raise ValueError(f"{lam} has more than {n} parts")
            if c:
                clean[lam] = c
        self.coeffs = clean

    def coefficient(self, lam: Partition) -> int:
        return self.coeffs.get(Partition(lam), 0)

    def support(self) -> list[Partition]:
        return sorted(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError("variable counts differ")
        acc = dict(self.coeffs)
        for k, c in other.coeffs.items():
            acc[k] = acc.get(k, 0) + c
        return SchurExpansion(self.n, acc)

    def to_monomials(self) -> MonomialChar:
        out = MonomialChar.zero(self.n)
        for lam, c in self.coeffs.items():
            out = out + schur_to_monomials(lam, self.n).scale(c)
        return out

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "coeff": self.coeffs[lam]}
            for lam in sorted(self.coeffs, key=lambda p: (p.degree, tuple(p)))
        ]

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(k)}: {c}" for k, c in sorted(self.coeffs.items()))
        return f"SchurExpansion(n={self.n}, {{{inner}}})"


# ---------------------------------------------------------------------------
# Kostka numbers and conversion


def _strip_predecessors(shape: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Shapes nu with shape/nu a horizontal strip of the given size."""
    rows = len(shape)

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == rows:
            if remaining == 0:
                yield prefix
            return
        below = shape[i + 1] if i + 1 < rows else 0
        for v in range(shape[i], max(below, shape[i] - remaining) - 1, -1):
            yield from rec(i + 1, remaining - (shape[i] - v), prefix + (v,))

    yield from rec(0, size, ())


@lru_cache(maxsize=None)
def kostka(shape: tuple[int, ...], content: tuple[int, ...]) -> int:
    """Number of semistandard tableaux of the shape with the given content.

    Computed by peeling the largest letter, whose cells form a horizontal
    strip.
    """
    shape = tuple(p for p in shape if p)
    if not content:
        return 1 if not shape else 0
    head, last = content[:-1], content[-1]
    if last == 0:
        return kostka(shape, head)
    if last > sum(shape):
        return 0
    return sum(kostka(nu, head) for nu in _strip_predecessors(shape, last))


def schur_to_monomials(lam: Partition, n: int) -> MonomialChar:
    """Expand a Schur function into dominant monomials; Kostka coefficients."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    terms: dict[tuple[int, ...], int] = {}
    for mu in partitions_of(lam.degree, max_len=n):
        k = kostka(tuple(lam), mu.padded(n))
        if k:
            terms[mu.padded(n)] = k
    return MonomialChar(n, terms)


def monomials_to_schur(chi: MonomialChar) -> SchurExpansion:
    """Invert the Kostka triangle by peeling dominance-maximal exponents."""
    work = dict(chi.terms)
    out: dict[Partition, int] = {}
    guard = 0
    while work:
        guard += 1
        if guard > 200_000:
            raise RuntimeError("triangular solve failed to terminate")
        # the lex-max key is dominance-maximal within its degree slice
        key = max(work)
        coef = work[key]
        lam = Partition(key)
        out[lam] = coef
        for k2, c2 in schur_to_monomials(lam, chi.n).terms.items():
            nv = work.get(k2, 0) - coef * c2
            if nv:
                work[k2] = nv
            else:
                work.pop(k2, None)
    return SchurExpansion(chi.n, out)


# ---------------------------------------------------------------------------
# Pieri rules


def pieri_h(lam: Partition, a: int, n: int) -> SchurExpansion:
    """Multiply by a complete symmetric function: add a horizontal strip."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    if a < 0:
        raise ValueError("strip size must be nonnegative")
    rows = min(n, len(lam) + 1)
    found: dict[Partition, int] = {}

    def rec(i: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if i > rows:
            if remaining == 0:
                found[Partition(prefix)] = 1
            return
        low = lam.part(i)
        high = low + remaining if i == 1 else min(lam.part(i - 1), low + remaining)
        for v in range(high, low - 1, -1):
            rec(i + 1, remaining - (v - low), prefix + (v,))

    rec(1, a, ())
    return SchurExpansion(n, found)


def pieri_e(lam: Partition, r: int, n: int) -> SchurExpansion:
    """Multiply by an elementary symmetric function: add a vertical strip."""
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than n={n} parts")
    if r < 0:
        raise ValueError("strip size must be nonnegative")
    found: dict[Partition, int] = {}
    limit = min(n, len(lam) + r)
    for chosen in combinations(range(1, limit + 1), r):
        grown = set(chosen)
        parts = [lam.part(i) + (1 if i in grown else 0) for i in range(1, limit + 1)]
        try:
            mu = Partition(parts)
        except ValueError:
            continue
        found[mu] = 1
    return SchurExpansion(n, found)


# ---------------------------------------------------------------------------
# power characters and the graded identity


def truncated_power_char(r: int, n: int, l: int) -> MonomialChar:
    """Degree-r character of the truncated symmetric power: exponents < l."""
    _check_l(l)
    if r < 0:
        raise ValueError("degree must be nonnegative")
    terms = {
        mu.padded(n): 1 for mu in partitions_of(r, max_len=n, max_part=l - 1)
    }
    return MonomialChar(n, terms)


def full_power_char(r: int, n: int) -> MonomialChar:
    """Degree-r character of the full symmetric power (all monomials)."""
    if r < 0:
        raise ValueError("degree must be nonnegative")
    return MonomialChar(n, {mu.padded(n): 1 for mu in partitions_of(r, max_len=n)})


def _graded_power(slices: list[MonomialChar], m: int, n: int) -> list[MonomialChar]:
    """Degree slices of the m-fold product of a graded character."""
    top = len(slices) - 1
    cur = [MonomialChar.one(n)] + [MonomialChar.zero(n)] * top
    for _ in range(m):
        nxt = []
        for d in range(top + 1):
            acc = MonomialChar.zero(n)
            for i in range(d + 1):
                if cur[i].is_zero() or slices[d - i].is_zero():
                    continue
                acc = acc + cur[i] * slices[d - i]
            nxt.append(acc)
        cur = nxt
    return cur


def truncated_tensor_char(m: int, n: int, l: int, r: int) -> SchurExpansion:
    """Schur expansion of the degree-r slice of the m-fold truncated power.

    Coefficients may be negative (the truncated powers are not filtered by
    standard modules in general; already the degree-3 slice at l = 3 in 3
    variables is s_(2,1) - s_(1,1,1)).  The support bound first part <=
    m(l-1) always holds and is enforced.
    """
    _check_l(l)
    if m < 0 or r < 0:
        raise ValueError("m and r must be nonnegative")
    base = [truncated_power_char(d, n, l) for d in range(r + 1)]
    chi = _graded_power(base, m, n)[r]
    out = monomials_to_schur(chi)
    for lam in out.coeffs:
        if lam.part(1) > m * (l - 1):
            raise RuntimeError(
                f"truncated tensor character violated its support bound at {lam}"
            )
    return out


def frobenius_stretch(chi: MonomialChar, l: int) -> MonomialChar:
    """Scale every exponent vector by l; coefficients unchanged."""
    _check_l(l)
    return MonomialChar(chi.n, {tuple(l * e for e in k): c for k, c in chi.terms.items()})


def verify_graded_free_identity(m: int, n: int, l: int, r: int) -> bool:
    """Degree-r slice of the full m-fold power vs truncated times stretched.

    Checks ch H_r = sum over i + l*j = r of ch Hbar_i * stretch(ch H_j).
    """
    _check_l(l)
    if m < 0 or r < 0:
        raise ValueError("m and r must be nonnegative")
    full = _graded_power([full_power_char(d, n) for d in range(r + 1)], m, n)
    trunc = _graded_power([truncated_power_char(d, n, l) for d in range(r + 1)], m, n)
    rhs = MonomialChar.zero(n)
    for j in range(r // l + 1):
        i = r - l * j
        if trunc[i].is_zero():
            continue
        rhs = rhs + trunc[i] * frobenius_stretch(full[j], l)
    return full[r] == rhs
