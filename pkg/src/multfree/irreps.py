"""
Irreducible-representation labels for the compact classical groups and their
exact characters on the standard maximal torus.

Families and label conventions
------------------------------
su(m)    partitions of length <= m-1.  Characters are Schur polynomials in m
         variables for the lift with last coordinate 0; torus weights are
         reported as (m-1)-vectors, normalised so that the dropped last
         coordinate is 0 (the honest character of the (m-1)-torus).
sp(n)    partitions of length <= n.  Characters are computed from the
         branching chains behind King's symplectic tableaux: sequences
         {} = u_0 in u_1 in ... in u_{2n} = weight with horizontal-strip
         steps and len(u_t) <= ceil(t/2); step 2i-1 contributes x_i^cells,
         step 2i contributes x_i^-cells.
u(k)     weakly decreasing integer k-tuples (entries may be negative);
         a determinant-power shift reduces to the partition case.
so(2n)   integer tuples a_1 >= ... >= a_{n-1} >= |a_n| (tensor
         representations of the full even orthogonal group; no spin
         weights).  Characters come from the Weyl alternating sum over
         signed permutations with an even number of sign changes, divided
         exactly by the corresponding denominator alternant.
circle   a single integer r; the character is the monomial x^r.

``decompose_product`` is the independent brute-force oracle used to check
every closed-form rule in the package: it multiplies characters exactly and
repeatedly strips the lexicographically largest surviving dominant weight.
Any negative coefficient encountered there is a hard internal error, never
clamped.

All operations are pure functions over immutable values.  The pairwise
tensor memo behaves as if absent and tolerates concurrent readers under the
GIL (plain dict insertion, single writer per key).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .laurent import LaurentPoly, exact_divide
from .partitions import Partition, canonical

FAMILIES = ("su", "sp", "u", "so", "circle")


class OracleError(RuntimeError):
    """The character oracle reached an impossible state (a genuine bug)."""


@dataclass(frozen=True, order=True)
class IrrepLabel:
    family: str
    rank: int
    weight: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "weight", tuple(int(x) for x in self.weight))
        w = self.weight
        if self.family == "su":
            if self.rank < 2:
                raise ValueError("su rank must be >= 2")
            object.__setattr__(self, "weight", canonical(w))
            if len(self.weight) > self.rank - 1:
                raise ValueError(f"su({self.rank}) weight too long: {w}")
        elif self.family == "sp":
            if self.rank < 1:
                raise ValueError("sp rank must be >= 1")
            object.__setattr__(self, "weight", canonical(w))
            if len(self.weight) > self.rank:
                raise ValueError(f"sp({self.rank}) weight too long: {w}")
        elif self.family == "u":
            if self.rank < 1:
                raise ValueError("u rank must be >= 1")
            if len(w) != self.rank:
                raise ValueError(f"u({self.rank}) weight must have length {self.rank}: {w}")
            if any(a < b for a, b in zip(w, w[1:])):
                raise ValueError(f"u weight not weakly decreasing: {w}")
        elif self.family == "so":
            if self.rank < 2:
                raise ValueError("so rank must be >= 2 (of SO(2n), n = rank)")
            if len(w) != self.rank:
                raise ValueError(f"so weight must have length {self.rank}: {w}")
            if any(a < b for a, b in zip(w[:-1], w[1:-1])):
                raise ValueError(f"so weight not weakly decreasing: {w}")
            if self.rank >= 2 and w[-2] < abs(w[-1]):
                raise ValueError(f"so weight needs a[n-2] >= |a[n-1]|: {w}")
        elif self.family == "circle":
            if self.rank != 1:
                raise ValueError("circle rank is always 1")
            if len(w) != 1:
                raise ValueError("circle weight is a single integer")

    @property
    def is_trivial(self) -> bool:
        return all(x == 0 for x in self.weight)

    def sort_key(self):
        return (self.family, self.rank, self.weight)

    def weight_size(self) -> int:
        return sum(abs(x) for x in self.weight)

    def to_json(self) -> dict:
        return {"family": self.family, "rank": self.rank, "weight": list(self.weight)}

    @classmethod
    def from_json(cls, data: dict) -> "IrrepLabel":
        return cls(str(data["family"]).lower(), int(data["rank"]), tuple(data["weight"]))


def trivial(family: str, rank: int) -> IrrepLabel:
    if family in ("su", "sp"):
        return IrrepLabel(family, rank, ())
    if family in ("u", "so"):
        return IrrepLabel(family, rank, (0,) * rank)
    return IrrepLabel("circle", 1, (0,))


def su(rank: int, *weight: int) -> IrrepLabel:
    return IrrepLabel("su", rank, weight)


def sp(rank: int, *weight: int) -> IrrepLabel:
    return IrrepLabel("sp", rank, weight)


def u(rank: int, *weight: int) -> IrrepLabel:
    return IrrepLabel("u", rank, weight)


def so(rank: int, *weight: int) -> IrrepLabel:
    return IrrepLabel("so", rank, weight)


def circle(r: int) -> IrrepLabel:
    return IrrepLabel("circle", 1, (r,))


# ---------------------------------------------------------------------------
# formal sums


def label_sort_key(label):
    if isinstance(label, tuple):
        return label
    return label.sort_key()


def label_to_json(label):
    if isinstance(label, tuple):
        return list(label)
    return label.to_json()


def label_from_json(data):
    if isinstance(data, list):
        return tuple(int(x) for x in data)
    if "torus" in data:
        from .cases import CompositeLabel

        return CompositeLabel.from_json(data)
    return IrrepLabel.from_json(data)


class FormalSum:
    """
    A multiset of labels: mapping label -> multiplicity >= 1.

    ``truncation`` is None for exact decompositions and a degree bound D for
    series cut at total grading degree D.  ``note`` records how the sum was
    produced ("closed-form" vs "via-oracle") and does not affect equality.
    """

    __slots__ = ("entries", "truncation", "note")

    def __init__(self, entries=None, truncation: int | None = None, note: str | None = None):
        self.entries: dict = {}
        if entries:
            for label, mult in dict(entries).items():
                if mult < 0:
                    raise ValueError(f"negative multiplicity for {label}")
                if mult > 0:
                    self.entries[label] = int(mult)
        self.truncation = truncation
        self.note = note

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FormalSum)
            and self.entries == other.entries
            and self.truncation == other.truncation
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.items_sorted())

    def __getitem__(self, label) -> int:
        return self.entries.get(label, 0)

    def items_sorted(self) -> list:
        return sorted(self.entries.items(), key=lambda kv: label_sort_key(kv[0]))

    def is_multiplicity_free(self) -> bool:
        return all(m == 1 for m in self.entries.values())

    def total(self) -> int:
        return sum(self.entries.values())

    def to_json(self) -> dict:
        return {
            "truncation": "exact" if self.truncation is None else self.truncation,
            "entries": [
                {"label": label_to_json(lab), "mult": m} for lab, m in self.items_sorted()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FormalSum":
        trunc = data.get("truncation", "exact")
        entries = {}
        for row in data["entries"]:
            entries[label_from_json(row["label"])] = int(row["mult"])
        return cls(entries, None if trunc == "exact" else int(trunc))

    def __repr__(self) -> str:
        inner = ", ".join(f"{lab}: {m}" for lab, m in self.items_sorted())
        return f"FormalSum({{{inner}}})"


# ---------------------------------------------------------------------------
# characters

_CHAR_CACHE: dict[IrrepLabel, LaurentPoly] = {}


def _strips_within(base: Partition, bound: Partition, cap: int) -> Iterator[tuple[Partition, int]]:
    """All shapes t with base in t in bound, t/base a horizontal strip and
    len(t) <= cap, together with the number of added cells."""
    rows = min(cap, len(base) + 1, len(bound))
    if len(base) > rows:
        return
    padded = base + (0,) * (rows - len(base))

    def fill(i: int, acc: list[int], added: int):
        if i == rows:
            yield canonical(acc), added
            return
        lo = padded[i]
        hi = min(bound[i], padded[i - 1]) if i > 0 else bound[i]
        for v in range(lo, hi + 1):
            acc.append(v)
            yield from fill(i + 1, acc, added + v - lo)
            acc.pop()

    yield from fill(0, [], 0)


def _schur_poly(lam: Partition, k: int) -> LaurentPoly:
    """Schur polynomial s_lam(x_1..x_k) via chains of horizontal strips."""
    if len(lam) > k:
        return LaurentPoly.zero(k)
    state: dict[Partition, LaurentPoly] = {(): LaurentPoly.one(k)}
    for i in range(k):
        new: dict[Partition, LaurentPoly] = {}
        for shape, poly in state.items():
            for t, added in _strips_within(shape, lam, cap=i + 1):
                step = (0,) * i + (added,) + (0,) * (k - i - 1)
                contrib = poly.shift(step)
                new[t] = new[t] + contrib if t in new else contrib
        state = new
    return state.get(lam, LaurentPoly.zero(k))


def _symplectic_poly(lam: Partition, n: int) -> LaurentPoly:
    """Symplectic character sp_lam(x_1^+-1 .. x_n^+-1) via King chains."""
    if len(lam) > n:
        return LaurentPoly.zero(n)
    state: dict[Partition, LaurentPoly] = {(): LaurentPoly.one(n)}
    for step in range(1, 2 * n + 1):
        var = (step + 1) // 2 - 1
        sign = 1 if step % 2 == 1 else -1
        cap = (step + 1) // 2
        new: dict[Partition, LaurentPoly] = {}
        for shape, poly in state.items():
            for t, added in _strips_within(shape, lam, cap=cap):
                e = [0] * n
                e[var] = sign * added
                contrib = poly.shift(e)
                new[t] = new[t] + contrib if t in new else contrib
        state = new
    return state.get(lam, LaurentPoly.zero(n))


def _even_signed_perms(n: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
    """Elements of the D_n Weyl group: (perm, signs, det) with det = sgn(perm)."""
    for perm in itertools.permutations(range(n)):
        sgn = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sgn = -sgn
        for flips in itertools.product((1, -1), repeat=n):
            if flips.count(-1) % 2 == 0:
                yield perm, flips, sgn


def _dn_alternant(v: tuple[int, ...], n: int) -> LaurentPoly:
    terms: dict[tuple[int, ...], int] = {}
    for perm, flips, sgn in _even_signed_perms(n):
        e = tuple(flips[i] * v[perm[i]] for i in range(n))
        terms[e] = terms.get(e, 0) + sgn
    return LaurentPoly(n, terms)


def _dn_character(lam: tuple[int, ...], n: int) -> LaurentPoly:
    rho = tuple(n - 1 - i for i in range(n))
    num = _dn_alternant(tuple(a + b for a, b in zip(lam, rho)), n)
    den = _dn_alternant(rho, n)
    return exact_divide(num, den)


def weyl_character(label: IrrepLabel) -> LaurentPoly:
    """Exact character of the irrep on the standard maximal torus."""
    cached = _CHAR_CACHE.get(label)
    if cached is not None:
        return cached
    fam, rank, w = label.family, label.rank, label.weight
    if fam == "circle":
        poly = LaurentPoly.monomial(w)
    elif fam == "su":
        poly = _schur_poly(w, rank)
    elif fam == "sp":
        poly = _symplectic_poly(w, rank)
    elif fam == "u":
        shift = -w[-1] if w[-1] < 0 else 0
        lam = canonical(tuple(x + shift for x in w))
        poly = _schur_poly(lam, rank)
        if shift:
            poly = poly.shift((-shift,) * rank)
    else:  # so
        poly = _dn_character(w, rank)
    _CHAR_CACHE[label] = poly
    return poly


def dimension(label: IrrepLabel) -> int:
    """Dimension from the Weyl product formula (independent of the character)."""
    fam, rank, w = label.family, label.rank, label.weight
    if fam == "circle":
        return 1
    d = Fraction(1)
    if fam in ("su", "u"):
        lam = w + (0,) * (rank - len(w)) if fam == "su" else w
        for i in range(rank):
            for j in range(i + 1, rank):
                d *= Fraction(lam[i] - lam[j] + j - i, j - i)
    elif fam == "sp":
        lam = w + (0,) * (rank - len(w))
        l = [lam[i] + rank - i for i in range(rank)]
        m = [rank - i for i in range(rank)]
        for i in range(rank):
            d *= Fraction(l[i], m[i])
            for j in range(i + 1, rank):
                d *= Fraction((l[i] - l[j]) * (l[i] + l[j]), (m[i] - m[j]) * (m[i] + m[j]))
    else:  # so
        l = [w[i] + rank - 1 - i for i in range(rank)]
        m = [rank - 1 - i for i in range(rank)]
        for i in range(rank):
            for j in range(i + 1, rank):
                d *= Fraction((l[i] - l[j]) * (l[i] + l[j]), (m[i] - m[j]) * (m[i] + m[j]))
    if d.denominator != 1:
        raise OracleError(f"non-integral dimension for {label}")
    return int(d)


def weight_system(label: IrrepLabel) -> FormalSum:
    """
    Restriction of the irrep to the maximal torus, as a multiset of integer
    character vectors.  For su(m) the vectors are the honest characters of
    the (m-1)-torus: the last coordinate of the m-variable weight is
    normalised to 0 and dropped.
    """
    poly = weyl_character(label)
    out: dict[tuple[int, ...], int] = {}
    for e, c in poly.items():
        if label.family == "su":
            v = tuple(x - e[-1] for x in e[:-1])
        else:
            v = e
        out[v] = out.get(v, 0) + c
    return FormalSum(out)


# ---------------------------------------------------------------------------
# the decomposition oracle


def _dominant_label(family: str, rank: int, e: tuple[int, ...]) -> IrrepLabel:
    if family == "sp":
        if any(a < b for a, b in zip(e, e[1:])) or (e and e[-1] < 0):
            raise OracleError(f"leading weight {e} is not sp-dominant")
        return IrrepLabel("sp", rank, canonical(e))
    if family == "u":
        if any(a < b for a, b in zip(e, e[1:])):
            raise OracleError(f"leading weight {e} is not u-dominant")
        return IrrepLabel("u", rank, e)
    if family == "so":
        if any(a < b for a, b in zip(e[:-1], e[1:-1])) or (len(e) >= 2 and e[-2] < abs(e[-1])):
            raise OracleError(f"leading weight {e} is not so-dominant")
        return IrrepLabel("so", rank, e)
    raise OracleError(f"greedy decomposition does not handle family {family!r}")


def _greedy_decompose(poly: LaurentPoly, family: str, rank: int) -> dict[IrrepLabel, int]:
    """
    Peel irreducible characters off ``poly`` from the top.

    The lex-largest exponent of any nonnegative combination of irreducible
    characters is the highest weight of a constituent, hence dominant; a
    non-dominant leader or a negative coefficient can only mean a bug and
    aborts the run.
    """
    parts: dict[IrrepLabel, int] = {}
    rem = poly
    while rem:
        e = rem.leading_exponent()
        label = _dominant_label(family, rank, e)
        c = rem.terms[e]
        if c < 1:
            raise OracleError(f"negative multiplicity {c} at weight {e}")
        rem = rem - weyl_character(label).scale(c)
        parts[label] = c
    return parts


_PAIR_CACHE: dict[tuple, dict[IrrepLabel, int]] = {}


def tensor_pair(a: IrrepLabel, b: IrrepLabel) -> dict[IrrepLabel, int]:
    """Decomposition of a (x) b into irreducibles, memoised on sorted weights."""
    if a.family != b.family or a.rank != b.rank:
        raise ValueError(f"family/rank mismatch: {a} vs {b}")
    wa, wb = sorted((a.weight, b.weight))
    key = (a.family, a.rank, wa, wb)
    hit = _PAIR_CACHE.get(key)
    if hit is not None:
        return hit
    fam, rank = a.family, a.rank
    if fam == "circle":
        result = {circle(a.weight[0] + b.weight[0]): 1}
    elif fam == "su":
        # run the u(m) oracle on the standard lifts, then renormalise labels
        ua = IrrepLabel("u", rank, a.weight + (0,) * (rank - len(a.weight)))
        ub = IrrepLabel("u", rank, b.weight + (0,) * (rank - len(b.weight)))
        prod = weyl_character(ua) * weyl_character(ub)
        result = {}
        for lab, m in _greedy_decompose(prod, "u", rank).items():
            w = lab.weight
            key_su = IrrepLabel("su", rank, tuple(x - w[-1] for x in w))
            result[key_su] = result.get(key_su, 0) + m
    else:
        prod = weyl_character(a) * weyl_character(b)
        result = _greedy_decompose(prod, fam, rank)
    expected = dimension(a) * dimension(b)
    got = sum(m * dimension(lab) for lab, m in result.items())
    if got != expected:
        raise OracleError(f"dimension leak in {a} (x) {b}: {got} != {expected}")
    _PAIR_CACHE[key] = result
    return result


def decompose_product(labels: Iterable[IrrepLabel]) -> FormalSum:
    """
    Exact multiplicities of the irreducible constituents of a tensor product
    of same-family, same-rank irreps.
    """
    labels = list(labels)
    if not labels:
        raise ValueError("need at least one label")
    fam, rank = labels[0].family, labels[0].rank
    for lab in labels[1:]:
        if lab.family != fam or lab.rank != rank:
            raise ValueError(f"family/rank mismatch: {labels[0]} vs {lab}")
    current: dict[IrrepLabel, int] = {labels[0]: 1}
    for nxt in labels[1:]:
        acc: dict[IrrepLabel, int] = {}
        for lab, m in current.items():
            for lab2, m2 in tensor_pair(lab, nxt).items():
                acc[lab2] = acc.get(lab2, 0) + m * m2
        current = acc
    return FormalSum(current)


def is_multiplicity_free(s: FormalSum) -> bool:
    return s.is_multiplicity_free()


# ---------------------------------------------------------------------------
# persistent memo support (used by the CLI cache)


def export_pair_cache() -> dict[tuple, dict[IrrepLabel, int]]:
    return dict(_PAIR_CACHE)


def import_pair_cache(data: dict[tuple, dict[IrrepLabel, int]]) -> None:
    _PAIR_CACHE.update(data)


def clear_caches() -> None:
    _PAIR_CACHE.clear()
    _CHAR_CACHE.clear()


# ---------------------------------------------------------------------------
# rendering


def render_weight(label: IrrepLabel) -> str:
    w = label.weight
    if label.family == "su":
        if len(w) <= 1:
            return f"ν{w[0] if w else 0}"
        return "ν(" + ",".join(map(str, w)) + ")"
    if label.family == "circle":
        return f"χ{w[0]}"
    return "(" + ",".join(map(str, w)) + ")"


_GLYPH = {"sp": "η", "u": "υ", "su": "ν", "so": "σ"}


def render_label(label: IrrepLabel) -> str:
    if label.family == "circle":
        return f"χ{label.weight[0]}"
    glyph = _GLYPH[label.family]
    return glyph + "(" + ",".join(map(str, label.weight)) + ")"


def render_formal_sum(s: FormalSum, renderer=render_weight) -> str:
    if not s.entries:
        return "0"
    bits = []
    for lab, m in sorted(s.entries.items(), key=lambda kv: label_sort_key(kv[0]), reverse=True):
        txt = renderer(lab)
        bits.append(txt if m == 1 else f"{m}*{txt}")
    return " + ".join(bits)
