"""
Per-case construction of the degree-truncated metaplectic series and of the
torus restriction of a test representation.

Every case from the classification list reduces the commutativity question
to multiplicity-freeness of a series over composite labels (an integer
character vector on all circle coordinates, times irreducible labels for the
non-circle intertwiner factors).  The families are:

    I     su(2) x sp(n):      omega = sum_s chi_s (x) eta_(s)
    II    spin(4) x sp(k1) x sp(k2), reduced to two circles:
          omega = sum chi_(r+l1, s+l2) (x) eta_(r) (x) eta_(s)
    III   sp(2) x sp(n):      omega = sum chi_(r,s) (x) [eta_(r) (x) eta_(s)]
          with the inner product expanded into irreducibles
    IV    so(2n):             omega = sum over v in Z_{>=0}^n of chi_v
    V/VI  su(n) x circle:     one character per monomial on C^n
    VII   su(2) x u(k) x sp(n):
          omega = sum chi_(r-s+j) (x) [Sym^r (x) Sym^s] (x) eta_(j)
    VIII  block products of the type-(VI) and type-(VII) series
    IX    u(n) on the Heisenberg group: omega = sum_r Sym^r

Degree truncation bounds the sum of the grading parameters of omega (the
polynomial degrees); the test representation is never truncated.

Torus bookkeeping for the su(m)-plus-circle blocks (V, VI, and the type-(VI)
blocks of VIII): a monomial with exponent vector m on C^n restricts to the
honest character (m_1 - m_n, ..., m_{n-1} - m_n) of the su-torus together
with total degree |m| on the circle, and those coordinates are what the
composite label stores.  Keeping the raw vector instead would identify the
circle direction with the determinant direction of u(n), which both misses
genuine collisions (the su-weight constructions of the source families) and
invents spurious ones.

All builders are pure; per-degree slices may be computed in parallel and
merged, and entry lists are cached per (case, degree bound).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple

from .irreps import (
    FormalSum,
    IrrepLabel,
    render_label,
    tensor_pair,
    trivial,
    weight_system,
)
from .partitions import all_partitions
from .sp_pieri import tensor_sym_sym

CASE_IDS = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX")


@dataclass(frozen=True)
class CaseSpec:
    case_id: str
    params: tuple[tuple[str, object], ...]

    def __getitem__(self, key: str):
        for k, v in self.params:
            if k == key:
                return v
        raise KeyError(key)

    def param_dict(self) -> dict:
        return dict(self.params)

    def to_json(self) -> dict:
        out = {"case": self.case_id}
        for k, v in self.params:
            out[k] = [list(x) if isinstance(x, tuple) else x for x in v] if isinstance(v, tuple) else v
        return out

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.case_id}({inner})"


def case_spec(case_id: str, **kwargs) -> CaseSpec:
    """Validated entry of the classification list."""
    case_id = case_id.upper()
    if case_id not in CASE_IDS:
        raise ValueError(f"unknown case {case_id!r}")
    if case_id in ("I", "III", "IX"):
        n = int(kwargs.pop("n"))
        if kwargs or n < 1:
            raise ValueError(f"case {case_id} takes n >= 1")
        return CaseSpec(case_id, (("n", n),))
    if case_id == "II":
        k1, k2 = int(kwargs.pop("k1")), int(kwargs.pop("k2"))
        if kwargs or k1 < 0 or k2 < 0 or k1 + k2 < 1:
            raise ValueError("case II takes k1, k2 >= 0 with k1 + k2 >= 1")
        return CaseSpec(case_id, (("k1", k1), ("k2", k2)))
    if case_id == "IV":
        n = int(kwargs.pop("n"))
        if kwargs or n < 2:
            raise ValueError("case IV takes n >= 2")
        return CaseSpec(case_id, (("n", n),))
    if case_id in ("V", "VI"):
        n = int(kwargs.pop("n"))
        if kwargs or n < 3:
            raise ValueError(f"case {case_id} takes n >= 3")
        return CaseSpec(case_id, (("n", n),))
    if case_id == "VII":
        k, n = int(kwargs.pop("k")), int(kwargs.pop("n"))
        if kwargs or k < 1 or n < 0:
            raise ValueError("case VII takes k >= 1 and n >= 0")
        return CaseSpec(case_id, (("k", k), ("n", n)))
    # VIII
    m = tuple(int(x) for x in kwargs.pop("m", ()))
    kn = tuple((int(k), int(n)) for k, n in kwargs.pop("kn", ()))
    if kwargs:
        raise ValueError("case VIII takes m=(m_1,..) and kn=((k_1,n_1),..)")
    if any(x < 3 for x in m):
        raise ValueError("case VIII needs every m_i >= 3")
    if any(k < 1 or n < 0 for k, n in kn):
        raise ValueError("case VIII needs k_j >= 1 and n_j >= 0")
    if not m and not kn:
        raise ValueError("case VIII needs at least one block")
    return CaseSpec("VIII", (("kn", kn), ("m", m)))


# ---------------------------------------------------------------------------
# factor layout


class Factor(NamedTuple):
    key: str
    family: str
    rank: int
    kind: str  # "torus" or "uslot"
    pos: int  # torus offset or u-slot index


def factors(spec: CaseSpec) -> tuple[Factor, ...]:
    """Factors of K in canonical order, with their torus/u-slot placement."""
    cid = spec.case_id
    if cid == "I":
        return (
            Factor("su2", "su", 2, "torus", 0),
            Factor("sp", "sp", spec["n"], "uslot", 0),
        )
    if cid == "II":
        out = [
            Factor("su2a", "su", 2, "torus", 0),
            Factor("su2b", "su", 2, "torus", 1),
        ]
        slot = 0
        for key, k in (("spa", spec["k1"]), ("spb", spec["k2"])):
            if k > 0:
                out.append(Factor(key, "sp", k, "uslot", slot))
                slot += 1
        return tuple(out)
    if cid == "III":
        return (
            Factor("sp2", "sp", 2, "torus", 0),
            Factor("sp", "sp", spec["n"], "uslot", 0),
        )
    if cid == "IV":
        return (Factor("so", "so", spec["n"], "torus", 0),)
    if cid in ("V", "VI"):
        n = spec["n"]
        return (
            Factor("su", "su", n, "torus", 0),
            Factor("s1", "circle", 1, "torus", n - 1),
        )
    if cid == "VII":
        out = [Factor("su2", "su", 2, "torus", 0), Factor("u", "u", spec["k"], "uslot", 0)]
        if spec["n"] > 0:
            out.append(Factor("sp", "sp", spec["n"], "uslot", 1))
        return tuple(out)
    if cid == "IX":
        return (Factor("u", "u", spec["n"], "uslot", 0),)
    # VIII: su(m_i) blocks first, then su(2) blocks, then the circles and
    # unitary/symplectic intertwiner factors in block order.
    ms, kns = spec["m"], spec["kn"]
    out = []
    off = 0
    for i, m in enumerate(ms, start=1):
        out.append(Factor(f"su.{i}", "su", m, "torus", off))
        off += m
    for j, _ in enumerate(kns, start=1):
        out.append(Factor(f"su2.{j}", "su", 2, "torus", off))
        off += 1
    off = 0
    for i, m in enumerate(ms, start=1):
        out.append(Factor(f"s1.{i}", "circle", 1, "torus", off + m - 1))
        off += m
    slot = 0
    for j, (k, n) in enumerate(kns, start=1):
        out.append(Factor(f"u.{j}", "u", k, "uslot", slot))
        slot += 1
        if n > 0:
            out.append(Factor(f"sp.{j}", "sp", n, "uslot", slot))
            slot += 1
    return tuple(out)


def torus_dim(spec: CaseSpec) -> int:
    cid = spec.case_id
    if cid in ("I", "VII"):
        return 1
    if cid in ("II", "III"):
        return 2
    if cid == "IV":
        return spec["n"]
    if cid in ("V", "VI"):
        return spec["n"]
    if cid == "IX":
        return 0
    return sum(spec["m"]) + len(spec["kn"])


def u_slots(spec: CaseSpec) -> tuple[tuple[str, int], ...]:
    return tuple((f.family, f.rank) for f in factors(spec) if f.kind == "uslot")


@dataclass(frozen=True)
class TauSpec:
    """One irreducible label per factor of K, in canonical factor order."""

    spec: CaseSpec
    labels: tuple[IrrepLabel, ...]

    def __post_init__(self):
        fs = factors(self.spec)
        if len(self.labels) != len(fs):
            raise ValueError(f"expected {len(fs)} factor labels, got {len(self.labels)}")
        for f, lab in zip(fs, self.labels):
            if lab.family != f.family or lab.rank != f.rank:
                raise ValueError(f"factor {f.key} needs family {f.family}({f.rank}), got {lab}")

    def label(self, key: str) -> IrrepLabel:
        for f, lab in zip(factors(self.spec), self.labels):
            if f.key == key:
                return lab
        raise KeyError(key)

    @property
    def is_trivial(self) -> bool:
        return all(lab.is_trivial for lab in self.labels)

    def weight_size(self) -> int:
        return sum(lab.weight_size() for lab in self.labels)

    def to_json(self) -> dict:
        return {
            f.key: list(lab.weight)
            for f, lab in zip(factors(self.spec), self.labels)
            if not lab.is_trivial
        }

    def __str__(self) -> str:
        nontrivial = [
            f"{f.key}={render_label(lab)}"
            for f, lab in zip(factors(self.spec), self.labels)
            if not lab.is_trivial
        ]
        return "(x)".join(nontrivial) if nontrivial else "trivial"


def tau_spec(spec: CaseSpec, **weights) -> TauSpec:
    """Build a TauSpec from per-factor weights; omitted factors are trivial."""
    fs = factors(spec)
    known = {f.key for f in fs}
    for key in weights:
        if key not in known:
            raise ValueError(f"case {spec.case_id} has no factor {key!r}; expected {sorted(known)}")
    labels = []
    for f in fs:
        if f.key in weights:
            w = weights[f.key]
            if isinstance(w, int):
                w = (w,)
            labels.append(IrrepLabel(f.family, f.rank, tuple(w)))
        else:
            labels.append(trivial(f.family, f.rank))
    return TauSpec(spec, tuple(labels))


# ---------------------------------------------------------------------------
# composite labels


@dataclass(frozen=True)
class CompositeLabel:
    torus: tuple[int, ...]
    ulabels: tuple[IrrepLabel, ...]

    def sort_key(self):
        return (self.torus, tuple(l.sort_key() for l in self.ulabels))

    def to_json(self) -> dict:
        return {"torus": list(self.torus), "u": [l.to_json() for l in self.ulabels]}

    @classmethod
    def from_json(cls, data: dict) -> "CompositeLabel":
        return cls(
            tuple(int(x) for x in data["torus"]),
            tuple(IrrepLabel.from_json(d) for d in data["u"]),
        )

    def __str__(self) -> str:
        chi = "χ" + (
            f"{self.torus[0]}" if len(self.torus) == 1 else "(" + ",".join(map(str, self.torus)) + ")"
        )
        if not self.ulabels:
            return chi if self.torus else "1"
        return "(" + chi + "; " + ", ".join(render_label(l) for l in self.ulabels) + ")"


class OmegaEntry(NamedTuple):
    degree: int
    torus: tuple[int, ...]
    ulabels: tuple[IrrepLabel, ...]
    params: tuple[tuple[str, object], ...]


class TauEntry(NamedTuple):
    torus: tuple[int, ...]
    ulabels: tuple[IrrepLabel, ...]
    mult: int
    weights: tuple[tuple[str, tuple[int, ...]], ...]


# ---------------------------------------------------------------------------
# the metaplectic side


def _vectors_of_degree(n: int, total: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _vectors_of_degree(n - 1, total - first):
            yield (first,) + rest


def _sym_sym_u(r: int, s: int, k: int) -> list[IrrepLabel]:
    """Irreducible u(k) constituents of Sym^r (x) Sym^s (multiplicity free)."""
    if k == 1:
        return [IrrepLabel("u", 1, (r + s,))]
    out = []
    for c in range(min(r, s) + 1):
        out.append(IrrepLabel("u", k, (r + s - c, c) + (0,) * (k - 2)))
    return out


def _su_block_entries(m: int, budget: int) -> Iterator[tuple[int, tuple[int, ...], tuple, tuple]]:
    """Type-(VI) block: monomials on C^m as (degree, torus coords, (), params)."""
    for d in range(budget + 1):
        for vec in _vectors_of_degree(m, d):
            torus = tuple(vec[i] - vec[-1] for i in range(m - 1)) + (d,)
            yield d, torus, (), (("m_vec", vec),)


def _su2_block_entries(k: int, n: int, budget: int) -> Iterator[tuple[int, tuple[int, ...], tuple, tuple]]:
    """Type-(VII) block: (degree, one torus coord, u-slot labels, params)."""
    for r in range(budget + 1):
        for s in range(budget - r + 1):
            j_range = range(budget - r - s + 1) if n > 0 else (0,)
            for j in j_range:
                deg = r + s + j
                torus = (r - s + j,)
                for mu in _sym_sym_u(r, s, k):
                    ulabs = (mu, IrrepLabel("sp", n, (j,) if j else ())) if n > 0 else (mu,)
                    params = (("j", j), ("r", r), ("s", s), ("u_inner", mu.weight))
                    if n == 0:
                        params = (("r", r), ("s", s), ("u_inner", mu.weight))
                    yield deg, torus, ulabs, params


@lru_cache(maxsize=128)
def omega_entries(spec: CaseSpec, degree: int) -> tuple[OmegaEntry, ...]:
    """All terms of the metaplectic series with grading degree <= ``degree``."""
    if degree < 0:
        raise ValueError("degree bound must be nonnegative")
    cid = spec.case_id
    out: list[OmegaEntry] = []
    if cid == "I":
        n = spec["n"]
        for s in range(degree + 1):
            out.append(
                OmegaEntry(s, (s,), (IrrepLabel("sp", n, (s,) if s else ()),), (("s", s),))
            )
    elif cid == "II":
        k1, k2 = spec["k1"], spec["k2"]
        for r in range(degree + 1) if k1 > 0 else (0,):
            for s in range(degree - r + 1) if k2 > 0 else (0,):
                for l1 in range(degree - r - s + 1):
                    for l2 in range(degree - r - s - l1 + 1):
                        ulabs = []
                        if k1 > 0:
                            ulabs.append(IrrepLabel("sp", k1, (r,) if r else ()))
                        if k2 > 0:
                            ulabs.append(IrrepLabel("sp", k2, (s,) if s else ()))
                        out.append(
                            OmegaEntry(
                                r + s + l1 + l2,
                                (r + l1, s + l2),
                                tuple(ulabs),
                                (("l1", l1), ("l2", l2), ("r", r), ("s", s)),
                            )
                        )
    elif cid == "III":
        n = spec["n"]
        for r in range(degree + 1):
            for s in range(degree - r + 1):
                for lab, mult in tensor_sym_sym(r, s, n).items_sorted():
                    assert mult == 1
                    out.append(
                        OmegaEntry(
                            r + s,
                            (r, s),
                            (lab,),
                            (("inner", lab.weight), ("r", r), ("s", s)),
                        )
                    )
    elif cid == "IV":
        n = spec["n"]
        for d in range(degree + 1):
            for vec in _vectors_of_degree(n, d):
                out.append(OmegaEntry(d, vec, (), (("k_vec", vec),)))
    elif cid in ("V", "VI"):
        n = spec["n"]
        for d, torus, ulabs, params in _su_block_entries(n, degree):
            out.append(OmegaEntry(d, torus, ulabs, params))
    elif cid == "VII":
        for d, torus, ulabs, params in _su2_block_entries(spec["k"], spec["n"], degree):
            out.append(OmegaEntry(d, torus, ulabs, params))
    elif cid == "IX":
        n = spec["n"]
        for r in range(degree + 1):
            out.append(
                OmegaEntry(r, (), (IrrepLabel("u", n, (r,) + (0,) * (n - 1)),), (("r", r),))
            )
    else:  # VIII: graded product over blocks
        ms, kns = spec["m"], spec["kn"]

        def blocks(idx_m: int, idx_kn: int, budget: int):
            if idx_m < len(ms):
                for d, torus, ulabs, params in _su_block_entries(ms[idx_m], budget):
                    tag = (("block", f"su.{idx_m + 1}"),) + params
                    for d2, t2, u2, p2 in blocks(idx_m + 1, idx_kn, budget - d):
                        yield d + d2, torus + t2, ulabs + u2, (tag,) + p2
            elif idx_kn < len(kns):
                k, n = kns[idx_kn]
                for d, torus, ulabs, params in _su2_block_entries(k, n, budget):
                    tag = (("block", f"su2.{idx_kn + 1}"),) + params
                    for d2, t2, u2, p2 in blocks(idx_m, idx_kn + 1, budget - d):
                        yield d + d2, torus + t2, ulabs + u2, (tag,) + p2
            else:
                yield 0, (), (), ()

        for d, torus, ulabs, params in blocks(0, 0, degree):
            out.append(OmegaEntry(d, torus, ulabs, (("blocks", params),)))
    out.sort(key=lambda e: (e.degree, e.torus, tuple(l.sort_key() for l in e.ulabels), e.params))
    return tuple(out)


def omega_series(spec: CaseSpec, degree: int) -> FormalSum:
    """The truncated metaplectic decomposition as a sum of composite labels."""
    entries: dict[CompositeLabel, int] = {}
    for e in omega_entries(spec, degree):
        lab = CompositeLabel(e.torus, e.ulabels)
        entries[lab] = entries.get(lab, 0) + 1
    return FormalSum(entries, truncation=degree)


# ---------------------------------------------------------------------------
# the tau side


def tau_entries(spec: CaseSpec, tau: TauSpec) -> tuple[TauEntry, ...]:
    """Torus expansion of tau: every torus-factor label is replaced by its
    weight system; u-slot labels pass through intact."""
    dim = torus_dim(spec)
    n_slots = len(u_slots(spec))
    acc: list[tuple[list[int], list, int, tuple]] = [([0] * dim, [None] * n_slots, 1, ())]
    for f, lab in zip(factors(spec), tau.labels):
        nxt = []
        if f.kind == "uslot":
            for torus, ulabs, mult, weights in acc:
                u2 = list(ulabs)
                u2[f.pos] = lab
                nxt.append((torus, u2, mult, weights + ((f.key, lab.weight),)))
        else:
            ws = weight_system(lab)
            for torus, ulabs, mult, weights in acc:
                for vec, wm in ws.items_sorted():
                    t2 = list(torus)
                    for i, x in enumerate(vec):
                        t2[f.pos + i] += x
                    nxt.append((t2, ulabs, mult * wm, weights + ((f.key, vec),)))
        acc = nxt
    return tuple(
        TauEntry(tuple(torus), tuple(ulabs), mult, weights) for torus, ulabs, mult, weights in acc
    )


def tau_restriction(spec: CaseSpec, tau: TauSpec) -> FormalSum:
    """Restriction of tau to the torus-times-intertwiner subgroup (exact)."""
    entries: dict[CompositeLabel, int] = {}
    for te in tau_entries(spec, tau):
        lab = CompositeLabel(te.torus, te.ulabels)
        entries[lab] = entries.get(lab, 0) + te.mult
    return FormalSum(entries)


# ---------------------------------------------------------------------------
# the product series


def _slot_products(oe: OmegaEntry, te: TauEntry) -> Iterator[tuple[tuple[IrrepLabel, ...], int]]:
    per_slot = [tensor_pair(a, b) for a, b in zip(oe.ulabels, te.ulabels)]
    for combo in itertools.product(*[sorted(d.items(), key=lambda kv: kv[0].sort_key()) for d in per_slot]):
        labs = tuple(lab for lab, _ in combo)
        mult = 1
        for _, m in combo:
            mult *= m
        yield labs, mult


def omega_tensor_tau(spec: CaseSpec, tau: TauSpec, degree: int) -> FormalSum:
    """
    The truncated series omega (x) tau restricted to the torus-times-
    intertwiner subgroup: torus characters add, u-slot factors are decomposed
    by the oracle, multiplicities accumulate across all production routes.
    """
    entries: dict[CompositeLabel, int] = {}
    tentries = tau_entries(spec, tau)
    for oe in omega_entries(spec, degree):
        for te in tentries:
            torus = tuple(a + b for a, b in zip(oe.torus, te.torus))
            for labs, mult in _slot_products(oe, te):
                lab = CompositeLabel(torus, labs)
                entries[lab] = entries.get(lab, 0) + te.mult * mult
    return FormalSum(entries, truncation=degree)


def production_routes(
    spec: CaseSpec, tau: TauSpec, degree: int, target: CompositeLabel
) -> list[dict]:
    """All (omega term, tau term) productions of ``target``, with multiplicities."""
    routes = []
    tentries = tau_entries(spec, tau)
    for oe in omega_entries(spec, degree):
        for te in tentries:
            torus = tuple(a + b for a, b in zip(oe.torus, te.torus))
            if torus != target.torus:
                continue
            for labs, mult in _slot_products(oe, te):
                if labs == target.ulabels:
                    routes.append(
                        {
                            "degree": oe.degree,
                            "omega": dict(oe.params),
                            "tau": dict(te.weights),
                            "mult": te.mult * mult,
                        }
                    )
    return routes


# ---------------------------------------------------------------------------
# tau enumeration for sweeps


def _u_weights(k: int, bound: int) -> list[tuple[int, ...]]:
    out = []
    for w in itertools.product(range(bound, -bound - 1, -1), repeat=k):
        if all(a >= b for a, b in zip(w, w[1:])) and sum(abs(x) for x in w) <= bound:
            out.append(w)
    return out


def _so_weights(n: int, bound: int) -> list[tuple[int, ...]]:
    out = []
    for w in itertools.product(range(bound, -bound - 1, -1), repeat=n):
        if (
            all(a >= b for a, b in zip(w[:-1], w[1:-1]))
            and w[-2] >= abs(w[-1])
            and sum(abs(x) for x in w) <= bound
        ):
            out.append(w)
    return out


def factor_weights(family: str, rank: int, bound: int) -> list[tuple[int, ...]]:
    """All label weights of total size <= bound for one factor, graded order."""
    if family == "su":
        ws = [tuple(p) for p in all_partitions(bound, rank - 1)]
    elif family == "sp":
        ws = [tuple(p) for p in all_partitions(bound, rank)]
    elif family == "u":
        ws = _u_weights(rank, bound)
    elif family == "so":
        ws = _so_weights(rank, bound)
    else:
        ws = [(t,) for t in range(-bound, bound + 1)]
    return sorted(ws, key=lambda w: (sum(abs(x) for x in w), w))


def tau_candidates(spec: CaseSpec, bound: int) -> list[TauSpec]:
    """Every TauSpec whose factor weights have size <= bound, graded lex order."""
    fs = factors(spec)
    choices = [
        [IrrepLabel(f.family, f.rank, w) for w in factor_weights(f.family, f.rank, bound)]
        for f in fs
    ]
    taus = [TauSpec(spec, combo) for combo in itertools.product(*choices)]
    taus.sort(key=lambda t: (t.weight_size(), tuple(l.sort_key() for l in t.labels)))
    return taus
