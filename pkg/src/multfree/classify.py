"""
Commutativity classifier.

A triple (K, N, tau) is decided by scanning the truncated product series
omega (x) tau restricted to the torus-times-intertwiner subgroup:

* a composite label reached with total multiplicity >= 2 is a conclusive
  witness of non-commutativity (it survives every larger truncation);
* absence of such a label up to degree D is only the bounded certificate
  ``MultiplicityFreeUpTo(D)``, never a proof.

``expected_verdict`` encodes the published classification table for the
nine families; ``cross_check`` compares it against the computed verdict and
reports INCONCLUSIVE when an expected witness was not found below the
truncation degree, or CONTRADICTION when a witness appears where the table
predicts commutativity.  Gaps are reported, never silently passed.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cases import (
    CaseSpec,
    CompositeLabel,
    TauSpec,
    factors,
    omega_entries,
    production_routes,
    tau_candidates,
    tau_entries,
    _slot_products,
)
from .irreps import label_sort_key

CONSISTENT = "CONSISTENT"
INCONCLUSIVE = "INCONCLUSIVE"
CONTRADICTION = "CONTRADICTION"


@dataclass(frozen=True)
class Verdict:
    multiplicity_found: bool
    degree_bound: int
    witness: CompositeLabel | None = None
    multiplicity: int = 0
    witness_degree: int | None = None
    routes: tuple = ()

    @property
    def outcome(self) -> str:
        return "MultiplicityFound" if self.multiplicity_found else "MultiplicityFreeUpTo"

    def to_json(self) -> dict:
        out = {"verdict": self.outcome, "degree": self.degree_bound}
        if self.multiplicity_found:
            out["witness"] = self.witness.to_json()
            out["multiplicity"] = self.multiplicity
            out["witness_degree"] = self.witness_degree
            out["routes"] = [_route_json(r) for r in self.routes]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Verdict":
        found = data["verdict"] == "MultiplicityFound"
        if not found:
            return cls(False, int(data["degree"]))
        return cls(
            True,
            int(data["degree"]),
            witness=CompositeLabel.from_json(data["witness"]),
            multiplicity=int(data["multiplicity"]),
            witness_degree=int(data["witness_degree"]),
            routes=tuple(data["routes"]),
        )

    def __str__(self) -> str:
        if self.multiplicity_found:
            return f"MULTIPLICITY at {self.witness} (x{self.multiplicity}, degree {self.witness_degree})"
        return f"multiplicity-free up to degree {self.degree_bound}"


def _route_json(route: dict) -> dict:
    def clean(v):
        if isinstance(v, tuple):
            return [clean(x) for x in v]
        if isinstance(v, dict):
            return {k: clean(x) for k, x in v.items()}
        return v

    return clean(route)


@dataclass(frozen=True)
class ExpectedVerdict:
    commutative: bool
    source: str

    @property
    def outcome(self) -> str:
        return "Commutative" if self.commutative else "NotCommutative"

    def to_json(self) -> dict:
        return {"expected": self.outcome, "source": self.source}


def deg_window(spec: CaseSpec, tau: TauSpec) -> int:
    """Default truncation: every known witness construction moves the grading
    parameters by at most 2 in at most two places beyond the tau weights."""
    return tau.weight_size() + 4


def classify(spec: CaseSpec, tau: TauSpec, degree: int | None = None) -> Verdict:
    """
    Scan omega (x) tau up to the truncation degree and return either the
    first label (by witness degree, then label order) with multiplicity >= 2,
    or the bounded multiplicity-freeness certificate.
    """
    if degree is None:
        degree = deg_window(spec, tau)
    tentries = tau_entries(spec, tau)
    counts: dict[CompositeLabel, int] = {}
    reached: dict[CompositeLabel, int] = {}
    for oe in omega_entries(spec, degree):
        for te in tentries:
            torus = tuple(a + b for a, b in zip(oe.torus, te.torus))
            for labs, mult in _slot_products(oe, te):
                lab = CompositeLabel(torus, labs)
                c = counts.get(lab, 0) + te.mult * mult
                counts[lab] = c
                if c >= 2 and lab not in reached:
                    reached[lab] = oe.degree
    if not reached:
        return Verdict(False, degree)
    witness = min(reached, key=lambda lab: (reached[lab], label_sort_key(lab)))
    routes = production_routes(spec, tau, degree, witness)
    routes.sort(key=lambda r: (r["degree"], json.dumps(_route_json(r), sort_keys=True)))
    return Verdict(
        True,
        degree,
        witness=witness,
        multiplicity=counts[witness],
        witness_degree=reached[witness],
        routes=tuple(routes),
    )


def verify_witness(spec: CaseSpec, tau: TauSpec, verdict: Verdict) -> bool:
    """Recompute every production route of the witness independently and
    confirm they reproduce the recorded label and multiplicity."""
    if not verdict.multiplicity_found:
        return True
    recomputed = production_routes(spec, tau, verdict.degree_bound, verdict.witness)
    total = sum(r["mult"] for r in recomputed)
    canon = {json.dumps(_route_json(r), sort_keys=True) for r in recomputed}
    recorded = {json.dumps(_route_json(r), sort_keys=True) for r in verdict.routes}
    return total == verdict.multiplicity >= 2 and recorded == canon


def _is_constant(weight: tuple[int, ...]) -> bool:
    return len(set(weight)) <= 1


def expected_verdict(spec: CaseSpec, tau: TauSpec) -> ExpectedVerdict:
    """The published classification of commutative triples for this family."""
    cid = spec.case_id
    if cid == "I":
        sp_label = tau.label("sp")
        su2 = tau.label("su2")
        ok = sp_label.is_trivial or (su2.is_trivial and _is_constant(sp_label.weight))
        return ExpectedVerdict(ok, "reference table, family I (H-type)")
    if cid in ("II", "III", "IV"):
        return ExpectedVerdict(tau.is_trivial, f"reference table, family {cid}")
    if cid in ("V", "VI"):
        return ExpectedVerdict(tau.label("su").is_trivial, f"reference table, family {cid}")
    if cid == "VII":
        ok = tau.label("su2").is_trivial and (spec["n"] == 0 or tau.label("sp").is_trivial)
        return ExpectedVerdict(ok, "reference table, family VII")
    if cid == "VIII":
        # commutative iff tau lives on the circles and the u(k_j) factors
        ok = all(
            lab.is_trivial
            for f, lab in zip(factors(spec), tau.labels)
            if f.family in ("su", "sp")
        )
        return ExpectedVerdict(ok, "reference table, family VIII")
    return ExpectedVerdict(True, "reference table, family IX (strong Gelfand pair)")


@dataclass(frozen=True)
class CheckRow:
    spec: CaseSpec
    tau: TauSpec
    verdict: Verdict
    expected: ExpectedVerdict
    consistency: str

    def to_json(self) -> dict:
        out = {
            "case": self.spec.case_id,
            "params": {k: v for k, v in self.spec.to_json().items() if k != "case"},
            "tau": self.tau.to_json(),
            "verdict": self.verdict.outcome,
            "degree": self.verdict.degree_bound,
            "expected": self.expected.outcome,
            "consistency": self.consistency,
        }
        if self.verdict.multiplicity_found:
            out["witness"] = self.verdict.witness.to_json()
        return out


def cross_check(spec: CaseSpec, tau: TauSpec, degree: int | None = None) -> CheckRow:
    """Run the classifier and compare with the reference table."""
    verdict = classify(spec, tau, degree)
    expected = expected_verdict(spec, tau)
    if expected.commutative:
        consistency = CONSISTENT if not verdict.multiplicity_found else CONTRADICTION
    else:
        consistency = CONSISTENT if verdict.multiplicity_found else INCONCLUSIVE
    return CheckRow(spec, tau, verdict, expected, consistency)


def sweep(spec: CaseSpec, bound: int, degree: int, jobs: int = 1) -> list[CheckRow]:
    """Cross-check every tau with factor weights of size <= bound; rows come
    back in enumeration order regardless of completion order."""
    taus = tau_candidates(spec, bound)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda t: cross_check(spec, t, degree), taus))
    return [cross_check(spec, t, degree) for t in taus]


def default_grid() -> list[CaseSpec]:
    """The small-parameter instantiation of every family used for the
    reference-table verification sweep."""
    from .cases import case_spec

    return [
        case_spec("I", n=2),
        case_spec("I", n=3),
        case_spec("II", k1=1, k2=1),
        case_spec("III", n=1),
        case_spec("III", n=2),
        case_spec("IV", n=2),
        case_spec("V", n=3),
        case_spec("VI", n=3),
        case_spec("VII", k=1, n=0),
        case_spec("VII", k=1, n=1),
        case_spec("VII", k=2, n=0),
        case_spec("VII", k=2, n=1),
        case_spec("VIII", m=(3,), kn=((1, 0),)),
        case_spec("IX", n=1),
        case_spec("IX", n=2),
    ]
