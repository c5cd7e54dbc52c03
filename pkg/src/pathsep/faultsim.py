"""Single-link fault localisation with path tests.

A test fails exactly when the failed link lies on its path.  The controller
sees the set of failing tests and decodes it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .bounds import info_lower_bound
from .graph import Graph, PathFamily, iter_bits, signatures

NO_FAULT = "no-fault"
IDENTIFIED = "identified"
AMBIGUOUS = "ambiguous"
INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class FaultScenario:
    graph: Graph
    family: PathFamily
    failed_edge: int | None = None

    def __post_init__(self):
        if self.failed_edge is not None and not 0 <= self.failed_edge < self.graph.m:
            raise ValueError(f"no edge with id {self.failed_edge}")


@dataclass(frozen=True)
class DecodeOutcome:
    kind: str
    edges: frozenset[int] = frozenset()

    @property
    def edge(self) -> int | None:
        return next(iter(self.edges)) if self.kind == IDENTIFIED else None


def observe(s: FaultScenario) -> frozenset[int]:
    if s.failed_edge is None:
        return frozenset()
    return frozenset(i for i, p in enumerate(s.family.paths) if p.mask >> s.failed_edge & 1)


def _outcome(cands: list[int]) -> DecodeOutcome:
    if not cands:
        return DecodeOutcome(INCONSISTENT)
    if len(cands) == 1:
        return DecodeOutcome(IDENTIFIED, frozenset(cands))
    return DecodeOutcome(AMBIGUOUS, frozenset(cands))


def decode(g: Graph, fam: PathFamily, failing, sig: list[int] | None = None,
           index: dict[int, list[int]] | None = None) -> DecodeOutcome:
    """Signature decoding: the fault is the edge whose signature equals ``failing``.

    ``index`` maps signatures to edges and saves a scan per call.
    """
    failing = frozenset(failing)
    if not failing:
        return DecodeOutcome(NO_FAULT)
    want = sum(1 << i for i in failing)
    if index is not None:
        return _outcome(index.get(want, []))
    sig = signatures(g, fam) if sig is None else sig
    return _outcome([e for e in range(g.m) if sig[e] == want])


def signature_index(sig: list[int]) -> dict[int, list[int]]:
    index: dict[int, list[int]] = {}
    for e, s in enumerate(sig):
        index.setdefault(s, []).append(e)
    return index


def decode_intersection(g: Graph, fam: PathFamily, failing, sig: list[int] | None = None) -> DecodeOutcome:
    """Edges on every failing path and on no passing path.

    With no failing test the candidates are the edges no test covers; the
    outcome is no-fault only when every edge is covered.
    """
    failing = frozenset(failing)
    sig = signatures(g, fam) if sig is None else sig
    fail_bits = sum(1 << i for i in failing)
    cand = (1 << g.m) - 1
    for i in failing:
        cand &= fam.paths[i].mask
    # an edge avoids every passing path iff all paths through it failed
    edges = [e for e in iter_bits(cand) if sig[e] & ~fail_bits == 0]
    if not failing and not edges:
        return DecodeOutcome(NO_FAULT)
    return _outcome(edges)


@dataclass
class CampaignReport:
    trials: int
    family_size: int
    info_lb: int
    identified: int = 0
    ambiguous: int = 0
    missed: int = 0
    inconsistent: int = 0
    intersection_identified: int = 0
    no_fault_correct: bool = True
    no_fault_correct_intersection: bool = True
    tests_per_edge_mean: float = 0.0
    tests_per_edge_max: int = 0
    failures: list = field(default_factory=list)

    @property
    def identification_rate(self) -> float:
        return self.identified / self.trials if self.trials else 0.0

    @property
    def ambiguity_rate(self) -> float:
        return self.ambiguous / self.trials if self.trials else 0.0

    @property
    def intersection_rate(self) -> float:
        return self.intersection_identified / self.trials if self.trials else 0.0


def campaign(g: Graph, fam: PathFamily, trials: int | None = None, rng_seed: int | None = None,
             fail: int | None = None) -> CampaignReport:
    """Inject faults and decode with both decoders.

    ``trials=None`` injects every edge once; otherwise ``trials`` edges are
    sampled with replacement.  ``fail`` pins a single edge.  The no-fault case
    is always checked.
    """
    sig = signatures(g, fam)
    index = signature_index(sig)
    if fail is not None:
        edges = [fail]
    elif trials is None:
        edges = list(range(g.m))
    else:
        rng = random.Random(rng_seed)
        edges = [rng.randrange(g.m) for _ in range(trials)] if g.m else []
    rep = CampaignReport(len(edges), len(fam), info_lower_bound(g.m))
    counts = [bin(s).count("1") for s in sig]
    if counts:
        rep.tests_per_edge_mean = sum(counts) / len(counts)
        rep.tests_per_edge_max = max(counts)
    for e in edges:
        # the failing tests are exactly the paths through e
        failing = frozenset(iter_bits(sig[e]))
        out = decode(g, fam, failing, sig, index)
        if out.kind == IDENTIFIED and out.edge == e:
            rep.identified += 1
        elif out.kind == AMBIGUOUS:
            rep.ambiguous += 1
        elif out.kind == NO_FAULT:
            rep.missed += 1
        else:
            rep.inconsistent += 1
        if out.kind != IDENTIFIED:
            rep.failures.append((e, out.kind))
        alt = decode_intersection(g, fam, failing, sig)
        if alt.kind == IDENTIFIED and alt.edge == e:
            rep.intersection_identified += 1
    rep.no_fault_correct = decode(g, fam, frozenset(), sig).kind == NO_FAULT and not any(
        s == 0 for s in sig)
    rep.no_fault_correct_intersection = decode_intersection(g, fam, frozenset(), sig).kind == NO_FAULT
    return rep
