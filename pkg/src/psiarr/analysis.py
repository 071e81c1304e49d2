"""Exponents, freeness filters and the classification / scan pipeline."""

from __future__ import annotations

import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .arrangement import build_affine, cone
from .enumeration import canonical_form, corpus, from_canonical, sort_key
from .lattice import (
    DEFAULT_MAX_FLATS,
    IntersectionLattice,
    characteristic_polynomial,
    intersection_poset,
    is_modular,
    modular_maximal_chain,
)
from .polynomial import IntPolynomial, format_factored, integer_root_factorization
from .psi_graph import (
    EliminationCertificate,
    PsiGraph,
    chordality,
    elimination_stall,
    nonfree_edge_witness,
    psi_elimination_order,
    verify_certificate,
)

log = logging.getLogger(__name__)

__all__ = [
    "CharacterizationMismatch",
    "Classification",
    "ExponentReport",
    "FreenessVerdict",
    "ScanReport",
    "Verdict",
    "classify",
    "explicit_modular_chain",
    "exponents_from_order",
    "integer_root_factorization",
    "is_modular_maximal_chain",
    "scan",
]


class CharacterizationMismatch(AssertionError):
    """The elimination-order test and the lattice search disagree."""


@dataclass(frozen=True)
class ExponentReport:
    order: tuple[int, ...]
    exponents: tuple[int, ...]  # aligned with ``order``
    polynomial_match: bool

    @property
    def multiset(self) -> list[int]:
        return sorted(self.exponents)


def exponents_from_order(
    g: PsiGraph, cert: EliminationCertificate, chi: Optional[IntPolynomial] = None
) -> ExponentReport:
    """``b_i = |psi(v_i)| + #(neighbours of v_i among v_1..v_{i-1})``.

    ``polynomial_match`` compares ``prod(t - b_i)`` with the characteristic
    polynomial of the affine arrangement; a mismatch is logged as an error.
    """
    if not verify_certificate(g, cert):
        raise ValueError("certificate does not satisfy the clique and label conditions")
    pos = {v: i for i, v in enumerate(cert.order)}
    b = tuple(
        len(g.psi[v]) + sum(1 for u in g.neighbors(v) if pos[u] < i)
        for i, v in enumerate(cert.order)
    )
    if chi is None:
        chi = characteristic_polynomial(build_affine(g))
    match = IntPolynomial.from_roots(b) == chi
    if not match:
        log.error("exponent formula fails for %s: %s vs %s", g, b, chi)
    return ExponentReport(cert.order, b, match)


def _pi_equations(cone_dim: int, zeroed: Sequence[int]) -> list[list[int]]:
    eqs = []
    row = [0] * (cone_dim + 1)
    row[cone_dim - 1] = 1
    eqs.append(row)
    for v in zeroed:
        row = [0] * (cone_dim + 1)
        row[v] = 1
        eqs.append(row)
    return eqs


def explicit_modular_chain(L: IntersectionLattice, order: Sequence[int]) -> tuple[Optional[list[int]], bool]:
    """The chain ``0 < P_1 < ... < P_n < 1`` in a cone lattice, where ``P_i`` is
    the subspace ``y = 0`` and ``x_v = 0`` for the first ``i - 1`` vertices.

    Returns ``(chain, literal)``.  ``literal`` is true when every ``P_i`` is a
    flat as it stands.  When some are not (all labels empty, for instance)
    each ``P_i`` is replaced by its closure and repeats are dropped; the chain
    is ``None`` only if even that fails.
    """
    d = L.arrangement.dimension
    found = [L.index_of(_pi_equations(d, order[:i])) for i in range(len(order))]
    literal = all(x is not None for x in found)
    if not literal:
        found = [L.closure(_pi_equations(d, order[:i])) for i in range(len(order))]
        if any(x is None for x in found):
            return None, False
    chain = [0]
    for x in [*found, L.top]:
        if x != chain[-1]:
            chain.append(x)
    return chain, literal


def is_modular_maximal_chain(L: IntersectionLattice, chain: Sequence[int]) -> bool:
    if not chain or chain[0] != 0 or chain[-1] != L.top:
        return False
    for lo, hi in zip(chain, chain[1:]):
        if hi not in L.upper_covers[lo]:
            return False
    return all(is_modular(L, x) for x in chain)


class Verdict(str, Enum):
    SUPERSOLVABLE_HENCE_FREE = "SupersolvableHenceFree"
    NOT_FREE_INCOMPARABLE_EDGE = "NotFreeIncomparableEdge"
    FACTORIZATION_FAILS = "FactorizationFails"
    UNDETERMINED = "Undetermined"


@dataclass(frozen=True)
class FreenessVerdict:
    tag: Verdict
    edge: Optional[tuple[int, int]] = None
    polynomial: Optional[IntPolynomial] = None
    exponents: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class Classification:
    graph: PsiGraph
    verdict: FreenessVerdict
    chordal: bool
    certificate: Optional[EliminationCertificate]
    stall: Optional[frozenset[int]]
    oracle_chain: Optional[list[int]]
    charpoly: IntPolynomial
    cone_charpoly: IntPolynomial
    roots: Optional[list[int]]
    exponents: Optional[ExponentReport] = None
    witness: Optional[tuple[int, int]] = None
    pi_chain: Optional[list[int]] = None
    pi_chain_literal: bool = False
    pi_chain_ok: bool = False
    lattice_size: int = 0

    @property
    def supersolvable(self) -> bool:
        return self.certificate is not None

    @property
    def oracle_supersolvable(self) -> bool:
        return self.oracle_chain is not None

    def record(self) -> dict:
        g = self.graph
        return {
            "n": g.n,
            "edges": [list(e) for e in g.sorted_edges()],
            "psi": [[str(a) for a in sorted(s)] for s in g.psi],
            "verdict": self.verdict.tag.value,
            "supersolvable": self.supersolvable,
            "oracle_supersolvable": self.oracle_supersolvable,
            "chordal": self.chordal,
            "order": list(self.certificate.order) if self.certificate else None,
            "exponents": sorted(self.exponents.exponents) if self.exponents else None,
            "charpoly": str(self.charpoly),
            "charpoly_coefficients": list(reversed(self.charpoly.coefficients)),
            "roots": self.roots,
            "witness_edge": list(self.witness) if self.witness else None,
            "flats_in_cone_lattice": self.lattice_size,
        }


def classify(g: PsiGraph, max_flats: int = DEFAULT_MAX_FLATS) -> Classification:
    """Run both supersolvability tests and the freeness filters on ``g``.

    Order of the filters: elimination certificate, incomparable edge,
    integer factorization of the characteristic polynomial.  Anything that
    passes all of them without being supersolvable is ``Undetermined``.
    Raises :class:`CharacterizationMismatch` if the certificate search and
    the lattice search disagree, and ``LatticeTooLarge`` past ``max_flats``.
    """
    affine = build_affine(g)
    coned = cone(affine)
    L = intersection_poset(coned, max_flats)
    chi = characteristic_polynomial(affine, max_flats)
    chi_cone = characteristic_polynomial(L)
    roots = integer_root_factorization(chi)
    cert = psi_elimination_order(g)
    oracle = modular_maximal_chain(L)
    if (cert is None) != (oracle is None):
        raise CharacterizationMismatch(
            f"certificate {'found' if cert else 'absent'} but lattice chain "
            f"{'found' if oracle else 'absent'} for {g}"
        )
    witness = nonfree_edge_witness(g)
    extra: dict = {}
    if cert is not None:
        report = exponents_from_order(g, cert, chi)
        chain, literal = explicit_modular_chain(L, cert.order)
        ok = chain is not None and is_modular_maximal_chain(L, chain)
        if not ok:
            log.error("explicit chain check failed for %s", g)
        verdict = FreenessVerdict(Verdict.SUPERSOLVABLE_HENCE_FREE, exponents=report.exponents)
        extra = dict(exponents=report, pi_chain=chain, pi_chain_literal=literal, pi_chain_ok=ok)
    elif witness is not None:
        verdict = FreenessVerdict(Verdict.NOT_FREE_INCOMPARABLE_EDGE, edge=witness)
    elif roots is None:
        verdict = FreenessVerdict(Verdict.FACTORIZATION_FAILS, polynomial=chi)
    else:
        verdict = FreenessVerdict(Verdict.UNDETERMINED, polynomial=chi)
    return Classification(
        graph=g,
        verdict=verdict,
        chordal=bool(chordality(g)),
        certificate=cert,
        stall=elimination_stall(g),
        oracle_chain=oracle,
        charpoly=chi,
        cone_charpoly=chi_cone,
        roots=roots,
        witness=witness,
        lattice_size=len(L),
        **extra,
    )


@dataclass
class ScanReport:
    max_n: int
    pool: list[Fraction]
    max_psi_size: int
    records: list[dict] = field(default_factory=list)

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(r["verdict"] for r in self.records)
        return {v.value: c.get(v.value, 0) for v in Verdict}

    @property
    def undetermined(self) -> list[dict]:
        return [r for r in self.records if r["verdict"] == Verdict.UNDETERMINED.value]

    def to_dict(self) -> dict:
        return {
            "parameters": {
                "max_n": self.max_n,
                "pool": [str(a) for a in self.pool],
                "max_psi_size": self.max_psi_size,
            },
            "instances": len(self.records),
            "counts": self.counts,
            "undetermined": self.undetermined,
            "records": self.records,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def table(self) -> str:
        lines = [
            f"scan: n <= {self.max_n}, labels from {{{', '.join(str(a) for a in self.pool)}}}, "
            f"|psi(v)| <= {self.max_psi_size}, {len(self.records)} instances up to isomorphism",
            "",
            f"{'verdict':<26}{'count':>7}",
        ]
        for tag, k in self.counts.items():
            lines.append(f"{tag:<26}{k:>7}")
        lines.append("")
        lines.append(f"{'n':>2}  {'edges':<28}{'psi':<28}{'verdict':<26}chi")
        for r in self.records:
            edges = " ".join(f"{u}-{v}" for u, v in r["edges"]) or "-"
            psi = " ".join("{" + ",".join(s) + "}" for s in r["psi"])
            lines.append(f"{r['n']:>2}  {edges:<28}{psi:<28}{r['verdict']:<26}{r['charpoly']}")
        return "\n".join(lines) + "\n"


def _classify_record(form: tuple, max_flats: int) -> dict:
    return classify(from_canonical(form), max_flats).record()


def scan_instances(max_n: int, pool: Iterable, max_psi_size: int) -> list[tuple]:
    """Canonical forms of connected (G, psi) up to label-preserving isomorphism."""
    forms = {canonical_form(g) for g in corpus(max_n, pool, max_psi_size)}
    return sorted(forms, key=sort_key)


def scan(
    max_n: int,
    pool: Iterable,
    max_psi_size: int,
    workers: int = 1,
    max_flats: int = DEFAULT_MAX_FLATS,
) -> ScanReport:
    """Classify every connected instance up to isomorphism.

    With ``workers > 1`` instances are spread over a process pool; results
    come back in canonical order either way, so the report is identical.
    """
    if max_n < 1 or max_psi_size < 0:
        raise ValueError("need max_n >= 1 and max_psi_size >= 0")
    pool = sorted({Fraction(a) for a in pool})
    forms = scan_instances(max_n, pool, max_psi_size)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            records = list(ex.map(_classify_record, forms, [max_flats] * len(forms), chunksize=8))
    else:
        records = [_classify_record(f, max_flats) for f in forms]
    return ScanReport(max_n, pool, max_psi_size, records)


def describe_roots(roots: Optional[list[int]]) -> str:
    return format_factored(roots) if roots is not None else "does not split over the nonnegative integers"
