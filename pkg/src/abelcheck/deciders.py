"""Classification deciders with evidence-carrying reports.

Each decider walks the canonical form and returns a DecisionReport:
a boolean verdict, one evidence row per checked prime/component, and
citation tags naming the mathematical facts the verdict rests on.
Universally-quantified per-prime conditions are decided from the
generic shape symbolically (never by scanning primes); only the finite
exception set is checked individually, so every decider terminates and
every failing verdict names a concrete failing prime or component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import primes_upto, smallest_prime_not_in
from .characteristics import Characteristic, is_homogeneous
from .errors import InternalConsistencyError
from .groups import (
    OMEGA,
    CanonicalGroup,
    CyclicAtom,
    GroupDescriptor,
    Multiplicity,
    RationalAtom,
    canonicalize,
    mult_to_json,
    structural_predicates,
    torsion_free_rank,
)

# Citation tags: short names for the facts the deciders implement.
CIT_POOR = "poor:order-p-summand-at-every-prime"
CIT_POOR_EQUIV = "poor:reduced-and-torsion-part-equivalences"
CIT_PS_TORSION = "pure-split:bounded-reduced-primaries"
CIT_PS_PGROUP = "pure-split:primary-divisible-complement"
CIT_PS_TF = "pure-split:homogeneous-finite-rank"
CIT_PS_MIXED = "pure-split:component-composition (FKS 1953)"
CIT_WITNESS = "witness-domain:equals-pure-split"
CIT_PI_TORSION = "pi-poor:never-torsion"
CIT_PI_UNBOUNDED = "pi-poor:unbounded-primary-components"


@dataclass(frozen=True)
class EvidenceRow:
    subject: str
    condition: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "condition": self.condition,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class DecisionReport:
    """Verdict plus its per-prime / per-component justification.

    Invariant: the verdict is true exactly when every evidence row
    passed; informational observations that must not affect the verdict
    go into row details, never into extra rows.
    """

    verdict: bool
    evidence: tuple[EvidenceRow, ...]
    citations: tuple[str, ...]

    def __post_init__(self):
        if self.verdict != all(row.passed for row in self.evidence):
            raise InternalConsistencyError("verdict disagrees with its evidence rows")

    def failing_subjects(self) -> tuple[str, ...]:
        return tuple(row.subject for row in self.evidence if not row.passed)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "evidence": [row.to_dict() for row in self.evidence],
            "citations": list(self.citations),
        }


def _report(rows: list[EvidenceRow], citations: tuple[str, ...]) -> DecisionReport:
    return DecisionReport(all(r.passed for r in rows), tuple(rows), citations)


def _generic_subject(g: CanonicalGroup) -> str:
    primes = g.exception_primes()
    if not primes:
        return "every prime"
    return "all primes outside {%s}" % ", ".join(str(p) for p in primes)


# ---------------------------------------------------------------------------
# Poorness.


def _socle_summand_rows(g: CanonicalGroup) -> list[EvidenceRow]:
    condition = "order-p cyclic direct summand present"
    rows = []
    for p, shape in g.exceptions:
        passed = shape.has_exponent_one_layer
        detail = "" if passed else f"p-primary part at p={p} has no exponent-1 layer"
        rows.append(EvidenceRow(f"p={p}", condition, passed, detail))
    passed = g.generic.has_exponent_one_layer
    if passed:
        detail = "generic shape carries an exponent-1 layer"
    else:
        w = smallest_prime_not_in(g.exception_primes())
        detail = f"fails at p={w}: generic shape has no exponent-1 layer"
    rows.append(EvidenceRow(_generic_subject(g), condition, passed, detail))
    return rows


def is_poor(g: CanonicalGroup) -> DecisionReport:
    """Injectivity domain is as small as possible (only semisimples).

    Holds exactly when the torsion part has an order-p cyclic direct
    summand at every prime, which the canonical form shows directly.
    """
    return _report(_socle_summand_rows(g), (CIT_POOR,))


@dataclass(frozen=True)
class PoorEquivalenceReport:
    """The four equivalent formulations of poorness, evaluated separately.

    They must agree; disagreement is a library defect and raises
    InternalConsistencyError at construction.
    """

    poor: DecisionReport
    reduced_part_poor: DecisionReport
    torsion_part_poor: DecisionReport
    summand_at_every_prime: DecisionReport

    def __post_init__(self):
        verdicts = {
            self.poor.verdict,
            self.reduced_part_poor.verdict,
            self.torsion_part_poor.verdict,
            self.summand_at_every_prime.verdict,
        }
        if len(verdicts) != 1:
            raise InternalConsistencyError(
                "equivalent poorness conditions disagree: "
                f"poor={self.poor.verdict}, reduced={self.reduced_part_poor.verdict}, "
                f"torsion={self.torsion_part_poor.verdict}, "
                f"per-prime={self.summand_at_every_prime.verdict}"
            )

    @property
    def verdict(self) -> bool:
        return self.poor.verdict

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "poor": self.poor.to_dict(),
            "reduced_part_poor": self.reduced_part_poor.to_dict(),
            "torsion_part_poor": self.torsion_part_poor.to_dict(),
            "summand_at_every_prime": self.summand_at_every_prime.to_dict(),
            "citations": [CIT_POOR, CIT_POOR_EQUIV],
        }


def poor_report(g: CanonicalGroup) -> PoorEquivalenceReport:
    per_prime = _report(_socle_summand_rows(g), (CIT_POOR_EQUIV,))
    return PoorEquivalenceReport(
        poor=is_poor(g),
        reduced_part_poor=is_poor(g.reduced_part()),
        torsion_part_poor=is_poor(g.torsion_part()),
        summand_at_every_prime=per_prime,
    )


# ---------------------------------------------------------------------------
# Pure-splitness / membership in the witness's pure-injectivity domain.


def _rank_text(rank: Multiplicity) -> str:
    return str(mult_to_json(rank))


def _pure_split_rows(g: CanonicalGroup) -> list[EvidenceRow]:
    cond_bounded = "reduced p-primary part is bounded"
    rows = []
    for p, shape in g.exceptions:
        passed = shape.reduced_is_bounded
        detail = "" if passed else f"unbounded cyclic tower at p={p}"
        if passed and shape.prufer != 0:
            detail = "quasicyclic part is divisible, hence harmless"
        rows.append(EvidenceRow(f"p={p}", cond_bounded, passed, detail))
    passed = g.generic.reduced_is_bounded
    if passed:
        detail = ""
    else:
        w = smallest_prime_not_in(g.exception_primes())
        detail = f"fails at p={w}: generic shape contains an unbounded tower"
    rows.append(EvidenceRow(_generic_subject(g), cond_bounded, passed, detail))

    reduced_tf = g.reduced_part().torsion_free_part()
    rank_finite = all(m is not OMEGA for _, m in reduced_tf.rationals)
    rank_detail = f"reduced torsion-free rank = {_rank_text(torsion_free_rank(reduced_tf))}"
    rows.append(EvidenceRow("torsion-free part", "reduced torsion-free rank is finite",
                            rank_finite, rank_detail))
    homogeneous = is_homogeneous(reduced_tf)
    if homogeneous:
        hom_detail = ""
    else:
        types = ", ".join(f"[{c.render()}]" for c, _ in reduced_tf.rationals)
        hom_detail = f"distinct types present: {types}"
    rows.append(EvidenceRow("torsion-free part", "reduced torsion-free part is homogeneous",
                            homogeneous, hom_detail))

    div = g.divisible_part()
    rows.append(EvidenceRow("divisible part", "no constraint on the divisible part",
                            True, "trivial" if div.is_zero else "divisible summand is unconstrained"))
    return rows


def _pure_split_citations(g: CanonicalGroup, include_witness: bool) -> tuple[str, ...]:
    cites = []
    has_torsion = g.has_torsion()
    has_tf = bool(g.rationals)
    if has_torsion:
        cites.append(CIT_PS_TORSION)
        if any(shape.prufer != 0 for _, shape in g.exceptions) or g.generic.prufer != 0:
            cites.append(CIT_PS_PGROUP)
    if has_tf:
        cites.append(CIT_PS_TF)
    if has_torsion and has_tf:
        cites.append(CIT_PS_MIXED)
    if not cites:
        cites.append(CIT_PS_TORSION)
    if include_witness:
        cites.append(CIT_WITNESS)
    return tuple(cites)


def is_pure_split(g: CanonicalGroup) -> DecisionReport:
    """Every pure subgroup is a direct summand.

    On the representable class this holds exactly when every reduced
    p-primary part is bounded, the reduced torsion-free part is
    homogeneous of finite rank, and the divisible part is arbitrary.
    """
    return _report(_pure_split_rows(g), _pure_split_citations(g, include_witness=False))


def in_pure_injectivity_domain_of_witness(g: CanonicalGroup) -> DecisionReport:
    """Whether the universal witness is g-pure-injective.

    The witness is the direct sum of countably many copies of every
    reduced uniform group (all cyclic prime-power groups and all rank-1
    rational groups, one representative per isomorphism class).  Its
    pure-injectivity domain is exactly the class of pure-split groups,
    so the verdict coincides with is_pure_split; the citations name the
    per-component facts behind the identity.
    """
    return _report(_pure_split_rows(g), _pure_split_citations(g, include_witness=True))


# ---------------------------------------------------------------------------
# Necessary conditions for being a universal witness (pi-poor shape).


def pi_poor_necessary(g: CanonicalGroup) -> DecisionReport:
    """Necessary conditions: not torsion, and every p-primary part unbounded.

    Unboundedness is read on the whole p-primary component, so a
    quasicyclic part counts; the stricter reduced-part reading is
    reported in the row detail without affecting the verdict.
    """
    cond = "p-primary part is unbounded"
    rows = []

    def reduced_note(shape) -> str:
        return "reduced part unbounded: %s" % ("yes" if shape.tower != 0 else "no")

    for p, shape in g.exceptions:
        passed = shape.is_unbounded
        detail = reduced_note(shape) if passed else f"p-primary part at p={p} is bounded"
        rows.append(EvidenceRow(f"p={p}", cond, passed, detail))
    passed = g.generic.is_unbounded
    if passed:
        detail = reduced_note(g.generic)
    else:
        w = smallest_prime_not_in(g.exception_primes())
        detail = f"fails at p={w}: generic p-primary shape is bounded"
    rows.append(EvidenceRow(_generic_subject(g), cond, passed, detail))

    not_torsion = not structural_predicates(g).is_torsion
    rows.append(EvidenceRow("whole group", "group is not torsion", not_torsion,
                            "" if not_torsion else "every element has finite order"))
    return _report(rows, (CIT_PI_UNBOUNDED, CIT_PI_TORSION))


# ---------------------------------------------------------------------------
# Finite truncations of the witness.


def witness_truncation(max_prime: int, max_exponent: int,
                       rank_one_types: list[Characteristic] | tuple[Characteristic, ...] = ()) -> CanonicalGroup:
    """Finite chunk of the witness for experiments.

    Countably many copies of each cyclic group of order p**n for
    p <= max_prime, n <= max_exponent, plus countably many copies of
    each listed rank-1 group; witness_truncation(2, 1) is Z(2^1)^omega.
    """
    if max_prime < 1 or max_exponent < 1:
        raise ValueError("max_prime and max_exponent must be >= 1")
    parts: list[tuple] = []
    for p in primes_upto(max_prime):
        for n in range(1, max_exponent + 1):
            parts.append((CyclicAtom(p, n), OMEGA))
    for char in rank_one_types:
        parts.append((RationalAtom(char), OMEGA))
    return canonicalize(GroupDescriptor(parts))


def witness_truncation_without_unit_layer(max_prime: int, max_exponent: int) -> CanonicalGroup:
    """Same truncation with every exponent-1 layer removed."""
    if max_prime < 1 or max_exponent < 2:
        raise ValueError("need max_exponent >= 2 to drop the unit layer")
    parts = [(CyclicAtom(p, n), OMEGA)
             for p in primes_upto(max_prime)
             for n in range(2, max_exponent + 1)]
    return canonicalize(GroupDescriptor(parts))


__all__ = [
    "EvidenceRow", "DecisionReport", "PoorEquivalenceReport",
    "is_poor", "poor_report", "is_pure_split",
    "in_pure_injectivity_domain_of_witness", "pi_poor_necessary",
    "witness_truncation", "witness_truncation_without_unit_layer",
    "CIT_POOR", "CIT_POOR_EQUIV", "CIT_PS_TORSION", "CIT_PS_PGROUP",
    "CIT_PS_TF", "CIT_PS_MIXED", "CIT_WITNESS", "CIT_PI_TORSION", "CIT_PI_UNBOUNDED",
]
