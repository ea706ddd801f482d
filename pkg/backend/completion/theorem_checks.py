"""Spectral identities for M_C, checked exactly on regions or pointwise with the oracle."""
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from ..config import DEFAULT_CONFIG, CalculusConfig
from ..models.numeric import GQ
from ..models.operator_models import OperatorExpr, PointData, direct_sum
from ..models.report_models import (
    CompletionCertificate, CompletionTarget, Verdict, VerdictOutcome,
)
from ..operators.classifier import (
    BetaConvention, SClassSign, SpectrumKind, classify_point_data, s_class_membership,
)
from ..operators.operator_model import (
    adjoint, boundary_predicates, normalize, point_data, point_data_in,
)
from ..operators.spectra import eta_spectrum_equality, spectrum_region
from ..oracle.numeric_oracle import oracle_point_data
from ..oracle.truncation import FiniteRankCorner
from ..region.arrangement import build_arrangement
from ..region.region_ops import (
    CellEvaluator, complement, components, difference, equals, eta, holes,
    interior_is_empty, intersect, is_empty, is_subset, union,
)
from ..utils.errors import PreconditionError
from ..utils.random_instances import random_lambdas, seeded
from .completion_engine import (
    BlockMatrixExpr, Deferred, complete, fli_completable, harte_identity_check, mc_point_data,
)
from .regions import (
    WForm, completable_region, delta_region, exceptional_region, intersection_spectrum_region,
    joint_predicates, w_parts, w_region,
)

logger = logging.getLogger(__name__)

KIND_OF_TARGET = {
    CompletionTarget.FLI: SpectrumKind.FLI,
    CompletionTarget.FRI: SpectrumKind.FRI,
    CompletionTarget.INVERTIBLE: SpectrumKind.SPEC,
}

EXCEPTIONAL_TEXT = {
    CompletionTarget.FLI: "σ_d(A)∩σ_l(B)",
    CompletionTarget.FRI: "σ_p(B)∩σ_r(A)",
}


def _target(target) -> CompletionTarget:
    target = CompletionTarget(target)
    if target == CompletionTarget.INVERTIBLE:
        raise PreconditionError("this check is stated for the fli and fri targets only")
    return target


def zero_block(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """M_0 = A ⊕ B."""
    return direct_sum(normalize(a), normalize(b))


def _is_zero(c: Optional[CompletionCertificate]) -> bool:
    return c is None or c.is_zero


@dataclass
class Tally:
    """Running record of exact and sampled sub-checks."""
    failures: int = 0
    exact: int = 0
    sampled: int = 0
    unknown: int = 0
    steps: List[str] = field(default_factory=list)

    def record_exact(self, ok: bool, text: str) -> bool:
        self.exact += 1
        if not ok:
            self.failures += 1
        self.steps.append(f"{text}: {'holds' if ok else 'FAILS'}")
        return ok

    def record_sample(self, ok: Optional[bool], lam: GQ, text: str) -> None:
        if ok is None:
            self.unknown += 1
            self.steps.append(f"λ={lam}: oracle inconclusive for {text}")
            return
        self.sampled += 1
        if not ok:
            self.failures += 1
            self.steps.append(f"λ={lam}: {text} FAILS")

    def verdict(self, check: str, explanation: str,
                hypothesis_holds: Optional[bool] = None) -> Verdict:
        if self.failures:
            outcome = VerdictOutcome.FAIL
        elif self.sampled == 0 and self.unknown == 0:
            outcome = VerdictOutcome.EXACT
        elif self.sampled == 0:
            outcome = VerdictOutcome.INCONCLUSIVE
        else:
            outcome = VerdictOutcome.SAMPLED_PASS
        if self.unknown:
            self.steps.append(f"{self.unknown} sampled points were inconclusive")
        return Verdict(check=check, outcome=outcome, hypothesis_holds=hypothesis_holds,
                       samples=self.sampled, explanation=explanation,
                       calculation_steps=self.steps)


def not_applicable(check: str, explanation: str, steps: Optional[List[str]] = None) -> Verdict:
    return Verdict(check=check, outcome=VerdictOutcome.NOT_APPLICABLE, hypothesis_holds=False,
                   explanation=explanation, calculation_steps=steps or [])


def _sample_points(a: OperatorExpr, b: OperatorExpr, samples: Optional[int], seed: Optional[int],
                   config: CalculusConfig) -> List[GQ]:
    verification = config.verification
    count = verification.samples if samples is None else samples
    seed = verification.seed if seed is None else seed
    return random_lambdas(seeded(seed), joint_predicates(normalize(a), normalize(b)), count,
                          verification.sample_margin, verification.sample_window)


def block_point_data(m: BlockMatrixExpr, lam: GQ,
                     config: CalculusConfig) -> Tuple[Optional[PointData], bool]:
    """Point data of M_C−λ and whether it is exact."""
    data = mc_point_data(m, lam)
    if not isinstance(data, Deferred):
        return data, True
    return oracle_point_data(m, lam, config.oracle), False


class _Pointwise:
    """σ(M_C) membership at λ, asking the oracle only when needed."""

    def __init__(self, m: BlockMatrixExpr, kind: SpectrumKind, config: CalculusConfig):
        self.m, self.kind, self.config = m, kind, config
        self.exact_at = None if _is_zero(m.c) else m.c.at_lambda
        self.last_exact = True

    def in_spectrum(self, lam: GQ) -> Optional[bool]:
        data, self.last_exact = block_point_data(self.m, lam, self.config)
        return None if data is None else not classify_point_data(data, self.kind)

    def points(self, a, b, samples, seed) -> List[GQ]:
        found = [] if self.exact_at is None else [self.exact_at]
        return found + _sample_points(a, b, samples, seed, self.config)


def _run_points(tally: Tally, pointwise: _Pointwise, points: List[GQ],
                check: Callable[[GQ, Callable[[], Optional[bool]]], Optional[bool]], text: str):
    for lam in points:
        pointwise.last_exact = True
        ok = check(lam, lambda: pointwise.in_spectrum(lam))
        if lam == pointwise.exact_at and pointwise.last_exact:
            if ok is None:
                tally.steps.append(f"λ={lam}: exact data unavailable")
            else:
                tally.record_exact(ok, f"{text} at the certificate point λ={lam}")
        else:
            tally.record_sample(ok, lam, text)


# ------------------------------------------------------------ filling holes


def filling_holes_check(a: OperatorExpr, b: OperatorExpr, c: Optional[CompletionCertificate] = None,
                        target: CompletionTarget = CompletionTarget.FLI,
                        samples: Optional[int] = None, seed: Optional[int] = None,
                        config: Optional[CalculusConfig] = None) -> Verdict:
    """σ(A)∪σ(B) = σ(M_C)∪W and η(σ(A)∪σ(B)) = η(σ(M_C)) for the fli or fri spectrum."""
    config = config or DEFAULT_CONFIG
    target = _target(target)
    kind = KIND_OF_TARGET[target]
    a, b = normalize(a), normalize(b)
    own = spectrum_region(a, kind) if target == CompletionTarget.FLI else spectrum_region(b, kind)
    input_union = union(spectrum_region(a, kind), spectrum_region(b, kind))
    w = w_region(a, b, target)
    exceptional = exceptional_region(a, b, target)
    tally = Tally()
    tally.record_exact(is_subset(w, exceptional), f"W ⊆ {EXCEPTIONAL_TEXT[target]}")
    w2 = w_parts(a, b, target)[1]
    tally.record_exact(is_empty(intersect(w2, own)), "finite part of W misses the input spectrum")
    if _is_zero(c):
        m0 = spectrum_region(zero_block(a, b), kind)
        tally.record_exact(equals(input_union, union(m0, w)), "σ(A)∪σ(B) = σ(M_0)∪W")
        tally.record_exact(equals(eta(input_union), eta(m0)), "η(σ(A)∪σ(B)) = η(σ(M_0))")
        filled = intersect(holes(own), exceptional)
        for n, part in enumerate(components(difference(input_union, m0))):
            tally.record_exact(is_subset(part, filled),
                               f"removed component {n} lies in a hole inside {EXCEPTIONAL_TEXT[target]}")
    else:
        pointwise = _Pointwise(BlockMatrixExpr(a, b, c), kind, config)

        def at(lam, in_m):
            expected = input_union.member(lam)
            if expected and w.member(lam):
                return True
            got = in_m()
            if got is None:
                return None
            return expected == (got or w.member(lam))

        _run_points(tally, pointwise, pointwise.points(a, b, samples, seed), at,
                    "σ(A)∪σ(B) = σ(M_C)∪W")
    return tally.verdict("holes", f"filling-in-holes identities for the {target.value} spectrum")


# ----------------------------------------------------------------- sandwich


def sandwich_check(a: OperatorExpr, b: OperatorExpr, c: Optional[CompletionCertificate] = None,
                   target: CompletionTarget = CompletionTarget.FLI,
                   samples: Optional[int] = None, seed: Optional[int] = None,
                   config: Optional[CalculusConfig] = None) -> Verdict:
    """lower ⊆ σ(M_C) ⊆ σ(A)∪σ(B)."""
    config = config or DEFAULT_CONFIG
    target = _target(target)
    kind = KIND_OF_TARGET[target]
    a, b = normalize(a), normalize(b)
    own = spectrum_region(a, kind) if target == CompletionTarget.FLI else spectrum_region(b, kind)
    lower = difference(own, exceptional_region(a, b, target))
    upper = union(spectrum_region(a, kind), spectrum_region(b, kind))
    tally = Tally()
    if _is_zero(c):
        m0 = spectrum_region(zero_block(a, b), kind)
        tally.record_exact(is_subset(lower, m0), f"σ({'A' if target == CompletionTarget.FLI else 'B'})"
                           f"∖{EXCEPTIONAL_TEXT[target]} ⊆ σ(M_0)")
        tally.record_exact(is_subset(m0, upper), "σ(M_0) ⊆ σ(A)∪σ(B)")
    else:
        pointwise = _Pointwise(BlockMatrixExpr(a, b, c), kind, config)

        def at(lam, in_m):
            below, above = lower.member(lam), upper.member(lam)
            if not below and above:
                return True
            got = in_m()
            if got is None:
                return None
            return (not below or got) and (not got or above)

        _run_points(tally, pointwise, pointwise.points(a, b, samples, seed), at, "sandwich inclusions")
    return tally.verdict("sandwich", f"sandwich inclusions for the {target.value} spectrum")


# ------------------------------------------------------ equality corollaries


def _union_equality(tally: Tally, a: OperatorExpr, b: OperatorExpr,
                    c: Optional[CompletionCertificate], target: CompletionTarget,
                    samples: Optional[int], seed: Optional[int], config: CalculusConfig) -> None:
    kind = KIND_OF_TARGET[target]
    input_union = union(spectrum_region(a, kind), spectrum_region(b, kind))
    if _is_zero(c):
        tally.record_exact(equals(input_union, spectrum_region(zero_block(a, b), kind)),
                           "σ(A)∪σ(B) = σ(M_0)")
        return
    pointwise = _Pointwise(BlockMatrixExpr(a, b, c), kind, config)

    def at(lam, in_m):
        got = in_m()
        return None if got is None else got == input_union.member(lam)

    _run_points(tally, pointwise, pointwise.points(a, b, samples, seed), at, "σ(A)∪σ(B) = σ(M_C)")


def no_interior_corollary_verdict(a: OperatorExpr, b: OperatorExpr,
                                  c: Optional[CompletionCertificate] = None,
                                  target: CompletionTarget = CompletionTarget.FLI,
                                  samples: Optional[int] = None, seed: Optional[int] = None,
                                  config: Optional[CalculusConfig] = None) -> Verdict:
    config = config or DEFAULT_CONFIG
    target = _target(target)
    a, b = normalize(a), normalize(b)
    text = EXCEPTIONAL_TEXT[target]
    if not interior_is_empty(exceptional_region(a, b, target)):
        return not_applicable("nointerior", f"{text} has interior points; conclusion not asserted")
    tally = Tally(steps=[f"{text} has no interior points"])
    _union_equality(tally, a, b, c, target, samples, seed, config)
    return tally.verdict("nointerior", f"no-interior corollary for the {target.value} spectrum",
                         hypothesis_holds=True)


def dong_condition_verdict(a: OperatorExpr, b: OperatorExpr,
                           c: Optional[CompletionCertificate] = None,
                           target: CompletionTarget = CompletionTarget.FLI,
                           literal: bool = False, samples: Optional[int] = None,
                           seed: Optional[int] = None,
                           config: Optional[CalculusConfig] = None) -> Verdict:
    """Both parts of W empty ⇒ σ(A)∪σ(B) = σ(M_C).

    ``literal`` uses ρ_SF−(A) in the finite part of the right-invertible form.
    """
    config = config or DEFAULT_CONFIG
    target = _target(target)
    a, b = normalize(a), normalize(b)
    w1, w2 = w_parts(a, b, target, WForm.MAIN, literal)
    empty1, empty2 = is_empty(w1), is_empty(w2)
    steps = [f"doubly-infinite part of W empty: {empty1}", f"finite part of W empty: {empty2}"]
    if not (empty1 and empty2):
        return not_applicable("dong", "W is nonempty; conclusion not asserted", steps)
    tally = Tally(steps=steps)
    _union_equality(tally, a, b, c, target, samples, seed, config)
    return tally.verdict("dong", f"empty-W corollary for the {target.value} spectrum",
                         hypothesis_holds=True)


def s_class_proposition_verdict(a: OperatorExpr, b: OperatorExpr,
                                c: Optional[CompletionCertificate] = None,
                                target: CompletionTarget = CompletionTarget.FLI,
                                conv: BetaConvention = BetaConvention.CLOSURE,
                                samples: Optional[int] = None, seed: Optional[int] = None,
                                config: Optional[CalculusConfig] = None) -> Verdict:
    """A ∈ S+ gives the fli equality; B ∈ S− gives the fri equality."""
    config = config or DEFAULT_CONFIG
    target = _target(target)
    a, b = normalize(a), normalize(b)
    if target == CompletionTarget.FLI:
        member, name = s_class_membership(a, SClassSign.PLUS, conv), "A ∈ S+"
    else:
        member, name = s_class_membership(b, SClassSign.MINUS, conv), "B ∈ S−"
    steps = [f"{name} under the {BetaConvention(conv).value} convention: {member}"]
    if not member:
        return not_applicable("sclass", f"{name} fails; conclusion not asserted", steps)
    tally = Tally(steps=steps)
    _union_equality(tally, a, b, c, target, samples, seed, config)
    return tally.verdict("sclass", f"S± proposition for the {target.value} spectrum",
                         hypothesis_holds=True)


def _holds(verdict: Verdict) -> bool:
    return verdict.outcome != VerdictOutcome.FAIL


def no_interior_corollary_check(a: OperatorExpr, b: OperatorExpr,
                                target: CompletionTarget = CompletionTarget.FLI, **kwargs) -> bool:
    return _holds(no_interior_corollary_verdict(a, b, target=target, **kwargs))


def dong_condition_check(a: OperatorExpr, b: OperatorExpr,
                         target: CompletionTarget = CompletionTarget.FLI, **kwargs) -> bool:
    return _holds(dong_condition_verdict(a, b, target=target, **kwargs))


def s_class_proposition_check(a: OperatorExpr, b: OperatorExpr,
                              target: CompletionTarget = CompletionTarget.FLI, **kwargs) -> bool:
    return _holds(s_class_proposition_verdict(a, b, target=target, **kwargs))


# ---------------------------------------------------------- region checks


def eta_check(a: OperatorExpr, b: OperatorExpr, target: CompletionTarget = CompletionTarget.FLI,
              config: Optional[CalculusConfig] = None, **_) -> Verdict:
    target = _target(target)
    kind = KIND_OF_TARGET[target]
    a, b = normalize(a), normalize(b)
    tally = Tally()
    input_union = union(spectrum_region(a, kind), spectrum_region(b, kind))
    tally.record_exact(equals(eta(input_union), eta(spectrum_region(zero_block(a, b), kind))),
                       "η(σ(A)∪σ(B)) = η(σ(M_0))")
    tally.record_exact(eta_spectrum_equality(a), "η(σ(A)) = η(σ_FLI(A)) = η(σ_FRI(A))")
    tally.record_exact(eta_spectrum_equality(b), "η(σ(B)) = η(σ_FLI(B)) = η(σ_FRI(B))")
    return tally.verdict("eta", f"hull identities for the {target.value} spectrum")


def corollary_consistency_check(a: OperatorExpr, b: OperatorExpr,
                                target: CompletionTarget = CompletionTarget.FLI, **_) -> Verdict:
    """The complement of ⋂_C σ(M_C) is exactly where a completion exists."""
    if CompletionTarget(target) == CompletionTarget.INVERTIBLE:
        return not_applicable("delta", "no intersection-spectrum formula for the invertible target")
    target = _target(target)
    tally = Tally()
    tally.record_exact(equals(complement(intersection_spectrum_region(a, b, target)),
                              completable_region(a, b, target)),
                       "complement of the intersection spectrum = completable set")
    if target == CompletionTarget.FRI:
        agree = equals(delta_region(a, b, target), delta_region(a, b, target, literal=True))
        tally.steps.append(f"literal printed Δ second set agrees with the dual form: {agree}")
    return tally.verdict("delta", f"intersection spectrum vs pointwise criterion ({target.value})")


def w_forms_check(a: OperatorExpr, b: OperatorExpr,
                  target: CompletionTarget = CompletionTarget.FLI, **_) -> Verdict:
    target = _target(target)
    tally = Tally()
    tally.record_exact(equals(w_region(a, b, target, WForm.MAIN), w_region(a, b, target, WForm.ALT)),
                       "main and alternative forms of W agree")
    return tally.verdict("wforms", f"W forms for the {target.value} spectrum")


# ------------------------------------------------------ pointwise lemmas


def block_lemma_implications(pm: PointData, pa: PointData, pb: PointData) -> Dict[str, bool]:
    def good(p, kind):
        return classify_point_data(p, kind)

    fredholm_a, fredholm_b = good(pa, SpectrumKind.ESSENTIAL), good(pb, SpectrumKind.ESSENTIAL)
    return {
        "a": not good(pm, SpectrumKind.LEFT) or good(pa, SpectrumKind.LEFT),
        "b": not good(pm, SpectrumKind.LSF) or good(pb, SpectrumKind.LSF),
        "c": not good(pm, SpectrumKind.USF) or good(pa, SpectrumKind.USF),
        "d": not good(pm, SpectrumKind.RIGHT) or good(pb, SpectrumKind.RIGHT),
        "e": not good(pm, SpectrumKind.ESSENTIAL) or fredholm_a == fredholm_b,
    }


def block_lemma_check(a: OperatorExpr, b: OperatorExpr, c: Optional[CompletionCertificate] = None,
                      samples: Optional[int] = None, seed: Optional[int] = None,
                      config: Optional[CalculusConfig] = None, **_) -> Verdict:
    """Implications from M_C−λ to its diagonal entries."""
    config = config or DEFAULT_CONFIG
    a, b = normalize(a), normalize(b)
    tally = Tally()
    if _is_zero(c):
        m0 = zero_block(a, b)
        arrangement = build_arrangement(joint_predicates(a, b))
        bad = []
        for cell in arrangement.cells:
            env = CellEvaluator(arrangement, cell)
            found = block_lemma_implications(point_data_in(m0, env), point_data_in(a, env),
                                             point_data_in(b, env))
            bad.extend(f"({k}) at cell {cell.key}" for k, ok in found.items() if not ok)
        tally.record_exact(not bad, f"implications (a)-(e) on all {len(arrangement.cells)} cells")
        tally.steps.extend(bad)
        return tally.verdict("block", "block-matrix lemma with C = 0")
    m = BlockMatrixExpr(a, b, c)
    points = [c.at_lambda] + _sample_points(a, b, samples, seed, config)
    for lam in points:
        pm, exact = block_point_data(m, lam, config)
        if pm is None:
            tally.record_sample(None, lam, "block-matrix lemma")
            continue
        found = block_lemma_implications(pm, point_data(a, lam), point_data(b, lam))
        failed = [k for k, ok in found.items() if not ok]
        text = f"implications at λ={lam}" + (f" (failing: {', '.join(failed)})" if failed else "")
        if exact:
            tally.record_exact(not failed, text)
        else:
            tally.record_sample(not failed, lam, text)
    return tally.verdict("block", "block-matrix lemma with a constructed corner")


def duality_check(a: OperatorExpr, samples: Optional[int] = None, seed: Optional[int] = None,
                  config: Optional[CalculusConfig] = None, **_) -> Verdict:
    """Point data of T*−λ̄ is that of T−λ with α and β̄ swapped."""
    config = config or DEFAULT_CONFIG
    a = normalize(a)
    a_star = adjoint(a)
    arrangement = build_arrangement(boundary_predicates(a))
    points = [cell.sample for cell in arrangement.cells if cell.sample is not None]
    points += _sample_points(a, a, samples, seed, config)
    tally = Tally()
    mismatches = []
    for lam in points:
        p, q = point_data(a, lam), point_data(a_star, lam.conj())
        ok = (q == p.swapped()
              and classify_point_data(p, SpectrumKind.FLI) == classify_point_data(q, SpectrumKind.FRI)
              and classify_point_data(p, SpectrumKind.LEFT) == classify_point_data(q, SpectrumKind.RIGHT))
        if not ok:
            mismatches.append(f"λ={lam}: {p} vs adjoint {q}")
    tally.record_exact(not mismatches, f"adjoint duality at {len(points)} points")
    tally.steps.extend(mismatches)
    return tally.verdict("duality", "adjoint swaps nullity and deficiency")


def completion_soundness_check(a: OperatorExpr, b: OperatorExpr,
                               target: CompletionTarget = CompletionTarget.FLI,
                               samples: Optional[int] = None, seed: Optional[int] = None,
                               config: Optional[CalculusConfig] = None, **_) -> Verdict:
    """Every constructed corner lands M_C−λ in the requested class."""
    config = config or DEFAULT_CONFIG
    target = CompletionTarget(target)
    kind = KIND_OF_TARGET[target]
    a, b = normalize(a), normalize(b)
    arrangement = build_arrangement(joint_predicates(a, b))
    points = [cell.sample for cell in arrangement.cells if cell.sample is not None]
    points += _sample_points(a, b, samples, seed, config)
    tally = Tally()
    built = 0
    for lam in points:
        report = complete(a, b, lam, target)
        if not report.decision:
            continue
        built += 1
        data = mc_point_data(BlockMatrixExpr(a, b, report.certificate), lam)
        if isinstance(data, Deferred):
            tally.record_exact(False, f"λ={lam}: exact block data unavailable ({data.reason})")
            continue
        tally.record_exact(classify_point_data(data, kind), f"λ={lam}: M_C−λ in the {target.value} class")
        if target != CompletionTarget.FRI:
            tally.record_exact(harte_identity_check(a, b, report.certificate, lam),
                               f"λ={lam}: index identity")
    if not built:
        return not_applicable("completion", "no sampled λ admits a completion")
    return tally.verdict("completion", f"{built} constructed {target.value} corners", hypothesis_holds=True)


def harte_check(a: OperatorExpr, b: OperatorExpr, c: Optional[CompletionCertificate] = None,
                lam: Optional[GQ] = None, **_) -> Verdict:
    if lam is None:
        if c is None:
            raise PreconditionError("the index identity needs λ or a certificate")
        lam = c.at_lambda
    try:
        ok = harte_identity_check(a, b, c, lam)
    except PreconditionError as exc:
        return not_applicable("harte", str(exc))
    tally = Tally()
    tally.record_exact(ok, f"α(B−λ)+β(M_C−λ) = β(B−λ)+β(A−λ) at λ={lam}")
    return tally.verdict("harte", "index identity of the construction", hypothesis_holds=True)


def falsify_non_completable(a: OperatorExpr, b: OperatorExpr, lam: GQ, trials: Optional[int] = None,
                            seed: Optional[int] = None, config: Optional[CalculusConfig] = None,
                            **_) -> Verdict:
    """Random finite-rank corners never make M_C−λ look Fredholm left invertible."""
    config = config or DEFAULT_CONFIG
    lam = GQ.of(lam)
    report = fli_completable(a, b, lam)
    if report.decision:
        return not_applicable("falsify", f"a completion exists at λ={lam}")
    count = config.verification.samples if trials is None else trials
    rng = np.random.default_rng(config.verification.seed if seed is None else seed)
    m = BlockMatrixExpr(normalize(a), normalize(b))
    tally = Tally(steps=[f"criterion fails: {', '.join(report.failed_conditions)}"])
    for trial in range(count):
        corner = FiniteRankCorner.random(rng, rank=int(rng.integers(1, 4)))
        data = oracle_point_data(m, lam, config.oracle, corner)
        confirmed = None if data is None else not classify_point_data(data, SpectrumKind.FLI)
        tally.record_sample(confirmed, lam, f"trial corner {trial}")
    return tally.verdict("falsify", f"{count} random finite-rank corners at λ={lam}")


CHECKS: Dict[str, Callable[..., Verdict]] = {
    "holes": filling_holes_check,
    "sandwich": sandwich_check,
    "eta": eta_check,
    "delta": corollary_consistency_check,
    "completion": completion_soundness_check,
    "harte": harte_check,
    "dong": dong_condition_verdict,
    "sclass": s_class_proposition_verdict,
    "nointerior": no_interior_corollary_verdict,
    "wforms": w_forms_check,
    "block": block_lemma_check,
    "duality": duality_check,
    "falsify": falsify_non_completable,
}

PAIR_CHECKS = [name for name in CHECKS if name not in ("duality", "falsify", "harte")]


def run_check(name: str, a: OperatorExpr, b: Optional[OperatorExpr] = None,
              c: Optional[CompletionCertificate] = None,
              target: CompletionTarget = CompletionTarget.FLI, samples: Optional[int] = None,
              seed: Optional[int] = None, lam: Optional[GQ] = None,
              config: Optional[CalculusConfig] = None, literal: Optional[bool] = None,
              conv: BetaConvention = BetaConvention.CLOSURE) -> Verdict:
    if name not in CHECKS:
        raise KeyError(name)
    config = config or DEFAULT_CONFIG
    if literal is None:
        literal = config.verification.literal_printed_formulas
    if name == "duality":
        return duality_check(a, samples=samples, seed=seed, config=config)
    if b is None:
        raise PreconditionError(f"check {name!r} needs both A and B")
    if name == "falsify":
        if lam is None:
            raise PreconditionError("the falsification check needs λ")
        return falsify_non_completable(a, b, lam, trials=samples, seed=seed, config=config)
    if name == "harte":
        return harte_check(a, b, c, lam)
    if name in ("eta", "delta", "wforms"):
        return CHECKS[name](a, b, target=target, config=config)
    if name == "completion":
        return completion_soundness_check(a, b, target, samples=samples, seed=seed, config=config)
    if name == "block":
        return block_lemma_check(a, b, c, samples=samples, seed=seed, config=config)
    if name == "dong":
        return dong_condition_verdict(a, b, c, target=target, literal=literal, samples=samples,
                                      seed=seed, config=config)
    if name == "sclass":
        return s_class_proposition_verdict(a, b, c, target=target, conv=conv, samples=samples,
                                           seed=seed, config=config)
    return CHECKS[name](a, b, c, target=target, samples=samples, seed=seed, config=config)
