"""Named checks run by ``verify`` and ``scan``.

A check takes a subject (a two-site operator with its algebra side), a seeded
generator and a number of trials, and returns one merged CheckReport.
Random spectral points that hit a pole are redrawn.
"""

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

from baxterise.core.algebra import (
    CheckReport,
    MobiusParams,
    chain_images,
    check_chain_relations,
    check_equal,
    check_hecke,
    check_S_relation,
    check_T_relation,
    check_zero,
    merge_reports,
    mobius,
    mobius_via_inverse,
    reverse_chain,
)
from baxterise.core.baxterisation import (
    RFunction,
    SpectralPoint,
    baxterise_sigma,
    check_a_commutativity,
    check_braided_ybe,
    check_locality,
    check_regularity,
    check_unitarity,
    hecke_rmatrix,
    product_rfunction,
    sigma_rmatrix,
    tau_rmatrix,
)
from baxterise.core.catalog import (
    Family,
    FamilyInstance,
    build_family,
    closed_form_R,
    derive_tasep_T,
)
from baxterise.core.errors import BaxteriseError
from baxterise.core.integrability import (
    ChainSpec,
    hamiltonian,
    transfer_derivative,
    transfer_matrix,
)
from baxterise.core.linalg import (
    LocalOperator,
    Matrix,
    as_matrix,
    commutator,
    cyclic_shift,
    determinant,
    identity,
    mat_power,
    st_map,
    sym_transform,
)
from baxterise.core.sampling import draw_admissible, draw_scalar

logger = logging.getLogger(__name__)

Side = Literal["S", "T"]

DEFAULT_CHECKS = ("relation", "ybe", "unitarity", "regularity", "locality")
EXTRA_CHECKS = (
    "hecke",
    "product",
    "a_operator",
    "closed_form",
    "mobius",
    "symmetry",
    "integrability",
)
ALL_CHECKS = DEFAULT_CHECKS + EXTRA_CHECKS

CUSTOM_LABEL = "CUSTOM"


class CheckNotApplicable(BaxteriseError, ValueError):
    """Raised when a check makes no sense for the given subject."""

    pass


@dataclass(frozen=True, eq=False)
class Subject:
    """Operator under test together with the algebra it should represent."""

    label: str
    op: LocalOperator
    side: Side = "S"
    instance: FamilyInstance | None = None

    @classmethod
    def from_instance(cls, spec: FamilyInstance) -> "Subject":
        return cls(spec.family.value, build_family(spec), spec.family.side, spec)

    @classmethod
    def custom(cls, op: LocalOperator, side: Side = "S") -> "Subject":
        return cls(CUSTOM_LABEL, op, side)

    @property
    def m(self) -> int:
        return self.op.m

    @property
    def family(self) -> Family | None:
        return self.instance.family if self.instance else None


def relation_report(op: LocalOperator, side: Side) -> CheckReport:
    return check_S_relation(op) if side == "S" else check_T_relation(op)


def rfunction(subject: Subject) -> RFunction:
    """Ř_σ for S-side subjects, Ř_τ for T-side ones."""
    return sigma_rmatrix(subject.op) if subject.side == "S" else tau_rmatrix(subject.op)


def _over_points(
    rng: random.Random, trials: int, evaluate: Callable[[SpectralPoint], CheckReport]
) -> CheckReport:
    reports = []
    for _ in range(trials):
        _, report = draw_admissible(rng, evaluate)
        reports.append(report)
        if not report.passed:
            break
    return merge_reports(reports)


def _require_s_side(subject: Subject, check: str) -> None:
    if subject.side != "S":
        raise CheckNotApplicable(f"Check '{check}' is defined for S-side operators only")


def _relation(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    return relation_report(subject.op, subject.side)


def _ybe(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    r = rfunction(subject)
    return _over_points(rng, trials, lambda p: check_braided_ybe(r, subject.m, p.x, p.y, p.z))


def _unitarity(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    r = rfunction(subject)
    return _over_points(rng, trials, lambda p: check_unitarity(r, subject.m, [p]))


def _regularity(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    r = rfunction(subject)
    return _over_points(rng, trials, lambda p: check_regularity(r, subject.m, [p]))


def _locality(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    r = rfunction(subject)
    return _over_points(rng, trials, lambda p: check_locality(r, subject.m, [p]))


def _hecke(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    """g^2 = g, the braid relation, then the Hecke closed form against the engine."""
    quotient = check_hecke(subject.op, 0)
    # the closed form only holds for an idempotent braid generator
    if not quotient.passed:
        return quotient

    def evaluate(p: SpectralPoint) -> CheckReport:
        return check_equal(
            hecke_rmatrix(subject.op, p.x, p.y),
            baxterise_sigma(subject.op, p.x, p.y),
            "Hecke closed form - (1 - z2 g)(1 - z1 g)^-1",
        )

    return _over_points(rng, trials, evaluate)


def _product(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    """Product R-matrix with a partner T whose rates satisfy rho_i nu_ij = mu_ij zeta_j."""
    if subject.family is not Family.TASEP_S or subject.instance is None:
        raise CheckNotApplicable("Check 'product' needs a TASEP_S instance")
    m = subject.m
    partner = derive_tasep_T(subject.instance, {j: draw_scalar(rng) for j in range(2, m + 1)})
    t = build_family(partner)
    logger.debug("Product partner for %s: %s", subject.label, partner.to_dict())

    commuting = check_zero(commutator(t.mat, subject.op.mat), "[T, S]")
    # without commuting factors the product is not expected to solve the YBE
    if not commuting.passed:
        return commuting

    r = product_rfunction(subject.op, t)
    return merge_reports(
        [
            _over_points(rng, trials, lambda p: check_braided_ybe(r, m, p.x, p.y, p.z)),
            _over_points(rng, trials, lambda p: check_unitarity(r, m, [p])),
        ]
    )


def _a_operator(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    """[A(x), A(y)] = 0 together with the YBE at the same point; both must agree."""
    _require_s_side(subject, "a_operator")
    r = rfunction(subject)

    def evaluate(p: SpectralPoint) -> CheckReport:
        ybe = check_braided_ybe(r, subject.m, p.x, p.y, p.z)
        commuting = check_a_commutativity(subject.op, p.x, p.y)
        if ybe.passed == commuting.passed:
            return commuting
        logger.warning("A-operator and YBE disagree at x=%s y=%s z=%s", p.x, p.y, p.z)
        return ybe if not ybe.passed else commuting

    return _over_points(rng, trials, evaluate)


def _closed_form(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    instance = subject.instance
    if instance is None or not instance.family.is_classified:
        raise CheckNotApplicable("Check 'closed_form' needs one of the families S1..S7")

    def evaluate(p: SpectralPoint) -> CheckReport:
        return check_equal(
            closed_form_R(instance, p.x, p.y),
            baxterise_sigma(subject.op, p.x, p.y),
            "closed form - (I - yS)(I - xS)^-1",
        )

    return _over_points(rng, trials, evaluate)


def _mobius(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    """Möbius images keep the relation and compose like their parameter matrices."""
    op, side = subject.op, subject.side

    def evaluate(p: SpectralPoint) -> CheckReport:
        outer = MobiusParams(p.x, p.y, p.z)
        inner = MobiusParams(draw_scalar(rng), draw_scalar(rng), draw_scalar(rng))
        image = mobius(op, outer)
        reports = [
            relation_report(image, side),
            check_equal(
                mobius(mobius(op, inner), outer).mat,
                mobius(op, outer.compose(inner)).mat,
                "Möbius composition",
            ),
            check_equal(mobius_via_inverse(op, outer).mat, image.mat, "Möbius via inversion"),
        ]
        return merge_reports(reports)

    return _over_points(rng, trials, evaluate)


def _random_invertible(rng: random.Random, m: int) -> Matrix:
    while True:
        q = as_matrix([[draw_scalar(rng) for _ in range(m)] for _ in range(m)])
        if determinant(q) != 0:
            return q


def _symmetry(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    """Relation preserved by inversion, transpose-flip and conjugation; S/T maps swap sides."""
    op, side = subject.op, subject.side
    other: Side = "T" if side == "S" else "S"
    # transforms that stay on the same side
    reports = []
    if determinant(op.mat) != 0:
        reports.append(relation_report(sym_transform(op, "inverse"), side))
    else:
        logger.debug("%s is singular; skipping the inverse transform", subject.label)
    reports.append(relation_report(sym_transform(op, "transpose-flip"), side))
    for _ in range(trials):
        q = _random_invertible(rng, op.m)
        reports.append(relation_report(sym_transform(op, "conjugate", q), side))
    # maps to the other side
    reports.append(relation_report(st_map(op, "transpose"), other))
    reports.append(relation_report(st_map(op, "flip"), other))

    # generator images on a chain, relabelled i -> n - i, represent the other algebra
    n = 4 if op.m == 2 else 3
    images = chain_images(op, n)
    reports.append(check_chain_relations(images, n, op.m, convention=side))
    reports.append(check_chain_relations(reverse_chain(images), n, op.m, convention=other))
    return merge_reports(reports)


def check_chain_integrability(op: LocalOperator, n: int, p: SpectralPoint) -> CheckReport:
    """Commuting transfer matrices, H from the logarithmic derivative, t(z|z) = U with U^n = I."""
    spec = ChainSpec(op, n, p.z)
    t_x, t_y = transfer_matrix(spec, p.x), transfer_matrix(spec, p.y)
    t_z = transfer_matrix(spec, p.z)
    h = hamiltonian(spec)
    return merge_reports(
        [
            check_zero(commutator(t_x, t_y), f"[t(x|z), t(y|z)] at n={n}"),
            check_equal(transfer_derivative(spec), h, f"t'(z|z) t(z|z)^-1 - H at n={n}"),
            check_zero(commutator(h, t_x), f"[H, t(x|z)] at n={n}"),
            check_equal(t_z, cyclic_shift(op.m, n), f"t(z|z) - cyclic shift at n={n}"),
            check_equal(mat_power(t_z, n), identity(op.m**n), f"t(z|z)^n - I at n={n}"),
        ]
    )


def _integrability(subject: Subject, rng: random.Random, trials: int, max_n: int) -> CheckReport:
    _require_s_side(subject, "integrability")
    return _over_points(
        rng,
        trials,
        lambda p: merge_reports(
            [check_chain_integrability(subject.op, n, p) for n in range(2, max_n + 1)]
        ),
    )


CheckRunner = Callable[[Subject, random.Random, int, int], CheckReport]

_RUNNERS: dict[str, CheckRunner] = {
    "relation": _relation,
    "ybe": _ybe,
    "unitarity": _unitarity,
    "regularity": _regularity,
    "locality": _locality,
    "hecke": _hecke,
    "product": _product,
    "a_operator": _a_operator,
    "closed_form": _closed_form,
    "mobius": _mobius,
    "symmetry": _symmetry,
    "integrability": _integrability,
}


def run_check(
    subject: Subject, check: str, rng: random.Random, trials: int = 1, max_n: int = 3
) -> CheckReport:
    """Run one named check.

    Args:
        subject: Operator under test
        check: One of :data:`ALL_CHECKS`
        rng: Source of spectral points and auxiliary parameters
        trials: Number of admissible points (or random conjugations)
        max_n: Longest chain for ``integrability``

    Raises:
        CheckNotApplicable: If the check does not apply to the subject
        SamplingError: If no admissible point could be drawn
    """
    try:
        runner = _RUNNERS[check]
    except KeyError:
        raise CheckNotApplicable(f"Unknown check: {check}")
    logger.debug("Running %s on %s (m=%d, trials=%d)", check, subject.label, subject.m, trials)
    return runner(subject, rng, trials, max_n)


def applicable_checks(family: Family, m: int = 2) -> tuple[str, ...]:
    """Checks a scan runs for a family."""
    checks = list(DEFAULT_CHECKS)
    if family.side == "S":
        checks.append("a_operator")
    if family.is_classified:
        checks.append("closed_form")
    checks += ["mobius", "symmetry"]
    if family is Family.S4:
        checks.append("hecke")
    if family is Family.TASEP_S:
        checks.append("product")
    if family.side == "S" and m == 2:
        checks.append("integrability")
    return tuple(checks)
