"""Weight denominators of finite-index subgroups.

For a subgroup presented with matrix images, every generator is lifted to
the universal cover with integer part 0.  A relator word then lifts to a
central element (I, n), giving one abelianized relation per relator: the
generator exponent sums together with -n as the coefficient of the central
generator z = (I, 1).  The order d of the image of z in that finitely
generated abelian group is the weight denominator: the weights admitting a
multiplier system are exactly (1/d) * Z.
"""

from __future__ import annotations

from fractions import Fraction

from .cocycle import COVER_IDENTITY, CoverElement
from .fpgroup import Presentation, Word, reidemeister_schreier, upsilon_presentation
from .matgroup import IDENTITY, SubgroupSpec
from .zlinalg import (
    IntegerMatrix,
    cokernel_invariants,
    hermite_normal_form,
    order_of_last_coordinate,
)


class InfiniteOrderError(RuntimeError):
    """The central generator has infinite image in the abelianization.

    This never happens for the (finite-index, finitely presented) subgroups
    this package computes with; it indicates a broken presentation or an
    inconsistent relation matrix.
    """


def lift_word(word: Word, images) -> CoverElement:
    """Lift of the word under generator i -> (images[i], 0), folded with the
    cover's multiplication.  Factors through free reduction."""
    lifts = {}
    result = COVER_IDENTITY
    for i, s in word.letters:
        key = (i, s)
        step = lifts.get(key)
        if step is None:
            base = CoverElement(images[i], 0)
            step = base if s == 1 else base.inverse()
            lifts[key] = step
        result = result * step
    return result


def relation_matrix(presentation: Presentation) -> IntegerMatrix:
    """The s x (r+1) abelianized relation matrix of the centrally extended
    group: one row per relator, columns = generator exponent sums plus the
    z-coefficient."""
    if presentation.images is None:
        raise ValueError("relation_matrix needs a presentation with matrix images")
    r = presentation.generator_count
    rows = []
    for relator in presentation.relators:
        lift = lift_word(relator, presentation.images)
        if lift.g != IDENTITY:
            raise ValueError(
                "relator does not evaluate to the identity; presentation is broken"
            )
        rows.append(relator.exponent_sums(r) + [-lift.n])
    return IntegerMatrix(rows, r + 1)


class DenominatorReport:
    """Result of a weight-denominator computation."""

    __slots__ = (
        "group",
        "index_in_upsilon",
        "generator_count",
        "relator_count",
        "weight_denominator",
        "torsion_invariants",
        "free_rank",
        "notes",
    )

    def __init__(
        self,
        group,
        index_in_upsilon,
        generator_count,
        relator_count,
        weight_denominator,
        torsion_invariants,
        free_rank,
        notes=(),
    ):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "index_in_upsilon", index_in_upsilon)
        object.__setattr__(self, "generator_count", generator_count)
        object.__setattr__(self, "relator_count", relator_count)
        object.__setattr__(self, "weight_denominator", weight_denominator)
        object.__setattr__(self, "torsion_invariants", tuple(torsion_invariants))
        object.__setattr__(self, "free_rank", free_rank)
        object.__setattr__(self, "notes", tuple(notes))

    def __setattr__(self, name, value):
        raise AttributeError("DenominatorReport is immutable")

    def __reduce__(self):
        return (
            DenominatorReport,
            (
                self.group,
                self.index_in_upsilon,
                self.generator_count,
                self.relator_count,
                self.weight_denominator,
                self.torsion_invariants,
                self.free_rank,
                self.notes,
            ),
        )

    def __repr__(self):
        return "DenominatorReport(group=%r, weight_denominator=%r)" % (
            self.group,
            self.weight_denominator,
        )

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "index_in_upsilon": self.index_in_upsilon,
            "generator_count": self.generator_count,
            "relator_count": self.relator_count,
            "weight_denominator": self.weight_denominator,
            "torsion_invariants": list(self.torsion_invariants),
            "free_rank": self.free_rank,
            "notes": list(self.notes),
        }


def weight_denominator(
    presentation: Presentation, *, group=None, index_in_upsilon=None, notes=()
) -> DenominatorReport:
    """Weight denominator of the group given by a presentation with images,
    plus the abelian invariants of its central extension."""
    matrix = relation_matrix(presentation)
    h = hermite_normal_form(matrix)
    order = order_of_last_coordinate(h)
    if order is None:
        raise InfiniteOrderError(
            "central generator has infinite order in the abelianization"
        )
    nonzero = [row for row in h.entries if any(row)]
    torsion, free_rank = cokernel_invariants(
        IntegerMatrix(nonzero, matrix.cols)
    )
    return DenominatorReport(
        group=group,
        index_in_upsilon=index_in_upsilon,
        generator_count=presentation.generator_count,
        relator_count=len(presentation.relators),
        weight_denominator=order,
        torsion_invariants=torsion,
        free_rank=free_rank,
        notes=notes,
    )


def central_commutator_witness() -> Word:
    """A 40-letter identity word whose lift has integer part -1: the product
    r4^-1 r9^-1 r10^-1 r11 of presentation relators, which concatenates with
    no free cancellation and has exponent sum zero in every generator."""
    relators = upsilon_presentation().relators
    r4, r9, r10, r11 = relators[3], relators[8], relators[9], relators[10]
    word = r4.inverse() * r9.inverse() * r10.inverse() * r11
    return word


def weight_denominator_of(spec: SubgroupSpec, max_index: int = 512) -> DenominatorReport:
    """Weight denominator of a named subgroup.

    The five-generator unipotent group is computed directly from its
    presentation.  Its finite-index subgroups go through coset enumeration
    and Reidemeister-Schreier rewriting.  The full level-sqrt(-3) group is
    the direct product of the unipotent group with its order-3 scalar
    center, and a central scalar factor does not change which weights admit
    multiplier systems, so that case reuses the unipotent computation (with
    a note saying so).
    """
    base = upsilon_presentation()
    if spec.kind == "upsilon":
        return weight_denominator(base, group=spec.name(), index_in_upsilon=1)
    if spec.kind == "gamma_sqrt3":
        inner = weight_denominator(base, group=spec.name())
        return DenominatorReport(
            group=spec.name(),
            index_in_upsilon=None,
            generator_count=inner.generator_count,
            relator_count=inner.relator_count,
            weight_denominator=inner.weight_denominator,
            torsion_invariants=inner.torsion_invariants,
            free_rank=inner.free_rank,
            notes=(
                "computed from the index-3 unipotent complement: the group is "
                "the direct product of that complement with its order-3 scalar "
                "center, which leaves the weight denominator unchanged",
            ),
        )
    sub, graph = reidemeister_schreier(base, spec.membership, max_index=max_index)
    expected = spec.index_in_upsilon()
    if graph.index != expected:
        raise RuntimeError(
            "coset enumeration found index %d for %s, expected %d"
            % (graph.index, spec.name(), expected)
        )
    return weight_denominator(
        sub, group=spec.name(), index_in_upsilon=graph.index
    )


def _survey_worker(vector):
    spec = SubgroupSpec("index3", vector)
    return vector, weight_denominator_of(spec)


def survey_index3(max_index: int = 512, parallel: bool = False) -> list:
    """Weight denominators of all 40 index-3 congruence subgroups of the
    unipotent group, as (canonical vector, report) pairs in lexicographic
    vector order."""
    from .matgroup import all_index3_vectors

    vectors = all_index3_vectors()
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_survey_worker, vectors))
    else:
        results = [_survey_worker(v) for v in vectors]
    return results


def multiplier_system_exists(spec: SubgroupSpec, weight: Fraction, max_index: int = 512) -> bool:
    """Whether the subgroup carries a multiplier system of the given weight:
    true exactly when the weight's reduced denominator divides the group's
    weight denominator."""
    weight = Fraction(weight)
    report = weight_denominator_of(spec, max_index=max_index)
    return report.weight_denominator % weight.denominator == 0
