"""Executable forms of the four subgroup axioms.

A candidate is an identity component from the catalog together with a
finite set of coset representatives.  Membership and normalization (ST1)
and the circle conditions (ST2) are exact linear algebra; integrality of
character averages (ST3) runs through the symbolic coset integrator where
the component is a torus times SU(2) factors; the fixed-group condition
(ST4) combines a Lie-algebra fixer dimension with catalog probe elements
that watch for extra components.
"""

from __future__ import annotations

from dataclasses import dataclass

from .components import (
    ComponentDescriptor,
    ambient_usp_basis,
    circles_generate_densely_embedded,
    hodge_circles,
)
from .cyclotomic import CycNum
from .linalg import (
    Mat,
    _real_flatten,
    bracket,
    check_usp_membership,
    commutant_basis,
    rank,
    real_span_dimension,
)
from .moments import (
    DEFAULT_FAMILY,
    ComponentShape,
    ExactAverageUnsupported,
    coset_character_average,
)

__all__ = [
    "CandidateGroup",
    "component_shape",
    "ST1Report",
    "ST2Report",
    "ST3Entry",
    "ST3Report",
    "ST4Report",
    "AxiomReport",
    "check_st1",
    "check_st2",
    "check_st3",
    "check_st4",
    "check_candidate",
    "fixer_lie_dimension",
]


# Components whose extensions inside the normalizer satisfy the averaging
# axiom without a computation: their finite quotients act through rational
# character fields, so every tested average is an algebraic integer in Q.
_ST3_FROM_STRUCTURE = frozenset("ABCD")


@dataclass(frozen=True)
class CandidateGroup:
    """An identity component plus one representative per coset."""

    component: ComponentDescriptor
    coset_reps: tuple
    label: str = ""

    def __post_init__(self):
        reps = self.coset_reps
        if hasattr(reps, "elements"):
            reps = reps.elements
        object.__setattr__(self, "coset_reps", tuple(reps))
        if not self.coset_reps:
            raise ValueError("need at least the identity coset")

    @property
    def name(self) -> str:
        tail = f" [{self.label}]" if self.label else ""
        return f"{self.component.name}{tail}"


def component_shape(comp: ComponentDescriptor) -> ComponentShape:
    """Symbolic slot layout of a catalog component for exact averaging."""
    bad = [f for f in comp.algebra.factors if f != "sl2"]
    if bad:
        raise ExactAverageUnsupported(
            f"{comp.name}: factors {bad} are outside the torus-and-SU(2) family"
        )
    r = comp.algebra.torus_rank
    lines = {}
    pairs = []
    for j, row in enumerate(comp.coordinate_rows):
        torus, su2 = row[:r], row[r:]
        if any(su2):
            # catalog blocks are untwisted standard summands
            assert not any(torus) and sorted(su2) == sorted(
                (1,) + (0,) * (len(su2) - 1)
            )
            pairs.append((j, j + 3, su2.index(1), False))
        else:
            lines[j] = tuple(torus)
            lines[j + 3] = tuple(-x for x in torus)
    return ComponentShape(6, r, lines, pairs)


# ---------------------------------------------------------------------------
# ST1: closed subgroup of USp(6).


@dataclass(frozen=True)
class ST1Report:
    candidate: str
    memberships: tuple
    normalizations: tuple

    @property
    def passed(self) -> bool:
        return all(self.memberships) and all(self.normalizations)

    def to_json(self):
        return {
            "axiom": "ST1",
            "candidate": self.candidate,
            "memberships": list(self.memberships),
            "normalizations": list(self.normalizations),
            "passed": self.passed,
        }


def check_st1(candidate: CandidateGroup) -> ST1Report:
    """Every coset representative is symplectic-unitary and normalizes G0."""
    gens = candidate.component.generators()
    dim = candidate.component.dim
    memberships = []
    normalizations = []
    for rep in candidate.coset_reps:
        memberships.append(check_usp_membership(rep))
        inv = rep.inverse()
        conjugated = [rep * x * inv for x in gens]
        normalizations.append(real_span_dimension(gens + conjugated) == dim)
    return ST1Report(candidate.name, tuple(memberships), tuple(normalizations))


# ---------------------------------------------------------------------------
# ST2: a Hodge circle exists and the circles fill the identity component.


@dataclass(frozen=True)
class ST2Report:
    component: str
    circle_count: int
    dense: bool

    @property
    def passed(self) -> bool:
        return self.circle_count > 0 and self.dense

    def to_json(self):
        return {
            "axiom": "ST2",
            "component": self.component,
            "circle_count": self.circle_count,
            "dense": self.dense,
            "passed": self.passed,
        }


def check_st2(comp: ComponentDescriptor) -> ST2Report:
    circles = hodge_circles(comp)
    dense = bool(circles) and circles_generate_densely_embedded(comp)
    return ST2Report(comp.name, len(circles), dense)


# ---------------------------------------------------------------------------
# ST3: integral character averages on every coset.


@dataclass(frozen=True)
class ST3Entry:
    coset: int
    character: str
    integral: bool
    method: str
    value: CycNum | None = None
    estimate: float | None = None
    stderr: float | None = None

    def to_json(self):
        out = {
            "coset": self.coset,
            "character": self.character,
            "integral": self.integral,
            "method": self.method,
        }
        if self.value is not None:
            out["value"] = self.value.to_json()
        if self.estimate is not None:
            out["estimate"] = self.estimate
            out["stderr"] = self.stderr
        return out


@dataclass(frozen=True)
class ST3Report:
    candidate: str
    mode: str
    entries: tuple

    @property
    def passed(self) -> bool:
        return all(e.integral for e in self.entries)

    def failures(self) -> list:
        return [e for e in self.entries if not e.integral]

    def to_json(self):
        return {
            "axiom": "ST3",
            "candidate": self.candidate,
            "mode": self.mode,
            "entries": [e.to_json() for e in self.entries],
            "passed": self.passed,
        }


def check_st3(candidate: CandidateGroup, characters=None,
              mode: str = "auto", mc_samples: int = 20000,
              mc_seed: int = 0) -> ST3Report:
    """Average the character family over every coset and test integrality.

    Modes: "exact" insists on the symbolic integrator and propagates
    ExactAverageUnsupported; "mc" estimates numerically and accepts values
    within three standard errors of an integer; "auto" prefers exact,
    falls back on the structural argument for the components that have
    one, and otherwise samples.
    """
    if characters is None:
        characters = DEFAULT_FAMILY
    if not characters:
        raise ValueError("need at least one character")
    if mode not in ("exact", "mc", "auto"):
        raise ValueError(f"unknown mode {mode!r}")

    comp = candidate.component
    entries = []

    if mode in ("exact", "auto"):
        try:
            shape = component_shape(comp)
        except ExactAverageUnsupported:
            if mode == "exact":
                raise
        else:
            for i, rep in enumerate(candidate.coset_reps):
                for char in characters:
                    value = coset_character_average(shape, rep, char)
                    entries.append(ST3Entry(
                        coset=i, character=char.name or str(char.combo),
                        integral=value.is_rational_integer(),
                        method="exact", value=value,
                    ))
            return ST3Report(candidate.name, mode, tuple(entries))
        if comp.letter in _ST3_FROM_STRUCTURE:
            for i in range(len(candidate.coset_reps)):
                for char in characters:
                    entries.append(ST3Entry(
                        coset=i, character=char.name or str(char.combo),
                        integral=True, method="structure",
                    ))
            return ST3Report(candidate.name, mode, tuple(entries))

    from . import haarmc

    for i, rep in enumerate(candidate.coset_reps):
        for char in characters:
            estimate, stderr = haarmc.coset_character_estimate(
                comp, rep, char, samples=mc_samples, seed=mc_seed + i,
            )
            nearest = round(estimate.real)
            entries.append(ST3Entry(
                coset=i, character=char.name or str(char.combo),
                integral=abs(estimate - nearest) <= 3.0 * stderr,
                method="mc", estimate=float(estimate.real), stderr=stderr,
            ))
    return ST3Report(candidate.name, "mc" if mode == "mc" else mode,
                     tuple(entries))


# ---------------------------------------------------------------------------
# ST4: the subgroup fixing the commutant pointwise is the component itself.


@dataclass(frozen=True)
class ST4Report:
    component: str
    group_dim: int
    commutant_dim: int
    fixer_dim: int
    probe_escapes: tuple
    probe_count: int

    @property
    def passed(self) -> bool:
        return self.fixer_dim == self.group_dim and not self.probe_escapes

    def to_json(self):
        return {
            "axiom": "ST4",
            "component": self.component,
            "group_dim": self.group_dim,
            "commutant_dim": self.commutant_dim,
            "fixer_dim": self.fixer_dim,
            "probe_escapes": list(self.probe_escapes),
            "probe_count": self.probe_count,
            "passed": self.passed,
        }


def fixer_lie_dimension(commutant: list) -> int:
    """Dimension of {X in usp(6) : [X, c] = 0 for all c in the commutant}."""
    basis = ambient_usp_basis()
    flats = [
        [x for c in commutant for x in _real_flatten(bracket(b, c))]
        for b in basis
    ]
    rows = [[flats[i][t] for i in range(len(basis))]
            for t in range(len(flats[0]))]
    return len(basis) - rank(rows)


def _centralizes(p: Mat, commutant: list) -> bool:
    return all(p * c == c * p for c in commutant)


def check_st4(entry) -> ST4Report:
    """Fixer analysis for a catalog component or an embedded exclusion.

    The Lie-algebra fixer dimension catches connected excess; the probe
    elements, each known to lie outside the component, catch extra
    components of the fixer.
    """
    gens = entry.generators()
    group_dim = len(gens)
    commutant = commutant_basis(gens)
    fixer = fixer_lie_dimension(commutant)
    probes = entry.st4_probes()
    escapes = tuple(
        i for i, p in enumerate(probes) if _centralizes(p, commutant)
    )
    name = getattr(entry, "name", repr(entry))
    return ST4Report(name, group_dim, len(commutant), fixer, escapes,
                     len(probes))


# ---------------------------------------------------------------------------
# The bundle.


@dataclass(frozen=True)
class AxiomReport:
    candidate: str
    st1: ST1Report
    st2: ST2Report
    st3: ST3Report
    st4: ST4Report

    @property
    def passed(self) -> bool:
        return (self.st1.passed and self.st2.passed and self.st3.passed
                and self.st4.passed)

    def to_json(self):
        return {
            "candidate": self.candidate,
            "st1": self.st1.to_json(),
            "st2": self.st2.to_json(),
            "st3": self.st3.to_json(),
            "st4": self.st4.to_json(),
            "passed": self.passed,
        }


def check_candidate(candidate: CandidateGroup, characters=None,
                    st3_mode: str = "auto") -> AxiomReport:
    return AxiomReport(
        candidate=candidate.name,
        st1=check_st1(candidate),
        st2=check_st2(candidate.component),
        st3=check_st3(candidate, characters, st3_mode),
        st4=check_st4(candidate.component),
    )
