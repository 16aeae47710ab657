"""Verification harness: invariant reports and theorem checks on extensions.

Each check evaluates one of the paper-level inequalities or equivalences on
a concrete extension instance, reporting a hypothesis checklist, both sides
of the comparison, and a conclusion.  A failed inequality with a violated
hypothesis is reported as "counterexample-consistent", not as an error.

Large presentations (more than SMALL_RING_VARS ambient variables) are out of
reach for iterated syzygies, so their Cohen-Macaulayness is certified by the
parameter-colength criterion and the a-invariant and regularity are then read
off the Hilbert series (a = deg N - sum w, reg = a + dim); both identities
are exact for certified-CM algebras and are cross-checked against the
resolution route on every small instance.
"""

import random
from dataclasses import dataclass, field
from math import comb, floor
from typing import Optional

from .core import (
    GF,
    QQ,
    GradedPolyRing,
    GradedQuotientPresentation,
    free_presentation,
)
from .constructions import (
    frobenius_power_subalgebra_generators,
    subalgebra_membership,
    subalgebras_equal,
    veronese_presentation,
    is_module_finite,
)
from .groebner import (
    GradedRingMap,
    contraction,
    groebner_basis,
    normal_form,
)
from .hilbert import hilbert_series, krull_dimension, multiplicity
from .resolution import (
    a_invariant,
    betti_table,
    cm_certificate_by_parameters,
    embedding_dimension,
    is_cohen_macaulay,
    linear_system_of_parameters,
    singular_locus_dimension,
)
from .toric import inseparable_degree, lattice_of_monomial_algebra

# Resolutions are attempted up to this many ambient variables; beyond it the
# parameter-certified Hilbert-series route takes over.
SMALL_RING_VARS = 6

# Cap on the number of Jacobian minors expanded for the R1 test.
MINOR_BUDGET = 4000

VERIFIED = "verified"
USER_ASSERTED = "user-asserted"
VIOLATED = "violated"
UNVERIFIED = "unverified"

PASS = "pass"
FAIL = "fail"
COUNTEREXAMPLE = "counterexample-consistent"
NOT_APPLICABLE = "not-applicable"


@dataclass
class InvariantReport:
    dim: int
    depth: Optional[int]
    edim: Optional[int]
    multiplicity: Optional[int]
    regularity: Optional[int]
    a_invariant: int
    is_cm: bool
    is_r1: Optional[bool]
    has_min_mult: Optional[bool]
    hilbert: object
    route: str = "resolution"

    def to_dict(self):
        return {
            "dim": self.dim,
            "depth": self.depth,
            "edim": self.edim,
            "multiplicity": self.multiplicity,
            "regularity": self.regularity,
            "a_invariant": self.a_invariant,
            "is_cm": self.is_cm,
            "is_r1": self.is_r1,
            "has_min_mult": self.has_min_mult,
            "hilbert_series": {
                "numerator_coeffs": self.hilbert.numerator.coefficient_list(),
                "denominator_weights": list(self.hilbert.denominator_weights),
            },
            "route": self.route,
        }


@dataclass
class ExtensionInstance:
    name: str
    A: GradedQuotientPresentation
    B: GradedQuotientPresentation
    inclusion: GradedRingMap
    characteristic: int
    p_power: Optional[int] = None
    separability_claim: str = "unknown"
    proper: bool = True

    def __post_init__(self):
        if self.separability_claim not in (
            "separable",
            "purely-inseparable",
            "mixed",
            "unknown",
        ):
            raise ValueError("bad separability claim %r" % self.separability_claim)


@dataclass
class TheoremVerdict:
    theorem_id: str
    instance: str
    hypotheses: list
    lhs: Optional[int]
    rhs: Optional[int]
    conclusion: str
    notes: str = ""

    def to_dict(self):
        return {
            "theorem": self.theorem_id,
            "instance": self.instance,
            "hypotheses": [{"name": n, "status": s} for n, s in self.hypotheses],
            "lhs": self.lhs,
            "rhs": self.rhs,
            "conclusion": self.conclusion,
            "notes": self.notes,
        }


def _finish(theorem_id, instance, hyps, lhs, rhs, ok, notes=""):
    if ok:
        conclusion = PASS
    elif any(s == VIOLATED for _n, s in hyps):
        conclusion = COUNTEREXAMPLE
    else:
        conclusion = FAIL
    return TheoremVerdict(theorem_id, instance, hyps, lhs, rhs, conclusion, notes)


# ---------------------------------------------------------------------------
# Invariant aggregation with size-dependent routing.


def a_invariant_auto(A, rng=None):
    """a(A) by the canonical-module route when feasible, else CM fast path."""
    if A.ring.nvars <= SMALL_RING_VARS:
        return a_invariant(A)
    if not certified_cm(A, rng):
        raise ValueError(
            "a-invariant of a large non-CM presentation is out of desk-scale reach"
        )
    return hilbert_series(A).fastpath_a_invariant()


def certified_cm(A, rng=None):
    if A.ring.nvars <= SMALL_RING_VARS or not A.is_standard_graded:
        return is_cohen_macaulay(A)
    return cm_certificate_by_parameters(A, rng)


def regularity_auto(A, rng=None):
    if not A.is_standard_graded:
        return None
    if A.ring.nvars <= SMALL_RING_VARS:
        return betti_table(A).regularity()
    if certified_cm(A, rng):
        return hilbert_series(A).fastpath_a_invariant() + krull_dimension(A)
    raise ValueError("regularity of a large non-CM presentation is out of reach")


def r1_status(A):
    """(is_r1 or None, hypothesis status) respecting the minor budget."""
    if not A.asserted_domain:
        return None, UNVERIFIED
    gens = len(A.ideal_gens)
    n = A.ring.nvars
    c = n - krull_dimension(A)
    if c > 0 and comb(max(gens, c), c) * comb(n, c) > MINOR_BUDGET:
        return None, UNVERIFIED
    d = krull_dimension(A)
    sing = singular_locus_dimension(A)
    ok = sing <= d - 2
    return ok, (VERIFIED if ok else VIOLATED)


def invariant_report(A, rng=None):
    """Aggregate dim, depth, edim, e, reg, a, CM, R1, and min-mult."""
    rng = rng or random.Random(0)
    hs = hilbert_series(A)
    d = hs.dimension()
    std = A.is_standard_graded
    small = A.ring.nvars <= SMALL_RING_VARS

    edim = embedding_dimension(A) if std else None
    mult = multiplicity(A) if std else None

    if small:
        bt = betti_table(A)
        pd = bt.projective_dimension()
        dep = A.ring.nvars - pd
        cm = dep == d
        reg = bt.regularity() if std else None
        a = a_invariant(A)
        route = "resolution"
    else:
        cm = certified_cm(A, rng)
        dep = d if cm else None
        a = a_invariant_auto(A, rng)
        reg = (a + d) if (std and cm) else None
        route = "parameter-certified"

    r1, _ = r1_status(A)
    min_mult = None
    if std and (cm or A.asserted_domain):
        min_mult = mult == edim - d + 1
    return InvariantReport(d, dep, edim, mult, reg, a, cm, r1, min_mult, hs, route)


# ---------------------------------------------------------------------------
# Shared hypothesis helpers.


def _common_hypotheses(inst, need_integral=True):
    hyps = []
    if need_integral:
        hyps.append(
            ("integral extension", VERIFIED if is_module_finite(inst.inclusion) else VIOLATED)
        )
    hyps.append(("A is a domain", USER_ASSERTED if inst.A.asserted_domain else UNVERIFIED))
    hyps.append(("B is a domain", USER_ASSERTED if inst.B.asserted_domain else UNVERIFIED))
    return hyps


# ---------------------------------------------------------------------------
# Theorem checks.


def check_separable_bound(inst, rng=None):
    """Separable case: a(A) <= a(B), and reg A <= a(B)+d <= reg B for CM A."""
    tid = "sep"
    if inst.separability_claim != "separable":
        return TheoremVerdict(
            tid, inst.name, [("separable extension", UNVERIFIED)], None, None,
            NOT_APPLICABLE, "separability claim is %r" % inst.separability_claim,
        )
    rng = rng or random.Random(0)
    hyps = _common_hypotheses(inst)
    hyps.append(("separable extension", USER_ASSERTED))
    r1, status = r1_status(inst.A)
    hyps.append(("A regular in codimension one", status))
    a_A = a_invariant_auto(inst.A, rng)
    a_B = a_invariant_auto(inst.B, rng)
    notes = ""
    ok = a_A <= a_B
    if inst.A.is_standard_graded and certified_cm(inst.A, rng):
        d = krull_dimension(inst.A)
        reg_A = regularity_auto(inst.A, rng)
        reg_B = regularity_auto(inst.B, rng)
        reg_ok = reg_A <= a_B + d <= reg_B
        notes = "reg A = %d, a(B)+d = %d, reg B = %d (%s)" % (
            reg_A, a_B + d, reg_B, "holds" if reg_ok else "fails",
        )
        ok = ok and reg_ok
    return _finish(tid, inst.name, hyps, a_A, a_B, ok, notes)


def check_dim2_bound(inst, rng=None):
    """Dimension two: floor(a(A)/p^e) <= a(B), floor((reg A - 2)/p^e) <= a(B)."""
    tid = "dim2"
    rng = rng or random.Random(0)
    if inst.characteristic == 0:
        return TheoremVerdict(
            tid, inst.name, [("characteristic p > 0", UNVERIFIED)], None, None,
            NOT_APPLICABLE, "characteristic zero",
        )
    if inst.p_power is None:
        raise ValueError("instance %s carries no inseparable degree p^e" % inst.name)
    dA, dB = krull_dimension(inst.A), krull_dimension(inst.B)
    if dA != 2 or dB != 2:
        return TheoremVerdict(
            tid, inst.name, [("dim A = dim B = 2", VIOLATED)], None, None,
            NOT_APPLICABLE, "dimensions are %d and %d" % (dA, dB),
        )
    hyps = _common_hypotheses(inst)
    hyps.append(("dim A = dim B = 2", VERIFIED))
    _r1, status = r1_status(inst.A)
    hyps.append(("Sing condition on J", status))
    q = inst.p_power
    a_A = a_invariant_auto(inst.A, rng)
    a_B = a_invariant_auto(inst.B, rng)
    lhs = floor(a_A / q)
    ok = lhs <= a_B
    notes = "floor(a(A)/p^e) = %d vs a(B) = %d" % (lhs, a_B)
    if inst.A.is_standard_graded and certified_cm(inst.A, rng):
        reg_A = regularity_auto(inst.A, rng)
        lhs2 = floor((reg_A - 2) / q)
        ok = ok and lhs2 <= a_B
        notes += "; floor((reg A - 2)/p^e) = %d" % lhs2
    return _finish(tid, inst.name, hyps, lhs, a_B, ok, notes)


def _veronese_subalgebra_generators(inst, q):
    """Generators of A^{(q)} inside B: images of a basis of the degree-q slot."""
    from .constructions import degree_slot_basis

    basis = degree_slot_basis(inst.A, q)
    out = []
    for exps in basis:
        out.append(inst.inclusion.apply(inst.A.ring.monomial(exps)))
    return out


def check_purely_inseparable(inst, rng=None):
    """B^{p^e} vs A^{(p^e)}: containment always, equality iff B normal."""
    tid = "pure-insep"
    rng = rng or random.Random(0)
    if inst.characteristic == 0 or inst.p_power is None or inst.p_power == 1:
        claim = inst.separability_claim
        if inst.p_power == 1 and claim != "purely-inseparable":
            return TheoremVerdict(
                tid, inst.name, [("purely inseparable extension", UNVERIFIED)],
                None, None, NOT_APPLICABLE,
                "extension is separable (p^e = 1)" if inst.p_power == 1 else "characteristic zero",
            )
    if inst.separability_claim != "purely-inseparable" and inst.p_power != 1:
        return TheoremVerdict(
            tid, inst.name, [("purely inseparable extension", UNVERIFIED)],
            None, None, NOT_APPLICABLE, "claim is %r" % inst.separability_claim,
        )
    hyps = _common_hypotheses(inst)
    cm_A = certified_cm(inst.A, rng)
    r1_A, r1_stat = r1_status(inst.A)
    normal_A = cm_A and bool(r1_A)
    hyps.append(
        ("A normal (CM + R1 sufficient)", VERIFIED if normal_A else (r1_stat if r1_stat == VIOLATED else UNVERIFIED))
    )
    hyps.append(("purely inseparable extension", USER_ASSERTED if inst.p_power != 1 else VERIFIED))
    q = inst.p_power
    frob_gens = frobenius_power_subalgebra_generators(inst.B, q)
    ver_gens = _veronese_subalgebra_generators(inst, q)
    contained = all(subalgebra_membership(g, ver_gens, inst.B) for g in frob_gens)
    hyps.append(("B^{p^e} contained in A^{(p^e)}", VERIFIED if contained else VIOLATED))
    equal = contained and subalgebras_equal(frob_gens, ver_gens, inst.B)
    notes = "B^{p^e} %s A^{(p^e)}" % ("=" if equal else ("<" if contained else "!<"))
    if not equal:
        return _finish(tid, inst.name, hyps, None, None, contained, notes + "; B not normal" if contained else notes)
    a_A = a_invariant_auto(inst.A, rng)
    a_B = a_invariant_auto(inst.B, rng)
    lhs = floor(a_A / q)
    ok = lhs == a_B
    notes += "; floor(a(A)/p^e) = %d, a(B) = %d" % (lhs, a_B)
    return _finish(tid, inst.name, hyps, lhs, a_B, ok, notes)


def check_general_bound(inst, rng=None):
    """General case: floor((a(A) + dim A - 2)/p^e) <= reg B - 2."""
    tid = "general"
    rng = rng or random.Random(0)
    if inst.characteristic == 0:
        return TheoremVerdict(
            tid, inst.name, [("characteristic p > 0", UNVERIFIED)], None, None,
            NOT_APPLICABLE, "characteristic zero",
        )
    if inst.p_power is None:
        raise ValueError("instance %s carries no inseparable degree p^e" % inst.name)
    if not (inst.A.is_standard_graded and inst.B.is_standard_graded):
        return TheoremVerdict(
            tid, inst.name, [("standard gradings", VIOLATED)], None, None,
            NOT_APPLICABLE, "weighted grading",
        )
    hyps = _common_hypotheses(inst)
    hyps.append(("standard gradings", VERIFIED))
    _r1, status = r1_status(inst.A)
    hyps.append(("A regular in codimension one", status))
    q = inst.p_power
    a_A = a_invariant_auto(inst.A, rng)
    d = krull_dimension(inst.A)
    reg_B = regularity_auto(inst.B, rng)
    lhs = floor((a_A + d - 2) / q)
    rhs = reg_B - 2
    return _finish(tid, inst.name, hyps, lhs, rhs, lhs <= rhs)


def min_mult_conditions(A, rng=None):
    """The four minimal-multiplicity conditions, each decided independently."""
    rng = rng or random.Random(0)
    if not A.is_standard_graded:
        raise ValueError("minimal multiplicity is a standard graded notion")
    d = krull_dimension(A)
    e = multiplicity(A)
    edim = embedding_dimension(A)
    cm = certified_cm(A, rng)
    cond_e = e == edim - d + 1
    reg = regularity_auto(A, rng)
    cond_reg = reg <= 1
    a = a_invariant_auto(A, rng) if cm else None
    cond_a = cm and a <= 1 - d
    cond_m2 = False
    if cm:
        sop = linear_system_of_parameters(A, rng)
        gb = groebner_basis(list(A.ideal_gens) + sop) if (A.ideal_gens or sop) else None
        ring = A.ring
        cond_m2 = True
        for i in range(ring.nvars):
            for j in range(i, ring.nvars):
                prod = ring.var(i) * ring.var(j)
                if gb is None or not normal_form(prod, gb).is_zero():
                    cond_m2 = False
                    break
            if not cond_m2:
                break
        if gb is None:
            cond_m2 = ring.nvars == 0
    return {
        "e = edim - dim + 1": cond_e,
        "reg <= 1": cond_reg,
        "CM and a <= 1 - dim": cond_a,
        "CM and m^2 in sampled linear sop": cond_m2,
    }


def check_min_mult_equivalences(A, rng=None, name=None):
    """The four conditions must agree: all true or all false."""
    tid = "minmult-eq"
    name = name or A.name or repr(A)
    conds = min_mult_conditions(A, rng)
    values = list(conds.values())
    agree = all(values) or not any(values)
    hyps = [("standard graded", VERIFIED)]
    hyps.append(("A is a domain or CM", USER_ASSERTED if A.asserted_domain else UNVERIFIED))
    notes = "; ".join("%s: %s" % (k, v) for k, v in conds.items())
    return _finish(tid, name, hyps, int(sum(values)), len(values) if values[0] else 0, agree, notes)


def has_minimal_multiplicity(A, rng=None):
    conds = min_mult_conditions(A, rng)
    return all(conds.values())


def check_min_mult_descent(inst, rng=None):
    """If B has minimal multiplicity, so must A (A normal, both CM)."""
    tid = "minmult-descent"
    rng = rng or random.Random(0)
    if not (inst.A.is_standard_graded and inst.B.is_standard_graded):
        return TheoremVerdict(
            tid, inst.name, [("standard gradings", VIOLATED)], None, None,
            NOT_APPLICABLE, "weighted grading",
        )
    b_min = has_minimal_multiplicity(inst.B, rng)
    if not b_min:
        return TheoremVerdict(
            tid, inst.name, [("B has minimal multiplicity", VIOLATED)], None, None,
            NOT_APPLICABLE, "B does not have minimal multiplicity",
        )
    hyps = _common_hypotheses(inst)
    cm_A = certified_cm(inst.A, rng)
    hyps.append(("A Cohen-Macaulay", VERIFIED if cm_A else VIOLATED))
    r1_A, r1_stat = r1_status(inst.A)
    normal_A = cm_A and bool(r1_A)
    hyps.append(
        ("A normal (CM + R1 sufficient)",
         VERIFIED if normal_A else (VIOLATED if r1_stat == VIOLATED or not cm_A else UNVERIFIED))
    )
    a_min = has_minimal_multiplicity(inst.A, rng)
    notes = "B min-mult: True; A min-mult: %s" % a_min
    return _finish(tid, inst.name, hyps, int(a_min), 1, a_min, notes)


def contracted_parameter_ideal_equals(inst, rng=None):
    """Sample a linear sop J of A and decide JB ∩ A = J (mod I_A).

    Returns (equal, J) with J the sampled forms.
    """
    rng = rng or random.Random(0)
    J = linear_system_of_parameters(inst.A, rng)
    jb = [inst.inclusion.apply(f) for f in J]
    pulled = contraction(inst.inclusion, jb)
    lhs = groebner_basis(pulled + list(inst.A.ideal_gens))
    rhs = groebner_basis(J + list(inst.A.ideal_gens))
    return list(lhs.generators) == list(rhs.generators), J


def check_mcm_quotient(inst, rng=None):
    """B/A maximal Cohen-Macaulay, via the criterion JB ∩ A = J."""
    tid = "mcm-quotient"
    rng = rng or random.Random(0)
    if not inst.proper:
        return TheoremVerdict(
            tid, inst.name, [("proper extension", VIOLATED)], None, None,
            NOT_APPLICABLE, "A = B",
        )
    hyps = _common_hypotheses(inst)
    hyps.append(("proper extension", USER_ASSERTED))
    cm_A = certified_cm(inst.A, rng)
    cm_B = certified_cm(inst.B, rng)
    hyps.append(("A Cohen-Macaulay", VERIFIED if cm_A else VIOLATED))
    hyps.append(("B Cohen-Macaulay", VERIFIED if cm_B else VIOLATED))
    mm = has_minimal_multiplicity(inst.A, rng) if inst.A.is_standard_graded else False
    hyps.append(("A has minimal multiplicity", VERIFIED if mm else VIOLATED))
    equal, J = contracted_parameter_ideal_equals(inst, rng)
    notes = "J = (%s); JB ∩ A %s J" % (", ".join(map(repr, J)), "=" if equal else "!=")
    return _finish(tid, inst.name, hyps, int(equal), 1, equal, notes)


# ---------------------------------------------------------------------------
# Built-in instances.


def pinchpoint_family(n, fieldspec=QQ):
    """The counterexample family A = k[x^n, x^{n-1}y, y^n] inside Ver_n(k[x,y])."""
    if n < 2:
        raise ValueError("family needs n >= 2")
    S = GradedPolyRing(fieldspec, ("u", "v", "w"))
    u, v, w = S.gens()
    A = GradedQuotientPresentation(
        S, [v**n - u ** (n - 1) * w], asserted_domain=True,
        name="pinch-point-%d" % n,
    )
    kxy = free_presentation(fieldspec, ("x", "y"), name="k[x,y]")
    V = veronese_presentation(kxy, n)
    B = V.presentation
    B.name = "Ver_%d(k[x,y])" % n
    idx = [V.variable_index_of(m) for m in [(n, 0), (n - 1, 1), (0, n)]]
    images = [B.ring.var(i) for i in idx]
    incl = GradedRingMap(A, B, images)
    p = fieldspec.characteristic
    L_A = lattice_of_monomial_algebra([(n, 0), (n - 1, 1), (0, n)])
    L_B = lattice_of_monomial_algebra(V.basis_monomials)
    q = inseparable_degree(L_A, L_B, p) if p else 1
    return ExtensionInstance(
        "pinch-point-%d%s" % (n, "" if p == 0 else "-GF%d" % p),
        A, B, incl, p, q, "separable" if q == 1 else "purely-inseparable",
        proper=(n > 2),
    )


def quadric_cone_instance(fieldspec=QQ):
    """A = k[x,y] inside B = k[x,y,z]/(z^2 - xy)."""
    A = free_presentation(fieldspec, ("x", "y"), name="k[x,y]")
    S = GradedPolyRing(fieldspec, ("x", "y", "z"))
    x, y, z = S.gens()
    B = GradedQuotientPresentation(
        S, [z**2 - x * y], asserted_domain=True, name="quadric-cone"
    )
    incl = GradedRingMap(A, B, [x, y])
    p = fieldspec.characteristic
    # doubled coordinates: x = (2,0), y = (0,2), z = (1,1)
    L_A = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    L_B = lattice_of_monomial_algebra([(2, 0), (0, 2), (1, 1)])
    q = inseparable_degree(L_A, L_B, p) if p else 1
    claim = "purely-inseparable" if q > 1 else "separable"
    return ExtensionInstance(
        "quadric-cone%s" % ("" if p == 0 else "-GF%d" % p), A, B, incl, p, q, claim
    )


def even_powers_instance(fieldspec=QQ):
    """A = k[x^2, y^2] inside B = k[x^2, xy, y^2], both regraded standard."""
    A = free_presentation(fieldspec, ("X", "Y"), name="k[x^2,y^2]")
    S = GradedPolyRing(fieldspec, ("u", "v", "w"))
    u, v, w = S.gens()
    B = GradedQuotientPresentation(
        S, [v**2 - u * w], asserted_domain=True, name="k[x^2,xy,y^2]"
    )
    incl = GradedRingMap(A, B, [u, w])
    p = fieldspec.characteristic
    L_A = lattice_of_monomial_algebra([(2, 0), (0, 2)])
    L_B = lattice_of_monomial_algebra([(2, 0), (1, 1), (0, 2)])
    q = inseparable_degree(L_A, L_B, p) if p else 1
    claim = "purely-inseparable" if q > 1 else "separable"
    return ExtensionInstance(
        "even-powers%s" % ("" if p == 0 else "-GF%d" % p), A, B, incl, p, q, claim
    )


def twisted_cubic_in_veronese_instance(fieldspec=QQ):
    """The twisted cubic mapped onto Ver_3(k[x,y]) by its four generators."""
    S = GradedPolyRing(fieldspec, ("a", "b", "c", "d"))
    a, b, c, d = S.gens()
    A = GradedQuotientPresentation(
        S,
        [b**2 - a * c, b * c - a * d, c**2 - b * d],
        asserted_domain=True,
        name="twisted-cubic",
    )
    kxy = free_presentation(fieldspec, ("x", "y"), name="k[x,y]")
    V = veronese_presentation(kxy, 3)
    B = V.presentation
    B.name = "Ver_3(k[x,y])"
    idx = [V.variable_index_of(m) for m in [(3, 0), (2, 1), (1, 2), (0, 3)]]
    incl = GradedRingMap(A, B, [B.ring.var(i) for i in idx])
    return ExtensionInstance(
        "twisted-cubic-in-ver3", A, B, incl, fieldspec.characteristic, 1, "separable"
    )


def identity_instance(fieldspec=QQ):
    A = free_presentation(fieldspec, ("x", "y"), name="k[x,y]")
    incl = GradedRingMap(A, A, list(A.ring.gens()))
    return ExtensionInstance(
        "identity-k[x,y]", A, A, incl, fieldspec.characteristic, 1, "separable",
        proper=False,
    )


def builtin_instances():
    """The deterministic instance list exercised by the suite."""
    out = [
        identity_instance(QQ),
        quadric_cone_instance(QQ),
        quadric_cone_instance(GF(2)),
        quadric_cone_instance(GF(3)),
        even_powers_instance(QQ),
        twisted_cubic_in_veronese_instance(QQ),
    ]
    for n in (3, 4, 5, 6):
        out.append(pinchpoint_family(n, QQ))
    out.append(pinchpoint_family(3, GF(2)))
    out.append(pinchpoint_family(5, GF(2)))
    return out


def builtin_rings():
    """Named rings used for the minimal-multiplicity equivalence sweep."""
    rings = [
        free_presentation(QQ, ("x",), name="k[x]"),
        free_presentation(QQ, ("x", "y"), name="k[x,y]"),
        free_presentation(QQ, ("x", "y", "z"), name="k[x,y,z]"),
    ]
    kxy = free_presentation(QQ, ("x", "y"), name="k[x,y]")
    for n in (2, 3, 4):
        V = veronese_presentation(kxy, n)
        V.presentation.name = "Ver_%d(k[x,y])" % n
        rings.append(V.presentation)
    for n in (3, 4, 5, 6):
        rings.append(pinchpoint_family(n, QQ).A)
    q = quadric_cone_instance(QQ)
    rings.append(q.B)
    tc = twisted_cubic_in_veronese_instance(QQ)
    rings.append(tc.A)
    return rings


ALL_CHECKS = {
    "sep": check_separable_bound,
    "dim2": check_dim2_bound,
    "pure-insep": check_purely_inseparable,
    "general": check_general_bound,
    "minmult-descent": check_min_mult_descent,
    "mcm-quotient": check_mcm_quotient,
}


def suite_verdicts_for_instance(name, seed=2024):
    """All checks for one built-in instance, for parallel suite fan-out."""
    for inst in builtin_instances():
        if inst.name == name:
            return [
                ALL_CHECKS[tid](inst, random.Random(seed)) for tid in sorted(ALL_CHECKS)
            ]
    raise ValueError("no built-in instance named %r" % name)


def run_suite(seed=2024):
    """Run every check on every built-in instance; deterministic output order."""
    verdicts = []
    for inst in sorted(builtin_instances(), key=lambda i: i.name):
        for tid in sorted(ALL_CHECKS):
            rng = random.Random(seed)
            verdicts.append(ALL_CHECKS[tid](inst, rng))
    for ring in builtin_rings():
        rng = random.Random(seed)
        verdicts.append(check_min_mult_equivalences(ring, rng))
    verdicts.sort(key=lambda v: (v.instance, v.theorem_id))
    return verdicts
