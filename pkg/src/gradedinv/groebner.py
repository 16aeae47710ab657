"""Buchberger engine and the ideal-theoretic toolkit.

Reduced Groebner bases with normal pair selection and Gebauer-Moeller
pruning, multivariate division, elimination, colon ideals, saturation,
intersections, and kernels of graded ring maps via graph ideals.
"""

from .core import (
    DEGREVLEX,
    GradedPolyRing,
    GradedQuotientPresentation,
    Polynomial,
    RingMismatchError,
    elimination_order,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class GroebnerBasis:
    """A reduced Groebner basis, sorted by decreasing lead monomial."""

    def __init__(self, generators, order, reduced=True):
        self.generators = tuple(generators)
        self.order = order
        self.reduced = reduced
        self._leads = tuple(g.lead(order)[0] for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    @property
    def lead_monomials(self):
        return self._leads

    def __repr__(self):
        return "GroebnerBasis(%s)" % (", ".join(map(repr, self.generators)))


def _sugarless_reduce(f, basis, leads, order):
    """Full remainder of f on division by basis (lead monomials precomputed)."""
    ring = f.ring
    fld = ring.field
    remainder = {}
    work = dict(f.terms)
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for g, lm in zip(basis, leads):
            q = mono_div(m, lm)
            if q is not None:
                lc = g.terms[lm]
                factor = fld.div(c, lc)
                for gm, gc in g.terms.items():
                    if gm == lm:
                        continue
                    t = mono_mul(gm, q)
                    s = fld.sub(work.get(t, fld.zero()), fld.mul(factor, gc))
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder)


def normal_form(f, gb):
    """Remainder of f modulo gb; no remainder term is divisible by a lead."""
    return _sugarless_reduce(f, gb.generators, gb.lead_monomials, gb.order)


def _spoly(f, g, order):
    lmf, lcf = f.lead(order)
    lmg, lcg = g.lead(order)
    lcm = mono_lcm(lmf, lmg)
    fld = f.ring.field
    a = f.mul_term(mono_div(lcm, lmf), fld.inv(lcf))
    b = g.mul_term(mono_div(lcm, lmg), fld.inv(lcg))
    return a - b


def _update_pairs(G, leads, P, j, order):
    """Gebauer-Moeller update after appending generator j."""
    lmf = leads[j]
    P = {
        (a, b)
        for (a, b) in P
        if not mono_divides(lmf, mono_lcm(leads[a], leads[b]))
        or mono_lcm(leads[a], lmf) == mono_lcm(leads[a], leads[b])
        or mono_lcm(leads[b], lmf) == mono_lcm(leads[a], leads[b])
    }
    by_lcm = {}
    for i in range(j):
        by_lcm.setdefault(mono_lcm(leads[i], lmf), []).append(i)
    kept_lcms = []
    for L in sorted(by_lcm, key=order.key):
        if not any(mono_divides(L2, L) for L2 in kept_lcms):
            kept_lcms.append(L)
    for L in kept_lcms:
        # Buchberger's first criterion: skip coprime lead pairs.
        if any(mono_mul(leads[i], lmf) == L for i in by_lcm[L]):
            continue
        P.add((min(by_lcm[L]), j))
    return P


def _interreduce(G, order):
    """Minimalize and autoreduce a Groebner basis; output monic, sorted."""
    G = [g for g in G if not g.is_zero()]
    G.sort(key=lambda g: order.key(g.lead(order)[0]))
    minimal = []
    for g in G:
        lm = g.lead(order)[0]
        if not any(mono_divides(h.lead(order)[0], lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        leads = [h.lead(order)[0] for h in others]
        r = _sugarless_reduce(g, others, leads, order)
        reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.lead(order)[0]), reverse=True)
    return reduced


def groebner_basis(generators, order=DEGREVLEX):
    """Reduced Groebner basis of the ideal the generators span."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        ring = generators[0].ring if generators else None
        if ring is None:
            raise ValueError("cannot infer the ring of an empty generator list")
        return GroebnerBasis((), order)
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError("generators from different rings")

    G = []
    leads = []
    P = set()
    for f in gens:
        G.append(f.monic(order))
        leads.append(f.lead(order)[0])
        P = _update_pairs(G, leads, P, len(G) - 1, order)

    while P:
        # normal strategy: smallest lcm first
        pair = min(P, key=lambda p: order.key(mono_lcm(leads[p[0]], leads[p[1]])))
        P.discard(pair)
        i, j = pair
        s = _spoly(G[i], G[j], order)
        r = _sugarless_reduce(s, G, leads, order)
        if r.is_zero():
            continue
        G.append(r.monic(order))
        leads.append(r.lead(order)[0])
        P = _update_pairs(G, leads, P, len(G) - 1, order)

    return GroebnerBasis(_interreduce(G, order), order)


def ideal_membership(f, gb_or_gens, order=DEGREVLEX):
    gb = gb_or_gens
    if not isinstance(gb, GroebnerBasis):
        gb = groebner_basis(list(gb_or_gens), order)
    return normal_form(f, gb).is_zero()


def ideals_equal(gens_a, gens_b, order=DEGREVLEX):
    """Ideal equality via reduced-basis uniqueness."""
    gb_a = gens_a if isinstance(gens_a, GroebnerBasis) else groebner_basis(list(gens_a), order)
    gb_b = gens_b if isinstance(gens_b, GroebnerBasis) else groebner_basis(list(gens_b), order)
    return list(gb_a.generators) == list(gb_b.generators)


def lead_ideal_monomials(presentation_or_gens, order=DEGREVLEX):
    """Minimal generators of the lead-term ideal."""
    if isinstance(presentation_or_gens, GradedQuotientPresentation):
        gens = list(presentation_or_gens.ideal_gens)
    else:
        gens = list(presentation_or_gens)
    if not gens:
        return []
    gb = groebner_basis(gens, order)
    return list(gb.lead_monomials)


# ---------------------------------------------------------------------------
# Ring extension / restriction plumbing used by elimination tricks.


def _extended_ring(ring, extra_names, extra_weights):
    return GradedPolyRing(
        ring.field, tuple(extra_names) + ring.names, tuple(extra_weights) + ring.weights
    )


def _inject(poly, big_ring, offset):
    """View poly in big_ring, its variables shifted right by offset."""
    pad = (0,) * offset
    tail = (0,) * (big_ring.nvars - offset - poly.ring.nvars)
    return Polynomial(
        big_ring, {pad + m + tail: c for m, c in poly.terms.items()}
    )


def _restrict(poly, small_ring, offset):
    """Drop the first `offset` variables; caller guarantees they are absent."""
    out = {}
    for m, c in poly.terms.items():
        assert all(e == 0 for e in m[:offset])
        out[m[offset:]] = c
    return Polynomial(small_ring, out)


def elimination_ideal(generators, k, order=None):
    """Generators of I ∩ k[x_{k+1}, ...]: drop the first k variables."""
    gens = [g for g in generators if not g.is_zero()]
    if not gens:
        return []
    if order is None:
        order = elimination_order(k)
    gb = groebner_basis(gens, order)
    return [g for g in gb if all(e == 0 for m in g.terms for e in m[:k])]


def ideal_quotient(I_gens, f, order=DEGREVLEX):
    """(I : f), via first syzygy coordinates of (f, g_1, ..., g_s)."""
    from .modules import syzygy_module, vector

    if isinstance(f, Polynomial) and f.is_zero():
        raise ZeroDivisionError("colon by the zero polynomial")
    I_gens = [g for g in I_gens if not g.is_zero()]
    ring = f.ring
    vecs = [vector(ring, 1, {0: f})] + [vector(ring, 1, {0: g}) for g in I_gens]
    syz = syzygy_module(vecs, 1)
    out = []
    for s in syz:
        a0 = s.component(0)
        if not a0.is_zero():
            out.append(a0)
    if not out:
        out = []
    gb = groebner_basis(out, order) if out else None
    return list(gb) if gb else []


def ideal_quotient_ideal(I_gens, J_gens, order=DEGREVLEX):
    """(I : J) = intersection of (I : g) over generators g of J."""
    J_gens = [g for g in J_gens if not g.is_zero()]
    if not J_gens:
        raise ZeroDivisionError("colon by the zero ideal")
    result = None
    for g in J_gens:
        q = ideal_quotient(I_gens, g, order)
        result = q if result is None else intersection(result, q, order)
    return list(groebner_basis(result, order)) if result else []


def saturation(I_gens, J_gens, order=DEGREVLEX):
    """I : J^∞ by iterating the colon until the ideal stabilizes."""
    current = list(groebner_basis(list(I_gens), order)) if list(I_gens) else []
    while True:
        nxt = ideal_quotient_ideal(current if current else I_gens, J_gens, order)
        nxt = list(groebner_basis(nxt, order)) if nxt else []
        if nxt == current:
            return current
        current = nxt


def intersection(I_gens, J_gens, order=DEGREVLEX):
    """I ∩ J via syzygies of the row (f_1..f_s, g_1..g_t)."""
    from .modules import syzygy_module, vector

    I_gens = [g for g in I_gens if not g.is_zero()]
    J_gens = [g for g in J_gens if not g.is_zero()]
    if not I_gens or not J_gens:
        return []
    ring = I_gens[0].ring
    vecs = [vector(ring, 1, {0: g}) for g in I_gens + J_gens]
    syz = syzygy_module(vecs, 1)
    s = len(I_gens)
    out = []
    for z in syz:
        h = ring.zero()
        for i in range(s):
            h = h + z.component(i) * I_gens[i]
        if not h.is_zero():
            out.append(h)
    return list(groebner_basis(out, order)) if out else []


# ---------------------------------------------------------------------------
# Graded ring maps and their kernels.


class GradedRingMap:
    """A homogeneous map between graded quotient presentations.

    images[i] is the target polynomial the i-th source variable maps to;
    its degree must equal the weight of that variable.
    """

    def __init__(self, source, target, images, check=True):
        images = tuple(images)
        if len(images) != source.ring.nvars:
            raise ValueError("one image per source variable required")
        self.source = source
        self.target = target
        self.images = images
        if check:
            for name, w, img in zip(source.ring.names, source.ring.weights, images):
                if img.ring != target.ring:
                    raise RingMismatchError("image of %s lies outside the target ring" % name)
                if img.is_zero():
                    continue
                if not img.is_homogeneous() or img.degree() != w:
                    raise ValueError(
                        "image of %s must be homogeneous of degree %d" % (name, w)
                    )
            if source.ideal_gens and not self.is_well_defined():
                raise ValueError("source relations do not map into the target ideal")

    def apply(self, f):
        """Image of a source polynomial, reduced modulo the target ideal."""
        if f.ring != self.source.ring:
            raise RingMismatchError("argument is not a source polynomial")
        tgt = self.target.ring
        out = tgt.zero()
        for m, c in f.terms.items():
            term = tgt.const(c)
            for img, e in zip(self.images, m):
                if e:
                    term = term * img**e
            out = out + term
        if self.target.ideal_gens:
            gb = groebner_basis(list(self.target.ideal_gens), DEGREVLEX)
            out = normal_form(out, gb)
        return out

    def is_well_defined(self):
        if not self.target.ideal_gens:
            return all(self.apply(g).is_zero() for g in self.source.ideal_gens)
        return all(self.apply(g).is_zero() for g in self.source.ideal_gens)

    def graph_ring(self):
        """k[target vars, source vars] with target variables first."""
        src, tgt = self.source.ring, self.target.ring
        names = tuple("T_" + n for n in tgt.names) + tuple("S_" + n for n in src.names)
        weights = tgt.weights + src.weights
        return GradedPolyRing(src.field, names, weights)

    def graph_ideal(self):
        """Target relations plus (source var - its image), in the graph ring."""
        big = self.graph_ring()
        tn = self.target.ring.nvars
        sn = self.source.ring.nvars
        gens = [_inject(g, big, 0) for g in self.target.ideal_gens]
        for i, img in enumerate(self.images):
            e = [0] * big.nvars
            e[tn + i] = 1
            var_i = big.monomial(tuple(e))
            gens.append(var_i - _inject(img, big, 0))
        return big, gens, tn, sn


def ring_map_kernel(phi):
    """Homogeneous generators of ker(phi) in the source polynomial ring."""
    big, gens, tn, sn = phi.graph_ideal()
    elim = elimination_ideal(gens, tn)
    src = phi.source.ring
    out = [_restrict(g, src, tn) for g in elim]
    for g in out:
        if not g.is_homogeneous():
            raise ValueError("kernel generator %r is not homogeneous" % g)
    return out


def contraction(phi, target_ideal_gens):
    """phi^{-1}(J + target ideal) as an ideal of the source polynomial ring."""
    big, gens, tn, sn = phi.graph_ideal()
    gens = gens + [_inject(g, big, 0) for g in target_ideal_gens]
    elim = elimination_ideal(gens, tn)
    return [_restrict(g, phi.source.ring, tn) for g in elim]
