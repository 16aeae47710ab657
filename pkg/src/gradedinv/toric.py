"""Exponent lattices of monomial subalgebras and inseparable degrees.

A monomial algebra k[x^{a_1}, ..., x^{a_s}] determines the subgroup of Z^r
generated by the exponent vectors inside the quotient-field torus.  Field
degrees of monomial extensions are lattice indices, and the inseparable
degree of Quot(A) in Quot(B) is the stabilized index [L_B : L_A + p^e L_B].
"""

from fractions import Fraction


def _hnf(rows):
    """Row-style Hermite normal form over Z; returns the nonzero rows."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    col = 0
    while rows and col < ncols:
        pivots = [r for r in rows if r[col]]
        if not pivots:
            col += 1
            continue
        # Euclid on the pivot column
        while True:
            pivots = [r for r in rows if r[col]]
            if len(pivots) == 1:
                break
            pivots.sort(key=lambda r: abs(r[col]))
            small = pivots[0]
            for r in pivots[1:]:
                q = r[col] // small[col]
                for j in range(ncols):
                    r[j] -= q * small[j]
            rows = [r for r in rows if any(r)]
        pivot = pivots[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        rows = [r for r in rows if r is not pivots[0] and any(r)]
        out.append(pivot)
        col += 1
    # reduce entries above each pivot
    for i in reversed(range(len(out))):
        pcol = next(j for j, x in enumerate(out[i]) if x)
        for k in range(i):
            q = out[k][pcol] // out[i][pcol]
            if q:
                for j in range(len(out[i])):
                    out[k][j] -= q * out[i][j]
    return [tuple(r) for r in out]


class ExponentLattice:
    """A sublattice of Z^rank, canonicalized by Hermite normal form."""

    def __init__(self, generators, ambient_rank):
        self.ambient_rank = ambient_rank
        for g in generators:
            if len(g) != ambient_rank:
                raise ValueError("generator length differs from the ambient rank")
        self.basis = tuple(_hnf(list(generators)))

    @property
    def rank(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, ExponentLattice)
            and self.ambient_rank == other.ambient_rank
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))

    def contains(self, vector):
        """Membership via exact solving against the HNF basis."""
        coords = _solve_integer(self.basis, vector)
        return coords is not None

    def is_sublattice_of(self, other):
        return all(other.contains(b) for b in self.basis)

    def sum(self, other):
        return ExponentLattice(list(self.basis) + list(other.basis), self.ambient_rank)

    def scaled(self, k):
        return ExponentLattice([tuple(k * x for x in b) for b in self.basis], self.ambient_rank)

    def __repr__(self):
        return "ExponentLattice(basis=%s, ambient_rank=%d)" % (
            list(self.basis),
            self.ambient_rank,
        )


def _solve_rational(basis, vector):
    """Coordinates of vector in the given row basis, or None (exact, Fractions)."""
    if not basis:
        return None if any(vector) else []
    rows = [list(map(Fraction, b)) + [Fraction(0)] * 0 for b in basis]
    n = len(basis[0])
    # solve x . basis = vector by Gaussian elimination on the transposed system
    aug = [[rows[i][j] for i in range(len(rows))] + [Fraction(vector[j])] for j in range(n)]
    piv_cols = []
    r = 0
    for c in range(len(rows)):
        pr = next((i for i in range(r, n) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    sol = [Fraction(0)] * len(rows)
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1]
    # consistency
    for j in range(n):
        acc = sum(sol[i] * Fraction(basis[i][j]) for i in range(len(basis)))
        if acc != vector[j]:
            return None
    return sol


def _solve_integer(basis, vector):
    sol = _solve_rational(basis, vector)
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]


def lattice_of_monomial_algebra(generators, ambient_rank=None):
    """Exponent lattice of k[x^{g_1}, ..., x^{g_s}] in the torus."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("need at least one monomial generator")
    if any(not any(g) for g in gens):
        raise ValueError("monomial generators must be nonzero")
    rank = ambient_rank if ambient_rank is not None else len(gens[0])
    return ExponentLattice(gens, rank)


def extension_index(L_A, L_B):
    """[L_B : L_A] for full-rank sublattices, via the change-of-basis determinant."""
    if L_A.ambient_rank != L_B.ambient_rank:
        raise ValueError("lattices live in different ambient ranks")
    if L_A.rank != L_B.rank:
        raise ValueError("lattices have different ranks; the index is infinite")
    if not L_A.is_sublattice_of(L_B):
        raise ValueError("first lattice is not contained in the second")
    # rows of L_A in coordinates of L_B's basis
    M = [_solve_integer(L_B.basis, a) for a in L_A.basis]
    det = _int_det([row[:] for row in M])
    return abs(det)


def _int_det(m):
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    m = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c]), None)
        if pr is None:
            return 0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    assert det.denominator == 1
    return int(det)


def inseparable_degree(L_A, L_B, p):
    """Stabilized index [L_B : L_A + p^e L_B]; always a power of p.

    Realizes the separable-closure identity K_sep = K.L^{p^e}: the lattice of
    K_sep is L_A + p^e L_B once e is large enough for the index to stop
    growing.
    """
    if not L_A.is_sublattice_of(L_B):
        raise ValueError("first lattice must be contained in the second")
    total = extension_index(L_A, L_B)
    vp = 0
    t = total
    while t % p == 0:
        t //= p
        vp += 1
    prev = None
    for e in range(vp + 2):
        mixed = L_A.sum(L_B.scaled(p**e))
        idx = extension_index(mixed, L_B)
        if idx == prev:
            return idx
        prev = idx
    raise AssertionError("inseparable degree failed to stabilize by e = v_p(index) + 1")
