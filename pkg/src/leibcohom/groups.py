"""Finite groups, actions on Leibniz algebras, and the orbit category.

Groups are multiplication tables on 0..n-1 with 0 the identity.  Desk
scale (|G| <= 24) keeps brute-force subgroup enumeration cheap.
"""

from __future__ import annotations

from itertools import permutations

from .linalg import Matrix, kernel_basis, rank, solve_matrix, vec_sub, vec_is_zero
from .leibniz import LeibnizAlgebra, AlgebraMorphism, check_morphism
from .verdict import Verdict


class FiniteGroup:
    def __init__(self, table):
        n = len(table)
        assert all(len(row) == n for row in table)
        self.order = n
        self.table = [list(row) for row in table]
        self.inverse = [None] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == 0 and self.table[b][a] == 0:
                    self.inverse[a] = b
                    break

    def validate(self):
        n = self.order
        violations = []
        for a in range(n):
            if self.table[0][a] != a or self.table[a][0] != a:
                violations.append(("identity", a))
        for a in range(n):
            if self.inverse[a] is None:
                violations.append(("inverse", a))
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        violations.append(("associativity", (a, b, c)))
        return Verdict(not violations, violations)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    @classmethod
    def trivial(cls):
        return cls([[0]])

    @classmethod
    def cyclic(cls, n):
        return cls([[(a + b) % n for b in range(n)] for a in range(n)])

    @classmethod
    def symmetric(cls, n):
        """S_n as a multiplication table; identity permutation is element 0."""
        elems = sorted(permutations(range(n)))
        assert elems[0] == tuple(range(n))
        idx = {p: i for i, p in enumerate(elems)}
        # product = apply right first, then left
        table = [[idx[tuple(p[q[i]] for i in range(n))] for q in elems]
                 for p in elems]
        return cls(table), elems


def subgroup_closure(G, gens):
    elems = {0}
    frontier = set(gens) | {0}
    while frontier:
        new = set()
        for a in frontier:
            for b in elems | frontier:
                new.add(G.mul(a, b))
                new.add(G.mul(b, a))
            new.add(G.inv(a))
        elems |= frontier
        frontier = new - elems
    return frozenset(elems)


def enumerate_subgroups(G):
    """All subgroups, sorted by (size, sorted element tuple)."""
    found = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for H in frontier:
            for x in range(G.order):
                if x in H:
                    continue
                K = subgroup_closure(G, H | {x})
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


class OrbitCategory:
    """Objects G/H for all subgroups H; morphisms are G-maps G/H -> G/K.

    A morphism is the triple (H, K, g) with g^{-1} H g <= K, identified
    with the coset gK; the stored representative is min(gK).
    """

    def __init__(self, group):
        self.group = group
        self.subgroups = enumerate_subgroups(group)
        self.morphisms = []
        for H in self.subgroups:
            for K in self.subgroups:
                seen = set()
                for g in range(group.order):
                    if not all(group.mul(group.mul(group.inv(g), h), g) in K
                               for h in H):
                        continue
                    coset = frozenset(group.mul(g, k) for k in K)
                    if coset in seen:
                        continue
                    seen.add(coset)
                    self.morphisms.append((H, K, min(coset)))
        self._morph_set = set(self.morphisms)

    def cosets(self, H):
        """Left cosets of H, each as a frozenset, sorted by least element."""
        seen = {}
        for g in range(self.group.order):
            c = frozenset(self.group.mul(g, h) for h in H)
            m = min(c)
            seen[m] = c
        return [seen[m] for m in sorted(seen)]

    def compose(self, m1, m2):
        """Composite of m1: G/H -> G/K and m2: G/K -> G/L, as a stored triple."""
        H1, K1, g1 = m1
        K2, L2, g2 = m2
        assert K1 == K2
        g = self.group.mul(g1, g2)
        coset = frozenset(self.group.mul(g, l) for l in L2)
        triple = (H1, L2, min(coset))
        assert triple in self._morph_set
        return triple


def orbit_category(G):
    return OrbitCategory(G)


class GroupAction:
    """Action of a finite group on a Leibniz algebra by one matrix per element."""

    def __init__(self, group, algebra, matrices):
        assert len(matrices) == group.order
        self.group = group
        self.algebra = algebra
        self.matrices = matrices

    def psi(self, g):
        return self.matrices[g]


def validate_action(action):
    G, alg = action.group, action.algebra
    f = alg.field
    violations = []
    if action.psi(0) != Matrix.identity(f, alg.dim):
        violations.append(("identity", 0, None))
    for g1 in range(G.order):
        for g2 in range(G.order):
            if action.psi(g1).mul(action.psi(g2)) != action.psi(G.mul(g1, g2)):
                violations.append(("homomorphism", (g1, g2), None))
    for g in range(G.order):
        if rank(action.psi(g)) != alg.dim:
            violations.append(("invertibility", g, None))
    for g in range(G.order):
        psi = action.psi(g)
        for i in range(alg.dim):
            for j in range(alg.dim):
                lhs = psi.apply(alg.basis_bracket(i, j))
                rhs = alg.bracket(psi.column(i), psi.column(j))
                residual = vec_sub(f, lhs, rhs)
                if not vec_is_zero(f, residual):
                    violations.append(("bracket_equivariance", (g, i, j), residual))
    return Verdict(not violations, violations)


class FixedSubalgebra:
    def __init__(self, subgroup, inclusion, algebra):
        self.subgroup = subgroup
        self.inclusion = inclusion     # dim(g) x dim(g^H), columns = basis
        self.algebra = algebra         # induced Leibniz algebra on g^H

    @property
    def dim(self):
        return self.algebra.dim


def fixed_subalgebra(action, H):
    """Basis and induced bracket of g^H = common kernel of psi_h - I."""
    alg = action.algebra
    f = alg.field
    m = alg.dim
    ident = Matrix.identity(f, m)
    stacked = [action.psi(h).sub(ident) for h in sorted(H) if h != 0]
    if stacked:
        basis = kernel_basis(Matrix.vstack(f, stacked))
    else:
        basis = [ident.column(i) for i in range(m)]
    inclusion = Matrix.from_columns(f, basis, nrows=m)
    # induced structure constants: brackets of basis columns, expressed in
    # the basis; closure failure would contradict a validated action
    structure = []
    for u in basis:
        row = []
        for v in basis:
            w = alg.bracket(u, v)
            x = solve_matrix(inclusion, Matrix.from_columns(f, [w], nrows=m))
            if x is None:
                raise AssertionError(
                    f"fixed-point set not closed under bracket, witness {w}")
            row.append(x.column(0))
        structure.append(row)
    sub = LeibnizAlgebra(f, len(basis), structure) if basis else \
        LeibnizAlgebra.zero_bracket(f, 0)
    return FixedSubalgebra(H, inclusion, sub)


def restriction_map(action, morphism, fixed):
    """psi_g restricted to g^K -> g^H, in the chosen fixed-subalgebra bases.

    ``fixed`` maps each subgroup to its FixedSubalgebra.  Returns an
    AlgebraMorphism from fixed[K].algebra to fixed[H].algebra.
    """
    H, K, g = morphism
    fH, fK = fixed[H], fixed[K]
    f = action.algebra.field
    image = action.psi(g).mul(fK.inclusion)
    mat = solve_matrix(fH.inclusion, image)
    if mat is None:
        raise AssertionError(
            f"psi_{g} does not map the {sorted(K)}-fixed set into the "
            f"{sorted(H)}-fixed set; invalid morphism triple")
    phi = AlgebraMorphism(fK.algebra, fH.algebra, mat)
    assert check_morphism(phi).ok
    return phi
