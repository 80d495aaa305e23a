"""Leibniz algebras given by structure constants.

The bracket satisfies [x,[y,z]] = [[x,y],z] - [[x,z],y]; no antisymmetry
is assumed.  Indices are 0-based internally (file formats are 1-based).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, vec_is_zero, vec_add, vec_sub, unit_vector
from .verdict import Verdict


class LeibnizAlgebra:
    """Finite-dimensional algebra over an exact field.

    ``structure[i][j]`` is the coordinate vector of [e_i, e_j].
    """

    def __init__(self, field, dim, structure):
        assert len(structure) == dim and all(len(row) == dim for row in structure)
        self.field = field
        self.dim = dim
        self.structure = [[[field.coerce(x) for x in structure[i][j]]
                           for j in range(dim)] for i in range(dim)]

    @classmethod
    def zero_bracket(cls, field, dim):
        z = field.zero()
        return cls(field, dim, [[[z] * dim for _ in range(dim)]
                                for _ in range(dim)])

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        f = self.field
        z = f.zero()
        out = [z] * self.dim
        for i in range(self.dim):
            if x[i] == z:
                continue
            for j in range(self.dim):
                if y[j] == z:
                    continue
                c = f.mul(x[i], y[j])
                sij = self.structure[i][j]
                for k in range(self.dim):
                    if sij[k] != z:
                        out[k] = f.add(out[k], f.mul(c, sij[k]))
        return out

    def basis_bracket(self, i, j):
        return list(self.structure[i][j])

    def basis_vector(self, i):
        return unit_vector(self.field, self.dim, i)


def check_leibniz_identity(alg):
    """Verify [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] - [[e_i,e_k],e_j] on all triples."""
    f = alg.field
    violations = []
    for i in range(alg.dim):
        ei = alg.basis_vector(i)
        for j in range(alg.dim):
            ej = alg.basis_vector(j)
            for k in range(alg.dim):
                ek = alg.basis_vector(k)
                lhs = alg.bracket(ei, alg.bracket(ej, ek))
                rhs = vec_sub(f, alg.bracket(alg.bracket(ei, ej), ek),
                              alg.bracket(alg.bracket(ei, ek), ej))
                residual = vec_sub(f, lhs, rhs)
                if not vec_is_zero(f, residual):
                    violations.append(((i, j, k), residual))
    return Verdict(not violations, violations)


@dataclass
class AlgebraMorphism:
    source: LeibnizAlgebra
    target: LeibnizAlgebra
    matrix: Matrix   # columns = images of source basis vectors

    def apply(self, x):
        return self.matrix.apply(x)

    def compose(self, other):
        """self after other (other.target must be self.source)."""
        assert other.target is self.source or other.target.dim == self.source.dim
        return AlgebraMorphism(other.source, self.target,
                               self.matrix.mul(other.matrix))


def check_morphism(phi):
    """phi([e_i,e_j]) = [phi e_i, phi e_j] on all basis pairs."""
    src, tgt = phi.source, phi.target
    if phi.matrix.rows != tgt.dim or phi.matrix.cols != src.dim:
        raise ValueError("matrix shape does not match algebra dimensions")
    f = tgt.field
    violations = []
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = phi.apply(src.basis_bracket(i, j))
            rhs = tgt.bracket(phi.matrix.column(i), phi.matrix.column(j))
            residual = vec_sub(f, lhs, rhs)
            if not vec_is_zero(f, residual):
                violations.append(((i, j), residual))
    return Verdict(not violations, violations)


class DifferentialLieAlgebra:
    """Lie algebra with a square-zero derivation d."""

    def __init__(self, field, dim, structure, differential):
        self.lie = LeibnizAlgebra(field, dim, structure)
        self.field = field
        self.dim = dim
        self.differential = differential

    def validate(self):
        f = self.field
        violations = []
        # antisymmetry
        for i in range(self.dim):
            for j in range(self.dim):
                s = vec_add(f, self.lie.basis_bracket(i, j),
                            self.lie.basis_bracket(j, i))
                if not vec_is_zero(f, s):
                    violations.append(("antisymmetry", (i, j), s))
        # Jacobi, phrased as the Leibniz identity (equivalent given antisymmetry)
        jac = check_leibniz_identity(self.lie)
        for triple, residual in jac.violations:
            violations.append(("jacobi", triple, residual))
        # d^2 = 0
        d2 = self.differential.mul(self.differential)
        if not d2.is_zero():
            violations.append(("d_squared", None, d2.data))
        # derivation
        d = self.differential
        for i in range(self.dim):
            for j in range(self.dim):
                lhs = d.apply(self.lie.basis_bracket(i, j))
                rhs = vec_add(f,
                              self.lie.bracket(d.column(i), self.lie.basis_vector(j)),
                              self.lie.bracket(self.lie.basis_vector(i), d.column(j)))
                residual = vec_sub(f, lhs, rhs)
                if not vec_is_zero(f, residual):
                    violations.append(("derivation", (i, j), residual))
        return Verdict(not violations, violations)


def derived_bracket_algebra(dgla):
    """Leibniz algebra with [x,y]_d := [x, dy]."""
    verdict = dgla.validate()
    if not verdict.ok:
        raise ValueError(f"invalid differential Lie algebra: {verdict.violations[0]}")
    d = dgla.differential
    structure = [[dgla.lie.bracket(dgla.lie.basis_vector(i), d.column(j))
                  for j in range(dgla.dim)] for i in range(dgla.dim)]
    return LeibnizAlgebra(dgla.field, dgla.dim, structure)


def _word_index_map(dimV, N):
    """Basis words of length 1..N in length-lexicographic order."""
    words = []
    for n in range(1, N + 1):
        stack = [()]
        level = [()]
        for _ in range(n):
            level = [w + (a,) for w in level for a in range(dimV)]
        words.extend(level)
    return words, {w: i for i, w in enumerate(words)}


def free_leibniz_truncated(dimV, N, field=None):
    """Quotient of the free Leibniz algebra by words of length > N.

    Basis words of length 1..N; a word (a_1,...,a_n) stands for the
    left-iterated bracket [...[[v_{a_1},v_{a_2}],v_{a_3}],...,v_{a_n}].
    Returns (algebra, word list).
    """
    if field is None:
        from .linalg import QQ
        field = QQ
    if dimV < 1 or N < 1:
        raise ValueError("dimV and N must be >= 1")
    words, index = _word_index_map(dimV, N)

    cache = {}

    def wb(x, y):
        """Bracket of basis words as an int-coefficient dict on words."""
        key = (x, y)
        if key in cache:
            return cache[key]
        if len(y) == 1:
            w = x + y
            out = {w: 1} if len(w) <= N else {}
        else:
            head, last = y[:-1], y[-1:]
            # [x, [head, v]] = [[x, head], v] - [[x, v], head]
            out = {}
            for w, c in wb(x, head).items():
                for w2, c2 in wb(w, last).items():
                    out[w2] = out.get(w2, 0) + c * c2
            for w, c in wb(x, last).items():
                for w2, c2 in wb(w, head).items():
                    out[w2] = out.get(w2, 0) - c * c2
            out = {w: c for w, c in out.items() if c != 0}
        cache[key] = out
        return out

    dim = len(words)
    z = field.zero()
    structure = []
    for wi in words:
        row = []
        for wj in words:
            v = [z] * dim
            for w, c in wb(wi, wj).items():
                v[index[w]] = field.coerce(c)
            row.append(v)
        structure.append(row)
    return LeibnizAlgebra(field, dim, structure), words
