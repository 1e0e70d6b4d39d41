"""Information measures of a presentation.

The discrete data of a resolution (length, dimensions, filtration degrees)
carries entropy ln of each number; the continuous data is the matrix of each
relation map in canonical bases, counted one complex parameter per entry.
What may be discounted is the freedom to move the presentation by a
Bogoliubov automorphism: a tuple of linear maps, one per level, that lifts to
the free-algebra chain. Its Lie algebra is cut out by an exact linear system,
and the score subtracts its dimension from the raw parameter count.
"""

import math
from dataclasses import dataclass

from .freealg import (
    DEFAULT_WORD_CAP,
    FreeElement,
    derivation,
    enumerate_words,
    filtration_dim,
)
from .linalg import ScalarMatrix, sparse_kernel_basis, sparse_rref
from .matrixrep import evaluation_rows, generated_dimension
from .scalars import ONE, ZERO


def entropy_numbers(res):
    """ln of every number in the discrete data, summed, with the breakdown.

    Requires every dimension and degree to be positive (log of zero is a
    domain error, not a quiet -inf).
    """
    res.require_valid()
    if any(d < 1 for d in res.dims):
        raise ValueError("entropy undefined: every dimension must be >= 1")
    if any(p < 1 for p in res.degrees):
        raise ValueError("entropy undefined: every filtration degree must be >= 1")
    breakdown = {
        "ln_length": math.log(res.length),
        "ln_dims": [math.log(d) for d in res.dims],
        "ln_degrees": [math.log(p) for p in res.degrees],
    }
    total = math.fsum(
        [breakdown["ln_length"], *breakdown["ln_dims"], *breakdown["ln_degrees"]]
    )
    return total, breakdown


def raw_parameter_count(res):
    """Complex parameters needed to write every relation map in coordinates.

    Level j contributes d_j rows times the dimension of the degree-bounded
    word space it maps into; the generator embedding itself costs nothing.
    """
    res.require_valid()
    total = 0
    for j in range(2, res.length + 1):
        d_here = res.dims[j - 1]
        d_prev = res.dims[j - 2]
        total += d_here * filtration_dim(d_prev, res.degrees[j - 2])
    return total


@dataclass(frozen=True)
class BogoliubovSolution:
    """Basis of the automorphism Lie algebra: one (X_1..X_N) tuple per dimension."""

    dimension: int
    basis: tuple  # tuples of ScalarMatrix, level 1..N

    def to_json_doc(self):
        from .linalg import matrix_to_json

        return {
            "dimension": self.dimension,
            "basis": [[matrix_to_json(x) for x in tup] for tup in self.basis],
        }


def _level_offsets(dims):
    # Unknowns are ordered level N down to level 1 (row-major inside each
    # level): the per-level blocks of the lifting system then hit disjoint
    # leading columns, which keeps elimination fill-in local.
    offsets = {}
    off = 0
    for j in range(len(dims), 0, -1):
        offsets[j] = off
        off += dims[j - 1] ** 2
    return offsets, off


def _assemble_lifting_system(res, cap):
    dims = res.dims
    offsets, ncols = _level_offsets(dims)
    rows = []
    for j in range(2, res.length + 1):
        d_prev = dims[j - 2]
        d_here = dims[j - 1]
        level = res.relation_maps[j - 2]
        basis = enumerate_words(d_prev, res.degrees[j - 2], cap)
        off_prev = offsets[j - 1]
        off_here = offsets[j]
        for k in range(d_here):
            by_word = {}

            def bump(word_idx, col, value):
                row = by_word.setdefault(word_idx, {})
                cur = row.get(col)
                nv = value if cur is None else cur + value
                if nv.is_zero():
                    row.pop(col, None)
                else:
                    row[col] = nv

            # derivation of the k-th relation by the unknown X_{j-1}
            for w, c in level[k].terms.items():
                for pos, letter in enumerate(w):
                    nw_pre = w[:pos]
                    nw_post = w[pos + 1 :]
                    for q in range(d_prev):
                        col = off_prev + q * d_prev + letter
                        bump(basis.index_of(nw_pre + (q,) + nw_post), col, c)
            # minus the unknown recombination sum_l X_{lk} * relation_l
            for l in range(d_here):
                col = off_here + l * d_here + k
                for w, c in level[l].terms.items():
                    bump(basis.index_of(w), col, -c)
            for word_idx in sorted(by_word):
                if by_word[word_idx]:
                    rows.append(by_word[word_idx])
    return rows, ncols, offsets


def bogoliubov_dimension(res, cap=DEFAULT_WORD_CAP):
    """Solve the lifting system exactly and return its solution space.

    Unknowns are one square matrix X_j per level; the equations demand, for
    every relation, that the derivation by X_{j-1} equals the X_j-recombination
    of the relations at that level. The kernel of this system is the Lie
    algebra of liftable one-parameter automorphism families.
    """
    res.require_valid()
    rows, ncols, offsets = _assemble_lifting_system(res, cap)
    pivots = sparse_rref(rows, ncols)
    kernel = sparse_kernel_basis(rows, pivots, ncols)
    dims = res.dims
    basis_tuples = []
    for vec in kernel:
        tup = []
        for j in range(1, res.length + 1):
            d_j = dims[j - 1]
            off = offsets[j]
            entries = [
                vec.get(off + r * d_j + c, ZERO)
                for r in range(d_j)
                for c in range(d_j)
            ]
            tup.append(ScalarMatrix(d_j, d_j, entries))
        basis_tuples.append(tuple(tup))
    return BogoliubovSolution(dimension=len(kernel), basis=tuple(basis_tuples))


def lifting_residuals(res, xs):
    """Residual free elements of the lifting equations for a candidate tuple.

    All residuals are zero exactly when (X_1..X_N) solves the system; used to
    re-check reported basis tuples independently of the solver.
    """
    res.require_valid()
    if len(xs) != res.length:
        raise ValueError(f"expected {res.length} matrices, got {len(xs)}")
    residuals = []
    for j in range(2, res.length + 1):
        d_here = res.dims[j - 1]
        level = res.relation_maps[j - 2]
        x_prev = xs[j - 2]
        x_here = xs[j - 1]
        for k in range(d_here):
            lhs = derivation(x_prev, level[k])
            rhs = FreeElement.zero(res.dims[j - 2])
            for l in range(d_here):
                c = x_here.entry(l, k)
                if not c.is_zero():
                    rhs = rhs + level[l].scale(c)
            residuals.append(lhs - rhs)
    return residuals


@dataclass(frozen=True)
class InfoReport:
    s_numbers: float
    raw_params: int
    bogoliubov_dim: int
    score: int
    breakdown: dict

    def to_json_doc(self):
        return {
            "s_numbers": _round9(self.s_numbers),
            "raw_params": self.raw_params,
            "bogoliubov_dim": self.bogoliubov_dim,
            "score": self.score,
            "breakdown": {
                "ln_length": _round9(self.breakdown["ln_length"]),
                "ln_dims": [_round9(v) for v in self.breakdown["ln_dims"]],
                "ln_degrees": [_round9(v) for v in self.breakdown["ln_degrees"]],
            },
        }


def _round9(x):
    # Wire format carries 9 significant digits.
    return float(f"{x:.9g}")


def information_score(res, cap=DEFAULT_WORD_CAP):
    """Assemble entropy, raw parameter count and Bogoliubov dimension.

    score = raw complex parameters minus the automorphism dimension, the
    orbit-dimension count of what actually has to be specified. Negative
    scores (relation-free presentations) are reported as-is.
    """
    s_numbers, breakdown = entropy_numbers(res)
    raw = raw_parameter_count(res)
    bog = bogoliubov_dimension(res, cap).dimension
    return InfoReport(
        s_numbers=s_numbers,
        raw_params=raw,
        bogoliubov_dim=bog,
        score=raw - bog,
        breakdown=breakdown,
    )


@dataclass(frozen=True)
class LowerBoundReport:
    min_generators: int
    min_relation_degree: int
    min_relations_at_degree_2: int
    surjective: bool
    generated_dim: int
    degree1_kernel_dim: int

    def to_json_doc(self):
        return {
            "min_generators": self.min_generators,
            "min_relation_degree": self.min_relation_degree,
            "min_relations_at_degree_2": self.min_relations_at_degree_2,
            "surjective": self.surjective,
            "generated_dim": self.generated_dim,
            "degree1_kernel_dim": self.degree1_kernel_dim,
        }


def _kernel_dim_at(target, degree, cap):
    basis = enumerate_words(target.d, degree, cap)
    rows = evaluation_rows(target, basis)
    return len(basis) - len(sparse_rref(rows, len(basis)))


def _matrix_unit(n, i, j):
    return ScalarMatrix(
        n, n, [ONE if (r, c) == (i, j) else ZERO for r in range(n) for c in range(n)]
    )


def lower_bound_checks(target, cap=DEFAULT_WORD_CAP):
    """Floor values any presentation of M_n must respect.

    For n >= 2 the algebra is noncommutative (checked on an explicit pair of
    matrix units), so one generator cannot suffice and neither can relations
    of word length < 2. The degree-2 relation floor is the kernel dimension
    of the supplied generator images at degree 2.
    """
    n = target.n
    gen_dim, _ = generated_dimension(target, n * n + 1, word_cap=cap)
    surjective = gen_dim == n * n
    deg1_kernel = _kernel_dim_at(target, 1, cap)
    min_rel_2 = _kernel_dim_at(target, 2, cap)
    if n == 1:
        return LowerBoundReport(
            min_generators=1,
            min_relation_degree=1,
            min_relations_at_degree_2=min_rel_2,
            surjective=surjective,
            generated_dim=gen_dim,
            degree1_kernel_dim=deg1_kernel,
        )
    # Witness noncommutativity exactly: E_12 E_21 != E_21 E_12.
    e12 = _matrix_unit(n, 0, 1)
    e21 = _matrix_unit(n, 1, 0)
    assert not (e12 @ e21 - e21 @ e12).is_zero()
    return LowerBoundReport(
        min_generators=2,
        min_relation_degree=2,
        min_relations_at_degree_2=min_rel_2,
        surjective=surjective,
        generated_dim=gen_dim,
        degree1_kernel_dim=deg1_kernel,
    )
