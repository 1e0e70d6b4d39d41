"""Evaluation of free-algebra elements in a matrix algebra target.

A target is M_n together with one n x n image per generator; evaluation is
the unital algebra homomorphism sending each word to the product of its
letter images. Kernels and image spans are computed degree by degree against
the length-lex word basis, always exactly.
"""

from .errors import ResourceLimitError, SchemaError
from .freealg import DEFAULT_WORD_CAP, enumerate_words
from .linalg import (
    ScalarMatrix,
    matrix_from_json,
    matrix_to_json,
    sparse_kernel_basis,
    sparse_rref,
)
class MatrixAlgebraTarget:
    """M_n with a chosen list of generator images."""

    __slots__ = ("n", "generator_images")

    def __init__(self, n, generator_images):
        if n < 1:
            raise ValueError("matrix size must be at least 1")
        images = tuple(generator_images)
        for i, g in enumerate(images):
            if g.rows != n or g.cols != n:
                raise ValueError(
                    f"generator image {i} is {g.rows}x{g.cols}, expected {n}x{n}"
                )
        self.n = n
        self.generator_images = images

    @property
    def d(self):
        return len(self.generator_images)

    def __eq__(self, other):
        if not isinstance(other, MatrixAlgebraTarget):
            return NotImplemented
        return self.n == other.n and self.generator_images == other.generator_images

    def __repr__(self):
        return f"MatrixAlgebraTarget(n={self.n}, d={self.d})"


def target_to_json(t):
    return {
        "n": t.n,
        "generator_images": [matrix_to_json(g) for g in t.generator_images],
    }


def target_from_json(doc, path):
    if not isinstance(doc, dict):
        raise SchemaError(path, "target must be an object")
    unknown = set(doc) - {"n", "generator_images"}
    if unknown:
        raise SchemaError(path, f"unknown fields: {sorted(unknown)}")
    if "n" not in doc or "generator_images" not in doc:
        raise SchemaError(path, "target requires fields 'n' and 'generator_images'")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise SchemaError(f"{path}.n", "matrix size must be a positive integer")
    raw = doc["generator_images"]
    if not isinstance(raw, list):
        raise SchemaError(f"{path}.generator_images", "must be a list of matrices")
    images = [
        matrix_from_json(g, f"{path}.generator_images[{i}]", rows=n, cols=n)
        for i, g in enumerate(raw)
    ]
    return MatrixAlgebraTarget(n, images)


def evaluate_word(w, target):
    m = ScalarMatrix.identity(target.n)
    for k in w:
        m = m @ target.generator_images[k]
    return m


def evaluate(x, target):
    """Evaluate a free element; unital, multiplicative, linear."""
    if x.d != target.d:
        raise ValueError(
            f"alphabet mismatch: element has {x.d} generators, target has {target.d}"
        )
    out = ScalarMatrix.zero(target.n, target.n)
    for w, c in x.terms.items():
        out = out + evaluate_word(w, target).scale(c)
    return out


def _word_evaluations(target, basis):
    """Flattened evaluation of every basis word, sharing prefix products."""
    n = target.n
    evals = [None] * len(basis.words)
    ident = ScalarMatrix.identity(n)
    for idx, w in enumerate(basis.words):
        if not w:
            evals[idx] = ident
        else:
            prefix = evals[basis.index_of(w[:-1])]
            evals[idx] = prefix @ target.generator_images[w[-1]]
    return evals


def evaluation_rows(target, basis):
    """The evaluation map as n^2 sparse rows over word-indexed columns."""
    n = target.n
    evals = _word_evaluations(target, basis)
    rows = [{} for _ in range(n * n)]
    for idx, m in enumerate(evals):
        for pos, entry in enumerate(m.entries):
            if not entry.is_zero():
                rows[pos][idx] = entry
    return rows


def kernel_of_evaluation(target, degree, cap=DEFAULT_WORD_CAP):
    """Reduced basis of the kernel of evaluation restricted to degree <= `degree`."""
    basis = enumerate_words(target.d, degree, cap)
    rows = evaluation_rows(target, basis)
    pivots = sparse_rref(rows, len(basis))
    kernel = sparse_kernel_basis(rows, pivots, len(basis))
    return [basis.element_sparse(vec) for vec in kernel]


def image_dimension(target, degree, cap=DEFAULT_WORD_CAP):
    """Dimension of the span of all word evaluations up to `degree`."""
    basis = enumerate_words(target.d, degree, cap)
    rows = evaluation_rows(target, basis)
    return len(sparse_rref(rows, len(basis)))


class _SpanTracker:
    """Incremental rank of a growing set of vectors in an n-dim space."""

    def __init__(self, dim):
        self.dim = dim
        self.pivot_rows = {}  # leading column -> reduced row

    def absorb(self, row):
        """Reduce `row` (dict) against the current span; returns True if it was new."""
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivot_rows.get(lead)
            if piv is None:
                inv = row[lead].inverse()
                self.pivot_rows[lead] = {c: v * inv for c, v in row.items()}
                return True
            factor = row[lead]
            for c, v in piv.items():
                cur = row.get(c)
                nv = -(factor * v) if cur is None else cur - factor * v
                if nv.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = nv
        return False

    @property
    def rank(self):
        return len(self.pivot_rows)


def generated_dimension(target, cap, word_cap=DEFAULT_WORD_CAP):
    """Dimension of the unital subalgebra generated by the images.

    Word evaluations are absorbed degree by degree until either the span
    dimension repeats at two consecutive degrees (multiplicative closure) or
    the full n^2 is reached. Returns (dimension, stabilization_degree), with
    None for the degree if the cap ran out first.
    """
    if cap < 0:
        raise ValueError("degree cap must be nonnegative")
    n = target.n
    full = n * n
    tracker = _SpanTracker(full)
    current = [ScalarMatrix.identity(n)]  # words of the current length
    total_words = 1
    prev_dim = None
    for degree in range(cap + 1):
        if degree > 0:
            nxt = []
            for m in current:
                for g in target.generator_images:
                    nxt.append(m @ g)
            current = nxt
            total_words += len(current)
            if total_words > word_cap:
                raise ResourceLimitError(
                    f"word space dimension {total_words} exceeds cap {word_cap} "
                    f"(alphabet {target.d}, degree {degree})"
                )
        for m in current:
            row = {i: e for i, e in enumerate(m.entries) if not e.is_zero()}
            tracker.absorb(row)
        dim = tracker.rank
        if dim == full:
            return dim, degree
        if prev_dim is not None and dim == prev_dim:
            return dim, degree - 1
        prev_dim = dim
    return tracker.rank, None
