"""Finite free resolutions of matrix algebras and their verification.

A resolution of length N is a chain of free algebras: level 1 carries the
generator images into the target M_n, and each level j >= 2 carries relation
images (one free element per basis vector, of bounded word length) over the
previous level's alphabet. Exactness of the chain is undecidable in the
infinite-dimensional free algebra, so `verify` checks the strongest decidable
desk-scale statement instead: degree by degree, the kernel of evaluation must
coincide with the truncation of the two-sided ideal generated by the
relations.
"""

import itertools
import json
from dataclasses import dataclass

from .errors import ResourceLimitError, SchemaError, ValidationError
from .freealg import (
    DEFAULT_WORD_CAP,
    FreeElement,
    element_from_json,
    element_to_json,
    enumerate_words,
    induced_endomorphism,
    substitute,
)
from .linalg import ScalarMatrix, invert, sparse_rref
from .matrixrep import (
    MatrixAlgebraTarget,
    evaluate,
    evaluation_rows,
    generated_dimension,
    target_from_json,
    target_to_json,
)
from .scalars import I, INV_SQRT2, ONE, ZERO, CycScalar

DEFAULT_MATRIX_SIZE_CAP = 64


@dataclass(frozen=True)
class FiniteFreeResolution:
    """Length-N resolution data: dims d_1..d_N, degrees, relation maps, target.

    relation_maps[j-2] lists, for level j in 2..N, the d_j relation images,
    each a free element over the alphabet of d_{j-1} generators with word
    length at most degrees[j-2].
    """

    name: str
    length: int
    dims: tuple
    degrees: tuple
    relation_maps: tuple  # levels 2..N, each a tuple of FreeElement
    target: MatrixAlgebraTarget

    def validate(self):
        """All invariant breaches as (path, message) pairs; empty when valid."""
        breaches = []
        if self.length < 1:
            breaches.append(("length", f"resolution length must be >= 1, got {self.length}"))
        if len(self.dims) != self.length:
            breaches.append(
                ("dims", f"expected {self.length} entries, got {len(self.dims)}")
            )
        if any(d < 0 for d in self.dims):
            breaches.append(("dims", "dimensions must be nonnegative"))
        if len(self.degrees) != max(self.length - 1, 0):
            breaches.append(
                ("degrees", f"expected {self.length - 1} entries, got {len(self.degrees)}")
            )
        if any(p < 0 for p in self.degrees):
            breaches.append(("degrees", "filtration degrees must be nonnegative"))
        if len(self.relation_maps) != max(self.length - 1, 0):
            breaches.append(
                (
                    "relations",
                    f"expected {self.length - 1} levels, got {len(self.relation_maps)}",
                )
            )
        for i, level in enumerate(self.relation_maps):
            if i + 1 >= len(self.dims) or i >= len(self.degrees):
                break  # shape already reported above
            want = self.dims[i + 1]
            if len(level) != want:
                breaches.append(
                    (f"relations[{i}]", f"expected {want} entries, got {len(level)}")
                )
            for k, rel in enumerate(level):
                if rel.d != self.dims[i]:
                    breaches.append(
                        (
                            f"relations[{i}][{k}]",
                            f"alphabet {rel.d} does not match level dimension {self.dims[i]}",
                        )
                    )
                if rel.degree > self.degrees[i]:
                    breaches.append(
                        (
                            f"relations[{i}][{k}]",
                            f"degree {rel.degree} exceeds filtration degree {self.degrees[i]}",
                        )
                    )
        if self.dims and self.target.d != self.dims[0]:
            breaches.append(
                (
                    "target.generator_images",
                    f"expected {self.dims[0]} images, got {self.target.d}",
                )
            )
        return breaches

    def require_valid(self):
        breaches = self.validate()
        if breaches:
            raise ValidationError(breaches)

    @property
    def relations(self):
        """The level-2 relation images (empty for length-1 resolutions)."""
        return self.relation_maps[0] if self.relation_maps else ()

    def default_degree(self):
        """Default verification degree: two beyond the deepest relation."""
        return (max(self.degrees) if self.degrees else 0) + 2


# Pauli matrices; the Y entries use i = z^2 exactly.
def _pauli_x():
    return ScalarMatrix.from_rows([[ZERO, ONE], [ONE, ZERO]])


def _pauli_y():
    return ScalarMatrix.from_rows([[ZERO, -I], [I, ZERO]])


def _pauli_z():
    return ScalarMatrix.from_rows([[ONE, ZERO], [ZERO, -ONE]])


def gamma_matrices(m):
    """2m anticommuting gamma matrices on 2^m dimensions via tensor products.

    gamma_{2j-1} = Z ⊗ .. ⊗ Z ⊗ X ⊗ I ⊗ .. ⊗ I (j-1 Z factors), and
    gamma_{2j} the same with Y in place of X; any other faithful choice
    differs by an inner automorphism and changes no dimension count.
    """
    x, y, z = _pauli_x(), _pauli_y(), _pauli_z()
    ident = ScalarMatrix.identity(2)
    gammas = []
    for j in range(m):
        for mid in (x, y):
            factors = [z] * j + [mid] + [ident] * (m - j - 1)
            g = factors[0]
            for f in factors[1:]:
                g = g.kron(f)
            gammas.append(g)
    return gammas


def clifford_resolution(m, size_cap=DEFAULT_MATRIX_SIZE_CAP):
    """The Clifford presentation of M_{2^m}: 2m generators, m(2m+1) relations.

    Relation r_{k<=l} is e_k e_l + e_l e_k - delta_{kl}; generator images are
    gamma_k / sqrt(2), which is exactly the normalization the delta demands.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2**m
    if n > size_cap:
        raise ResourceLimitError(f"matrix size {n} exceeds cap {size_cap}")
    d1 = 2 * m
    relations = []
    for k in range(d1):
        for l in range(k, d1):
            terms = {}
            if k == l:
                terms[(k, k)] = CycScalar(2)
                terms[()] = -ONE
            else:
                terms[(k, l)] = ONE
                terms[(l, k)] = ONE
            relations.append(FreeElement(d1, terms))
    images = [g.scale(INV_SQRT2) for g in gamma_matrices(m)]
    return FiniteFreeResolution(
        name=f"clifford-m{m}",
        length=2,
        dims=(d1, m * (2 * m + 1)),
        degrees=(2,),
        relation_maps=(tuple(relations),),
        target=MatrixAlgebraTarget(n, images),
    )


@dataclass(frozen=True)
class IdealTruncation:
    dimension: int
    basis: tuple  # echelon FreeElement basis


def ideal_truncation(relations, degree, alphabet=None, cap=DEFAULT_WORD_CAP):
    """Span of all u*r*v with |u| + deg(r) + |v| <= degree, as an echelon basis.

    This is the degree-`degree` truncation of the two-sided ideal the
    relations generate (no cancellation tricks from higher degrees are
    counted, which is the decidable notion used throughout).
    """
    relations = [r for r in relations if not r.is_zero()]
    if alphabet is None:
        if not relations:
            raise ValueError("alphabet required when the relation list is empty")
        alphabet = relations[0].d
    if any(r.d != alphabet for r in relations):
        raise ValueError("relations live over different alphabets")
    if any(r.degree > degree for r in relations):
        raise ValueError("every relation must have degree <= the truncation degree")
    basis = enumerate_words(alphabet, degree, cap)
    rows = []
    for rel in relations:
        rel_deg = int(rel.degree)
        budget = degree - rel_deg
        for left_len in range(budget + 1):
            for right_len in range(budget - left_len + 1):
                for u in itertools.product(range(alphabet), repeat=left_len):
                    for v in itertools.product(range(alphabet), repeat=right_len):
                        row = {}
                        for w, c in rel.terms.items():
                            idx = basis.index_of(u + w + v)
                            cur = row.get(idx)
                            nv = c if cur is None else cur + c
                            if nv.is_zero():
                                row.pop(idx, None)
                            else:
                                row[idx] = nv
                        if row:
                            rows.append(row)
    pivots = sparse_rref(rows, len(basis))
    echelon = tuple(basis.element_sparse(rows[r]) for r, _ in pivots)
    return IdealTruncation(dimension=len(pivots), basis=echelon)


@dataclass(frozen=True)
class DegreeExactness:
    kernel_dim: int
    ideal_dim: int
    equal: bool


@dataclass(frozen=True)
class VerificationReport:
    surjective: bool
    generated_dim: int
    stabilization_degree: object  # int or None
    relations_vanish: bool
    exactness_by_degree: dict  # degree -> DegreeExactness
    degree: int

    @property
    def passed(self):
        return (
            self.surjective
            and self.relations_vanish
            and all(e.equal for e in self.exactness_by_degree.values())
        )

    def to_json_doc(self):
        return {
            "surjective": self.surjective,
            "generated_dim": self.generated_dim,
            "stabilization_degree": self.stabilization_degree,
            "relations_vanish": self.relations_vanish,
            "exactness": [
                {
                    "degree": k,
                    "kernel_dim": e.kernel_dim,
                    "ideal_dim": e.ideal_dim,
                    "equal": e.equal,
                }
                for k, e in sorted(self.exactness_by_degree.items())
            ],
            "degree": self.degree,
            "passed": self.passed,
        }


def _kernel_dimension(target, degree, cap):
    basis = enumerate_words(target.d, degree, cap)
    rows = evaluation_rows(target, basis)
    rank = len(sparse_rref(rows, len(basis)))
    return len(basis) - rank


def verify(res, degree=None, cap=DEFAULT_WORD_CAP):
    """Check a resolution at truncation degree `degree` (default max(deg)+2).

    surjective: the generator images generate all of M_n.
    relations_vanish: every level-2 image evaluates to zero, and for longer
    chains every level-j image (j >= 3) dies under substitution of the
    level-(j-1) images.
    exactness_by_degree[k]: kernel of evaluation vs truncated relation ideal
    inside the degree-k filtration piece, for k = 1..degree.
    """
    res.require_valid()
    if degree is None:
        degree = res.default_degree()
    min_degree = max(res.degrees) if res.degrees else 0
    if degree < min_degree:
        raise ValueError(
            f"verification degree {degree} is below the deepest relation degree {min_degree}"
        )
    target = res.target
    gen_cap = max(degree, 2) + 2
    gen_dim, stab = generated_dimension(target, gen_cap, word_cap=cap)
    surjective = gen_dim == target.n * target.n

    vanish = all(evaluate(rel, target).is_zero() for rel in res.relations)
    # For longer chains, composability: level-j images must die when the
    # level-(j-1) images are substituted for the generators.
    for i in range(1, len(res.relation_maps)):
        if not vanish:
            break
        prev = list(res.relation_maps[i - 1])
        vanish = all(
            substitute(rel, prev, d_out=res.dims[i - 1]).is_zero()
            for rel in res.relation_maps[i]
        )

    exactness = {}
    for k in range(1, degree + 1):
        kernel_dim = _kernel_dimension(target, k, cap)
        fitting = [r for r in res.relations if r.degree <= k]
        if fitting:
            ideal_dim = ideal_truncation(fitting, k, alphabet=res.dims[0], cap=cap).dimension
        else:
            ideal_dim = 0
        exactness[k] = DegreeExactness(kernel_dim, ideal_dim, kernel_dim == ideal_dim)

    return VerificationReport(
        surjective=surjective,
        generated_dim=gen_dim,
        stabilization_degree=stab,
        relations_vanish=vanish,
        exactness_by_degree=exactness,
        degree=degree,
    )


def transform_generators(res, lin):
    """Rewrite the presentation after the invertible change of generators `lin`.

    Relations are pushed through the induced endomorphism (e_k -> sum_p
    lin[p,k] e_p) and the generator images are recombined with the inverse so
    that evaluation of any transformed element is unchanged. The result is a
    presentation on the same orbit: it verifies iff the original does, and
    all information measures agree.
    """
    if res.length < 1 or not res.dims:
        raise ValueError("resolution has no generator level")
    d1 = res.dims[0]
    if not lin.is_square() or lin.rows != d1:
        raise ValueError(f"transformation must be {d1}x{d1}")
    lin_inv = invert(lin)
    if lin_inv is None:
        raise ValueError("transformation is singular")
    new_levels = list(res.relation_maps)
    if new_levels:
        new_levels[0] = tuple(induced_endomorphism(lin, r) for r in new_levels[0])
    old = res.target.generator_images
    new_images = []
    for p in range(d1):
        acc = ScalarMatrix.zero(res.target.n, res.target.n)
        for q in range(d1):
            c = lin_inv.entry(q, p)
            if not c.is_zero():
                acc = acc + old[q].scale(c)
        new_images.append(acc)
    return FiniteFreeResolution(
        name=res.name,
        length=res.length,
        dims=res.dims,
        degrees=res.degrees,
        relation_maps=tuple(new_levels),
        target=MatrixAlgebraTarget(res.target.n, new_images),
    )


# ---------------------------------------------------------------------------
# wire format


def serialize(res):
    """Canonical JSON document for a resolution (field order fixed)."""
    return {
        "name": res.name,
        "length": res.length,
        "dims": list(res.dims),
        "degrees": list(res.degrees),
        "relations": [
            [element_to_json(rel) for rel in level] for level in res.relation_maps
        ],
        "target": target_to_json(res.target),
    }


_RESOLUTION_FIELDS = ("name", "length", "dims", "degrees", "relations", "target")


def deserialize(doc, path="$"):
    """Parse and fully validate a resolution document."""
    if not isinstance(doc, dict):
        raise SchemaError(path, "resolution must be an object")
    unknown = set(doc) - set(_RESOLUTION_FIELDS)
    if unknown:
        raise SchemaError(path, f"unknown fields: {sorted(unknown)}")
    for field in _RESOLUTION_FIELDS:
        if field not in doc:
            raise SchemaError(path, f"missing field {field!r}")
    name = doc["name"]
    if not isinstance(name, str) or not name:
        raise SchemaError(f"{path}.name", "name must be a non-empty string")
    length = doc["length"]
    if not isinstance(length, int) or length < 1:
        raise SchemaError(f"{path}.length", "length must be a positive integer")
    dims = doc["dims"]
    if (
        not isinstance(dims, list)
        or len(dims) != length
        or not all(isinstance(d, int) and d >= 0 for d in dims)
    ):
        raise SchemaError(
            f"{path}.dims", f"dims must be a list of {length} nonnegative integers"
        )
    degrees = doc["degrees"]
    if (
        not isinstance(degrees, list)
        or len(degrees) != length - 1
        or not all(isinstance(p, int) and p >= 0 for p in degrees)
    ):
        raise SchemaError(
            f"{path}.degrees",
            f"degrees must be a list of {length - 1} nonnegative integers",
        )
    raw_levels = doc["relations"]
    if not isinstance(raw_levels, list) or len(raw_levels) != length - 1:
        raise SchemaError(
            f"{path}.relations", f"relations must have {length - 1} levels"
        )
    levels = []
    for i, raw_level in enumerate(raw_levels):
        lpath = f"{path}.relations[{i}]"
        if not isinstance(raw_level, list) or len(raw_level) != dims[i + 1]:
            raise SchemaError(lpath, f"level must list {dims[i + 1]} relation images")
        level = []
        for k, raw_rel in enumerate(raw_level):
            rel = element_from_json(raw_rel, f"{lpath}[{k}]", expect_d=dims[i])
            if rel.degree > degrees[i]:
                raise SchemaError(
                    f"{lpath}[{k}]",
                    f"degree {rel.degree} exceeds filtration degree {degrees[i]}",
                )
            level.append(rel)
        levels.append(tuple(level))
    target = target_from_json(doc["target"], f"{path}.target")
    if target.d != dims[0]:
        raise SchemaError(
            f"{path}.target.generator_images",
            f"expected {dims[0]} images, got {target.d}",
        )
    res = FiniteFreeResolution(
        name=name,
        length=length,
        dims=tuple(dims),
        degrees=tuple(degrees),
        relation_maps=tuple(levels),
        target=target,
    )
    res.require_valid()
    return res


def to_json_str(res):
    return json.dumps(serialize(res), indent=2) + "\n"


def load_resolution(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(str(path), f"not valid JSON: {exc}") from exc
    return deserialize(doc)


def save_resolution(res, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(to_json_str(res))
