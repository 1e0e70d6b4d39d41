import json

import pytest

from conftest import FIXTURES
from resolv.catalog import SCOPE_NOTE, CatalogEntry, builtin_catalog, compare, random_presentation
from resolv.freealg import FreeElement, enumerate_words, induced_endomorphism
from resolv.info import information_score
from resolv.linalg import matrix_from_json, sparse_rref
from resolv.matrixrep import MatrixAlgebraTarget, generated_dimension, kernel_of_evaluation
from resolv.resolution import (
    clifford_resolution,
    load_resolution,
    to_json_str,
    transform_generators,
    verify,
)
from resolv.scalars import ONE, ZERO, CycScalar


@pytest.fixture(scope="module")
def catalog():
    return builtin_catalog()


def by_name(catalog, name):
    for entry in catalog:
        if entry.name == name:
            return entry
    raise KeyError(name)


def test_catalog_contents(catalog):
    assert [e.name for e in catalog] == [
        "clifford-m1",
        "car",
        "quaternion",
        "matrix-units",
    ]
    assert all(e.resolution.target.n == 2 for e in catalog)


def test_clifford_entry_matches_constructor(catalog):
    assert by_name(catalog, "clifford-m1").resolution == clifford_resolution(1)


def test_every_builtin_verifies(catalog):
    for entry in catalog:
        # module contract: exactness holds out to max(degrees) + 2
        report = verify(entry.resolution)
        assert report.passed, entry.name


def test_builtin_scores_match_frozen_expectations(catalog):
    for entry in catalog:
        info = information_score(entry.resolution)
        assert info.raw_params == entry.expected["raw_params"], entry.name
        assert info.bogoliubov_dim == entry.expected["bogoliubov_dim"], entry.name
        assert info.score == entry.expected["score"], entry.name


def test_car_kernel_contains_its_relations(catalog):
    car = by_name(catalog, "car").resolution
    kernel = kernel_of_evaluation(car.target, 2)
    assert len(kernel) == 3
    basis = enumerate_words(2, 2)
    rows = [basis.coords_sparse(x) for x in kernel]
    pivots = sparse_rref(rows, len(basis))
    assert len(pivots) == 3
    for rel in car.relations:
        probe = rows[:3] + [basis.coords_sparse(rel)]
        assert len(sparse_rref(probe, len(basis))) == 3  # rank unchanged: member


def test_matrix_units_kernel_dimension(catalog):
    mu = by_name(catalog, "matrix-units").resolution
    assert mu.dims == (4, 17)
    kernel = kernel_of_evaluation(mu.target, 2)
    assert len(kernel) == 21 - 4 == 17


def test_matrix_units_verifies_at_degree_3(catalog):
    report = verify(by_name(catalog, "matrix-units").resolution, 3)
    assert report.passed
    # the unit relation is the whole degree-1 story
    assert report.exactness_by_degree[1].kernel_dim == 1


def test_car_and_clifford_share_triples(catalog):
    car = information_score(by_name(catalog, "car").resolution)
    cli = information_score(by_name(catalog, "clifford-m1").resolution)
    assert (car.raw_params, car.bogoliubov_dim, car.score) == (
        cli.raw_params,
        cli.bogoliubov_dim,
        cli.score,
    )


def test_car_is_a_generator_change_of_clifford(catalog):
    """The shipped change-of-basis matrix carries clifford-m1 onto car exactly."""
    doc = json.load(open(FIXTURES / "car-transform.json"))
    lin = matrix_from_json(doc["matrix"], "$.matrix")
    cliff = clifford_resolution(1)
    car = by_name(catalog, "car").resolution

    moved = transform_generators(cliff, lin)
    assert list(moved.target.generator_images) == list(car.target.generator_images)

    basis = enumerate_words(2, 2)
    def echelon(elements):
        rows = [basis.coords_sparse(x) for x in elements]
        pivots = sparse_rref(rows, len(basis))
        return [rows[i] for i, _ in pivots]

    moved_span = echelon([induced_endomorphism(lin, r) for r in cliff.relations])
    car_span = echelon(car.relations)
    assert moved_span == car_span


def test_random_presentation_shape_and_determinism():
    entry = random_presentation(7)
    res = entry.resolution
    assert res.dims == (2, 3)  # kernel dim 7 - 4 whenever degree-2 surjective
    assert res.degrees == (2,)
    assert entry.provenance == {"seed": 7}
    again = random_presentation(7)
    assert again.resolution == res


def test_random_presentation_seed_42_golden():
    entry = random_presentation(42)
    want = (FIXTURES / "random-42.json").read_text(encoding="utf-8")
    assert to_json_str(entry.resolution) == want


def test_random_presentation_relations_vanish():
    from resolv.matrixrep import evaluate

    for seed in (1, 2, 3):
        res = random_presentation(seed).resolution
        assert all(evaluate(r, res.target).is_zero() for r in res.relations)


def test_commuting_images_are_rejected_by_the_acceptance_predicate():
    # two commuting diagonal matrices span only the diagonal subalgebra, so
    # the sampler's generated-dimension test keeps drawing
    diag1 = [[ONE, ZERO], [ZERO, CycScalar(2)]]
    diag2 = [[CycScalar(3), ZERO], [ZERO, CycScalar(4)]]
    from resolv.linalg import ScalarMatrix

    t = MatrixAlgebraTarget(
        2, [ScalarMatrix.from_rows(diag1), ScalarMatrix.from_rows(diag2)]
    )
    dim, _ = generated_dimension(t, 6)
    assert dim == 2 < 4


def test_compare_builtins(catalog):
    report = compare(catalog)
    assert report.scope == SCOPE_NOTE
    names = [row.name for row in report.ranked]
    # ties at score 20 break alphabetically
    assert names == ["car", "clifford-m1", "quaternion", "matrix-units"]
    assert report.minimum == ("car", "clifford-m1", "quaternion")
    scores = {row.name: row.score for row in report.ranked}
    assert scores == {
        "car": 20,
        "clifford-m1": 20,
        "quaternion": 20,
        "matrix-units": 354,
    }
    assert not report.failed


def test_compare_singleton():
    entry = CatalogEntry(resolution=clifford_resolution(1), provenance={"builtin": "x"})
    report = compare([entry])
    assert report.minimum == ("clifford-m1",)
    assert report.ranked[0].is_min


def test_compare_reports_failures_separately():
    bad = load_resolution(FIXTURES / "corrupted-relation.json")
    entries = [
        CatalogEntry(resolution=clifford_resolution(1), provenance={"builtin": "c"}),
        CatalogEntry(resolution=bad, provenance={"file": "corrupted"}),
    ]
    report = compare(entries)
    assert [r.name for r in report.ranked] == ["clifford-m1"]
    assert [r.name for r in report.failed] == ["clifford-m1-corrupted"]
    assert report.minimum == ("clifford-m1",)


def test_random_entries_never_beat_clifford_sample():
    # seeds 1..8 here to keep this module quick; the acceptance suite runs
    # the full twenty. Seed 10 is known to tie at 20: its two images happen
    # to square to scalars and anticommute up to a scalar (a generalized
    # gamma pair), which buys it the same 1-dimensional automorphism.
    for seed in range(1, 9):
        res = random_presentation(seed).resolution
        info = information_score(res)
        assert info.score >= 20
        assert info.bogoliubov_dim <= 1


def test_seed_10_exception_is_a_tie_not_a_win():
    res = random_presentation(10).resolution
    info = information_score(res)
    assert (info.raw_params, info.bogoliubov_dim, info.score) == (21, 1, 20)
    # both images square to scalars and anticommute up to a scalar
    from resolv.matrixrep import evaluate

    t = res.target
    sq0 = evaluate(FreeElement(2, {(0, 0): 1}), t)
    sq1 = evaluate(FreeElement(2, {(1, 1): 1}), t)
    anti = evaluate(FreeElement(2, {(0, 1): 1, (1, 0): 1}), t)
    for m in (sq0, sq1, anti):
        off_diag_zero = m.entry(0, 1).is_zero() and m.entry(1, 0).is_zero()
        assert off_diag_zero and m.entry(0, 0) == m.entry(1, 1)
