import math

import pytest

from conftest import rand_invertible
from resolv.freealg import FreeElement
from resolv.info import (
    bogoliubov_dimension,
    entropy_numbers,
    information_score,
    lifting_residuals,
    lower_bound_checks,
    raw_parameter_count,
)
from resolv.linalg import ScalarMatrix
from resolv.matrixrep import MatrixAlgebraTarget, generated_dimension
from resolv.resolution import (
    FiniteFreeResolution,
    clifford_resolution,
    transform_generators,
)
from resolv.scalars import ONE, ZERO, CycScalar


def free_resolution(d1, n=2):
    """Length-1 resolution: d1 generators, no relations."""
    images = [ScalarMatrix.zero(n, n) for _ in range(d1)]
    return FiniteFreeResolution(
        name=f"free-{d1}",
        length=1,
        dims=(d1,),
        degrees=(),
        relation_maps=(),
        target=MatrixAlgebraTarget(n, images),
    )


def test_entropy_clifford_m1():
    total, breakdown = entropy_numbers(clifford_resolution(1))
    assert abs(total - math.log(24)) < 1e-12
    parts = [breakdown["ln_length"], *breakdown["ln_dims"], *breakdown["ln_degrees"]]
    assert total == math.fsum(parts)


def test_entropy_clifford_m2():
    total, _ = entropy_numbers(clifford_resolution(2))
    assert abs(total - math.log(160)) < 1e-12


def test_entropy_free_resolution():
    total, breakdown = entropy_numbers(free_resolution(5))
    assert abs(total - math.log(5)) < 1e-12
    assert breakdown["ln_degrees"] == []


def test_entropy_rejects_zero_counts():
    res = free_resolution(5)
    zero_dim = FiniteFreeResolution(
        name="bad",
        length=1,
        dims=(0,),
        degrees=(),
        relation_maps=(),
        target=MatrixAlgebraTarget(2, []),
    )
    with pytest.raises(ValueError):
        entropy_numbers(zero_dim)

    zero_degree = FiniteFreeResolution(
        name="bad2",
        length=2,
        dims=(2, 1),
        degrees=(0,),
        relation_maps=((FreeElement.zero(2),),),
        target=MatrixAlgebraTarget(2, [ScalarMatrix.zero(2, 2)] * 2),
    )
    with pytest.raises(ValueError):
        entropy_numbers(zero_degree)


def test_raw_parameter_count():
    assert raw_parameter_count(clifford_resolution(1)) == 3 * 7 == 21
    assert raw_parameter_count(clifford_resolution(2)) == 10 * 21 == 210
    assert raw_parameter_count(free_resolution(5)) == 0


def test_bogoliubov_clifford_m1():
    sol = bogoliubov_dimension(clifford_resolution(1))
    assert sol.dimension == 1
    x1 = sol.basis[0][0]
    # the generator-level part is antisymmetric: an infinitesimal rotation
    assert x1.entry(0, 0).is_zero() and x1.entry(1, 1).is_zero()
    assert (x1.entry(0, 1) + x1.entry(1, 0)).is_zero()
    assert not x1.is_zero()


def test_bogoliubov_clifford_m2_is_antisymmetric_algebra():
    res = clifford_resolution(2)
    sol = bogoliubov_dimension(res)
    assert sol.dimension == 6
    # every solution is antisymmetric at the generator level...
    for tup in sol.basis:
        x1 = tup[0]
        for i in range(4):
            for j in range(4):
                assert (x1.entry(i, j) + x1.entry(j, i)).is_zero()
    # ...and the 6 generator-level parts are linearly independent, so the
    # solution space is exactly so(4)
    from resolv.linalg import rank_and_kernel

    flat = ScalarMatrix(
        6, 16, [e for tup in sol.basis for e in tup[0].entries]
    )
    rank, _ = rank_and_kernel(flat)
    assert rank == 6


def test_bogoliubov_residuals_vanish():
    for m in (1, 2):
        res = clifford_resolution(m)
        for tup in bogoliubov_dimension(res).basis:
            assert all(r.is_zero() for r in lifting_residuals(res, tup))


def test_bogoliubov_free_resolution():
    # no relations: every linear map lifts
    sol = bogoliubov_dimension(free_resolution(2))
    assert sol.dimension == 4
    assert [t[0] for t in sol.basis[:1]][0].rows == 2


def test_bogoliubov_invariant_under_relation_recombination(rng):
    # replacing the relation list by an invertible linear recombination
    # changes nothing about the solution dimension
    res = clifford_resolution(1)
    for _ in range(10):
        t = rand_invertible(rng, 3)
        recombined = tuple(
            sum(
                (res.relations[l].scale(t.entry(l, k)) for l in range(3)),
                FreeElement.zero(2),
            )
            for k in range(3)
        )
        moved = FiniteFreeResolution(
            name="recombined",
            length=2,
            dims=res.dims,
            degrees=res.degrees,
            relation_maps=(recombined,),
            target=res.target,
        )
        assert bogoliubov_dimension(moved).dimension == 1


def test_score_reports():
    info = information_score(clifford_resolution(1))
    assert (info.raw_params, info.bogoliubov_dim, info.score) == (21, 1, 20)
    assert abs(info.s_numbers - math.log(24)) < 1e-12

    info2 = information_score(clifford_resolution(2))
    assert (info2.raw_params, info2.bogoliubov_dim, info2.score) == (210, 6, 204)

    free = information_score(free_resolution(2))
    assert (free.raw_params, free.bogoliubov_dim, free.score) == (0, 4, -4)


def test_score_is_orbit_invariant(rng):
    res = clifford_resolution(1)
    for _ in range(10):
        lin = rand_invertible(rng, 2)
        moved = transform_generators(res, lin)
        info = information_score(moved)
        assert (info.raw_params, info.bogoliubov_dim, info.score) == (21, 1, 20)


def test_info_json_rounds_floats_to_nine_digits():
    doc = information_score(clifford_resolution(1)).to_json_doc()
    assert doc["s_numbers"] == 3.17805383
    assert doc["score"] == 20


def test_lower_bounds_pauli():
    report = lower_bound_checks(clifford_resolution(1).target)
    assert report.min_generators == 2
    assert report.min_relation_degree == 2
    assert report.min_relations_at_degree_2 == 3
    assert report.surjective


def test_lower_bounds_single_generator_probe():
    diag = ScalarMatrix.from_rows([[ONE, ZERO], [ZERO, CycScalar(2)]])
    t = MatrixAlgebraTarget(2, [diag])
    dim, _ = generated_dimension(t, 6)
    assert dim == 2 < 4
    report = lower_bound_checks(t)
    assert not report.surjective
    assert report.min_generators == 2  # the bound is about M_2, not the probe


def test_lower_bounds_scalar_algebra():
    t = MatrixAlgebraTarget(1, [ScalarMatrix.identity(1)])
    report = lower_bound_checks(t)
    assert report.min_generators == 1
