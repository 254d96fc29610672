import glob
import os
from fractions import Fraction as F

import pytest

from fibercomm import serialize as ser
from fibercomm.cli import CORPUS_ROOT
from fibercomm.decomposition import DilatationLabel
from fibercomm.families import (
    bounded_chain_manifold,
    bounded_chain_plan,
    closed_chain_manifold,
    d_type_family,
    twist_composition,
)
from fibercomm.quadratic import fundamental_unit
from fibercomm.spectrum import BranchData, SingularityVector, SpectrumQuery
from fibercomm.torus import TorusAutomorphism


def corpus_files():
    return sorted(glob.glob(os.path.join(CORPUS_ROOT, "*", "*.json")))


def test_corpus_present():
    assert len(glob.glob(os.path.join(CORPUS_ROOT, "*"))) == 8
    assert corpus_files()


@pytest.mark.parametrize("path", corpus_files(), ids=lambda p: "/".join(p.split(os.sep)[-2:]))
def test_corpus_round_trip_byte_identical(path):
    with open(path, "rb") as fh:
        raw = fh.read()
    doc = ser.load(path)
    assert ser.canonical_dumps(doc).encode() == raw


def test_rationals():
    assert ser.rat(F(3)) == "3"
    assert ser.rat(F(-7, 2)) == "-7/2"
    assert ser.unrat("-7/2") == F(-7, 2)
    assert ser.unpair(ser.pair((F(1, 3), F(0)))) == (F(1, 3), F(0))


def test_quadratic_round_trip():
    u = fundamental_unit(13)
    doc = ser.quadratic_doc(u)
    assert ser.quadratic_from_doc(doc) == u.number


def test_torus_round_trip():
    phi = TorusAutomorphism(((2, 1), (1, 1)))
    assert ser.torus_from_doc(ser.torus_doc(phi)) == phi
    with pytest.raises(ValueError, match="expected"):
        ser.torus_from_doc({"type": "reducible_map"})


def test_reducible_round_trip():
    for phi in (
        d_type_family(3, 2),
        twist_composition(4, name="lam"),
    ):
        assert ser.reducible_from_doc(ser.reducible_doc(phi)) == phi


def test_label_round_trip():
    exact = DilatationLabel(unit=fundamental_unit(5) ** 2, rotation=F(1, 3))
    sym = DilatationLabel(name="mu", exponent=F(5), rotation=None)
    for label in (exact, sym, None):
        assert ser._label_from_doc(ser._label_doc(label)) == label


def test_manifold_and_plan_round_trip():
    for m in (bounded_chain_manifold(), closed_chain_manifold()):
        assert ser.manifold_from_doc(ser.manifold_doc(m)) == m
    plan = bounded_chain_plan(3)
    assert ser.plan_from_doc(ser.plan_doc(plan)) == plan


def test_covering_round_trip():
    from fibercomm.cover import ComponentCover, CoveringData

    c = CoveringData(
        (
            ("hub", (ComponentCover(3, (("h0", (1, 1, 1)),), ((2, 1),)),)),
            ("leaf0", tuple(ComponentCover(1, (("s", (1,)),)) for _ in range(3))),
        )
    )
    assert ser.covering_from_doc(ser.covering_doc(c)) == c


def test_branch_query_pa_round_trip():
    b = BranchData(2, ((2,), (2,)), ((2, 1), (1, 1)))
    assert ser.branch_from_doc(ser.branch_doc(b)) == b
    b = BranchData(3, ((3,), (3,)))
    assert ser.branch_from_doc(ser.branch_doc(b)) == b

    q = SpectrumQuery(((2, 1), (1, 1)), (0, 0), (F(1, 2), F(1, 2)), 20)
    assert ser.query_from_doc(ser.query_doc(q)) == q

    label = DilatationLabel(unit=fundamental_unit(5))
    delta = SingularityVector(((4, 2), (6, 1)))
    got_label, got_delta = ser.pa_data_from_doc(ser.pa_data_doc(label, delta))
    assert (got_label, got_delta) == (label, delta)


def test_canonical_dumps_shape():
    s = ser.canonical_dumps({"b": 1, "a": 2})
    assert s.endswith("\n") and s.index('"a"') < s.index('"b"')
