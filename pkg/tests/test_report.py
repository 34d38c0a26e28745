import json

from hopfkit.fields import CyclotomicField, PrimeField, Rationals
from hopfkit.report import (
    dumps_stable,
    hopf_from_json,
    hopf_to_json,
    structure_hash,
)
from hopfkit.hopf import verify_hopf


def test_hopf_roundtrip(h4, taft37):
    for H in (h4, taft37):
        doc = hopf_to_json(H)
        back = hopf_from_json(H.field, json.loads(dumps_stable(doc)))
        assert back.mul == H.mul
        assert back.comul == H.comul
        assert back.unit == H.unit
        assert back.counit == H.counit
        assert back.antipode == H.antipode
        assert verify_hopf(back).ok


def test_structure_hash_stable_and_distinguishing(h4, kz2, kz4):
    assert structure_hash(h4) == structure_hash(h4)
    assert structure_hash(kz2) != structure_hash(kz4)
    assert len(structure_hash(h4)) == 64


def test_hash_depends_on_field():
    from hopfkit.catalog import cyclic_group_algebra

    a = cyclic_group_algebra(Rationals(), 2)
    b = cyclic_group_algebra(PrimeField(7), 2)
    verify_hopf(a), verify_hopf(b)
    assert structure_hash(a) != structure_hash(b)


def test_cyclotomic_scalars_roundtrip():
    from hopfkit.catalog import taft

    c3 = CyclotomicField(3)
    H = taft(c3, 3, "z")
    assert verify_hopf(H).ok
    doc = hopf_to_json(H)
    back = hopf_from_json(c3, doc)
    assert back.mul == H.mul
    assert verify_hopf(back).ok
