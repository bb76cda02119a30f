import copy
import json

import pytest

from pgcolor.certificates import (
    coloring_certificate,
    load_certificate,
    packing_certificate,
    spread_certificate,
    structure5_certificate,
    verify_certificate,
    write_certificate,
)
from pgcolor.errors import CertificateFormatError, HashMismatch
from pgcolor.packings import packing_containing_spread


def test_coloring_roundtrip(tmp_path, pg32, coloring18):
    cert = coloring_certificate(pg32, coloring18, notes=["case study"])
    path = tmp_path / "c18.json"
    write_certificate(cert, str(path))
    loaded = load_certificate(str(path))
    assert loaded == cert
    outcome = verify_certificate(loaded)
    assert outcome.ok and not outcome.mismatches
    assert loaded["verdicts"] == {
        "proper": False,
        "proper_violations": 9,
        "complete": True,
        "missing_pairs": 0,
    }


def test_payloads_are_integer_arrays(pg32, coloring18, spread32):
    cert = coloring_certificate(pg32, coloring18)
    assert all(isinstance(c, int) for c in cert["payload"]["assignment"])
    scert = spread_certificate(pg32, spread32)
    for basis in scert["payload"]["member_bases"]:
        for row in basis:
            assert all(isinstance(x, int) for x in row)


def test_spread_certificate_verifies(pg32, spread32):
    cert = spread_certificate(pg32, spread32)
    assert verify_certificate(cert).ok
    # corrupt one basis row: partition verdict flips
    bad = copy.deepcopy(cert)
    bad["payload"]["member_bases"][0] = bad["payload"]["member_bases"][1]
    assert not verify_certificate(bad).ok


def test_packing_certificate_verifies(pg32, spread32):
    packing = packing_containing_spread(pg32, spread32)
    cert = packing_certificate(pg32, packing)
    assert verify_certificate(cert).ok
    bad = copy.deepcopy(cert)
    bad["payload"]["spreads"][1][0] = bad["payload"]["spreads"][2][0]
    assert not verify_certificate(bad).ok


def test_structure5_certificate_verifies(pg52, structure52):
    cert = structure5_certificate(pg52, structure52)
    assert verify_certificate(cert).ok
    bad = copy.deepcopy(cert)
    bad["payload"]["base_spread"] = bad["payload"]["base_spread"][:-1]
    assert not verify_certificate(bad).ok


def test_flipped_color_detected(pg32, coloring18):
    cert = coloring_certificate(pg32, coloring18)
    tampered = copy.deepcopy(cert)
    tampered["payload"]["assignment"][0] = (
        7 if tampered["payload"]["assignment"][0] != 7 else 8
    )
    outcome = verify_certificate(tampered)
    assert not outcome.ok
    assert outcome.mismatches


def test_hash_mismatch_refused(pg32, coloring18):
    cert = coloring_certificate(pg32, coloring18)
    bad = copy.deepcopy(cert)
    bad["space"]["line_table_sha256"] = "0" * 64
    with pytest.raises(HashMismatch):
        verify_certificate(bad)


def test_malformed_certificates(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("not json")
    with pytest.raises(CertificateFormatError):
        load_certificate(str(path))
    path.write_text(json.dumps({"artifact": "pgcolor"}))
    with pytest.raises(CertificateFormatError):
        load_certificate(str(path))


def test_verify_reproduces_after_reload(tmp_path, pg32, spread32):
    # construct -> write -> read -> verify keeps verdicts and hashes identical
    cert = spread_certificate(pg32, spread32)
    path = tmp_path / "spread.json"
    write_certificate(cert, str(path))
    loaded = load_certificate(str(path))
    assert loaded["space"]["line_table_sha256"] == pg32.descriptor_hash()
    assert verify_certificate(loaded).recomputed == cert["verdicts"]
