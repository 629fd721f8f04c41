#!/usr/bin/env python3
"""
Certificate verification, mutation checks, the numeric search and the text format
"""

import sys
from fractions import Fraction

import numpy as np
import pytest

from graph_core import PreconditionError, CapacityError, complete, cycle, edgeless, path
from rational_linalg import RationalMatrix
from certificates import (
    CdVCertificate, CertificateFormatError, verify_certificate, canonical_complete_certificate,
    edgeless_matrix_certificate, search_certificate, cert_read, cert_write,
    PATTERN_NON_EDGE, PATTERN_EDGE_SIGN, INERTIA_NOT_ONE_NEGATIVE, SAP_FAILS, DIMENSION_MISMATCH, NOT_SYMMETRIC,
)


def test_complete_graph_certificate():
    verdict = verify_certificate(CdVCertificate(complete(3), RationalMatrix([[-1] * 3 for _ in range(3)]), 2))
    assert verdict.valid and verdict.corank == 2


def test_path_certificate():
    m = RationalMatrix([[0, -1, 0], [-1, 0, -1], [0, -1, 0]])
    verdict = verify_certificate(CdVCertificate(path(3), m, 1))
    assert verdict.valid and verdict.corank == 1


def test_edgeless_sap_failure():
    verdict = verify_certificate(CdVCertificate(edgeless(3), RationalMatrix.diagonal([-1, 0, 0]), 2))
    assert not verdict.valid
    assert verdict.failure == SAP_FAILS
    assert "X23" in verdict.details  # 1-based entry names


def test_claimed_corank_mismatch_still_valid():
    verdict = verify_certificate(CdVCertificate(complete(4), RationalMatrix([[-1] * 4 for _ in range(4)]), 2))
    assert verdict.valid and verdict.corank == 3
    assert "claimed corank 2" in verdict.details


def test_canonical_certificates():
    for n in range(2, 9):
        cert = canonical_complete_certificate(n)
        verdict = verify_certificate(cert)
        assert verdict.valid and verdict.corank == n - 1
    for n in range(2, 7):
        verdict = verify_certificate(edgeless_matrix_certificate(n))
        assert verdict.valid and verdict.corank == 1
    with pytest.raises(PreconditionError):
        canonical_complete_certificate(1)


def test_structural_failures():
    verdict = verify_certificate(CdVCertificate(complete(3), RationalMatrix([[-1, -1], [-1, -1]]), 1))
    assert verdict.failure == DIMENSION_MISMATCH
    asymmetric = RationalMatrix([[-1, -1, -1], [-2, -1, -1], [-1, -1, -1]])
    assert verify_certificate(CdVCertificate(complete(3), asymmetric, 2)).failure == NOT_SYMMETRIC


def test_mutations_break_certificates():
    rng = np.random.default_rng(17)
    for _ in range(20):
        n = int(rng.integers(3, 8))
        value = Fraction(int(rng.integers(1, 5))) * (1 if rng.random() < 0.5 else -1)

        # a non-zero entry on a non-edge
        cert = edgeless_matrix_certificate(n)
        i, j = sorted(rng.choice(n, size=2, replace=False).tolist())
        cert.matrix[i, j] = cert.matrix[j, i] = value
        assert verify_certificate(cert).failure == PATTERN_NON_EDGE

        # an edge entry that is not negative
        cert = canonical_complete_certificate(n)
        i, j = sorted(rng.choice(n, size=2, replace=False).tolist())
        cert.matrix[i, j] = cert.matrix[j, i] = abs(value) if rng.random() < 0.5 else 0
        assert verify_certificate(cert).failure == PATTERN_EDGE_SIGN

        # more than one negative eigenvalue
        cert = canonical_complete_certificate(n)
        shift = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        for k in range(n):
            cert.matrix[k, k] = cert.matrix[k, k] - shift
        assert verify_certificate(cert).failure == INERTIA_NOT_ONE_NEGATIVE

        # two zero diagonal entries leave X_ab free
        positions = rng.permutation(n).tolist()
        diagonal = [Fraction(int(rng.integers(1, 6)))] * n
        diagonal[positions[0]] = Fraction(-1)
        diagonal[positions[1]] = diagonal[positions[2]] = Fraction(0)
        cert = CdVCertificate(edgeless(n), RationalMatrix.diagonal(diagonal), 2)
        assert verify_certificate(cert).failure == SAP_FAILS


def test_search_finds_certificates():
    cert = search_certificate(complete(4), 3)
    assert cert is not None and verify_certificate(cert).valid and cert.claimed_corank == 3
    cert = search_certificate(path(3), 1, budget=5)
    assert cert is not None and verify_certificate(cert).corank >= 1
    cert = search_certificate(cycle(4), 2, budget=5)
    assert cert is not None and verify_certificate(cert).corank >= 2


def test_search_gives_up():
    assert search_certificate(path(3), 2, budget=3) is None
    with pytest.raises(PreconditionError):
        search_certificate(path(3), 3)
    with pytest.raises(CapacityError):
        search_certificate(path(21), 1)


def test_text_format_round_trip(tmp_path):
    path_out = tmp_path / "k3.cdv"
    cert = canonical_complete_certificate(3)
    cert_write(cert, path_out)
    assert path_out.read_text().splitlines()[:3] == ["cdv 1", "Bw", "2"]
    loaded = cert_read(path_out)
    assert loaded.graph == cert.graph and loaded.matrix == cert.matrix and loaded.claimed_corank == 2


def test_text_format_errors(tmp_path):
    bad = tmp_path / "bad.cdv"
    bad.write_text("cdv 1\nBw\n2\n-1 -1 -1\n-1 -1 1/0\n-1 -1 -1\n")
    with pytest.raises(CertificateFormatError) as excinfo:
        cert_read(bad)
    assert excinfo.value.line == 5 and excinfo.value.column == 3

    bad.write_text("cdv 1\nBw\n2\n-1 -1 -1\n-2 -1 -1\n-1 -1 -1\n")
    with pytest.raises(CertificateFormatError) as excinfo:
        cert_read(bad)
    assert excinfo.value.line == 5

    bad.write_text("cdv 2\nBw\n2\n")
    with pytest.raises(CertificateFormatError) as excinfo:
        cert_read(bad)
    assert excinfo.value.line == 1

    bad.write_text("cdv 1\nBw\n2\n-1 -1 -1\n")
    with pytest.raises(CertificateFormatError):
        cert_read(bad)

    for token in ("0.5", "1e3"):
        bad.write_text(f"cdv 1\nBw\n2\n{token} -1 -1\n-1 -1 -1\n-1 -1 -1\n")
        with pytest.raises(CertificateFormatError) as excinfo:
            cert_read(bad)
        assert excinfo.value.line == 4 and excinfo.value.column == 1


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
