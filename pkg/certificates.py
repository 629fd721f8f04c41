"""
Colin de Verdiere matrix certificates.

A certificate is a graph plus a rational symmetric matrix. When it verifies,
mu(graph) >= corank(matrix). The numeric search only proposes candidates;
every candidate is re-checked exactly before it is returned.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import minimize

from graph_core import Graph, PreconditionError, CapacityError, complete, edgeless
from graph6 import graph6_encode, graph6_decode, Graph6ParseError
from rational_linalg import RationalMatrix, inertia, corank, nullspace, determinant
from config import (
    CERT_SEARCH_MAX_VERTICES, CERT_DENOMINATOR_CAP, CERT_SEARCH_BUDGET, CERT_SEARCH_SEED,
    CERT_FORMAT_VERSION,
)

logger = logging.getLogger(__name__)

# Failure codes
PATTERN_NON_EDGE = 'PatternNonEdge'
PATTERN_EDGE_SIGN = 'PatternEdgeSign'
INERTIA_NOT_ONE_NEGATIVE = 'InertiaNotOneNegative'
SAP_FAILS = 'SapFails'
DIMENSION_MISMATCH = 'DimensionMismatch'
NOT_SYMMETRIC = 'NotSymmetric'

# integers or p/q; no decimals or exponents
RATIONAL_TOKEN = re.compile(r"[-+]?\d+(/\d+)?")


class CertificateFormatError(ValueError):
    def __init__(self, message, line, column=None):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{message} ({where})")


@dataclass
class CdVCertificate:
    graph: Graph
    matrix: RationalMatrix
    claimed_corank: int


@dataclass
class CertVerdict:
    valid: bool
    corank: int = 0
    failure: str = None
    details: str = ''


def _sap_system(g, m):
    """Rows of the linear system MX = 0 over the non-edge entries X_ij (i < j)."""
    variables = g.non_edges()
    rows = []
    for k, l in product(range(g.n), repeat=2):
        row = [Fraction(0)] * len(variables)
        for index, (i, j) in enumerate(variables):
            # X_ij = X_ji contributes M[k][i] at column j and M[k][j] at column i
            if l == j:
                row[index] += m[k, i]
            if l == i:
                row[index] += m[k, j]
        if any(row):
            rows.append(row)
    return variables, rows


def verify_certificate(cert):
    """Check the matrix pattern, the single negative eigenvalue and the Strong Arnold Property, exactly."""
    g, m = cert.graph, cert.matrix
    if m.rows != g.n or m.cols != g.n:
        return CertVerdict(False, failure=DIMENSION_MISMATCH,
                           details=f"matrix is {m.rows}x{m.cols}, graph has {g.n} vertices")
    if not m.is_symmetric():
        return CertVerdict(False, failure=NOT_SYMMETRIC, details="matrix is not symmetric")

    for i in range(g.n):
        for j in range(i + 1, g.n):
            if g.has_edge(i, j):
                if m[i, j] >= 0:
                    return CertVerdict(False, failure=PATTERN_EDGE_SIGN,
                                       details=f"edge {i}-{j} has entry {m[i, j]}, must be negative")
            elif m[i, j] != 0:
                return CertVerdict(False, failure=PATTERN_NON_EDGE,
                                   details=f"non-edge {i}-{j} has entry {m[i, j]}, must be zero")

    neg, zero, pos = inertia(m)
    if neg != 1:
        return CertVerdict(False, failure=INERTIA_NOT_ONE_NEGATIVE,
                           details=f"inertia is ({neg}, {zero}, {pos})")

    variables, rows = _sap_system(g, m)
    if variables:
        if rows:
            basis = nullspace(RationalMatrix(rows))
        else:
            basis = [[Fraction(int(i == k)) for i in range(len(variables))] for k in range(len(variables))]
        if basis:
            witness = {f"X{i + 1}{j + 1}" if g.n <= 9 else f"X{i + 1},{j + 1}": str(x)
                       for (i, j), x in zip(variables, basis[0]) if x}
            return CertVerdict(False, failure=SAP_FAILS,
                               details=f"{len(basis)}-dimensional solution space, e.g. {witness}")

    actual = corank(m)
    details = ''
    if actual != cert.claimed_corank:
        details = f"claimed corank {cert.claimed_corank}, actual {actual}"
        logger.info("certificate corank differs from claim: %s", details)
    return CertVerdict(True, corank=actual, details=details)


def canonical_complete_certificate(n):
    """-J_n for K_n, corank n-1."""
    if n < 2:
        raise PreconditionError(f"complete certificate needs n >= 2, got {n}")
    return CdVCertificate(complete(n), RationalMatrix([[-1] * n for _ in range(n)]), n - 1)


def edgeless_matrix_certificate(n):
    """diag(-1, 0, 1, ..., 1) for the edgeless graph, corank 1."""
    if n < 2:
        raise PreconditionError(f"edgeless certificate needs n >= 2, got {n}")
    return CdVCertificate(edgeless(n), RationalMatrix.diagonal([-1, 0] + [1] * (n - 2)), 1)


# ---------------------------------------------------------------------------
# Numeric search
# ---------------------------------------------------------------------------

def _assemble(g, diagonal, weights):
    m = np.diag(np.asarray(diagonal, dtype=float))
    for (u, v), w in zip(g.edges(), weights):
        m[u, v] = m[v, u] = w
    return m


def _objective(g, target, vary_edges):
    n, edge_count = g.n, g.m

    def f(x):
        diagonal = x[:n]
        weights = -np.exp(x[n:]) if vary_edges else -np.ones(edge_count)
        eigenvalues = eigh(_assemble(g, diagonal, weights), eigvals_only=True)
        loss = float(np.sum(eigenvalues[1:target + 1] ** 2))
        loss += max(0.0, eigenvalues[0] + 0.25) ** 2
        if target + 1 < n:
            loss += max(0.0, 0.25 - eigenvalues[target + 1]) ** 2
        return loss
    return f


def _rationalize(g, diagonal, weights, cap):
    entries = [[Fraction(0)] * g.n for _ in range(g.n)]
    for i, d in enumerate(diagonal):
        entries[i][i] = Fraction(float(d)).limit_denominator(cap)
    for (u, v), w in zip(g.edges(), weights):
        value = Fraction(float(w)).limit_denominator(cap)
        if value >= 0:
            return None
        entries[u][v] = entries[v][u] = value
    return RationalMatrix(entries)


def _fix_diagonal(m, index):
    """Choose M[index][index] so that det(M) = 0; det is affine in that entry."""
    at_zero = m.copy()
    at_zero[index, index] = 0
    keep = [i for i in range(m.rows) if i != index]
    minor = RationalMatrix([[m[i, j] for j in keep] for i in keep])
    slope = determinant(minor)
    if slope == 0:
        return None
    fixed = m.copy()
    fixed[index, index] = -determinant(at_zero) / slope
    return fixed


def _candidates(g, target, diagonal, weights):
    caps = [1, 2, 4, 10, 100, 1000, 10**4, 10**5, CERT_DENOMINATOR_CAP]
    for cap in caps:
        m = _rationalize(g, diagonal, weights, cap)
        if m is None:
            continue
        yield m
        if target == 1:
            for index in range(g.n - 1, -1, -1):
                fixed = _fix_diagonal(m, index)
                if fixed is not None:
                    yield fixed
                    break


def search_certificate(g, target_corank, budget=CERT_SEARCH_BUDGET, seed=CERT_SEARCH_SEED):
    """Best-effort search for a verified certificate of corank >= target_corank.

    Returns None when nothing verifies within budget restarts; that proves nothing.
    """
    if g.n > CERT_SEARCH_MAX_VERTICES:
        raise CapacityError(f"certificate search supports n <= {CERT_SEARCH_MAX_VERTICES}, got {g.n}")
    if not 1 <= target_corank < max(g.n, 1):
        raise PreconditionError(f"target corank must be in 1..{g.n - 1}, got {target_corank}")
    if g.is_complete():
        cert = canonical_complete_certificate(g.n)
        return cert if cert.claimed_corank >= target_corank else None

    rng = np.random.default_rng(seed)
    for attempt in range(budget):
        vary_edges = attempt % 2 == 1
        if attempt == 0:
            start = np.zeros(g.n)
        else:
            start = rng.normal(0.0, 1.0, g.n)
        if vary_edges:
            start = np.concatenate([start, rng.normal(0.0, 0.3, g.m)])
        result = minimize(_objective(g, target_corank, vary_edges), start, method='Nelder-Mead',
                          options={'maxiter': 4000 * len(start), 'xatol': 1e-10, 'fatol': 1e-14})
        if result.fun > 1e-8:
            logger.debug("certificate search restart %d: residual %.3g", attempt, result.fun)
            continue
        diagonal = result.x[:g.n]
        weights = -np.exp(result.x[g.n:]) if vary_edges else -np.ones(g.m)
        for m in _candidates(g, target_corank, diagonal, weights):
            verdict = verify_certificate(CdVCertificate(g, m, target_corank))
            if verdict.valid and verdict.corank >= target_corank:
                logger.info("certificate of corank %d found on restart %d", verdict.corank, attempt)
                return CdVCertificate(g, m, verdict.corank)
    logger.debug("certificate search gave up after %d restarts", budget)
    return None


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def cert_write(cert, path):
    with open(path, 'w', encoding='ascii') as f:
        f.write(f"cdv {CERT_FORMAT_VERSION}\n")
        f.write(graph6_encode(cert.graph) + "\n")
        f.write(f"{cert.claimed_corank}\n")
        for row in cert.matrix.entries:
            f.write(" ".join(str(x) for x in row) + "\n")


def _parse_rational(token, line, column):
    if not RATIONAL_TOKEN.fullmatch(token):
        raise CertificateFormatError(f"bad rational {token!r}", line, column)
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise CertificateFormatError(f"bad rational {token!r}", line, column) from None


def cert_read(path):
    with open(path, 'r', encoding='ascii') as f:
        lines = [line.rstrip('\r\n') for line in f]
    if len(lines) < 3:
        raise CertificateFormatError("certificate needs a header, a graph and a corank", len(lines) + 1)
    if lines[0].split() != ['cdv', str(CERT_FORMAT_VERSION)]:
        raise CertificateFormatError(f"expected 'cdv {CERT_FORMAT_VERSION}' header", 1, 1)
    try:
        g = graph6_decode(lines[1].strip(), line=2)
    except Graph6ParseError as exc:
        raise CertificateFormatError(f"bad graph6: {exc}", 2, exc.offset + 1) from exc
    try:
        claimed = int(lines[2].strip())
    except ValueError:
        raise CertificateFormatError(f"bad corank {lines[2]!r}", 3, 1) from None

    body = [line for line in lines[3:]]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != g.n:
        raise CertificateFormatError(f"expected {g.n} matrix rows, found {len(body)}", 4 + len(body))
    rows = []
    for r, text in enumerate(body):
        line_no = 4 + r
        tokens = text.split()
        if len(tokens) != g.n:
            raise CertificateFormatError(f"expected {g.n} entries, found {len(tokens)}", line_no)
        rows.append([_parse_rational(token, line_no, c + 1) for c, token in enumerate(tokens)])
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if rows[i][j] != rows[j][i]:
                raise CertificateFormatError(f"entries ({i},{j}) and ({j},{i}) differ", 4 + j, i + 1)
    return CdVCertificate(g, RationalMatrix(rows), claimed)
