"""Property checks for bilinear triples and decompositions."""

import numpy as np

from fastbmm.decomposition.enums import Axis, Factor
from fastbmm.decomposition.gf2 import (
    check_mutual_inverse,
    check_self_inverse,
    gf2_matmul,
    is_invertible,
    kronecker,
    weight_distribution,
)
from fastbmm.decomposition.schemas import (
    BilinearParams,
    BilinearTriple,
    Decomposition,
    VerificationReport,
)
from fastbmm.decomposition.slp import slp_matches


def verify_triple_product(triple: BilinearTriple) -> bool:
    """
    Check the triple product property over GF(2).

    ``Σ_h ζ[(i'k'),h] ξ[h,(ij)] η[h,(j'k)]`` must be 1 exactly when
    ``i = i'``, ``j = j'`` and ``k = k'``.
    """
    p = triple.params
    total = np.einsum(
        "ah,hb,hc->abc",
        triple.zeta.astype(np.int64),
        triple.xi.astype(np.int64),
        triple.eta.astype(np.int64),
    )
    actual = (total & 1).reshape(p.s, p.u, p.s, p.t, p.t, p.u)

    expected = np.zeros_like(actual)
    for i in range(p.s):
        for j in range(p.t):
            for k in range(p.u):
                expected[i, k, i, j, j, k] = 1
    return bool(np.array_equal(actual, expected))


def compose(decomposition: Decomposition) -> BilinearTriple:
    """The standard-basis triple (χγ | αφ, βψ)."""
    d = decomposition
    return BilinearTriple(
        zeta=gf2_matmul(d.chi, d.gamma),
        xi=gf2_matmul(d.alpha, d.phi),
        eta=gf2_matmul(d.beta, d.psi),
        params=d.params,
    )


def _pair_permutation(outer: tuple[int, int], inner: tuple[int, int]) -> np.ndarray:
    # Kronecker order ((x1, y1), (x2, y2)) to matrix order ((x1, x2), (y1, y2)).
    (x1, y1), (x2, y2) = outer, inner
    return np.arange(x1 * y1 * x2 * y2).reshape(x1, y1, x2, y2).transpose(0, 2, 1, 3).reshape(-1)


def kronecker_triple(first: BilinearTriple, second: BilinearTriple) -> BilinearTriple:
    """
    Componentwise Kronecker product of two triples.

    The row and column indices are regrouped so that the result is a plain
    ⟨s₁s₂, t₁t₂, u₁u₂⟩ triple with row-major block indices.
    """
    p, q = first.params, second.params
    zeta = kronecker(first.zeta, second.zeta)[_pair_permutation((p.s, p.u), (q.s, q.u))]
    xi = kronecker(first.xi, second.xi)[:, _pair_permutation((p.s, p.t), (q.s, q.t))]
    eta = kronecker(first.eta, second.eta)[:, _pair_permutation((p.t, p.u), (q.t, q.u))]
    return BilinearTriple(
        zeta=zeta,
        xi=xi,
        eta=eta,
        params=BilinearParams(s=p.s * q.s, t=p.t * q.t, u=p.u * q.u, r=p.r * q.r),
    )


def verify_decomposition(decomposition: Decomposition) -> VerificationReport:
    """Run the whole property suite on one decomposition."""
    d = decomposition
    traits = d.traits

    self_inverse = None
    if traits.self_inverse_bases:
        self_inverse = all(
            check_self_inverse(d.matrix(factor))
            for factor in (Factor.PHI, Factor.PSI, Factor.CHI)
        )
    mutual_inverse = None
    if traits.supports_chaining:
        mutual_inverse = check_mutual_inverse(d.phi, d.chi) and check_mutual_inverse(
            d.psi, d.chi
        )

    additions = {factor.value: d.additions(factor) for factor in Factor}
    return VerificationReport(
        decomposition=d.label,
        params=str(d.params),
        triple_product=verify_triple_product(compose(d)),
        bases_invertible=all(
            is_invertible(d.matrix(factor)) for factor in (Factor.PHI, Factor.PSI, Factor.CHI)
        ),
        self_inverse=self_inverse,
        mutual_inverse=mutual_inverse,
        slps_match={
            factor.value: slp_matches(d.slp(factor), d.matrix(factor)) for factor in Factor
        },
        additions=additions,
        total_additions=sum(additions.values()),
        operand_weights=weight_distribution(d.alpha, Axis.ROWS),
        right_operand_weights=weight_distribution(d.beta, Axis.ROWS),
        result_weights=weight_distribution(d.gamma, Axis.COLS),
    )
