"""Numerical ground truth on explicit tensor representations.

Builds the generator matrices of so(n) on the standard module, p-forms and
trace-free symmetric 2-tensors, assembles the equivariant splitting operator
on R^n (x) V, and checks the symbolic layer against its spectrum: eigenvalues
against conformal weights, projector identities, trace symmetries, and the
constrained supremum that defines the Kato constant, estimated by alternating
maximization over the product of unit spheres.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .decomposition import Decomposition, decompose
from .scalars import elementary_symmetric
from .weights import DominantWeight, validate

__all__ = [
    "RepModel",
    "BModel",
    "SupReport",
    "SymmetryReport",
    "build_rep",
    "build_b_operator",
    "generator_defects",
    "eigen_projectors",
    "lagrange_projectors",
    "projector_defect",
    "bzero_defect",
    "projection_norms_three_ways",
    "check_ctilde_symmetry",
    "numeric_sup",
]

_LAMBDA_RE = re.compile(r"^lambda\^(\d+)$")


@dataclass
class RepModel:
    """Explicit orthogonal representation: one antisymmetric matrix per
    generator e_i ^ e_j (i < j, 0-based indices)."""

    n: int
    kind: str
    dim_v: int
    generators: dict[tuple[int, int], np.ndarray]
    weight: DominantWeight
    weight_multiplicity: int  # 2 when the module is a chirality double, else 1
    tolerance: float = 1e-9

    def generator(self, i: int, a: int) -> np.ndarray:
        """Matrix of e_i ^ e_a for arbitrary index order."""
        if i == a:
            return np.zeros((self.dim_v, self.dim_v))
        if i < a:
            return self.generators[(i, a)]
        return -self.generators[(a, i)]


def _standard_generator(n: int, i: int, j: int) -> np.ndarray:
    # (e_i ^ e_j) e_k = delta_ik e_j - delta_jk e_i; sign pinned by the
    # eigenvalue test on the standard module: (1, -1, 1-n).
    g = np.zeros((n, n))
    g[j, i] = 1.0
    g[i, j] = -1.0
    return g


def _form_basis(n: int, p: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(n), p))


def _form_generator(n: int, p: int, i: int, j: int) -> np.ndarray:
    basis = _form_basis(n, p)
    index = {s: k for k, s in enumerate(basis)}
    dim = len(basis)
    g = np.zeros((dim, dim))
    # image of basis vector e_k under the standard generator
    image = {i: (j, 1.0), j: (i, -1.0)}
    for col, subset in enumerate(basis):
        for t, s_t in enumerate(subset):
            if s_t not in image:
                continue
            target, coeff = image[s_t]
            if target in subset:
                continue
            replaced = list(subset)
            replaced[t] = target
            sign = 1.0
            # bubble the replaced slot into sorted position
            k = t
            while k > 0 and replaced[k - 1] > replaced[k]:
                replaced[k - 1], replaced[k] = replaced[k], replaced[k - 1]
                sign = -sign
                k -= 1
            while k < p - 1 and replaced[k + 1] < replaced[k]:
                replaced[k + 1], replaced[k] = replaced[k], replaced[k + 1]
                sign = -sign
                k += 1
            g[index[tuple(replaced)], col] += coeff * sign
    return g


def _sym2_basis(n: int) -> list[np.ndarray]:
    """Orthonormal basis of trace-free symmetric matrices under tr(XY)."""
    basis = []
    for i in range(n):
        for j in range(i + 1, n):
            b = np.zeros((n, n))
            b[i, j] = b[j, i] = 1.0 / np.sqrt(2.0)
            basis.append(b)
    for k in range(1, n):
        b = np.zeros((n, n))
        for t in range(k):
            b[t, t] = 1.0
        b[k, k] = -float(k)
        basis.append(b / np.sqrt(k * (k + 1)))
    return basis


def _sym2_generator(n: int, i: int, j: int) -> np.ndarray:
    basis = _sym2_basis(n)
    g_std = _standard_generator(n, i, j)
    dim = len(basis)
    g = np.zeros((dim, dim))
    for col, b in enumerate(basis):
        acted = g_std @ b - b @ g_std
        for row, b_row in enumerate(basis):
            g[row, col] = np.sum(b_row * acted)
    return g


def build_rep(n: int, kind: str) -> RepModel:
    """Construct generator matrices for ``standard``, ``lambda^p`` or ``sym2``."""
    if n < 3:
        raise ValueError("representations are built for n >= 3")
    m = n // 2
    match = _LAMBDA_RE.match(kind)
    if kind == "standard":
        p = 1
    elif match:
        p = int(match.group(1))
        if not 1 <= p <= m:
            raise ValueError(f"form degree must lie in 1..{m}")
    elif kind == "sym2":
        p = None
    else:
        raise ValueError(f"unsupported representation kind {kind!r}")

    if kind == "sym2":
        weight = validate(n, [2] + [0] * (m - 1))
        gens = {
            (i, j): _sym2_generator(n, i, j)
            for i in range(n)
            for j in range(i + 1, n)
        }
        dim_v = n * (n + 1) // 2 - 1
        mult = 1
    elif p == 1:
        weight = validate(n, [1] + [0] * (m - 1))
        gens = {
            (i, j): _standard_generator(n, i, j)
            for i in range(n)
            for j in range(i + 1, n)
        }
        dim_v = n
        mult = 1
    else:
        weight = validate(n, [1] * p + [0] * (m - p))
        gens = {
            (i, j): _form_generator(n, p, i, j)
            for i in range(n)
            for j in range(i + 1, n)
        }
        dim_v = len(_form_basis(n, p))
        # Lambda^m splits into two chirality halves in even dimension.
        mult = 2 if (n % 2 == 0 and p == m) else 1
    return RepModel(
        n=n,
        kind=kind,
        dim_v=dim_v,
        generators=gens,
        weight=weight,
        weight_multiplicity=mult,
    )


def generator_defects(model: RepModel) -> tuple[float, float]:
    """(antisymmetry defect, commutation defect) of the generator matrices.

    Brackets are compared against the structure constants read off the
    standard module, where a bracket [x, y] is again antisymmetric and its
    coefficient on e_i ^ e_j is its (j, i) entry.
    """
    anti = max(
        float(np.max(np.abs(g + g.T))) for g in model.generators.values()
    )
    n = model.n
    comm = 0.0
    pairs = list(model.generators)
    for (i, j) in pairs:
        for (k, l) in pairs:
            std = _standard_generator(n, i, j) @ _standard_generator(n, k, l) - \
                _standard_generator(n, k, l) @ _standard_generator(n, i, j)
            expected = np.zeros((model.dim_v, model.dim_v))
            for a in range(n):
                for b in range(a + 1, n):
                    coeff = std[b, a]
                    if coeff:
                        expected = expected + coeff * model.generators[(a, b)]
            got = model.generators[(i, j)] @ model.generators[(k, l)] - \
                model.generators[(k, l)] @ model.generators[(i, j)]
            comm = max(comm, float(np.max(np.abs(got - expected))))
    return anti, comm


@dataclass
class BModel:
    """The splitting operator as a dense symmetric matrix with its grouped
    eigenstructure."""

    model: RepModel
    dec: Decomposition
    B: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    groups: list[np.ndarray]  # eigenvector column indices per summand
    eigen_defect: float

    @property
    def n_total(self) -> int:
        return self.B.shape[0]

    def projector(self, indices: Iterable[int]) -> np.ndarray:
        projs = eigen_projectors(self)
        out = np.zeros_like(self.B)
        for i in indices:
            out += projs[i - 1]
        return out


def build_b_operator(model: RepModel) -> BModel:
    """Assemble B(alpha (x) v) = sum_i e_i (x) (e_i ^ alpha) v and group its
    spectrum by the symbolic conformal weights."""
    n, d = model.n, model.dim_v
    B = np.zeros((n * d, n * d))
    for i in range(n):
        for a in range(n):
            if i == a:
                continue
            B[i * d : (i + 1) * d, a * d : (a + 1) * d] = model.generator(i, a)
    sym_defect = float(np.max(np.abs(B - B.T)))
    if sym_defect > 1e-12:
        raise AssertionError(f"splitting operator not symmetric: defect {sym_defect}")

    dec = decompose(model.weight)
    weights = [float(c.w) for c in dec.components]
    evals, evecs = np.linalg.eigh(B)
    assignment = [int(np.argmin([abs(ev - w) for w in weights])) for ev in evals]
    defect = max(abs(ev - weights[g]) for ev, g in zip(evals, assignment))
    if defect > 1e-6:
        raise AssertionError(
            f"eigenvalue {defect} away from any conformal weight; sign convention?"
        )
    groups = [
        np.array([k for k, g in enumerate(assignment) if g == j], dtype=int)
        for j in range(len(weights))
    ]
    for comp, grp in zip(dec.components, groups):
        expected = comp.dim * model.weight_multiplicity
        if len(grp) != expected:
            raise AssertionError(
                f"summand {comp.index}: multiplicity {len(grp)} != {expected}"
            )
    return BModel(
        model=model,
        dec=dec,
        B=B,
        eigenvalues=evals,
        eigenvectors=evecs,
        groups=groups,
        eigen_defect=float(defect),
    )


def eigen_projectors(bm: BModel) -> list[np.ndarray]:
    out = []
    for grp in bm.groups:
        v = bm.eigenvectors[:, grp]
        out.append(v @ v.T)
    return out


def lagrange_projectors(bm: BModel) -> list[np.ndarray]:
    """Projectors by polynomial interpolation in B through the weights."""
    weights = [float(c.w) for c in bm.dec.components]
    eye = np.eye(bm.n_total)
    out = []
    for j, wj in enumerate(weights):
        proj = eye.copy()
        for k, wk in enumerate(weights):
            if k == j:
                continue
            proj = proj @ (bm.B - wk * eye) / (wj - wk)
        out.append(proj)
    return out


def projector_defect(bm: BModel) -> float:
    direct = eigen_projectors(bm)
    interp = lagrange_projectors(bm)
    return max(float(np.max(np.abs(a - b))) for a, b in zip(direct, interp))


def _random_decomposable(bm: BModel, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    n, d = bm.model.n, bm.model.dim_v
    alpha = rng.standard_normal(n)
    alpha /= np.linalg.norm(alpha)
    v = rng.standard_normal(d)
    v /= np.linalg.norm(v)
    return alpha, v, np.kron(alpha, v)


def bzero_defect(bm: BModel, trials: int = 100, seed: int = 0) -> float:
    """max |<B(alpha x v), alpha x v>| over random unit decomposables."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        _, _, phi = _random_decomposable(bm, rng)
        worst = max(worst, abs(float(phi @ bm.B @ phi)))
    return worst


def _atilde_matrices(bm: BModel, j_max: int) -> list[np.ndarray]:
    wt = [c.translated_weight for c in bm.dec.components]
    sigma = [float(elementary_symmetric(wt, ell)) for ell in range(j_max + 2)]
    half_shift = (bm.model.n - 1) / 2.0
    bt = bm.B + half_shift * np.eye(bm.n_total)
    powers = [np.eye(bm.n_total)]
    for _ in range(j_max):
        powers.append(powers[-1] @ bt)
    out = []
    for j in range(j_max + 1):
        acc = np.zeros_like(bm.B)
        for ell in range(j + 1):
            acc += ((-1) ** ell) * sigma[ell] * powers[j - ell]
        out.append(acc)
    return out


@dataclass
class SymmetryReport:
    max_block_defect: float
    max_form_defect: float


def check_ctilde_symmetry(bm: BModel, j_max: int, trials: int = 50, seed: int = 1) -> SymmetryReport:
    """Check the alternating block symmetry of the corrected operators and the
    vanishing of odd quadratic forms on decomposables.

    The corrected operator at step j adds ((-1)^N - (-1)^j)/4 of the previous
    step; its (alpha, beta) block must equal (-1)^j times the transposed-slot
    block.
    """
    n, d = bm.model.n, bm.model.dim_v
    n_comp = bm.dec.num_components
    atildes = _atilde_matrices(bm, j_max + 1)
    block_defect = 0.0
    for j in range(j_max + 1):
        coeff = ((-1) ** n_comp - (-1) ** j) / 4.0
        ct = atildes[j] + (coeff * atildes[j - 1] if j >= 1 else 0.0)
        blocks = ct.reshape(n, d, n, d)
        swapped = np.transpose(blocks, (2, 1, 0, 3))
        defect = float(np.max(np.abs(blocks - ((-1) ** j) * swapped)))
        block_defect = max(block_defect, defect)

    rng = np.random.default_rng(seed)
    form_defect = 0.0
    for _ in range(trials):
        _, _, phi = _random_decomposable(bm, rng)
        for j in range(0, j_max, 2):
            odd = float(phi @ atildes[j + 1] @ phi)
            if n_comp % 2 == 1:
                form_defect = max(form_defect, abs(odd))
            else:
                even_part = float(phi @ atildes[j] @ phi)
                form_defect = max(form_defect, abs(odd + 0.5 * even_part))
    return SymmetryReport(max_block_defect=block_defect, max_form_defect=form_defect)


def projection_norms_three_ways(
    bm: BModel, alpha: np.ndarray, v: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Squared projection norms of alpha (x) v: direct projectors, the
    interpolation formula in measured quadratic forms, and the vertex-style
    formula in the measured invariants Q_k."""
    phi = np.kron(alpha, v)
    n_comp = bm.dec.num_components
    wt = [float(c.translated_weight) for c in bm.dec.components]

    direct = np.array([float(phi @ proj @ phi) for proj in eigen_projectors(bm)])

    atildes = _atilde_matrices(bm, n_comp - 1)
    forms = [float(phi @ a @ phi) for a in atildes]
    interp = []
    for j in range(n_comp):
        num = sum(wt[j] ** (n_comp - 1 - k) * forms[k] for k in range(n_comp))
        den = 1.0
        for k in range(n_comp):
            if k != j:
                den *= wt[j] - wt[k]
        interp.append(num / den)
    interp = np.array(interp)

    top = (n_comp + 1) // 2 if n_comp % 2 else n_comp // 2
    q = [((-1) ** (k - 1)) * forms[2 * k - 2] for k in range(1, top + 1)]
    measured = []
    for j in range(n_comp):
        poly = sum(((-1) ** (k - 1)) * q[k - 1] * wt[j] ** (2 * (top - k)) for k in range(1, top + 1))
        if n_comp % 2 == 0:
            poly *= wt[j] - 0.5
        den = 1.0
        for k in range(n_comp):
            if k != j:
                den *= wt[j] - wt[k]
        measured.append(poly / den)
    return direct, interp, np.array(measured)


@dataclass
class SupReport:
    value: float
    restarts: int
    iterations: int
    converged: bool


def numeric_sup(
    bm: BModel,
    indices: Iterable[int],
    seed: int = 0,
    restarts: int = 32,
    max_iter: int = 500,
    tol: float = 1e-14,
) -> SupReport:
    """sup of |P_S(alpha (x) v)| over unit alpha, v by alternating ascent.

    Each half-step maximizes a quadratic form exactly (top eigenvector), so
    the objective is monotone; restarts are seeded independently and reduced
    by an order-independent max.
    """
    subset = frozenset(indices)
    n, d = bm.model.n, bm.model.dim_v
    if not subset:
        return SupReport(value=0.0, restarts=restarts, iterations=0, converged=True)
    proj = bm.projector(subset)
    p4 = proj.reshape(n, d, n, d)

    best = 0.0
    total_iter = 0
    converged_all = True
    seeds = np.random.SeedSequence(seed).spawn(restarts)
    for child in seeds:
        rng = np.random.default_rng(child)
        alpha = rng.standard_normal(n)
        alpha /= np.linalg.norm(alpha)
        v = rng.standard_normal(d)
        v /= np.linalg.norm(v)
        value = 0.0
        converged = False
        for _ in range(max_iter):
            m_alpha = np.einsum("avbw,v,w->ab", p4, v, v)
            m_alpha = 0.5 * (m_alpha + m_alpha.T)
            evals, evecs = np.linalg.eigh(m_alpha)
            alpha = evecs[:, -1]
            m_v = np.einsum("avbw,a,b->vw", p4, alpha, alpha)
            m_v = 0.5 * (m_v + m_v.T)
            evals, evecs = np.linalg.eigh(m_v)
            v = evecs[:, -1]
            new_value = float(evals[-1])
            total_iter += 1
            if new_value - value < tol:
                value = max(value, new_value)
                converged = True
                break
            value = new_value
        converged_all &= converged
        best = max(best, value)
    return SupReport(
        value=float(np.sqrt(max(best, 0.0))),
        restarts=restarts,
        iterations=total_iter,
        converged=converged_all,
    )
