"""Truncation Schubert problems: detection, marching products, verification.

A pair (sigma, alpha) in S_n with a level t defines a truncation
Schubert problem when sigma's last descent is at most t <= 2n and the K
tree of the n-stabilization of alpha has a single labeled leaf rho.
The marching formula then reads the expansion of the product of the
sigma and rho classes off the leaves of the tree rooted at the star
product sigma *_n alpha.

:func:`verify` checks three routes term by term: the signed tree
expansion, the basis expansion of G_sigma * r_t(G_{id * alpha}), and
the direct product oracle for (sigma, rho).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .grothendieck import (
    ExpansionMap,
    expand_in_basis,
    expansion_to_json_obj,
    grothendieck,
    structure_constants,
)
from .permutations import Permutation
from .trees import (
    DEFAULT_NODE_CEILING,
    Mode,
    build_tree,
    signed_expansion,
    unique_labeled_leaf,
)

DEFAULT_ORACLE_WINDOW_CEILING = 8


class OracleCeilingExceeded(RuntimeError):
    """The problem is too large for the polynomial oracle at this ceiling."""


@dataclass(frozen=True)
class TruncationProblem:
    sigma: Permutation
    alpha: Permutation
    n: int
    t: int
    rho: Permutation

    def base_length(self) -> int:
        return self.sigma.length() + self.alpha.length()

    def star_root(self) -> Permutation:
        return self.sigma.star(self.alpha, self.n)

    def to_json_obj(self) -> dict:
        return {
            "sigma": self.sigma.text(),
            "alpha": self.alpha.text(),
            "n": self.n,
            "t": self.t,
            "rho": self.rho.text(),
        }


@dataclass
class VerificationReport:
    problem: TruncationProblem
    mode: Mode
    tree_expansion: ExpansionMap
    oracle_expansion: ExpansionMap
    match: bool
    discrepancies: list[dict] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "problem": self.problem.to_json_obj(),
            "mode": self.mode,
            "tree_expansion": expansion_to_json_obj(self.tree_expansion),
            "oracle_expansion": expansion_to_json_obj(self.oracle_expansion),
            "match": self.match,
            "discrepancies": self.discrepancies,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2)


def detect(
    sigma: Permutation,
    alpha: Permutation,
    n: int,
    t: int,
    node_ceiling: int = DEFAULT_NODE_CEILING,
) -> TruncationProblem | None:
    """Recognize (sigma, alpha, n, t) as a truncation Schubert problem.

    Returns None when sigma's last descent exceeds t or the stabilized
    alpha tree does not have a single labeled leaf.
    """
    if not 1 <= t <= 2 * n:
        raise ValueError(f"t must lie in [1, {2 * n}], got {t}")
    if sigma.size() > n or alpha.size() > n:
        raise ValueError(f"both windows must fit in S_{n}")
    last = sigma.last_descent()
    if last is not None and last > t:
        return None
    rho = unique_labeled_leaf(alpha, t, n, node_ceiling)
    if rho is None:
        return None
    return TruncationProblem(sigma, alpha, n, t, rho)


def truncation_product(
    problem: TruncationProblem,
    mode: Mode = "K",
    node_ceiling: int = DEFAULT_NODE_CEILING,
) -> ExpansionMap:
    """Signed leaf expansion of the tree rooted at sigma *_n alpha.

    In cohomology mode every sign is +1 and only permutations of length
    sigma + rho appear.
    """
    tree = build_tree(problem.star_root(), problem.t, mode, node_ceiling)
    return signed_expansion(tree, problem.base_length())


def truncate_grothendieck_via_tree(gamma: Permutation, t: int) -> ExpansionMap:
    """Expansion of r_t(G_gamma) read off the K tree of gamma.

    Summing coefficient * G_label reproduces the truncation exactly.
    """
    tree = build_tree(gamma, t, "K")
    return signed_expansion(tree, gamma.length())


def _restrict_to_degree(expansion: ExpansionMap, degree: int) -> ExpansionMap:
    return {perm: c for perm, c in expansion.items() if perm.length() == degree}


def verify(
    problem: TruncationProblem,
    mode: Mode = "K",
    oracle_window_ceiling: int = DEFAULT_ORACLE_WINDOW_CEILING,
) -> VerificationReport:
    """Three-way check of the marching formula against the polynomial oracle.

    Compares the tree expansion with the basis expansion of
    G_sigma * r_t(G_{id * alpha}) and with the direct (sigma, rho)
    product, term by term.  In cohomology mode the polynomial routes are
    restricted to the top degree layer length(sigma) + length(rho).
    """
    star = problem.star_root()
    if star.size() > oracle_window_ceiling:
        raise OracleCeilingExceeded(
            f"window {star.size()} exceeds the oracle ceiling {oracle_window_ceiling}"
        )
    tree_expansion = truncation_product(problem, mode)
    truncated = grothendieck(problem.alpha.stabilize(problem.n)).truncate(problem.t)
    product_expansion = expand_in_basis(grothendieck(problem.sigma) * truncated)
    oracle_expansion = structure_constants(problem.sigma, problem.rho)
    if mode == "cohomology":
        top = problem.sigma.length() + problem.rho.length()
        product_expansion = _restrict_to_degree(product_expansion, top)
        oracle_expansion = _restrict_to_degree(oracle_expansion, top)

    discrepancies = []
    for perm in sorted(
        set(tree_expansion) | set(product_expansion) | set(oracle_expansion),
        key=lambda q: (q.length(), q.text()),
    ):
        values = (
            tree_expansion.get(perm, 0),
            product_expansion.get(perm, 0),
            oracle_expansion.get(perm, 0),
        )
        if len(set(values)) != 1:
            discrepancies.append(
                {
                    "perm": perm.text(),
                    "tree": values[0],
                    "product": values[1],
                    "oracle": values[2],
                }
            )
    return VerificationReport(
        problem=problem,
        mode=mode,
        tree_expansion=tree_expansion,
        oracle_expansion=oracle_expansion,
        match=not discrepancies,
        discrepancies=discrepancies,
    )
