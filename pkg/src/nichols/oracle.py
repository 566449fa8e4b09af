"""Independent ground truth for ker(pi): the quantum symmetrizer per
multidegree, a recursive skew-derivation membership test, Nichols-algebra
dimensions, dim(ker pi ∩ U_m), and full verification of the kernel-basis
theorem.

The symmetrizer S_n is built by the factorization
S_n = (S_{n-1} ⊗ id)(id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1),
restricted to one multidegree component; a naive sum over all permutation
operators T_sigma serves as an independent oracle for it.  An element is
zero in the Nichols algebra iff its symmetrizer image vanishes, and the
derivation recursion (zero iff d_1 and d_2 both map to zero) provides the
second, logically independent membership test.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braided import GradedElement, multidegree as word_multidegree, skew_derive
from .errors import (
    DegreeCeilingExceeded,
    HypothesisViolated,
    NonHomogeneous,
    OutOfRange,
)
from .fields import FieldElement
from .jset import compute_J
from .linalg import nullspace, rank as matrix_rank
from .qcalc import BraidingParams, qfact_b
from .rootvec import (
    UhatBasisVector,
    ad_p_closed_form,
    ad_pow_coords,
    l_n,
    uhat_pair_words,
)

DEGREE_CEILING = 14


def words_of_multidegree(a: int, b: int) -> list:
    """All words with a ones and b twos, in lexicographic order."""
    if a < 0 or b < 0:
        raise OutOfRange("multidegree components must be nonnegative")
    if a + b > DEGREE_CEILING:
        raise DegreeCeilingExceeded(
            f"total degree {a + b} exceeds the ceiling {DEGREE_CEILING}"
        )
    out: list = []

    def rec(prefix: list, ones: int, twos: int) -> None:
        if not ones and not twos:
            out.append(tuple(prefix))
            return
        if ones:
            prefix.append(1)
            rec(prefix, ones - 1, twos)
            prefix.pop()
        if twos:
            prefix.append(2)
            rec(prefix, ones, twos - 1)
            prefix.pop()

    rec([], a, b)
    return out


def _c_word(i: int, word: tuple, params: BraidingParams) -> tuple:
    """c_i on a single word: ((..swapped..), scalar q_{l_i l_{i+1}})."""
    if not 1 <= i <= len(word) - 1:
        raise OutOfRange(f"position {i} not in 1..{len(word) - 1}")
    a, b = word[i - 1], word[i]
    swapped = word[: i - 1] + (b, a) + word[i + 1 :]
    lookup = {
        (1, 1): params.q11,
        (1, 2): params.q12,
        (2, 1): params.q21,
        (2, 2): params.q22,
    }
    return swapped, lookup[(a, b)]


def braiding_c(i: int, x: GradedElement, params: BraidingParams) -> GradedElement:
    """The braiding operator c_i on an element of homogeneous word length."""
    out = GradedElement.zero(x.field)
    for w, coeff in x.terms.items():
        swapped, scalar = _c_word(i, w, params)
        out = out + GradedElement.from_word(x.field, swapped, coeff * scalar)
    return out


@dataclass(frozen=True)
class SymmetrizerMatrix:
    multidegree: tuple
    basis: tuple  # words in lexicographic order
    matrix: tuple  # rows; matrix[i][j] = coefficient of basis[i] in S(basis[j])

    def apply(self, x: GradedElement) -> GradedElement:
        field = x.field
        index = {w: i for i, w in enumerate(self.basis)}
        vec = [field.zero] * len(self.basis)
        for w, c in x.terms.items():
            vec[index[w]] = c
        out: dict = {}
        for i, row in enumerate(self.matrix):
            acc = field.zero
            for a, v in zip(row, vec):
                acc = acc + a * v
            if acc:
                out[self.basis[i]] = acc
        return GradedElement(field, out)


@lru_cache(maxsize=512)
def symmetrizer(md: tuple, params: BraidingParams) -> SymmetrizerMatrix:
    """The quantum symmetrizer restricted to one multidegree component."""
    a, b = md
    field = params.field
    basis = words_of_multidegree(a, b)
    n = a + b
    if n <= 1:
        rows = tuple((field.one,) for _ in basis)
        return SymmetrizerMatrix(md, tuple(basis), rows)

    index = {w: i for i, w in enumerate(basis)}
    sub_cache: dict = {}

    def sub_column(prefix: tuple) -> list:
        key = word_multidegree(prefix)
        if key not in sub_cache:
            sub_cache[key] = symmetrizer(key, params)
        sub = sub_cache[key]
        j = sub.basis.index(prefix)
        return [(sub.basis[i], sub.matrix[i][j]) for i in range(len(sub.basis))]

    columns = []
    for w in basis:
        # (id + sum_t c_{n-1}...c_t) w: each chain produces a single term
        terms = [(w, field.one)]
        for t in range(1, n):
            v, scalar = w, field.one
            for i in range(t, n):
                v, s = _c_word(i, v, params)
                scalar = scalar * s
            terms.append((v, scalar))
        # then S_{n-1} ⊗ id
        col = [field.zero] * len(basis)
        for v, scalar in terms:
            if not scalar:
                continue
            prefix, last = v[:-1], v[-1:]
            for u, entry in sub_column(prefix):
                if entry:
                    col[index[u + last]] = col[index[u + last]] + scalar * entry
        columns.append(col)

    rows = tuple(
        tuple(columns[j][i] for j in range(len(basis))) for i in range(len(basis))
    )
    return SymmetrizerMatrix(md, tuple(basis), rows)


def naive_symmetrizer(md: tuple, params: BraidingParams) -> SymmetrizerMatrix:
    """Sum of T_sigma over all of S_n, built over the weak order.

    T_identity = id and T_{sigma s_i} = T_sigma ∘ c_i whenever the length
    increases; well-definedness along different reduced words (Matsumoto)
    is asserted whenever a permutation is reached twice.
    """
    a, b = md
    field = params.field
    basis = words_of_multidegree(a, b)
    n = a + b
    index = {w: i for i, w in enumerate(basis)}
    identity = tuple(range(n))
    # each T_sigma sends a word to scalar * word: store {word: (word', scalar)}
    ops = {identity: {w: (w, field.one) for w in basis}}
    frontier = [identity]
    while frontier:
        new_frontier = []
        for sigma in frontier:
            op = ops[sigma]
            for i in range(1, n):
                if sigma[i - 1] >= sigma[i]:
                    continue  # length would not increase
                tau = sigma[: i - 1] + (sigma[i], sigma[i - 1]) + sigma[i + 1 :]
                new_op = {}
                for w in basis:
                    v, s1 = _c_word(i, w, params)
                    u, s2 = op[v]
                    new_op[w] = (u, s1 * s2)
                if tau in ops:
                    if ops[tau] != new_op:
                        raise AssertionError(
                            "braided operators violate Matsumoto invariance"
                        )
                else:
                    ops[tau] = new_op
                    new_frontier.append(tau)
        frontier = new_frontier

    size = len(basis)
    rows = [[field.zero] * size for _ in range(size)]
    for op in ops.values():
        for w, (u, s) in op.items():
            j, i = index[w], index[u]
            rows[i][j] = rows[i][j] + s
    return SymmetrizerMatrix(md, tuple(basis), tuple(tuple(r) for r in rows))


def nichols_dim(md: tuple, params: BraidingParams) -> int:
    """dim of the Nichols algebra in one multidegree: rank of the symmetrizer."""
    sym = symmetrizer(tuple(md), params)
    return matrix_rank(params.field, [list(r) for r in sym.matrix])


def in_kernel(x: GradedElement, params: BraidingParams) -> bool:
    """Symmetrizer membership test: x maps to zero in the Nichols algebra."""
    if x.is_zero():
        return True
    deg = x.degree()  # raises NonHomogeneous when mixed
    return symmetrizer(deg, params).apply(x).is_zero()


def in_kernel_by_derivations(x: GradedElement, params: BraidingParams) -> bool:
    """Derivation recursion: zero iff d_1 and d_2 images are both zero.

    Base case: elements of total degree <= 1 are in the kernel iff zero.
    Verdicts are memoized on the canonical term form.
    """
    if not x.is_zero() and not x.is_homogeneous():
        raise NonHomogeneous("membership test requires a homogeneous element")
    memo: dict = {}

    def rec(y: GradedElement) -> bool:
        if y.is_zero():
            return True
        key = y.key()
        if key in memo:
            return memo[key]
        total = sum(y.degree())
        if total <= 1:
            verdict = False
        else:
            verdict = rec(skew_derive(1, y, params)) and rec(
                skew_derive(2, y, params)
            )
        memo[key] = verdict
        return verdict

    return rec(x)


def ker_cap_Um(m: int, params: BraidingParams) -> tuple:
    """(dimension, basis in u_hat coordinates) of ker(pi) ∩ U_m."""
    if not qfact_b(m, params):
        raise HypothesisViolated(f"({m})_q^! b_{m} = 0; the u_hat basis is undefined")
    field = params.field
    sym = symmetrizer((m, 2), params)
    index = {w: i for i, w in enumerate(sym.basis)}
    composite = [[field.zero] * (m + 1) for _ in sym.basis]
    for i in range(m + 1):
        image = sym.apply(uhat_pair_words(i, m, params))
        for w, c in image.terms.items():
            composite[index[w]][i] = c
    kernel = nullspace(field, composite, ncols=m + 1)
    basis = [UhatBasisVector(params, m, tuple(v)) for v in kernel]
    return len(basis), basis


@dataclass
class KernelReport:
    m: int
    dim: int
    candidates: list  # (label, in_kernel) pairs
    independent: bool
    matches_theorem: bool

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "dim": self.dim,
            "candidates": [
                {"label": label, "in_kernel": ok} for label, ok in self.candidates
            ],
            "independent": self.independent,
            "matches_theorem": self.matches_theorem,
        }


def verify_main(m: int, params: BraidingParams) -> KernelReport:
    """Check the kernel-basis theorem at one parameter point.

    Builds the candidates (ad x1)^(m-j)(P_j) for j in J1 ∩ [0,m] and
    (ad x1)^(m-n)(L_n) for n in J2 ∩ [0,m], then verifies kernel membership,
    linear independence, and the dimension count against the symmetrizer.
    """
    if not qfact_b(m, params):
        raise HypothesisViolated(f"({m})_q^! b_{m} = 0; theorem hypothesis fails")
    field = params.field
    classification = compute_J(m, params)

    candidates: list = []
    vectors: list = []
    for entry in classification.members:
        if entry.cls == "J1":
            power = m - entry.j
            label = f"adP({power},{entry.j})"
            vec = ad_p_closed_form(power, entry.j, params).scale(params.q12**power)
        else:
            power = m - entry.j
            base = l_n(entry.j, params, entry.witness, check_kernel=False)
            label = f"L({entry.j})" if power == 0 else f"adL({power},{entry.j})"
            vec = ad_pow_coords(power, base, params)
        candidates.append((label, in_kernel(vec.to_words(), params)))
        vectors.append(vec)

    if vectors:
        coord_matrix = [list(v.coords) for v in vectors]
        independent = matrix_rank(field, coord_matrix) == len(vectors)
    else:
        independent = True

    dim, _ = ker_cap_Um(m, params)
    matches = (
        dim == len(classification.members)
        and all(ok for _, ok in candidates)
        and independent
        and len(candidates) == dim
    )
    return KernelReport(
        m=m,
        dim=dim,
        candidates=candidates,
        independent=independent,
        matches_theorem=matches,
    )
