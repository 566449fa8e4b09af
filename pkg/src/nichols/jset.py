"""The index set J = J1 ∪ J2, multiplicities of m*alpha1 + 2*alpha2, and the
numeric root-vector criterion.

J is built strictly incrementally: j is admitted iff the sign equation
q^(j(j-1)/2) (-r)^j s = -1 holds and the pairwise q-integer condition holds
against every previously admitted member.  Classification into J1/J2 follows
the characterization lemma; the raw construction, the lemma, and (in positive
characteristic, when b_j != 0) the simplified divisibility form are all
evaluated independently, with disagreements recorded as anomalies rather
than resolved silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import HypothesisViolated, OutOfRange, UnsupportedM
from .qcalc import (
    BraidingParams,
    b_k,
    first_equation,
    j_condition,
    q_int,
    qfact_b,
)


def _divides(d: int, x: int) -> bool:
    """d | x with the convention 0 | x iff x = 0."""
    if d == 0:
        return x == 0
    return x % d == 0


@dataclass(frozen=True)
class JEntry:
    j: int
    cls: str  # "J1" or "J2"
    witness: int | None  # the j_n of a J2 member
    conditions: tuple  # ((n, condition-held), ...) over earlier members


@dataclass
class JClassification:
    bound: int
    members: list
    anomalies: list = dataclass_field(default_factory=list)

    def j_set(self) -> list:
        return [e.j for e in self.members]

    def j1(self) -> list:
        return [e.j for e in self.members if e.cls == "J1"]

    def j2(self) -> list:
        return [e.j for e in self.members if e.cls == "J2"]

    def entry(self, j: int) -> JEntry | None:
        return next((e for e in self.members if e.j == j), None)

    def count_upto(self, m: int) -> int:
        return sum(1 for e in self.members if e.j <= m)

    def to_json(self) -> dict:
        data = {
            "J": self.j_set(),
            "J1": self.j1(),
            "J2": [{"n": e.j, "j_n": e.witness} for e in self.members if e.cls == "J2"],
            "bound": self.bound,
        }
        if self.anomalies:
            data["anomalies"] = list(self.anomalies)
        return data


def _condition2_witnesses(j: int, admitted: list, params: BraidingParams) -> list:
    """Earlier members n < j realizing the lemma's second condition."""
    p = params.field.characteristic
    q, r = params.q, params.r
    one = params.field.one
    out = []
    for n in admitted:
        d = j - n
        if d % 2 == 0:
            if q ** (n + j - 1) * r * r == one and _divides(2 * p, d):
                out.append(n)
        else:
            if q ** ((n + j - 1) // 2) * r == -one and _divides(p, d):
                out.append(n)
    return out


def compute_J(m_max: int, params: BraidingParams, p: int | None = None) -> JClassification:
    """Classify J ∩ [0, m_max] with witnesses and cross-check anomalies."""
    field = params.field
    if p is None:
        p = field.characteristic
    elif p != field.characteristic:
        raise ValueError(
            f"explicit characteristic {p} contradicts the field ({field.characteristic})"
        )
    one = field.one
    q, r = params.q, params.r

    result = JClassification(bound=m_max, members=[])
    admitted: list = []
    for j in range(m_max + 1):
        first = first_equation(j, params)
        conditions = tuple((n, j_condition(j, n, params)) for n in admitted)
        raw_member = first and all(ok for _, ok in conditions)

        cond1 = first and all(
            q ** (n + j - 1) * r * r != one for n in admitted
        )
        witnesses = _condition2_witnesses(j, admitted, params)
        lemma_member = cond1 or bool(witnesses)
        if raw_member != lemma_member and qfact_b(j, params):
            result.anomalies.append(
                f"j={j}: raw definition ({raw_member}) and characterization "
                f"lemma ({lemma_member}) disagree under (j)_q^! b_j != 0"
            )
        if not raw_member:
            continue

        if cond1 and witnesses:
            result.anomalies.append(f"j={j}: satisfies both J1 and J2 conditions")
        if cond1:
            cls, witness = "J1", None
        elif witnesses:
            cls = "J2"
            j1_so_far = {e.j for e in result.members if e.cls == "J1"}
            preferred = [n for n in witnesses if n in j1_so_far]
            witness = (preferred or witnesses)[0]
        else:
            result.anomalies.append(
                f"j={j}: raw member matching neither lemma condition; "
                "classified J1 by fallback"
            )
            cls, witness = "J1", None

        # simplified divisibility form of condition (2), valid once b_j != 0
        if p and b_k(j, params):
            simplified = any(
                q ** (n + j - 1) * r * r == one
                and (_divides(p, j - n) if p % 2 else _divides(4, j - n))
                for n in admitted
            )
            if simplified != bool(witnesses):
                result.anomalies.append(
                    f"j={j}: condition (2) ({bool(witnesses)}) and its "
                    f"divisibility simplification ({simplified}) disagree "
                    "although b_j != 0"
                )

        result.members.append(JEntry(j, cls, witness, conditions))
        admitted.append(j)
    return result


def m_prime(m: int, params: BraidingParams):
    """The count m' appearing in the multiplicity corollary."""
    if m % 2 == 1:
        return (m + 1) // 2
    half = m // 2
    q, r, s = params.q, params.r, params.s
    if q ** (m * m // 4) * r**half * s == -params.field.one:
        return half + 1
    return half


def multiplicity(m: int, params: BraidingParams) -> int:
    """The multiplicity of m*alpha1 + 2*alpha2: m' - |J ∩ [0,m]|."""
    if not qfact_b(m, params):
        raise HypothesisViolated(f"({m})_q^! b_{m} = 0; the corollary does not apply")
    count = compute_J(m, params).count_upto(m)
    value = m_prime(m, params) - count
    if value < 0:
        raise AssertionError(
            f"negative multiplicity {value} at m={m}: theorem violated"
        )
    return value


def root_vector_criterion(k: int, l: int, params: BraidingParams) -> bool:
    """Whether [x1^k x2 x1^l x2] is a root vector: |J ∩ [0,k+l]| <= l."""
    if k < l:
        raise OutOfRange(f"requires k >= l, got k={k}, l={l}")
    if not qfact_b(k + l, params):
        raise HypothesisViolated(f"({k + l})_q^! b_{k + l} = 0")
    if k == l:
        if params.q ** (k * k) * params.r**k * params.s != -params.field.one:
            raise HypothesisViolated(
                f"k = l = {k} requires q^(k^2) r^k s = -1"
            )
    return compute_J(k + l, params).count_upto(k + l) <= l


def non_root_table_check(m: int, params: BraidingParams) -> bool:
    """Evaluate the non-root condition row for m in {1, 2, 3, 4, 6}.

    Returns True when m*alpha1 + 2*alpha2 is NOT a root.
    """
    if m not in (1, 2, 3, 4, 6):
        raise UnsupportedM(f"the table covers m in {{1,2,3,4,6}}, got {m}")
    if not qfact_b(m, params):
        raise HypothesisViolated(f"({m})_q^! b_{m} = 0")
    field = params.field
    q, r, s = params.q, params.r, params.s
    one = field.one
    if m == 1:
        return not (1 + s) * (1 - r * s)
    if m == 2:
        return not (1 + s) * (1 - r * s) * (1 + q * r * r * s)
    if m == 3:
        return s == -one and not q_int(3, -(q * r))
    if m == 4:
        return (
            (s == -one and not q_int(3, -(q * r)))
            or (s == -one and q**3 * r * r == -one)
            or (r * s == one and not q_int(3, -(q * q * r)))
        )
    return q == one and s == -one and not q_int(3, -r)
