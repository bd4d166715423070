"""Constructive recipes for LCD codes on cyclic point sets.

Both recipes place the evaluation points at the n roots of x^n - lambda and
split the multipliers into a head (outside {0, 1, -1}) and a sign tail.  The
gatekeeper is the coefficient r of x^(h-1) in q(x) mod g(x), where q collects
the hook monomial and the shifted twist monomials and g vanishes on the head
points.  Recipe 1 needs r != 0; recipe 2 trades the dimension bound for the
balance equation k = (n - l - m)/2 plus a quadratic twist condition.

Both are sufficient conditions: when a gate fails the builder still returns
the spec, flagged inapplicable, so the generic classifier can settle LCD
status independently.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from .classify import CodeReport, PhiWorkspace, classify
from .codes import TgrsSpec
from .errors import ValidationError
from .gf import Field, FieldElement, element_to_json, field_from_json, field_to_json
from .poly import Poly
from .symm import SymContext


def r_coefficient(k: int, h: int, eta: Sequence[FieldElement],
                  alpha_head: Sequence[FieldElement]) -> FieldElement:
    """Coefficient of x^(h-1) in (x^(h-1) + sum_t eta_t x^(k+t-1)) mod g(x).

    g is the monic polynomial vanishing on the k-1 head points.  With an
    all-zero eta the remainder is x^(h-1) itself and the result is 1.
    """
    head = list(alpha_head)
    if len(head) != k - 1 or k < 2:
        raise ValidationError(f"need k-1 = {k - 1} head points, got {len(head)}")
    if len(set(head)) != len(head):
        raise ValidationError("head points must be pairwise distinct")
    if not 1 <= h <= k - 1:
        raise ValidationError(f"hook must satisfy 1 <= h <= k-1, got h={h}")
    field = head[0].field
    g = Poly.from_roots(field, head)
    coeffs = [field.zero()] * (k + len(eta))
    coeffs[h - 1] = coeffs[h - 1] + field.one()
    for t, e in enumerate(eta):
        coeffs[k + t - 1] = coeffs[k + t - 1] + field.element(e)
    return (Poly(field, coeffs) % g).coeff(h - 1)


@dataclass
class HypothesisCheck:
    condition: str
    holds: bool
    evidence: object = None

    def to_json(self) -> dict:
        ev = self.evidence
        if isinstance(ev, FieldElement):
            ev = element_to_json(ev)
        return {"condition": self.condition, "holds": self.holds, "evidence": ev}


@dataclass
class BuildResult:
    """A constructed spec plus the record of every verified hypothesis."""

    spec: TgrsSpec
    record: list[HypothesisCheck]
    applicable: bool

    def to_json(self) -> dict:
        from .codes import tgrs_spec_to_json
        return {
            "spec": tgrs_spec_to_json(self.spec),
            "record": [c.to_json() for c in self.record],
            "applicable": self.applicable,
        }


def _check_signs(field: Field, signs: Sequence) -> tuple[FieldElement, ...]:
    one, minus = field.one(), -field.one()
    out = []
    for i, s in enumerate(signs):
        e = field.element(s)
        if e != one and e != minus:
            raise ValidationError(f"tail multiplier {i} must be 1 or -1")
        out.append(e)
    return tuple(out)


def _check_head(field: Field, head: Sequence, k: int) -> tuple[FieldElement, ...]:
    if field.q < 5:
        raise ValidationError("head multipliers need an element outside {0,1,-1}: q >= 5 required")
    banned = {field.zero(), field.one(), -field.one()}
    out = []
    for i, x in enumerate(head):
        e = field.element(x)
        if e in banned:
            raise ValidationError(f"head multiplier {i} must avoid 0, 1 and -1")
        out.append(e)
    if len(out) != k - 1:
        raise ValidationError(f"need k-1 = {k - 1} head multipliers, got {len(out)}")
    return tuple(out)


def _arrange_roots(field: Field, n: int, lam: FieldElement,
                   alpha: Optional[Sequence[FieldElement]]) -> tuple[FieldElement, ...]:
    """Roots of x^n - lambda, in caller order when given, ascending otherwise."""
    roots = field.roots_of_xn_minus_lambda(n, lam)
    if alpha is None:
        return tuple(roots)
    given = tuple(field.element(a) for a in alpha)
    if sorted(e.index() for e in given) != [e.index() for e in roots]:
        raise ValidationError("alpha must be a permutation of the roots of x^n - lambda")
    return given


@dataclass(frozen=True)
class Class1Params:
    """Inputs for the first recipe: 2 <= k <= (n-2l-1)/2 on n-th roots of lambda."""

    field: Field
    n: int
    k: int
    h: int
    l: int
    lam: FieldElement
    eta: tuple[FieldElement, ...]
    v_head: tuple[FieldElement, ...]
    v_tail_signs: tuple[FieldElement, ...]
    alpha: Optional[tuple[FieldElement, ...]] = None

    def __post_init__(self):
        f = self.field
        object.__setattr__(self, "lam", f.element(self.lam))
        object.__setattr__(self, "eta", tuple(f.element(e) for e in self.eta))
        n, k, h, l = self.n, self.k, self.h, self.l
        if (f.q - 1) % n != 0:
            raise ValidationError(f"clause 'n | q-1' fails: {n} does not divide {f.q - 1}")
        d = self.lam.order()
        if ((f.q - 1) // n) % d != 0:
            raise ValidationError(
                f"clause 'ord(lambda) | (q-1)/n' fails: ord={d}, (q-1)/n={(f.q - 1) // n}")
        if not (2 <= k and 2 * k <= n - 2 * l - 1):
            raise ValidationError(
                f"clause '2 <= k <= (n-2l-1)/2' fails: k={k}, bound={(n - 2 * l - 1) // 2}")
        if not 1 <= h <= k - 1:
            raise ValidationError(f"clause '1 <= h <= k-1' fails: h={h}, k={k}")
        if not 0 <= l <= n - k - 1:
            raise ValidationError(f"clause '0 <= l <= n-k-1' fails: l={l}")
        if len(self.eta) != l + 1:
            raise ValidationError(f"eta must have length l+1 = {l + 1}")
        object.__setattr__(self, "v_head", _check_head(f, self.v_head, k))
        signs = _check_signs(f, self.v_tail_signs)
        if len(signs) != n - k + 1:
            raise ValidationError(f"need n-k+1 = {n - k + 1} tail multipliers, got {len(signs)}")
        object.__setattr__(self, "v_tail_signs", signs)
        object.__setattr__(self, "alpha", _arrange_roots(f, n, self.lam, self.alpha))


@dataclass(frozen=True)
class Class2Params:
    """Inputs for the second recipe: k = (n-l-m)/2 with a quadratic twist gate."""

    field: Field
    n: int
    h: int
    l: int
    m_gap: int
    lam: FieldElement
    eta: tuple[FieldElement, ...]
    v_head: tuple[FieldElement, ...]
    v_tail_signs: tuple[FieldElement, ...]
    alpha: Optional[tuple[FieldElement, ...]] = None
    k: Optional[int] = None

    def __post_init__(self):
        f = self.field
        object.__setattr__(self, "lam", f.element(self.lam))
        object.__setattr__(self, "eta", tuple(f.element(e) for e in self.eta))
        n, h, l, m = self.n, self.h, self.l, self.m_gap
        if not 0 <= m <= l:
            raise ValidationError(f"clause '0 <= m <= l' fails: m={m}, l={l}")
        if (n - l - m) % 2 != 0:
            raise ValidationError(f"clause 'n-l-m even' fails: n-l-m = {n - l - m}")
        k = (n - l - m) // 2
        if self.k is not None and self.k != k:
            raise ValidationError(f"k must equal (n-l-m)/2 = {k}, got {self.k}")
        object.__setattr__(self, "k", k)
        if k < 2:
            raise ValidationError(f"clause 'k = (n-l-m)/2 >= 2' fails: k={k}")
        if (f.q - 1) % n != 0:
            raise ValidationError(f"clause 'n | q-1' fails: {n} does not divide {f.q - 1}")
        d = self.lam.order()
        if ((f.q - 1) // n) % d != 0:
            raise ValidationError(
                f"clause 'ord(lambda) | (q-1)/n' fails: ord={d}, (q-1)/n={(f.q - 1) // n}")
        if not 1 <= h <= k - 1:
            raise ValidationError(f"clause '1 <= h <= k-1' fails: h={h}, k={k}")
        if not 0 <= l <= n - k - 1:
            raise ValidationError(f"clause '0 <= l <= n-k-1' fails: l={l}")
        if len(self.eta) != l + 1:
            raise ValidationError(f"eta must have length l+1 = {l + 1}")
        object.__setattr__(self, "v_head", _check_head(f, self.v_head, k))
        signs = _check_signs(f, self.v_tail_signs)
        if len(signs) != n - k + 1:
            raise ValidationError(f"need n-k+1 = {n - k + 1} tail multipliers, got {len(signs)}")
        object.__setattr__(self, "v_tail_signs", signs)
        object.__setattr__(self, "alpha", _arrange_roots(f, n, self.lam, self.alpha))


def _base_record(p, klass: int) -> list[HypothesisCheck]:
    f = p.field
    rec = [
        HypothesisCheck("n divides q-1", True, {"n": p.n, "q": f.q}),
        HypothesisCheck("ord(lambda) divides (q-1)/n", True,
                        {"ord": p.lam.order(), "quotient": (f.q - 1) // p.n}),
    ]
    if klass == 1:
        rec.append(HypothesisCheck("2 <= k <= (n-2l-1)/2", True,
                                   {"k": p.k, "bound": (p.n - 2 * p.l - 1) // 2}))
    else:
        rec.append(HypothesisCheck("k = (n-l-m)/2 >= 2", True,
                                   {"k": p.k, "m": p.m_gap}))
    rec.extend([
        HypothesisCheck("1 <= h <= k-1", True, {"h": p.h}),
        HypothesisCheck("0 <= l <= n-k-1", True, {"l": p.l}),
        HypothesisCheck("head multipliers avoid {0,1,-1}", True,
                        [element_to_json(x) for x in p.v_head]),
        HypothesisCheck("tail multipliers lie in {1,-1}", True,
                        [element_to_json(x) for x in p.v_tail_signs]),
        HypothesisCheck("alpha is the full root set of x^n - lambda", True,
                        {"n": p.n, "lambda": element_to_json(p.lam)}),
    ])
    return rec


def _assemble_spec(p) -> TgrsSpec:
    v = p.v_head + p.v_tail_signs
    return TgrsSpec(field=p.field, n=p.n, k=p.k, l=p.l, h=p.h,
                    alpha=p.alpha, v=v, eta=p.eta)


def build_class1(params: Class1Params) -> BuildResult:
    """First recipe; applicable (hence LCD) exactly when the r gate is nonzero."""
    record = _base_record(params, klass=1)
    r = r_coefficient(params.k, params.h, params.eta, params.alpha[: params.k - 1])
    gate = not r.is_zero()
    record.append(HypothesisCheck("r coefficient is nonzero", gate, r))
    spec = _assemble_spec(params)
    return BuildResult(spec=spec, record=record, applicable=gate)


def quadratic_twist_sum(eta: Sequence[FieldElement], m_gap: int) -> FieldElement:
    """sum over t = m..l of eta_t eta_{l+m-t}."""
    eta = list(eta)
    l = len(eta) - 1
    if not 0 <= m_gap <= l:
        raise ValidationError(f"gap must lie in 0..{l}")
    field = eta[0].field
    acc = field.zero()
    for t in range(m_gap, l + 1):
        acc = acc + eta[t] * eta[l + m_gap - t]
    return acc


def build_class2(params: Class2Params) -> BuildResult:
    """Second recipe; needs the r gate and the quadratic twist sum to vanish."""
    record = _base_record(params, klass=2)
    r = r_coefficient(params.k, params.h, params.eta, params.alpha[: params.k - 1])
    r_gate = not r.is_zero()
    record.append(HypothesisCheck("r coefficient is nonzero", r_gate, r))
    qsum = quadratic_twist_sum(params.eta, params.m_gap)
    # cross-check against the tail-sum form, which collapses to the same
    # quadratic on a full root set of x^n - lambda
    ctx = SymContext(params.alpha, t_max=params.n + params.l)
    psi = ctx.psi_values(params.eta)
    l, m = params.l, params.m_gap
    psum = params.field.zero()
    for t in range(m, l + 1):
        psum = psum + params.eta[t] * psi[l + m - t]
    if psum != qsum:
        raise AssertionError("tail-sum form disagrees with the quadratic twist sum")
    q_gate = qsum.is_zero()
    record.append(HypothesisCheck("quadratic twist sum vanishes", q_gate, qsum))
    spec = _assemble_spec(params)
    return BuildResult(spec=spec, record=record, applicable=r_gate and q_gate)


# -- twist vector search ---------------------------------------------------------

@dataclass(frozen=True)
class SearchTemplate:
    """Everything of a recipe parameter set except the twist vector."""

    klass: int
    field: Field
    n: int
    h: int
    l: int
    lam: FieldElement
    v_head: tuple[FieldElement, ...]
    v_tail_signs: tuple[FieldElement, ...]
    k: Optional[int] = None
    m_gap: Optional[int] = None
    alpha: Optional[tuple[FieldElement, ...]] = None

    def __post_init__(self):
        if self.klass not in (1, 2):
            raise ValidationError("template class must be 1 or 2")
        if self.klass == 2 and self.m_gap is None:
            raise ValidationError("second-recipe template requires m_gap")
        # validate structure once via a throwaway all-zero twist vector
        zero_eta = (self.field.zero(),) * (self.l + 1)
        self.params_for(zero_eta)

    def params_for(self, eta: Sequence[FieldElement]):
        if self.klass == 1:
            if self.k is None:
                raise ValidationError("first-recipe template requires k")
            return Class1Params(field=self.field, n=self.n, k=self.k, h=self.h,
                                l=self.l, lam=self.lam, eta=tuple(eta),
                                v_head=self.v_head, v_tail_signs=self.v_tail_signs,
                                alpha=self.alpha)
        return Class2Params(field=self.field, n=self.n, h=self.h, l=self.l,
                            m_gap=self.m_gap, lam=self.lam, eta=tuple(eta),
                            v_head=self.v_head, v_tail_signs=self.v_tail_signs,
                            alpha=self.alpha, k=self.k)


@dataclass
class SearchHit:
    eta: tuple[FieldElement, ...]
    r_value: FieldElement
    report: CodeReport

    def to_json(self) -> dict:
        from .classify import report_to_json
        return {
            "eta": [element_to_json(e) for e in self.eta],
            "r": element_to_json(self.r_value),
            "report": report_to_json(self.report),
        }


class _SearchEnv:
    """Per-template tables making each twist candidate a few dot products."""

    def __init__(self, template: SearchTemplate):
        params = template.params_for((template.field.zero(),) * (template.l + 1))
        self.template = template
        self.field = template.field
        self.params0 = params
        self.k = params.k
        self.n = params.n
        self.l = params.l
        self.h = params.h
        self.alpha = params.alpha
        field = self.field
        g = Poly.from_roots(field, self.alpha[: self.k - 1])
        base = Poly.monomial(field, self.h - 1) % g
        self.r_base = base.coeff(self.h - 1)
        self.r_lin = tuple((Poly.monomial(field, self.k + t - 1) % g).coeff(self.h - 1)
                           for t in range(self.l + 1))
        self.criteria = []
        for I in itertools.combinations(range(self.n), self.k):
            ws = PhiWorkspace(self.alpha, I)
            self.criteria.append(ws.criterion_coeffs(self.h, self.l))

    def eta_from_index(self, idx: int) -> tuple[FieldElement, ...]:
        digits = []
        for _ in range(self.l + 1):
            digits.append(idx % self.field.q)
            idx //= self.field.q
        return tuple(self.field.from_index(d) for d in reversed(digits))

    def evaluate(self, eta: tuple[FieldElement, ...]) -> Optional[SearchHit]:
        if all(e.is_zero() for e in eta):
            return None  # the MDS-certifying set excludes the zero twist
        r = self.r_base
        for e, coef in zip(eta, self.r_lin):
            r = r + e * coef
        if r.is_zero():
            return None
        if self.template.klass == 2:
            if not quadratic_twist_sum(eta, self.template.m_gap).is_zero():
                return None
        one = self.field.one()
        for d in self.criteria:
            acc = self.field.zero()
            for e, c in zip(eta, d):
                acc = acc + e * c
            if (one - acc).is_zero():
                return None
        params = self.template.params_for(eta)
        build = build_class1(params) if self.template.klass == 1 else build_class2(params)
        report = classify(build.spec)
        return SearchHit(eta=eta, r_value=r, report=report)


def _search_block(template: SearchTemplate, start: int, stop: int) -> list[SearchHit]:
    env = _SearchEnv(template)
    hits = []
    for idx in range(start, stop):
        hit = env.evaluate(env.eta_from_index(idx))
        if hit is not None:
            hits.append(hit)
    return hits


def search_eta(template: SearchTemplate, budget: int, strategy: str = "auto",
               seed: Optional[int] = None, workers: int = 1) -> list[SearchHit]:
    """Enumerate twist vectors passing all gates plus the MDS criterion.

    Exhaustive over the q^(l+1) candidates when they fit in the budget
    (strategy 'auto' falls back to seeded random draws otherwise); hits come
    back in lexicographic twist order regardless of worker scheduling.
    """
    if budget <= 0:
        raise ValidationError("search budget must be positive")
    if strategy not in ("auto", "exhaustive", "randomized"):
        raise ValidationError(f"unknown strategy {strategy!r}")
    space = template.field.q ** (template.l + 1)
    exhaustive = space <= budget if strategy == "auto" else strategy == "exhaustive"
    if strategy == "exhaustive" and space > budget:
        raise ValidationError(
            f"exhaustive search needs budget >= {space}, got {budget}")
    if exhaustive:
        if workers > 1:
            step = (space + workers - 1) // workers
            blocks = [(s, min(s + step, space)) for s in range(0, space, step)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_search_block_star,
                                      [(template, a, b) for a, b in blocks]))
            hits = [h for part in parts for h in part]
        else:
            hits = _search_block(template, 0, space)
        return hits
    env = _SearchEnv(template)
    rng = random.Random(seed)
    seen: set[int] = set()
    hits = []
    for _ in range(budget):
        idx = rng.randrange(space)
        if idx in seen:
            continue
        seen.add(idx)
        hit = env.evaluate(env.eta_from_index(idx))
        if hit is not None:
            hits.append(hit)
    hits.sort(key=lambda h: tuple(e.index() for e in h.eta))
    return hits


def _search_block_star(args) -> list[SearchHit]:
    return _search_block(*args)


# -- JSON wire format ----------------------------------------------------------

def _field_from_params_json(obj) -> Field:
    if "field" in obj:
        return field_from_json(obj["field"])
    if "q" in obj:
        return Field(obj["q"])
    raise ValidationError("parameters need either 'q' (prime) or a 'field' object")


def class1_params_from_json(obj) -> Class1Params:
    f = _field_from_params_json(obj)
    try:
        return Class1Params(
            field=f, n=obj["n"], k=obj["k"], h=obj["h"], l=obj["l"],
            lam=f.element(obj["lambda"]),
            eta=tuple(f.element(e) for e in obj["eta"]),
            v_head=tuple(f.element(x) for x in obj["v_head"]),
            v_tail_signs=tuple(f.element(s) for s in obj["v_tail_signs"]),
            alpha=tuple(f.element(a) for a in obj["alpha"]) if "alpha" in obj else None,
        )
    except KeyError as exc:
        raise ValidationError(f"parameters missing field {exc.args[0]!r}") from None


def class2_params_from_json(obj) -> Class2Params:
    f = _field_from_params_json(obj)
    try:
        return Class2Params(
            field=f, n=obj["n"], h=obj["h"], l=obj["l"], m_gap=obj["m_gap"],
            lam=f.element(obj["lambda"]),
            eta=tuple(f.element(e) for e in obj["eta"]),
            v_head=tuple(f.element(x) for x in obj["v_head"]),
            v_tail_signs=tuple(f.element(s) for s in obj["v_tail_signs"]),
            alpha=tuple(f.element(a) for a in obj["alpha"]) if "alpha" in obj else None,
            k=obj.get("k"),
        )
    except KeyError as exc:
        raise ValidationError(f"parameters missing field {exc.args[0]!r}") from None


def template_from_json(obj) -> SearchTemplate:
    f = _field_from_params_json(obj)
    klass = obj.get("class", 1)
    try:
        return SearchTemplate(
            klass=klass, field=f, n=obj["n"], h=obj["h"], l=obj["l"],
            lam=f.element(obj["lambda"]),
            v_head=tuple(f.element(x) for x in obj["v_head"]),
            v_tail_signs=tuple(f.element(s) for s in obj["v_tail_signs"]),
            k=obj.get("k"), m_gap=obj.get("m_gap"),
            alpha=tuple(f.element(a) for a in obj["alpha"]) if "alpha" in obj else None,
        )
    except KeyError as exc:
        raise ValidationError(f"template missing field {exc.args[0]!r}") from None
