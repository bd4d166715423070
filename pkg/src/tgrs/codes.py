"""Construction of twisted generalized Reed-Solomon codes.

A TgrsSpec pins down the single-hook code family: length n, dimension k,
twist exponents k+0..k+l fed by hook coefficient h, evaluation points alpha,
column multipliers v, and twist vector eta.  From it we build the generator
matrix, the closed-form parity-check matrix, and evaluation encoders.  The
fully general multi-hook encoder is available through GeneralTwistSpec.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .gf import Field, FieldElement, element_to_json, field_from_json, field_to_json
from .linalg import MatGF
from .symm import SymContext


@dataclass(frozen=True)
class TgrsSpec:
    """Parameters of a single-hook twisted GRS code.

    Constraints: 2 <= k <= n, 0 <= l <= n-k-1, 1 <= h <= k-1, alpha pairwise
    distinct, v nonzero, eta of length l+1.  The hook h = 0 is excluded from
    this family; use GeneralTwistSpec for it.
    """

    field: Field
    n: int
    k: int
    l: int
    h: int
    alpha: tuple[FieldElement, ...]
    v: tuple[FieldElement, ...]
    eta: tuple[FieldElement, ...]

    def __post_init__(self):
        f = self.field
        object.__setattr__(self, "alpha", tuple(f.element(a) for a in self.alpha))
        object.__setattr__(self, "v", tuple(f.element(x) for x in self.v))
        object.__setattr__(self, "eta", tuple(f.element(e) for e in self.eta))
        n, k, l, h = self.n, self.k, self.l, self.h
        if not 2 <= k <= n:
            raise ValidationError(f"need 2 <= k <= n, got k={k}, n={n}")
        if not 0 <= l <= n - k - 1:
            raise ValidationError(
                f"twist degree bound violated: need 0 <= l <= n-k-1 = {n - k - 1}, got l={l}")
        if not 1 <= h <= k - 1:
            raise ValidationError(f"hook must satisfy 1 <= h <= k-1 = {k - 1}, got h={h}")
        if n > f.q:
            raise ValidationError(f"cannot place {n} distinct points in GF({f.q})")
        if len(self.alpha) != n:
            raise ValidationError(f"alpha must have length n={n}")
        seen: dict[FieldElement, int] = {}
        for i, a in enumerate(self.alpha):
            if a in seen:
                raise ValidationError(
                    f"evaluation points must be distinct: positions {seen[a]} and {i} coincide")
            seen[a] = i
        if len(self.v) != n:
            raise ValidationError(f"v must have length n={n}")
        for i, x in enumerate(self.v):
            if x.is_zero():
                raise ValidationError(f"column multiplier v[{i}] must be nonzero")
        if len(self.eta) != l + 1:
            raise ValidationError(f"eta must have length l+1 = {l + 1}")

    def hook_is_boundary(self) -> bool:
        """True when the hook sits at its upper bound h = k-1."""
        return self.h == self.k - 1

    def sym_context(self) -> SymContext:
        return SymContext(self.alpha, t_max=self.n + self.l)


def generator_matrix(spec: TgrsSpec) -> MatGF:
    """k x n generator: monomial rows by ascending degree, twisted at row h."""
    f = spec.field
    rows = []
    for i in range(spec.k):
        row = []
        for j in range(spec.n):
            a = spec.alpha[j]
            val = a**i
            if i == spec.h:
                for t, e in enumerate(spec.eta):
                    val = val + e * a ** (spec.k + t)
            row.append(spec.v[j] * val)
        rows.append(row)
    return MatGF(f, rows)


def parity_check_matrix(spec: TgrsSpec, ctx: SymContext | None = None) -> MatGF:
    """Closed-form (n-k) x n parity-check matrix.

    Row j carries (u_i / v_i) alpha_i^j; the last l+1 rows are corrected by
    w_tilde_i Psi_{n-k-1-j} so that every generator row is annihilated.
    """
    f = spec.field
    n, k, l = spec.n, spec.k, spec.l
    if ctx is None:
        ctx = spec.sym_context()
    u = ctx.dual_coeffs()
    _, wt = ctx.hook_weights(spec.h)
    psi = ctx.psi_values(spec.eta)
    scale = [ui / vi for ui, vi in zip(u, spec.v)]
    rows = []
    for j in range(n - k):
        row = []
        for i in range(n):
            val = spec.alpha[i] ** j
            if j >= n - k - l - 1:
                val = val - wt[i] * psi[n - k - 1 - j]
            row.append(scale[i] * val)
        rows.append(row)
    return MatGF(f, rows)


def encode(spec: TgrsSpec, message: Sequence) -> tuple[FieldElement, ...]:
    """Evaluation encoding of a length-k message; equals message @ generator."""
    f = spec.field
    msg = [f.element(x) for x in message]
    if len(msg) != spec.k:
        raise ValidationError(f"message must have length k={spec.k}")
    coeffs = list(msg) + [f.zero()] * (spec.l + 1)
    for t, e in enumerate(spec.eta):
        coeffs[spec.k + t] = msg[spec.h] * e
    out = []
    for a, vi in zip(spec.alpha, spec.v):
        acc = f.zero()
        for c in reversed(coeffs):
            acc = acc * a + c
        out.append(vi * acc)
    return tuple(out)


@dataclass(frozen=True)
class GeneralTwistSpec:
    """Fully general multi-hook twisted evaluation code.

    Twist exponents are a subset of {0..n-k-1} (may be empty), hooks a
    subset of {0..k-1}, and coeffs a k x (n-k) matrix whose support must
    lie inside hooks x twist_exponents.  With an all-zero matrix this is a
    plain GRS encoder.
    """

    field: Field
    n: int
    k: int
    twist_exponents: tuple[int, ...]
    hooks: tuple[int, ...]
    coeffs: tuple[tuple[FieldElement, ...], ...]
    alpha: tuple[FieldElement, ...]
    v: tuple[FieldElement, ...]

    def __post_init__(self):
        f = self.field
        object.__setattr__(self, "twist_exponents", tuple(sorted(set(self.twist_exponents))))
        object.__setattr__(self, "hooks", tuple(sorted(set(self.hooks))))
        object.__setattr__(self, "coeffs",
                           tuple(tuple(f.element(c) for c in row) for row in self.coeffs))
        object.__setattr__(self, "alpha", tuple(f.element(a) for a in self.alpha))
        object.__setattr__(self, "v", tuple(f.element(x) for x in self.v))
        n, k = self.n, self.k
        if not 0 <= k <= n:
            raise ValidationError(f"need 0 <= k <= n, got k={k}, n={n}")
        if any(not 0 <= j <= n - k - 1 for j in self.twist_exponents):
            raise ValidationError(f"twist exponents must lie in 0..n-k-1 = {n - k - 1}")
        if any(not 0 <= i <= k - 1 for i in self.hooks):
            raise ValidationError(f"hooks must lie in 0..k-1 = {k - 1}")
        if len(self.coeffs) != k or any(len(r) != n - k for r in self.coeffs):
            raise ValidationError(f"coefficient matrix must be {k} x {n - k}")
        lset, pset = set(self.twist_exponents), set(self.hooks)
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if not c.is_zero() and (i not in pset or j not in lset):
                    raise ValidationError(
                        f"coefficient ({i},{j}) outside the hook x twist support")
        if len(self.alpha) != n or len(set(self.alpha)) != n:
            raise ValidationError("alpha must be n pairwise-distinct points")
        if len(self.v) != n or any(x.is_zero() for x in self.v):
            raise ValidationError("v must be n nonzero multipliers")

    @classmethod
    def from_single_hook(cls, spec: TgrsSpec) -> "GeneralTwistSpec":
        rows = []
        for i in range(spec.k):
            row = [spec.field.zero()] * (spec.n - spec.k)
            if i == spec.h:
                for t, e in enumerate(spec.eta):
                    row[t] = e
            rows.append(tuple(row))
        return cls(spec.field, spec.n, spec.k, tuple(range(spec.l + 1)), (spec.h,),
                   tuple(rows), spec.alpha, spec.v)


def encode_general(spec: GeneralTwistSpec, message: Sequence) -> tuple[FieldElement, ...]:
    """Evaluate the twisted message polynomial at all points, scaled by v."""
    f = spec.field
    msg = [f.element(x) for x in message]
    if len(msg) != spec.k:
        raise ValidationError(f"message must have length k={spec.k}")
    coeffs = list(msg) + [f.zero()] * (spec.n - spec.k)
    for i in spec.hooks:
        for j in spec.twist_exponents:
            coeffs[spec.k + j] = coeffs[spec.k + j] + msg[i] * spec.coeffs[i][j]
    out = []
    for a, vi in zip(spec.alpha, spec.v):
        acc = f.zero()
        for c in reversed(coeffs):
            acc = acc * a + c
        out.append(vi * acc)
    return tuple(out)


# -- JSON wire format ----------------------------------------------------------

def tgrs_spec_to_json(spec: TgrsSpec) -> dict:
    return {
        "field": field_to_json(spec.field),
        "n": spec.n,
        "k": spec.k,
        "l": spec.l,
        "h": spec.h,
        "alpha": [element_to_json(a) for a in spec.alpha],
        "v": [element_to_json(x) for x in spec.v],
        "eta": [element_to_json(e) for e in spec.eta],
    }


def tgrs_spec_from_json(obj) -> TgrsSpec:
    if not isinstance(obj, dict):
        raise ValidationError("code spec must be a JSON object")
    missing = [key for key in ("field", "n", "k", "l", "h", "alpha", "v", "eta")
               if key not in obj]
    if missing:
        raise ValidationError(f"code spec missing fields: {', '.join(missing)}")
    f = field_from_json(obj["field"])
    for name in ("n", "k", "l", "h"):
        if not isinstance(obj[name], int):
            raise ValidationError(f"field '{name}' must be an integer")
    return TgrsSpec(
        field=f, n=obj["n"], k=obj["k"], l=obj["l"], h=obj["h"],
        alpha=tuple(f.element(a) for a in obj["alpha"]),
        v=tuple(f.element(x) for x in obj["v"]),
        eta=tuple(f.element(e) for e in obj["eta"]),
    )
