"""Color algebras from structure constants, identity validators, the
eps-commutator, left-multiplication operators, and eps-derivation spaces.

A ColorAlgebra stores e_i e_j = sum_k c_ij^k e_k with every c_ij^k a
CycScalar; grading compatibility (|e_i e_j| = |e_i| + |e_j|) is enforced at
construction.  Validators evaluate the defining identities on basis triples,
which is exhaustive because the identities are multilinear.
"""

from __future__ import annotations

from .glinalg import GradedMap, GradedSpace, hom_space, mat_mul, tensor_space, zeros
from .grading import Bicharacter, Degree
from .scalars import CycScalar, parse_scalar

_ZERO = CycScalar.zero()
_ONE = CycScalar.one()


class AlgebraError(ValueError):
    pass


def _zero_vec(n):
    return [_ZERO] * n


class ColorAlgebra:
    """Graded algebra with product given on basis pairs.

    ``products`` maps (i, j) to a dense coefficient vector over the basis;
    absent pairs multiply to zero.
    """

    kind = "algebra"

    def __init__(self, space: GradedSpace, eps: Bicharacter, products):
        self.space = space
        self.eps = eps
        clean = {}
        n = space.dim
        for (i, j), vec in products.items():
            vec = list(vec)
            if len(vec) != n:
                raise AlgebraError(f"product vector for ({i},{j}) has wrong length")
            if all(v.is_zero() for v in vec):
                continue
            target = space.degrees[i] + space.degrees[j]
            for k, c in enumerate(vec):
                if not c.is_zero() and space.degrees[k] != target:
                    raise AlgebraError(
                        f"grading violation: {space.names[i]}*{space.names[j]} "
                        f"hits {space.names[k]} of degree {space.degrees[k]}, "
                        f"expected {target}")
            clean[(i, j)] = vec
        self.products = clean

    @property
    def dim(self) -> int:
        return self.space.dim

    def product(self, i: int, j: int):
        vec = self.products.get((i, j))
        return list(vec) if vec is not None else _zero_vec(self.dim)

    def mult(self, u, v):
        """Bilinear extension of the basis product to coefficient vectors."""
        out = _zero_vec(self.dim)
        for i, a in enumerate(u):
            if a.is_zero():
                continue
            for j, b in enumerate(v):
                if b.is_zero():
                    continue
                coef = a * b
                vec = self.products.get((i, j))
                if vec is None:
                    continue
                for k, c in enumerate(vec):
                    if not c.is_zero():
                        out[k] = out[k] + coef * c
        return out

    def left_mult_matrix(self, i: int):
        """Matrix of y -> e_i y in the basis (column j = e_i e_j)."""
        M = zeros(self.dim, self.dim)
        for j in range(self.dim):
            vec = self.products.get((i, j))
            if vec is None:
                continue
            for k, c in enumerate(vec):
                M[k][j] = c
        return M

    def degree_of(self, i: int) -> Degree:
        return self.space.degrees[i]

    def __repr__(self):
        return f"ColorAlgebra(dim={self.dim}, |products|={len(self.products)})"


class LieColorAlgebra(ColorAlgebra):
    """Same storage as ColorAlgebra; the product is the bracket."""

    kind = "lie"

    def bracket(self, i: int, j: int):
        return self.product(i, j)


def lie_from_brackets(space, eps, brackets) -> LieColorAlgebra:
    """Build a Lie color algebra from brackets on ordered pairs, filling the
    mirrored pairs by eps-skew-symmetry: [y,x] = -eps(|y|,|x|) [x,y]."""
    full = {}
    for (i, j), vec in brackets.items():
        full[(i, j)] = list(vec)
    for (i, j), vec in list(full.items()):
        if (j, i) not in full and i != j:
            s = -eps(space.degrees[j], space.degrees[i])
            full[(j, i)] = [s * c for c in vec]
    return LieColorAlgebra(space, eps, full)


# ---------------------------------------------------------------------------
# validators

def _scale(c, vec):
    return [c * v for v in vec]

def _sub(u, v):
    return [a - b for a, b in zip(u, v)]

def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def _residual_dict(space, vec):
    return {space.names[k]: c for k, c in enumerate(vec) if not c.is_zero()}


def validate_left_symmetric(A: ColorAlgebra):
    """Violations of (xy)z - x(yz) = eps(|x|,|y|)((yx)z - y(xz)) on basis
    triples; the empty list means the identity holds."""
    n = A.dim
    space, eps = A.space, A.eps

    def assoc(i, j, k):
        left = A.mult(A.product(i, j), _basis(n, k))
        right = A.mult(_basis(n, i), A.product(j, k))
        return _sub(left, right)

    out = []
    for i in range(n):
        for j in range(n):
            e = eps(space.degrees[i], space.degrees[j])
            for k in range(n):
                r = _sub(assoc(i, j, k), _scale(e, assoc(j, i, k)))
                if any(not c.is_zero() for c in r):
                    out.append(((space.names[i], space.names[j], space.names[k]),
                                _residual_dict(space, r)))
    return out


def validate_lie_color(L: LieColorAlgebra):
    """Violations of eps-skew-symmetry and the eps-Jacobi identity."""
    n = L.dim
    space, eps = L.space, L.eps
    out = []
    for i in range(n):
        for j in range(n):
            r = _add(L.product(i, j),
                     _scale(eps(space.degrees[i], space.degrees[j]),
                            L.product(j, i)))
            if any(not c.is_zero() for c in r):
                out.append((("skew", space.names[i], space.names[j]),
                            _residual_dict(space, r)))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                di, dj, dk = space.degrees[i], space.degrees[j], space.degrees[k]
                r = _zero_vec(n)
                for (a, b, c), (da, dc) in (((i, j, k), (di, dk)),
                                            ((j, k, i), (dj, di)),
                                            ((k, i, j), (dk, dj))):
                    term = L.mult(L.product(a, b), _basis(n, c))
                    r = _add(r, _scale(eps(dc, da), term))
                if any(not v.is_zero() for v in r):
                    out.append((("jacobi", space.names[i], space.names[j],
                                 space.names[k]), _residual_dict(space, r)))
    return out


def _basis(n, k):
    v = _zero_vec(n)
    v[k] = _ONE
    return v


# ---------------------------------------------------------------------------
# constructions

def commutator_algebra(A: ColorAlgebra, force: bool = False) -> LieColorAlgebra:
    """The eps-commutator bracket [x,y] = xy - eps(|x|,|y|) yx.

    Left-symmetry guarantees the result is a Lie color algebra, so input
    failing the validator is refused unless ``force`` is set (useful for
    reproducing bracket tables printed next to a defective product table).
    """
    if not force:
        bad = validate_left_symmetric(A)
        if bad:
            raise AlgebraError(
                f"input is not left-symmetric ({len(bad)} violating triples); "
                f"pass force=True to build the bracket anyway")
    space, eps = A.space, A.eps
    brackets = {}
    for i in range(A.dim):
        for j in range(A.dim):
            vec = _sub(A.product(i, j),
                       _scale(eps(space.degrees[i], space.degrees[j]),
                              A.product(j, i)))
            if any(not c.is_zero() for c in vec):
                brackets[(i, j)] = vec
    return LieColorAlgebra(space, eps, brackets)


def left_mult_nilpotent(A: ColorAlgebra) -> bool:
    """True iff every basis left multiplication y -> e_i y is nilpotent.

    The nilpotency index of an endomorphism of an n-dimensional space is at
    most n, so the n-th power decides.
    """
    n = A.dim
    for i in range(n):
        M = A.left_mult_matrix(i)
        P = M
        for _ in range(n - 1):
            P = mat_mul(P, M)
        if any(not v.is_zero() for row in P for v in row):
            return False
    return True


def epsilon_derivations(A: ColorAlgebra, V) -> GradedSpace:
    """The space of eps-derivations A -> V: maps with
    f(x1 x2) = f(x1) x2 + eps(|f|,|x1|) x1 f(x2).

    Returned as a GradedSpace whose meta holds each derivation's coordinate
    vector over the elementary-hom basis of Hom(A, V).
    """
    H = hom_space(A.space, V.space)
    T = tensor_space(A.space, A.space)
    target = hom_space(T, V.space)
    tgt_idx = target.meta_index()
    pair_idx = T.meta_index()
    defect = GradedMap.zero(H, target)

    n = A.dim
    for h, payload in enumerate(H.meta):
        _, s, w = payload
        d_f = H.degrees[h]
        for i in range(n):
            for j in range(n):
                # f(e_i e_j): coefficient of e_s in the product lands on e_w
                c = A.products.get((i, j))
                if c is not None and not c[s].is_zero():
                    row = tgt_idx[("hom", pair_idx[("tensor", i, j)], w)]
                    defect.add(row, h, c[s])
                # -f(e_i) e_j
                if i == s:
                    vec = V.right_act(w, j)
                    for t, v in enumerate(vec):
                        if not v.is_zero():
                            row = tgt_idx[("hom", pair_idx[("tensor", i, j)], t)]
                            defect.add(row, h, -v)
                # -eps(|f|,|e_i|) e_i f(e_j)
                if j == s:
                    e = A.eps(d_f, A.space.degrees[i])
                    vec = V.left_act(i, w)
                    for t, v in enumerate(vec):
                        if not v.is_zero():
                            row = tgt_idx[("hom", pair_idx[("tensor", i, j)], t)]
                            defect.add(row, h, -(e * v))
    items = []
    count = 0
    for d in H.degrees_present():
        globals_ = H.global_indices(d)
        for local_vec in defect.kernel_at(d):
            full = [_ZERO] * H.dim
            for loc, gi in enumerate(globals_):
                full[gi] = local_vec[loc]
            items.append((f"D{count}", d, ("deriv", tuple(full))))
            count += 1
    return GradedSpace(A.space.group, items)


# ---------------------------------------------------------------------------
# JSON input

def algebra_from_json(space_or_group, eps, obj, lie=False):
    """Read the {"basis": [...], "products": [...]} fragment.

    ``basis`` entries are {"name": str, "degree": [components]}; ``products``
    entries are {"left": name, "right": name,
    "result": [{"basis": name, "coeff": scalar}]}.
    """
    if not isinstance(obj, dict) or "basis" not in obj:
        raise AlgebraError(f"algebra needs a 'basis' list: {obj!r}")
    group = getattr(space_or_group, "group", space_or_group)
    items = []
    for entry in obj["basis"]:
        items.append((entry["name"], group.degree(entry["degree"])))
    space = GradedSpace(group, items)
    products = {}
    for entry in obj.get("products", ()):
        i = space.find(entry["left"])
        j = space.find(entry["right"])
        vec = products.setdefault((i, j), _zero_vec(space.dim))
        for term in entry["result"]:
            k = space.find(term["basis"])
            vec[k] = vec[k] + parse_scalar(term["coeff"])
    cls = LieColorAlgebra if lie else ColorAlgebra
    return cls(space, eps, products)
