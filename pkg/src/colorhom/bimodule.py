"""Bimodules over a left-symmetric color algebra.

The two defining axioms, on homogeneous x, y in A and w in V:

  bm1:  (xy)w - x(yw) = eps(|x|,|y|) ((yx)w - y(xw))
  bm2:  (xw)y - x(wy) = eps(|x|,|w|) ((wx)y - w(xy))

Constructors cover the natural bimodule (A acting on itself), the trivial
one, Hom(A,V) with its right-trivial action, tensor products of a complete
bimodule with another, and the right-trivial action on cochain spaces that
the cohomology layer reuses.  Everything is stored as structure constants
over the basis so downstream code only ever sees matrices.
"""

from __future__ import annotations

from .algebra import AlgebraError, ColorAlgebra, LieColorAlgebra
from .glinalg import GradedSpace, exterior_basis, hom_space, straighten, tensor_space
from .grading import Degree
from .scalars import CycScalar, parse_scalar

_ZERO = CycScalar.zero()
_ONE = CycScalar.one()


class BimoduleError(ValueError):
    pass


def _zero_vec(n):
    return [_ZERO] * n


def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


def _scale(c, vec):
    return [c * v for v in vec]


def _residuals(space, vec):
    return {space.names[k]: c for k, c in enumerate(vec) if not c.is_zero()}


class Bimodule:
    """Left and right action constants of an algebra on a graded space.

    ``left`` maps (i, w) to the dense V-vector e_i . v_w; ``right`` maps
    (w, i) to v_w . e_i.  Absent keys act as zero.  Both actions must
    respect the grading: A_a V_b lies in V_{a+b} and symmetrically.
    """

    def __init__(self, algebra: ColorAlgebra, space: GradedSpace, left, right):
        self.algebra = algebra
        self.space = space
        self.left = _clean_action(
            left, algebra.space, space, lambda i, w: (i, w), "left")
        self.right = _clean_action(
            right, algebra.space, space, lambda w, i: (i, w), "right")

    @property
    def eps(self):
        return self.algebra.eps

    def left_act(self, i: int, w: int):
        vec = self.left.get((i, w))
        return list(vec) if vec is not None else _zero_vec(self.space.dim)

    def right_act(self, w: int, i: int):
        vec = self.right.get((w, i))
        return list(vec) if vec is not None else _zero_vec(self.space.dim)

    def left_act_vec(self, avec, vvec):
        out = _zero_vec(self.space.dim)
        for i, a in enumerate(avec):
            if a.is_zero():
                continue
            for w, b in enumerate(vvec):
                if b.is_zero():
                    continue
                vec = self.left.get((i, w))
                if vec is None:
                    continue
                c = a * b
                for t, v in enumerate(vec):
                    if not v.is_zero():
                        out[t] = out[t] + c * v
        return out

    def right_act_vec(self, vvec, avec):
        out = _zero_vec(self.space.dim)
        for w, b in enumerate(vvec):
            if b.is_zero():
                continue
            for i, a in enumerate(avec):
                if a.is_zero():
                    continue
                vec = self.right.get((w, i))
                if vec is None:
                    continue
                c = b * a
                for t, v in enumerate(vec):
                    if not v.is_zero():
                        out[t] = out[t] + c * v
        return out

    def __repr__(self):
        return (f"Bimodule(dim={self.space.dim}, |left|={len(self.left)}, "
                f"|right|={len(self.right)})")


def _clean_action(raw, aspace, vspace, keyfun, label):
    out = {}
    for key, vec in raw.items():
        vec = list(vec)
        if len(vec) != vspace.dim:
            raise BimoduleError(f"{label} action vector at {key} has wrong length")
        if all(v.is_zero() for v in vec):
            continue
        i, w = keyfun(*key)
        target = aspace.degrees[i] + vspace.degrees[w]
        for t, v in enumerate(vec):
            if not v.is_zero() and vspace.degrees[t] != target:
                raise BimoduleError(
                    f"grading violation in {label} action at {key}: component "
                    f"{vspace.names[t]} has degree {vspace.degrees[t]}, "
                    f"expected {target}")
        out[key] = vec
    return out


# ---------------------------------------------------------------------------
# validators and predicates

def validate_bimodule(V: Bimodule):
    """Violations of bm1/bm2 on all basis triples; empty list means valid."""
    A = V.algebra
    n, m = A.dim, V.space.dim
    eps = A.eps
    out = []
    for i in range(n):
        di = A.space.degrees[i]
        for j in range(n):
            dj = A.space.degrees[j]
            e_ij = eps(di, dj)
            for w in range(m):
                dw = V.space.degrees[w]
                ew = _basis(m, w)
                # bm1: (xy)w - x(yw) vs eps(|x|,|y|)((yx)w - y(xw))
                lhs = _sub(V.left_act_vec(A.product(i, j), ew),
                           V.left_act_vec(_basis(n, i), V.left_act(j, w)))
                rhs = _sub(V.left_act_vec(A.product(j, i), ew),
                           V.left_act_vec(_basis(n, j), V.left_act(i, w)))
                r = _sub(lhs, _scale(e_ij, rhs))
                if any(not c.is_zero() for c in r):
                    out.append((("bm1", A.space.names[i], A.space.names[j],
                                 V.space.names[w]), _residuals(V.space, r)))
                # bm2: (xw)y - x(wy) vs eps(|x|,|w|)((wx)y - w(xy))
                lhs = _sub(V.right_act_vec(V.left_act(i, w), _basis(n, j)),
                           V.left_act_vec(_basis(n, i), V.right_act(w, j)))
                rhs = _sub(V.right_act_vec(V.right_act(w, i), _basis(n, j)),
                           V.right_act_vec(ew, A.product(i, j)))
                r = _sub(lhs, _scale(eps(di, dw), rhs))
                if any(not c.is_zero() for c in r):
                    out.append((("bm2", A.space.names[i], V.space.names[w],
                                 A.space.names[j]), _residuals(V.space, r)))
    return out


def is_right_trivial(V: Bimodule) -> bool:
    return not V.right


def is_complete(V: Bimodule) -> bool:
    """Whether the right action satisfies the right-module law over the
    commutator bracket: w[x,y] = (wx)y - eps(|x|,|y|)(wy)x."""
    A = V.algebra
    n, m = A.dim, V.space.dim
    eps = A.eps
    for i in range(n):
        di = A.space.degrees[i]
        for j in range(n):
            dj = A.space.degrees[j]
            bracket = _sub(A.product(i, j), _scale(eps(di, dj), A.product(j, i)))
            for w in range(m):
                lhs = V.right_act_vec(_basis(m, w), bracket)
                rhs = _sub(V.right_act_vec(V.right_act(w, i), _basis(n, j)),
                           _scale(eps(di, dj),
                                  V.right_act_vec(V.right_act(w, j), _basis(n, i))))
                if any(not c.is_zero() for c in _sub(lhs, rhs)):
                    return False
    return True


def _basis(n, k):
    v = _zero_vec(n)
    v[k] = _ONE
    return v


# ---------------------------------------------------------------------------
# constructors

def natural_bimodule(A: ColorAlgebra) -> Bimodule:
    """A acting on itself by its own product on both sides."""
    left = {(i, j): A.product(i, j) for i in range(A.dim) for j in range(A.dim)}
    right = {(w, i): A.product(w, i) for w in range(A.dim) for i in range(A.dim)}
    return Bimodule(A, A.space, left, right)


def trivial_bimodule(A: ColorAlgebra, degree=None, name: str = "u") -> Bimodule:
    """One-dimensional space with both actions zero."""
    G = A.space.group
    d = G.zero if degree is None else (degree if isinstance(degree, Degree)
                                       else G.degree(degree))
    space = GradedSpace(G, [(name, d)])
    return Bimodule(A, space, {}, {})


def hom_bimodule(A: ColorAlgebra, V: Bimodule) -> Bimodule:
    """Right-trivial bimodule on Hom(A, V) with left action

        (x f)(z) = x f(z) - eps(|x|,|f|) f(xz) + eps(|x|,|f|) f(x) z.
    """
    H = hom_space(A.space, V.space)
    idx = H.meta_index()
    eps = A.eps
    n, m = A.dim, V.space.dim
    left = {}
    for a in range(n):
        da = A.space.degrees[a]
        for h in range(H.dim):
            _, s, w = H.meta[h]
            e = eps(da, H.degrees[h])
            out = _zero_vec(H.dim)
            # x f(z): nonzero only where f does not vanish, i.e. z = s
            for t, v in enumerate(V.left_act(a, w)):
                if not v.is_zero():
                    out[idx[("hom", s, t)]] = out[idx[("hom", s, t)]] + v
            # -eps f(xz): f picks the e_s component of each product x e_z
            for z in range(n):
                c = A.products.get((a, z))
                if c is not None and not c[s].is_zero():
                    k = idx[("hom", z, w)]
                    out[k] = out[k] - e * c[s]
            # +eps f(x) z: nonzero only when x = e_s
            if a == s:
                for z in range(n):
                    for t, v in enumerate(V.right_act(w, z)):
                        if not v.is_zero():
                            k = idx[("hom", z, t)]
                            out[k] = out[k] + e * v
            if any(not v.is_zero() for v in out):
                left[(a, h)] = out
    return Bimodule(A, H, left, {})


def tensor_bimodule(V: Bimodule, W: Bimodule) -> Bimodule:
    """V (x) W with

        x(v (x) w) = (xv - eps(|x|,|v|)vx) (x) w + eps(|x|,|v|) v (x) (xw)
        (v (x) w)x = v (x) (wx)

    Requires V complete; the bimodule axioms genuinely fail otherwise, so
    non-complete V is an error rather than a warning.
    """
    if V.algebra is not W.algebra and V.algebra.space.names != W.algebra.space.names:
        raise BimoduleError("tensor factors live over different algebras")
    if not is_complete(V):
        raise BimoduleError("tensor_bimodule requires the first factor to be "
                            "complete (right-module law over the bracket)")
    A = V.algebra
    T = tensor_space(V.space, W.space)
    idx = T.meta_index()
    eps = A.eps
    left, right = {}, {}
    for p in range(T.dim):
        _, v, w = T.meta[p]
        dv = V.space.degrees[v]
        for a in range(A.dim):
            e = eps(A.space.degrees[a], dv)
            out = _zero_vec(T.dim)
            xv = _sub(V.left_act(a, v), _scale(e, V.right_act(v, a)))
            for t, c in enumerate(xv):
                if not c.is_zero():
                    k = idx[("tensor", t, w)]
                    out[k] = out[k] + c
            for t, c in enumerate(W.left_act(a, w)):
                if not c.is_zero():
                    k = idx[("tensor", v, t)]
                    out[k] = out[k] + e * c
            if any(not c.is_zero() for c in out):
                left[(a, p)] = out
            out = _zero_vec(T.dim)
            for t, c in enumerate(W.right_act(w, a)):
                if not c.is_zero():
                    k = idx[("tensor", v, t)]
                    out[k] = out[k] + c
            if any(not c.is_zero() for c in out):
                right[(p, a)] = out
    return Bimodule(A, T, left, right)


# ---------------------------------------------------------------------------
# cochain spaces and the module structure on them

def cochain_space(A: ColorAlgebra, V: Bimodule, n: int) -> GradedSpace:
    """C^n(A,V) = Hom((Lambda^{n-1} A) (x) A, V) for n >= 1: the first n-1
    arguments are alternating, the last is unconstrained."""
    if n < 1:
        raise ValueError("cochain_space covers n >= 1 only")
    wedge = exterior_basis(A.space, n - 1, A.eps)
    return hom_space(tensor_space(wedge, A.space), V.space)


def cochain_module_action(A: ColorAlgebra, V: Bimodule, n: int) -> Bimodule:
    """Right-trivial left action of A on C^{n+1}(A,V):

      (x f)(x_1,...,x_{n+1}) = x f(x_1,...,x_{n+1})
        - eps(|x|, |f|+sum|x_i|) f(x_1,...,x_n, x x_{n+1})
        - sum_j eps(|x|, |f|+sum_{i<j}|x_i|) f(x_1,..,[x,x_j],..,x_n, x_{n+1})
        + eps(|x|, |f|+sum|x_i|) f(x_1,...,x_n, x) x_{n+1}

    For n = 0 this is exactly the Hom(A,V) action of hom_bimodule.
    """
    if n < 0:
        raise ValueError("cochain_module_action needs n >= 0")
    C = cochain_space(A, V, n + 1)
    wedge = exterior_basis(A.space, n, A.eps)
    T = tensor_space(wedge, A.space)
    cidx = C.meta_index()
    tidx = T.meta_index()
    eps = A.eps
    aspace = A.space

    def slot(word_idx, last, v):
        return cidx[("hom", tidx[("tensor", word_idx, last)], v)]

    left = {}
    for a in range(A.dim):
        da = aspace.degrees[a]
        for h in range(C.dim):
            _, pair, v0 = C.meta[h]
            _, w0, l0 = T.meta[pair]
            word0 = wedge.meta[w0]
            d_f = C.degrees[h]
            out = _zero_vec(C.dim)

            # x f(...): add x . v0 at the same argument tuple
            for t, c in enumerate(V.left_act(a, v0)):
                if not c.is_zero():
                    out[slot(w0, l0, t)] = out[slot(w0, l0, t)] + c

            # the remaining terms mention f at modified argument tuples; we
            # scatter over every target tuple (word, last) whose modification
            # reaches f's own tuple (word0, l0)
            e_full = eps(da, d_f) * _eps_prod(eps, da, [aspace.degrees[i]
                                                        for i in word0])

            # -eps(|x|,|f|+sum|x_i|) f(x_1..x_n, x x_last): targets share
            # word0; need (x e_last) to hit e_{l0}
            for last in range(A.dim):
                c = A.products.get((a, last))
                if c is not None and not c[l0].is_zero():
                    k = slot(w0, last, v0)
                    out[k] = out[k] - e_full * c[l0]

            # +eps(|x|,|f|+sum|x_i|) f(x_1..x_n, x) x_last
            if a == l0:
                for last in range(A.dim):
                    for t, c in enumerate(V.right_act(v0, last)):
                        if not c.is_zero():
                            k = slot(w0, last, t)
                            out[k] = out[k] + e_full * c

            # -sum_j eps(|x|,|f|+sum_{i<j}|x_i|) f(.., [x,x_j], ..): for each
            # target word W and slot j, replacing W_j by a bracket component
            # must straighten to word0
            for wi in range(wedge.dim):
                W = wedge.meta[wi]
                for j in range(len(W)):
                    br = _sub(A.product(a, W[j]),
                              _scale(eps(da, aspace.degrees[W[j]]),
                                     A.product(W[j], a)))
                    e_j = eps(da, d_f) * _eps_prod(
                        eps, da, [aspace.degrees[i] for i in W[:j]])
                    for k, c in enumerate(br):
                        if c.is_zero():
                            continue
                        modified = W[:j] + (k,) + W[j + 1:]
                        st = straighten(aspace, modified, eps)
                        if st is None:
                            continue
                        coeff, canon = st
                        if canon != word0:
                            continue
                        tk = slot(wi, l0, v0)
                        out[tk] = out[tk] - e_j * c * coeff

            if any(not c.is_zero() for c in out):
                left[(a, h)] = out
    return Bimodule(A, C, left, {})


def _eps_prod(eps, d, degrees):
    """eps(d, sum of degrees) computed as a product of pairwise values, the
    reading that stays meaningful for non-biadditive tables."""
    val = _ONE
    for g in degrees:
        val = val * eps(d, g)
    return val


# ---------------------------------------------------------------------------
# left modules over a Lie color algebra

class LieModule:
    """Graded left module over a Lie color algebra: constants for x . w."""

    def __init__(self, lie: LieColorAlgebra, space: GradedSpace, left):
        self.lie = lie
        self.space = space
        self.left = _clean_action(
            left, lie.space, space, lambda i, w: (i, w), "left")

    @property
    def eps(self):
        return self.lie.eps

    def left_act(self, i: int, w: int):
        vec = self.left.get((i, w))
        return list(vec) if vec is not None else _zero_vec(self.space.dim)

    def left_act_vec(self, avec, vvec):
        out = _zero_vec(self.space.dim)
        for i, a in enumerate(avec):
            if a.is_zero():
                continue
            for w, b in enumerate(vvec):
                if b.is_zero():
                    continue
                vec = self.left.get((i, w))
                if vec is None:
                    continue
                c = a * b
                for t, v in enumerate(vec):
                    if not v.is_zero():
                        out[t] = out[t] + c * v
        return out


def validate_left_module(W: LieModule):
    """Violations of the left-module law [x,y]w = x(yw) - eps(|x|,|y|) y(xw)."""
    L = W.lie
    n, m = L.dim, W.space.dim
    eps = L.eps
    out = []
    for i in range(n):
        for j in range(n):
            e = eps(L.space.degrees[i], L.space.degrees[j])
            for w in range(m):
                lhs = W.left_act_vec(L.product(i, j), _basis(m, w))
                rhs = _sub(W.left_act_vec(_basis(n, i), W.left_act(j, w)),
                           _scale(e, W.left_act_vec(_basis(n, j),
                                                    W.left_act(i, w))))
                r = _sub(lhs, rhs)
                if any(not c.is_zero() for c in r):
                    out.append((("module", L.space.names[i], L.space.names[j],
                                 W.space.names[w]), _residuals(W.space, r)))
    return out


def lie_module_from_bimodule(L: LieColorAlgebra, B: Bimodule) -> LieModule:
    """View a right-trivial bimodule's left action as a module over L.

    For right-trivial bimodules axiom bm1 is literally the left-module law
    over the commutator bracket, so this is just a reinterpretation.
    """
    if not is_right_trivial(B):
        raise BimoduleError("only right-trivial bimodules restrict to left "
                            "modules this way")
    return LieModule(L, B.space, B.left)


# ---------------------------------------------------------------------------
# JSON input

def module_from_json(A: ColorAlgebra, obj) -> Bimodule:
    """Read {"basis": [...], "left": [...], "right": [...]} or the built-in
    names "natural" and "trivial"."""
    if obj == "natural" or obj is None:
        return natural_bimodule(A)
    if obj == "trivial":
        return trivial_bimodule(A)
    if not isinstance(obj, dict) or "basis" not in obj:
        raise BimoduleError(f"module needs a 'basis' list: {obj!r}")
    G = A.space.group
    items = [(e["name"], G.degree(e["degree"])) for e in obj["basis"]]
    space = GradedSpace(G, items)
    left, right = {}, {}
    for entry in obj.get("left", ()):
        i = A.space.find(entry["x"])
        w = space.find(entry["v"])
        vec = left.setdefault((i, w), _zero_vec(space.dim))
        for term in entry["result"]:
            t = space.find(term["basis"])
            vec[t] = vec[t] + parse_scalar(term["coeff"])
    for entry in obj.get("right", ()):
        w = space.find(entry["v"])
        i = A.space.find(entry["x"])
        vec = right.setdefault((w, i), _zero_vec(space.dim))
        for term in entry["result"]:
            t = space.find(term["basis"])
            vec[t] = vec[t] + parse_scalar(term["coeff"])
    return Bimodule(A, space, left, right)
