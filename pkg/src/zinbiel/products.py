"""Products built from partial data: semidirect, crossed, bicrossed.

Same comment notation as the extending module ( <| |> -| |- om * ), with the
extra convention that u.v written between top-space elements means the
multiplication of the top algebra W.  Every construction here is a
specialization of the unified product, and the builders reuse the extending
machinery so the specializations stay identities by construction rather
than by parallel code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iterproduct

from .core import (
    Algebra,
    CheckReport,
    ConsistencyError,
    condition_over_tuples,
    is_zinbiel,
    subspace_check,
)
from .exactlin import Matrix, Tensor3, rank, rat, vadd, vsub, vunit
from .extending import (
    ExtendingDatum,
    InclusionPresentation,
    build_unified,
    extract_datum,
    verify_datum,
)


@dataclass(frozen=True)
class Bimodule:
    """Two actions of Z on V; the axioms are decided by is_bimodule."""

    base: Algebra
    dimV: int
    actR: Tensor3
    actL: Tensor3

    def __post_init__(self):
        n, m = self.base.dim, self.dimV
        if self.actR.dims != (n, m, m):
            raise ValueError(f"actR must have dims {(n, m, m)}")
        if self.actL.dims != (m, n, m):
            raise ValueError(f"actL must have dims {(m, n, m)}")

    @classmethod
    def trivial(cls, base: Algebra, dimV: int) -> "Bimodule":
        n, m = base.dim, dimV
        return cls(base, dimV, Tensor3.zero(n, m, m), Tensor3.zero(m, n, m))

    @classmethod
    def regular(cls, base: Algebra) -> "Bimodule":
        """V = Z acting on itself by its own multiplication."""
        return cls(base, base.dim, base.mult, base.mult)


@dataclass(frozen=True)
class CrossedSystem:
    """Projections and a cocycle-style map between two Zinbiel algebras."""

    base: Algebra
    top: Algebra
    projR: Tensor3
    projL: Tensor3
    omega: Tensor3

    def __post_init__(self):
        n, w = self.base.dim, self.top.dim
        if self.projR.dims != (w, n, n):
            raise ValueError(f"projR must have dims {(w, n, n)}")
        if self.projL.dims != (n, w, n):
            raise ValueError(f"projL must have dims {(n, w, n)}")
        if self.omega.dims != (w, w, n):
            raise ValueError(f"omega must have dims {(w, w, n)}")
        if not is_zinbiel(self.top).passed:
            raise ValueError("top algebra must be Zinbiel")


@dataclass(frozen=True)
class MatchedPair:
    """Four actions linking two Zinbiel algebras, no cocycle part."""

    base: Algebra
    top: Algebra
    actL: Tensor3
    projR: Tensor3
    projL: Tensor3
    actR: Tensor3

    def __post_init__(self):
        n, w = self.base.dim, self.top.dim
        expected = {
            "actL": (w, n, w),
            "projR": (w, n, n),
            "projL": (n, w, n),
            "actR": (n, w, w),
        }
        for name, dims in expected.items():
            if getattr(self, name).dims != dims:
                raise ValueError(f"{name} must have dims {dims}")
        if not is_zinbiel(self.base).passed:
            raise ValueError("base algebra must be Zinbiel")
        if not is_zinbiel(self.top).passed:
            raise ValueError("top algebra must be Zinbiel")

    @classmethod
    def trivial(cls, base: Algebra, top: Algebra) -> "MatchedPair":
        n, w = base.dim, top.dim
        return cls(base, top, Tensor3.zero(w, n, w), Tensor3.zero(w, n, n),
                   Tensor3.zero(n, w, n), Tensor3.zero(n, w, w))


@dataclass(frozen=True)
class DeformationWitness:
    """An invertible endomorphism of the top space."""

    sigma: Matrix

    def __post_init__(self):
        if self.sigma.rows != self.sigma.cols or rank(self.sigma) != self.sigma.rows:
            raise ValueError("sigma must be invertible")


BIMODULE_LABELS = ("B1", "B2", "B3")


def is_bimodule(b: Bimodule) -> CheckReport:
    """The three action axioms, in display order:

        B1: (x.y) |> v = x |> (y |> v + v <| y)
        B2: (v <| x) <| y = v <| (x.y + y.x)
        B3: (x |> v) <| y = x |> (v <| y + y |> v)
    """
    if not is_zinbiel(b.base).passed:
        raise ValueError("base algebra must be Zinbiel")
    n, m = b.base.dim, b.dimV
    ez = b.base.unit
    eu = lambda j: vunit(m, j)
    prod = b.base.product
    ar = lambda x, u: b.actR.combine(x, u)
    al = lambda u, x: b.actL.combine(u, x)

    conds = [
        ("B1", (n, n, m),
         lambda i, j, k: ar(prod(ez(i), ez(j)), eu(k)),
         lambda i, j, k: ar(ez(i), vadd(ar(ez(j), eu(k)), al(eu(k), ez(j))))),
        ("B2", (m, n, n),
         lambda i, j, k: al(al(eu(i), ez(j)), ez(k)),
         lambda i, j, k: al(eu(i), vadd(prod(ez(j), ez(k)), prod(ez(k), ez(j))))),
        ("B3", (n, m, n),
         lambda i, j, k: al(ar(ez(i), eu(j)), ez(k)),
         lambda i, j, k: ar(ez(i), vadd(al(eu(j), ez(k)), ar(ez(k), eu(j))))),
    ]
    return CheckReport.from_results(
        condition_over_tuples(label, dims, lhs, rhs)
        for label, dims, lhs, rhs in conds
    )


def _bimodule_datum(b: Bimodule) -> ExtendingDatum:
    n, m = b.base.dim, b.dimV
    return ExtendingDatum(
        b.base, m, b.actL, b.actR,
        Tensor3.zero(n, m, n), Tensor3.zero(m, n, n),
        Tensor3.zero(m, m, n), Tensor3.zero(m, m, m))


def semidirect(b: Bimodule) -> Algebra:
    """Z + V with (x,u).(y,v) = (x.y, x |> v + u <| y)."""
    report = is_bimodule(b)
    if not report.passed:
        bad = ", ".join(r.label for r in report.failing())
        raise ValueError(f"bimodule axioms fail: {bad}")
    return build_unified(_bimodule_datum(b), force=True)


CROSSED_LABELS = ("CS1", "CS2", "CS3", "CS4", "CS5", "CS6", "CS7")


def _crossed_datum(cs: CrossedSystem) -> ExtendingDatum:
    n, w = cs.base.dim, cs.top.dim
    return ExtendingDatum(
        cs.base, w, Tensor3.zero(w, n, w), Tensor3.zero(n, w, w),
        cs.projL, cs.projR, cs.omega, cs.top.mult)


def crossed(cs: CrossedSystem) -> tuple[CheckReport, Algebra]:
    """Crossed-system conditions and the crossed product
    (x,u)o(y,v) = (x.y + x -| v + u |- y + om(u,v), u.v)."""
    if not is_zinbiel(cs.base).passed:
        raise ValueError("base algebra must be Zinbiel")
    n, w = cs.base.dim, cs.top.dim
    ez = cs.base.unit
    eu = lambda j: vunit(w, j)
    prod = cs.base.product
    wprod = cs.top.product
    pl = lambda x, u: cs.projL.combine(x, u)
    pr = lambda u, x: cs.projR.combine(u, x)
    om = lambda u, v: cs.omega.combine(u, v)

    conds = [
        # CS1: (x -| v).y = x.(v |- y + y -| v)
        ("CS1", (n, w, n),
         lambda i, j, k: prod(pl(ez(i), eu(j)), ez(k)),
         lambda i, j, k: prod(ez(i), vadd(pr(eu(j), ez(k)), pl(ez(k), eu(j))))),
        # CS2: (u |- x).y = u |- (x.y + y.x)
        ("CS2", (w, n, n),
         lambda i, j, k: prod(pr(eu(i), ez(j)), ez(k)),
         lambda i, j, k: pr(eu(i), vadd(prod(ez(j), ez(k)), prod(ez(k), ez(j))))),
        # CS3: om(u,v).x + (u.v) |- x = u |- (v |- x + x -| v)
        ("CS3", (w, w, n),
         lambda i, j, k: vadd(prod(om(eu(i), eu(j)), ez(k)),
                              pr(wprod(eu(i), eu(j)), ez(k))),
         lambda i, j, k: pr(eu(i), vadd(pr(eu(j), ez(k)), pl(ez(k), eu(j))))),
        # CS4: (x.y) -| w = x.(y -| w + w |- y)
        ("CS4", (n, n, w),
         lambda i, j, k: pl(prod(ez(i), ez(j)), eu(k)),
         lambda i, j, k: prod(ez(i), vadd(pl(ez(j), eu(k)), pr(eu(k), ez(j))))),
        # CS5: (x -| v) -| w = x.(om(v,w) + om(w,v)) + x -| (v.w + w.v)
        ("CS5", (n, w, w),
         lambda i, j, k: pl(pl(ez(i), eu(j)), eu(k)),
         lambda i, j, k: vadd(
             prod(ez(i), vadd(om(eu(j), eu(k)), om(eu(k), eu(j)))),
             pl(ez(i), vadd(wprod(eu(j), eu(k)), wprod(eu(k), eu(j)))))),
        # CS6: (u |- x) -| w = u |- (x -| w + w |- x)
        ("CS6", (w, n, w),
         lambda i, j, k: pl(pr(eu(i), ez(j)), eu(k)),
         lambda i, j, k: pr(eu(i), vadd(pl(ez(j), eu(k)), pr(eu(k), ez(j))))),
        # CS7: om(u,v) -| w + om(u.v, w) = u |- (om(v,w) + om(w,v)) + om(u, v.w + w.v)
        ("CS7", (w, w, w),
         lambda i, j, k: vadd(pl(om(eu(i), eu(j)), eu(k)),
                              om(wprod(eu(i), eu(j)), eu(k))),
         lambda i, j, k: vadd(
             pr(eu(i), vadd(om(eu(j), eu(k)), om(eu(k), eu(j)))),
             om(eu(i), vadd(wprod(eu(j), eu(k)), wprod(eu(k), eu(j)))))),
    ]
    report = CheckReport.from_results(
        condition_over_tuples(label, dims, lhs, rhs)
        for label, dims, lhs, rhs in conds
    )
    return report, build_unified(_crossed_datum(cs), force=True)


def _matched_datum(mp: MatchedPair) -> ExtendingDatum:
    n, w = mp.base.dim, mp.top.dim
    return ExtendingDatum(
        mp.base, w, mp.actL, mp.actR, mp.projL, mp.projR,
        Tensor3.zero(w, w, n), mp.top.mult)


MATCHED_NOTE = ("matched-pair conditions are the unified-datum conditions "
                "specialized to omega = 0 and star = top multiplication; "
                "action signatures follow the product formula")


def bicrossed(mp: MatchedPair) -> tuple[CheckReport, Algebra]:
    """Matched-pair conditions and the bicrossed product
    (x,u)o(y,v) = (x.y + x -| v + u |- y, x |> v + u <| y + u.v)."""
    datum = _matched_datum(mp)
    inner = verify_datum(datum)
    report = CheckReport(inner.passed, inner.condition_results, (MATCHED_NOTE,))
    return report, build_unified(datum, force=True)


def factorization_extract(e: Algebra, z_basis: Matrix,
                          w_basis: Matrix) -> MatchedPair:
    """Read the matched pair off an algebra that factorizes through two
    complementary subalgebras."""
    if not subspace_check(e, z_basis, "subalgebra"):
        raise ValueError("Z span is not a subalgebra")
    if not subspace_check(e, w_basis, "subalgebra"):
        raise ValueError("W span is not a subalgebra")
    d = extract_datum(InclusionPresentation(e, z_basis, w_basis))
    if not d.omega.is_zero():
        raise ValueError("W span is not closed under multiplication")
    top = Algebra(d.dimV, d.star)
    return MatchedPair(d.base, top, d.actL, d.projR, d.projL, d.actR)


def is_deformation_map(mp: MatchedPair, r: Matrix) -> bool:
    """r : W -> Z with
    r(u.v) - r(u).r(v) = u |- r(v) + r(u) -| v - r(u <| r(v) + r(u) |> v)
    on all basis pairs of W."""
    n, w = mp.base.dim, mp.top.dim
    if (r.rows, r.cols) != (w, n):
        raise ValueError("r must map the top space to the base")
    rm = r.apply
    eu = lambda j: vunit(w, j)
    prod = mp.base.product
    wprod = mp.top.product
    al = lambda u, x: mp.actL.combine(u, x)
    ar = lambda x, u: mp.actR.combine(x, u)
    pl = lambda x, u: mp.projL.combine(x, u)
    pr = lambda u, x: mp.projR.combine(u, x)

    for i in range(w):
        for j in range(w):
            u, v = eu(i), eu(j)
            lhs = vsub(rm(wprod(u, v)), prod(rm(u), rm(v)))
            inner = vadd(al(u, rm(v)), ar(rm(u), v))
            rhs = vsub(vadd(pr(u, rm(v)), pl(rm(u), v)), rm(inner))
            if lhs != rhs:
                return False
    return True


def r_deform(mp: MatchedPair, r: Matrix) -> Algebra:
    """The deformed multiplication on W: u ._r v = u.v + u <| r(v) + r(u) |> v.

    After building, three conclusions of the deformation theorem are
    verified: the result is Zinbiel, the graph {(r(u), u)} is a subalgebra
    of the bicrossed product, and the graph is a complement of the base
    block.  A failure with a valid matched pair would be a bug; with an
    invalid matched pair it is an input error.
    """
    if not is_deformation_map(mp, r):
        raise ValueError("r is not a deformation map for this matched pair")
    n, w = mp.base.dim, mp.top.dim
    rm = r.apply
    eu = lambda j: vunit(w, j)
    mapping = {}
    for i in range(w):
        for j in range(w):
            val = vadd(mp.top.basis_product(i, j),
                       vadd(mp.actL.combine(eu(i), rm(eu(j))),
                            mp.actR.combine(rm(eu(i)), eu(j))))
            for k, c in enumerate(val):
                if c != 0:
                    mapping[(i, j, k)] = c
    deformed = Algebra(w, Tensor3.from_map(w, w, w, mapping))

    report, big = bicrossed(mp)
    graph = Matrix.from_rows(
        [list(rm(eu(j))) + [1 if t == j else 0 for t in range(w)]
         for j in range(w)])
    z_block = Matrix.from_rows(
        [[1 if t == i else 0 for t in range(n + w)] for i in range(n)])
    ok = (is_zinbiel(deformed).passed
          and subspace_check(big, graph, "subalgebra")
          and rank(Matrix.from_rows(z_block.row_list() + graph.row_list())) == n + w)
    if not ok:
        if not report.passed:
            raise ValueError("matched pair fails its compatibility conditions")
        raise ConsistencyError("deformation conclusions failed for a valid matched pair")
    return deformed


def deformations_equivalent(mp: MatchedPair, r: Matrix, big_r: Matrix,
                            witness: DeformationWitness) -> bool:
    """sigma carries the r-deformation onto the R-deformation:
    sigma(u.v) - sigma(u).sigma(v)
      = sigma(u) <| R(sigma(v)) + R(sigma(u)) |> sigma(v)
        - sigma(u <| r(v)) - sigma(r(u) |> v)
    on all basis pairs of W."""
    if not is_deformation_map(mp, r) or not is_deformation_map(mp, big_r):
        raise ValueError("both maps must be deformation maps")
    w = mp.top.dim
    if (witness.sigma.rows, witness.sigma.cols) != (w, w):
        raise ValueError("sigma must be an endomorphism of the top space")
    sg = witness.sigma.apply
    rm, rbig = r.apply, big_r.apply
    eu = lambda j: vunit(w, j)
    wprod = mp.top.product
    al = lambda u, x: mp.actL.combine(u, x)
    ar = lambda x, u: mp.actR.combine(x, u)

    for i in range(w):
        for j in range(w):
            u, v = eu(i), eu(j)
            lhs = vsub(sg(wprod(u, v)), wprod(sg(u), sg(v)))
            rhs = vadd(al(sg(u), rbig(sg(v))), ar(rbig(sg(u)), sg(v)))
            rhs = vsub(rhs, vadd(sg(al(u, rm(v))), sg(ar(rm(u), v))))
            if lhs != rhs:
                return False
    return True


def search_deformation_maps(mp: MatchedPair, coeff_set,
                            budget: int = 200000) -> list[Matrix]:
    """Exhaustive grid filter of W -> Z matrices with entries drawn from
    coeff_set.  The grid has |coeff_set|^(dimW*dimZ) points; anything past
    the budget is refused rather than silently truncated."""
    n, w = mp.base.dim, mp.top.dim
    coeffs = sorted({rat(c) for c in coeff_set})
    if not coeffs:
        return []
    cells = w * n
    total = len(coeffs) ** cells
    if total > budget:
        raise ValueError(f"grid of {total} candidates exceeds budget {budget}")
    found = []
    for combo in iterproduct(coeffs, repeat=cells):
        candidate = Matrix(w, n, tuple(combo))
        if is_deformation_map(mp, candidate):
            found.append(candidate)
    found.sort(key=lambda m: m.entries)
    return found
