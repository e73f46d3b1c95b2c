"""Executable acceptance checklist.

Ten numbered criteria, each an independent function that either returns a
short summary string or raises; `verify_paper` runs a chosen subset and
folds the outcomes into one JSON-friendly report.  Failures are data, not
errors: every exception is caught and recorded against its criterion.

Where the recorded classification families disagree with their own
defining conditions, the criteria below pin down the sub-cases that do
hold; the excluded sub-cases are listed in KNOWN_INCONSISTENCIES and kept
honest by strict expected-failure tests in the test suite.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from . import catalog
from .core import Algebra, is_isomorphism, is_zinbiel
from .exactlin import Matrix, Tensor3, poly_expand_quadratic, rat, vadd, vscale, vsub, vunit
from .extending import (ExtendingDatum, InclusionPresentation, build_unified,
                        extract_datum, inclusion_isomorphism, verify_datum)
from .flag import (FlagDatum, FlagEquivalenceWitness, build_flag_extension,
                   flag_equivalent, flag_to_datum, solve_reduced, verify_flag)
from .products import (Bimodule, CrossedSystem, MatchedPair, bicrossed,
                       crossed, factorization_extract, is_bimodule,
                       is_deformation_map, r_deform, search_deformation_maps,
                       semidirect)


class CriterionFailure(AssertionError):
    pass


def _need(cond, message):
    if not cond:
        raise CriterionFailure(message)


class _Catalog:
    """Fixture access with optional per-id overrides of the base algebras.

    Overrides exist so the suite can be rerun against a deliberately
    mutated catalog; a flag family picks up the override of the base it
    lives on."""

    def __init__(self, overrides=None):
        self._over = dict(overrides or {})

    def base(self, fid, params=None):
        if fid in self._over:
            return self._over[fid]
        return catalog.get_base_algebra(fid, params)

    def flag(self, fid, params):
        fd = catalog.get_flag_datum(fid, params)
        base_id = "A" + fid[1]
        if base_id in self._over:
            fd = FlagDatum(self._over[base_id], fd.x0, fd.k0, fd.mu, fd.D, fd.T)
        return fd

    def extension_datum(self, fid, params):
        return flag_to_datum(self.flag(fid, params))

    def extension(self, fid, params):
        return build_unified(self.extension_datum(fid, params), force=True)


def _canonical(fid):
    return {name: 1 for name in catalog.required_params(fid)}


def _nonzero(rng):
    q = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    return -q if rng.random() < 0.5 else q


def _small(rng):
    return Fraction(rng.randint(-6, 6), rng.randint(1, 3))


def _sparse_tensor(rng, d1, d2, d3):
    mapping = {}
    for _ in range(rng.randint(0, 2)):
        idx = (rng.randrange(d1), rng.randrange(d2), rng.randrange(d3))
        mapping[idx] = rat(rng.choice([-1, 1]))
    return Tensor3.from_map(d1, d2, d3, mapping)


NULL1 = Algebra(1, Tensor3.zero(1, 1, 1))
NULL2 = Algebra(2, Tensor3.zero(2, 2, 2))
LINE2 = Algebra(2, Tensor3.from_map(2, 2, 2, {(0, 0, 1): 1}))

E12 = Matrix.from_rows([[0, 1, 0], [0, 0, 0], [0, 0, 0]])
E13 = Matrix.from_rows([[0, 0, 1], [0, 0, 0], [0, 0, 0]])
E23 = Matrix.from_rows([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
E21 = Matrix.from_rows([[0, 0, 0], [1, 0, 0], [0, 0, 0]])

Z_FIRST_LAST = Matrix.from_rows([[1, 0, 0], [0, 0, 1]])
W_MIDDLE = Matrix.from_rows([[0, 1, 0]])


def _c1(cat, rng):
    for fid in ("A1", "A2", "A3", "A4", "A6"):
        _need(is_zinbiel(cat.base(fid)).passed,
              f"{fid} fails the defining identity")
    count = 0
    for lam in (rat(1), rat(2), rat(-1), _nonzero(rng)):
        _need(is_zinbiel(cat.base("A5", {"lambda": lam})).passed,
              f"A5 fails at lambda={lam}")
        count += 1
    return f"6 base algebras, A5 at {count} scale values"


def _c2(cat, rng):
    bases = [cat.base(f) for f in ("A1", "A2", "A3", "A4", "A6")]
    bases += [cat.base("A5", {"lambda": 1}), NULL2, LINE2]
    datums = []
    for _ in range(200):
        base = rng.choice(bases)
        n, m = base.dim, rng.choice([1, 2])
        datums.append(ExtendingDatum(
            base, m,
            _sparse_tensor(rng, m, n, m), _sparse_tensor(rng, n, m, m),
            _sparse_tensor(rng, n, m, n), _sparse_tensor(rng, m, n, n),
            _sparse_tensor(rng, m, m, n), _sparse_tensor(rng, m, m, m)))
    for fid in catalog.flag_family_ids():
        datums.append(cat.extension_datum(fid, _canonical(fid)))
    for base in bases[:6]:
        n = base.dim
        datums.append(ExtendingDatum(
            base, n, base.mult, base.mult, Tensor3.zero(n, n, n),
            Tensor3.zero(n, n, n), Tensor3.zero(n, n, n), Tensor3.zero(n, n, n)))
    passed = 0
    for d in datums:
        direct = verify_datum(d).passed
        oracle = is_zinbiel(build_unified(d, force=True)).passed
        _need(direct == oracle, "report and oracle disagree on a datum")
        passed += direct
    return f"{len(datums)} datums, all agreeing ({passed} valid)"


def _c3(cat, rng):
    cases = [(cat.base("A6"),
              Matrix.from_rows([[0, 1, 0], [0, 0, 1]]),
              Matrix.from_rows([[1, 0, 0]]))]
    for fid in catalog.flag_family_ids():
        ext = cat.extension(fid, _canonical(fid))
        cases.append((ext,
                      Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0],
                                        [0, 0, 1, 0]]),
                      Matrix.from_rows([[0, 0, 0, 1]])))
    for total, z_embed, complement in cases:
        p = InclusionPresentation(total, z_embed, complement)
        rebuilt = build_unified(extract_datum(p), force=True)
        psi = inclusion_isomorphism(p)
        _need(is_isomorphism(rebuilt, total, psi).passed,
              "x + u is not an isomorphism for an extraction round trip")
        n = z_embed.rows
        _need(all(psi.row(i) == z_embed.row(i) for i in range(n)),
              "round-trip map moved the base block")
        _need(all(psi.row(n + j) == complement.row(j)
                  for j in range(complement.rows)),
              "round-trip map moved the complement block")
    return f"{len(cases)} inclusions round-tripped"


def _c4(cat, rng):
    fam = solve_reduced(cat.base("A2"), (rat(1), rat(0), Fraction(1, 2)), "D")
    _need(fam.dim == 0 and not fam.residuals, "A2 D-case is not forced to zero")
    for lam in (rat(1), _nonzero(rng)):
        fam = solve_reduced(cat.base("A5", {"lambda": lam}), (rat(0),) * 3, "D")
        _need(fam.linear_basis == (E13, E23) and not fam.residuals,
              f"A5 D-case at lambda={lam} is not the two-parameter third-column family")
    fam = solve_reduced(cat.base("A6"),
                        (rat(1), Fraction(1, 2), Fraction(1, 3)), "D")
    _need(fam.dim == 0 and not fam.residuals, "A6 D-case is not forced to zero")
    return "A2, A5, A6 sub-cases exact"


def _c5(cat, rng):
    first_branch = Matrix.from_rows([[0, 0, 0], [1, 0, -2], [0, 0, 0]])
    residuals = poly_expand_quadratic([first_branch, E12], "square-is-zero")
    _need([str(p) for p in residuals] == ["t1*t2"],
          "the two recorded directions do not split along t1*t2")
    fam = solve_reduced(cat.base("A6"),
                        (rat(1), Fraction(1, 2), Fraction(1, 3)), "T")
    _need(fam.dim == 0 and not fam.residuals, "A6 T-case is not forced to zero")
    return "A6 sub-case exact; branch residual oracle recovers t1*t2"


def _c6(cat, rng):
    built = 0
    for fid, free in (("D5", ("a13", "a23")), ("T51", ("b23",))):
        for _ in range(5):
            params = {"lambda": _nonzero(rng)}
            params.update({name: _small(rng) for name in free})
            fd = cat.flag(fid, params)
            _need(verify_flag(fd).passed, f"{fid} fails at {params}")
            _, alg = build_flag_extension(fd)
            _need(alg.dim == 4 and is_zinbiel(alg).passed,
                  f"{fid} extension at {params} is not Zinbiel")
            built += 1
    return f"{built} valid flag instances built and checked"


def _c7(cat, rng):
    for fid in ("A1", "A2", "A3", "A4", "A5", "A6"):
        params = {"lambda": 1} if fid == "A5" else None
        base = cat.base(fid, params)
        b = Bimodule.regular(base)
        _need(is_bimodule(b).passed, f"regular bimodule of {fid} fails")
        n = base.dim
        direct = build_unified(ExtendingDatum(
            base, n, base.mult, base.mult, Tensor3.zero(n, n, n),
            Tensor3.zero(n, n, n), Tensor3.zero(n, n, n),
            Tensor3.zero(n, n, n)), force=True)
        sd = semidirect(b)
        _need(sd.dim == direct.dim and sd.mult == direct.mult,
              f"semidirect product of {fid} differs from the unified build")
    return "6 regular bimodules, semidirect tensor-identical"


def _c8(cat, rng):
    crossed_bases = [cat.base("A1"), cat.base("A4"), NULL1, NULL2]
    tops = [NULL1, NULL2, cat.base("A1")]
    agree = 0
    for _ in range(100):
        base, top = rng.choice(crossed_bases), rng.choice(tops)
        n, w = base.dim, top.dim
        cs = CrossedSystem(base, top, _sparse_tensor(rng, w, n, n),
                           _sparse_tensor(rng, n, w, n),
                           _sparse_tensor(rng, w, w, n))
        report, alg = crossed(cs)
        _need(report.passed == is_zinbiel(alg).passed,
              "crossed report disagrees with the product oracle")
        agree += 1
    matched_bases = [cat.base("A1"), cat.base("A3"), NULL2]
    for _ in range(100):
        base, top = rng.choice(matched_bases), rng.choice([NULL1, NULL2])
        n, w = base.dim, top.dim
        mp = MatchedPair(base, top, _sparse_tensor(rng, w, n, w),
                         _sparse_tensor(rng, w, n, n),
                         _sparse_tensor(rng, n, w, n),
                         _sparse_tensor(rng, n, w, w))
        report, alg = bicrossed(mp)
        _need(report.passed == is_zinbiel(alg).passed,
              "matched report disagrees with the product oracle")
        agree += 1
    a3 = cat.base("A3")
    mp = factorization_extract(a3, Z_FIRST_LAST, W_MIDDLE)
    report, big = bicrossed(mp)
    _need(report.passed, "the A3 factorization pair fails its conditions")
    psi = inclusion_isomorphism(InclusionPresentation(a3, Z_FIRST_LAST, W_MIDDLE))
    _need(is_isomorphism(big, a3, psi).passed,
          "the A3 factorization does not rebuild A3")
    return f"{agree} random systems in agreement; A3 factorization rebuilt"


def _c9(cat, rng):
    pairs = []
    for fid in ("A1", "A3", "A4"):
        pairs.append((fid, factorization_extract(cat.base(fid),
                                                 Z_FIRST_LAST, W_MIDDLE)))
    for fid in ("A2", "A5", "A6"):
        params = {"lambda": 1} if fid == "A5" else None
        pairs.append((fid, MatchedPair.trivial(cat.base(fid, params), NULL1)))
    deformed = 0
    for fid, mp in pairs:
        zero = Matrix.zero(mp.top.dim, mp.base.dim)
        _need(is_deformation_map(mp, zero), f"r = 0 rejected on the {fid} pair")
    for fid, mp in pairs[:3]:
        found = search_deformation_maps(mp, [-1, 0, 1])
        zero = Matrix.zero(mp.top.dim, mp.base.dim)
        _need(zero in found, f"grid search on {fid} lost r = 0")
        for r in found:
            r_deform(mp, r)
            deformed += 1
    return f"6 pairs accept r = 0; {deformed} grid deformations verified"


def _transport(fd2, q, r):
    base = fd2.base
    n = base.dim
    e, prod = base.unit, base.product
    d_rows = [vadd(vscale(q, fd2.D.apply(e(i))),
                   vsub(prod(r, e(i)), vscale(fd2.mu[i], r)))
              for i in range(n)]
    t_rows = [vadd(vscale(q, fd2.T.apply(e(i))), prod(e(i), r))
              for i in range(n)]
    k0 = q * fd2.k0 + fd2.mu_at(r)
    x0 = vadd(vscale(q * q, fd2.x0), prod(r, r))
    x0 = vsub(x0, vscale(k0, r))
    x0 = vadd(x0, vscale(q, fd2.T.apply(r)))
    x0 = vadd(x0, vscale(q, fd2.D.apply(r)))
    return FlagDatum(base, x0, k0, fd2.mu,
                     Matrix.from_rows([list(v) for v in d_rows]),
                     Matrix.from_rows([list(v) for v in t_rows]))


def _c10(cat, rng):
    family_ids = catalog.flag_family_ids()
    r_values = [rat(0), rat(1), rat(-1), rat(2), Fraction(1, 2)]
    for _ in range(50):
        fid = rng.choice(family_ids)
        params = {name: _nonzero(rng) for name in catalog.required_params(fid)}
        fd2 = cat.flag(fid, params)
        q = _nonzero(rng)
        r = tuple(rng.choice(r_values) for _ in range(3))
        w = FlagEquivalenceWitness(q, r)
        fd = _transport(fd2, q, r)
        _need(flag_equivalent(fd, fd2, w),
              f"transported {fid} datum not recognized as equivalent")
        bumped = FlagDatum(fd.base, vadd(fd.x0, vunit(3, 0)), fd.k0,
                           fd.mu, fd.D, fd.T)
        _need(not flag_equivalent(bumped, fd2, w),
              f"perturbed {fid} datum wrongly accepted")
    return "50 transported triples, cross-checked against the datum relation"


_CRITERIA = (
    (1, "catalog base algebras satisfy the defining identity", _c1),
    (2, "datum verification matches the unified-product oracle", _c2),
    (3, "extraction round trips through the unified product", _c3),
    (4, "reduced D-solver dimensions and residuals", _c4),
    (5, "reduced T-solver branch structure", _c5),
    (6, "valid flag families build Zinbiel extensions", _c6),
    (7, "regular bimodules and semidirect products", _c7),
    (8, "crossed and bicrossed reports match the product oracle", _c8),
    (9, "deformation maps on factorization pairs", _c9),
    (10, "flag equivalence agrees with datum equivalence", _c10),
)

KNOWN_INCONSISTENCIES = (
    "criterion 4: the recorded one-parameter families on A1, A3 and A4 do "
    "not satisfy the flag conditions, and the solver honestly finds no "
    "nonzero solutions there; the A2, A5 and A6 sub-cases are checked",
    "criterion 5: on A1 at the recorded functional the linear system only "
    "has the zero solution, so the two-branch structure is checked through "
    "the standalone residual oracle; on A5 the linear space is "
    "3-dimensional and the quadratic residuals cut it to a plane spanned "
    "by both third-column lines, not the single recorded one",
    "criterion 6: every recorded family with a nonzero functional fails "
    "its own defining conditions (the conditions force the functional to "
    "vanish on squares against its products), so only the functional-free "
    "families D5 and T51 are instantiated",
)


def verify_paper(only=None, catalog_overrides=None, rng_seed=0):
    """Run the acceptance criteria and fold the results into one report.

    only: iterable of criterion numbers, or None for all of them.  An
    empty selection runs nothing and reports failure; a vacuous pass is
    not a pass.  catalog_overrides maps base-algebra ids to replacement
    algebras for mutation runs."""
    cat = _Catalog(catalog_overrides)
    wanted = set(range(1, 11)) if only is None else {int(c) for c in only}
    results = []
    for cid, name, fn in _CRITERIA:
        if cid not in wanted:
            continue
        rng = random.Random(f"{rng_seed}:{cid}")
        start = time.perf_counter()
        try:
            detail = fn(cat, rng)
            ok = True
        except Exception as exc:
            detail = f"{type(exc).__name__}: {exc}"
            ok = False
        results.append({
            "criterion": cid,
            "name": name,
            "passed": ok,
            "detail": detail,
            "seconds": round(time.perf_counter() - start, 3),
        })
    return {
        "passed": bool(results) and all(r["passed"] for r in results),
        "criteria_run": len(results),
        "criteria": results,
        "known_inconsistencies": list(KNOWN_INCONSISTENCIES),
    }
