"""Command-line front end.

Every subcommand prints one JSON document (or aligned text with
``--format text``).  Usage errors exit with status 2, violated
preconditions with status 3 and a JSON error object on stdout.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from . import combinatorics as comb
from . import divdiff, enumgeo, loci, pieri, schubertlib, schurlib
from .errors import DomainError, InexactDivision
from .polyring import MPoly, PolyRing, bialternant_schur, ring_a, tableau_schur

__all__ = ["main", "build_parser", "paper_checks", "GoldenCheck"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


# --------------------------------------------------------------------------
# argument types


def int_list(text: str) -> tuple[int, ...]:
    """Comma-separated integers; the empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


_VAR = re.compile(r"^([ab])([1-9][0-9]*)$")


def parse_poly(text: str, n: int) -> MPoly:
    """Parse integer polynomial text in a1..an (and optionally b1..bm)."""
    import sympy

    try:
        expr = sympy.parse_expr(text.replace("^", "**"), evaluate=True)
    except (SyntaxError, TypeError, sympy.SympifyError) as exc:
        raise DomainError(f"cannot parse polynomial {text!r}: {exc}") from None
    syms = sorted(expr.free_symbols, key=lambda s: s.name)
    n_b = 0
    for s in syms:
        m = _VAR.match(s.name)
        if not m:
            raise DomainError(f"unknown variable {s.name!r}; use a1..an and b1..bm")
        if m.group(1) == "a" and int(m.group(2)) > n:
            raise DomainError(f"variable {s.name} exceeds rank n={n}")
        if m.group(1) == "b":
            n_b = max(n_b, int(m.group(2)))
    names = [f"a{i}" for i in range(1, n + 1)] + [f"b{j}" for j in range(1, n_b + 1)]
    gens = sympy.symbols(names)
    poly = sympy.Poly(sympy.expand(expr), *gens)
    terms = {}
    for mono, coeff in poly.terms():
        if not coeff.is_integer:
            raise DomainError(f"non-integer coefficient {coeff}")
        terms[tuple(mono)] = int(coeff)
    return MPoly(PolyRing(tuple(names), (1,) * len(names)), terms)


# --------------------------------------------------------------------------
# output


@dataclass
class Result:
    """A JSON payload plus its text rendering; ``rows`` marks a table."""

    payload: object
    text: str
    rows: list = field(default_factory=list)
    status: int = EXIT_OK


def _value_json(v) -> object:
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return v


def poly_result(f: MPoly) -> Result:
    return Result(f.to_json(), str(f))


def expansion_result(e: schurlib.SchurExpansion) -> Result:
    return Result({"schur": e.to_json()}, str(e))


def value_result(v, **meta) -> Result:
    return Result({**meta, "value": _value_json(v)}, str(v))


def table_result(rows: list[dict], columns: Sequence[str]) -> Result:
    cells = [[_fmt_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[k]) for row in cells]) for k, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for row in cells:
        lines.append("  ".join(x.ljust(w) for x, w in zip(row, widths)).rstrip())
    return Result(None, "\n".join(lines), rows=rows)


def _fmt_cell(x) -> str:
    if isinstance(x, (list, tuple)):
        return ",".join(map(str, x))
    return str(x)


def render(res: Result, fmt: str) -> str:
    if fmt == "text":
        return res.text + "\n"
    if res.rows:
        return "".join(json.dumps(r, sort_keys=True, default=_value_json) + "\n" for r in res.rows)
    return json.dumps(res.payload, sort_keys=True, default=_value_json) + "\n"


# --------------------------------------------------------------------------
# handlers


def cmd_schur(a) -> Result:
    if a.bialternant:
        return poly_result(bialternant_schur(a.i, a.n))
    if a.operator:
        return poly_result(divdiff.schur_by_operator(a.i, a.n))
    if a.tableau:
        return poly_result(tableau_schur(a.i, a.n))
    return poly_result(schurlib.schur_jt(a.i, a.n))


def cmd_super_schur(a) -> Result:
    if a.chern:
        return poly_result(schurlib.schur_chern(a.i, a.na, a.nb))
    return poly_result(schurlib.super_schur(a.i, a.na, a.nb))


def cmd_qpoly(a) -> Result:
    if a.p:
        return poly_result(schurlib.ppoly(a.i, a.n))
    return poly_result(schurlib.qpoly(a.i, a.n, signs=a.signs))


def cmd_qtilde(a) -> Result:
    return poly_result(schurlib.qtilde(a.i, a.n))


def cmd_schubert(a) -> Result:
    fn = schubertlib.single_schubert if a.single else schubertlib.double_schubert
    return poly_result(fn(a.perm))


def cmd_divdiff(a) -> Result:
    f = parse_poly(a.poly, a.n)
    return poly_result(divdiff.apply_word(divdiff.OperatorWord(a.word, a.n, a.symplectic), f))


def cmd_gysin(a) -> Result:
    f = parse_poly(a.poly, a.n)
    fn = divdiff.gysin_coset_sum if a.route == "coset" else divdiff.gysin_symmetrizer
    return poly_result(fn(a.kind, f, a.n, a.q))


def _locus(c: loci.LocusClass) -> Result:
    return Result(c.to_json(), f"{c.formula}: {c.poly}")


def cmd_gtp(a) -> Result:
    fn = loci.gtp_chern_form if a.form == "chern" else loci.gtp_class
    return _locus(fn(a.m, a.n, a.r))


def cmd_kempf_laksov(a) -> Result:
    return _locus(loci.kempf_laksov_class(a.n, a.m_list))


def cmd_flag_det(a) -> Result:
    return _locus(loci.flag_determinantal_class(a.n_list, a.m_list))


def cmd_harris(a) -> Result:
    return _locus(loci.harris_class(a.k, a.n))


def cmd_csm(a) -> Result:
    if (a.k is None) == (a.r is None):
        raise DomainError("give exactly one of --k (P_k) or --r (the rank-r combination)")
    if a.k is not None:
        return poly_result(loci.csm_P(a.k, a.m, a.n, a.bound))
    return poly_result(loci.csm_combination(a.r, a.m, a.n, a.bound))


def cmd_bn_euler(a) -> Result:
    fn = loci.bn_phi if a.phi else loci.bn_euler
    return value_result(fn(a.g, a.d, a.r), g=a.g, d=a.d, r=a.r)


def cmd_prym(a) -> Result:
    return value_result(loci.prym_coefficient(a.r), r=a.r)


def cmd_d_coeff(a) -> Result:
    return value_result(enumgeo.d_coeff(a.i, a.j, a.m, a.n))


def _route_table(fn: Callable, J, route: str) -> Result:
    routes = enumgeo.ROUTES if route == "all" else (route,)
    rows = [{"index": list(J), "value": fn(J, r), "route": r} for r in routes]
    if len(rows) == 1:
        return Result(rows[0], str(rows[0]["value"]))
    return table_result(rows, ("index", "value", "route"))


def cmd_paren(a) -> Result:
    return _route_table(enumgeo.paren, a.j, a.route)


def cmd_bracket(a) -> Result:
    return _route_table(enumgeo.bracket, a.j, a.route)


def cmd_segre(a) -> Result:
    fn = enumgeo.segre_expansion_roots if a.route == "roots" else enumgeo.segre_expansion
    return expansion_result(fn(a.kind, a.degree, a.n, a.m))


def cmd_quadrics(a) -> Result:
    return value_result(enumgeo.quadrics_product(a.i, a.m_list, a.p))


def cmd_chern_schur(a) -> Result:
    if a.top:
        fn = enumgeo.ctop_schur_bundle_roots if a.route == "roots" else enumgeo.ctop_builtin
        return expansion_result(fn(a.j, a.n))
    if a.degree is None:
        raise DomainError("--degree is required unless --top is given")
    if a.route == "roots":
        return expansion_result(enumgeo.total_chern_schur_bundle_roots(a.j, a.n, a.degree))
    return expansion_result(enumgeo.chern_schur_bundle(a.j, a.n, a.degree))


def _lg(c: pieri.LGClass) -> Result:
    return Result(c.to_json(), str(c))


def cmd_pieri(a) -> Result:
    if a.j is not None:
        return value_result(pieri.operator_multiplicity(a.i, a.j, a.p, a.n))
    return _lg(pieri.pieri_product(a.i, a.p, a.n))


def cmd_giambelli(a) -> Result:
    return poly_result(pieri.giambelli(a.i, a.n))


def cmd_lg_mul(a) -> Result:
    return _lg(pieri.lg_multiply(pieri.LGClass.basis(a.x, a.n), pieri.LGClass.basis(a.y, a.n)))


def cmd_paper_tables(a) -> Result:
    checks = paper_checks(extended=a.extended)
    rows = []
    for c in checks:
        try:
            got = c.compute()
        except (DomainError, InexactDivision) as exc:
            got = f"error: {exc}"
        rows.append({"check": c.name, "expected": str(c.expected), "got": str(got),
                     "status": "PASS" if got == c.expected else "FAIL"})
    failed = sum(r["status"] == "FAIL" for r in rows)
    res = table_result(rows, ("status", "check", "expected", "got"))
    res.text += f"\n{len(rows) - failed}/{len(rows)} golden values match"
    res.status = EXIT_FAIL if failed else EXIT_OK
    return res


# --------------------------------------------------------------------------
# golden values


@dataclass(frozen=True)
class GoldenCheck:
    name: str
    expected: object
    compute: Callable[[], object]


def _lg_terms(n: int, terms: dict) -> pieri.LGClass:
    return pieri.LGClass(n, {comb.strict_partition(k): v for k, v in terms.items()})


def _example_65_marking(J) -> pieri.DiagramMarking:
    marked = {(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (2, 5), (2, 6), (3, 1), (3, 2)}
    return pieri.DiagramMarking(tuple(J), frozenset(marked))


# [J] reference values for the F_2 and F_4 series; F_2 labels s(J; A_2).
F2_PRINTED = {(1, 0): 1, (2, 0): 1, (3, 0): 1, (2, 1): 1, (4, 0): 1, (3, 1): 2,
              (5, 0): 1, (4, 1): 3, (3, 2): 2}
F4_PRINTED = {
    (3, 2, 1, 0): 1, (4, 2, 1, 0): 3, (5, 2, 1, 0): 6, (4, 3, 1, 0): 4,
    (6, 2, 1, 0): 10, (5, 3, 1, 0): 12, (4, 3, 2, 0): 2,
    (7, 2, 1, 0): 15, (6, 3, 1, 0): 25, (5, 4, 1, 0): 13, (5, 3, 2, 0): 7, (4, 3, 2, 1): 1,
    (8, 2, 1, 0): 21, (7, 3, 1, 0): 44, (6, 4, 1, 0): 32, (6, 3, 2, 0): 16, (5, 4, 2, 0): 10,
    (5, 3, 2, 1): 4,
    (9, 2, 1, 0): 28, (8, 3, 1, 0): 70, (7, 4, 1, 0): 87, (6, 5, 1, 0): 41, (7, 3, 2, 0): 30,
    (6, 4, 2, 0): 33, (5, 4, 3, 0): 5, (6, 3, 2, 1): 10, (5, 4, 2, 1): 7,
}
# ((i, j)) for i = 1..6, j = 0..2.
PAREN_TABLE = ((1, 0, 0), (3, 3, 0), (7, 10, 10), (15, 25, 35), (31, 56, 91), (63, 119, 210))


def paper_checks(extended: bool = False) -> list[GoldenCheck]:
    """Published values replayed by ``paper-tables``.

    ``extended`` adds every coefficient of the reference F_2 and F_4 series.
    """
    ra = ring_a(3)
    checks = [
        GoldenCheck("skew components 763/632 off first column", 1,
                    lambda: comb.skew_components((6, 3, 2), (7, 6, 3), True)),
        GoldenCheck("projective trace of a1^2, n=3", ra.one(),
                    lambda: divdiff.gysin_symmetrizer("projective", ra.gen("a1") ** 2, 3)),
        GoldenCheck("Qtilde_2(a1,a2)", ring_a(2).gen("a1") * ring_a(2).gen("a2"),
                    lambda: schurlib.qtilde((2,), 2, ring_a(2))),
        GoldenCheck("Phi(4,2,1) with negative rho", 0, lambda: loci.bn_phi(4, 2, 1)),
        GoldenCheck("number of generators, general m=n=4 r=2", 6,
                    lambda: len(loci.ideal_generators("general", 4, 4, 2))),
        GoldenCheck("((1,0))", 1, lambda: enumgeo.paren((1, 0))),
        GoldenCheck("((6,2))", 210, lambda: enumgeo.paren((6, 2))),
    ]
    for i in range(1, 11):
        checks.append(GoldenCheck(f"((%d,0)) = 2^%d - 1" % (i, i), 2**i - 1,
                                  lambda i=i: enumgeo.paren((i, 0))))
    for i, row in enumerate(PAREN_TABLE, 1):
        for j, v in enumerate(row):
            if j < i:
                for route in enumgeo.ROUTES:
                    checks.append(GoldenCheck(f"(({i},{j})) [{route}]", v,
                                              lambda i=i, j=j, route=route: enumgeo.paren((i, j), route)))
    for J, v in (((3, 2, 1, 0), 1), ((5, 3, 1, 0), 12), ((7, 4, 1, 0), 87)):
        for route in enumgeo.ROUTES:
            checks.append(GoldenCheck(f"[{','.join(map(str, J))}] [{route}]", v,
                                      lambda J=J, route=route: enumgeo.bracket(J, route)))
    checks += [
        GoldenCheck("2[5,3,2,1]-[5,3,2,0]-[4,3,2,1]", 0,
                    lambda: 2 * enumgeo.bracket((5, 3, 2, 1)) - enumgeo.bracket((5, 3, 2, 0))
                    - enumgeo.bracket((4, 3, 2, 1))),
        GoldenCheck("2[5,4,3,1]-[5,4,3,0]-[5,4,2,1]", 0,
                    lambda: 2 * enumgeo.bracket((5, 4, 3, 1)) - enumgeo.bracket((5, 4, 3, 0))
                    - enumgeo.bracket((5, 4, 2, 1))),
        GoldenCheck("2[6,3,1,0]-[6,2,1,0]-[5,3,1,0] = [6,3]", (28, 28),
                    lambda: (2 * enumgeo.bracket((6, 3, 1, 0)) - enumgeo.bracket((6, 2, 1, 0))
                             - enumgeo.bracket((5, 3, 1, 0)), enumgeo.bracket((6, 3)))),
        GoldenCheck("s_1 coefficient of s(wedge^2 E), rank 3", 2,
                    lambda: enumgeo.segre_expansion("wedge2", 1, 3)[(1,)]),
        GoldenCheck("alpha(p;k,-1)", 0, lambda: enumgeo.alpha(3, 4, -1)),
        GoldenCheck("c_top(S^2 E), rank 2", schurlib.SchurExpansion({(2, 1): 4}),
                    lambda: enumgeo.ctop_schur_bundle_roots((2,), 2)),
        GoldenCheck("c_top(wedge^3 E), rank 4", schurlib.SchurExpansion(dict(enumgeo.LAMBDA3_RANK4_TOP)),
                    lambda: enumgeo.ctop_schur_bundle_roots((1, 1, 1), 4)),
        GoldenCheck("sigma(632) sigma(5) in LG(7)",
                    _lg_terms(7, {(7, 6, 3): 2, (7, 5, 3, 1): 4, (7, 6, 2, 1): 2, (7, 4, 3, 2): 2, (6, 5, 3, 2): 1}),
                    lambda: pieri.pieri_product((6, 3, 2), 5, 7)),
        GoldenCheck("r_D for J=763", (6, 7, 2, 3, 5, 6, 7, 4, 5, 6, 7),
                    lambda: pieri.diagram_word((7, 6, 3), _example_65_marking((7, 6, 3)), 7)[0]),
        GoldenCheck("operator word for J=763",
                    (("d", 5), ("s", 6), ("s", 7), ("s", 2), ("s", 3), ("d", 4), ("s", 5), ("s", 6),
                     ("s", 7), ("d", 1), ("d", 2), ("d", 3), ("s", 4), ("s", 5), ("s", 6), ("s", 7)),
                    lambda: pieri.diagram_word((7, 6, 3), _example_65_marking((7, 6, 3)), 7)[1]),
    ]
    for J, v in (((7, 6, 3), 2), ((7, 5, 3, 1), 4), ((6, 5, 3, 2), 1)):
        checks.append(GoldenCheck(f"operator multiplicity 632 -> {''.join(map(str, J))}", v,
                                  lambda J=J: pieri.operator_multiplicity((6, 3, 2), J, 5, 7)))
    sr = pieri.sigma_ring(3)
    checks.append(GoldenCheck("Giambelli sigma(2,1)",
                              sr.gen("sigma1") * sr.gen("sigma2") - sr.gen("sigma3") * 2,
                              lambda: pieri.giambelli((2, 1), 3)))
    if extended:
        for J, v in F2_PRINTED.items():
            checks.append(GoldenCheck(f"F_2 [{','.join(map(str, J))}]", v,
                                      lambda J=J: enumgeo.bracket(J)))
        for J, v in F4_PRINTED.items():
            checks.append(GoldenCheck(f"F_4 [{','.join(map(str, J))}]", v,
                                      lambda J=J: enumgeo.bracket(J)))
    return checks


# --------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schubcalc", description="Exact Schubert calculus computations.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        p.set_defaults(handler=handler)
        return p

    p = add("schur", cmd_schur, "Schur polynomial s_I(a1..an)")
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--jt", action="store_true", help="Jacobi-Trudi determinant (default)")
    g.add_argument("--bialternant", action="store_true")
    g.add_argument("--operator", action="store_true", help="Jacobi symmetrizer of a monomial")
    g.add_argument("--tableau", action="store_true")

    p = add("super-schur", cmd_super_schur, "supersymmetric Schur s_I(A - B)")
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--na", type=int, required=True)
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--chern", action="store_true", help="in Chern variables c (rank na) and cp (rank nb)")

    p = add("qpoly", cmd_qpoly, "Schur Q-polynomial (P with --p)")
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", action="store_true")
    p.add_argument("--signs", choices=("standard", "printed"), default="standard")

    p = add("qtilde", cmd_qtilde, "Q-tilde polynomial")
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("schubert", cmd_schubert, "double (or single) Schubert polynomial")
    p.add_argument("--perm", type=int_list, required=True, help="one-line notation, e.g. 2,1,3")
    p.add_argument("--single", action="store_true")

    p = add("divdiff", cmd_divdiff, "apply a word of divided differences")
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", type=int_list, required=True)
    p.add_argument("--symplectic", action="store_true")

    p = add("gysin", cmd_gysin, "Gysin symmetrizer")
    p.add_argument("--kind", choices=divdiff.GYSIN_KINDS, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--route", choices=("operator", "coset"), default="operator")

    p = add("gtp", cmd_gtp, "degeneracy locus class D_r(F -> E)")
    p.add_argument("--m", type=int, required=True, help="rank of F")
    p.add_argument("--n", type=int, required=True, help="rank of E")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--form", choices=("segre", "chern"), default="segre")

    p = add("kempf-laksov", cmd_kempf_laksov, "Kempf-Laksov flag class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-list", type=int_list, required=True)

    p = add("flag-det", cmd_flag_det, "flagged determinantal class")
    p.add_argument("--n-list", type=int_list, required=True)
    p.add_argument("--m-list", type=int_list, required=True)

    p = add("harris", cmd_harris, "symmetric-map locus class")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int)

    p = add("csm", cmd_csm, "P_k polynomial or its rank-r combination")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="degree bound for the truncation")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)

    p = add("bn-euler", cmd_bn_euler, "Euler characteristic of W^r_d")
    for name in ("g", "d", "r"):
        p.add_argument(f"--{name}", type=int, required=True)
    p.add_argument("--phi", action="store_true", help="print Phi(g,d,r) instead")

    p = add("prym", cmd_prym, "Prym coefficient")
    p.add_argument("--r", type=int, required=True)

    p = add("d-coeff", cmd_d_coeff, "binomial determinant D^{m,n}_{I,J}")
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--j", type=int_list, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    for name, handler in (("paren", cmd_paren), ("bracket", cmd_bracket)):
        p = add(name, handler, "((J)) coefficient" if name == "paren" else "[J] coefficient")
        p.add_argument("--j", type=int_list, required=True)
        p.add_argument("--route", choices=enumgeo.ROUTES + ("all",), default="pfaffian")

    p = add("segre", cmd_segre, "Segre class of E (x) F, S^2 E or wedge^2 E")
    p.add_argument("--kind", choices=("tensor", "sym2", "wedge2"), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--route", choices=("formula", "roots"), default="formula")

    p = add("quadrics", cmd_quadrics, "complete quadrics intersection number")
    p.add_argument("--i", type=int_list, required=True, help="increasing flag dimensions")
    p.add_argument("--m-list", type=int_list, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("chern-schur", cmd_chern_schur, "Chern class of the Schur functor S^J E")
    p.add_argument("--j", type=int_list, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--top", action="store_true", help="top Chern class only")
    p.add_argument("--route", choices=("formula", "roots"), default="formula")

    p = add("pieri", cmd_pieri, "Lagrangian Pieri product sigma(I) sigma(p)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--j", type=int_list, help="only the coefficient of sigma(J), by the operator method")

    p = add("giambelli", cmd_giambelli, "sigma(I) as a polynomial in the special classes")
    p.add_argument("--i", type=int_list, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("lg-mul", cmd_lg_mul, "product of two Schubert classes in LG(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int_list, required=True)
    p.add_argument("--y", type=int_list, required=True)

    p = add("paper-tables", cmd_paper_tables, "replay the reference golden values")
    p.add_argument("--extended", action="store_true", help="also every tabulated F_2 / F_4 coefficient")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        res = args.handler(args)
        status = res.status
        text = render(res, args.format)
    except (DomainError, InexactDivision) as exc:
        status = EXIT_DOMAIN
        err = {"error": type(exc).__name__, "command": args.command, "precondition": str(exc)}
        text = json.dumps(err, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
