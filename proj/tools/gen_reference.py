#!/usr/bin/env python3
"""Regenerate data/reference_solutions.json from exact closed forms.

The bundled census lists every critical point of the normalized scalar
curvature (S-tilde = n normalization, i.e. Lagrange multiplier 2) over
triangular metric coordinates for n = 1, 2, 3.  Each coordinate is stored
both as an exact-form label and as a double obtained by evaluating the
closed form to 30 decimal digits and rounding once.

Before writing anything the script re-derives the criticality conditions
symbolically and checks that every listed tuple solves them exactly
(to 50 digits), so a transcription typo cannot survive regeneration.
"""

import json
import os
import sys

import sympy as sp

DIGITS = 30
CHECK_DIGITS = 50


def stilde_n2(x, y, u):
    return x**2 + y**2 - (u**2 * x - u * y) ** 2


def stilde_n3(x, y, z, u, v, w):
    return (
        x**2 + y**2 + z**2
        - u**2 * (u * x - y) ** 2
        - 2 * u**2 * (v * x - w * y) ** 2
        - w**2 * (w * y - z) ** 2
        - (v**2 * x - w**2 * u * y + (w * u - v) * z) ** 2
    )


def residual_exprs(svars, uvars, stilde):
    eqs = [sp.diff(stilde, t) * t - 2 for t in svars]
    eqs += [sp.diff(stilde, t) for t in uvars]
    return eqs


def check_point(eqs, subs):
    for eq in eqs:
        val = sp.N(eq.subs(subs), CHECK_DIGITS)
        if abs(val) > sp.Float(10) ** (-(CHECK_DIGITS - 5)):
            raise SystemExit(f"criticality check failed: {eq} -> {val} at {subs}")


def ex(expr_str):
    return sp.sympify(expr_str)


# n = 1: S = x^2, x*dS/dx = 2x^2 = 2  =>  x = 1
SET1 = [{"x": ["1"], "u": []}]

# n = 2 census (four solutions of the factored system)
SET2 = [
    {"x": ["1", "1"], "u": ["0"]},
    {"x": ["1", "1"], "u": ["1"]},
    {"x": ["sqrt(2)/2", "sqrt(2)"], "u": ["1"]},
    {"x": ["3/sqrt(10)", "sqrt(6/5)"], "u": ["sqrt(3)/3"]},
]

# n = 3 census, 29 tuples (x, y, z, u, v, w)
SET3_TUPLES = [
    ("1", "1", "1", "0", "0", "0"),
    ("1", "1", "1", "1", "0", "0"),
    ("1", "1", "1", "0", "1", "0"),
    ("1", "1", "1", "0", "0", "1"),
    ("1", "1", "1", "0", "1", "1"),
    ("1", "1", "1", "1", "1", "1"),
    ("1", "1/sqrt(2)", "sqrt(2)", "0", "0", "1"),
    ("1", "1/sqrt(2)", "sqrt(2)", "0", "sqrt(2)", "1"),
    ("1", "1/sqrt(2)", "sqrt(2)", "1/sqrt(2)", "1/sqrt(2)", "1"),
    ("1/sqrt(3)", "sqrt(3/2)", "sqrt(2)", "1/sqrt(2)", "sqrt(3/2)", "1/sqrt(3)"),
    ("1/sqrt(2)", "1", "sqrt(2)", "0", "1", "0"),
    ("1/sqrt(2)", "1", "sqrt(2)", "0", "1", "sqrt(2)"),
    ("1/sqrt(2)", "sqrt(2)", "1", "1", "0", "0"),
    ("1/sqrt(2)", "sqrt(2)", "1", "1", "sqrt(2)", "1/sqrt(2)"),
    ("1/sqrt(2)", "sqrt(2/3)", "sqrt(3)", "1/sqrt(3)", "2*sqrt(6)/3", "1/sqrt(2)"),
    ("1/sqrt(2)", "sqrt(2/3)", "sqrt(3)", "1/sqrt(3)", "sqrt(2/3)", "sqrt(2)"),
    ("2*sqrt(2)/3", "1", "2/sqrt(3)", "1/(2*sqrt(2))", "sqrt(6)/4", "1/sqrt(3)"),
    ("1", "3/sqrt(10)", "sqrt(6/5)", "0", "0", "1/sqrt(3)"),
    ("1", "3/sqrt(10)", "sqrt(6/5)", "0", "sqrt(6/5)", "1/sqrt(3)"),
    ("1", "3/sqrt(10)", "sqrt(6/5)", "3/sqrt(10)", "sqrt(3/10)", "1/sqrt(3)"),
    ("3/sqrt(19)", "sqrt(19/10)", "sqrt(6/5)", "3/sqrt(10)", "sqrt(19/30)", "sqrt(3/19)"),
    ("3/sqrt(19)", "sqrt(57/55)", "sqrt(11/5)", "sqrt(5/33)", "2*sqrt(19/55)", "sqrt(3/19)"),
    ("3/sqrt(19)", "sqrt(57/55)", "sqrt(11/5)", "sqrt(5/33)", "sqrt(95/11)/3", "8/sqrt(57)"),
    ("3/sqrt(10)", "1", "sqrt(6/5)", "0", "1/sqrt(3)", "0"),
    ("3/sqrt(10)", "1", "sqrt(6/5)", "0", "1/sqrt(3)", "sqrt(6/5)"),
    ("3/sqrt(10)", "sqrt(6/11)", "sqrt(11/5)", "sqrt(5/33)", "8*sqrt(22)/33", "sqrt(5/6)"),
    ("3/sqrt(10)", "sqrt(6/11)", "sqrt(11/5)", "sqrt(5/33)", "sqrt(2/11)", "sqrt(6/5)"),
    ("3/sqrt(10)", "sqrt(6/5)", "1", "1/sqrt(3)", "0", "0"),
    ("3/sqrt(10)", "sqrt(6/5)", "1", "1/sqrt(3)", "sqrt(10)/3", "sqrt(5/6)"),
]


def to_double(expr):
    return float(sp.Float(sp.N(expr, DIGITS), DIGITS))


def build_point(index, x_forms, u_forms):
    xs = [ex(f) for f in x_forms]
    us = [ex(f) for f in u_forms]
    vol = sp.prod(xs) if xs else sp.Integer(1)
    return {
        "index": index,
        "x": [to_double(e) for e in xs],
        "u": [to_double(e) for e in us],
        "x_exact": list(x_forms),
        "u_exact": list(u_forms),
        "v_tilde": to_double(vol),
        "v_tilde_exact": str(sp.nsimplify(sp.sqrt(sp.simplify(vol**2)))),
    }


def main():
    x, y, z, u, v, w = sp.symbols("x y z u v w", positive=None)

    eqs2 = residual_exprs([x, y], [u], stilde_n2(x, y, u))
    for p in SET2:
        subs = {x: ex(p["x"][0]), y: ex(p["x"][1]), u: ex(p["u"][0])}
        check_point(eqs2, subs)

    eqs3 = residual_exprs([x, y, z], [u, v, w], stilde_n3(x, y, z, u, v, w))
    for tup in SET3_TUPLES:
        subs = dict(zip([x, y, z, u, v, w], [ex(t) for t in tup]))
        check_point(eqs3, subs)

    sets = []
    sets.append({"n": 1, "points": [build_point(1, SET1[0]["x"], SET1[0]["u"])]})
    sets.append(
        {
            "n": 2,
            "points": [
                build_point(i + 1, p["x"], p["u"]) for i, p in enumerate(SET2)
            ],
        }
    )
    pts3 = []
    for i, tup in enumerate(SET3_TUPLES):
        pts3.append(build_point(i + 1, list(tup[:3]), list(tup[3:])))
    sets.append({"n": 3, "points": pts3})

    doc = {
        "version": 1,
        "description": "Critical points of the normalized scalar curvature "
        "in triangular metric coordinates, S-tilde = n normalization. "
        "Doubles are the closed forms evaluated to 30 digits and rounded once.",
        "generator": "tools/gen_reference.py",
        "sets": sets,
    }

    out = os.path.join(os.path.dirname(__file__), "..", "data", "reference_solutions.json")
    out = os.path.normpath(out)
    with open(out, "w") as f:
        json.dump(doc, f, indent=2)
        f.write("\n")
    print(f"wrote {out} ({sum(len(s['points']) for s in sets)} points), all criticality checks passed")


if __name__ == "__main__":
    sys.exit(main())
