# Copyright 2026 The ruledsym Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Independent symmetry oracle for the surface corpus.

Solves the parameter-space system with sympy Groebner bases, recovers each
isometry by undetermined coefficients and classifies it. Prints one JSON
object per surface. The resulting counts are frozen into the C++ tests.
"""

import json
import sys

import sympy as sp

t, s = sp.symbols("t s")
al, be, de, K = sp.symbols("alpha beta delta K")

CORPUS = {
    "example38": (
        ["(2*t**8-10*t**6-10*t**4+5*t**2+1)/(t**2+1)",
         "-(t**9-6*t**7+6*t**3+t**2-3*t+1)/(t**2+1)",
         "t**7+3*t**5+3*t**3+t+5"],
        ["2*t*(t**4-6*t**2+1)", "-t**6+7*t**4-7*t**2+1", "(t**2+1)**3"]),
    "x5": (None, ["2*t*(t**4-6*t**2+1)", "(-t**2+1)*(t**4-6*t**2+1)", "(t**2+1)**3"]),
    "x6": (["4", "1", "t"], ["(t+1)**2", "t+1", "1"]),
    "x7": (None, ["3*(t+1)**2*(t-1)", "(t-1)**3", "(t+1)**3"]),
    "x8": (["t**3/(t**2+1)", "t**5/(t**2+1)", "t**7/(t**2+1)"], ["-t**5+t", "3*t**7", "-2*t**3"]),
    "x9": (["t**4+t**2+t", "t**6+t**3", "t**5+t**3+t**2+3*t"], ["t**3+t", "t**5", "t**4+t**2+3"]),
    "cone_sqrt3": (None, ["-t**4-6*t**2+3", "8*t**3", "(t**2+1)**2"]),
    "x2": (["(t**7+7*t**5+3*t**3-t**2-3*t+1)/(t**2+1)", "2*t*(4*t**5+4*t**3+1)/(t**2+1)", "t*(t**2+1)**2"],
           ["-t**4-6*t**2+3", "8*t**3", "(t**2+1)**2"]),
    "x3": (["t**6-6*t**4+t**2+2*t", "-t**7+6*t**5-t**3+t**2+t", "t**3+t"],
           ["t**5-6*t**3+t", "-t**6+6*t**4-t**2+1", "t**2+1"]),
    "x4": (["t**2/(t**2+1)", "t**4/(t**2+1)", "t**5/(t**2+1)"], ["t", "t**3", "1"]),
}


def phi_solutions(q, n, gamma):
    h = sp.Poly(sp.expand(sum(qi ** 2 for qi in q)), t)
    delta = de if gamma == 1 else sp.Integer(1)
    psi_num, psi_den = al * t + be, gamma * t + delta
    total = 0
    for qi in q:
        coeffs = sp.Poly(qi, t).all_coeffs()[::-1]
        total += sum(c * psi_num ** j * psi_den ** (n - j) for j, c in enumerate(coeffs)) ** 2
    eqs = sp.Poly(sp.expand(h.as_expr() - K * total), t).all_coeffs()
    unknowns = [K, be, de, al] if gamma == 1 else [K, be, al]
    sols = sp.solve(eqs, unknowns, dict=True)
    out = []
    for so in sols:
        vals = {v: sp.nsimplify(so.get(v, v)) for v in unknowns}
        if any(not sp.sympify(v).is_real for v in vals.values()):
            continue
        if not vals[K].is_positive:
            continue
        a = vals[al]
        b = vals[be]
        d = vals[de] if gamma == 1 else sp.Integer(1)
        if sp.simplify(a * d - b * gamma) == 0:
            continue
        for k in (sp.sqrt(vals[K]), -sp.sqrt(vals[K])):
            out.append((a, b, sp.Integer(gamma), d, sp.radsimp(k)))
    return out


def recover(p, q, n, a, b, g, d, k):
    psi = (a * t + b) / (g * t + d)
    scale = k * (g * t + d) ** n
    Qs = sp.symbols("Q0:9")
    Q = sp.Matrix(3, 3, Qs)
    eqs = []
    for i in range(3):
        coeffs = sp.Poly(q[i], t).all_coeffs()[::-1]
        hom = sum(c * (a * t + b) ** j * (g * t + d) ** (n - j) for j, c in enumerate(coeffs))
        e = sp.expand((Q * sp.Matrix(q))[i] - k * hom)
        eqs += sp.Poly(e, t).all_coeffs()
    sol = sp.solve(eqs, Qs, dict=True)
    if not sol:
        return None
    Qm = Q.subs(sol[0]).applyfunc(sp.radsimp)
    if any(x.free_symbols for x in Qm):
        return None
    if (Qm.T * Qm - sp.eye(3)).applyfunc(sp.simplify) != sp.zeros(3, 3):
        return None
    bs = sp.symbols("b0:3")
    defect = [sp.cancel((Qm * sp.Matrix(p))[i] + bs[i] - p[i].subs(t, psi)) for i in range(3)]
    qpsi = [sp.cancel(qi.subs(t, psi)) for qi in q]
    eqs = []
    for i, j in ((0, 1), (1, 2), (0, 2)):
        e = sp.numer(sp.together(defect[i] * qpsi[j] - defect[j] * qpsi[i]))
        eqs += sp.Poly(sp.expand(e), t).all_coeffs()
    bsol = sp.solve(eqs, bs, dict=True)
    if not bsol:
        return None
    bv = sp.Matrix([sp.radsimp(bsol[0].get(x, x)) for x in bs])
    i = next(j for j in range(3) if qpsi[j] != 0)
    c = sp.cancel(defect[i].subs(dict(zip(bs, bv))) / qpsi[i])
    lhs = Qm * (sp.Matrix(p) + s * sp.Matrix(q)) + bv
    rhs = (sp.Matrix(p).subs(t, psi) + (scale * s + c) * sp.Matrix(q).subs(t, psi))
    if any(sp.simplify(sp.radsimp(sp.together(lhs[r] - rhs[r]))) != 0 for r in range(3)):
        return None
    return Qm, bv, c


def classify(Q):
    det = sp.simplify(Q.det())
    tr = sp.simplify(Q.trace())
    if det == 1:
        if Q == sp.eye(3):
            return "identity"
        return "axial" if tr == -1 else "rotation"
    if Q == -sp.eye(3):
        return "central"
    return "reflection" if tr == 1 else "rotoreflection"


def run(name):
    pstr, qstr = CORPUS[name]
    q = [sp.sympify(e) for e in qstr]
    # Standard form: coprime polynomial direction components.
    common = sp.gcd(sp.gcd(q[0], q[1]), q[2])
    q = [sp.cancel(qi / common) for qi in q]
    p = [sp.sympify(e) for e in pstr] if pstr else [sp.Integer(0)] * 3
    n = max(sp.degree(qi, t) for qi in q)
    counts = {}
    details = []
    for gamma in (0, 1):
        for cand in phi_solutions(q, n, gamma):
            rec = recover(p, q, n, *cand)
            if rec is None:
                continue
            kind = classify(rec[0])
            counts[kind] = counts.get(kind, 0) + 1
            details.append({"phi": [str(v) for v in cand], "kind": kind,
                            "Q": [str(v) for v in rec[0]], "b": [str(v) for v in rec[1]], "c": str(rec[2])})
    return {"surface": name, "counts": counts, "isometries": details}


if __name__ == "__main__":
    names = sys.argv[1:] or list(CORPUS)
    for nm in names:
        print(json.dumps(run(nm)), flush=True)
