"""Command-line front end: deterministic JSON reports for every verb.

Character grammar (the --theta/--psi/--char arguments):

    charspec  := "triv" | "omega^" INT | "quad" INT | JSON
    JSON      := {"modulus": INT, "images": [[g, [k, n]], ...]}

"triv" is the trivial character modulo 1; "omega^k" the k-th Teichmuller
power at the working prime; "quadD" the quadratic character of fundamental
discriminant D (e.g. quad8, quad-4); the JSON form fixes chi(g) = zeta_n^k
on each listed generator of (Z/modulus)^*.

Every report carries the toolkit version, the embedding datum of the
session ring, a precision certificate, and the identifier of the formula
exercised.  Identical jobs produce byte-identical output.  Exit codes:
0 success, 1 verification mismatch, 2 invalid input, 3 precision exhausted.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .padics import PadicRing
from .series import LambdaSeries, PrecisionExhausted
from .characters import (DirichletCharacter, omega, quadratic_character,
                         needed_embedding_order, xi_of_pair, twist,
                         is_exceptional)
from .klseries import (kl_series, a_series, a_twist, b_ell, admissibility)
from .eisenstein import (lambda_eis, specialize, classical_specialization,
                         embed_expansion, hecke_Tn, tdd_family,
                         decompose_imprimitive, congruence_criterion)
from .cusps import (enumerate_classes, enumerate_A, width, fricke_cusp,
                    canonicalize, ordinary_projection, CuspDivisor)
from .residues import verify_res_identity, total_residue, constant_term_E2
from .iwasawa import weierstrass_prepare, PresentedModule, fitting_ideal


class InputError(ValueError):
    pass


def parse_char(spec, p):
    if spec == "triv":
        return DirichletCharacter.trivial()
    if spec.startswith("omega^"):
        return (omega(p) ** int(spec[6:])).primitive()
    if spec.startswith("quad"):
        return quadratic_character(int(spec[4:]))
    try:
        data = json.loads(spec)
        return DirichletCharacter.from_value_map(
            data["modulus"], {g: tuple(kn) for g, kn in data["images"]})
    except (json.JSONDecodeError, KeyError, TypeError) as e:
        raise InputError("cannot parse character %r: %s" % (spec, e))


def parse_prec(s):
    M, D = (int(x) for x in s.split(","))
    if M <= 0 or D <= 0:
        raise InputError("precision bounds must be positive")
    return M, D


def session_ring(p, chars, M, extra=()):
    if p < 5:
        raise InputError("p >= 5 required")
    m = needed_embedding_order(p, chars, extra)
    return PadicRing(p, m, M + 14)


def report(verb, formula, ring, M, D, payload):
    return {
        "toolkit": "eisres",
        "version": __version__,
        "verb": verb,
        "formula": formula,
        "embedding": ring.embedding_datum() if ring else None,
        "precision": {"p_exponent": M, "x_truncation": D},
        "payload": payload,
    }


def emit(doc, path):
    text = json.dumps(doc, indent=1, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None):
    ap = argparse.ArgumentParser(prog="eisres", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--out", default=None, help="write the JSON report here")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(sp, chars=("--char",), prec_default="8,6"):
        sp.add_argument("--p", type=int, required=True)
        for c in chars:
            sp.add_argument(c, required=True)
        sp.add_argument("--prec", default=os.environ.get("EISRES_PREC", prec_default))

    sp = sub.add_parser("charinfo"); common(sp)
    sp = sub.add_parser("klps"); common(sp)
    sp.add_argument("--build", default="series",
                    choices=["series", "stickelberger", "interpolate"])
    sp = sub.add_parser("aseries"); common(sp, ("--theta", "--psi"))
    sp = sub.add_parser("bell"); common(sp, ("--theta", "--psi"))
    sp.add_argument("--ell", type=int, required=True)
    sp = sub.add_parser("eis"); common(sp, ("--theta", "--psi"))
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--nmax", type=int, default=40)
    sp = sub.add_parser("specialize"); common(sp, ("--theta", "--psi"))
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--nmax", type=int, default=40)
    sp = sub.add_parser("hecke"); common(sp, ("--theta", "--psi"))
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--nmax", type=int, default=40)
    sp = sub.add_parser("decompose"); common(sp, ("--theta", "--psi"))
    sp.add_argument("--t", type=int, default=1)
    sp = sub.add_parser("congruent")
    sp.add_argument("--p", type=int, required=True)
    for c in ("--theta1", "--psi1", "--theta2", "--psi2"):
        sp.add_argument(c, required=True)
    sp = sub.add_parser("cusps")
    sp.add_argument("action", choices=["list", "widths", "fricke", "ordinary"])
    sp.add_argument("--M", type=int, required=True)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--p", type=int, default=None)
    sp = sub.add_parser("residues");
    sp.add_argument("action", choices=["table", "verify"])
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--theta", required=True)
    sp.add_argument("--psi", required=True)
    sp.add_argument("--t", type=int, default=1)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--prec", default=os.environ.get("EISRES_PREC", "8,6"))
    sp = sub.add_parser("weierstrass")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--coeffs", required=True,
                    help="JSON list of integers or rationals, X^0 first")
    sp.add_argument("--prec", default=os.environ.get("EISRES_PREC", "8,6"))
    sp = sub.add_parser("fitting")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--matrix", required=True,
                    help="JSON matrix of coefficient lists")
    sp.add_argument("--prec", default=os.environ.get("EISRES_PREC", "8,6"))

    args = ap.parse_args(argv)
    try:
        doc, code = run(args)
    except InputError as e:
        emit({"toolkit": "eisres", "version": __version__, "error": str(e)}, args.out)
        return 2
    except PrecisionExhausted as e:
        emit({"toolkit": "eisres", "version": __version__,
              "error": "precision exhausted: %s" % e}, args.out)
        return 3
    except ValueError as e:
        emit({"toolkit": "eisres", "version": __version__, "error": str(e)}, args.out)
        return 2
    emit(doc, args.out)
    return code


def _default_N(theta, psi, t, p):
    Mt = theta.modulus * psi.modulus * t
    from math import gcd
    return Mt // gcd(Mt, p)


def run(args):
    verb = args.verb
    if verb == "charinfo":
        p = args.p
        chi = parse_char(args.char, p)
        M, D = parse_prec(args.prec)
        ring = session_ring(p, [chi], M)
        return report(verb, "character structure", ring, M, D, {
            "character": chi.describe(),
            "order": chi.order(),
            "parity": chi.parity(),
            "primitive": chi.primitive().describe(),
        }), 0

    if verb == "klps":
        p = args.p
        chi = parse_char(args.char, p)
        M, D = parse_prec(args.prec)
        ring = session_ring(p, [chi], M)
        F = kl_series(chi, ring, M, D, construction=args.build)
        return report(verb, "L-series interpolation at negative weights",
                      ring, M, D, {
                          "character": chi.describe(),
                          "construction": args.build,
                          "pole_at_p": F.denom == 'X-p',
                          "series": F.digits(),
                      }), 0

    if verb == "aseries":
        p = args.p
        theta, psi = parse_char(args.theta, p), parse_char(args.psi, p)
        M, D = parse_prec(args.prec)
        ring = session_ring(p, [theta, psi], M)
        A = a_series(theta, psi, ring, M, D)
        c0 = A.product.coeffs[0]
        return report(verb, "congruence element factorization", ring, M, D, {
            "theta": theta.describe(), "psi": psi.describe(),
            "delta_is_one": A.delta is None,
            "euler_primes": [l for l, _ in A.euler_factors],
            "product": A.product.digits(),
            "constant_term_is_unit": (not c0.is_zero()) and c0.val == 0,
        }), 0

    if verb == "bell":
        p = args.p
        theta, psi = parse_char(args.theta, p), parse_char(args.psi, p)
        M, D = parse_prec(args.prec)
        if args.ell == p:
            raise InputError("ell must differ from p")
        ring = session_ring(p, [theta, psi], M)
        xi = xi_of_pair(theta, psi)
        series, unit = b_ell(args.ell, xi, ring, M, D)
        return report(verb, "inertia annihilator and unit criterion",
                      ring, M, D, {
                          "ell": args.ell,
                          "xi": xi.describe(),
                          "series": series.digits(),
                          "is_unit": unit,
                      }), 0

    if verb in ("eis", "specialize", "hecke"):
        p = args.p
        theta, psi = parse_char(args.theta, p), parse_char(args.psi, p)
        M, D = parse_prec(args.prec)
        N = args.N if args.N else _default_N(theta, psi, args.t, p)
        bad = admissibility(theta, psi, args.t, N, p)
        if bad:
            raise InputError("inadmissible family: " + bad)
        ring = session_ring(p, [theta, psi], M)
        E = lambda_eis(theta, psi, args.t, args.nmax, ring, M, D, N=N)
        if verb == "eis":
            payload = {"theta": theta.describe(), "psi": psi.describe(),
                       "t": args.t, "N": N,
                       "coefficients": {str(n): c.digits()
                                        for n, c in sorted(E.coeffs.items())}}
            return report(verb, "weight-variable Eisenstein family",
                          ring, M, D, payload), 0
        if verb == "specialize":
            S = specialize(E, args.k, ring)
            payload = {"k": args.k,
                       "coefficients": {str(n): c.digits()
                                        for n, c in sorted(S.coeffs.items())}}
            return report(verb, "weight specialization", ring, M, D, payload), 0
        TE = hecke_Tn(E, args.n, tdd_family(theta, psi, N * p, ring, D))
        payload = {"n": args.n,
                   "coefficients": {str(n): c.digits()
                                    for n, c in sorted(TE.coeffs.items())}}
        return report(verb, "Hecke action on q-expansions", ring, M, D, payload), 0

    if verb == "decompose":
        p = args.p
        theta, psi = parse_char(args.theta, p), parse_char(args.psi, p)
        M, D = parse_prec(args.prec)
        ring = session_ring(p, [theta, psi], M)
        terms = decompose_imprimitive(theta, psi, args.t, ring, D)
        return report(verb, "imprimitive-to-primitive decomposition",
                      ring, M, D, {
                          "terms": [{"coefficient": coef.digits(),
                                     "theta0": th.describe(),
                                     "psi0": ps.describe(), "t": tt}
                                    for coef, th, ps, tt in terms]}), 0

    if verb == "congruent":
        p = args.p
        pair1 = (parse_char(args.theta1, p), parse_char(args.psi1, p))
        pair2 = (parse_char(args.theta2, p), parse_char(args.psi2, p))
        ok = congruence_criterion(pair1, pair2, p)
        return report(verb, "residual eigenvalue congruence", None, 1, 1,
                      {"congruent": ok}), 0

    if verb == "cusps":
        Mlev = args.M
        if args.action == "list":
            payload = {"labels": [repr(c) for c in enumerate_classes(Mlev)]}
        elif args.action == "widths":
            payload = {"widths": {repr(c): width(c) for c in enumerate_classes(Mlev)}}
        elif args.action == "fricke":
            payload = {"images": {repr(c): repr(fricke_cusp(c, Mlev, args.t))
                                  for c in enumerate_classes(Mlev)}}
        else:
            if not args.p:
                raise InputError("ordinary projection needs --p")
            kept = [repr(c) for c in enumerate_classes(Mlev)
                    if c.y % args.p != 0]
            payload = {"ordinary_classes": kept}
        return report("cusps " + args.action, "boundary combinatorics",
                      None, 1, 1, payload), 0

    if verb == "residues":
        p = args.p
        theta, psi = parse_char(args.theta, p), parse_char(args.psi, p)
        M, D = parse_prec(args.prec)
        N = args.N if args.N else _default_N(theta, psi, args.t, p)
        bad = admissibility(theta, psi, args.t, N, p)
        if bad:
            raise InputError("inadmissible family: " + bad)
        ring = session_ring(p, [theta, psi], M)
        if args.action == "table":
            total, table = total_residue(theta, psi, args.t, N, ring)
            payload = {
                "level": N * p,
                "rows": [{"label": repr(c), "width": W, "constant_term": a0.digits()}
                         for c, W, a0 in table],
                "total_residue_is_zero": total.truncate(min(M, total.prec)).is_zero(),
            }
            return report("residues table", "boundary residues of the "
                          "weight-two member", ring, M, D, payload), 0
        rep = verify_res_identity(theta, psi, args.t, N, ring, M, D)
        doc = report("residues verify", "residue image of the Eisenstein family",
                     ring, M, D, rep.as_dict())
        return doc, 0 if rep.match else 1

    if verb == "weierstrass":
        p = args.p
        M, D = parse_prec(args.prec)
        ring = PadicRing(p, 1, M + 10)
        data = json.loads(args.coeffs)
        coeffs = [ring.from_fraction(Fraction(str(c))) for c in data]
        f = LambdaSeries(ring, coeffs, max(D, len(coeffs)))
        w = weierstrass_prepare(f)
        return report(verb, "distinguished factorization", ring, M, D,
                      w.as_dict()), 0

    if verb == "fitting":
        p = args.p
        M, D = parse_prec(args.prec)
        ring = PadicRing(p, 1, M + 10)
        rows = json.loads(args.matrix)
        mat = [[LambdaSeries(ring, [ring.from_fraction(Fraction(str(c)))
                                    for c in cell], D)
                for cell in row] for row in rows]
        gens = fitting_ideal(PresentedModule(mat))
        return report(verb, "maximal minors of a presentation", ring, M, D,
                      {"generators": [g.digits() for g in gens]}), 0

    raise InputError("unknown verb %r" % verb)


if __name__ == "__main__":
    sys.exit(main())
