"""Command-line front end: ``conformalk <command> [options]``.

Every command prints a JSON report (sorted keys, stable ordering) that echoes
the full run configuration and the tool version. Exit codes: 0 when every
check matches expectations, 1 on a mathematical mismatch, 2 on a usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .grassmann import parse_monomial
from .scalar import GaussScalar, parse_scalar
from .so_rep import Weight, WeightError, parse_weight

N_MIN, N_MAX = 3, 8

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    mu: str | None = None
    dmax: int | None = None
    tmax: int | None = None
    kmax: int | None = None
    alpha: str | None = None
    dual: bool | None = None
    side: str | None = None
    extra: dict = field(default_factory=dict)
    json_path: str | None = None
    verbose: bool = False

    def echo(self) -> dict:
        d = asdict(self)
        d.pop("json_path")
        return {k: v for k, v in d.items() if v is not None and v != {}}


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CONFORMALK_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn, items):
    """Map in parallel when CONFORMALK_THREADS > 1; results keep input order."""
    items = list(items)
    t = _threads()
    if t == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(t, len(items))) as ex:
        return list(ex.map(fn, items))


def _weight(text: str, n: int) -> Weight:
    try:
        return parse_weight(text, n)
    except (ValueError, WeightError) as exc:
        raise UsageError(str(exc)) from exc


def _jsonable(x):
    if isinstance(x, Weight):
        return x.to_json()
    if isinstance(x, (GaussScalar, Fraction)):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _check(claim: str, passed: bool, **data) -> dict:
    return dict(claim=claim, passed=bool(passed), **data)


def _emit(cfg: RunConfig, body: dict, text: str | None = None) -> None:
    report = {"tool": "conformalk", "version": __version__, "config": cfg.echo()}
    report.update(body)
    out = json.dumps(_jsonable(report), sort_keys=True, indent=2)
    if cfg.json_path:
        with open(cfg.json_path, "w", encoding="utf-8") as fh:
            fh.write(out + "\n")
    if text is not None:
        print(text)
        if not cfg.json_path:
            print(out)
    else:
        print(out)


def _status(checks: list) -> int:
    return EXIT_OK if all(c["passed"] for c in checks) else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_axioms(cfg: RunConfig) -> int:
    from .kn_algebra import check_axioms
    rep = check_axioms(cfg.n, cfg.tmax)
    checks = [_check(c["name"], c["passed"],
                     **{k: v for k, v in c.items() if k not in ("name", "passed")})
              for c in rep["checks"]]
    body = {"passed": rep["passed"], "checks": checks}
    if "counterexample" in rep:
        body["counterexample"] = rep["counterexample"]
    _emit(cfg, body)
    return _status(checks)


def cmd_rep(cfg: RunConfig) -> int:
    from .so_rep import build_irrep, check_bracket_fidelity, check_hw, weyl_dim
    w = _weight(cfg.mu, cfg.n)
    try:
        rep = build_irrep(cfg.n, w)
    except WeightError as exc:
        raise UsageError(str(exc)) from exc
    wd = weyl_dim(cfg.n, w)
    checks = [
        _check("dimension equals the Weyl dimension formula", rep.dim == wd,
               dim=rep.dim, weylDim=wd),
        _check("representation matrices satisfy the so(n) commutation relations",
               check_bracket_fidelity(rep)),
        _check("highest weight vector is killed by the raising operators", check_hw(rep)),
    ]
    _emit(cfg, {"rep": rep.to_json(), "checks": checks})
    return _status(checks)


def cmd_action(cfg: RunConfig) -> int:
    from .induced import (DUAL, NATURAL, InducedVector, lambda_action_dual,
                          lambda_action_natural, twist_alpha)
    from .so_rep import build_irrep
    n = cfg.n
    w = _weight(cfg.mu, n)
    try:
        rep = build_irrep(n, w)
        f = parse_monomial(cfg.extra["f"], n)
        g = parse_monomial(cfg.extra["g"], n)
        alpha = parse_scalar(cfg.alpha or "0")
    except (ValueError, WeightError) as exc:
        raise UsageError(str(exc)) from exc
    b = cfg.extra.get("vec")
    b = rep.hwIndex if b is None else b
    if not 0 <= b < rep.dim:
        raise UsageError(f"--vec must be in [0, {rep.dim})")
    basis = DUAL if cfg.dual else NATURAL
    v = InducedVector(rep, {(cfg.extra.get("dpow", 0), g, b): GaussScalar.coerce(1)}, basis)
    act = (lambda_action_dual if cfg.dual else lambda_action_natural)(f, v)
    act = twist_alpha(act, alpha)
    checks = [_check("lambda-degree of the action is at most 2", act.degree() <= 2,
                     degree=act.degree())]
    _emit(cfg, {"basis": basis, "action": act.to_json(), "text": act.format(),
                "checks": checks}, text=act.format())
    return _status(checks)


def _singular_checks(n, w, report) -> list:
    from .singular import (FAMILY_B, UNKNOWN, UNKNOWN_TRIVIAL, family_b_relations_check,
                           predicted_singular, support_ok, verify_direct)
    expected = 1 if predicted_singular(n, w) else 0
    checks = [_check("singular space dimension agrees with the classification of "
                     "singular vectors", report.dimension == expected,
                     expected=expected, found=report.dimension)]
    for v, d in zip(report.vectors, report.details):
        checks.append(_check("vector matches a listed family up to scale",
                             d["family"] not in (UNKNOWN, UNKNOWN_TRIVIAL), family=d["family"]))
        checks.append(_check("vector is killed by positive-degree monomials "
                             "acting inside the induced module",
                             verify_direct(v, report.dmax)["passed"]))
        checks.append(_check("vector lies in U_+(g_<0) (x) F", support_ok(v)))
        if d["family"] == FAMILY_B and w.mu[0] != 0:
            fb = family_b_relations_check(v)
            checks.append(_check("family b vector satisfies the w / wbar coordinate "
                                 "relations", fb["passed"]))
    return checks


def cmd_singular(cfg: RunConfig) -> int:
    from .singular import solve
    w = _weight(cfg.mu, cfg.n)
    try:
        report = solve(cfg.n, w, cfg.dmax)
    except WeightError as exc:
        raise UsageError(str(exc)) from exc
    checks = _singular_checks(cfg.n, w, report)
    _emit(cfg, {"result": report.to_json(), "checks": checks})
    return _status(checks)


def parse_grid(spec: str, n: int) -> list:
    """``'a:b[:step];c:d,e'``: one range or value per component, all combinations.

    Steps default to 1 and may be fractions such as ``1/2``. Non-dominant or
    non-integral combinations are skipped.
    """
    from itertools import product
    from .so_rep import check_weight
    if ";" not in spec:
        raise UsageError("grid must look like 'm0range;m1range,...'")
    head, tail = spec.split(";", 1)
    parts = [head] + [p for p in tail.split(",") if p.strip()]
    if len(parts) != n // 2 + 1:
        raise UsageError(f"n={n} needs {n // 2} so(n) components in the grid")
    axes = []
    for p in parts:
        try:
            bits = [Fraction(x.strip()) for x in p.split(":")]
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad grid component {p!r}") from exc
        if len(bits) == 1:
            axes.append([bits[0]])
            continue
        if len(bits) not in (2, 3) or (len(bits) == 3 and bits[2] <= 0):
            raise UsageError(f"bad grid range {p!r}")
        lo, hi = bits[0], bits[1]
        step = bits[2] if len(bits) == 3 else Fraction(1)
        vals = []
        x = lo
        while x <= hi:
            vals.append(x)
            x += step
        axes.append(vals)
    out = []
    for combo in product(*axes):
        w = Weight(GaussScalar.coerce(combo[0]), tuple(combo[1:]))
        try:
            check_weight(n, w)
        except WeightError:
            continue
        out.append(w)
    return out


def _scan_one(args):
    from .singular import scan
    n, w, dmax = args
    return scan(n, [w], dmax)[0]


def cmd_scan(cfg: RunConfig) -> int:
    weights = parse_grid(cfg.extra["grid"], cfg.n)
    if not weights:
        raise UsageError("grid contains no admissible weights")
    rows = _ordered_map(_scan_one, [(cfg.n, w, cfg.dmax) for w in weights])
    checks = [_check("singular vector found exactly where the classification lists one",
                     (r["singularDimension"] > 0) == r["listedSingular"], mu=r["mu"])
              for r in rows]
    _emit(cfg, {"table": rows, "checks": checks})
    return _status(checks)


def _expected_defects(n: int, side: str, kmax: int) -> dict:
    if side == "plus":
        exp = {0: 1, 1: 1}
        exp.update({k: 0 for k in range(2, n + 1)})
    else:
        exp = {0: 0, 1: 1}
        exp.update({k: 0 for k in range(2, kmax)})
    return {k: v for k, v in exp.items() if k < kmax}


def cmd_contact(cfg: RunConfig) -> int:
    from .contact_forms import (exactness_check, gamma_weights, homotopy_check,
                                quotient_complex)
    n, side, kmax, tmax = cfg.n, cfg.side, cfg.kmax, cfg.tmax
    cx = quotient_complex(n, side, kmax, tmax)
    ex = exactness_check(cx)
    ranks = {f"{k},{w}": cx.rank(k, w) for w in cx.weights for k in range(kmax)}
    checks = [_check("d squares to zero on the quotient complex", cx.dd_zero())]
    if side == "plus":
        hc = homotopy_check(n, tmax)
        checks.append(_check("K d + d K = Id - eps on basis forms", hc["passed"]))
    expected = _expected_defects(n, side, kmax)
    for k, e in sorted(expected.items()):
        if side == "plus" and k == 0:
            label = "cohomology at level 0 is the constants"
        elif side == "plus":
            label = ("plus-side quotient complex: defect 1 at level 1, exact at levels 2..n"
                     if k == 1 else "plus-side quotient complex is exact at this level")
        else:
            label = {0: "minus-side d is injective at level 0",
                     1: "minus-side defect is 1 at level 1"}.get(
                         k, "minus-side quotient complex is exact at this level")
        checks.append(_check(label, ex["defects"].get(k) == e, level=k, expected=e,
                             found=ex["defects"].get(k)))
    gam = []
    for k in range(min(kmax, 4)):
        g = gamma_weights(n, k, side)
        m = n // 2
        if side == "plus":
            want = Weight(GaussScalar.coerce(-k), tuple(Fraction(x) for x in [k] + [0] * (m - 1)))
            label = "T^k has weight (-k; k, 0, ..., 0)"
        else:
            want = Weight(GaussScalar.coerce(n + k - 2),
                          tuple(Fraction(x) for x in [k] + [0] * (m - 1)))
            label = "Gamma^k has weight (n+k-2; k, 0, ..., 0)"
        ok = g["weight"] == want and g["extremal"]
        gam.append({"k": k, "weight": g["weight"], "extremal": g["extremal"]})
        checks.append(_check(label, ok, k=k))
    body = {"gradedDims": cx.graded_dims(), "ranks": ranks, "defects": ex["defects"],
            "defectWeights": ex["defectWeights"], "clipped": ex["clipped"],
            "weights": cx.weights, "gamma": gam, "checks": checks}
    _emit(cfg, body)
    return _status(checks)


DEFERRAL = ("catalog: n = {n} is not covered. The classification of finite irreducible "
            "modules implemented here assumes n >= 4; K_3, together with the exceptional "
            "K_4' and CK_6, is left for separate treatment.")


def cmd_catalog(cfg: RunConfig) -> int:
    from .singular import scan
    n = cfg.n
    if n < 4:
        print(DEFERRAL.format(n=n), file=sys.stderr)
        _emit(cfg, {"deferred": True, "message": DEFERRAL.format(n=n), "checks": []})
        return EXIT_USAGE
    m = n // 2
    kmax = cfg.kmax
    zeros = [0] * (m - 1)
    excluded = []
    probes = []
    for k in range(1, kmax + 1):
        lo = Weight(GaussScalar.coerce(-k), tuple(Fraction(x) for x in [k] + zeros))
        hi = Weight(GaussScalar.coerce(n + k - 2), tuple(Fraction(x) for x in [k] + zeros))
        excluded.append({"k": k, "weights": [lo.to_json(), hi.to_json()]})
        probes += [(lo, True), (hi, True)]
        probes.append((lo.shifted(1), False))
    rows = _ordered_map(_scan_one, [(n, w, cfg.dmax) for w, _ in probes])
    checks = []
    for (w, want), r in zip(probes, rows):
        label = ("excluded weight carries a singular vector (Ind(F) reducible)" if want
                 else "neighbouring weight carries no singular vector")
        checks.append(_check(label, r["reducible"] == want, mu=w.to_json()))
    families = [
        {"family": 1, "module": "Tens_alpha V",
         "condition": "V irreducible finite-dimensional cso(n)-module whose highest weight "
                      "is not one of the excluded weights",
         "excluded": excluded},
        {"family": 2, "module": "(Omega^k / I^k)^*_alpha / Ker d~^*", "k": "k >= 0",
         "realizes": "the irreducible quotient at weight (-k; k, 0, ..., 0)"},
        {"family": 3, "module": "(Omega^k / I^k)_alpha / Ker d~", "k": "k >= 1",
         "realizes": "the irreducible quotient at weight (n+k-2; k, 0, ..., 0)"},
    ]
    _emit(cfg, {"families": families, "scan": rows,
                "borelIncludesGamma": n % 2 == 1, "checks": checks})
    return _status(checks)


COMMANDS = {
    "axioms": cmd_axioms, "rep": cmd_rep, "action": cmd_action, "singular": cmd_singular,
    "scan": cmd_scan, "contact": cmd_contact, "catalog": cmd_catalog,
}


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conformalk", description="Exact computations for K_n.")
    p.add_argument("--version", action="version", version=f"conformalk {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, mu=False):
        sp.add_argument("--n", type=int, required=True)
        if mu:
            sp.add_argument("--mu", required=True, help="weight 'm0;m1,m2,...'")
        sp.add_argument("--json", dest="json_path", help="also write the report here")
        sp.add_argument("--allow-any-n", action="store_true",
                        help=f"skip the {N_MIN} <= n <= {N_MAX} guard (may be slow)")
        sp.add_argument("-v", "--verbose", action="store_true")

    sp = sub.add_parser("axioms", help="conformal algebra axioms on monomials")
    common(sp)
    sp.add_argument("--tmax", type=int, default=3)

    sp = sub.add_parser("rep", help="build an irreducible cso(n)-module")
    common(sp, mu=True)

    sp = sub.add_parser("action", help="lambda-action on Ind(F)")
    common(sp, mu=True)
    sp.add_argument("--f", required=True, help="monomial such as 'x1 x2' or '1'")
    sp.add_argument("--g", required=True)
    sp.add_argument("--dpow", type=int, default=0)
    sp.add_argument("--vec", type=int, help="index of the F basis vector (default: highest)")
    sp.add_argument("--dual", action="store_true", help="use the Hodge-dual basis")
    sp.add_argument("--alpha", default="0")

    sp = sub.add_parser("singular", help="solve for singular vectors")
    common(sp, mu=True)
    sp.add_argument("--dmax", type=int, default=3)

    sp = sub.add_parser("scan", help="singular vectors over a weight grid")
    common(sp)
    sp.add_argument("--mu-grid", required=True, help="e.g. '-2:4;0:2,0'")
    sp.add_argument("--dmax", type=int, default=3)

    sp = sub.add_parser("contact", help="the contact complex")
    common(sp)
    sp.add_argument("--side", choices=["plus", "minus"], default="plus")
    sp.add_argument("--kmax", type=int)
    sp.add_argument("--tmax", type=int, default=4)

    sp = sub.add_parser("catalog", help="finite irreducible modules, checked by scan")
    common(sp)
    sp.add_argument("--kmax", type=int, default=2)
    sp.add_argument("--dmax", type=int, default=3)
    return p


def make_config(ns) -> RunConfig:
    cfg = RunConfig(command=ns.command, n=ns.n, json_path=ns.json_path, verbose=ns.verbose)
    for name in ("mu", "dmax", "tmax", "kmax", "side"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if ns.command == "action":
        cfg.alpha = ns.alpha
        cfg.dual = ns.dual
        cfg.extra = {"f": ns.f, "g": ns.g, "dpow": ns.dpow, "vec": ns.vec}
    if ns.command == "scan":
        cfg.extra = {"grid": ns.mu_grid}
    if ns.command == "contact" and cfg.kmax is None:
        cfg.kmax = ns.n + 1
    return cfg


def _validate(cfg: RunConfig, allow_any_n: bool) -> None:
    n = cfg.n
    if n < 0:
        raise UsageError("n must be non-negative")
    if not N_MIN <= n <= N_MAX:
        if not allow_any_n and not (cfg.command == "catalog" and n < 4):
            raise UsageError(f"n={n} outside {N_MIN}..{N_MAX}; pass --allow-any-n to override")
        if allow_any_n and n > N_MAX:
            print(f"warning: n={n} may take a very long time", file=sys.stderr)
    for name in ("dmax", "tmax", "kmax"):
        v = getattr(cfg, name)
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be non-negative")
    if cfg.command in ("action", "rep", "singular"):
        _weight(cfg.mu, n)
    if cfg.command == "action" and cfg.extra["dpow"] < 0:
        raise UsageError("--dpow must be non-negative")


_VALUE_FLAGS = ("--mu", "--mu-grid", "--alpha")


def _join_negative_values(argv: list) -> list:
    """Turn ``--mu -1;1,0`` into ``--mu=-1;1,0`` so argparse accepts it."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            raise UsageError("missing command; choose from " + ", ".join(COMMANDS))
        cfg = make_config(ns)
        _validate(cfg, ns.allow_any_n)
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        print(f"conformalk: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
