"""Command-line interface: computation subcommands, checks, JSON output.

All exact scalars are printed as strings (never floats); the only complex
outputs are character values, formatted to 15 significant digits.  Output
is deterministic byte-for-byte for a fixed invocation (including seed):
JSON keys are sorted and vertex lists are emitted in sorted order.

Exit codes: 0 success, 1 a verification/check reported failure, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import verify as verify_mod
from .branching import (
    BranchingGraph,
    L1Vector,
    check_stochastic_row,
    classical_gt_graph,
    export_dot,
    gtq_graph,
    level_window,
    link,
    pushdown_chain,
    young_graph,
)
from .charfun import char_restriction, coherence_check
from .errors import QBranchError
from .harmonic import (
    character_product,
    check_harmonic,
    from_top,
    l1vector_to_json,
    system_from_json,
    system_to_json,
)
from .repsystem import ZhatElement, zhat_mul
from .sampler import sample_down_histogram
from .scalars import LaurentPoly, format_scalar, parse_laurent
from .signatures import check_signature
from .symfunc import cartan_moment, dim_classical, lr_splice, lr_tensor, qdim

DEFAULT_Q = Fraction(9, 10)


def _parse_sig(text: str) -> tuple:
    val = json.loads(text)
    if not isinstance(val, list):
        raise QBranchError(f"expected a JSON array of integers, got {text!r}")
    return check_signature(val)


def _parse_q(text):
    if text in (None, "q", "symbolic"):
        return None
    return Fraction(text)


def _graph_from_args(args) -> BranchingGraph:
    kind = getattr(args, "graph", "gtq")
    if kind == "gtq":
        return gtq_graph(getattr(args, "beta", -1), _parse_q(getattr(args, "q", None)))
    if kind == "gt":
        return classical_gt_graph()
    if kind == "young":
        return young_graph()
    raise QBranchError(f"unknown graph {kind!r}")


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace("i", "j"))


def _fmt_complex(z: complex) -> str:
    re = f"{z.real:.15g}"
    im = f"{abs(z.imag):.15g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{im}i"


def _parse_torus(text: str) -> tuple:
    out = []
    for part in text.split(","):
        part = part.strip()
        if part in ("1", "-1"):
            out.append(int(part))
        else:
            out.append(_parse_complex(part))
    return tuple(out)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _meta(args, **extra) -> dict:
    meta = dict(extra)
    for key in ("graph", "beta", "seed", "tol"):
        if hasattr(args, key) and getattr(args, key) is not None:
            meta[key] = getattr(args, key)
    if hasattr(args, "q"):
        meta["q"] = str(_parse_q(args.q)) if _parse_q(args.q) is not None else "symbolic"
    return meta


def _load_system(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return system_from_json(json.load(fh))


def _zhat_from_json(text: str) -> ZhatElement:
    data = json.loads(text)
    coeffs = {}
    for item in data:
        sig = check_signature(item["sig"])
        coeffs[(item.get("level", len(sig)), sig)] = parse_laurent(item["coef"])
    return ZhatElement(coeffs)


def _zhat_to_json(x: ZhatElement) -> list:
    return [{"level": n, "sig": list(sig), "coef": format_scalar(c)}
            for (n, sig), c in sorted(x.items())]


def cmd_qdim(args) -> int:
    _emit({"qdim": format_scalar(qdim(_parse_sig(args.sig))), "meta": _meta(args)})
    return 0


def cmd_dim(args) -> int:
    _emit({"dim": dim_classical(_parse_sig(args.sig)), "meta": _meta(args)})
    return 0


def cmd_lr_splice(args) -> int:
    c = lr_splice(_parse_sig(args.lam), _parse_sig(args.mu), _parse_sig(args.nu))
    _emit({"coefficient": c, "meta": _meta(args)})
    return 0


def cmd_lr_tensor(args) -> int:
    c = lr_tensor(_parse_sig(args.lam), _parse_sig(args.mu), _parse_sig(args.nu))
    _emit({"coefficient": c, "meta": _meta(args)})
    return 0


def cmd_cartan_moment(args) -> int:
    m = cartan_moment(_parse_sig(args.sig), json.loads(args.exponents))
    _emit({"moment": format_scalar(m), "meta": _meta(args)})
    return 0


def cmd_link(args) -> int:
    g = _graph_from_args(args)
    kappa = link(g, _parse_sig(args.lam), _parse_sig(args.mu))
    _emit({"kappa": format_scalar(kappa), "meta": _meta(args)})
    return 0


def cmd_stochastic_check(args) -> int:
    g = _graph_from_args(args)
    rows = 0
    failures = []
    for n in range(1, args.level + 1):
        for lam in level_window(g, n, args.part_bound):
            v = check_stochastic_row(g, lam)
            rows += 1
            if not v.ok:
                failures.append({"vertex": list(lam), "defect": format_scalar(v.defect)})
    status = "pass" if not failures else "fail"
    _emit({"status": status, "rows": rows, "failures": failures, "meta": _meta(args)})
    return 0 if status == "pass" else 1


def cmd_ring_mul(args) -> int:
    x = _zhat_from_json(args.x)
    y = _zhat_from_json(args.y)
    window = None
    if args.window:
        window = [check_signature(s) for s in json.loads(args.window)]
    _emit({"product": _zhat_to_json(zhat_mul(x, y, window=window)), "meta": _meta(args)})
    return 0


def cmd_harmonic_check(args) -> int:
    nu = _load_system(args.nu)
    verdict = check_harmonic(nu)
    payload = {"status": "pass" if verdict.ok else "fail", "meta": _meta(args)}
    if not verdict.ok:
        what, level, vertex, detail = verdict.first_failure()
        payload["witness"] = {"what": what, "level": level,
                              "vertex": None if vertex is None else list(vertex),
                              "detail": str(detail)}
    _emit(payload)
    return 0 if verdict.ok else 1


def cmd_pushdown(args) -> int:
    g = _graph_from_args(args)
    top = _parse_sig(args.top)
    level = sum(top) if g.kind == "young" else len(top)
    system = from_top(g, L1Vector.delta(level, top))
    _emit({"system": system_to_json(system), "meta": _meta(args)})
    return 0


def cmd_char_product(args) -> int:
    nu1 = _load_system(args.nu1)
    nu2 = _load_system(args.nu2)
    vec = character_product(nu1, nu2, args.level)
    _emit({"vector": l1vector_to_json(vec), "meta": _meta(args)})
    return 0


def cmd_charfun(args) -> int:
    nu = _load_system(args.nu)
    level = args.level if args.level is not None else nu.top_level
    q0 = _parse_q(args.q) or DEFAULT_Q
    beta = nu.graph.beta if nu.graph.kind == "gtq" else -1
    t = _parse_torus(args.t)
    val = char_restriction(nu.vector(level), q0, t, beta=beta)
    if isinstance(val, Fraction):
        out = {"value": str(val), "exact": True}
    else:
        out = {"value": _fmt_complex(val), "exact": False}
    out["level"] = level
    out["meta"] = _meta(args)
    _emit(out)
    return 0


def cmd_coherence_check(args) -> int:
    nu = _load_system(args.nu)
    t = _parse_torus(args.t)
    q0 = _parse_q(args.q)
    res = coherence_check(nu, args.level, t, tol=args.tol, q0=q0)
    _emit({"status": "pass" if res.ok else "fail", "defect": res.defect,
           "lhs": _fmt_complex(complex(res.lhs)), "rhs": _fmt_complex(complex(res.rhs)),
           "meta": _meta(args)})
    return 0 if res.ok else 1


def cmd_sample(args) -> int:
    g = _graph_from_args(args)
    top = _parse_sig(args.top)
    top_level = sum(top) if g.kind == "young" else len(top)
    histos = []
    for target in range(top_level + 1):
        hist = sample_down_histogram(g, top, None, args.seed, args.count, target)
        histos.append({"level": target,
                       "counts": [[list(v), c] for v, c in sorted(hist.items())]})
    _emit({"count": args.count, "histograms": histos, "meta": _meta(args)})
    return 0


def cmd_export_dot(args) -> int:
    g = _graph_from_args(args)
    lo, hi = (int(x) for x in args.levels.split(":"))
    q0 = _parse_q(args.q) or DEFAULT_Q
    dot = export_dot(g, lo, hi, args.part_bound, q=q0)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    _emit({"dot": dot, "meta": _meta(args)})
    return 0


def cmd_verify_all(args) -> int:
    results = verify_mod.run_all(max_level=args.max_level, part_bound=args.part_bound,
                                 seed=args.seed, tol=args.tol, points=args.points,
                                 sample_count=args.count)
    ok = all(r.ok for r in results)
    _emit({"status": "pass" if ok else "fail",
           "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
           "meta": _meta(args)})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qbranch",
                                description="exact computations on q-deformed branching graphs")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("qdim", cmd_qdim, help="quantum dimension of a signature")
    sp.add_argument("--sig", required=True)

    sp = add("dim", cmd_dim, help="Weyl dimension of a signature")
    sp.add_argument("--sig", required=True)

    for name, fn in (("lr-splice", cmd_lr_splice), ("lr-tensor", cmd_lr_tensor)):
        sp = add(name, fn, help=f"{name.replace('-', ' ')} coefficient")
        sp.add_argument("--lam", required=True)
        sp.add_argument("--mu", required=True)
        sp.add_argument("--nu", required=True)

    sp = add("cartan-moment", cmd_cartan_moment, help="weighted trace against a Cartan monomial")
    sp.add_argument("--sig", required=True)
    sp.add_argument("--exponents", required=True)

    sp = add("link", cmd_link, help="stochastic link value on one edge")
    sp.add_argument("--graph", default="gtq", choices=["gtq", "gt", "young"])
    sp.add_argument("--beta", type=int, default=-1, choices=[-1, 1])
    sp.add_argument("--q", default=None)
    sp.add_argument("--lam", required=True)
    sp.add_argument("--mu", required=True)

    sp = add("stochastic-check", cmd_stochastic_check, help="row sums of the link, exactly 1")
    sp.add_argument("--graph", default="gtq", choices=["gtq", "gt", "young"])
    sp.add_argument("--beta", type=int, default=-1, choices=[-1, 1])
    sp.add_argument("--q", default=None)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--part-bound", type=int, default=3)

    sp = add("ring-mul", cmd_ring_mul, help="product in the normalized basis")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--window", default=None,
                    help="JSON list of signatures to materialize instead of the default family")

    sp = add("harmonic-check", cmd_harmonic_check, help="verify a coherent system file")
    sp.add_argument("--nu", required=True)

    sp = add("pushdown", cmd_pushdown, help="coherent system from a top delta mass")
    sp.add_argument("--graph", default="gtq", choices=["gtq", "gt", "young"])
    sp.add_argument("--beta", type=int, default=-1, choices=[-1, 1])
    sp.add_argument("--q", default=str(DEFAULT_Q))
    sp.add_argument("--top", required=True)

    sp = add("char-product", cmd_char_product, help="level distribution of a product state")
    sp.add_argument("--nu1", required=True)
    sp.add_argument("--nu2", required=True)
    sp.add_argument("--level", type=int, required=True)

    sp = add("charfun", cmd_charfun, help="character value at a torus point")
    sp.add_argument("--nu", required=True)
    sp.add_argument("--q", default=None)
    sp.add_argument("--t", required=True)
    sp.add_argument("--level", type=int, default=None)

    sp = add("coherence-check", cmd_coherence_check, help="level n+1 vs level n at (t, 1)")
    sp.add_argument("--nu", required=True)
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--t", required=True)
    sp.add_argument("--q", default=None)
    sp.add_argument("--tol", type=float, default=1e-10)

    sp = add("sample", cmd_sample, help="downward path histograms")
    sp.add_argument("--graph", default="gtq", choices=["gtq", "gt", "young"])
    sp.add_argument("--beta", type=int, default=-1, choices=[-1, 1])
    sp.add_argument("--q", default=str(DEFAULT_Q))
    sp.add_argument("--top", required=True)
    sp.add_argument("--count", type=int, default=100000)
    sp.add_argument("--seed", type=int, default=42)

    sp = add("export-dot", cmd_export_dot, help="Bratteli diagram window as DOT")
    sp.add_argument("--graph", default="gtq", choices=["gtq", "gt", "young"])
    sp.add_argument("--beta", type=int, default=-1, choices=[-1, 1])
    sp.add_argument("--q", default=str(DEFAULT_Q))
    sp.add_argument("--levels", required=True, help="lo:hi")
    sp.add_argument("--part-bound", type=int, default=2)
    sp.add_argument("--out", default=None)

    sp = add("verify-all", cmd_verify_all, help="run the bounded invariant suite")
    sp.add_argument("--max-level", type=int, default=3)
    sp.add_argument("--part-bound", type=int, default=3)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--points", type=int, default=10)
    sp.add_argument("--count", type=int, default=20000)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except QBranchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
