"""Command line front end.

Subcommands: dist, verify, bounds, periods, table1.  Every run emits either
plain text or a single JSON record whose key set is identical across
subcommands; values a command did not compute are null.  Weight and count
values inside the record are decimal strings so that results beyond 64 bits
survive any JSON reader.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time

from . import closed_forms, cyclotomy, errors, fields, numtheory, oracle, weights
from .fields import DEFAULT_ENUM_BUDGET

_METHODS = ("auto", "closed", "brute")


@dataclasses.dataclass
class RunReport:
    """Machine-readable record of one CLI run; round-trips through JSON."""

    p: int | None = None
    s: int | None = None
    m: int | None = None
    N: int | None = None
    q: int | None = None
    r: int | None = None
    n: int | None = None
    N1: int | None = None
    m0: int | None = None
    method: str | None = None
    weights: tuple[tuple[int, int], ...] | None = None
    divisor: int | None = None
    bounds: tuple[int, int] | None = None
    thm14: dict | None = None
    verify: dict | None = None
    periods: tuple[str, ...] | None = None
    table: tuple[dict, ...] | None = None
    elapsed_ms: float | None = None

    def to_json(self) -> str:
        rec = dataclasses.asdict(self)
        if self.weights is not None:
            rec["weights"] = [
                {"w": str(w), "count": str(c)} for w, c in self.weights
            ]
        if self.bounds is not None:
            rec["bounds"] = {"lower": self.bounds[0], "upper": self.bounds[1]}
        if self.periods is not None:
            rec["periods"] = list(self.periods)
        if self.table is not None:
            rec["table"] = [dict(row) for row in self.table]
        return json.dumps(rec)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        rec = json.loads(text)
        if rec.get("weights") is not None:
            rec["weights"] = tuple(
                (int(e["w"]), int(e["count"])) for e in rec["weights"]
            )
        if rec.get("bounds") is not None:
            rec["bounds"] = (rec["bounds"]["lower"], rec["bounds"]["upper"])
        if rec.get("periods") is not None:
            rec["periods"] = tuple(rec["periods"])
        if rec.get("table") is not None:
            rec["table"] = tuple(rec["table"])
        return cls(**rec)


def _base_report(spec: weights.CodeSpec) -> RunReport:
    return RunReport(
        p=spec.p, s=spec.s, m=spec.m, N=spec.N,
        q=spec.q, r=spec.r, n=spec.n, N1=spec.N1, m0=spec.m0,
    )


def _check_dict(check: weights.PeriodCheck) -> dict:
    return {
        "integral": check.integral,
        "congruent": check.congruent,
        "bounded": check.bounded,
    }


def _finish(rep: RunReport, t0: float, fmt: str, lines: list[str]) -> None:
    rep.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    if fmt == "json":
        print(rep.to_json())
    else:
        for line in lines:
            print(line)


def _poly_text(coeffs: tuple[int, ...]) -> str:
    parts: list[str] = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            x = "X" if k == 1 else f"X^{k}"
            body = x if abs(c) == 1 else f"{abs(c)}{x}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


def cmd_dist(args) -> int:
    t0 = time.perf_counter()
    spec = weights.code_params(args.p, args.s, args.m, args.N)
    dist = weights.weight_distribution(
        spec, args.method, budget=args.budget, threads=args.threads
    )
    rep = _base_report(spec)
    rep.method = dist.method
    rep.weights = dist.entries
    rep.divisor = weights.divisibility(spec)
    rep.bounds = weights.bounds(spec)
    _finish(rep, t0, args.format, [dist.enumerator_text()])
    return 0


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    spec = weights.code_params(args.p, args.s, args.m, args.N)
    rep = _base_report(spec)
    rep.divisor = weights.divisibility(spec)
    rep.bounds = weights.bounds(spec)
    reference = oracle.brute_weight_distribution(
        spec, budget=args.budget, threads=args.threads
    )
    tower = fields.build_tower(spec.p, spec.s, spec.m)
    pset = cyclotomy.gaussian_periods_exact(tower, spec.N1, budget=args.budget)
    check = weights.check_period_properties(spec, pset)
    rep.thm14 = _check_dict(check)
    check_line = (
        f"divisor = {rep.divisor} | bounds = [{rep.bounds[0]}, {rep.bounds[1]}]"
        f" | integral={check.integral} congruent={check.congruent}"
        f" bounded={check.bounded}"
    )
    try:
        closed = weights.weight_distribution(
            spec, args.method, budget=args.budget, threads=args.threads
        )
    except errors.Unsupported as exc:
        rep.weights = reference.entries
        _finish(rep, t0, args.format, [
            f"no closed form applies ({exc}); oracle result:",
            reference.enumerator_text(),
            check_line,
        ])
        return 3
    rep.method = closed.method
    rep.weights = closed.entries
    match = closed.entries == reference.entries
    rep.verify = {"match": match, "oracle_method": reference.method}
    if match:
        _finish(rep, t0, args.format, [
            f"MATCH: {closed.method} == {reference.method}",
            closed.enumerator_text(),
            check_line,
        ])
        return 0
    _finish(rep, t0, args.format, [
        f"MISMATCH: {closed.method} != {reference.method}",
        f"closed: {closed.enumerator_text()}",
        f"oracle: {reference.enumerator_text()}",
        check_line,
    ])
    return 4


def cmd_bounds(args) -> int:
    t0 = time.perf_counter()
    spec = weights.code_params(args.p, args.s, args.m, args.N)
    rep = _base_report(spec)
    rep.divisor = weights.divisibility(spec)
    rep.bounds = weights.bounds(spec)
    _finish(rep, t0, args.format, [
        f"[n, k] = [{spec.n}, {spec.m0}] over GF({spec.q})",
        f"divisor = {rep.divisor}",
        f"lower = {rep.bounds[0]}",
        f"upper = {rep.bounds[1]}",
    ])
    return 0


def _index2_attempt_order(p: int, d: int, N: int):
    """Index-two parameters for periods of order N over GF(p**d), or None."""
    fac = numtheory.factorize(N)
    if len(fac) != 1:
        return None
    (l, lam), = fac.items()
    if l % 4 != 3 or l == 3 or l == p:
        return None
    if numtheory.mult_order(p, l) != (l - 1) // 2:
        return None
    f = (l - 1) * l ** (lam - 1) // 2
    if d % f:
        return None
    return closed_forms.index2_params(p, l, lam, d // f)


def cmd_periods(args) -> int:
    t0 = time.perf_counter()
    spec = weights.code_params(args.p, args.s, args.m, args.N)
    p, N, d = spec.p, spec.N, spec.s * spec.m
    rep = _base_report(spec)

    poly = None
    if N == 3:
        poly = closed_forms.period_poly_order3(args.p, args.s, args.m)
    elif N == 4:
        poly = closed_forms.period_poly_order4(args.p, args.s, args.m)

    values = None      # periods indexed by class
    multiset = None    # periods without class assignment
    if args.method in ("auto", "closed"):
        if N == 1:
            values, rep.method = [-1], "thm16"
        elif N == 2:
            try:
                values = list(closed_forms.periods_order2(args.p, args.s, args.m))
                rep.method = "thm18"
            except errors.Error:
                pass
        else:
            j = numtheory.semiprimitive_j(p, N)
            if j is not None and d % (2 * j) == 0:
                sp = closed_forms.semiprimitive_periods(p, j, d // (2 * j), N)
                values, rep.method = sp.as_list(), "thm24"
            elif poly is not None and poly.roots is not None:
                multiset = [v for v, mult in poly.roots for _ in range(mult)]
                rep.method = "thm19" if N == 3 else "thm21"
            else:
                params = _index2_attempt_order(p, d, N)
                if params is not None:
                    values = closed_forms.index2_periods(params)
                    rep.method = "thm22"
    if values is None and multiset is None:
        if args.method == "closed":
            raise errors.Unsupported(
                f"no closed form for periods of order {N} over GF({spec.r})"
            )
        tower = fields.build_tower(args.p, args.s, args.m)
        pset = cyclotomy.gaussian_periods_exact(tower, N, budget=args.budget)
        rep.method = "brute"
        if pset.integer_values is not None:
            values = list(pset.integer_values)
        else:
            values = list(pset.values)

    lines = []
    if values is not None:
        rep.periods = tuple(str(v) for v in values)
        if all(isinstance(v, int) for v in values):
            lines.append(", ".join(f"eta_{i} = {v}" for i, v in enumerate(values)))
        else:
            lines.extend(f"eta_{i} = {v}" for i, v in enumerate(values))
    else:
        rep.periods = tuple(str(v) for v in multiset)
    if poly is not None:
        lines.append(f"polynomial: {_poly_text(poly.coeffs)}")
        if values is None:
            lines.append(
                "roots: {" + ", ".join(str(v) for v in multiset)
                + "} (class assignment not determined)"
            )
    ints = values if values is not None else multiset
    if spec.N1 == N and all(isinstance(v, int) for v in ints):
        check = weights.check_period_properties(spec, ints)
        rep.thm14 = _check_dict(check)
        lines.append(
            f"integral={check.integral} congruent={check.congruent}"
            f" bounded={check.bounded}"
        )
    _finish(rep, t0, args.format, lines)
    return 0


# Printed reference table: (p, s, m, N) and the published row
# (n, k, d, q, lower bound, (r-1)/(q-1) mod N).
_TABLE1 = (
    ((2, 1, 4, 3), (5, 4, 2, 2, 2, 0)),
    ((2, 1, 6, 3), (21, 6, 8, 2, 8, 0)),
    ((2, 2, 3, 3), (21, 3, 12, 4, 12, 0)),
    ((2, 2, 4, 3), (85, 4, 64, 4, 64, 1)),
    ((3, 1, 3, 2), (13, 3, 9, 3, 9, 1)),
    ((3, 1, 4, 2), (40, 4, 24, 3, 24, 0)),
    ((3, 1, 5, 2), (121, 5, 81, 3, 81, 1)),
    ((5, 1, 4, 2), (312, 4, 240, 5, 236, 0)),
)


def table1_rows() -> list[dict]:
    rows = []
    for (p, s, m, N), printed in _TABLE1:
        spec = weights.code_params(p, s, m, N)
        dist = weights.weight_distribution(spec)
        lower, _ = weights.bounds(spec)
        residue = ((spec.r - 1) // (spec.q - 1)) % N
        rows.append({
            "n": spec.n,
            "k": spec.m0,
            "d": dist.minimum_distance,
            "q": spec.q,
            "computed_bound": lower,
            "printed_bound": printed[4],
            "residue": residue,
            "agree": lower == printed[4],
        })
    return rows


def cmd_table1(args) -> int:
    t0 = time.perf_counter()
    rows = table1_rows()
    rep = RunReport(table=tuple(rows))
    lines = ["  n  k    d  q  computed  printed  residue"]
    for row in rows:
        mark = "agree" if row["agree"] else "DISAGREE"
        lines.append(
            f"{row['n']:>3}  {row['k']}  {row['d']:>3}  {row['q']}"
            f"  {row['computed_bound']:>8}  {row['printed_bound']:>7}"
            f"  {row['residue']:>7}  {mark}"
        )
    _finish(rep, t0, args.format, lines)
    return 0


def _add_run_flags(sp, default_method: str) -> None:
    # fresh actions per subparser: argparse parents share action objects, so
    # a per-command default would leak into every sibling
    sp.add_argument("--method", choices=_METHODS, default=default_method)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--budget", type=int, default=DEFAULT_ENUM_BUDGET,
                    help="largest field size the enumeration paths accept")
    sp.add_argument("--threads", type=int, default=1)


def _add_param_flags(sp) -> None:
    sp.add_argument("--p", type=int, required=True, help="characteristic")
    sp.add_argument("--s", type=int, required=True,
                    help="alphabet field is GF(p**s)")
    sp.add_argument("--m", type=int, required=True,
                    help="extension degree, codewords live in GF(p**(s*m))")
    sp.add_argument("--N", type=int, required=True,
                    help="divisor of p**(s*m) - 1 selecting the code")


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="irrcyclic",
        description="Exact weight distributions of irreducible cyclic codes.",
    )
    sub = top.add_subparsers(dest="command", required=True)
    commands = (
        ("dist", cmd_dist, True, "auto", "weight distribution"),
        ("verify", cmd_verify, True, "closed",
         "closed form against the enumeration oracle"),
        ("bounds", cmd_bounds, True, "auto",
         "divisibility and weight bounds only"),
        ("periods", cmd_periods, True, "auto", "Gaussian periods of order N"),
        ("table1", cmd_table1, False, "auto",
         "recompute the published bound table"),
    )
    for name, fn, takes_params, default_method, help_text in commands:
        sp = sub.add_parser(name, help=help_text)
        if takes_params:
            _add_param_flags(sp)
        _add_run_flags(sp, default_method)
        sp.set_defaults(fn=fn)
    return top


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.fn(args)
    except (errors.Unsupported, errors.SizeBudgetExceeded) as exc:
        print(f"unsupported: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except errors.Error as exc:
        print(f"invalid parameters: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
