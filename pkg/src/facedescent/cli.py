"""Command-line entry point: ``python -m facedescent <command> ...``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage or a degree cap
was exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import logging
import os
import sys
from dataclasses import dataclass

from .combinatorics import Partition, partitions_of
from .config import ENV_PREFIX, CapExceeded, check_cap

log = logging.getLogger("facedescent")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None
    lam: Partition | None
    mu: Partition | None
    nu: Partition | None
    fmt: str
    jobs: int
    cap_faces: int | None
    out: str | None
    basis: str = "s"
    word: str | None = None


def parse_partition(text: str) -> Partition:
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a partition: {text!r} ({exc})") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="degree")
    common.add_argument("--lambda", dest="lam", type=parse_partition, help="partition, e.g. 2,1,1")
    common.add_argument("--mu", type=parse_partition)
    common.add_argument("--nu", type=parse_partition)
    common.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for (lambda, mu) sweeps")
    common.add_argument("--cap-faces", type=int, help="raise the degree caps for face enumeration and sweeps")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="facedescent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="composition multiplicities of (CF_n E_mu)^nu")
    sub.add_parser("verify", parents=[common], help="idempotent checks plus oracle-vs-series comparison")
    sub.add_parser("cartan", parents=[common], help="Cartan invariants computed two ways")
    lie = sub.add_parser("lie", parents=[common], help="expansion of a higher Lie character")
    lie.add_argument("--basis", choices=("s", "p"), default="s")
    ly = sub.add_parser("lyndon", parents=[common], help="Lyndon factorization and type of a word")
    ly.add_argument("word", help="letters, comma separated (or a digit string)")
    sub.add_parser("sign", parents=[common], help="simple module on the sign-isotypic part")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=ns.command,
        n=ns.n,
        lam=ns.lam,
        mu=ns.mu,
        nu=ns.nu,
        fmt=ns.fmt,
        jobs=max(1, ns.jobs),
        cap_faces=ns.cap_faces,
        out=ns.out,
        basis=getattr(ns, "basis", "s"),
        word=getattr(ns, "word", None),
    )


def _require_n(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.command} needs --n")
    for name in ("lam", "mu", "nu"):
        part = getattr(cfg, name)
        if part is not None and sum(part) != cfg.n:
            raise UsageError(f"--{'lambda' if name == 'lam' else name} {part} is not a partition of {cfg.n}")
    return cfg.n


@contextlib.contextmanager
def _caps(cfg: RunConfig):
    """Raise the degree caps through the environment for the duration of one command."""
    if cfg.cap_faces is None:
        yield
        return
    if cfg.cap_faces > 6:
        log.warning("face cap %d: degree 7 has 47293 faces; expect heavy memory use", cfg.cap_faces)
    if cfg.cap_faces > 5:
        log.warning("sweeps above degree 5 take many minutes")
    keys = [ENV_PREFIX + name.upper() for name in ("faces", "family", "repanalysis")]
    saved = {k: os.environ.get(k) for k in keys}
    os.environ.update({k: str(cfg.cap_faces) for k in keys})
    try:
        yield
    finally:
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


def _selected(cfg: RunConfig, attr: str, n: int) -> list[Partition]:
    val = getattr(cfg, attr)
    return [val] if val is not None else partitions_of(n)


# ---------------------------------------------------------------------------
# renderers


def _csv(rows: list[dict], fields: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: (",".join(map(str, r[k])) if isinstance(r[k], list) else r[k]) for k in fields})
    return buf.getvalue()


def _cell(entries: dict[Partition, int]) -> str:
    order = {lam: i for i, lam in enumerate(partitions_of(sum(next(iter(entries)))))} if entries else {}
    bits = []
    for lam in sorted(entries, key=order.__getitem__):
        m = entries[lam]
        bits.append(str(lam) if m == 1 else f"{lam}({m})")
    return " ".join(bits)


def _grid_text(n: int, grid, cols: list[Partition], rows: list[Partition]) -> str:
    header = ["nu \\ mu"] + [",".join(map(str, mu)) for mu in cols]
    body = [[",".join(map(str, nu))] + [_cell(grid[(nu, mu)]) for mu in cols] for nu in rows]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    line = lambda r: " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    sep = "-+-".join("-" * w for w in widths)
    return "\n".join([line(header), sep] + [line(r) for r in body]) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    from .repanalysis import multiplicity_table

    n = _require_n(cfg)
    grid = multiplicity_table(n, jobs=cfg.jobs)
    cols = _selected(cfg, "mu", n)
    # rows from the sign representation up to the trivial one
    rows = list(reversed(_selected(cfg, "nu", n)))
    records = [
        {"nu": list(nu), "mu": list(mu), "lambda": list(lam), "multiplicity": m}
        for nu in rows
        for mu in cols
        for lam, m in sorted(grid[(nu, mu)].items(), key=lambda kv: partitions_of(n).index(kv[0]))
        if cfg.lam is None or lam == cfg.lam
    ]
    if cfg.fmt == "json":
        return json.dumps({"n": n, "cells": records}, indent=2) + "\n", EXIT_OK
    if cfg.fmt == "csv":
        return _csv(records, ["nu", "mu", "lambda", "multiplicity"]), EXIT_OK
    if cfg.lam is not None:
        grid = {k: {l: m for l, m in v.items() if l == cfg.lam} for k, v in grid.items()}
    return _grid_text(n, grid, cols, rows), EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    from .genfunc import verify_main_theorem
    from .idempotents import FamilyCheckError, build_family, orbit_annihilation_check

    n = _require_n(cfg)
    check_cap("repanalysis", n)
    status: dict = {"n": n}
    try:
        family = build_family(n)
        status["idempotents"] = "ok"
        bad = orbit_annihilation_check(family)
        status["orbit_annihilation"] = "ok" if not bad else [f"{f} E_{mu}" for f, mu in bad]
    except FamilyCheckError as exc:
        status["idempotents"] = str(exc)
        bad = ["skipped"]
    report = verify_main_theorem(n, jobs=cfg.jobs)
    status["main_theorem"] = report
    ok = status["idempotents"] == "ok" and not bad and report["all_equal"]
    status["ok"] = ok
    if cfg.fmt == "json":
        text = json.dumps(status, indent=2) + "\n"
    elif cfg.fmt == "csv":
        text = _csv(report["pairs"], ["lambda", "mu", "equal", "oracle", "series"])
    else:
        lines = [f"n = {n}", f"idempotent family: {status['idempotents']}", f"orbit annihilation: {status['orbit_annihilation'] if status['idempotents'] == 'ok' else 'skipped'}"]
        for r in report["pairs"]:
            mark = "ok  " if r["equal"] else "FAIL"
            lam = ",".join(map(str, r["lambda"]))
            mu = ",".join(map(str, r["mu"]))
            lines.append(f"{mark} lambda={lam:<10} mu={mu:<10} {r['oracle'] or '0'}")
            if not r["equal"]:
                lines.append(f"     series gives {r['series'] or '0'}")
        lines.append("all checks passed" if ok else "VERIFICATION FAILED")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_cartan(cfg: RunConfig) -> tuple[str, int]:
    from .genfunc import cartan_table

    n = _require_n(cfg)
    rows = [
        r
        for r in cartan_table(n)
        if (cfg.mu is None or tuple(r["mu"]) == cfg.mu) and (cfg.lam is None or tuple(r["lambda"]) == cfg.lam)
    ]
    ok = all(r["agree"] for r in rows)
    if cfg.fmt == "json":
        text = json.dumps({"n": n, "rows": rows, "agree": ok}, indent=2) + "\n"
    elif cfg.fmt == "csv":
        text = _csv(rows, ["mu", "lambda", "series", "count", "agree"])
    else:
        lines = []
        for mu in _selected(cfg, "mu", n):
            cells = {Partition(r["lambda"]): r["series"] for r in rows if tuple(r["mu"]) == mu and r["series"]}
            bad = [r for r in rows if tuple(r["mu"]) == mu and not r["agree"]]
            entry = ", ".join(f"{lam}:{v}" for lam, v in cells.items())
            lines.append(f"mu={mu}: {{{entry}}}" + ("  DISAGREE" if bad else ""))
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


def cmd_lie(cfg: RunConfig) -> tuple[str, int]:
    from .symfunc import higher_lie

    if cfg.lam is None:
        raise UsageError("lie needs --lambda")
    L = higher_lie(cfg.lam)
    if cfg.fmt == "json":
        return json.dumps({"lambda": list(cfg.lam), "value": L.to_json(cfg.basis)}, indent=2) + "\n", EXIT_OK
    if cfg.fmt == "csv":
        data = L.to_json(cfg.basis)["terms"]
        rows = [{"partition": t["partition"], "coefficient": f"{t['numerator']}/{t['denominator']}" if t["denominator"] != 1 else t["numerator"]} for t in data]
        return _csv(rows, ["partition", "coefficient"]), EXIT_OK
    return (L.schur_string() if cfg.basis == "s" else str(L)) + "\n", EXIT_OK


def cmd_lyndon(cfg: RunConfig) -> tuple[str, int]:
    from .lyndon import duval_factorization, format_factorization, lyndon_type, parse_word

    try:
        w = parse_word(cfg.word or "")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    factors = duval_factorization(w)
    t = lyndon_type(w)
    if cfg.fmt == "json":
        return json.dumps({"word": list(w), "factors": [list(f) for f in factors], "type": list(t)}) + "\n", EXIT_OK
    if cfg.fmt == "csv":
        return _csv([{"word": list(w), "factors": format_factorization(factors), "type": list(t)}], ["word", "factors", "type"]), EXIT_OK
    return f"{format_factorization(factors)}  type {','.join(map(str, t))}\n", EXIT_OK


def cmd_sign(cfg: RunConfig) -> tuple[str, int]:
    from .repanalysis import longest_element_type, sign_isotypic_type

    n = _require_n(cfg)
    lam = sign_isotypic_type(n)
    expected = longest_element_type(n)
    ok = lam == expected
    if cfg.fmt == "json":
        text = json.dumps({"n": n, "lambda": list(lam), "longest_element_type": list(expected), "ok": ok}) + "\n"
    elif cfg.fmt == "csv":
        text = _csv([{"n": n, "lambda": list(lam), "longest_element_type": list(expected)}], ["n", "lambda", "longest_element_type"])
    else:
        text = f"n={n}: sign-isotypic part is M_{','.join(map(str, lam))}" + ("" if ok else f" (expected {expected})") + "\n"
    return text, EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "cartan": cmd_cartan,
    "lie": cmd_lie,
    "lyndon": cmd_lyndon,
    "sign": cmd_sign,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(name)s: %(message)s")
    cfg = _config(ns)
    try:
        with _caps(cfg):
            text, code = COMMANDS[cfg.command](cfg)
    except (UsageError, CapExceeded) as exc:
        print(f"facedescent {cfg.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
