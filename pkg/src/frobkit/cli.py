"""Command-line front end.

Subcommands:

    frobkit nsy <build|table|delta|counit|check|sweep> n=2 ell=2 m=1,1
    frobkit whopf <groupoid|group|qtg|FILE> [check|integrals|frobenius] [flags]
    frobkit whopf check FILE
    frobkit verify <FILE|->

Exit codes: 0 all checks pass, 1 a check failed, 2 input error.
"""

from __future__ import annotations

import json
import sys

from . import __version__
from .errors import (
    ConstructionError,
    InputError,
    InternalConsistencyError,
    PreconditionError,
)
from .exactlin import ONE, Vec, scalar_to_str
from .finalg import (
    Classification,
    ComultData,
    CasimirElement,
    check_algebra,
    check_bimodule,
    check_casimir,
    check_coassoc,
    classify_report,
    comult_from_json,
    comult_to_json_str,
    solve_counit_full,
)
from . import nsy as nsy_mod
from .nsy import NSYParams
from .whopf import (
    DEFAULT_INTEGRAL_SEED,
    check_weak_hopf,
    connected_groupoid,
    cyclic_group_table,
    find_nondegenerate_integral,
    frobenius_from_integral,
    groupoid_algebra,
    groupoid_from_json,
    hopf_group_algebra,
    integral_space,
    pair_groupoid,
    qtg_build,
    qtg_frobenius,
    QTGInput,
    separable_group_algebra,
    separable_matrix_algebra,
    trivial_action,
    trivial_hopf,
    weak_hopf_from_json,
    weak_hopf_to_json_str,
)

_VALUE_FLAGS = {
    "--format",
    "--output",
    "--seed",
    "--pair-objects",
    "--cyclic",
    "--objects",
    "--group",
    "--L",
    "--B",
    "--action",
    "--json",
}

_FORMATS = {"json", "markdown", "csv"}


def _split_args(tokens: list[str]) -> tuple[list[str], dict[str, str]]:
    positionals: list[str] = []
    flags: dict[str, str] = {}
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok.startswith("--"):
            if tok not in _VALUE_FLAGS:
                raise InputError(f"unknown flag {tok}")
            if i + 1 >= len(tokens):
                raise InputError(f"flag {tok} needs a value")
            flags[tok] = tokens[i + 1]
            i += 2
        else:
            positionals.append(tok)
            i += 1
    return positionals, flags


def _get_format(flags: dict[str, str], default: str = "markdown") -> str:
    fmt = flags.get("--format", default)
    if fmt not in _FORMATS:
        raise InputError(f"unknown format {fmt!r}; use json, markdown or csv")
    return fmt


def _get_seed(flags: dict[str, str]) -> int:
    raw = flags.get("--seed")
    if raw is None:
        return DEFAULT_INTEGRAL_SEED
    try:
        seed = int(raw)
    except ValueError:
        raise InputError(f"bad seed {raw!r}") from None
    if seed < 0:
        raise InputError("seed must be non-negative")
    return seed


def _emit(text: str, flags: dict[str, str]) -> None:
    out = flags.get("--output")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_vec(v: Vec, labels: list[str]) -> str:
    items = v.items()
    if not items:
        return "0"
    parts = []
    for k, c in items:
        parts.append(labels[k] if c == ONE else f"{scalar_to_str(c)}*{labels[k]}")
    return " + ".join(parts)


def _report_payload(command: str, seed, extra: dict) -> dict:
    payload = {"tool": "frobkit", "version": __version__, "command": command, "seed": seed}
    payload.update(extra)
    return payload


def _dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _checks_csv(report) -> str:
    lines = ["check,passed"]
    for c in report.checks:
        lines.append(f"{c.name},{str(c.passed).lower()}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- nsy


def _parse_nsy_params(tokens: list[str]) -> dict[str, str]:
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise InputError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        params[key] = val
    return params


def _nsy_params_from(params: dict[str, str]) -> NSYParams:
    try:
        n = int(params["n"])
        ell = int(params["ell"])
        mults = tuple(int(x) for x in params["m"].split(","))
    except KeyError as exc:
        raise InputError(f"missing parameter {exc.args[0]}") from None
    except ValueError:
        raise InputError("n, ell must be integers and m a comma list of integers") from None
    return NSYParams(n, ell, mults)


def cmd_nsy(args: list[str]) -> int:
    positionals, flags = _split_args(args)
    if not positionals:
        raise InputError("nsy needs an action: build, table, delta, counit, check, sweep")
    action, rest = positionals[0], positionals[1:]
    params = _parse_nsy_params(rest)
    if action == "sweep":
        return _nsy_sweep(params, flags)
    known = {"n", "ell", "m"}
    extra = set(params) - known
    if extra:
        raise InputError(f"unknown parameters: {', '.join(sorted(extra))}")
    p = _nsy_params_from(params)

    if action == "build":
        algebra = nsy_mod.nsy_build(p)
        comult = nsy_mod.nsy_delta(p, algebra)
        eps = nsy_mod.nsy_epsilon(p)
        payload = comult_to_json_str(ComultData(algebra, comult.delta, eps))
        _emit(payload, flags)
        return 0

    if action == "table":
        fmt = _get_format(flags)
        if fmt == "markdown":
            _emit(nsy_mod.markdown_mult_table(p), flags)
        elif fmt == "csv":
            _emit(nsy_mod.csv_mult_table(p), flags)
        else:
            labels = [nsy_mod.basis_label(b) for b in nsy_mod.basis_indices(p)]
            _emit(
                _dump_json({"labels": labels, "cells": nsy_mod.multiplication_table(p)}),
                flags,
            )
        return 0

    if action == "delta":
        fmt = _get_format(flags)
        if fmt == "markdown":
            _emit(nsy_mod.markdown_delta_table(p), flags)
        elif fmt == "csv":
            _emit(nsy_mod.csv_delta_table(p), flags)
        else:
            terms = {
                nsy_mod.basis_label(idx): [
                    [nsy_mod.basis_label(l), nsy_mod.basis_label(r), "1"]
                    for l, r in nsy_mod.delta_terms(p, idx)
                ]
                for idx in nsy_mod.basis_indices(p)
            }
            _emit(_dump_json({"delta": terms}), flags)
        return 0

    if action == "counit":
        algebra = nsy_mod.nsy_build(p)
        comult = nsy_mod.nsy_delta(p, algebra)
        sol = solve_counit_full(comult)
        fmt = _get_format(flags)
        frob = nsy_mod.is_frobenius(p)
        if fmt == "json":
            payload = _report_payload(
                "nsy counit",
                None,
                {
                    "params": {"n": p.n, "ell": p.ell, "m": list(p.mults)},
                    "counit": None
                    if sol.epsilon is None
                    else [[k, scalar_to_str(v)] for k, v in sol.epsilon.items()],
                    "counit_unique": sol.unique,
                    "frobenius_criterion": frob,
                },
            )
            _emit(_dump_json(payload), flags)
        else:
            lines = []
            if sol.epsilon is None:
                lines.append("counit: none")
                cand = nsy_mod.counit_candidate(p)
                from .finalg import eps_tensor_id, id_tensor_eps

                d = algebra.dim
                left = eps_tensor_id(comult, cand)
                right = id_tensor_eps(comult, cand)
                for j in range(d):
                    ej = Vec.basis(d, j)
                    lcol, rcol = left.col(j), right.col(j)
                    if lcol != ej or rcol != ej:
                        lines.append(
                            f"closed-form candidate fails at {algebra.labels[j]}: "
                            f"(eps(x)id)Delta = {_fmt_vec(lcol, algebra.labels)}, "
                            f"(id(x)eps)Delta = {_fmt_vec(rcol, algebra.labels)}"
                        )
                        break
            else:
                lines.append(f"counit: {_fmt_vec(sol.epsilon, algebra.labels)}")
                if not sol.unique:
                    lines.append("warning: counit is not unique for this delta")
            _emit("\n".join(lines) + "\n", flags)
        return 0

    if action == "check":
        algebra = nsy_mod.nsy_build(p)
        comult = nsy_mod.nsy_delta(p, algebra)
        outcome = classify_report(comult)
        d = algebra.dim
        cas = CasimirElement(algebra, comult.delta.matvec(algebra.unit))
        report = outcome.report.merged(check_casimir(cas))
        fmt = _get_format(flags)
        if fmt == "json":
            payload = _report_payload(
                "nsy check",
                None,
                {
                    "params": {"n": p.n, "ell": p.ell, "m": list(p.mults)},
                    "dim": d,
                    "classification": outcome.classification.value,
                    "checks": report.to_json(),
                },
            )
            _emit(_dump_json(payload), flags)
        elif fmt == "csv":
            _emit(_checks_csv(report), flags)
        else:
            lines = report.lines()
            lines.append(f"classification: {outcome.classification.value}")
            _emit("\n".join(lines) + "\n", flags)
        return 0 if report.passed else 1

    raise InputError(f"unknown nsy action {action!r}")


def _nsy_sweep(params: dict[str, str], flags: dict[str, str]) -> int:
    try:
        nmax = int(params.get("nmax", "3"))
        lmax = int(params.get("lmax", "3"))
        mmax = int(params.get("mmax", "2"))
    except ValueError:
        raise InputError("sweep bounds must be integers") from None
    extra = set(params) - {"nmax", "lmax", "mmax"}
    if extra:
        raise InputError(f"unknown parameters: {', '.join(sorted(extra))}")
    items = []
    counts = {
        Classification.FROBENIUS.value: 0,
        Classification.NON_COUNITAL_ONLY.value: 0,
    }
    for p in nsy_mod.sweep_params(nmax, lmax, mmax):
        comult = nsy_mod.nsy_delta(p)
        outcome = classify_report(comult)
        cls = outcome.classification.value
        counts[cls] = counts.get(cls, 0) + 1
        items.append(
            {
                "n": p.n,
                "ell": p.ell,
                "m": list(p.mults),
                "dim": nsy_mod.nsy_dimension(p),
                "classification": cls,
            }
        )
    fmt = _get_format(flags)
    if fmt == "json":
        payload = _report_payload(
            "nsy sweep",
            None,
            {
                "grid": {"nmax": nmax, "lmax": lmax, "mmax": mmax},
                "items": items,
                "counts": counts,
            },
        )
        _emit(_dump_json(payload), flags)
    elif fmt == "csv":
        lines = ["n,ell,m,dim,classification"]
        for it in items:
            m = ";".join(str(x) for x in it["m"])
            lines.append(f"{it['n']},{it['ell']},{m},{it['dim']},{it['classification']}")
        _emit("\n".join(lines) + "\n", flags)
    else:
        lines = ["| n | ell | m | dim | classification |", "| --- | --- | --- | --- | --- |"]
        for it in items:
            m = ",".join(str(x) for x in it["m"])
            lines.append(
                f"| {it['n']} | {it['ell']} | {m} | {it['dim']} | {it['classification']} |"
            )
        lines.append("")
        lines.append(
            f"counts: Frobenius={counts[Classification.FROBENIUS.value]} "
            f"NonCounitalOnly={counts[Classification.NON_COUNITAL_ONLY.value]}"
        )
        _emit("\n".join(lines) + "\n", flags)
    return 0


# ---------------------------------------------------------------- whopf


def _parse_source_token(raw: str, kinds: tuple[str, ...]) -> tuple[str, int | None]:
    if ":" in raw:
        kind, _, arg = raw.partition(":")
        try:
            num = int(arg)
        except ValueError:
            raise InputError(f"bad argument in {raw!r}") from None
    else:
        kind, num = raw, None
    if kind not in kinds:
        raise InputError(f"expected one of {', '.join(kinds)}, got {raw!r}")
    return kind, num


def _build_whopf_source(source: str, flags: dict[str, str]):
    """Returns (WeakHopfData, qtg_input_or_None, description)."""
    if source == "groupoid":
        if "--json" in flags:
            g = groupoid_from_json(_load_json(flags["--json"]))
            return groupoid_algebra(g), None, "groupoid from JSON"
        if "--pair-objects" in flags:
            k = _int_flag(flags, "--pair-objects")
            return groupoid_algebra(pair_groupoid(k)), None, f"pair groupoid on {k} objects"
        if "--cyclic" in flags:
            k = _int_flag(flags, "--cyclic")
            return (
                groupoid_algebra(connected_groupoid(1, cyclic_group_table(k))),
                None,
                f"one-object groupoid on Z/{k}",
            )
        if "--objects" in flags:
            k = _int_flag(flags, "--objects")
            grp = flags.get("--group", "cyclic:1")
            kind, num = _parse_source_token(grp, ("cyclic",))
            return (
                groupoid_algebra(connected_groupoid(k, cyclic_group_table(num or 1))),
                None,
                f"connected groupoid on {k} objects with Z/{num or 1}",
            )
        raise InputError(
            "groupoid needs --pair-objects N, --cyclic N, --objects N [--group cyclic:K], or --json FILE"
        )
    if source == "group":
        if "--cyclic" not in flags:
            raise InputError("group needs --cyclic N")
        k = _int_flag(flags, "--cyclic")
        return hopf_group_algebra(cyclic_group_table(k)), None, f"group algebra k(Z/{k})"
    if source == "qtg":
        l_raw = flags.get("--L", "trivial")
        b_raw = flags.get("--B")
        if b_raw is None:
            raise InputError("qtg needs --B matrix:D or --B cyclic:N")
        lkind, lnum = _parse_source_token(l_raw, ("trivial", "cyclic"))
        if lkind == "trivial":
            L = trivial_hopf()
        else:
            L = hopf_group_algebra(cyclic_group_table(lnum or 1))
        bkind, bnum = _parse_source_token(b_raw, ("matrix", "cyclic"))
        if bnum is None:
            raise InputError(f"--B {b_raw!r} needs a size, e.g. matrix:2")
        if bkind == "matrix":
            B, e, omega = separable_matrix_algebra(bnum)
        else:
            B, e, omega = separable_group_algebra(cyclic_group_table(bnum))
        action_kind = flags.get("--action", "trivial")
        if action_kind != "trivial":
            raise InputError("only --action trivial is available from the CLI")
        q = QTGInput(L, B, e, omega, trivial_action(B, L))
        return qtg_build(q), q, f"quantum transformation groupoid ({l_raw}, {b_raw})"
    # otherwise: a file with WeakHopfData JSON
    return weak_hopf_from_json(_load_json(source)), None, f"data from {source}"


def _int_flag(flags: dict[str, str], name: str) -> int:
    try:
        return int(flags[name])
    except ValueError:
        raise InputError(f"{name} must be an integer") from None


def _load_json(path: str) -> dict:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"JSON parse error in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None


def cmd_whopf(args: list[str]) -> int:
    positionals, flags = _split_args(args)
    if not positionals:
        raise InputError("whopf needs a source (groupoid, group, qtg, or a JSON file)")
    ops = {"check", "integrals", "frobenius"}
    first = positionals[0]
    if first in {"groupoid", "group", "qtg"}:
        source, rest = first, positionals[1:]
        op = rest[0] if rest else "check"
        if len(rest) > 1:
            raise InputError(f"unexpected arguments: {' '.join(rest[1:])}")
    elif first in ops:
        op = first
        if len(positionals) < 2:
            raise InputError(f"whopf {first} needs an input file")
        source = positionals[1]
        if len(positionals) > 2:
            raise InputError(f"unexpected arguments: {' '.join(positionals[2:])}")
    else:
        source = first
        op = positionals[1] if len(positionals) > 1 else "check"
        if len(positionals) > 2:
            raise InputError(f"unexpected arguments: {' '.join(positionals[2:])}")
    if op not in ops:
        raise InputError(f"unknown whopf operation {op!r}")

    seed = _get_seed(flags)
    h, qtg_input, desc = _build_whopf_source(source, flags)
    fmt = _get_format(flags)
    labels = h.algebra.labels

    if op == "check":
        report = check_weak_hopf(h)
        if "--output" in flags:
            _emit(weak_hopf_to_json_str(h), flags)
        elif fmt == "json":
            payload = _report_payload(
                "whopf check",
                seed,
                {"source": desc, "dim": h.dim, "checks": report.to_json()},
            )
            sys.stdout.write(_dump_json(payload))
        elif fmt == "csv":
            sys.stdout.write(_checks_csv(report))
        else:
            sys.stdout.write("\n".join(report.lines()) + "\n")
        return 0 if report.passed else 1

    if op == "integrals":
        left = integral_space(h, "left")
        right = integral_space(h, "right")
        if fmt == "json":
            payload = _report_payload(
                "whopf integrals",
                seed,
                {
                    "source": desc,
                    "left": [[[k, scalar_to_str(v)] for k, v in b.items()] for b in left.basis],
                    "right": [[[k, scalar_to_str(v)] for k, v in b.items()] for b in right.basis],
                },
            )
            _emit(_dump_json(payload), flags)
        else:
            lines = [f"I^L dimension {len(left.basis)}:"]
            lines += [f"  {_fmt_vec(b, labels)}" for b in left.basis]
            lines.append(f"I^R dimension {len(right.basis)}:")
            lines += [f"  {_fmt_vec(b, labels)}" for b in right.basis]
            _emit("\n".join(lines) + "\n", flags)
        return 0

    # op == "frobenius"
    if qtg_input is not None:
        comult = qtg_frobenius(qtg_input, h)
        report = check_coassoc(comult).merged(check_bimodule(comult))
        found = True
        eps = comult.counit
        note = "closed-form comultiplication verified against the integral construction"
    else:
        pair = find_nondegenerate_integral(h, seed=seed)
        if pair is None:
            msg = (
                "no non-degenerate left integral found "
                "(probabilistically non-Frobenius, not a proof)"
            )
            if fmt == "json":
                payload = _report_payload(
                    "whopf frobenius", seed, {"source": desc, "found": False, "note": msg}
                )
                _emit(_dump_json(payload), flags)
            else:
                _emit(msg + "\n", flags)
            return 0
        lam, lam_dual = pair
        comult = frobenius_from_integral(h, lam)
        report = check_coassoc(comult).merged(check_bimodule(comult))
        found = True
        eps = comult.counit
        note = None
    classification = (
        Classification.FROBENIUS.value
        if eps is not None and report.passed
        else (
            Classification.NON_COUNITAL_ONLY.value
            if report.passed
            else Classification.NOT_FROBENIUS_STRUCTURE.value
        )
    )
    if fmt == "json":
        payload = _report_payload(
            "whopf frobenius",
            seed,
            {
                "source": desc,
                "found": found,
                "classification": classification,
                "counit": None
                if eps is None
                else [[k, scalar_to_str(v)] for k, v in eps.items()],
                "checks": report.to_json(),
                "note": note,
            },
        )
        _emit(_dump_json(payload), flags)
    elif fmt == "csv":
        _emit(_checks_csv(report), flags)
    else:
        lines = report.lines()
        lines.append(f"classification: {classification}")
        if eps is not None:
            lines.append(f"counit: {_fmt_vec(eps, labels)}")
        if note:
            lines.append(note)
        lines.append(f"frobkit {__version__}, seed {seed}")
        _emit("\n".join(lines) + "\n", flags)
    return 0 if report.passed else 1


# ---------------------------------------------------------------- verify


def cmd_verify(args: list[str]) -> int:
    positionals, flags = _split_args(args)
    if len(positionals) != 1:
        raise InputError("verify needs exactly one input file (or - for stdin)")
    payload = _load_json(positionals[0])
    comult = comult_from_json(payload)
    outcome = classify_report(comult)
    fmt = _get_format(flags)
    if fmt == "json":
        out = _report_payload(
            "verify",
            None,
            {
                "classification": outcome.classification.value,
                "checks": outcome.report.to_json(),
                "counit": None
                if outcome.counit is None
                else [[k, scalar_to_str(v)] for k, v in outcome.counit.items()],
                "counit_unique": outcome.counit_unique,
            },
        )
        _emit(_dump_json(out), flags)
    elif fmt == "csv":
        _emit(_checks_csv(outcome.report), flags)
    else:
        lines = outcome.report.lines()
        lines.append(f"classification: {outcome.classification.value}")
        if outcome.counit is not None:
            lines.append(
                f"counit: {_fmt_vec(outcome.counit, comult.algebra.labels)}"
            )
            if not outcome.counit_unique:
                lines.append("warning: counit is not unique for this delta")
        _emit("\n".join(lines) + "\n", flags)
    return 0 if outcome.report.passed else 1


# ---------------------------------------------------------------- entry


_USAGE = """frobkit {version}
usage:
  frobkit nsy <build|table|delta|counit|check|sweep> [n=N ell=L m=M0,M1,...]
              [nmax=N lmax=L mmax=M] [--format json|markdown|csv] [--output PATH]
  frobkit whopf <groupoid|group|qtg|FILE> [check|integrals|frobenius]
              [--pair-objects N] [--cyclic N] [--objects N] [--group cyclic:K]
              [--L trivial|cyclic:N] [--B matrix:D|cyclic:N] [--action trivial]
              [--json FILE] [--seed N] [--format ...] [--output PATH]
  frobkit whopf check FILE
  frobkit verify <FILE|->  [--format ...]
"""


def main(argv: list[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    if not args or args[0] in ("-h", "--help", "help"):
        sys.stdout.write(_USAGE.format(version=__version__))
        return 0 if args else 2
    cmd, rest = args[0], args[1:]
    try:
        if cmd == "nsy":
            return cmd_nsy(rest)
        if cmd == "whopf":
            return cmd_whopf(rest)
        if cmd == "verify":
            return cmd_verify(rest)
        raise InputError(f"unknown subcommand {cmd!r}")
    except (InputError, ConstructionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (PreconditionError, InternalConsistencyError) as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
