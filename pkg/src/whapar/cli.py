"""Command line front end.

Exit codes: 0 pass (or skipped with a reason), 1 a check failed, 2 input
error, 3 the ``H_par`` construction did not stabilize.
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from .errors import InconsistencyError, InputError, NotStabilizedError, PreconditionError
from .report import Report, _jsonable

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSTABLE = 0, 1, 2, 3


class Run:
    """Accumulates the reports and results of one command."""

    def __init__(self, command, args):
        self.command = command
        self.args = args
        self.reports = []
        self.results = {}
        self.lines = []
        self.input = {}
        self.skipped = None
        self.status = None
        self.certification = None

    def add(self, rep):
        self.reports.append(rep)
        self.lines.append(rep.summary())
        for f in rep.failures[:5]:
            self.lines.append("  witness %s at %s" % (f.axiom, list(_jsonable(f.witness))))
        return rep

    def say(self, line):
        self.lines.append(line)

    @property
    def ok(self):
        return all(r.ok for r in self.reports)

    def to_dict(self, code, seconds):
        return {
            "tool": "whapar", "version": __version__, "command": self.command,
            "input": self.input, "seed": self.args.seed, "max_degree": self.args.max_degree,
            "exhaustive": self.args.exhaustive, "threads": threads(),
            "status": self.status, "exit_code": code, "skipped": self.skipped,
            "certification": self.certification, "results": _jsonable(self.results),
            "reports": [r.to_dict() for r in self.reports],
            "timing": {"seconds": round(seconds, 3)},
        }


def threads():
    """Parallelism cap from ``WHAPAR_THREADS`` (checks currently run serially)."""
    raw = os.environ.get("WHAPAR_THREADS", "")
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError("WHAPAR_THREADS must be a positive integer, got %r" % raw) from None
    if n < 1:
        raise InputError("WHAPAR_THREADS must be a positive integer, got %r" % raw)
    return n


def _load(run, path, kinds):
    from .io import load

    loaded = load(path)
    if loaded.kind not in kinds:
        raise InputError("%s: a %s file cannot be used here (expected %s)"
                         % (path, loaded.kind, " or ".join(kinds)))
    run.input = {"file": loaded.path.name, "kind": loaded.kind, "sha256": loaded.digest}
    return loaded


def _build(run, h):
    from .hpar import build_hpar

    hp = build_hpar(h, max_degree=run.args.max_degree)
    run.certification = hp.certification
    run.results["hpar"] = {"dim": hp.dim, "trajectory": hp.trajectory, "certification": hp.certification,
                           "route": hp.info.get("route"), "rules": hp.info.get("rules")}
    return hp


def cmd_check(run):
    from .wha import check_weak_hopf, lemma21_suite, counital_subalgebra_suite

    h = _load(run, run.args.path, ("algebra", "groupoid")).hopf
    run.results["name"] = h.name
    run.results["dim"] = h.dim
    wh = run.add(check_weak_hopf(h, exhaustive=True))
    if wh.ok:
        run.add(lemma21_suite(h))
        run.add(counital_subalgebra_suite(h))
    else:
        run.say("identity suites not run: the weak Hopf axioms fail")


def cmd_hpar(run):
    from .hpar import bracket_rep_check, birget_rhodes_oracle, e_calculus, propee_suite, smash_iso_check

    loaded = _load(run, run.args.path, ("algebra", "groupoid"))
    hp = _build(run, loaded.hopf)
    run.add(bracket_rep_check(hp))
    ee = e_calculus(hp)
    run.results["apar_dim"] = ee.apar.dim
    run.add(propee_suite(hp, ee))
    run.add(smash_iso_check(hp, ee))
    line = "dim=%d" % hp.dim
    if run.args.oracle:
        if loaded.groupoid is None:
            run.say("oracle skipped: input is not a groupoid")
            run.results["oracle"] = None
        else:
            rep = run.add(birget_rhodes_oracle(loaded.groupoid, hp, ee))
            run.results["oracle"] = rep.info["oracle"]
            line += ", oracle=%d" % rep.info["oracle"]
    line += ", " + ("certified" if hp.certified else hp.certification)
    run.say("trajectory " + " ".join(str(d) for d in hp.trajectory))
    run.say(line)
    if run.args.export:
        from .io import dump_hpar

        with open(run.args.export, "w", encoding="utf-8") as fh:
            json.dump(dump_hpar(hp), fh, indent=1, sort_keys=True)
            fh.write("\n")


def cmd_algebroid(run):
    from .algebroid import build_algebroid, check_hopf_algebroid

    h = _load(run, run.args.path, ("algebra", "groupoid")).hopf
    if not h.has_invertible_antipode:
        run.skipped = "antipode is not invertible"
        return
    hp = _build(run, h)
    had = build_algebroid(hp, convention=run.args.convention)
    run.add(had.report)
    run.add(check_hopf_algebroid(had))
    run.results["algebroid"] = had.info


def cmd_qisg(run):
    from .qisg import build_qisg, check_qisg, delta_partial_rep
    from .wha import is_cocommutative

    h = _load(run, run.args.path, ("algebra", "groupoid")).hopf
    if not is_cocommutative(h):
        run.skipped = "not cocommutative"
        return
    hp = _build(run, h)
    q = build_qisg(hp)
    run.add(q.report)
    run.add(check_qisg(q))
    _, rep = delta_partial_rep(q)
    run.add(rep)
    run.results["unit_preserving"] = q.info["unit_preserving"]


def _hpar_or_presentation(run, h):
    """Finite ``H_par`` when it stabilizes, else a complete presentation."""
    from .hpar import hpar_presentation

    try:
        return _build(run, h)
    except NotStabilizedError as exc:
        if not exc.complete:
            raise
        run.say("H_par is infinite-dimensional; using its complete rewriting presentation")
        run.results["hpar"] = {"finite": False, "trajectory": exc.trajectory}
        return hpar_presentation(h, max_degree=run.args.max_degree)


def cmd_smash(run):
    from .hpar import algebra_object_roundtrip
    from .partial import (CovariantPair, check_covariant_pair, check_partial_action, check_partial_module,
                          check_partial_rep, covariant_factorization, module_from_action, phi0, pi0,
                          smash_factor_suite, smash_product)

    pa = _load(run, run.args.path, ("action",)).obj
    rep = run.add(check_partial_action(pa))
    run.results["symmetric"] = pa.symmetric
    if not rep.ok or not pa.symmetric:
        run.say("smash product not built: the action is not a symmetric partial action")
        return
    run.add(check_partial_module(module_from_action(pa)))
    sp = smash_product(pa)
    run.results["smash_dim"] = sp.dim
    run.results["partial_smash_dim"] = sp.partial.dim
    run.add(smash_factor_suite(sp))
    p0 = pi0(sp)
    run.add(check_partial_rep(p0))
    cp = CovariantPair(pa, phi0(sp), p0, name="(phi0,pi0)")
    run.add(check_covariant_pair(cp))
    _, frep = covariant_factorization(cp, sp)
    run.add(frep)
    hp = _hpar_or_presentation(run, pa.h)
    run.add(algebra_object_roundtrip(hp, pa))
    run.say("smash dim=%d, partial smash dim=%d" % (sp.dim, sp.partial.dim))


def cmd_parrep(run):
    from .hpar import universal_factorization
    from .partial import (check_partial_rep, globality_criterion, hs_ht_suite, search_pr6_counterexample,
                          six_equiv_suite)

    pr = _load(run, run.args.path, ("parrep",)).obj
    rep = run.add(check_partial_rep(pr))
    run.add(six_equiv_suite(pr))
    if rep.ok:
        g = globality_criterion(pr)
        run.add(g)
        run.results["global"] = g.info.get("global")
        run.add(hs_ht_suite(pr))
        hp = _hpar_or_presentation(run, pr.h)
        _, frep = universal_factorization(hp, pr)
        run.add(frep)
    if run.args.exhaustive:
        s = search_pr6_counterexample(pr.h, seed=run.args.seed, exhaustive_limit=8)
        run.add(s)
        run.results["pr6_search"] = s.info


COMMANDS = {
    "check": (cmd_check, "weak Hopf axioms and the counital identities"),
    "hpar": (cmd_hpar, "build H_par and run its suites"),
    "algebroid": (cmd_algebroid, "Hopf algebroid structure of H_par"),
    "qisg": (cmd_qisg, "quantum inverse semigroup structure of H_par"),
    "smash": (cmd_smash, "partial action file: smash products, covariant pairs, round trip"),
    "parrep": (cmd_parrep, "partial representation file: axioms, equivalences, factorization"),
}


def build_parser():
    p = argparse.ArgumentParser(prog="whapar", description="Exact checks for weak Hopf algebras and "
                                "their partial representations.")
    p.add_argument("--version", action="version", version="whapar " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("path", help="input JSON file (falls back to the bundled fixtures by file name)")
    common.add_argument("--json", action="store_true", help="print the machine-readable report")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    common.add_argument("--max-degree", type=int, default=6, help="word-length bound for H_par")
    common.add_argument("--exhaustive", action="store_true", help="run the costly searches as well")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if name == "hpar":
            sp.add_argument("--oracle", action="store_true", help="compare with the Birget-Rhodes count")
            sp.add_argument("--export", metavar="FILE", help="write carrier constants and bracket matrix")
        if name == "algebroid":
            sp.add_argument("--convention", choices=("bohm", "literal"), default="bohm",
                            help="right bimodule convention")
    return p


def run_command(argv):
    """Execute a command; returns ``(exit_code, Run)``."""
    args = build_parser().parse_args(argv)
    if args.seed < 0 or args.seed >= 2 ** 64:
        raise SystemExit("whapar: --seed must be an unsigned 64-bit integer")
    run = Run(args.command, args)
    t0 = time.perf_counter()
    try:
        threads()
        if args.max_degree < 1:
            raise InputError("--max-degree must be positive")
        COMMANDS[args.command][0](run)
        if run.skipped:
            code, run.status = EXIT_OK, "skipped"
        else:
            code = EXIT_OK if run.ok else EXIT_FAIL
            run.status = "pass" if run.ok else "fail"
    except InputError as exc:
        code, run.status = EXIT_INPUT, "input-error"
        run.results["error"] = str(exc)
        run.say("input error: %s" % exc)
    except NotStabilizedError as exc:
        code, run.status = EXIT_UNSTABLE, "not-stabilized"
        run.results["error"] = str(exc)
        run.results["trajectory"] = exc.trajectory
        run.results["complete"] = exc.complete
        run.say("not stabilized: %s" % exc)
        run.say("trajectory " + " ".join(str(d) for d in exc.trajectory))
    except (InconsistencyError, PreconditionError) as exc:
        code, run.status = EXIT_FAIL, "fail"
        run.results["error"] = "%s: %s" % (type(exc).__name__, exc)
        run.say("error: %s" % exc)
    run.seconds = time.perf_counter() - t0
    run.code = code
    return code, run


def render(run, as_json):
    if as_json:
        return json.dumps(run.to_dict(run.code, run.seconds), indent=1, sort_keys=True)
    lines = list(run.lines)
    if run.skipped:
        lines.append("skipped: %s" % run.skipped)
    label = run.input.get("file", run.args.path)
    lines.append("%s %s: %s" % (run.command, label, run.status))
    return "\n".join(lines)


def main(argv=None):
    code, run = run_command(sys.argv[1:] if argv is None else argv)
    print(render(run, run.args.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
