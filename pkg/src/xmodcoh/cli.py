"""The ``cmx`` instance format and command-line interface.

File grammar (line oriented, ``#`` starts a comment, tokens separated by
whitespace, sections in exactly this order)::

    cmx 1
    [gamma]
    order N
    table
    <N rows of N indices>
    [group F]         (same shape as [gamma])
    [group G]
    [boundary]
    <one row of |F| indices into G>
    [action G F]
    <|G| rows, each a permutation of 0..|F|-1>
    [action gamma F]
    <|Γ| rows>
    [action gamma G]
    <|Γ| rows>
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import budget as budget_mod
from .errors import BudgetExceeded, NotAGroup, NotAnAction, NotQuasiAbelian
from .grp import GammaGroup, GroupHom, build_group
from .xmod import CrossedModule, is_quasi_abelian, validate

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3


class ParseError(ValueError):
    def __init__(self, line, column, expectation):
        self.line, self.column, self.expectation = line, column, expectation
        super().__init__(f"line {line}, column {column}: expected {expectation}")


class ValidationError(ValueError):
    def __init__(self, message, violations=()):
        self.violations = list(violations)
        super().__init__(message)


@dataclass
class CmxDocument:
    version: int
    gamma: tuple
    F: tuple
    G: tuple
    boundary: tuple
    action_G_F: tuple
    action_gamma_F: tuple
    action_gamma_G: tuple

    def to_crossed_module(self, name=""):
        """Build and validate the crossed module; raises ValidationError."""
        try:
            Gam = build_group(len(self.gamma), self.gamma, "Γ")
            F = build_group(len(self.F), self.F, "F")
            G = build_group(len(self.G), self.G, "G")
        except NotAGroup as exc:
            raise ValidationError(str(exc)) from None
        FF = GammaGroup(Gam, F, self.action_gamma_F)
        GG = GammaGroup(Gam, G, self.action_gamma_G)
        cm = CrossedModule(FF, GG, GroupHom(F, G, self.boundary), self.action_G_F, name)
        rep = validate(cm)
        if not rep.ok:
            raise ValidationError("not a crossed module", rep.violations)
        return cm


class _Lines:
    def __init__(self, text):
        self.items = []
        for no, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0]
            toks = []
            col = 0
            for part in body.split():
                col = body.index(part, col)
                toks.append((part, col + 1))
                col += len(part)
            if toks:
                self.items.append((no, toks))
        self.pos = 0
        self.last_line = len(text.splitlines()) + 1

    def next(self, expectation):
        if self.pos >= len(self.items):
            raise ParseError(self.last_line, 1, expectation)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def keyword(self, words):
        no, toks = self.next(" ".join(words))
        for i, w in enumerate(words):
            if i >= len(toks) or toks[i][0] != w:
                col = toks[i][1] if i < len(toks) else toks[-1][1] + len(toks[-1][0])
                raise ParseError(no, col, repr(" ".join(words)))
        if len(toks) > len(words):
            raise ParseError(no, toks[len(words)][1], "end of line")
        return no

    def ints(self, count, bound, what):
        no, toks = self.next(what)
        if len(toks) != count:
            col = toks[count][1] if len(toks) > count else toks[-1][1] + len(toks[-1][0])
            raise ParseError(no, col, f"{count} indices in {what}")
        out = []
        for tok, col in toks:
            if not tok.isdigit() or int(tok) >= bound:
                raise ParseError(no, col, f"an index in 0..{bound - 1} in {what}")
            out.append(int(tok))
        return tuple(out)


def _parse_table(lines, header):
    lines.keyword(header)
    no, toks = lines.next("order N")
    if len(toks) != 2 or toks[0][0] != "order" or not toks[1][0].isdigit() or int(toks[1][0]) < 1:
        raise ParseError(no, toks[-1][1], "'order N' with N >= 1")
    n = int(toks[1][0])
    lines.keyword(["table"])
    return tuple(lines.ints(n, n, f"row {r} of {' '.join(header)} table") for r in range(n))


def _perm_rows(lines, count, size, what):
    rows = []
    for r in range(count):
        before = lines.pos
        row = lines.ints(size, size, f"row {r} of {what}")
        if sorted(row) != list(range(size)):
            no = lines.items[before][0]
            raise ParseError(no, 1, f"a permutation of 0..{size - 1} in {what}")
        rows.append(row)
    return tuple(rows)


def parse(text):
    """Parse a cmx document; raises ParseError with a 1-based position."""
    lines = _Lines(text)
    no, toks = lines.next("'cmx 1'")
    if len(toks) != 2 or toks[0][0] != "cmx":
        raise ParseError(no, 1, "'cmx 1'")
    if toks[1][0] != "1":
        raise ParseError(no, toks[1][1], "format version 1")
    gamma = _parse_table(lines, ["[gamma]"])
    F = _parse_table(lines, ["[group", "F]"])
    G = _parse_table(lines, ["[group", "G]"])
    lines.keyword(["[boundary]"])
    boundary = lines.ints(len(F), len(G), "boundary")
    lines.keyword(["[action", "G", "F]"])
    aGF = _perm_rows(lines, len(G), len(F), "action G F")
    lines.keyword(["[action", "gamma", "F]"])
    aF = _perm_rows(lines, len(gamma), len(F), "action gamma F")
    lines.keyword(["[action", "gamma", "G]"])
    aG = _perm_rows(lines, len(gamma), len(G), "action gamma G")
    if lines.pos < len(lines.items):
        no, toks = lines.items[lines.pos]
        raise ParseError(no, toks[0][1], "end of document")
    return CmxDocument(1, gamma, F, G, boundary, aGF, aF, aG)


def emit(doc):
    """Canonical text of a document; ``parse(emit(d))`` reproduces every table."""
    out = ["cmx 1"]

    def rows(rs):
        out.extend(" ".join(map(str, r)) for r in rs)

    for header, tab in (("[gamma]", doc.gamma), ("[group F]", doc.F), ("[group G]", doc.G)):
        out += [header, f"order {len(tab)}", "table"]
        rows(tab)
    out.append("[boundary]")
    rows([doc.boundary])
    out.append("[action G F]")
    rows(doc.action_G_F)
    out.append("[action gamma F]")
    rows(doc.action_gamma_F)
    out.append("[action gamma G]")
    rows(doc.action_gamma_G)
    return "\n".join(out) + "\n"


def document_from_xmod(cm):
    return CmxDocument(
        1,
        cm.gamma.table,
        cm.F.group.table,
        cm.G.group.table,
        tuple(cm.boundary.map),
        tuple(cm.gact),
        tuple(cm.F.act),
        tuple(cm.G.act),
    )


# -- reports -----------------------------------------------------------------


class Report:
    """Collects records and renders them as tsv or aligned text."""

    def __init__(self):
        self.records = []

    def add(self, key, *values):
        self.records.append((key,) + tuple(_fmt(v) for v in values))

    def render(self, fmt):
        if fmt == "tsv":
            return "".join("\t".join(r) + "\n" for r in self.records)
        return "".join(f"{r[0]:<22}" + "  ".join(r[1:]) + "\n" for r in self.records)


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (tuple, list)):
        return " ".join(map(str, v))
    return str(v)


def _load(path):
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse(text).to_crossed_module(path)


def cmd_validate(args, rep):
    with open(args.file, encoding="utf-8") as fh:
        doc = parse(fh.read())
    try:
        cm = doc.to_crossed_module(args.file)
    except ValidationError as exc:
        rep.add("VALID", False)
        if not exc.violations:
            rep.add("VIOLATION", "GROUP_AXIOMS", str(exc))
        for v in exc.violations:
            rep.add("VIOLATION", v.identity, v.witness)
        return EXIT_INVALID
    qa = is_quasi_abelian(cm)
    rep.add("VALID", True)
    rep.add("QUASI_ABELIAN", qa.holds, *qa.as_tuple())
    rep.add("INJECTIVE", cm.is_injective)
    rep.add("SURJECTIVE", cm.is_surjective)
    return EXIT_OK


def _set_for(cm, obj, degree):
    from .abcoh import hypercohomology
    from .nacoh import h0, h1, h2_lien, xmod_h
    from .xmod import center_complex

    if obj in ("F", "G"):
        GG = cm.F if obj == "F" else cm.G
        if degree == 0:
            return f"H0_{obj}", h0(GG)
        if degree == 1:
            return f"H1_{obj}", h1(GG)
        raise ValueError(f"object {obj} supports degrees 0 and 1")
    if obj == "ab":
        if not -1 <= degree <= 3:
            raise ValueError("object ab supports degrees -1..3")
        return f"H{degree}_ab", hypercohomology(center_complex(cm), degree)
    if obj == "cm":
        if not -1 <= degree <= 1:
            raise ValueError("object cm supports degrees -1..1")
        return ("H-1" if degree == -1 else f"H{degree}_cm"), xmod_h(cm, degree)
    if obj in ("lienF", "lienG"):
        if degree != 2:
            raise ValueError(f"object {obj} supports degree 2 only")
        return f"H2_{obj[-1]}", h2_lien(cm.F if obj == "lienF" else cm.G)
    raise ValueError(f"unknown object {obj}")


def cmd_cohomology(args, rep):
    cm = _load(args.file)
    name, S = _set_for(cm, args.object, args.degree)
    rep.add("CARD", name, len(S))
    for i, r in enumerate(S.reps):
        rep.add("CLASS", i, r)
    if S.neutral is not None:
        rep.add("NEUTRAL", sorted(S.neutral))
    return EXIT_OK


def cmd_theorem42(args, rep):
    from .abmap import set_cardinalities, theorem42

    cm = _load(args.file)
    qa = is_quasi_abelian(cm)
    rep.add("QUASI_ABELIAN", qa.holds, *qa.as_tuple())
    if not qa:
        return EXIT_FAIL
    result = theorem42(cm)
    for name, n in set_cardinalities(cm).items():
        rep.add("CARD", name, n)
    ok = True
    for j in result.joints:
        if j.name == "H1_ab":
            rep.add("AB1_IMAGE_CRITERION", j.ok)
        else:
            rep.add("EXACT_AT", j.name, j.ok)
        ok &= j.ok
    for j in result.extras:
        rep.add("CHECK", j.name, j.ok)
        ok &= j.ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_twistcheck(args, rep):
    from .twist import twist_suite

    cm = _load(args.file)
    if not is_quasi_abelian(cm):
        rep.add("QUASI_ABELIAN", False)
        return EXIT_FAIL
    rep.add("THETA_CONVENTION", "q*c^-1")
    verdicts = twist_suite(cm)
    for k, v in verdicts.items():
        rep.add("CHECK", k, v)
    return EXIT_OK if all(verdicts.values()) else EXIT_FAIL


def _instance_record(rep, inst):
    cm = inst.cm
    rep.add(
        "INSTANCE", inst.name, inst.quasi_abelian, inst.injective, inst.surjective,
        cm.gamma.order, cm.F.group.order, cm.G.group.order,
    )


def cmd_catalog(args, rep):
    from .catalog import builtin, by_name

    if args.action == "list":
        for inst in builtin():
            _instance_record(rep, inst)
        return EXIT_OK
    inst = by_name(args.name)
    rep.records.append(("__raw__", emit(document_from_xmod(inst.cm))))
    return EXIT_OK


def cmd_discover(args, rep):
    from .catalog import discover

    found = discover(args.max_f, args.max_g, args.max_gamma)
    rep.add("COUNT", len(found))
    for inst in found:
        _instance_record(rep, inst)
    return EXIT_OK


def build_parser():
    def global_flags(parser, default):
        # SUPPRESS on subcommands keeps a flag given before the subcommand
        parser.add_argument("--format", choices=["text", "tsv"], default="text" if default else argparse.SUPPRESS)
        parser.add_argument(
            "--budget",
            type=int,
            default=None if default else argparse.SUPPRESS,
            help="enumeration ceiling (default: CMX_BUDGET or 10^8)",
        )

    common = argparse.ArgumentParser(add_help=False)
    global_flags(common, False)

    p = argparse.ArgumentParser(prog="cmx", description="Cohomology of finite crossed modules.")
    global_flags(p, True)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the crossed-module axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("cohomology", parents=[common], help="compute one cohomology set")
    s.add_argument("file")
    s.add_argument("--object", required=True, choices=["F", "G", "ab", "cm", "lienF", "lienG"])
    s.add_argument("--degree", required=True, type=int)
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("theorem42", parents=[common], help="verify the main exact sequence")
    s.add_argument("file")
    s.set_defaults(func=cmd_theorem42)

    s = sub.add_parser("twistcheck", parents=[common], help="run the twisting verdicts")
    s.add_argument("file")
    s.set_defaults(func=cmd_twistcheck)

    s = sub.add_parser("catalog", parents=[common], help="built-in instances")
    csub = s.add_subparsers(dest="action", required=True)
    csub.add_parser("list", parents=[common])
    show = csub.add_parser("show", parents=[common], help="print an instance as a cmx document")
    show.add_argument("name")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("discover", parents=[common], help="enumerate small crossed modules")
    s.add_argument("--max-f", type=int, default=8)
    s.add_argument("--max-g", type=int, default=8)
    s.add_argument("--max-gamma", type=int, default=4)
    s.set_defaults(func=cmd_discover)
    return p


def run(argv):
    """Execute a command; returns (exit code, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_INVALID if exc.code else EXIT_OK), ""
    rep = Report()
    limit = args.budget if args.budget is not None else budget_mod.current()
    try:
        with budget_mod.budget(limit):
            code = args.func(args, rep)
    except ParseError as exc:
        rep.add("PARSE_ERROR", exc.line, exc.column, exc.expectation)
        code = EXIT_INVALID
    except ValidationError as exc:
        rep.add("VALIDATION_ERROR", str(exc))
        for v in exc.violations:
            rep.add("VIOLATION", v.identity, v.witness)
        code = EXIT_INVALID
    except (ValueError, NotAnAction, KeyError, OSError) as exc:
        if isinstance(exc, NotQuasiAbelian):
            rep.add("NOT_QUASI_ABELIAN", str(exc))
            code = EXIT_FAIL
        else:
            rep.add("ERROR", str(exc))
            code = EXIT_INVALID
    except BudgetExceeded as exc:
        rep.add("BUDGET_EXCEEDED", exc.estimate, exc.budget)
        code = EXIT_BUDGET
    raw = [r for r in rep.records if r[0] == "__raw__"]
    if raw:
        return code, raw[0][1]
    return code, rep.render(args.format)


def main(argv=None):
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return sys.exit(code)


if __name__ == "__main__":
    main()
