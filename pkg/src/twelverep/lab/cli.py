"""Command line front end.

Exit codes: 0 for yes / consistent, 1 for no / counterexample, 2 for usage
errors and exhausted budgets.
"""
from __future__ import annotations

import json
import sys

import click

from .. import __version__
from ..catalog import catalog_rows, is_P_avoiding
from ..graphs import iter_good_orders, load_graph
from ..grid.build import build_corner_representant, build_representant
from ..grid.embedding import (GridEmbedding, Kind, ascii_art, classify, corner_nodes,
                              end_squares, load_embedding)
from ..grid.forbidden import FCheck, f_check
from ..grid.lines import CornerNodeError, glue_line_length1, necessary_conditions_line
from ..represent import is_12_representable, represents
from ..words import format_word, parse_word
from .scan import scan_characterization, scan_conjecture

# option names a config file may set at top level, copied to every command
# that accepts them
SHARED_KEYS = ("budget", "jobs", "report", "symmetry")


def _default_map(cfg: dict, group: click.Group) -> dict:
    """Nest flat config keys under each command that has a matching option."""
    out: dict = {}

    def visit(cmd, into):
        if isinstance(cmd, click.Group):
            for name, sub in cmd.commands.items():
                visit(sub, into.setdefault(name, {}))
            return
        names = {p.name for p in cmd.params}
        for k in SHARED_KEYS:
            if k in cfg and k in names:
                into[k] = cfg[k]

    visit(group, out)
    for k, v in cfg.items():
        if isinstance(v, dict):
            out.setdefault(k, {}).update(v)
    return out


def _fail(msg: str, code: int = 2):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _load_graph(path):
    try:
        return load_graph(path)
    except (OSError, ValueError) as exc:
        _fail(str(exc))


def _load_embedding(path) -> GridEmbedding:
    try:
        return load_embedding(path)
    except (OSError, ValueError) as exc:
        _fail(str(exc))


def _emit(obj, as_json: bool, text: str):
    click.echo(json.dumps(obj, sort_keys=True) if as_json else text)


@click.group()
@click.version_option(__version__)
@click.option("--config", type=click.Path(exists=True, dir_okay=False),
              help="JSON file with option defaults; explicit flags win.")
@click.pass_context
def main(ctx, config):
    """Decide and certify 12-representability of graphs and grid graphs."""
    if config:
        with open(config) as fh:
            try:
                cfg = json.load(fh)
            except json.JSONDecodeError as exc:
                _fail(f"bad config file: {exc}")
        ctx.default_map = _default_map(cfg, main)


@main.command()
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.argument("word")
@click.option("--json", "as_json", is_flag=True)
def verify(graph, word, as_json):
    """Check whether WORD 12-represents the labeled GRAPH."""
    g = _load_graph(graph)
    try:
        w = parse_word(word)
    except ValueError as exc:
        _fail(str(exc))
    chk = represents(w, g)
    if chk.verdict:
        _emit({"represents": True}, as_json, "yes")
        sys.exit(0)
    (x, y), reason = chk.first_violation
    _emit({"represents": False, "pair": [x, y], "reason": reason}, as_json,
          f"no: pair ({x}, {y}) {reason}")
    sys.exit(1)


@main.command()
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("--budget", type=int, default=None, help="Search node budget.")
@click.option("--no-prune", is_flag=True, help="Do not prune labelings by cutsets.")
@click.option("--json", "as_json", is_flag=True)
def represent(graph, budget, no_prune, as_json):
    """Decide whether some labeling of GRAPH is 12-representable."""
    g = _load_graph(graph)
    d = is_12_representable(g, budget=budget, cutset_prune=not no_prune)
    lines = [d.outcome]
    if d.word is not None:
        lines.append("labeling: " + " ".join(f"{v}->{d.mapping[v]}" for v in sorted(d.mapping)))
        lines.append("word: " + format_word(d.word))
    if d.certificate is not None:
        lines.append("certificate: " + json.dumps(d.certificate.to_dict(), sort_keys=True))
    lines.append(f"nodes: {d.nodes}")
    _emit(d.to_dict(), as_json, "\n".join(lines))
    sys.exit({"Representable": 0, "NotRepresentable": 1}.get(d.outcome, 2))


@main.command("good-labelings")
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("--count", "mode", flag_value="count", help="Only print how many there are.")
@click.option("--first", "mode", flag_value="first", help="Stop after the first one.")
def good_labelings(graph, mode):
    """List good labelings of GRAPH, as vertex->label maps."""
    g = _load_graph(graph)
    total = 0
    for order in iter_good_orders(g):
        total += 1
        if mode != "count":
            lab = {int(v): k for k, v in enumerate(order, start=1)}
            click.echo(" ".join(f"{v}->{lab[v]}" for v in sorted(lab)))
            if mode == "first":
                break
    if mode == "count":
        click.echo(total)
    sys.exit(0 if total else 1)


# -- grid ----------------------------------------------------------------------

@main.group()
def grid():
    """Grid graph embeddings given as files of "x y" lines."""


@grid.command("classify")
@click.argument("emb", type=click.Path(exists=True, dir_okay=False))
def grid_classify(emb):
    e = _load_embedding(emb)
    kind = classify(e)
    click.echo(kind.value)
    if kind == Kind.SQUARE_GRID:
        click.echo(f"end-squares: {len(end_squares(e))}")
        click.echo(f"corner nodes: {sorted(corner_nodes(e))}")


@grid.command("characterize")
@click.argument("emb", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def grid_characterize(emb, as_json):
    """F-avoidance for square grids; P-avoidance and known conditions for line grids."""
    e = _load_embedding(emb)
    kind = classify(e)
    if kind == Kind.SQUARE_GRID:
        chk = f_check(e)
        obj = {"kind": kind.value, "f_avoiding": chk.avoiding, "entry": chk.entry,
               "witness": [list(p) for p in chk.witness]}
        text = "F-avoiding" if chk.avoiding else f"contains {chk.entry} at {list(chk.witness)}"
        _emit(obj, as_json, text)
        sys.exit(0 if chk.avoiding else 1)
    if kind == Kind.LINE_GRID:
        chk = is_P_avoiding(e)
        viol = [v.to_dict() for v in necessary_conditions_line(e)]
        obj = {"kind": kind.value, **chk.to_dict(), "necessary": viol}
        text = "P-avoiding" if chk.avoiding else f"contains {chk.entry} at {list(chk.witness)}"
        for v in viol:
            text += f"\n{v['rule']} at {tuple(v['root'])}"
        _emit(obj, as_json, text)
        sys.exit(0 if chk.avoiding else 1)
    _emit({"kind": kind.value}, as_json, kind.value)


@grid.command("build")
@click.argument("emb", type=click.Path(exists=True, dir_okay=False))
@click.option("--corner", is_flag=True, help="Repeat exactly the corner-node labels.")
@click.option("--json", "as_json", is_flag=True)
def grid_build(emb, corner, as_json):
    """Labeling and representant of an F-avoiding square grid."""
    e = _load_embedding(emb)
    if classify(e) == Kind.LINE_GRID:
        _fail("the construction needs a square grid, got a line grid")
    try:
        c = build_corner_representant(e) if corner else build_representant(e)
    except ValueError as exc:
        if corner:
            _emit({"f_avoiding": False, "error": str(exc)}, as_json, str(exc))
            sys.exit(1)
        raise
    if isinstance(c, FCheck):
        _emit({"f_avoiding": False, "entry": c.entry, "witness": [list(p) for p in c.witness]},
              as_json, f"not representable: contains {c.entry} at {list(c.witness)}")
        sys.exit(1)
    _emit(c.to_dict(), as_json, ascii_art(e, c.labeling) + "\nword: " + format_word(c.word))


@grid.command("glue")
@click.argument("emb", type=click.Path(exists=True, dir_okay=False))
@click.argument("x", type=int)
@click.argument("y", type=int)
@click.option("--json", "as_json", is_flag=True)
def grid_glue(emb, x, y, as_json):
    """Attach one new point at node (X, Y) and extend the representant.

    Coordinates refer to the embedding after translation to x, y >= 0.
    """
    e = _load_embedding(emb)
    if classify(e) != Kind.SQUARE_GRID:
        _fail("gluing starts from a square grid")
    v = (x, y)
    if v not in e.points:
        _fail(f"{v} is not a point of the (canonicalized) embedding")
    try:
        c = build_corner_representant(e)
    except ValueError as exc:
        _fail(str(exc), 1)
    try:
        out = glue_line_length1(e, v, c.word, c.labeling)
    except CornerNodeError as exc:
        _emit({"glued": False, "reason": str(exc)}, as_json, f"rejected: {exc}")
        sys.exit(1)
    except ValueError as exc:
        _fail(str(exc))
    obj = {"glued": True, "new_point": list(out.new_point), "case": out.case,
           "points": [list(p) for p in out.embedding.sorted_points()],
           "labeling": [out.labeling[p] for p in out.embedding.sorted_points()],
           "word": format_word(out.word)}
    text = (ascii_art(out.embedding, out.labeling) + f"\nnew point: {out.new_point} ({out.case})"
            + "\nword: " + format_word(out.word))
    _emit(obj, as_json, text)


# -- catalog -------------------------------------------------------------------

@main.group()
def catalog():
    """Named forbidden graphs."""


@catalog.command("list")
def catalog_list():
    rows = [("name", "kind", "n", "m", "note")] + catalog_rows()
    widths = [max(len(str(r[i])) for r in rows) for i in range(4)]
    for r in rows:
        click.echo("  ".join(str(c).ljust(w) for c, w in zip(r, widths)) + "  " + r[4])


# -- scans ---------------------------------------------------------------------

@main.group()
def scan():
    """Exhaustive scans over grid embeddings."""


def _scan_options(f):
    f = click.option("--max-nodes", "max_nodes", type=int, required=True,
                     help="Largest number of points.")(f)
    f = click.option("--jobs", type=int, default=1, show_default=True)(f)
    f = click.option("--report", type=click.Path(dir_okay=False), default=None,
                     help="Write JSON lines here.")(f)
    f = click.option("--budget", type=int, default=None, help="Search node budget per shape.")(f)
    f = click.option("--symmetry", type=click.Choice(["free", "fixed"]), default="free",
                     show_default=True)(f)
    return f


def _finish(report, path):
    if path:
        report.write(path)
    click.echo(report.table())
    for r in report.counterexamples:
        click.echo("counterexample: " + json.dumps({k: v for k, v in r.items() if k != "timing"},
                                                   sort_keys=True))
    for r in report.undecided:
        click.echo(f"undecided: {r['points']}")
    sys.exit(report.exit_code())


@scan.command("characterization")
@_scan_options
def scan_char(max_nodes, jobs, report, budget, symmetry):
    """Square grids: F-avoiding, constructible and representable must coincide."""
    if max_nodes < 1:
        _fail("--max-nodes must be at least 1")
    _finish(scan_characterization(max_nodes, jobs=jobs, budget=budget, symmetry=symmetry), report)


@scan.command("conjecture")
@_scan_options
def scan_conj(max_nodes, jobs, report, budget, symmetry):
    """Line grids: compare P-avoidance with representability."""
    if max_nodes < 1:
        _fail("--max-nodes must be at least 1")
    _finish(scan_conjecture(max_nodes, jobs=jobs, budget=budget, symmetry=symmetry), report)


if __name__ == "__main__":
    main()
