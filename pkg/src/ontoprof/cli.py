"""Command line interface.

Subcommands: `extract` runs the corpus extractor, `schema` prints the
feature schema, `check` parses one document and reports diagnostics.
Exit codes: 0 success, 1 usage error, 2 aborted run or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
import tempfile
from pathlib import Path

from .features import schema_as_dict
from .parser import OntologyParseError, parse_ontology
from .runner import DEFAULT_TIMEOUT, RunConfig, run, write_outputs

_CONFIG_KEYS = {"inputs", "out", "format", "groups", "timeout", "jobs",
                "on_error", "follow_imports", "ocoh_weights"}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def load_config_file(path: str) -> dict:
    """Key-value config: one `key = value` per line, '#' comments."""
    options: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in _CONFIG_KEYS:
            raise ValueError(f"{path}:{lineno}: bad config line: {raw!r}")
        options[key] = value.strip()
    return options


def _build_parser() -> _Parser:
    parser = _Parser(prog="ontoprof",
                     description="OWL 2 ontology feature extraction")
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser("extract", help="extract feature matrices from a corpus")
    extract.add_argument("inputs", nargs="*", metavar="INPUT",
                         help=".ofn files, directories, or - for stdin; "
                              "may also come from the config file")
    extract.add_argument("--out", help="matrix output path (default: stdout)")
    extract.add_argument("--format", choices=("csv", "json"), default=None)
    extract.add_argument("--groups", default=None,
                         help="comma-separated subset of size,expressivity,structural,syntactic")
    extract.add_argument("--timeout", type=float, default=None, metavar="SECS",
                         help="per-file timeout in seconds")
    extract.add_argument("--jobs", type=int, default=None, metavar="N")
    extract.add_argument("--on-error", choices=("skip", "abort"), default=None)
    extract.add_argument("--follow-imports", action="store_true", default=None)
    extract.add_argument("--config", help="key-value config file; flags override it")

    sub.add_parser("schema", help="print the feature schema as JSON")

    check = sub.add_parser("check", help="parse one file and print diagnostics")
    check.add_argument("file", metavar="FILE")
    return parser


def _merge_extract_config(args) -> RunConfig:
    options = load_config_file(args.config) if args.config else {}
    fmt = args.format or options.get("format", "csv")
    groups_raw = args.groups or options.get("groups")
    groups = (tuple(g.strip() for g in groups_raw.split(",") if g.strip())
              if groups_raw else ("size", "expressivity", "structural", "syntactic"))
    timeout = args.timeout if args.timeout is not None else float(
        options.get("timeout", DEFAULT_TIMEOUT))
    jobs = args.jobs if args.jobs is not None else int(options.get("jobs", 0)) or None
    on_error = args.on_error or options.get("on_error", "skip")
    follow = (args.follow_imports if args.follow_imports is not None
              else options.get("follow_imports", "false").lower() in ("true", "1", "yes"))
    out = args.out or options.get("out")
    weights: tuple[float, float, float] = (1 / 3, 1 / 3, 1 / 3)
    if "ocoh_weights" in options:
        parts = [float(x) for x in options["ocoh_weights"].split(",")]
        if len(parts) != 3:
            raise ValueError("ocoh_weights needs exactly three values")
        weights = (parts[0], parts[1], parts[2])
    inputs = list(args.inputs) or options.get("inputs", "").split()
    if not inputs:
        raise ValueError("no inputs given (positional arguments or config 'inputs')")
    kwargs = dict(inputs=inputs, output_path=out, format=fmt, feature_groups=groups,
                  per_file_timeout=timeout, on_error=on_error, follow_imports=follow,
                  cohesion_weights=weights)
    if jobs is not None:
        kwargs["parallelism"] = jobs
    return RunConfig(**kwargs)


def _materialize_stdin(inputs: list[str]) -> list[str]:
    out = []
    for item in inputs:
        if item == "-":
            tmp = tempfile.NamedTemporaryFile(mode="w", suffix=".ofn",
                                              delete=False, encoding="utf-8")
            tmp.write(sys.stdin.read())
            tmp.close()
            out.append(tmp.name)
        else:
            out.append(item)
    return out


def cmd_extract(args) -> int:
    try:
        config = _merge_extract_config(args)
    except (ValueError, OSError) as exc:
        print(f"ontoprof: error: {exc}", file=sys.stderr)
        return 1
    config.inputs = _materialize_stdin(config.inputs)
    report = run(config)
    if report.aborted:
        for outcome in report.outcomes:
            for diag in outcome.diagnostics:
                print(diag, file=sys.stderr)
        print("ontoprof: run aborted", file=sys.stderr)
        return 2
    try:
        matrix = write_outputs(report, config)
    except OSError as exc:
        print(f"ontoprof: error: cannot write output: {exc}", file=sys.stderr)
        return 1
    if not config.output_path:
        sys.stdout.write(matrix.decode("utf-8"))
    for outcome in report.outcomes:
        if outcome.status != "ok":
            print(f"ontoprof: {outcome.path}: {outcome.status}", file=sys.stderr)
            for diag in outcome.diagnostics:
                print(diag, file=sys.stderr)
        elif outcome.imports:
            print(f"ontoprof: {outcome.path}: warning: "
                  f"{len(outcome.imports)} import(s) "
                  + ("resolved locally where possible" if config.follow_imports
                     else "not resolved"),
                  file=sys.stderr)
    return 0


def cmd_schema(_args) -> int:
    json.dump(schema_as_dict(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_check(args) -> int:
    if args.file == "-":
        text, origin = sys.stdin.read(), "<stdin>"
    else:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            print(f"ontoprof: error: {exc}", file=sys.stderr)
            return 2
        origin = args.file
    try:
        onto = parse_ontology(text, origin=origin)
    except OntologyParseError as exc:
        for diag in exc.diagnostics:
            print(diag.format(), file=sys.stderr)
        return 2
    print(f"{origin}: ok: {len(onto.axioms)} axioms "
          f"({onto.logical_axiom_count} logical)")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"extract": cmd_extract, "schema": cmd_schema, "check": cmd_check}
    try:
        return handlers[args.command](args)
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
