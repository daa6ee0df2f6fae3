import sys
import logging
from argparse import ArgumentParser
from hyland.stages.common import add_arguments, run
from hyland.stages.solve import main as solve
from hyland.stages.surface import main as surface
from hyland.stages.verify import main as verify
from hyland.stages.holonomy import main as holonomy
from hyland.stages.sweep import main as sweep
from hyland.stages.export import main as export

STAGES = {
    "solve": (solve, "Solve the structure equations and dump the metric data"),
    "surface": (surface, "Build spectral surfaces and their form reports"),
    "verify": (verify, "Run the verification suites of a configuration"),
    "holonomy": (holonomy, "Complex landslide holonomy reports per q"),
    "sweep": (sweep, "Form and congruence checks over a sweep of spectral values"),
    "export": (export, "Export meshes, frames and field dumps")
}

def build_parser() -> ArgumentParser:
    # create global parser
    parser = ArgumentParser(prog="hyland")
    # create stages sub-parsers
    stage_parsers = parser.add_subparsers(title="stages", help="Pipeline stages", required=True)
    for name, (func, description) in STAGES.items():
        stage_parser = add_arguments(stage_parsers.add_parser(name, description=description))
        stage_parser.set_defaults(func=func)
    return parser

def main(argv:None|list[str] =None) -> int:
    # set log level
    logging.basicConfig(level=logging.INFO)
    # parse arguments and run function
    args = vars(build_parser().parse_args(argv))
    status = run(args.pop("func"), **args)
    if argv is None:
        sys.exit(status)
    return status
