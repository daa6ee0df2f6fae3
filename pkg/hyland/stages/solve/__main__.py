import sys
import logging
from .main import main
from argparse import ArgumentParser
from hyland.stages.common import add_arguments, run

# set log level
logging.basicConfig(level=logging.INFO)
# create argument parser
parser = add_arguments(ArgumentParser("solve", description="Solve the structure equations and dump the metric data"))

# parse arguments and run function
sys.exit(run(main, **vars(parser.parse_args())))
