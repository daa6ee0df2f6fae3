import os
import logging
from argparse import ArgumentParser
from typing import Callable
from .configs import RunConfig, load_config
from hyland.errors import ConfigError, NumericalError

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_TOLERANCE = 1
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

def add_arguments(parser:ArgumentParser) -> ArgumentParser:
    """Flags shared by every stage"""
    parser.add_argument("-c", "--config", type=str, required=True, help="Path to run configuration file in .json format")
    parser.add_argument("-o", "--out", type=str, default=None, help="Output directory, by default uses directory specified in config")
    parser.add_argument("-j", "--jobs", type=int, default=1, help="Number of workers for independent spectral values")
    parser.add_argument("-t", "--tolerance-scale", type=float, default=1.0, help="Factor applied to every suite tolerance")
    return parser

def prepare(config:str, out:None|str) -> tuple[RunConfig, str]:
    """Load the run configuration and create the output directory"""
    config = load_config(config)
    out = out or config.output.out_dir
    os.makedirs(out, exist_ok=True)
    return config, out

def run(stage:Callable[..., int], **kwargs) -> int:
    """Run a stage and map its errors to exit codes"""
    try:
        return stage(**kwargs)
    except ConfigError as e:
        logger.error("%s" % e)
        return EXIT_CONFIG
    except NumericalError as e:
        logger.error("Stage `%s` failed with %s: %s" % (stage.__module__.split('.')[-2], type(e).__name__, e))
        return EXIT_NUMERICAL
