from . import (
    errors,
    algebra,
    gauss,
    frames,
    surface,
    landslide,
    holonomy,
    suites,
    utils,
    stages
)
