from . import (
    solve,
    surface,
    verify,
    holonomy,
    sweep,
    export
)
