from .connection import (
    ConnectionForm,
    TAU,
    build_connection,
    maurer_cartan,
    flatness_residual,
    untwist_connection,
    gauge_matrix
)
from .integrate import (
    ExtendedFrame,
    UntwistedFrame,
    transport,
    check_flatness,
    integrate_frame,
    loop_holonomy,
    untwist_frame,
    save_frame
)
