import logging
import numpy as np
from dataclasses import dataclass
from .mesh import SurfaceMesh, check_spectral_value
from hyland.gauss import MetricData
from hyland.algebra import minkowski_inner
from hyland.errors import DegenerateData

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class QuadraticForm(object):
    """Real symmetric form P dz^2 + E dz dzbar + conj(P) dzbar^2 on a grid"""
    P:np.ndarray
    E:np.ndarray

    def to_real(self) -> np.ndarray:
        """Component matrix in the (d_x, d_y) frame"""
        P, E = np.asarray(self.P, dtype=complex), np.asarray(self.E, dtype=float)
        P, E = np.broadcast_arrays(P, E)
        M = np.empty(E.shape + (2, 2))
        M[..., 0, 0] = E + 2.0 * P.real
        M[..., 1, 1] = E - 2.0 * P.real
        M[..., 0, 1] = M[..., 1, 0] = -2.0 * P.imag
        return M

    @staticmethod
    def from_real(M:np.ndarray) -> "QuadraticForm":
        M = 0.5 * (M + np.swapaxes(M, -1, -2))
        return QuadraticForm(
            P=0.25 * (M[..., 0, 0] - M[..., 1, 1]) - 0.5j * M[..., 0, 1],
            E=0.5 * (M[..., 0, 0] + M[..., 1, 1])
        )

    def distance(self, other:"QuadraticForm") -> np.ndarray:
        return np.maximum(np.abs(self.P - other.P), np.abs(self.E - other.E))

@dataclass(frozen=True)
class FundamentalForms(object):
    """First, second and third fundamental forms with the mask of nodes they are valid on"""
    I:QuadraticForm
    II:QuadraticForm
    III:QuadraticForm
    mask:np.ndarray

    @property
    def shape_operator(self) -> np.ndarray:
        """B = I^-1 II per node, acting on (d_x, d_y) components"""
        return np.linalg.solve(self.I.to_real(), self.II.to_real())

    @property
    def gaussian_curvature(self) -> np.ndarray:
        return -1.0 + np.linalg.det(self.shape_operator)

    @property
    def mean_curvature(self) -> np.ndarray:
        return 0.5 * np.trace(self.shape_operator, axis1=-2, axis2=-1)

@dataclass(frozen=True)
class AnalyticForms(FundamentalForms):
    lam:complex = 0.0
    sigma:float = 0.0
    # mean curvature and rotated klotz coefficient
    H:None|np.ndarray = None
    Q_lambda:None|np.ndarray = None

def mesh_interior(shape:tuple[int, int], width:int =1) -> np.ndarray:
    mask = np.zeros(shape, dtype=bool)
    mask[width:shape[0]-width, width:shape[1]-width] = True
    return mask

def _pair(a:tuple[np.ndarray, np.ndarray], b:tuple[np.ndarray, np.ndarray], sign:float =1.0) -> QuadraticForm:
    ax, ay = a
    bx, by = b
    M = np.empty(ax.shape[:2] + (2, 2))
    M[..., 0, 0] = minkowski_inner(ax, bx)
    M[..., 1, 1] = minkowski_inner(ay, by)
    M[..., 0, 1] = M[..., 1, 0] = 0.5 * (minkowski_inner(ax, by) + minkowski_inner(ay, bx))
    return QuadraticForm.from_real(sign * M)

def numeric_forms(mesh:SurfaceMesh) -> FundamentalForms:
    """Fundamental forms from second order central differences of f and n.

    The second fundamental form is taken as II = -<df, dn>, the sign for
    which it is positive definite on spectral surfaces.
    """
    if min(mesh.shape) < 3:
        raise ValueError("Mesh must be at least 3 nodes wide, got %s" % (mesh.shape,))
    hx, hy = mesh.grid.hx, mesh.grid.hy
    df = tuple(np.gradient(mesh.f, h, axis=k, edge_order=2) for k, h in ((0, hx), (1, hy)))
    dn = tuple(np.gradient(mesh.n, h, axis=k, edge_order=2) for k, h in ((0, hx), (1, hy)))
    return FundamentalForms(
        I=_pair(df, df),
        II=_pair(df, dn, sign=-1.0),
        III=_pair(dn, dn),
        mask=mesh_interior(mesh.shape)
    )

def spectral_curvature(lam:complex) -> float:
    r = abs(lam)
    return float(-(2.0 * r / (1.0 + r ** 2)) ** 2)

def analytic_forms(m:MetricData, lam:complex) -> AnalyticForms:
    """Closed form fundamental forms of the surface at spectral value `lam`.

    The data is first rescaled to the curvature -1/cosh^2(s'/2) with
    s' = -2 log|lam|, then the dz^2 parts are rotated by the phase
    conj(lam)^2/|lam|^2. `Q_lambda` is the rotated coefficient of the
    unrescaled data.
    """
    check_spectral_value(lam)
    if not m.is_nondegenerate:
        n = int((~m.nondegenerate_mask()).sum())
        raise DegenerateData("Metric data degenerates at %i nodes" % n)

    r = abs(lam)
    phase = (np.conj(lam) / r) ** 2
    rescaled = m.rescale(-2.0 * np.log(r))
    sigma = rescaled.sigma
    eu, Q = np.exp(rescaled.u), rescaled.Q
    q2 = np.abs(Q) ** 2
    E = eu + q2 / eu
    D = eu - q2 / eu

    return AnalyticForms(
        I=QuadraticForm(phase * Q, E),
        II=QuadraticForm(np.zeros_like(Q), sigma * D),
        III=QuadraticForm(-sigma ** 2 * phase * Q, sigma ** 2 * E),
        mask=np.ones(m.grid.shape, dtype=bool),
        lam=lam,
        sigma=sigma,
        H=sigma * (eu ** 2 + q2) / (eu ** 2 - q2),
        Q_lambda=phase * m.Q
    )

def compare_forms(a:FundamentalForms, b:FundamentalForms) -> dict[str, float]:
    mask = a.mask & b.mask
    return {
        "max_err_%s" % name: float(getattr(a, name).distance(getattr(b, name))[mask].max())
        for name in ("I", "II", "III")
    }

def form_report(mesh:SurfaceMesh, m:MetricData) -> dict[str, float]:
    if mesh.shape != m.grid.shape:
        raise ValueError("Mesh of shape %s does not match the data grid %s" % (mesh.shape, m.grid.shape))
    numeric = numeric_forms(mesh)
    analytic = analytic_forms(m, mesh.lam)

    mask = numeric.mask & analytic.mask
    K = numeric.gaussian_curvature[mask]
    H = numeric.mean_curvature
    P = numeric.I.P
    klotz = 0.5 * (np.gradient(P, mesh.grid.hx, axis=0) + 1j * np.gradient(P, mesh.grid.hy, axis=1))

    report = compare_forms(numeric, analytic)
    report.update({
        "lambda": mesh.lam,
        "K_numeric": float(K.mean()),
        "K_formula": spectral_curvature(mesh.lam),
        "K_max_err": float(np.abs(K - spectral_curvature(mesh.lam)).max()),
        "H_max_err": float(np.abs(H - analytic.H)[mask].max()),
        "klotz_residual": float(np.abs(klotz)[mesh_interior(mesh.shape, 2)].max())
    })
    logger.debug("Form report at lambda=%s: %s" % (mesh.lam, report))
    return report
