import numpy as np
from dataclasses import dataclass, fields
from typing import Literal
from hyland.gauss import DomainGrid, MetricData
from hyland.algebra import E1, dagger

TAU = np.diag([1.0, -1.0]).astype(complex)

def offdiagonal(m:np.ndarray, entry:tuple[int, int]) -> np.ndarray:
    out = np.zeros_like(m)
    out[..., entry[0], entry[1]] = m[..., entry[0], entry[1]]
    return out

def diagonal(m:np.ndarray) -> np.ndarray:
    return m - offdiagonal(m, (0, 1)) - offdiagonal(m, (1, 0))

@dataclass(frozen=True)
class ConnectionForm(object):
    """Laurent coefficients of the lambda-family of connection forms

        alpha^lambda = (A_-/lambda + A_0 + lambda A_+) dz + (B_-/lambda + B_0 + lambda B_+) dzbar

    Every coefficient is a field of trace-free 2x2 matrices of shape (nx, ny, 2, 2).
    """
    grid:DomainGrid
    A_minus:np.ndarray
    A_zero:np.ndarray
    A_plus:np.ndarray
    B_minus:np.ndarray
    B_zero:np.ndarray
    B_plus:np.ndarray
    untwisted:bool = False

    def coefficients(self) -> dict[str, np.ndarray]:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name.startswith(('A_', 'B_'))}

    def dz_part(self, lam:complex) -> np.ndarray:
        return self.A_minus / lam + self.A_zero + lam * self.A_plus

    def dzbar_part(self, lam:complex) -> np.ndarray:
        return self.B_minus / lam + self.B_zero + lam * self.B_plus

    def evaluate(self, lam:complex) -> tuple[np.ndarray, np.ndarray]:
        """Components (alpha(d_x), alpha(d_y)) in the real coordinate frame"""
        U, V = self.dz_part(lam), self.dzbar_part(lam)
        return U + V, 1j * (U - V)

    def max_trace(self) -> float:
        return max(
            float(np.abs(np.trace(c, axis1=-2, axis2=-1)).max())
            for c in self.coefficients().values()
        )

    def is_twisted(self, atol:float =1e-12) -> bool:
        """Diagonal parts only in the lambda^0 coefficients, off-diagonal parts only in lambda^{+-1}"""
        even = (self.A_zero, self.B_zero)
        odd = (self.A_minus, self.A_plus, self.B_minus, self.B_plus)
        return all(np.abs(m - diagonal(m)).max() <= atol for m in even) and \
            all(np.abs(diagonal(m)).max() <= atol for m in odd)

    def reality_defect(self, lam:complex) -> float:
        """Sup of |alpha e1 + e1 alpha^*| for lambda on the unit circle"""
        U, V = self.dz_part(lam), self.dzbar_part(lam)
        # the conjugate of U dz + V dzbar is V^* dz + U^* dzbar
        dz = U @ E1 + E1 @ dagger(V)
        dzbar = V @ E1 + E1 @ dagger(U)
        return float(max(np.abs(dz).max(), np.abs(dzbar).max()))

def _matrix_field(grid:DomainGrid) -> np.ndarray:
    return np.zeros(grid.shape + (2, 2), dtype=complex)

def build_connection(m:MetricData) -> ConnectionForm:
    """Flat connection family of the harmonic map encoded by (u, Q).

    With k = 1/(2 cosh(s/2)) the dz and dzbar coefficients read

        U = [[u_z/4, k e^{u/2}/lambda], [k Q e^{-u/2}/lambda, -u_z/4]]
        V = [[-u_zbar/4, lambda k conj(Q) e^{-u/2}], [lambda k e^{u/2}, u_zbar/4]]

    The Maurer-Cartan equation holds for every lambda exactly when the
    structure equations hold, and on |lambda| = 1 the form is su(1, 1)
    valued. Evaluated at |lambda| = e^{-s/2} the frame reproduces the
    fundamental forms of (u, Q).
    """
    grid, k = m.grid, m.k
    uz, uzbar = grid.dz(m.u), grid.dzbar(m.u)
    a = k * np.exp(0.5 * m.u)
    b = k * m.Q * np.exp(-0.5 * m.u)

    A_minus, A_zero, B_zero, B_plus = (_matrix_field(grid) for _ in range(4))
    A_minus[..., 0, 1] = a
    A_minus[..., 1, 0] = b
    A_zero[..., 0, 0] = 0.25 * uz
    A_zero[..., 1, 1] = -0.25 * uz
    B_zero[..., 0, 0] = -0.25 * uzbar
    B_zero[..., 1, 1] = 0.25 * uzbar
    B_plus[..., 0, 1] = np.conj(b)
    B_plus[..., 1, 0] = a

    return ConnectionForm(
        grid=grid,
        A_minus=A_minus,
        A_zero=A_zero,
        A_plus=_matrix_field(grid),
        B_minus=_matrix_field(grid),
        B_zero=B_zero,
        B_plus=B_plus
    )

def maurer_cartan(c:ConnectionForm, lam:complex) -> np.ndarray:
    """d alpha + alpha ^ alpha evaluated on (d_x, d_y)"""
    ax, ay = c.evaluate(lam)
    return c.grid.dx(ay) - c.grid.dy(ax) + ax @ ay - ay @ ax

def flatness_residual(c:ConnectionForm, lam:complex) -> float:
    # derivatives of the coefficients, which hold derivatives of u themselves
    return c.grid.sup(maurer_cartan(c, lam), width=2 * c.grid.margin)

def untwist_connection(c:ConnectionForm, convention:Literal['lower', 'upper'] ='lower') -> ConnectionForm:
    """Gauge the twisted family by D^lambda = diag(lambda^{-1/2}, lambda^{1/2}) and pass to lambda^2.

    With the 'lower' convention the (2,1) entry of the lambda^{-1}
    coefficient keeps its power, the (1,2) entry moves to lambda^0, and
    dually the (1,2) entry of the lambda coefficient stays while the (2,1)
    entry moves to lambda^0. 'upper' swaps the roles of the two entries.
    The result has integer powers of the new spectral parameter.
    """
    if c.untwisted:
        raise ValueError("Connection is already untwisted")
    if not c.is_twisted():
        raise ValueError("Connection violates the twisted symmetry")
    keep, move = ((1, 0), (0, 1)) if convention == 'lower' else ((0, 1), (1, 0))

    def gauge(minus:np.ndarray, zero:np.ndarray, plus:np.ndarray):
        return (
            offdiagonal(minus, keep),
            zero + offdiagonal(minus, move) + offdiagonal(plus, keep),
            offdiagonal(plus, move)
        )

    # regroup coefficients by integer powers of lambda after the gauge
    A = gauge(c.A_minus, c.A_zero, c.A_plus)
    B = gauge(c.B_minus, c.B_zero, c.B_plus)
    return ConnectionForm(c.grid, *A, *B, untwisted=True)

def gauge_matrix(mu:complex, convention:Literal['lower', 'upper'] ='lower') -> np.ndarray:
    """D^mu = diag(mu^{-1/2}, mu^{1/2}) on the principal branch"""
    r = np.sqrt(complex(mu))
    d = np.diag([1.0 / r, r])
    return d if convention == 'lower' else np.linalg.inv(d)
