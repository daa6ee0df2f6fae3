import numpy as np
from dataclasses import dataclass
from typing import Literal

# smallest number of nodes per direction
MIN_NODES = 8

# central difference weights for offsets 1, 2, ... (antisymmetric first, symmetric second derivative)
FIRST_DERIVATIVE = {
    2: (1/2,),
    4: (2/3, -1/12),
    6: (3/4, -3/20, 1/60),
    8: (4/5, -1/5, 4/105, -1/280)
}
SECOND_DERIVATIVE = {
    2: (-2.0, (1.0,)),
    4: (-5/2, (4/3, -1/12)),
    6: (-49/18, (3/2, -3/20, 1/90)),
    8: (-205/72, (8/5, -1/5, 8/315, -1/560))
}

@dataclass(frozen=True)
class DomainGrid(object):
    """Uniform grid in the conformal coordinate z = x + iy.

    Fields on the grid are arrays of shape (nx, ny), indexed [i, j] with x
    running along the first axis. A cylinder grid is periodic in x with
    nodes x = i Lx / nx; a patch grid contains both edges of the rectangle.
    Derivatives are spectral in the periodic direction and central
    differences of order `fd_order` otherwise.
    """
    kind:Literal['patch', 'cylinder']
    nx:int
    ny:int
    Lx:float
    Ly:float
    x0:None|float = None
    y0:None|float = None
    fd_order:None|int = None

    def __post_init__(self) -> None:
        if self.kind not in ('patch', 'cylinder'):
            raise ValueError("Unknown grid kind `%s`" % self.kind)
        if min(self.nx, self.ny) < MIN_NODES:
            raise ValueError("Grid requires at least %i nodes per direction, got %ix%i" % (MIN_NODES, self.nx, self.ny))
        if min(self.Lx, self.Ly) <= 0:
            raise ValueError("Grid lengths must be positive, got Lx=%s, Ly=%s" % (self.Lx, self.Ly))
        # defaults depend on the kind of grid
        if self.x0 is None:
            object.__setattr__(self, 'x0', 0.0 if self.is_periodic else -0.5 * self.Lx)
        if self.y0 is None:
            object.__setattr__(self, 'y0', -0.5 * self.Ly)
        if self.fd_order is None:
            object.__setattr__(self, 'fd_order', 8 if self.is_periodic else 2)
        if self.fd_order not in FIRST_DERIVATIVE:
            raise ValueError("Unsupported finite difference order %s" % self.fd_order)

    @property
    def is_periodic(self) -> bool:
        return self.kind == 'cylinder'

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    @property
    def hx(self) -> float:
        return self.Lx / (self.nx if self.is_periodic else (self.nx - 1))

    @property
    def hy(self) -> float:
        return self.Ly / (self.ny - 1)

    @property
    def x(self) -> np.ndarray:
        return self.x0 + self.hx * np.arange(self.nx)

    @property
    def y(self) -> np.ndarray:
        return self.y0 + self.hy * np.arange(self.ny)

    @property
    def z(self) -> np.ndarray:
        x, y = np.meshgrid(self.x, self.y, indexing='ij')
        return x + 1j * y

    @property
    def margin(self) -> int:
        return self.fd_order // 2

    def interior(self, width:None|int =None) -> np.ndarray:
        """Mask of nodes reached by full central stencils, or `width` nodes away from the edges"""
        mask = np.zeros(self.shape, dtype=bool)
        k = self.margin if width is None else width
        if self.is_periodic:
            mask[:, k:self.ny-k] = True
        else:
            mask[k:self.nx-k, k:self.ny-k] = True
        return mask

    def sup(self, f:np.ndarray, width:None|int =None) -> float:
        """Sup-norm of a field over the interior nodes"""
        f = np.abs(np.asarray(f))
        # trailing axes hold matrix or vector components
        f = f.reshape(self.shape + (-1,)).max(axis=-1)
        return float(f[self.interior(width)].max())

    def nearest_row(self, y:float =0.0) -> int:
        return int(np.argmin(np.abs(self.y - y)))

    # derivatives

    def _central(self, f:np.ndarray, h:float, axis:int) -> np.ndarray:
        # lower order one-sided values at the edges
        out = np.gradient(f, h, axis=axis, edge_order=2)
        weights = FIRST_DERIVATIVE[self.fd_order]
        k = len(weights)
        n = f.shape[axis]
        inner = [slice(None)] * f.ndim
        inner[axis] = slice(k, n - k)
        acc = np.zeros_like(out[tuple(inner)])
        for m, w in enumerate(weights, start=1):
            acc = acc + w * (
                np.take(f, np.arange(k + m, n - k + m), axis=axis) -
                np.take(f, np.arange(k - m, n - k - m), axis=axis)
            )
        out[tuple(inner)] = acc / h
        return out

    def _central2(self, f:np.ndarray, h:float, axis:int) -> np.ndarray:
        out = np.gradient(np.gradient(f, h, axis=axis, edge_order=2), h, axis=axis, edge_order=2)
        center, weights = SECOND_DERIVATIVE[self.fd_order]
        k = len(weights)
        n = f.shape[axis]
        inner = [slice(None)] * f.ndim
        inner[axis] = slice(k, n - k)
        acc = center * f[tuple(inner)]
        for m, w in enumerate(weights, start=1):
            acc = acc + w * (
                np.take(f, np.arange(k + m, n - k + m), axis=axis) +
                np.take(f, np.arange(k - m, n - k - m), axis=axis)
            )
        out[tuple(inner)] = acc / h**2
        return out

    def _spectral(self, f:np.ndarray, power:int) -> np.ndarray:
        k = 2j * np.pi * np.fft.fftfreq(self.nx, d=self.hx)
        if power % 2 == 1 and self.nx % 2 == 0:
            # nyquist mode has no odd derivative
            k[self.nx // 2] = 0
        shape = (self.nx,) + (1,) * (f.ndim - 1)
        df = np.fft.ifft(np.fft.fft(f, axis=0) * (k ** power).reshape(shape), axis=0)
        return df if np.iscomplexobj(f) else df.real

    def dx(self, f:np.ndarray) -> np.ndarray:
        if self.is_periodic:
            return self._spectral(f, 1)
        return self._central(f, self.hx, axis=0)

    def dy(self, f:np.ndarray) -> np.ndarray:
        return self._central(f, self.hy, axis=1)

    def dz(self, f:np.ndarray) -> np.ndarray:
        return 0.5 * (self.dx(f) - 1j * self.dy(f))

    def dzbar(self, f:np.ndarray) -> np.ndarray:
        return 0.5 * (self.dx(f) + 1j * self.dy(f))

    def laplacian(self, f:np.ndarray) -> np.ndarray:
        fyy = self._central2(f, self.hy, axis=1)
        if self.is_periodic:
            return self._spectral(f, 2) + fyy
        return self._central2(f, self.hx, axis=0) + fyy

    def refine(self, factor:int =2) -> "DomainGrid":
        """Same domain with `factor` times as many cells per direction"""
        nx = self.nx * factor if self.is_periodic else (self.nx - 1) * factor + 1
        ny = (self.ny - 1) * factor + 1
        return DomainGrid(self.kind, nx, ny, self.Lx, self.Ly, self.x0, self.y0, self.fd_order)
