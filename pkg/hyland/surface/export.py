import os
import numpy as np
from .mesh import SurfaceMesh
from hyland.algebra import to_coordinates, to_poincare_ball

def ball_normals(mesh:SurfaceMesh) -> np.ndarray:
    """Unit euclidean directions of the normals pushed into the ball model"""
    x, v = to_coordinates(mesh.f), to_coordinates(mesh.n)
    denom = 1.0 + x[..., :1]
    # differential of xi -> xi_vec / (1 + xi_0)
    d = v[..., 1:] / denom - x[..., 1:] * v[..., :1] / denom ** 2
    return d / np.linalg.norm(d, axis=-1, keepdims=True)

def quad_faces(nx:int, ny:int) -> np.ndarray:
    """1-based vertex indices of the quads of an nx by ny vertex grid"""
    idx = 1 + np.arange(nx * ny).reshape(nx, ny)
    return np.stack([
        idx[:-1, :-1], idx[1:, :-1], idx[1:, 1:], idx[:-1, 1:]
    ], axis=-1).reshape(-1, 4)

def export_obj(mesh:SurfaceMesh, path:str) -> int:
    """Write the mesh in the Poincare ball model as ASCII OBJ, returns the vertex count"""
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    vertices = to_poincare_ball(mesh.f).reshape(-1, 3)
    normals = ball_normals(mesh).reshape(-1, 3)
    faces = quad_faces(*mesh.shape)

    with open(path, 'w+') as f:
        f.write("# ball model, lambda = %r\n" % complex(mesh.lam))
        f.writelines("v %.12g %.12g %.12g\n" % tuple(p) for p in vertices)
        f.writelines("vn %.12g %.12g %.12g\n" % tuple(p) for p in normals)
        f.writelines("f %i//%i %i//%i %i//%i %i//%i\n" % tuple(np.repeat(q, 2)) for q in faces)
    return vertices.shape[0]
