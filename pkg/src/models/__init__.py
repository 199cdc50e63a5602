from src.models.base import MatrixBacked

from .quiver import Quiver, Seed, VertexColor
from .triangulation import InscribedPolygon, Triangulation

__all__ = [
    "MatrixBacked",
    "Quiver",
    "Seed",
    "VertexColor",
    "Triangulation",
    "InscribedPolygon",
]
