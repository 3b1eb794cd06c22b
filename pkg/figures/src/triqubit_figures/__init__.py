from .io import FigureDataError
from .render import FIGURES, render

__version__ = "0.1.0"

__all__ = ["FIGURES", "FigureDataError", "render", "__version__"]
