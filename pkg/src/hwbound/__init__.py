"""Dimensions and bounds for highest-weight modules of simple complex Lie algebras."""

from hwbound.rootsys import LieType, build

__version__ = "0.1.0"

__all__ = ["LieType", "build", "__version__"]
