"""Core computational layer: root data, Weyl groups, characters, slopes and Newton polygons."""

from .errors import CousinError
from .models import Coweight, SlopeVector, Weight
from .presets import get_preset
from .root_datum import LeviDatum, RootDatum

__all__ = ["CousinError", "Coweight", "LeviDatum", "RootDatum", "SlopeVector", "Weight", "get_preset"]
