from apps.surfaces.models.curve_model import CurveModel
from apps.surfaces.models.classification import ClassificationReport, PairSummary
