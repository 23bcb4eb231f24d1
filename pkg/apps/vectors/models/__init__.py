from apps.vectors.models.generating_vector import GeneratingVector
from apps.vectors.models.orbit_report import Extension, ExtensionStep, Orbit, OrbitReport
from apps.vectors.models.recipe import RestrictionRecipe, expand_shape
