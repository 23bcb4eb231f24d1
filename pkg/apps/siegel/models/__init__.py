from apps.siegel.models.symplectic import SiegelPoint, SymplecticMatrix, standard_form
from apps.siegel.models.fixed_point_report import FixedPointReport
