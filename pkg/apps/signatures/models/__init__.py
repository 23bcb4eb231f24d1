from apps.signatures.models.signature import Signature
from apps.signatures.models.feasibility import FeasibilityReport, FeasiblePair, GroupScreen
