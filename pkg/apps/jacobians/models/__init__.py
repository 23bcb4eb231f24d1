from apps.jacobians.models.decomposition import (
    AnalyticDecomposition,
    IsogenyDecomposition,
    IsogenyFactor,
    NsReport,
)
