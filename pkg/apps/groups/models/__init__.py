from apps.groups.models.finite_group import FiniteGroup, GroupHom, SplitStructure
from apps.groups.models.group_spec import (
    AccolaMaclachlanGroup,
    AllOfOrderLambdaQ,
    Alternating4,
    Cyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    Quaternion8,
    SemidirectCqC4,
    parse_group_spec,
)
