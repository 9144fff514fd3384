from direction_space.directions.asymptotic import AsymptoticVerdict, asymptotic
from direction_space.directions.delta import (
    DeltaPlusRow,
    DeltaPlusTable,
    DeltaReport,
    Verdict,
    delta_plus,
    delta_pseudometric,
)
from direction_space.directions.ray import Ray, ray_base
from direction_space.directions.report import (
    DirectionReport,
    boundary_orbit_probe,
    direction_report,
    moves_towards_infinity,
)

__all__ = [
    "AsymptoticVerdict",
    "asymptotic",
    "DeltaPlusRow",
    "DeltaPlusTable",
    "DeltaReport",
    "Verdict",
    "delta_plus",
    "delta_pseudometric",
    "Ray",
    "ray_base",
    "DirectionReport",
    "boundary_orbit_probe",
    "direction_report",
    "moves_towards_infinity",
]
