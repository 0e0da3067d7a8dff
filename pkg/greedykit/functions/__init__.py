from greedykit.functions.facility import FacilityFunction, FacilityMatrix, facility_eval
from greedykit.functions.modular import ModularFunction, ModularWeights, modular_eval
from greedykit.functions.tabulated import CallableFunction, TabulatedFunction

__all__ = [
    "CallableFunction",
    "FacilityFunction",
    "FacilityMatrix",
    "ModularFunction",
    "ModularWeights",
    "TabulatedFunction",
    "facility_eval",
    "modular_eval",
]
