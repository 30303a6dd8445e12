"""Exact checkers for Hopf algebras, Yetter-Drinfeld data and relative Hopf modules."""

from .tensorlin import Field, GF, Q, LinearMap
from .report import CheckReport, Verdict
from .hopfcore import (AlgebraData, BialgebraData, CoalgebraData, HopfData, RMatrix,
                       SigmaForm, check_bialgebra, check_hopf, check_quasitriangular,
                       check_coquasitriangular, antipode_inverse)
from .transmute import (BraidedBialgebraData, enveloping_braided_group,
                        function_braided_group, check_yd_bialgebra)
from .monoidal import (MonoidalInputDatum, DatumError, check_theorem_2_1,
                       check_monoidal_conditions, check_trivial_action_doi_hopf)

__version__ = "0.1.0"

__all__ = [
    "Field", "GF", "Q", "LinearMap", "CheckReport", "Verdict",
    "AlgebraData", "BialgebraData", "CoalgebraData", "HopfData", "RMatrix", "SigmaForm",
    "check_bialgebra", "check_hopf", "check_quasitriangular", "check_coquasitriangular",
    "antipode_inverse", "BraidedBialgebraData", "enveloping_braided_group",
    "function_braided_group", "check_yd_bialgebra", "MonoidalInputDatum", "DatumError",
    "check_theorem_2_1", "check_monoidal_conditions", "check_trivial_action_doi_hopf",
]
