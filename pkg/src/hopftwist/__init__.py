"""Exact Hopf algebras, twisted tensor products and invariance under twisting."""
from .algebra import (Algebra, Coalgebra, ComoduleAlgebra, HopfAlgebra, certify_algebra, certify_hopf,
                      check_comodule_algebra, convolution_inverse, dual_hopf)
from .constructions import (SqtElement, builtin_hopf, drinfeld_double, group_algebra, kC2, kC2xC2, named_r,
                            regular_comodule, smash_product, sweedler_h4, trivial_comodule)
from .errors import (CertificationError, HopfTwistError, InputError, InternalConsistencyError,
                     NotConvolutionInvertible, NotInvertible)
from . import kernels
from .field import GF, Q, Field
from .invariance import (InvarianceData, StarData, build_isomorphism, build_star_algebra,
                         check_invariance_hypotheses, check_star_hypotheses, derive_twisted_map)
from .linmap import LinMap, compose, flip, identity, tensor
from .pipelines import (NuTwist, c_deformation, comodule_twist_pipeline, homogenization_pipeline,
                        sqt_double_pipeline, trivial_nu)
from .report import Report
from .twisting import TwistingData, build_twisted_product, check_twisting_axioms

__version__ = "0.1.0"
