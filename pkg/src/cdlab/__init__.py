"""Diamond products of ab- and cd-polynomials, their lattice path expansions,
and the Eulerian posets they come from."""

from .coalg import TensorPolynomial, coproduct, coproduct_ab, coproduct_cd, derivation_G, pyr
from .diamond import diamond, diamond_ab, diamond_cd
from .latpaths import (
    AxisLabeling,
    LatticePath,
    Step,
    enumerate_gamma,
    enumerate_lambda,
    enumerate_omega,
    parse_path,
    pi,
    render_paths,
    sum_weights,
    sum_weights_ab,
    sum_weights_cd,
    tau,
    weight_ab,
    weight_cd,
    weight_lambda,
)
from .ncalg import (
    AB,
    CD,
    Alphabet,
    AlphabetMismatch,
    NcPolynomial,
    NotExpressible,
    PolynomialSyntaxError,
    convert_ab_to_cd,
    expand_cd_to_ab,
    multiply,
    parse_polynomial,
)
from .poset import (
    FlagVector,
    GradedPoset,
    ab_index,
    cartesian_product,
    cd_index,
    diamond_product_poset,
    flag_f_vector,
    flag_h_vector,
    generate,
    is_eulerian,
    mobius,
    prism_poset,
    pyramid_poset,
)

__version__ = "0.1.0"
