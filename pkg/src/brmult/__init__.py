"""Exact multiplicities over the local ring k[x,y] localized at (x, y).

Ideals and column spans of polynomial matrices carry Hilbert-Samuel and
Buchsbaum-Rim multiplicities; this package computes both by several
independent routes (general reductions, power colengths, Newton areas,
linkage chains, Bourbaki ideals) and insists that the routes agree.
"""

from .bourbaki import (
    assume_pipeline,
    bourbaki_pair,
    br_all_rank,
    br_by_bourbaki,
    dependence_example,
)
from .fields import QQ, PrimeField
from .ideals import Ideal, maximal_ideal
from .jones import (
    JonesInstance,
    jones_br,
    jones_classify,
    jones_module,
    jones_sweep,
)
from .linkage import (
    LinkChain,
    auslander_chain,
    br_by_links,
    colength_by_links,
    link_chain,
    submatrix_chain,
)
from .modules import (
    Presentation,
    buchsbaum_rim,
    is_reduction,
    lambda_value,
    random_module,
)
from .monomial import MonomialIdeal, colength_by_fittings, hilbert_burch
from .multiplicity import minimal_reduction, multiplicity
from .poly import Polynomial
from .sampling import GeneralSampler, random_monomial_ideal
from .svgfig import staircase_svg

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "GeneralSampler",
    "Ideal",
    "JonesInstance",
    "LinkChain",
    "MonomialIdeal",
    "Polynomial",
    "Presentation",
    "PrimeField",
    "assume_pipeline",
    "auslander_chain",
    "bourbaki_pair",
    "br_all_rank",
    "br_by_bourbaki",
    "br_by_links",
    "buchsbaum_rim",
    "colength_by_fittings",
    "colength_by_links",
    "dependence_example",
    "hilbert_burch",
    "is_reduction",
    "jones_br",
    "jones_classify",
    "jones_module",
    "jones_sweep",
    "lambda_value",
    "link_chain",
    "maximal_ideal",
    "minimal_reduction",
    "multiplicity",
    "random_module",
    "random_monomial_ideal",
    "staircase_svg",
    "submatrix_chain",
]
