"""Character degree graphs, odd dominating sets of their complements, and
certificates for the three equivalent disconnectedness conditions."""

from .arith import DomainError, as_prime_power, factorize, is_prime, prime_divisors
from .degrees import (
    DegreeMultiset,
    abelian,
    direct_product,
    gen_pgl2,
    gen_psl2,
    gen_sl2,
    load_corpus,
    save_corpus,
)
from .domination import (
    DominationCertificate,
    domination_number,
    is_dominating,
    minimum_odd_dominating_set,
)
from .graph import (
    BipartiteCertificate,
    BlockDecomposition,
    PrimeGraph,
    block_decomposition,
    build_character_graph,
    complement,
    connected_components,
    is_bipartite,
    odd_cycle_vertices,
)
from .theorem import (
    CycleWitness,
    TheoremReport,
    alternation_check,
    check_equivalence,
    condition_a,
    condition_b,
    condition_c,
    find_psl2_witness,
)

__version__ = "0.1.0"
