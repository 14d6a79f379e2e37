"""Exact bipartite partition counts with steadily decreasing parts,
crank tables, cubic partitions, and their uniform asymptotics."""

from .asymptotics import (
    C,
    KAPPA,
    LogValue,
    asym_D,
    asym_M,
    asym_c,
    asym_p,
    asym_pi,
    f_saddle,
    log_of_bigint,
)
from .bipartite import (
    AlphaCache,
    BipartiteTable,
    SteadyPair,
    alpha,
    build_pi_table,
    d_value,
    d_value_by_difference,
    enumerate_steady,
    gf_table,
    pi_value,
)
from .crank import (
    CrankTable,
    build_crank_columns,
    build_crank_table,
    build_crank_table_lambert,
    crank_column,
    crank_counts_by_enumeration,
    crank_of,
    crank_value_direct,
    partitions_of,
)
from .formatting import ratio_string, sci_from_int, sci_from_log
from .partitions import (
    CubicTable,
    PartitionTable,
    build_c_table,
    build_p_table,
    c_values_via_convolution,
    p_values_via_inversion,
)
from .series import (
    BigSeries,
    BiSeries,
    LaurentQSeries,
    bi_divide_by_binomial,
    bi_mul,
    euler_product,
    invert,
    mul,
)

__version__ = "0.1.0"
