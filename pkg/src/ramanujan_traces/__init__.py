"""Ramanujan's U_2t and V_2t as partition Eisenstein traces, computed and checked exactly."""

from .exactnum import CharacterSpec, bernoulli, character_value, chi_12, chi_minus4, sigma
from .partitions import Partition, cycle_index, enumerate_partitions, z_stat
from .qseries import QSeries, d_operator, eta_power, invert, pochhammer_inf, substitute_power
from .quasimodular import (
    PartitionWeight,
    PhiU,
    PhiV,
    QuasimodularPoly,
    eisenstein,
    expand,
    lambert_a,
    lambert_s,
    partition_eisenstein,
    phi_u,
    phi_v,
    trace,
    verify_ramanujan_odes,
)
from .reduce import E246Poly, k_table, modular_relation, to_e246
from .theta import oracle_u, oracle_v, r_series, theta

__version__ = "0.1.0"
