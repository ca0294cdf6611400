"""Reciprocal distance (Harary) energy of complete multipartite graphs.

Spectra and energies of six graph matrices, quotient-matrix fast paths for
complete multipartite graphs, and scanners for the extremal and
edge-deletion behaviour of the reciprocal distance energy.
"""

from .closed_forms import (EMatrixSpec, ReducedQuotient, cd_energy_multipartite,
                           descartes_positive_bound, distance_energy_multipartite,
                           e_matrix_spectrum, kmn_minus_edge_spectrum,
                           kpqr_minus_edge_spectrum, kqq_minus_edge_energy,
                           multipartite_energy, rcd_energy_multipartite,
                           rd_energy_multipartite, rd_lambda1_bipartite,
                           seidel_energy_multipartite)
from .eigen import (EnergyReport, Method, Spectrum, eig_sym, eigh_sym, energy, inertia,
                    negative_part_sum)
from .errors import (DisconnectedGraph, InternalInconsistency, InvalidBlockSpec,
                     NoSuchEdge, NotSymmetric, PreconditionViolated, RDEnergyError)
from .extremal import (balance, edge_deletion_sweep, partitions, perron_part_components, scan,
                       shift, transfer)
from .graphs import (DistanceMatrix, Graph, PartitionSpec, apsp, complete_multipartite,
                     complete_split, delete_edge, read_edge_list, turan)
from .matrices import (MatrixKind, adjacency, complementary_distance, distance,
                       reciprocal_complementary_distance, reciprocal_distance, seidel)
from .quotient import (BlockSpec, CaseLabel, assemble_dense, assemble_spectrum,
                       build_quotient, classify_case, energy_via_cases, validate_blocks)

__version__ = "0.1.0"
