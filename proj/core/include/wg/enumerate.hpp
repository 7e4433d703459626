#pragma once

#include <map>
#include <vector>

#include "wg/laurent.hpp"
#include "wg/partition.hpp"
#include "wg/permutation.hpp"

namespace wg {

/// One factorization Pi = tau1 tau2 contributing to the unitary map
/// expansion: Pi = pi * rho with rho a standard fixed-point-free
/// complement on {n+1..n+m}, and every cycle of tau1 and tau2 holding
/// exactly one of the marked labels {1..n}.
struct UnitaryFactorization {
    int m = 0;
    Partition rho_type;
    Permutation rho, Pi, tau1, tau2;
    int chi = 0;
};

/// One configuration (Pi, theta) contributing to the orthogonal map
/// expansion. theta is a fixed-point-free involution on the hatted
/// domain of {1..n+m}; f1 = theta p1 is palindromic with 2n cycles, each
/// holding one marked label of [n] u [n^], and f2 = p2 theta likewise.
/// chi counts faces per hat-pair of f-cycles; chi_literal adds the full
/// cycle counts of f1 and f2 instead.
struct OrthogonalConfiguration {
    int m = 0;
    Partition rho_type;
    Permutation rho, Pi;          // plain, on {1..n+m}
    Permutation theta, f1, f2;    // hatted, on [n+m] u [n+m]^
    int chi = 0;
    int chi_literal = 0;
};

/// Complete F(pi, chi) for pi standard of cycletype alpha. Odd chi is
/// empty (orientable maps have even characteristic). Work is guarded by
/// a complement-size bound derived from chi.
std::vector<UnitaryFactorization> enumerate_unitary(const Partition& alpha, int chi);

/// S_chi = sum over F(pi,chi) of (-1)^l(rho) / z_rho.
Rational unitary_chi_coefficient(const Partition& alpha, int chi);

/// Sum-rule weighting: sum of (-1)^l(Pi) / z_rho over F(pi,chi).
Rational unitary_signed_vertex_sum(const Partition& alpha, int chi);

/// Census: complement cycletype -> (number of factorizations) / z_rho;
/// the division must be exact, which doubles as an enumeration check.
std::map<Partition, Int> unitary_map_census(const Partition& alpha, int chi);

/// Partial map-expansion series sum_{chi >= chi_min} N^(chi-2n-l) *
/// (-1)^l(alpha) * [(-1)^l(Pi)-weighted census sum]; agrees with the
/// character-route expansion on all covered orders.
LaurentSeries unitary_map_series(const Partition& alpha, int chi_min);

/// Complete NF(beta, chi).
std::vector<OrthogonalConfiguration> enumerate_orthogonal(const Partition& beta, int chi);

/// T_chi = sum over NF(beta,chi) of (1/z_rho) (-1/2)^l(Pi).
Rational orthogonal_chi_coefficient(const Partition& beta, int chi);

std::map<Partition, Int> orthogonal_map_census(const Partition& beta, int chi);

/// (-2)^l(beta) N^(chi-2n-l) partial series; agrees with the shifted
/// orthogonal expansion on all covered orders.
LaurentSeries orthogonal_map_series(const Partition& beta, int chi_min);

}  // namespace wg
