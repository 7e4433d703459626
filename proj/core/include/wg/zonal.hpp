#pragma once

#include "wg/matching.hpp"
#include "wg/partition.hpp"
#include "wg/polynomial.hpp"

namespace wg {

/// Zonal spherical function of the Gelfand pair (S_2n, H_n):
///   omega_lambda(beta) = (1/|H_n|) sum_{xi in H_n} chi_{2 lambda}(tau xi)
/// with tau any permutation of cosettype beta. Literal H_n averaging,
/// which caps n at 5 (|H_5| = 3840).
Rational zonal_spherical(const Partition& lambda, const Partition& beta, int bound = 5);

/// Z_lambda(1^N) = (1/(2^n n!)) sum_mu |K_mu| omega_lambda(mu) N^l(mu).
Polynomial zonal_principal(const Partition& lambda, int bound = 5);

/// Full omega table for weight n, cached on disk ("zonal-n<n>.json").
struct ZonalTable {
    int n;
    std::vector<Partition> index;
    std::vector<std::vector<Rational>> values;  // [lambda][beta]

    const Rational& at(const Partition& lambda, const Partition& beta) const;
};

const ZonalTable& zonal_table(int n, int bound = 5);

}  // namespace wg
