#pragma once

#include <map>

#include "wg/partition.hpp"
#include "wg/polynomial.hpp"

namespace wg {

/// Irreducible S_n character chi_lambda(mu), |lambda| = |mu|, by the
/// Murnaghan-Nakayama recursion on beta-numbers, memoized in-process and
/// persisted per n through the table builder below.
long long character(const Partition& lambda, const Partition& mu);

inline long long character_dimension(const Partition& lambda) {
    return character(lambda, Partition(std::vector<int>(lambda.weight(), 1)));
}

/// Full table for S_n: values[lambda][mu] over partitions(n) in canonical
/// order. Built once per n (disk cache under the configured cache dir,
/// file "characters-n<n>.json"), then served read-only.
struct CharacterTable {
    int n;
    std::vector<Partition> index;                 // partitions(n), canonical order
    std::vector<std::vector<long long>> values;   // [lambda][mu]

    long long at(const Partition& lambda, const Partition& mu) const;
};

const CharacterTable& character_table(int n);

/// s_lambda(1^N) = (1/n!) sum_mu |C_mu| chi_lambda(mu) N^l(mu).
Polynomial schur_principal(const Partition& lambda);

}  // namespace wg
