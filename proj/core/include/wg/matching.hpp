#pragma once

#include <array>
#include <string>
#include <vector>

#include "wg/permutation.hpp"

namespace wg {

/// Perfect matching on [n] u [n^]: n disjoint blocks of two labels,
/// stored canonically (each block ordered, blocks sorted by first label).
class Matching {
public:
    explicit Matching(int n, std::vector<std::pair<Label, Label>> blocks);

    /// {{1,1^},{2,2^},...}
    static Matching trivial(int n);

    int n() const { return n_; }
    const std::vector<std::pair<Label, Label>>& blocks() const { return blocks_; }

    /// Partner of a label within its block.
    Label partner(Label a) const;

    /// The fixed-point-free involution swapping each block.
    Permutation involution() const;

    bool operator==(const Matching& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
    bool operator<(const Matching& o) const { return blocks_ < o.blocks_; }

    std::string str() const;  // "{1,2h}{2,1h}..."

private:
    void canonicalize();
    int n_;
    std::vector<std::pair<Label, Label>> blocks_;
};

/// All (2n-1)!! matchings on [n] u [n^], deterministic order.
std::vector<Matching> matchings(int n);

/// Replace each block {a,b} by {sigma(a), sigma(b)}.
Matching act(const Permutation& sigma, const Matching& m);

/// Parts are half the cycle lengths of the union graph of the two
/// matchings. coset_type(m, trivial) is the usual cosettype; the
/// two-matching form feeds the orthogonal Gram pairing.
Partition coset_type(const Matching& m1, const Matching& m2);
Partition coset_type(const Matching& m);  // against trivial

/// Cosettype of a permutation: the cosettype of the matching it produces.
Partition coset_type(const Permutation& sigma);

/// All 2^n n! elements of the hyperoctahedral group H_n inside S_2n,
/// i.e. the stabilizer of the trivial matching. Guarded by a bound on n
/// because the list is exponential.
std::vector<Permutation> hyperoctahedral_elements(int n, int bound = 6);

/// Canonical matching of cosettype beta: blocks {a, hat(pi(a))} for the
/// standard permutation pi of cycletype beta.
Matching canonical_matching(const Partition& beta);

}  // namespace wg
