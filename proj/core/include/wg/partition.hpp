#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wg/rational.hpp"

namespace wg {

/// Weakly decreasing sequence of positive integers. Indexes cycletypes,
/// cosettypes and irreducibles throughout.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }            // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }  // l(lambda)
    int rank() const { return weight_ - length(); }   // r(lambda)
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }

    /// Part multiplicities v_j, index j from 1 to weight.
    std::vector<int> multiplicities() const;

    /// Doubled partition (2*l1, 2*l2, ...).
    Partition doubled() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    /// Reverse-lexicographic: (n) first, (1^n) last. Canonical order for
    /// all enumeration output and cache keys.
    bool operator<(const Partition& o) const;

    /// Comma-joined parts: "2,1"; empty partition serializes as "".
    std::string str() const;
    static Partition parse(const std::string& s);

private:
    void validate() const;
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n with every part >= min_part, reverse-lexicographic.
/// n = 0 yields the single empty partition.
std::vector<Partition> partitions(int n, int min_part = 1);

/// z_lambda = prod_j j^{v_j} v_j!  (centralizer order of the cycletype).
Int z_of(const Partition& lambda);

/// |C_lambda| = n!/z_lambda.
Int class_size(const Partition& lambda);

/// |K_lambda| = |H_n| |C_lambda| 2^{r(lambda)} with |H_n| = 2^n n!.
Int double_coset_size(const Partition& lambda);

}  // namespace wg
