#pragma once

#include <string>
#include <vector>

#include "wg/partition.hpp"

namespace wg {

/// Labels are signed integers: a > 0 is the plain label a, and -a is the
/// hatted label "a^". Hatting a label is negation, so the hat involution
/// on labels costs nothing.
using Label = int;

inline Label hat_label(Label a) { return -a; }
inline int forget_hat(Label a) { return a > 0 ? a : -a; }  // h(a)
inline bool is_hatted(Label a) { return a < 0; }

/// Canonical label order 1 < 1^ < 2 < 2^ < ... used for serialization.
inline int label_sort_key(Label a) { return 2 * (forget_hat(a) - 1) + (is_hatted(a) ? 1 : 0); }

std::string label_str(Label a);   // "3" or "3h"
Label parse_label(const std::string& s);

/// Bijection on either {1..k} (plain) or [n] u [n^] (hatted), stored as a
/// dense image array over the domain.
class Permutation {
public:
    Permutation() : hatted_(false), n_(0) {}  // identity on the empty domain

    /// Identity on {1..k}.
    static Permutation identity(int k);
    /// Identity on [n] u [n^].
    static Permutation identity_hatted(int n);
    /// Cycles are consecutive blocks of 1..|alpha| ordered by least element.
    static Permutation standard(const Partition& alpha);
    /// Build from explicit cycles over a plain domain {1..k}.
    static Permutation from_cycles(int k, const std::vector<std::vector<Label>>& cycles);
    /// Build from explicit cycles over the hatted domain [n] u [n^].
    static Permutation from_cycles_hatted(int n, const std::vector<std::vector<Label>>& cycles);

    bool hatted() const { return hatted_; }
    int domain_parameter() const { return n_; }  // k (plain) or n (hatted)
    int domain_size() const { return hatted_ ? 2 * n_ : n_; }
    std::vector<Label> domain() const;

    Label apply(Label a) const;
    Label operator()(Label a) const { return apply(a); }

    Permutation inverse() const;
    /// x -> this(other(x)); right-to-left multiplication, so
    /// compose((13),(12)) is (123).
    Permutation compose(const Permutation& other) const;

    std::vector<std::vector<Label>> cycles(bool include_fixed = false) const;
    Partition cycletype() const;
    int cycle_count() const;  // l(sigma), fixed points included

    /// Embed a plain permutation into the hatted domain of the same n,
    /// fixing every hatted label.
    Permutation to_hatted() const;

    /// Conjugated inverse a -> hat(sigma^{-1}(hat(a))). This is the
    /// involution fixing exactly the palindromic permutations; the raw
    /// map a -> sigma^{-1}(hat(a)) is not an involution.
    Permutation hat() const;
    bool is_palindromic() const;

    bool operator==(const Permutation& o) const {
        return hatted_ == o.hatted_ && n_ == o.n_ && img_ == o.img_;
    }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// Cycle notation, fixed points omitted: "(1 2)(3 4h)"; identity is "()".
    std::string str() const;

private:
    Permutation(bool hatted, int n) : hatted_(hatted), n_(n), img_(hatted ? 2 * n : n) {}
    int index_of(Label a) const;
    Label label_at(int idx) const;

    bool hatted_ = false;
    int n_ = 0;
    std::vector<Label> img_;

    friend class PermutationBuilder;
};

/// Mutable image-array view for hot enumeration loops; finalizes into a
/// Permutation with validation.
class PermutationBuilder {
public:
    PermutationBuilder(bool hatted, int n);
    void set(Label a, Label b);
    Permutation finish() const;

private:
    Permutation p_;
};

}  // namespace wg
