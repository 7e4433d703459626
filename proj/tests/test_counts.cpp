#include <doctest.h>

#include <algorithm>

#include "wg/counts.hpp"
#include "wg/weingarten.hpp"

using namespace wg;

namespace {

/// Exhaustive proper-factorization oracle: all k-tuples of non-identity
/// permutations in S_n with the given product and depth.
long long proper_brute(const Partition& alpha, int k, int d) {
    int n = alpha.weight();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> nonid;
    do {
        PermutationBuilder b(false, n);
        for (int i = 0; i < n; ++i) b.set(i + 1, img[i]);
        Permutation p = b.finish();
        if (!(p == Permutation::identity(n))) nonid.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));

    Permutation target = Permutation::standard(alpha);
    long long count = 0;
    auto rec = [&](auto&& self, int slot, const Permutation& acc, int depth) -> void {
        if (slot == k) {
            if (depth == d && acc == target) ++count;
            return;
        }
        for (const Permutation& f : nonid) {
            int r = n - f.cycle_count();
            if (depth + r > d) continue;
            self(self, slot + 1, acc.compose(f), depth + r);
        }
    };
    rec(rec, 0, Permutation::identity(n), 0);
    return count;
}

}  // namespace

TEST_CASE("monotone counts, small targets") {
    CountTable m1 = monotone_counts(Partition{1}, 6);
    CHECK(m1.at(0) == Rational(1));
    for (int k = 1; k <= 6; ++k) CHECK(m1.at(k) == Rational(0));

    CountTable m2 = monotone_counts(Partition{2}, 6);
    for (int k : {1, 3, 5}) CHECK(m2.at(k) == Rational(1));
    for (int k : {0, 2, 4, 6}) CHECK(m2.at(k) == Rational(0));

    CountTable m11 = monotone_counts(Partition{1, 1}, 4);
    CHECK(m11.at(0) == Rational(1));
    CHECK(m11.at(2) == Rational(1));
    CHECK(m11.at(4) == Rational(1));
}

TEST_CASE("monotone parity") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& alpha : partitions(n)) {
            CountTable t = monotone_counts(alpha, 7);
            for (int k = 0; k <= 7; ++k)
                if ((k - alpha.rank()) % 2 != 0) CHECK(t.at(k) == Rational(0));
        }
}

TEST_CASE("monotone series equals the character route") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& alpha : partitions(n)) {
            int order = n + 8;
            LaurentSeries mono = monotone_series(alpha, order);
            LaurentSeries chr = laurent_expand(wg_unitary(alpha), order);
            for (int k = mono.leading_exponent(); k <= order; ++k)
                CHECK(mono.coefficient(k) == chr.coefficient(k));
        }
}

TEST_CASE("proper counts against brute force") {
    // parity kills P^{2,2} of a transposition; the formula must agree
    CHECK(proper_count(Partition{2}, 1, 1) == Rational(1));
    CHECK(proper_count(Partition{2}, 2, 2) == Rational(0));
    CHECK(proper_brute(Partition{2}, 2, 2) == 0);
    CHECK(proper_count(Partition{3}, 2, 2) == Rational(3));
    CHECK(proper_brute(Partition{3}, 2, 2) == 3);

    for (int n = 2; n <= 3; ++n)
        for (const Partition& alpha : partitions(n))
            for (int k = 1; k <= 3; ++k)
                for (int d = k; d <= 4; ++d)
                    CHECK(proper_count(alpha, k, d) ==
                          Rational(to_int(proper_brute(alpha, k, d))));
}

TEST_CASE("proper integrality and the alternating identity") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& alpha : partitions(n)) {
            CountTable mono = monotone_counts(alpha, 4);
            for (int d = 1; d <= 4; ++d) {
                Rational alt(0);
                for (int k = 1; k <= d; ++k) {
                    Rational p = proper_count(alpha, k, d);
                    CHECK(is_integer(p));
                    CHECK(p >= 0);
                    alt += (k % 2 ? -p : p);
                }
                int sign = (n + alpha.length()) % 2 ? -1 : 1;
                CHECK(alt == Rational(sign) * mono.at(d));
            }
        }
}

TEST_CASE("proper series reconstructs the unitary expansion") {
    for (int n = 1; n <= 3; ++n)
        for (const Partition& alpha : partitions(n)) {
            int order = n + 4;
            LaurentSeries ps = proper_series(alpha, order);
            LaurentSeries chr = laurent_expand(wg_unitary(alpha), order);
            for (int k = ps.leading_exponent(); k <= order; ++k)
                CHECK(ps.coefficient(k) == chr.coefficient(k));
        }
}

TEST_CASE("matching-monotone counts") {
    CountTable m1 = matching_monotone_counts(Partition{1}, 6);
    CHECK(m1.at(0) == Rational(1));
    for (int k = 1; k <= 6; ++k) CHECK(m1.at(k) == Rational(0));

    CountTable m2 = matching_monotone_counts(Partition{2}, 6);
    CHECK(m2.at(1) == Rational(1));
    CHECK(m2.at(2) == Rational(1));
    CHECK(m2.at(3) == Rational(3));
    CHECK(m2.at(4) == Rational(5));

    CountTable m11 = matching_monotone_counts(Partition{1, 1}, 4);
    CHECK(m11.at(0) == Rational(1));
}

TEST_CASE("matching-monotone series identity") {
    // Wg^O_N(beta) = sum_k (-1)^k Mt^k N^{-n-k}
    for (int n = 1; n <= 3; ++n)
        for (const Partition& beta : partitions(n)) {
            int order = n + 6;
            CountTable t = matching_monotone_counts(beta, 6);
            LaurentSeries chr = laurent_expand(wg_orthogonal(beta), order);
            for (int k = 0; k <= 6; ++k) {
                Rational expect = (k % 2 ? -chr.coefficient(n + k) : chr.coefficient(n + k));
                CHECK(t.at(k) == expect);
            }
        }
}

TEST_CASE("matching-monotone target independence within a cosettype") {
    for (int n = 2; n <= 3; ++n)
        for (const Partition& beta : partitions(n)) {
            CountTable reference = matching_monotone_counts(beta, 5);
            for (const Matching& m : matchings(n)) {
                if (!(coset_type(m) == beta)) continue;
                CountTable t = matching_monotone_counts(beta, 5, m);
                for (int k = 0; k <= 5; ++k) CHECK(t.at(k) == reference.at(k));
            }
        }
}

TEST_CASE("palindromic-monotone calibration") {
    CHECK(calibrate_palindromic_convention() == HatOrder::HatLowInterleaved);

    CountTable t = palindromic_monotone_counts(Partition{2}, 4);
    CHECK(t.convention == "hat-low-interleaved");
    CHECK(t.at(1) == Rational(1));
    CHECK(t.at(2) == Rational(4));
    CHECK(t.at(3) == Rational(13));
    CHECK(t.at(4) == Rational(40));  // fixed by the +40 series coefficient

    CountTable one = palindromic_monotone_counts(Partition{1}, 5);
    for (int k = 0; k <= 5; ++k) CHECK(one.at(k) == Rational(1));
}

TEST_CASE("palindromic-monotone series identity") {
    // Wg^O_{N+1}(beta) = sum_k (-1)^k Mh^k N^{-n-k}
    for (int n = 1; n <= 3; ++n)
        for (const Partition& beta : partitions(n)) {
            int order = n + 5;
            CountTable t = palindromic_monotone_counts(beta, 5);
            LaurentSeries chr = laurent_expand(wg_orthogonal_shifted(beta), order);
            for (int k = 0; k <= 5; ++k) {
                Rational expect = (k % 2 ? -chr.coefficient(n + k) : chr.coefficient(n + k));
                CHECK(t.at(k) == expect);
            }
        }
}

TEST_CASE("orthogonal proper counts") {
    CHECK(orthogonal_proper_count(Partition{2}, 1, 0) == Rational(0));
    Rational p11 = orthogonal_proper_count(Partition{2}, 1, 1);
    CHECK(is_integer(p11));

    for (int n = 1; n <= 3; ++n)
        for (const Partition& beta : partitions(n)) {
            int order = n + 3;
            LaurentSeries ps = orthogonal_proper_series(beta, order);
            LaurentSeries chr = laurent_expand(wg_orthogonal(beta), order);
            for (int k = ps.leading_exponent(); k <= order; ++k)
                CHECK(ps.coefficient(k) == chr.coefficient(k));
        }
}

TEST_CASE("count table serialization fields") {
    CountTable t = palindromic_monotone_counts(Partition{2}, 2);
    CHECK(family_name(t.family) == "palindromic-monotone");
    CHECK(t.index == Partition{2});
    CHECK(!t.convention.empty());
}
