#include <doctest.h>

#include "wg/gram.hpp"
#include "wg/laurent.hpp"
#include "wg/weingarten.hpp"

using namespace wg;

namespace {

RationalFunction one_over(std::initializer_list<long> roots) {
    Polynomial den = Polynomial::constant(Rational(1));
    for (long r : roots) den = den * Polynomial{Rational(-r), Rational(1)};
    return RationalFunction(Polynomial::constant(Rational(1)), den);
}

}  // namespace

TEST_CASE("unitary closed forms") {
    CHECK(wg_unitary(Partition{2}) == -one_over({1, 0, -1}));
    CHECK(wg_unitary(Partition{1}) == one_over({0}));
    CHECK(wg_unitary(Partition{1, 1}) == one_over({1, -1}));
}

TEST_CASE("orthogonal closed forms") {
    CHECK(wg_orthogonal(Partition{2}) == -one_over({1, 0, -2}));
    CHECK(wg_orthogonal_shifted(Partition{2}) == -one_over({0, -1, -3}));
    CHECK(wg_orthogonal(Partition{1}) == one_over({0}));
}

TEST_CASE("gram oracle values") {
    CHECK(gram_wg_unitary(Partition{2}, 3) == Rational(-1, 24));
    CHECK(gram_wg_unitary(Partition{1}, 7) == Rational(1, 7));
    CHECK(gram_wg_unitary(Partition{1, 1}, 3) == Rational(1, 8));
    CHECK(gram_wg_orthogonal(Partition{2}, 5) == Rational(-1, 140));
    CHECK(gram_wg_orthogonal(Partition{1}, 4) == Rational(1, 4));
    CHECK(gram_wg_orthogonal(Partition{1, 1}, 5) ==
          wg_orthogonal(Partition{1, 1}).evaluate(Rational(5)));
}

TEST_CASE("character route equals gram oracle") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& alpha : partitions(n)) {
            RationalFunction w = wg_unitary(alpha);
            for (long N = n; N <= n + 2; ++N)
                CHECK(w.evaluate(Rational(N)) == gram_wg_unitary(alpha, N));
        }
    for (int n = 1; n <= 3; ++n)
        for (const Partition& beta : partitions(n)) {
            RationalFunction w = wg_orthogonal(beta);
            for (long N = 2 * n; N <= 2 * n + 1; ++N)
                CHECK(w.evaluate(Rational(N)) == gram_wg_orthogonal(beta, N));
        }
}

TEST_CASE("gram oracle rejects degenerate dimensions") {
    CHECK_THROWS_AS(gram_wg_unitary(Partition{2}, 1), std::invalid_argument);
    // all-ones pairing matrix at N=1 is singular
    CHECK_THROWS_AS(gram_wg_orthogonal(Partition{2}, 1), std::domain_error);
}

TEST_CASE("leading moments positive") {
    for (int n = 1; n <= 4; ++n) {
        Partition ones(std::vector<int>(n, 1));
        RationalFunction w = wg_unitary(ones);
        for (long N = n; N <= n + 3; ++N) CHECK(w.evaluate(Rational(N)) > 0);
    }
}

TEST_CASE("denominator poles are small integers") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& alpha : partitions(n)) {
            auto roots = wg_unitary(alpha).denominator().integer_roots();
            int total = 0;
            for (auto& [root, mult] : roots) {
                CHECK(root >= -(n - 1));
                CHECK(root <= n - 1);
                total += mult;
            }
            CHECK(total == wg_unitary(alpha).denominator().degree());
        }
        for (const Partition& beta : partitions(std::min(n, 3))) {
            auto roots = wg_orthogonal(beta).denominator().integer_roots();
            int m = beta.weight();
            int total = 0;
            for (auto& [root, mult] : roots) {
                CHECK(root >= -2 * (m - 1));
                CHECK(root <= m - 1);
                total += mult;
            }
            CHECK(total == wg_orthogonal(beta).denominator().degree());
        }
    }
}

TEST_CASE("series parity of the two-cycle expansion") {
    LaurentSeries s = laurent_expand(wg_unitary(Partition{2}), 7);
    CHECK(s.coefficient(4) == Rational(0));
    CHECK(s.coefficient(6) == Rational(0));
    CHECK(s.coefficient(3) == Rational(-1));
    CHECK(s.coefficient(5) == Rational(-1));
    CHECK(s.coefficient(7) == Rational(-1));
}

TEST_CASE("value depends only on the partition") {
    WeingartenResult r = weingarten(Group::OrthogonalShifted, Partition{2});
    CHECK(r.value == wg_orthogonal_shifted(Partition{2}));
    CHECK(r.index == Partition{2});
}
