#include "wg/gram.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wg/matching.hpp"
#include "wg/permutation.hpp"

namespace wg {
namespace {

/// Exact Gaussian elimination; solves A x = b over the rationals.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular Gram matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Rational inv = Rational(1) / a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

Rational int_power(long N, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= N;
    return r;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    std::vector<Permutation> out;
    do {
        PermutationBuilder b(false, n);
        for (int i = 0; i < n; ++i) b.set(i + 1, img[i]);
        out.push_back(b.finish());
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

Rational gram_wg_unitary(const Partition& alpha, long N, int bound) {
    int n = alpha.weight();
    if (n < 1 || n > bound) throw std::invalid_argument("gram_wg_unitary bound exceeded");
    if (N < n) throw std::invalid_argument("gram_wg_unitary needs N >= n");
    auto perms = all_permutations(n);
    size_t sz = perms.size();
    std::vector<std::vector<Rational>> g(sz, std::vector<Rational>(sz));
    std::vector<Permutation> inverses;
    inverses.reserve(sz);
    for (const auto& p : perms) inverses.push_back(p.inverse());
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
            g[i][j] = int_power(N, perms[i].compose(inverses[j]).cycle_count());

    Permutation id = Permutation::identity(n);
    std::vector<Rational> e(sz, Rational(0));
    for (size_t i = 0; i < sz; ++i)
        if (perms[i] == id) e[i] = 1;
    std::vector<Rational> x = solve(std::move(g), std::move(e));

    Permutation pi = Permutation::standard(alpha);
    for (size_t i = 0; i < sz; ++i)
        if (perms[i] == pi) return x[i];
    throw std::logic_error("standard permutation not found");
}

Rational gram_wg_orthogonal(const Partition& beta, long N, int bound) {
    int n = beta.weight();
    if (n < 1 || n > bound) throw std::invalid_argument("gram_wg_orthogonal bound exceeded");
    auto ms = matchings(n);
    size_t sz = ms.size();
    std::vector<std::vector<Rational>> g(sz, std::vector<Rational>(sz));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
            g[i][j] = int_power(N, coset_type(ms[i], ms[j]).length());

    Matching t = Matching::trivial(n);
    std::vector<Rational> e(sz, Rational(0));
    for (size_t i = 0; i < sz; ++i)
        if (ms[i] == t) e[i] = 1;
    std::vector<Rational> x = solve(std::move(g), std::move(e));

    Matching target = canonical_matching(beta);
    for (size_t i = 0; i < sz; ++i)
        if (ms[i] == target) return x[i];
    throw std::logic_error("target matching not found");
}

}  // namespace wg
