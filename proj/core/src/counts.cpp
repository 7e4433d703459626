#include "wg/counts.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "wg/characters.hpp"
#include "wg/weingarten.hpp"
#include "wg/zonal.hpp"

namespace wg {

std::string family_name(CountFamily f) {
    switch (f) {
        case CountFamily::Monotone: return "monotone";
        case CountFamily::Proper: return "proper";
        case CountFamily::MatchingMonotone: return "matching-monotone";
        case CountFamily::PalindromicMonotone: return "palindromic-monotone";
        case CountFamily::OrthogonalProper: return "orthogonal-proper";
    }
    throw std::logic_error("unknown family");
}

std::string hat_order_name(HatOrder o) {
    switch (o) {
        case HatOrder::HatLowInterleaved: return "hat-low-interleaved";
        case HatOrder::HatHighInterleaved: return "hat-high-interleaved";
        case HatOrder::UnhattedFirstBlocks: return "unhatted-first-blocks";
        case HatOrder::HattedFirstBlocks: return "hatted-first-blocks";
    }
    throw std::logic_error("unknown order");
}

Rational CountTable::at(int k, int d) const {
    auto it = entries.find({k, d});
    return it == entries.end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------- monotone

namespace {

int cycle_count_raw(const std::vector<int>& img) {
    int n = static_cast<int>(img.size());
    int count = 0;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++count;
        for (int x = i; !seen[x]; x = img[x]) seen[x] = true;
    }
    return count;
}

struct MonotoneSearch {
    int n, k_max;
    std::vector<int> target;     // pi as 0-indexed image array
    std::vector<int> cur, icur;  // partial product and its inverse
    std::vector<Int> counts;

    void run() {
        counts.assign(k_max + 1, Int(0));
        cur.resize(n);
        icur.resize(n);
        for (int i = 0; i < n; ++i) cur[i] = icur[i] = i;
        dfs(0, 2);
    }

    // rank of cur^{-1} * pi = minimum transpositions still required
    int deficit() const {
        std::vector<int> psi(n);
        for (int x = 0; x < n; ++x) psi[x] = icur[target[x]];
        return n - cycle_count_raw(psi);
    }

    void dfs(int depth, int t_min) {
        if (cur == target) ++counts[depth];
        if (depth == k_max) return;
        if (deficit() > k_max - depth) return;
        for (int t = t_min; t <= n; ++t) {
            for (int s = 1; s < t; ++s) {
                apply(s - 1, t - 1);
                dfs(depth + 1, t);
                apply(s - 1, t - 1);
            }
        }
    }

    // append transposition on the right: cur <- cur o (s t)
    void apply(int s, int t) {
        std::swap(cur[s], cur[t]);
        icur[cur[s]] = s;
        icur[cur[t]] = t;
    }
};

}  // namespace

CountTable monotone_counts(const Partition& alpha, int k_max) {
    if (alpha.weight() > 6 || k_max > 12)
        throw std::invalid_argument("monotone_counts bounds exceeded");
    int n = alpha.weight();
    MonotoneSearch search;
    search.n = n;
    search.k_max = k_max;
    search.target.resize(n);
    Permutation pi = Permutation::standard(alpha);
    for (int x = 1; x <= n; ++x) search.target[x - 1] = pi(x) - 1;
    search.run();

    CountTable t{CountFamily::Monotone, alpha, {}, ""};
    for (int k = 0; k <= k_max; ++k) {
        Rational v(search.counts[k]);
        t.entries[{k, -1}] = v;
    }
    return t;
}

LaurentSeries monotone_series(const Partition& alpha, int order) {
    int n = alpha.weight();
    if (order < n) throw std::invalid_argument("monotone_series order below leading term");
    CountTable m = monotone_counts(alpha, order - n);
    int sign = (n + alpha.length()) % 2 ? -1 : 1;
    std::vector<Rational> coeffs;
    for (int k = 0; k <= order - n; ++k) coeffs.push_back(Rational(sign) * m.at(k));
    return LaurentSeries(n, std::move(coeffs), order);
}

// ------------------------------------------------------------------ proper

namespace {

struct ClassData {
    int rank;
    Int size;       // |C_mu| or |K_mu|
    Rational chi;   // chi_lambda(mu)/chi_lambda(1^n), or omega_lambda(mu)
};

/// sum over k-tuples of the given classes with total rank d of the
/// product of (size * chi); early rank-budget pruning.
Rational tuple_sum(const std::vector<ClassData>& classes, int k, int d) {
    Rational total(0);
    auto rec = [&](auto&& self, int slot, int rest, Rational acc) -> void {
        if (slot == k) {
            if (rest == 0) total += acc;
            return;
        }
        int slots_left = k - slot;
        for (const auto& c : classes) {
            if (c.rank > rest - (slots_left - 1)) continue;  // each factor needs rank >= 1
            self(self, slot + 1, rest - c.rank, acc * Rational(c.size) * c.chi);
        }
    };
    rec(rec, 0, d, Rational(1));
    return total;
}

}  // namespace

Rational proper_count(const Partition& alpha, int k, int d) {
    int n = alpha.weight();
    if (n > 4) throw std::invalid_argument("proper_count bound exceeded");
    if (k < 1 || d < k) return Rational(0);
    Rational total(0);
    for (const Partition& lambda : partitions(n)) {
        long long dim = character_dimension(lambda);
        std::vector<ClassData> classes;
        for (const Partition& mu : partitions(n)) {
            if (mu.rank() == 0) continue;  // mu != 1^n
            Rational chi(to_int(character(lambda, mu)), to_int(dim));
            chi.canonicalize();
            classes.push_back({mu.rank(), class_size(mu), chi});
        }
        total += Rational(to_int(dim) * to_int(character(lambda, alpha))) * tuple_sum(classes, k, d);
    }
    total /= Rational(factorial(n));
    total.canonicalize();
    return total;
}

LaurentSeries proper_series(const Partition& alpha, int order) {
    int n = alpha.weight();
    if (order < n) throw std::invalid_argument("proper_series order below leading term");
    std::vector<Rational> coeffs;
    for (int d = 0; d <= order - n; ++d) {
        Rational c(0);
        if (d == 0) {
            // constant term of the geometric expansion
            for (const Partition& lambda : partitions(n))
                c += Rational(to_int(character_dimension(lambda)) * to_int(character(lambda, alpha)));
            c /= Rational(factorial(n));
            c.canonicalize();
        } else {
            for (int k = 1; k <= d; ++k) {
                Rational p = proper_count(alpha, k, d);
                c += (k % 2 ? -p : p);
            }
        }
        coeffs.push_back(c);
    }
    return LaurentSeries(n, std::move(coeffs), order);
}

// ------------------------------------------- matching-style monotone DFS

namespace {

/// Hatted-domain search over transposition sequences acting on matchings.
/// Labels are indexed 0..2n-1 (a-1 for a, n+a-1 for a^). Letters are
/// (s, t) with t in [n] unhatted and s admitted by the order predicate;
/// t weakly increases along the sequence.
struct MatchingSearch {
    int n, k_max;
    std::vector<int> tpartner;           // target matching as partner array
    std::vector<std::vector<int>> s_choices;  // per t (1-based), admissible s indices
    std::vector<int> cur, icur;
    std::vector<Int> counts;

    int idx_hat(int i) const { return i < n ? i + n : i - n; }

    void run() {
        counts.assign(k_max + 1, Int(0));
        cur.resize(2 * n);
        icur.resize(2 * n);
        for (int i = 0; i < 2 * n; ++i) cur[i] = icur[i] = i;
        dfs(0, 1);
    }

    bool hits_target() const {
        for (int a = 0; a < n; ++a)
            if (tpartner[cur[a]] != cur[idx_hat(a)]) return false;
        return true;
    }

    // rank of the cosettype of cur^{-1}(target) against the trivial matching
    int deficit() const {
        // partner array of m' = cur^{-1}(target)
        std::vector<int> p1(2 * n);
        for (int x = 0; x < 2 * n; ++x) p1[icur[x]] = icur[tpartner[x]];
        int cycles = 0;
        std::vector<bool> seen(2 * n, false);
        for (int i = 0; i < 2 * n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            int x = i;
            do {
                seen[x] = true;
                int y = p1[x];  // m' edge
                seen[y] = true;
                x = idx_hat(y);  // trivial edge
            } while (x != i);
        }
        return n - cycles;
    }

    void dfs(int depth, int t_min) {
        if (hits_target()) ++counts[depth];
        if (depth == k_max) return;
        if (deficit() > k_max - depth) return;
        for (int t = t_min; t <= n; ++t) {
            for (int s : s_choices[t]) {
                apply(s, t - 1);
                dfs(depth + 1, t);
                apply(s, t - 1);
            }
        }
    }

    void apply(int i, int j) {
        std::swap(cur[i], cur[j]);
        icur[cur[i]] = i;
        icur[cur[j]] = j;
    }
};

std::vector<std::vector<int>> letter_table(int n, HatOrder order) {
    // index encoding: a -> a-1, a^ -> n+a-1
    std::vector<std::vector<int>> table(n + 1);
    for (int t = 1; t <= n; ++t) {
        auto& out = table[t];
        switch (order) {
            case HatOrder::HatHighInterleaved:  // h(s) < t
                for (int a = 1; a < t; ++a) {
                    out.push_back(a - 1);
                    out.push_back(n + a - 1);
                }
                break;
            case HatOrder::HatLowInterleaved:  // h(s) < t, plus s = t^
                for (int a = 1; a < t; ++a) {
                    out.push_back(a - 1);
                    out.push_back(n + a - 1);
                }
                out.push_back(n + t - 1);
                break;
            case HatOrder::UnhattedFirstBlocks:  // unhatted s < t only
                for (int a = 1; a < t; ++a) out.push_back(a - 1);
                break;
            case HatOrder::HattedFirstBlocks:  // any hatted s, unhatted s < t
                for (int a = 1; a < t; ++a) out.push_back(a - 1);
                for (int a = 1; a <= n; ++a) out.push_back(n + a - 1);
                break;
        }
        std::sort(out.begin(), out.end());
    }
    return table;
}

CountTable matching_family_counts(CountFamily family, const Partition& beta, int k_max,
                                  const std::vector<std::vector<int>>& letters,
                                  std::optional<Matching> target, const std::string& convention) {
    int n = beta.weight();
    Matching m = target.value_or(canonical_matching(beta));
    if (m.n() != n) throw std::invalid_argument("target matching has wrong size");
    if (!(coset_type(m) == beta))
        throw std::invalid_argument("target matching has wrong cosettype");

    MatchingSearch search;
    search.n = n;
    search.k_max = k_max;
    search.s_choices = letters;
    search.tpartner.resize(2 * n);
    auto idx = [n](Label a) { return a > 0 ? a - 1 : n + forget_hat(a) - 1; };
    for (const auto& [a, b] : m.blocks()) {
        search.tpartner[idx(a)] = idx(b);
        search.tpartner[idx(b)] = idx(a);
    }
    search.run();

    CountTable t{family, beta, {}, convention};
    for (int k = 0; k <= k_max; ++k) t.entries[{k, -1}] = Rational(Int(search.counts[k]));
    return t;
}

}  // namespace

CountTable matching_monotone_counts(const Partition& beta, int k_max,
                                    std::optional<Matching> target) {
    if (beta.weight() > 4 || k_max > 10)
        throw std::invalid_argument("matching_monotone_counts bounds exceeded");
    return matching_family_counts(CountFamily::MatchingMonotone, beta, k_max,
                                  letter_table(beta.weight(), HatOrder::HatHighInterleaved),
                                  std::move(target), "");
}

CountTable palindromic_monotone_counts(const Partition& beta, int k_max, HatOrder order,
                                       std::optional<Matching> target) {
    if (beta.weight() > 4 || k_max > 10)
        throw std::invalid_argument("palindromic_monotone_counts bounds exceeded");
    return matching_family_counts(CountFamily::PalindromicMonotone, beta, k_max,
                                  letter_table(beta.weight(), order), std::move(target),
                                  hat_order_name(order));
}

HatOrder calibrate_palindromic_convention() {
    const Partition beta{2};
    const std::array expected{Rational(1), Rational(4), Rational(13)};
    for (HatOrder order : {HatOrder::HatLowInterleaved, HatOrder::HatHighInterleaved,
                           HatOrder::UnhattedFirstBlocks, HatOrder::HattedFirstBlocks}) {
        CountTable t = palindromic_monotone_counts(beta, 3, order);
        if (t.at(1) == expected[0] && t.at(2) == expected[1] && t.at(3) == expected[2])
            return order;
    }
    throw std::logic_error("no order convention reproduces the calibration counts");
}

CountTable palindromic_monotone_counts(const Partition& beta, int k_max) {
    static const HatOrder calibrated = calibrate_palindromic_convention();
    return palindromic_monotone_counts(beta, k_max, calibrated);
}

// -------------------------------------------------------- orthogonal proper

Rational orthogonal_proper_count(const Partition& beta, int k, int d) {
    int n = beta.weight();
    if (n > 3) throw std::invalid_argument("orthogonal_proper_count bound exceeded");
    if (k < 1 || d < k) return Rational(0);
    Rational total(0);
    for (const Partition& lambda : partitions(n)) {
        std::vector<ClassData> classes;
        for (const Partition& mu : partitions(n)) {
            if (mu.rank() == 0) continue;
            classes.push_back({mu.rank(), double_coset_size(mu), zonal_spherical(lambda, mu)});
        }
        Rational outer = Rational(to_int(character_dimension(lambda.doubled()))) *
                         zonal_spherical(lambda, beta);
        total += outer * tuple_sum(classes, k, d);
    }
    total /= Rational(factorial(2 * n));
    total.canonicalize();
    return total;
}

LaurentSeries orthogonal_proper_series(const Partition& beta, int order) {
    int n = beta.weight();
    if (order < n) throw std::invalid_argument("orthogonal_proper_series order below leading term");
    Rational hn(int_pow(Int(2), n) * factorial(n));
    std::vector<Rational> coeffs;
    for (int d = 0; d <= order - n; ++d) {
        Rational c(0);
        if (d == 0) {
            for (const Partition& lambda : partitions(n))
                c += Rational(to_int(character_dimension(lambda.doubled()))) *
                     zonal_spherical(lambda, beta);
            c *= hn / Rational(factorial(2 * n));
            c.canonicalize();
        } else {
            for (int k = 1; k <= d; ++k) {
                Rational p = orthogonal_proper_count(beta, k, d) * rat_pow(hn, 1 - k);
                c += (k % 2 ? -p : p);
            }
        }
        coeffs.push_back(c);
    }
    return LaurentSeries(n, std::move(coeffs), order);
}

}  // namespace wg
