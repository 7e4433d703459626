#include "wg/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace wg {
namespace {

std::vector<Partition> complement_types(int r) {
    std::vector<Partition> out;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    for (int len = 1; len <= r; ++len) {
        int m = r + len;
        for (const Partition& p : partitions(m, 2))
            if (p.length() == len) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Search state on the hatted domain of {1..L}: indices 0..L-1 are the
/// plain labels, L..2L-1 their hats. Marked labels are [n] u [n^].
///
/// f1 is grown by inserting hat-pairs of unmarked labels into the 2n
/// seeded cycles; the mirrored insertion keeps f1 palindromic with its
/// cycles in hat-pairs, each holding exactly one marked label, by
/// construction. At each leaf theta = f1 p1 must be a fixed-point-free
/// involution and f2 = p2 theta must have one marked label per cycle.
struct OrthoSearch {
    int L = 0, n = 0;
    std::vector<int> p2;  // fixed-point-free involution from Pi's cycles
    bool collect = false;

    std::vector<int> f1;  // next pointers
    long long count = 0;
    std::vector<std::vector<int>> results;  // f1 snapshots

    int hat(int i) const { return i < L ? i + L : i - L; }
    bool marked(int i) const { return (i < L ? i : i - L) < n; }

    void run() {
        f1.assign(2 * L, -1);
        for (int a = 0; a < n; ++a) {
            f1[a] = a;              // seed cycle (a)
            f1[hat(a)] = hat(a);    // partner seed (a^)
        }
        insert_pair(n);
    }

    void insert_pair(int u) {
        if (u == L) {
            check_leaf();
            return;
        }
        // u goes after any already placed label v; u^ mirrors
        for (int v = 0; v < 2 * L; ++v) {
            if (f1[v] < 0) continue;
            int w = f1[v];
            int hu = hat(u), hv = hat(v), hw = hat(w);
            f1[v] = u;
            f1[u] = w;
            f1[hw] = hu;
            f1[hu] = hv;
            insert_pair(u + 1);
            f1[v] = w;
            f1[hw] = hv;
            f1[u] = f1[hu] = -1;
        }
    }

    void check_leaf() {
        // theta(x) = f1(x^) must be a fixed-point-free involution
        for (int x = 0; x < 2 * L; ++x) {
            int tx = f1[hat(x)];
            if (tx == x) return;
            if (f1[hat(tx)] != x) return;
        }
        // f2(x) = p2(theta(x)): every cycle holds exactly one marked label
        std::vector<bool> seen(2 * L, false);
        for (int x = 0; x < 2 * L; ++x) {
            if (seen[x]) continue;
            int marks = 0;
            int y = x;
            do {
                seen[y] = true;
                if (marked(y)) ++marks;
                y = p2[f1[hat(y)]];
            } while (y != x);
            if (marks != 1) return;
        }
        ++count;
        if (collect) results.push_back(f1);
    }
};

struct OrthoBucket {
    Partition rho_type;
    long long count = 0;
    std::vector<std::vector<int>> f1s;
    std::vector<int> p2;
};

std::vector<int> build_p2(const Partition& beta, const Partition& rho_type) {
    // transpositions (c^, next(c)) over the cycles of Pi = pi rho
    int n = beta.weight();
    int L = n + rho_type.weight();
    std::vector<int> p2(2 * L, -1);
    int start = 0;
    auto add_cycle = [&](int begin, int len) {
        for (int i = 0; i < len; ++i) {
            int c = begin + i;
            int next = begin + (i + 1) % len;
            p2[c + L] = next;  // c^ <-> next
            p2[next] = c + L;
        }
    };
    for (int part : beta.parts()) {
        add_cycle(start, part);
        start += part;
    }
    for (int part : rho_type.parts()) {
        add_cycle(start, part);
        start += part;
    }
    return p2;
}

std::vector<OrthoBucket> scan_orthogonal(const Partition& beta, int chi, bool collect) {
    int n = beta.weight();
    int l = beta.length();
    int r = n + l - chi;
    std::vector<OrthoBucket> buckets;
    if (r < 0) return buckets;
    if (r > 6 || n + 2 * r > 12)
        throw std::invalid_argument("enumerate_orthogonal: complement bound overflow");
    for (const Partition& rho_type : complement_types(r)) {
        OrthoBucket bucket;
        bucket.rho_type = rho_type;
        bucket.p2 = build_p2(beta, rho_type);
        OrthoSearch search;
        search.n = n;
        search.L = n + rho_type.weight();
        search.p2 = bucket.p2;
        search.collect = collect;
        search.run();
        bucket.count = search.count;
        bucket.f1s = std::move(search.results);
        buckets.push_back(std::move(bucket));
    }
    return buckets;
}

Permutation hatted_from_next(const std::vector<int>& next, int L) {
    PermutationBuilder b(true, L);
    auto label = [L](int i) { return i < L ? i + 1 : -(i - L + 1); };
    for (int i = 0; i < 2 * L; ++i) b.set(label(i), label(next[i]));
    return b.finish();
}

Permutation plain_pi_rho(const Partition& beta, const Partition& rho_type) {
    int n = beta.weight();
    int L = n + rho_type.weight();
    PermutationBuilder b(false, L);
    int start = 0;
    auto add = [&](int begin, int len) {
        for (int i = 0; i < len; ++i) b.set(begin + i + 1, begin + (i + 1) % len + 1);
    };
    for (int part : beta.parts()) {
        add(start, part);
        start += part;
    }
    for (int part : rho_type.parts()) {
        add(start, part);
        start += part;
    }
    return b.finish();
}

Permutation shifted_standard_rho(int n, const Partition& rho_type) {
    int L = n + rho_type.weight();
    PermutationBuilder b(false, L);
    for (int x = 1; x <= n; ++x) b.set(x, x);
    int start = n;
    for (int part : rho_type.parts()) {
        for (int i = 0; i < part; ++i) b.set(start + i + 1, start + (i + 1) % part + 1);
        start += part;
    }
    return b.finish();
}

}  // namespace

std::vector<OrthogonalConfiguration> enumerate_orthogonal(const Partition& beta, int chi) {
    int n = beta.weight();
    std::vector<OrthogonalConfiguration> out;
    for (auto& bucket : scan_orthogonal(beta, chi, /*collect=*/true)) {
        int L = n + bucket.rho_type.weight();
        for (auto& f1next : bucket.f1s) {
            OrthogonalConfiguration c;
            c.m = bucket.rho_type.weight();
            c.rho_type = bucket.rho_type;
            c.rho = shifted_standard_rho(n, bucket.rho_type);
            c.Pi = plain_pi_rho(beta, bucket.rho_type);
            c.f1 = hatted_from_next(f1next, L);
            // theta = f1 p1, f2 = p2 theta
            std::vector<int> theta(2 * L), f2(2 * L);
            auto hat = [L](int i) { return i < L ? i + L : i - L; };
            for (int x = 0; x < 2 * L; ++x) theta[x] = f1next[hat(x)];
            for (int x = 0; x < 2 * L; ++x) f2[x] = bucket.p2[theta[x]];
            c.theta = hatted_from_next(theta, L);
            c.f2 = hatted_from_next(f2, L);
            c.chi = chi;
            // l(Pi) - m - n + l(f1) + l(f2), the unhalved face count
            c.chi_literal = c.Pi.cycle_count() - L + c.f1.cycle_count() + c.f2.cycle_count();
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const OrthogonalConfiguration& a, const OrthogonalConfiguration& b) {
                  if (a.m != b.m) return a.m < b.m;
                  if (!(a.rho_type == b.rho_type)) return a.rho_type < b.rho_type;
                  return a.theta < b.theta;
              });
    return out;
}

Rational orthogonal_chi_coefficient(const Partition& beta, int chi) {
    Rational total(0);
    for (const auto& bucket : scan_orthogonal(beta, chi, /*collect=*/false)) {
        int lpi = beta.length() + bucket.rho_type.length();
        Rational weight = rat_pow(Rational(-1, 2), lpi) / Rational(z_of(bucket.rho_type));
        weight.canonicalize();
        total += weight * Rational(to_int(bucket.count));
    }
    total.canonicalize();
    return total;
}

std::map<Partition, Int> orthogonal_map_census(const Partition& beta, int chi) {
    std::map<Partition, Int> census;
    for (const auto& bucket : scan_orthogonal(beta, chi, /*collect=*/false)) {
        if (bucket.count == 0) continue;
        Int z = z_of(bucket.rho_type);
        Int c = to_int(bucket.count);
        if (c % z != 0)
            throw std::logic_error("orthogonal census is not integral: enumeration bug");
        census[bucket.rho_type] = c / z;
    }
    return census;
}

LaurentSeries orthogonal_map_series(const Partition& beta, int chi_min) {
    int n = beta.weight();
    int l = beta.length();
    int chi_top = 2 * l;
    if (chi_min > chi_top) throw std::invalid_argument("chi_min above leading characteristic");
    Rational pref = rat_pow(Rational(-2), l);
    std::vector<Rational> coeffs;
    for (int chi = chi_top; chi >= chi_min; --chi)
        coeffs.push_back(pref * orthogonal_chi_coefficient(beta, chi));
    return LaurentSeries(2 * n - l, std::move(coeffs), 2 * n + l - chi_min);
}

}  // namespace wg
