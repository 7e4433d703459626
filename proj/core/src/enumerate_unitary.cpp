#include "wg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace wg {
namespace {

/// Complement cycletypes: partitions with all parts >= 2 and |rho| - l(rho) = r.
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

/// Standard complement on {n+1..n+m} for the given type, as a plain
/// permutation of {1..n+m} together with pi in front.
std::vector<int> build_target(const Permutation& pi, const Partition& rho_type) {
    int n = pi.domain_parameter();
    int m = rho_type.weight();
    std::vector<int> img(n + m);
    for (int x = 1; x <= n; ++x) img[x - 1] = pi(x) - 1;
    int start = n;
    for (int part : rho_type.parts()) {
        for (int i = 0; i < part; ++i) img[start + i] = start + (i + 1) % part;
        start += part;
    }
    return img;
}

/// Joint depth-first search over pairs (tau1, tau2) with tau1 tau2 = Pi
/// and every cycle of either factor holding exactly one marked label.
/// Assigns sigma = tau2^{-1} pointwise; each assignment sigma(x) = v also
/// fixes tau1(x) = Pi(v), so both partial cycle structures are tracked
/// and pruned together: a path accumulating two marked labels, or a
/// cycle closing with marked count != 1, kills the branch.
struct PairSearch {
    int L = 0, n = 0;
    std::vector<int> Pi;
    bool collect = false;

    std::vector<uint8_t> used;
    std::vector<int> sigma;
    // open-path bookkeeping per graph: start-of-path-ending-at, end-of-
    // path-starting-at, marked count stored at the start label
    std::vector<int> s_start, s_end, s_marked;
    std::vector<int> t_start, t_end, t_marked;

    long long count = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;  // (tau1, tau2)

    void run() {
        used.assign(L, 0);
        sigma.assign(L, -1);
        auto init = [&](std::vector<int>& start, std::vector<int>& end, std::vector<int>& marked) {
            start.resize(L);
            end.resize(L);
            marked.resize(L);
            for (int i = 0; i < L; ++i) {
                start[i] = end[i] = i;
                marked[i] = i < n ? 1 : 0;
            }
        };
        init(s_start, s_end, s_marked);
        init(t_start, t_end, t_marked);
        dfs(0);
    }

    // add edge x->v in graph (start,end,marked); returns false on a bad
    // close or an over-marked merge, true if committed (close commits
    // nothing, which undo() must mirror)
    static bool add(std::vector<int>& start, std::vector<int>& end, std::vector<int>& marked,
                    int x, int v) {
        int sx = start[x];
        if (sx == v) return marked[v] == 1;  // cycle closes
        int ev = end[v];
        int total = marked[sx] + marked[v];
        if (total > 1) return false;
        end[sx] = ev;
        start[ev] = sx;
        marked[sx] = total;
        return true;
    }

    static void remove(std::vector<int>& start, std::vector<int>& end, std::vector<int>& marked,
                       int x, int v) {
        int sx = start[x];
        if (sx == v) return;  // was a close; nothing was committed
        // after the merge, start[x] is the merged start; undo via stored x/v
        int ev = end[v];  // unchanged by merge
        marked[sx] -= marked[v];
        end[sx] = x;
        start[ev] = v;
    }

    bool try_edge(int x, int v) {
        int w = Pi[v];
        // validate sigma edge, then tau edge; roll back on failure
        int sx_before = s_start[x];
        if (!add(s_start, s_end, s_marked, x, v)) return false;
        if (!add(t_start, t_end, t_marked, x, w)) {
            if (sx_before != v) remove(s_start, s_end, s_marked, x, v);
            return false;
        }
        used[v] = 1;
        sigma[x] = v;
        dfs(x + 1);
        sigma[x] = -1;
        used[v] = 0;
        remove(t_start, t_end, t_marked, x, w);
        if (sx_before != v) remove(s_start, s_end, s_marked, x, v);
        return true;
    }

    void dfs(int x) {
        if (x == L) {
            ++count;
            if (collect) {
                std::vector<int> tau1(L), tau2(L);
                for (int i = 0; i < L; ++i) {
                    tau2[sigma[i]] = i;
                    tau1[i] = Pi[sigma[i]];
                }
                pairs.emplace_back(std::move(tau1), std::move(tau2));
            }
            return;
        }
        for (int v = 0; v < L; ++v) {
            if (used[v]) continue;
            try_edge(x, v);
        }
    }
};

/// Orbit-counting variant used for coefficients and censuses. The
/// centralizer of rho inside the unmarked labels (order z_rho) acts
/// freely on valid pairs: an element commuting with tau2 fixes each
/// tau2-cycle pointwise through its marked label. Orbits are counted
/// once by pinning labels in discovery order: a fresh complement cycle
/// is always entered at the next canonical slot of its length, rotated
/// so the entry point is the slot's first label. Labeled counts are
/// orbit counts times z_rho.
struct OrbitSearch {
    int L = 0, n = 0;
    // canonical slot layout of rho: per cycle, base offset and length
    std::vector<int> cycle_base, cycle_len;
    std::vector<int> Pi;

    std::vector<uint8_t> used;
    std::vector<int> queue;  // pinned labels in discovery order
    std::vector<int> next_unopened;  // per length, index into cycles of that length
    std::vector<std::vector<int>> cycles_by_len;  // length -> cycle ids, canonical order
    std::vector<int> s_start, s_end, s_marked;
    std::vector<int> t_start, t_end, t_marked;
    long long orbits = 0;

    void run() {
        used.assign(L, 0);
        queue.clear();
        for (int a = 0; a < n; ++a) queue.push_back(a);
        int max_len = 0;
        for (int len : cycle_len) max_len = std::max(max_len, len);
        cycles_by_len.assign(max_len + 1, {});
        for (size_t c = 0; c < cycle_len.size(); ++c)
            cycles_by_len[cycle_len[c]].push_back(static_cast<int>(c));
        next_unopened.assign(max_len + 1, 0);
        auto init = [&](std::vector<int>& start, std::vector<int>& end, std::vector<int>& marked) {
            start.resize(L);
            end.resize(L);
            marked.resize(L);
            for (int i = 0; i < L; ++i) {
                start[i] = end[i] = i;
                marked[i] = i < n ? 1 : 0;
            }
        };
        init(s_start, s_end, s_marked);
        init(t_start, t_end, t_marked);
        dfs(0);
    }

    static bool add(std::vector<int>& start, std::vector<int>& end, std::vector<int>& marked,
                    int x, int v) {
        int sx = start[x];
        if (sx == v) return marked[v] == 1;
        int ev = end[v];
        int total = marked[sx] + marked[v];
        if (total > 1) return false;
        end[sx] = ev;
        start[ev] = sx;
        marked[sx] = total;
        return true;
    }

    static void remove(std::vector<int>& start, std::vector<int>& end, std::vector<int>& marked,
                       int x, int v) {
        int sx = start[x];
        if (sx == v) return;
        int ev = end[v];
        marked[sx] -= marked[v];
        end[sx] = x;
        start[ev] = v;
    }

    void try_edge(int pos, int x, int v) {
        int w = Pi[v];
        int sx_before = s_start[x];
        if (!add(s_start, s_end, s_marked, x, v)) return;
        if (!add(t_start, t_end, t_marked, x, w)) {
            if (sx_before != v) remove(s_start, s_end, s_marked, x, v);
            return;
        }
        used[v] = 1;
        dfs(pos + 1);
        used[v] = 0;
        remove(t_start, t_end, t_marked, x, w);
        if (sx_before != v) remove(s_start, s_end, s_marked, x, v);
    }

    void dfs(int pos) {
        if (pos == L) {
            ++orbits;
            return;
        }
        if (pos >= static_cast<int>(queue.size())) return;  // undiscovered cycles starve
        int x = queue[pos];
        // already pinned labels first (deeper calls grow and shrink the
        // queue, so iterate by index over the entry snapshot)
        size_t qsize = queue.size();
        for (size_t i = 0; i < qsize; ++i) {
            int v = queue[i];
            if (!used[v]) try_edge(pos, x, v);
        }
        // or open the canonical next cycle of each available length
        for (int len = 2; len < static_cast<int>(cycles_by_len.size()); ++len) {
            if (next_unopened[len] >= static_cast<int>(cycles_by_len[len].size())) continue;
            int c = cycles_by_len[len][next_unopened[len]];
            ++next_unopened[len];
            for (int i = 0; i < len; ++i) queue.push_back(cycle_base[c] + i);
            try_edge(pos, x, cycle_base[c]);
            queue.resize(qsize);
            --next_unopened[len];
        }
    }
};

struct Bucket {
    Partition rho_type;
    long long count = 0;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};

/// Run the search for every complement type at the given chi. Record
/// collection uses the labeled search; pure counting uses the orbit
/// search and scales back up by z_rho. Buckets are independent and are
/// distributed over a small thread pool.
std::vector<Bucket> scan(const Partition& alpha, int chi, bool collect) {
    int n = alpha.weight();
    int l = alpha.length();
    int r = n + l - chi;
    std::vector<Bucket> buckets;
    if (r < 0) return buckets;
    if (r > 8 || n + 2 * r > 16)
        throw std::invalid_argument("enumerate_unitary: complement bound overflow");
    if (collect && n + 2 * r > 12)
        throw std::invalid_argument("enumerate_unitary: record list too large, bound overflow");
    Permutation pi = Permutation::standard(alpha);

    for (const Partition& rho_type : complement_types(r))
        buckets.push_back({rho_type, 0, {}});

    auto run_bucket = [&](Bucket& bucket) {
        const Partition& rho_type = bucket.rho_type;
        int L = n + rho_type.weight();
        if (collect) {
            PairSearch search;
            search.n = n;
            search.L = L;
            search.Pi = build_target(pi, rho_type);
            search.collect = true;
            search.run();
            bucket.count = search.count;
            bucket.pairs = std::move(search.pairs);
        } else {
            OrbitSearch search;
            search.n = n;
            search.L = L;
            search.Pi = build_target(pi, rho_type);
            int base = n;
            for (int part : rho_type.parts()) {
                search.cycle_base.push_back(base);
                search.cycle_len.push_back(part);
                base += part;
            }
            search.run();
            bucket.count = search.orbits * z_of(rho_type).get_si();
        }
    };

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(buckets.size()));
    if (workers <= 1) {
        for (auto& b : buckets) run_bucket(b);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (size_t i = next++; i < buckets.size(); i = next++) run_bucket(buckets[i]);
            });
        for (auto& t : pool) t.join();
    }
    return buckets;
}

Permutation from_image(const std::vector<int>& img) {
    PermutationBuilder b(false, static_cast<int>(img.size()));
    for (size_t i = 0; i < img.size(); ++i) b.set(static_cast<int>(i) + 1, img[i] + 1);
    return b.finish();
}

Permutation shifted_standard(int n, const Partition& rho_type) {
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

std::vector<UnitaryFactorization> enumerate_unitary(const Partition& alpha, int chi) {
    // odd chi comes back empty: orientable maps have even characteristic,
    // and the scan finds nothing rather than being skipped
    std::vector<UnitaryFactorization> out;
    int n = alpha.weight();
    for (auto& bucket : scan(alpha, chi, /*collect=*/true)) {
        for (auto& [tau1, tau2] : bucket.pairs) {
            UnitaryFactorization f;
            f.m = bucket.rho_type.weight();
            f.rho_type = bucket.rho_type;
            f.rho = shifted_standard(n, bucket.rho_type);
            f.Pi = from_image(build_target(Permutation::standard(alpha), bucket.rho_type));
            f.tau1 = from_image(tau1);
            f.tau2 = from_image(tau2);
            f.chi = chi;
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end(), [](const UnitaryFactorization& a,
                                         const UnitaryFactorization& b) {
        if (a.m != b.m) return a.m < b.m;
        if (!(a.rho_type == b.rho_type)) return a.rho_type < b.rho_type;
        if (!(a.tau2 == b.tau2)) return a.tau2 < b.tau2;
        return a.tau1 < b.tau1;
    });
    return out;
}

Rational unitary_chi_coefficient(const Partition& alpha, int chi) {
    Rational total(0);
    for (const auto& bucket : scan(alpha, chi, /*collect=*/false)) {
        Rational term(to_int(bucket.count), z_of(bucket.rho_type));
        term.canonicalize();
        total += bucket.rho_type.length() % 2 ? -term : term;
    }
    return total;
}

Rational unitary_signed_vertex_sum(const Partition& alpha, int chi) {
    int sign = alpha.length() % 2 ? -1 : 1;
    return Rational(sign) * unitary_chi_coefficient(alpha, chi);
}

std::map<Partition, Int> unitary_map_census(const Partition& alpha, int chi) {
    std::map<Partition, Int> census;
    for (const auto& bucket : scan(alpha, chi, /*collect=*/false)) {
        if (bucket.count == 0) continue;
        Int z = z_of(bucket.rho_type);
        Int c = to_int(bucket.count);
        if (c % z != 0)
            throw std::logic_error("unitary census is not integral: enumeration bug");
        census[bucket.rho_type] = c / z;
    }
    return census;
}

LaurentSeries unitary_map_series(const Partition& alpha, int chi_min) {
    int n = alpha.weight();
    int l = alpha.length();
    int chi_top = 2 * l;
    if (chi_min > chi_top) throw std::invalid_argument("chi_min above leading characteristic");
    std::vector<Rational> coeffs;
    for (int chi = chi_top; chi >= chi_min; --chi)
        coeffs.push_back(unitary_chi_coefficient(alpha, chi));
    return LaurentSeries(2 * n - l, std::move(coeffs), 2 * n + l - chi_min);
}

}  // namespace wg
