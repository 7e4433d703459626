#include "wg/verify.hpp"

#include <chrono>
#include <sstream>

#include "wg/counts.hpp"
#include "wg/enumerate.hpp"
#include "wg/gram.hpp"
#include "wg/text_format.hpp"
#include "wg/weingarten.hpp"
#include "wg/wick.hpp"

namespace wg {
namespace {

RationalFunction one_over(std::initializer_list<long> roots) {
    Polynomial den = Polynomial::constant(Rational(1));
    for (long r : roots) den = den * Polynomial{Rational(-r), Rational(1)};
    return RationalFunction(Polynomial::constant(Rational(1)), den);
}

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) detail << "; ";
            detail << what;
            ok = false;
        }
    }
    void note(const std::string& what) {
        if (ok && detail.tellp() == std::streampos(0)) detail << what;
    }
};

CriterionResult closed_forms() {
    Checker c;
    c.expect(wg_unitary(Partition{2}) == -one_over({1, 0, -1}),
             "unitary (2) != -1/((N-1)N(N+1)), got " + factored_str(wg_unitary(Partition{2})));
    c.expect(wg_orthogonal(Partition{2}) == -one_over({1, 0, -2}),
             "orthogonal (2) != -1/((N-1)N(N+2)), got " +
                 factored_str(wg_orthogonal(Partition{2})));
    c.note("both closed forms match as reduced rational functions");
    return {1, "closed forms for the two-cycle", c.ok, c.detail.str(), 0};
}

CriterionResult series_coefficients() {
    Checker c;
    LaurentSeries u = laurent_expand(wg_unitary(Partition{2}), 7);
    std::vector<Rational> expect_u{Rational(-1), Rational(0), Rational(-1), Rational(0),
                                   Rational(-1)};
    for (int k = 0; k < 5; ++k)
        c.expect(u.coefficient(3 + k) == expect_u[k],
                 "unitary coefficient at N^-" + std::to_string(3 + k) + " is " +
                     to_string(u.coefficient(3 + k)));
    LaurentSeries o = laurent_expand(wg_orthogonal_shifted(Partition{2}), 5);
    std::vector<Rational> expect_o{Rational(-1), Rational(4), Rational(-13)};
    for (int k = 0; k < 3; ++k)
        c.expect(o.coefficient(3 + k) == expect_o[k],
                 "shifted orthogonal coefficient at N^-" + std::to_string(3 + k) + " is " +
                     to_string(o.coefficient(3 + k)));
    c.note("(-1,0,-1,0,-1) and (-1,4,-13)");
    return {2, "series coefficients of the two-cycle expansions", c.ok, c.detail.str(), 0};
}

CriterionResult oracle_equivalence(bool full) {
    Checker c;
    int umax = full ? 4 : 3;
    int omax = full ? 3 : 2;
    for (int n = 1; n <= umax; ++n)
        for (const Partition& alpha : partitions(n)) {
            RationalFunction w = wg_unitary(alpha);
            for (long N = n; N <= n + 2; ++N)
                c.expect(w.evaluate(Rational(N)) == gram_wg_unitary(alpha, N),
                         "unitary mismatch at (" + alpha.str() + "), N=" + std::to_string(N));
        }
    for (int n = 1; n <= omax; ++n)
        for (const Partition& beta : partitions(n)) {
            RationalFunction w = wg_orthogonal(beta);
            for (long N = 2 * n; N <= 2 * n + 1; ++N)
                c.expect(w.evaluate(Rational(N)) == gram_wg_orthogonal(beta, N),
                         "orthogonal mismatch at (" + beta.str() + "), N=" + std::to_string(N));
        }
    c.note("character route equals Gram inversion at all checked dimensions");
    return {3, "character route vs Gram oracle", c.ok, c.detail.str(), 0};
}

CriterionResult monotone_identity(bool full) {
    Checker c;
    int nmax = full ? 3 : 2;
    for (int n = 1; n <= nmax; ++n)
        for (const Partition& alpha : partitions(n)) {
            int order = n + 8;
            LaurentSeries mono = monotone_series(alpha, order);
            LaurentSeries chr = laurent_expand(wg_unitary(alpha), order);
            for (int k = mono.leading_exponent(); k <= order; ++k)
                c.expect(mono.coefficient(k) == chr.coefficient(k),
                         "(" + alpha.str() + ") diverges at N^-" + std::to_string(k));
        }
    c.note("monotone series equals the character expansion through N^-(n+8)");
    return {4, "monotone factorization identity", c.ok, c.detail.str(), 0};
}

CriterionResult unitary_enumeration() {
    Checker c;
    auto top = enumerate_unitary(Partition{2}, 2);
    c.expect(top.size() == 2, "top characteristic has " + std::to_string(top.size()) +
                                  " factorizations, expected 2");
    c.expect(unitary_chi_coefficient(Partition{2}, 2) == Rational(-1), "S_2 != -1");
    auto census = unitary_map_census(Partition{2}, 0);
    c.expect(census.size() == 3 && census.at(Partition{2, 2, 2}) == 21 &&
                 census.at(Partition{3, 2}) == 28 && census.at(Partition{4}) == 8,
             "census at chi=0 is not {2,2,2:21, 3,2:28, 4:8}");
    c.expect(unitary_chi_coefficient(Partition{2}, 0) == Rational(-1), "S_0 != -1");
    LaurentSeries map = unitary_map_series(Partition{2}, 0);
    LaurentSeries chr = laurent_expand(wg_unitary(Partition{2}), 5);
    for (int k = 3; k <= 5; ++k)
        c.expect(map.coefficient(k) == chr.coefficient(k),
                 "map series differs at N^-" + std::to_string(k));
    c.note("2 factorizations at chi=2; census 21/28/8; series matches through N^-5");
    return {5, "unitary factorization enumeration", c.ok, c.detail.str(), 0};
}

CriterionResult sum_rule(bool full) {
    Checker c;
    int nmax = full ? 3 : 2;
    int printed_sign_deviations = 0;
    for (int n = 1; n <= nmax; ++n)
        for (const Partition& alpha : partitions(n)) {
            int l = alpha.length();
            for (int chi = 2 * l; chi >= 2 * l - 4; chi -= 2) {
                int k = n + l - chi;
                if (k < 0) continue;
                Rational m = monotone_counts(alpha, k).at(k);
                Rational w = unitary_signed_vertex_sum(alpha, chi);
                c.expect(abs(w) == m, "(" + alpha.str() + "), chi=" + std::to_string(chi) +
                                          ": |W|=" + to_string(abs(w)) +
                                          " vs M=" + to_string(m));
                int sign = n % 2 ? -1 : 1;
                c.expect(w == Rational(sign) * m,
                         "(" + alpha.str() + "), chi=" + std::to_string(chi) +
                             ": sign is not (-1)^n");
                // the printed rule carries (-1)^(n+l): flag, don't fail
                int printed = (n + l) % 2 ? -1 : 1;
                if (m != 0 && printed != sign) ++printed_sign_deviations;
            }
        }
    std::ostringstream note;
    note << "sign (-1)^n throughout; printed-rule deviation flagged at "
         << printed_sign_deviations << " odd-length cells";
    c.note(note.str());
    return {6, "factorization sum rule vs monotone counts", c.ok, c.detail.str(), 0};
}

CriterionResult orthogonal_enumeration() {
    Checker c;
    auto top = enumerate_orthogonal(Partition{2}, 2);
    c.expect(top.size() == 4, "chi=2 has " + std::to_string(top.size()) +
                                  " configurations, expected 4");
    bool paper_theta = false;
    for (const auto& cfg : top)
        if (cfg.theta == Permutation::from_cycles_hatted(4, {{1, -3}, {2, -4}, {4, -2}, {3, -1}}))
            paper_theta = true;
    c.expect(paper_theta, "quoted example theta missing at chi=2");
    c.expect(orthogonal_chi_coefficient(Partition{2}, 2) == Rational(1, 2), "T_2 != 1/2");
    c.expect(orthogonal_chi_coefficient(Partition{2}, 1) == Rational(-2), "T_1 != -2");
    c.expect(orthogonal_chi_coefficient(Partition{2}, 0) == Rational(13, 2), "T_0 != 13/2");

    LaurentSeries map = orthogonal_map_series(Partition{2}, 0);
    LaurentSeries chr = laurent_expand(wg_orthogonal_shifted(Partition{2}), 5);
    for (int k = 3; k <= 5; ++k)
        c.expect(map.coefficient(k) == chr.coefficient(k),
                 "orthogonal map series differs at N^-" + std::to_string(k));

    // census at chi=1: integral by construction of the quotient; the
    // series total (8-4)/N^4 = 4/N^4 is the anchored fact, per-profile
    // counts are reported as observed
    auto census = orthogonal_map_census(Partition{2}, 1);
    Rational series_total = Rational(-2) * orthogonal_chi_coefficient(Partition{2}, 1);
    c.expect(series_total == Rational(4), "chi=1 series total != 4/N^4");
    std::ostringstream obs;
    obs << "T = (1/2, -2, 13/2); chi=1 census observed {";
    bool first = true;
    for (const auto& [type, count] : census) {
        if (!first) obs << ", ";
        obs << type.str() << ": " << to_string(count);
        first = false;
    }
    obs << "} with series total 4/N^4";
    c.note(obs.str());
    return {7, "orthogonal configuration enumeration", c.ok, c.detail.str(), 0};
}

CriterionResult matching_families() {
    Checker c;
    CountTable mm = matching_monotone_counts(Partition{2}, 6);
    std::vector<Rational> expect_mm{Rational(1), Rational(1), Rational(3), Rational(5)};
    for (int k = 1; k <= 4; ++k)
        c.expect(mm.at(k) == expect_mm[k - 1],
                 "matching-monotone k=" + std::to_string(k) + " is " + to_string(mm.at(k)));
    LaurentSeries chro = laurent_expand(wg_orthogonal(Partition{2}), 6);
    for (int k = 0; k <= 4; ++k)
        c.expect(mm.at(k) == (k % 2 ? -chro.coefficient(2 + k) : chro.coefficient(2 + k)),
                 "matching-monotone series mismatch at k=" + std::to_string(k));

    CountTable pm = palindromic_monotone_counts(Partition{2}, 3);
    std::vector<Rational> expect_pm{Rational(1), Rational(4), Rational(13)};
    for (int k = 1; k <= 3; ++k)
        c.expect(pm.at(k) == expect_pm[k - 1],
                 "palindromic-monotone k=" + std::to_string(k) + " is " + to_string(pm.at(k)));
    LaurentSeries chrs = laurent_expand(wg_orthogonal_shifted(Partition{2}), 5);
    for (int k = 0; k <= 3; ++k)
        c.expect(pm.at(k) == (k % 2 ? -chrs.coefficient(2 + k) : chrs.coefficient(2 + k)),
                 "palindromic-monotone series mismatch at k=" + std::to_string(k));
    c.note("(1,1,3,5) and (1,4,13) under the " + pm.convention + " convention");
    return {8, "matching and palindromic monotone counts", c.ok, c.detail.str(), 0};
}

CriterionResult proper_identities(bool full) {
    Checker c;
    int nmax = full ? 3 : 2;
    for (int n = 1; n <= nmax; ++n)
        for (const Partition& alpha : partitions(n)) {
            CountTable mono = monotone_counts(alpha, 4);
            for (int d = 1; d <= 4; ++d) {
                Rational alt(0);
                for (int k = 1; k <= d; ++k) {
                    Rational p = proper_count(alpha, k, d);
                    c.expect(is_integer(p) && p >= 0,
                             "P(" + alpha.str() + ")^{" + std::to_string(k) + "," +
                                 std::to_string(d) + "} not a nonnegative integer");
                    alt += (k % 2 ? -p : p);
                }
                int sign = (n + alpha.length()) % 2 ? -1 : 1;
                c.expect(alt == Rational(sign) * mono.at(d),
                         "alternating proper sum at (" + alpha.str() + "), d=" +
                             std::to_string(d));
            }
        }
    for (int n = 1; n <= 2; ++n)
        for (const Partition& beta : partitions(n)) {
            int order = n + 3;
            LaurentSeries ps = orthogonal_proper_series(beta, order);
            LaurentSeries chr = laurent_expand(wg_orthogonal(beta), order);
            for (int k = ps.leading_exponent(); k <= order; ++k)
                c.expect(ps.coefficient(k) == chr.coefficient(k),
                         "orthogonal proper series at (" + beta.str() + "), N^-" +
                             std::to_string(k));
        }
    c.note("alternating sums match monotone counts; orthogonal reconstruction exact");
    return {9, "proper factorization identities", c.ok, c.detail.str(), 0};
}

CriterionResult wick_templates() {
    Checker c;
    long bad = 0;
    for (int a1 = 1; a1 <= 2 && bad == 0; ++a1)
        for (int b1 = 1; b1 <= 2; ++b1)
            for (int d1 = 1; d1 <= 2; ++d1)
                for (int c1 = 1; c1 <= 2; ++c1)
                    for (int a2 = 1; a2 <= 2; ++a2)
                        for (int b2 = 1; b2 <= 2; ++b2)
                            for (int d2 = 1; d2 <= 2; ++d2)
                                for (int c2 = 1; c2 <= 2; ++c2) {
                                    long expect =
                                        (a1 == d1 && b1 == c1 && a2 == d2 && b2 == c2 ? 1 : 0) +
                                        (a1 == d2 && b1 == c2 && a2 == d1 && b2 == c1 ? 1 : 0);
                                    IndexedProduct p;
                                    p.factors = {{a1, b1, FactorTag::Z},
                                                 {d1, c1, FactorTag::ZConj},
                                                 {a2, b2, FactorTag::Z},
                                                 {d2, c2, FactorTag::ZConj}};
                                    if (complex_wick_moment(p) != Rational(expect)) ++bad;
                                }
    c.expect(bad == 0, "complex two-factor template has mismatches");
    bad = 0;
    for (int mask = 0; mask < 256; ++mask) {
        int a[4], b[4];
        for (int i = 0; i < 4; ++i) {
            a[i] = ((mask >> i) & 1) + 1;
            b[i] = ((mask >> (i + 4)) & 1) + 1;
        }
        long expect = ((a[0] == a[1] && a[2] == a[3] && b[0] == b[1] && b[2] == b[3]) ? 1 : 0) +
                      ((a[0] == a[2] && a[1] == a[3] && b[0] == b[2] && b[1] == b[3]) ? 1 : 0) +
                      ((a[0] == a[3] && a[1] == a[2] && b[0] == b[3] && b[1] == b[2]) ? 1 : 0);
        IndexedProduct p;
        for (int i = 0; i < 4; ++i) p.factors.push_back({a[i], b[i], FactorTag::M});
        if (real_wick_moment(p) != Rational(expect)) ++bad;
    }
    c.expect(bad == 0, "real four-factor template has mismatches");
    c.note("both displayed templates reproduced for every index assignment");
    return {10, "Wick pairing oracle", c.ok, c.detail.str(), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool full) {
    std::vector<CriterionResult> results;
    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        results.push_back(std::move(r));
    };
    timed([] { return closed_forms(); });
    timed([] { return series_coefficients(); });
    timed([&] { return oracle_equivalence(full); });
    timed([&] { return monotone_identity(full); });
    timed([] { return unitary_enumeration(); });
    timed([&] { return sum_rule(full); });
    timed([] { return orthogonal_enumeration(); });
    timed([] { return matching_families(); });
    timed([&] { return proper_identities(full); });
    timed([] { return wick_templates(); });
    return results;
}

}  // namespace wg
