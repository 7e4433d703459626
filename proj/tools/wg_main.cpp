// wg: exact Weingarten calculus for the unitary and orthogonal groups.
//
// Subcommands: eval, counts, enumerate, wick, verify. All values are
// exact rationals; output is deterministic byte-for-byte for fixed
// arguments. Exit codes: 0 ok, 1 domain/usage error, 2 verification
// failure.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "wg/cache.hpp"
#include "wg/counts.hpp"
#include "wg/enumerate.hpp"
#include "wg/text_format.hpp"
#include "wg/verify.hpp"
#include "wg/weingarten.hpp"
#include "wg/wick.hpp"

using json = nlohmann::ordered_json;
using namespace wg;

namespace {

json rational_json(const Rational& q) { return to_string(q); }

json polynomial_json(const Polynomial& p) {
    json arr = json::array();
    for (const Rational& c : p.coefficients()) arr.push_back(to_string(c));
    return arr;
}

json series_json(const LaurentSeries& s) {
    json out;
    out["leading_exponent"] = s.leading_exponent();
    json coeffs = json::array();
    for (const Rational& c : s.coefficients()) coeffs.push_back(to_string(c));
    out["coefficients"] = coeffs;
    out["order"] = s.order();
    return out;
}

Group parse_group(const std::string& g) {
    if (g == "unitary" || g == "u") return Group::Unitary;
    if (g == "orthogonal" || g == "o") return Group::Orthogonal;
    if (g == "orthogonal-shifted" || g == "os") return Group::OrthogonalShifted;
    throw CLI::ValidationError("--group", "unknown group: " + g);
}

std::string group_name(Group g) {
    switch (g) {
        case Group::Unitary: return "unitary";
        case Group::Orthogonal: return "orthogonal";
        case Group::OrthogonalShifted: return "orthogonal-shifted";
    }
    return "";
}

int run_eval(const std::string& group, const std::string& partition, const std::string& form,
             int order, const std::string& format) {
    Group g = parse_group(group);
    Partition index = Partition::parse(partition);
    RationalFunction value = weingarten(g, index).value;

    if (form == "rational") {
        if (format == "json") {
            json out;
            out["group"] = group_name(g);
            out["partition"] = index.str();
            out["form"] = "rational";
            out["numerator"] = polynomial_json(value.numerator());
            out["denominator"] = polynomial_json(value.denominator());
            out["display"] = factored_str(value);
            std::cout << out.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "degree,numerator,denominator\n";
            int dmax = std::max(value.numerator().degree(), value.denominator().degree());
            for (int k = 0; k <= dmax; ++k)
                std::cout << k << "," << to_string(value.numerator().coefficient(k)) << ","
                          << to_string(value.denominator().coefficient(k)) << "\n";
        } else {
            std::cout << factored_str(value) << "\n";
        }
        return 0;
    }
    if (form == "series") {
        LaurentSeries s = laurent_expand(value, order);
        if (format == "json") {
            json out;
            out["group"] = group_name(g);
            out["partition"] = index.str();
            out["form"] = "series";
            out.update(series_json(s));
            std::cout << out.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "inverse_power,coefficient\n";
            for (int k = s.leading_exponent(); k <= s.order(); ++k)
                std::cout << k << "," << to_string(s.coefficient(k)) << "\n";
        } else {
            std::cout << s.str() << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("--form", "expected rational or series");
}

int run_counts(const std::string& family, const std::string& partition, int kmax, int dmax,
               const std::string& format) {
    Partition index = Partition::parse(partition);
    CountTable table;
    if (family == "monotone") {
        table = monotone_counts(index, kmax);
    } else if (family == "matching-monotone") {
        table = matching_monotone_counts(index, kmax);
    } else if (family == "palindromic-monotone") {
        table = palindromic_monotone_counts(index, kmax);
    } else if (family == "proper") {
        table.family = CountFamily::Proper;
        table.index = index;
        for (int d = 1; d <= dmax; ++d)
            for (int k = 1; k <= std::min(d, kmax); ++k)
                table.entries[{k, d}] = proper_count(index, k, d);
    } else if (family == "orthogonal-proper") {
        table.family = CountFamily::OrthogonalProper;
        table.index = index;
        for (int d = 1; d <= dmax; ++d)
            for (int k = 1; k <= std::min(d, kmax); ++k)
                table.entries[{k, d}] = orthogonal_proper_count(index, k, d);
    } else {
        throw CLI::ValidationError("--family", "unknown family: " + family);
    }

    bool keyed_by_depth = table.family == CountFamily::Proper ||
                          table.family == CountFamily::OrthogonalProper;
    if (format == "csv") {
        std::cout << (keyed_by_depth ? "k,d,count\n" : "k,count\n");
        for (const auto& [key, value] : table.entries) {
            if (keyed_by_depth)
                std::cout << key.first << "," << key.second << "," << to_string(value) << "\n";
            else
                std::cout << key.first << "," << to_string(value) << "\n";
        }
    } else if (format == "text") {
        std::cout << family_name(table.family) << " counts for (" << table.index.str() << ")";
        if (!table.convention.empty()) std::cout << " [" << table.convention << "]";
        std::cout << "\n";
        for (const auto& [key, value] : table.entries) {
            std::cout << "  k=" << key.first;
            if (keyed_by_depth) std::cout << " d=" << key.second;
            std::cout << "  " << to_string(value) << "\n";
        }
    } else {
        json out;
        out["family"] = family_name(table.family);
        out["partition"] = table.index.str();
        if (!table.convention.empty()) out["convention"] = table.convention;
        json entries = json::array();
        for (const auto& [key, value] : table.entries) {
            json e;
            e["k"] = key.first;
            if (keyed_by_depth) e["d"] = key.second;
            e["count"] = rational_json(value);
            entries.push_back(e);
        }
        out["entries"] = entries;
        std::cout << out.dump() << "\n";
    }
    return 0;
}

json unitary_record_json(const UnitaryFactorization& f) {
    json r;
    r["m"] = f.m;
    r["rho_type"] = f.rho_type.str();
    r["rho"] = f.rho.str();
    r["Pi"] = f.Pi.str();
    r["tau1"] = f.tau1.str();
    r["tau2"] = f.tau2.str();
    r["chi"] = f.chi;
    return r;
}

json orthogonal_record_json(const OrthogonalConfiguration& c) {
    json r;
    r["m"] = c.m;
    r["rho_type"] = c.rho_type.str();
    r["rho"] = c.rho.str();
    r["Pi"] = c.Pi.str();
    r["theta"] = c.theta.str();
    r["f1"] = c.f1.str();
    r["f2"] = c.f2.str();
    r["chi"] = c.chi;
    r["chi_literal"] = c.chi_literal;
    return r;
}

int run_enumerate(const std::string& group, const std::string& partition, int chi,
                  const std::string& emit, const std::string& format) {
    Group g = parse_group(group);
    if (g == Group::OrthogonalShifted)
        throw CLI::ValidationError("--group", "enumerate expects u or o");
    Partition index = Partition::parse(partition);
    bool unitary = g == Group::Unitary;

    if (emit == "records") {
        if (unitary)
            for (const auto& f : enumerate_unitary(index, chi))
                std::cout << unitary_record_json(f).dump() << "\n";
        else
            for (const auto& c : enumerate_orthogonal(index, chi))
                std::cout << orthogonal_record_json(c).dump() << "\n";
        return 0;
    }
    if (emit == "census") {
        auto census = unitary ? unitary_map_census(index, chi)
                              : orthogonal_map_census(index, chi);
        if (format == "csv") {
            std::cout << "complement_type,count\n";
            for (const auto& [type, count] : census)
                std::cout << "\"" << type.str() << "\"," << to_string(count) << "\n";
        } else {
            json out = json::object();
            for (const auto& [type, count] : census)
                out[type.str()] = static_cast<long long>(count.get_si());
            std::cout << out.dump() << "\n";
        }
        return 0;
    }
    if (emit == "coefficient") {
        Rational coeff = unitary ? unitary_chi_coefficient(index, chi)
                                 : orthogonal_chi_coefficient(index, chi);
        if (format == "json") {
            json out;
            out["group"] = group_name(g);
            out["partition"] = index.str();
            out["chi"] = chi;
            out["coefficient"] = rational_json(coeff);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << to_string(coeff) << "\n";
        }
        return 0;
    }
    if (emit == "series") {
        LaurentSeries s = unitary ? unitary_map_series(index, chi)
                                  : orthogonal_map_series(index, chi);
        if (format == "json") {
            json out;
            out["group"] = group_name(g);
            out["partition"] = index.str();
            out["chi_min"] = chi;
            out.update(series_json(s));
            std::cout << out.dump() << "\n";
        } else {
            std::cout << s.str() << "\n";
        }
        return 0;
    }
    throw CLI::ValidationError("--emit", "expected records, census, coefficient or series");
}

int run_wick(const std::string& kind, const std::string& factors, const std::string& omega,
             const std::string& format) {
    IndexedProduct p;
    p.omega = parse_rational(omega);
    if (kind == "real") {
        p.factors = parse_factors(factors, FactorTag::M);
    } else if (kind == "complex") {
        // alternate Z / Z* when no explicit stars are given
        p.factors = parse_factors(factors, FactorTag::Z);
        bool any_conj = false;
        for (const auto& f : p.factors)
            if (f.tag == FactorTag::ZConj) any_conj = true;
        if (!any_conj)
            for (size_t i = 1; i < p.factors.size(); i += 2) p.factors[i].tag = FactorTag::ZConj;
    } else {
        throw CLI::ValidationError("--kind", "expected real or complex");
    }
    Rational moment = kind == "real" ? real_wick_moment(p) : complex_wick_moment(p);
    if (format == "json") {
        json out;
        out["kind"] = kind;
        out["factors"] = factors;
        out["omega"] = to_string(p.omega);
        out["moment"] = to_string(moment);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << to_string(moment) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const std::string& format) {
    bool full = suite == "full";
    if (!full && suite != "small")
        throw CLI::ValidationError("--suite", "expected small or full");
    auto results = run_acceptance(full);
    int failures = 0;
    if (format == "json") {
        json out = json::array();
        for (const auto& r : results) {
            json e;
            e["id"] = r.id;
            e["name"] = r.name;
            e["passed"] = r.passed;
            e["detail"] = r.detail;
            out.push_back(e);
            if (!r.passed) ++failures;
        }
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  #" << r.id << " " << r.name << ": "
                      << r.detail << "\n";
            if (!r.passed) ++failures;
        }
        std::cout << (static_cast<int>(results.size()) - failures) << "/" << results.size()
                  << " criteria passed\n";
    }
    return failures ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Weingarten calculus for the unitary and orthogonal groups"};
    app.require_subcommand(1);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "table cache directory (default: $WG_CACHE_DIR or .wg-cache)");

    std::string group = "unitary", partition, form = "rational";
    std::string family, emit = "records", kind = "real", factors, omega = "1";
    std::string suite = "small";
    std::string eval_format = "text", counts_format = "json", enum_format = "json";
    std::string wick_format = "text", verify_format = "text";
    int order = 10, kmax = 8, dmax = 4, chi = 0;

    CLI::App* eval = app.add_subcommand("eval", "Weingarten value as rational function or series");
    eval->add_option("--group", group, "unitary | orthogonal | orthogonal-shifted")->required();
    eval->add_option("--partition", partition, "index partition, e.g. 2,1")->required();
    eval->add_option("--form", form, "rational | series");
    eval->add_option("--order", order, "series truncation order (N^-order)");
    eval->add_option("--format", eval_format, "text | json | csv");

    CLI::App* counts = app.add_subcommand("counts", "factorization counting families");
    counts->add_option("--family", family,
                       "monotone | proper | matching-monotone | palindromic-monotone | "
                       "orthogonal-proper")
        ->required();
    counts->add_option("--partition", partition, "index partition")->required();
    counts->add_option("--kmax", kmax, "largest factorization length");
    counts->add_option("--dmax", dmax, "largest depth (proper families)");
    counts->add_option("--format", counts_format, "json | text | csv");

    CLI::App* enumerate = app.add_subcommand("enumerate", "factorization / configuration sets");
    enumerate->add_option("--group", group, "u | o")->required();
    enumerate->add_option("--partition", partition, "index partition")->required();
    enumerate->add_option("--chi", chi, "Euler characteristic (chi_min for series)");
    enumerate->add_option("--emit", emit, "records | census | coefficient | series");
    enumerate->add_option("--format", enum_format, "json | csv");

    CLI::App* wick = app.add_subcommand("wick", "Gaussian moment by the pairing rule");
    wick->add_option("--kind", kind, "real | complex")->required();
    wick->add_option("--factors", factors, "semicolon-joined row,col pairs, '*' marks conjugates")
        ->required();
    wick->add_option("--omega", omega, "variance parameter (exact rational)");
    wick->add_option("--format", wick_format, "text | json");

    CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");
    verify->add_option("--suite", suite, "small | full");
    verify->add_option("--format", verify_format, "text | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!cache_dir.empty()) wg::cache::set_dir(cache_dir);
        if (eval->parsed()) return run_eval(group, partition, form, order, eval_format);
        if (counts->parsed()) return run_counts(family, partition, kmax, dmax, counts_format);
        if (enumerate->parsed()) return run_enumerate(group, partition, chi, emit, enum_format);
        if (wick->parsed()) return run_wick(kind, factors, omega, wick_format);
        if (verify->parsed()) return run_verify(suite, verify_format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
