#include "wg/zonal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "wg/cache.hpp"
#include "wg/characters.hpp"

namespace wg {
namespace {

constexpr const char* kGenerator = "wg-zonal-hn-average-v1";

/// Cycletype multiset of tau*xi over xi in H_n, for tau the standard
/// permutation of cycletype beta embedded in the hatted domain. Shared
/// across all lambda for a given beta.
std::map<Partition, long long> class_profile(const Partition& beta, int bound) {
    int n = beta.weight();
    Permutation tau = Permutation::standard(beta).to_hatted();
    std::map<Partition, long long> profile;
    for (const Permutation& xi : hyperoctahedral_elements(n, bound))
        ++profile[tau.compose(xi).cycletype()];
    return profile;
}

}  // namespace

Rational zonal_spherical(const Partition& lambda, const Partition& beta, int bound) {
    if (lambda.weight() != beta.weight())
        throw std::invalid_argument("zonal_spherical: |lambda| != |beta|");
    return zonal_table(lambda.weight(), bound).at(lambda, beta);
}

const Rational& ZonalTable::at(const Partition& lambda, const Partition& beta) const {
    auto find = [this](const Partition& p) {
        auto it = std::lower_bound(index.begin(), index.end(), p);
        if (it == index.end() || !(*it == p)) throw std::out_of_range("partition not in table");
        return static_cast<size_t>(it - index.begin());
    };
    return values[find(lambda)][find(beta)];
}

const ZonalTable& zonal_table(int n, int bound) {
    if (n < 1) throw std::invalid_argument("zonal table needs n >= 1");
    if (n > bound) throw std::invalid_argument("zonal table bound exceeded");
    static std::mutex mutex;
    static std::map<int, ZonalTable> tables;
    std::lock_guard lock(mutex);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;

    ZonalTable t;
    t.n = n;
    t.index = partitions(n);
    size_t count = t.index.size();
    t.values.assign(count, std::vector<Rational>(count, Rational(0)));

    // omega_lambda at the identity cosettype must be 1 for every lambda;
    // a cached table failing this is treated as corrupt and rebuilt
    Partition ones(std::vector<int>(n, 1));
    auto identity_column_ok = [&] {
        for (const Partition& lambda : t.index)
            if (!(t.at(lambda, ones) == 1)) return false;
        return true;
    };

    std::string file = "zonal-n" + std::to_string(n) + ".json";
    bool loaded = false;
    if (auto entries = cache::load(file, kGenerator); entries && entries->is_object()) {
        loaded = true;
        for (size_t i = 0; i < count && loaded; ++i)
            for (size_t j = 0; j < count && loaded; ++j) {
                auto e = entries->find(t.index[i].str() + "|" + t.index[j].str());
                if (e == entries->end() || !e->is_string())
                    loaded = false;
                else
                    t.values[i][j] = parse_rational(e->get<std::string>());
            }
        if (loaded && !identity_column_ok()) loaded = false;
    }
    if (!loaded) {
        Int hn = int_pow(Int(2), n) * factorial(n);
        const CharacterTable& chars = character_table(2 * n);  // persists S_2n table
        for (size_t j = 0; j < count; ++j) {
            auto profile = class_profile(t.index[j], bound);
            for (size_t i = 0; i < count; ++i) {
                Int acc(0);
                for (const auto& [type, mult] : profile)
                    acc += to_int(mult) * to_int(chars.at(t.index[i].doubled(), type));
                Rational w(acc, hn);
                w.canonicalize();
                t.values[i][j] = w;
            }
        }
        nlohmann::json entries = nlohmann::json::object();
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j)
                entries[t.index[i].str() + "|" + t.index[j].str()] = to_string(t.values[i][j]);
        cache::store(file, kGenerator, entries);
        if (!identity_column_ok())
            throw std::logic_error("zonal table failed the identity-cosettype check");
    }
    return tables.emplace(n, std::move(t)).first->second;
}

Polynomial zonal_principal(const Partition& lambda, int bound) {
    int n = lambda.weight();
    Int hn = int_pow(Int(2), n) * factorial(n);
    Polynomial sum;
    for (const Partition& mu : partitions(n)) {
        Rational coeff = Rational(double_coset_size(mu), hn) * zonal_spherical(lambda, mu, bound);
        coeff.canonicalize();
        sum = sum + Polynomial::monomial(coeff, mu.length());
    }
    return sum;
}

}  // namespace wg
