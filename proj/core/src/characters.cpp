#include "wg/characters.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "wg/cache.hpp"

namespace wg {
namespace {

constexpr const char* kGenerator = "wg-characters-mn-v1";

std::mutex g_memo_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> g_memo;

/// Murnaghan-Nakayama over beta-numbers. Removing a rim hook of length r
/// replaces one beta-number b by b-r; the sign is (-1)^(number of
/// beta-numbers strictly between b-r and b).
long long mn(std::vector<int> lambda, std::vector<int> mu) {
    if (lambda.empty()) return 1;
    {
        std::lock_guard lock(g_memo_mutex);
        auto it = g_memo.find({lambda, mu});
        if (it != g_memo.end()) return it->second;
    }
    int r = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());

    int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        if (std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        int height = 0;
        for (int j = 0; j < L; ++j)
            if (j != i && beta[j] > b && beta[j] < beta[i]) ++height;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        for (int j = 0; j < L; ++j) {
            int part = nb[j] - (L - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sub = mn(nl, mu_rest);
        total += (height % 2 ? -sub : sub);
    }
    std::lock_guard lock(g_memo_mutex);
    g_memo.emplace(std::make_pair(std::move(lambda), std::move(mu)), total);
    return total;
}

}  // namespace

long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| != |mu|");
    return mn(lambda.parts(), mu.parts());
}

long long CharacterTable::at(const Partition& lambda, const Partition& mu) const {
    auto find = [this](const Partition& p) {
        auto it = std::lower_bound(index.begin(), index.end(), p);
        if (it == index.end() || !(*it == p)) throw std::out_of_range("partition not in table");
        return static_cast<size_t>(it - index.begin());
    };
    return values[find(lambda)][find(mu)];
}

const CharacterTable& character_table(int n) {
    static std::mutex mutex;
    static std::map<int, CharacterTable> tables;
    std::lock_guard lock(mutex);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;

    CharacterTable t;
    t.n = n;
    t.index = partitions(n);
    size_t count = t.index.size();
    t.values.assign(count, std::vector<long long>(count, 0));

    std::string file = "characters-n" + std::to_string(n) + ".json";
    bool loaded = false;
    if (auto entries = cache::load(file, kGenerator); entries && entries->is_object()) {
        loaded = true;
        for (size_t i = 0; i < count && loaded; ++i)
            for (size_t j = 0; j < count && loaded; ++j) {
                std::string key = t.index[i].str() + "|" + t.index[j].str();
                auto e = entries->find(key);
                if (e == entries->end() || !e->is_number_integer())
                    loaded = false;
                else
                    t.values[i][j] = e->get<long long>();
            }
    }
    if (!loaded) {
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j)
                t.values[i][j] = character(t.index[i], t.index[j]);
        nlohmann::json entries = nlohmann::json::object();
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < count; ++j)
                entries[t.index[i].str() + "|" + t.index[j].str()] = t.values[i][j];
        cache::store(file, kGenerator, entries);
    }
    return tables.emplace(n, std::move(t)).first->second;
}

Polynomial schur_principal(const Partition& lambda) {
    int n = lambda.weight();
    Polynomial sum;
    for (const Partition& mu : partitions(n)) {
        Rational coeff(class_size(mu) * to_int(character(lambda, mu)), factorial(n));
        coeff.canonicalize();
        sum = sum + Polynomial::monomial(coeff, mu.length());
    }
    return sum;
}

}  // namespace wg
