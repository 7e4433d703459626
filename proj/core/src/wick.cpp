#include "wg/wick.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wg {

Rational complex_wick_moment(const IndexedProduct& p) {
    std::vector<int> zs, zconjs;
    for (size_t i = 0; i < p.factors.size(); ++i) {
        switch (p.factors[i].tag) {
            case FactorTag::Z: zs.push_back(static_cast<int>(i)); break;
            case FactorTag::ZConj: zconjs.push_back(static_cast<int>(i)); break;
            case FactorTag::M:
                throw std::invalid_argument("real factor in a complex moment");
        }
    }
    if (zs.size() != zconjs.size()) return Rational(0);
    size_t n = zs.size();
    if (n == 0) return Rational(1);
    if (n > 6) throw std::invalid_argument("complex_wick_moment bound exceeded");

    // <Z_ab Z*_cd> = delta_ac delta_bd / Omega
    long long matches = 0;
    std::vector<int> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i) {
            const IndexedFactor& z = p.factors[zs[i]];
            const IndexedFactor& zc = p.factors[zconjs[perm[i]]];
            ok = z.row == zc.row && z.col == zc.col;
        }
        if (ok) ++matches;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(to_int(matches)) * rat_pow(p.omega, -static_cast<long>(n));
}

Rational real_wick_moment(const IndexedProduct& p) {
    for (const auto& f : p.factors)
        if (f.tag != FactorTag::M)
            throw std::invalid_argument("complex factor in a real moment");
    size_t len = p.factors.size();
    if (len % 2 != 0) return Rational(0);
    size_t n = len / 2;
    if (n == 0) return Rational(1);
    if (n > 6) throw std::invalid_argument("real_wick_moment bound exceeded");

    // sum over pairings of the 2n positions
    long long matches = 0;
    std::vector<int> partner(len, -1);
    auto rec = [&](auto&& self) -> void {
        size_t i = 0;
        while (i < len && partner[i] >= 0) ++i;
        if (i == len) {
            ++matches;
            return;
        }
        for (size_t j = i + 1; j < len; ++j) {
            if (partner[j] >= 0) continue;
            const IndexedFactor& a = p.factors[i];
            const IndexedFactor& b = p.factors[j];
            if (a.row == b.row && a.col == b.col) {
                partner[i] = static_cast<int>(j);
                partner[j] = static_cast<int>(i);
                self(self);
                partner[i] = partner[j] = -1;
            }
        }
    };
    rec(rec);
    return Rational(to_int(matches)) * rat_pow(p.omega, -static_cast<long>(n));
}

std::vector<IndexedFactor> parse_factors(const std::string& spec, FactorTag default_tag) {
    std::vector<IndexedFactor> out;
    std::istringstream is(spec);
    std::string item;
    while (std::getline(is, item, ';')) {
        if (item.empty()) continue;
        FactorTag tag = default_tag;
        std::string core = item;
        if (core.back() == '*') {
            tag = FactorTag::ZConj;
            core.pop_back();
        }
        auto comma = core.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("factor needs 'row,col': " + item);
        IndexedFactor f;
        f.row = std::stoi(core.substr(0, comma));
        f.col = std::stoi(core.substr(comma + 1));
        f.tag = tag;
        out.push_back(f);
    }
    return out;
}

}  // namespace wg
