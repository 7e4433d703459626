#include "wg/matching.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wg {

Matching::Matching(int n, std::vector<std::pair<Label, Label>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != n_)
        throw std::invalid_argument("matching needs exactly n blocks");
    canonicalize();
    std::vector<bool> seen(2 * n_, false);
    for (auto& [a, b] : blocks_) {
        for (Label x : {a, b}) {
            int h = forget_hat(x);
            if (h < 1 || h > n_) throw std::invalid_argument("matching label outside domain");
            int idx = x > 0 ? x - 1 : n_ + h - 1;
            if (seen[idx]) throw std::invalid_argument("matching blocks are not disjoint");
            seen[idx] = true;
        }
        if (a == b) throw std::invalid_argument("matching block with repeated label");
    }
}

void Matching::canonicalize() {
    for (auto& [a, b] : blocks_)
        if (label_sort_key(a) > label_sort_key(b)) std::swap(a, b);
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) {
        return label_sort_key(x.first) < label_sort_key(y.first);
    });
}

Matching Matching::trivial(int n) {
    std::vector<std::pair<Label, Label>> blocks;
    blocks.reserve(n);
    for (int a = 1; a <= n; ++a) blocks.emplace_back(a, -a);
    return Matching(n, std::move(blocks));
}

Label Matching::partner(Label a) const {
    for (const auto& [x, y] : blocks_) {
        if (x == a) return y;
        if (y == a) return x;
    }
    throw std::out_of_range("label not in matching");
}

Permutation Matching::involution() const {
    std::vector<std::vector<Label>> cycles;
    for (const auto& [a, b] : blocks_) cycles.push_back({a, b});
    return Permutation::from_cycles_hatted(n_, cycles);
}

std::string Matching::str() const {
    std::ostringstream os;
    for (const auto& [a, b] : blocks_) os << "{" << label_str(a) << "," << label_str(b) << "}";
    return os.str();
}

std::vector<Matching> matchings(int n) {
    if (n < 1) throw std::invalid_argument("matchings need n >= 1");
    std::vector<Label> labels;
    for (int a = 1; a <= n; ++a) labels.push_back(a);
    for (int a = 1; a <= n; ++a) labels.push_back(-a);
    std::sort(labels.begin(), labels.end(),
              [](Label a, Label b) { return label_sort_key(a) < label_sort_key(b); });

    std::vector<Matching> out;
    std::vector<std::pair<Label, Label>> cur;
    std::vector<bool> used(labels.size(), false);
    auto rec = [&](auto&& self) -> void {
        size_t i = 0;
        while (i < labels.size() && used[i]) ++i;
        if (i == labels.size()) {
            out.emplace_back(n, cur);
            return;
        }
        used[i] = true;
        for (size_t j = i + 1; j < labels.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur.emplace_back(labels[i], labels[j]);
            self(self);
            cur.pop_back();
            used[j] = false;
        }
        used[i] = false;
    };
    rec(rec);
    return out;
}

Matching act(const Permutation& sigma, const Matching& m) {
    if (!sigma.hatted() || sigma.domain_parameter() != m.n())
        throw std::invalid_argument("matching action: domain mismatch");
    std::vector<std::pair<Label, Label>> blocks;
    blocks.reserve(m.n());
    for (const auto& [a, b] : m.blocks()) blocks.emplace_back(sigma(a), sigma(b));
    return Matching(m.n(), std::move(blocks));
}

Partition coset_type(const Matching& m1, const Matching& m2) {
    if (m1.n() != m2.n()) throw std::invalid_argument("coset_type: size mismatch");
    int n = m1.n();
    std::vector<bool> seen(2 * n, false);
    auto idx = [n](Label a) { return a > 0 ? a - 1 : n + forget_hat(a) - 1; };
    std::vector<int> parts;
    for (int i = 0; i < 2 * n; ++i) {
        if (seen[i]) continue;
        Label start = i < n ? i + 1 : -(i - n + 1);
        // walk alternating m1/m2 edges around the component
        int edges = 0;
        Label x = start;
        bool use_first = true;
        do {
            seen[idx(x)] = true;
            x = use_first ? m1.partner(x) : m2.partner(x);
            use_first = !use_first;
            ++edges;
        } while (x != start);
        parts.push_back(edges / 2);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

Partition coset_type(const Matching& m) { return coset_type(m, Matching::trivial(m.n())); }

Partition coset_type(const Permutation& sigma) {
    if (!sigma.hatted()) throw std::invalid_argument("cosettype needs the hatted domain");
    return coset_type(act(sigma, Matching::trivial(sigma.domain_parameter())));
}

std::vector<Permutation> hyperoctahedral_elements(int n, int bound) {
    if (n < 1) throw std::invalid_argument("hyperoctahedral group needs n >= 1");
    if (n > bound) throw std::invalid_argument("hyperoctahedral enumeration bound exceeded");
    // signed permutations: g in S_n plus a sign per point, sigma(-a) = -sigma(a)
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<Permutation> out;
    do {
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            PermutationBuilder b(true, n);
            for (int a = 1; a <= n; ++a) {
                Label image = perm[a - 1];
                if (signs & (1u << (a - 1))) image = -image;
                b.set(a, image);
                b.set(-a, -image);
            }
            out.push_back(b.finish());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Matching canonical_matching(const Partition& beta) {
    Permutation pi = Permutation::standard(beta);
    std::vector<std::pair<Label, Label>> blocks;
    for (int a = 1; a <= beta.weight(); ++a) blocks.emplace_back(a, -pi(a));
    return Matching(beta.weight(), std::move(blocks));
}

}  // namespace wg
