#include "wg/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wg {

std::string label_str(Label a) {
    std::string s = std::to_string(forget_hat(a));
    if (is_hatted(a)) s += "h";
    return s;
}

Label parse_label(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty label");
    bool hat = s.back() == 'h';
    std::string core = hat ? s.substr(0, s.size() - 1) : s;
    size_t pos = 0;
    int v = std::stoi(core, &pos);
    if (pos != core.size() || v <= 0) throw std::invalid_argument("bad label: " + s);
    return hat ? -v : v;
}

int Permutation::index_of(Label a) const {
    int h = forget_hat(a);
    if (h < 1 || h > n_) throw std::out_of_range("label outside domain");
    if (!hatted_) {
        if (a < 0) throw std::out_of_range("hatted label in plain domain");
        return a - 1;
    }
    return a > 0 ? a - 1 : n_ + h - 1;
}

Label Permutation::label_at(int idx) const {
    if (!hatted_) return idx + 1;
    return idx < n_ ? idx + 1 : -(idx - n_ + 1);
}

Permutation Permutation::identity(int k) {
    Permutation p(false, k);
    for (int i = 0; i < k; ++i) p.img_[i] = i + 1;
    return p;
}

Permutation Permutation::identity_hatted(int n) {
    Permutation p(true, n);
    for (int i = 0; i < 2 * n; ++i) p.img_[i] = p.label_at(i);
    return p;
}

Permutation Permutation::standard(const Partition& alpha) {
    Permutation p = identity(alpha.weight());
    int start = 1;
    for (int part : alpha.parts()) {
        for (int i = 0; i < part; ++i)
            p.img_[start - 1 + i] = start + (i + 1) % part;
        start += part;
    }
    return p;
}

Permutation Permutation::from_cycles(int k, const std::vector<std::vector<Label>>& cycles) {
    Permutation p = identity(k);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) p.img_[p.index_of(c[i])] = c[(i + 1) % c.size()];
    // validate bijectivity
    std::vector<bool> seen(k, false);
    for (Label b : p.img_) {
        int idx = p.index_of(b);
        if (seen[idx]) throw std::invalid_argument("cycles do not define a bijection");
        seen[idx] = true;
    }
    return p;
}

Permutation Permutation::from_cycles_hatted(int n, const std::vector<std::vector<Label>>& cycles) {
    Permutation p = identity_hatted(n);
    for (const auto& c : cycles)
        for (size_t i = 0; i < c.size(); ++i) p.img_[p.index_of(c[i])] = c[(i + 1) % c.size()];
    std::vector<bool> seen(2 * n, false);
    for (Label b : p.img_) {
        int idx = p.index_of(b);
        if (seen[idx]) throw std::invalid_argument("cycles do not define a bijection");
        seen[idx] = true;
    }
    return p;
}

std::vector<Label> Permutation::domain() const {
    std::vector<Label> d;
    d.reserve(domain_size());
    for (int i = 0; i < domain_size(); ++i) d.push_back(label_at(i));
    return d;
}

Label Permutation::apply(Label a) const { return img_[index_of(a)]; }

Permutation Permutation::inverse() const {
    Permutation p(hatted_, n_);
    for (int i = 0; i < domain_size(); ++i) p.img_[index_of(img_[i])] = label_at(i);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (hatted_ != other.hatted_ || n_ != other.n_)
        throw std::invalid_argument("compose: domain mismatch");
    Permutation p(hatted_, n_);
    for (int i = 0; i < domain_size(); ++i) p.img_[i] = apply(other.img_[i]);
    return p;
}

std::vector<std::vector<Label>> Permutation::cycles(bool include_fixed) const {
    std::vector<std::vector<Label>> out;
    std::vector<bool> seen(domain_size(), false);
    // start cycles at the least label in canonical label order
    std::vector<Label> dom = domain();
    std::sort(dom.begin(), dom.end(),
              [](Label a, Label b) { return label_sort_key(a) < label_sort_key(b); });
    for (Label start : dom) {
        if (seen[index_of(start)]) continue;
        std::vector<Label> cyc;
        Label x = start;
        do {
            seen[index_of(x)] = true;
            cyc.push_back(x);
            x = apply(x);
        } while (x != start);
        if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
    }
    return out;
}

Partition Permutation::cycletype() const {
    std::vector<int> lens;
    for (const auto& c : cycles(true)) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(domain_size(), false);
    for (int i = 0; i < domain_size(); ++i) {
        if (seen[i]) continue;
        ++count;
        int x = i;
        while (!seen[x]) {
            seen[x] = true;
            x = index_of(img_[x]);
        }
    }
    return count;
}

Permutation Permutation::to_hatted() const {
    if (hatted_) return *this;
    Permutation p = identity_hatted(n_);
    for (int i = 0; i < n_; ++i) p.img_[i] = img_[i];
    return p;
}

Permutation Permutation::hat() const {
    if (!hatted_) throw std::domain_error("hat requires the hatted domain");
    Permutation inv = inverse();
    Permutation p(true, n_);
    for (int i = 0; i < 2 * n_; ++i) {
        Label a = label_at(i);
        p.img_[i] = hat_label(inv.apply(hat_label(a)));
    }
    return p;
}

bool Permutation::is_palindromic() const { return hat() == *this; }

std::string Permutation::str() const {
    auto cyc = cycles(false);
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cyc) {
        os << "(";
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << " ";
            os << label_str(c[i]);
        }
        os << ")";
    }
    return os.str();
}

PermutationBuilder::PermutationBuilder(bool hatted, int n) : p_(hatted, n) {
    for (auto& v : p_.img_) v = 0;
}

void PermutationBuilder::set(Label a, Label b) { p_.img_[p_.index_of(a)] = b; }

Permutation PermutationBuilder::finish() const {
    std::vector<bool> seen(p_.domain_size(), false);
    for (Label b : p_.img_) {
        if (b == 0) throw std::logic_error("incomplete permutation");
        int idx = p_.index_of(b);
        if (seen[idx]) throw std::logic_error("not a bijection");
        seen[idx] = true;
    }
    return p_;
}

}  // namespace wg
