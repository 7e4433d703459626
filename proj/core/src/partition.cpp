#include "wg/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace wg {

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    for (int p : parts_) weight_ += p;
    validate();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) weight_ += p;
    validate();
}

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> v(weight_ + 1, 0);
    for (int p : parts_) ++v[p];
    return v;
}

Partition Partition::doubled() const {
    std::vector<int> d = parts_;
    for (int& p : d) p *= 2;
    return Partition(std::move(d));
}

bool Partition::operator<(const Partition& o) const {
    // reverse-lexicographic within equal weight; lighter partitions first
    if (weight_ != o.weight_) return weight_ < o.weight_;
    return parts_ > o.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string item;
        while (std::getline(is, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("bad partition part: " + item);
            parts.push_back(v);
        }
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions(int n, int min_part) {
    if (n < 0) throw std::invalid_argument("partitions of a negative integer");
    if (min_part < 1) throw std::invalid_argument("min_part must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending first parts give reverse-lexicographic order directly
    auto rec = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= min_part; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Int z_of(const Partition& lambda) {
    Int z(1);
    auto v = lambda.multiplicities();
    for (int j = 1; j <= lambda.weight(); ++j) {
        if (v[j] == 0) continue;
        z *= int_pow(Int(j), v[j]) * factorial(v[j]);
    }
    return z;
}

Int class_size(const Partition& lambda) { return factorial(lambda.weight()) / z_of(lambda); }

Int double_coset_size(const Partition& lambda) {
    int n = lambda.weight();
    Int hn = int_pow(Int(2), n) * factorial(n);
    return hn * class_size(lambda) * int_pow(Int(2), lambda.rank());
}

}  // namespace wg
