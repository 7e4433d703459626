#include "wg/text_format.hpp"

#include <sstream>

namespace wg {

std::string factored_str(const RationalFunction& f, const std::string& var) {
    if (f.is_zero()) return "0";
    const Polynomial& den = f.denominator();
    if (den.degree() == 0) return f.numerator().str(var);

    auto roots = den.integer_roots();
    int total = 0;
    for (const auto& [root, mult] : roots) total += mult;
    if (total != den.degree()) return f.str(var);  // does not split; expanded form

    std::ostringstream os;
    const Polynomial& num = f.numerator();
    if (num.degree() == 0)
        os << to_string(num.coefficient(0));
    else
        os << "(" << num.str(var) << ")";
    os << "/(";
    bool first = true;
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
        auto [root, mult] = *it;
        std::string factor;
        if (root == 0)
            factor = var;
        else if (root > 0)
            factor = "(" + var + "-" + std::to_string(root) + ")";
        else
            factor = "(" + var + "+" + std::to_string(-root) + ")";
        for (int i = 0; i < mult; ++i) {
            if (!first) os << " ";
            os << factor;
            first = false;
        }
    }
    os << ")";
    return os.str();
}

}  // namespace wg
