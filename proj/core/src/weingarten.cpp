#include "wg/weingarten.hpp"

#include <stdexcept>

#include "wg/characters.hpp"
#include "wg/zonal.hpp"

namespace wg {

RationalFunction wg_unitary(const Partition& alpha, int bound) {
    int n = alpha.weight();
    if (n < 1) throw std::invalid_argument("wg_unitary needs a nonempty partition");
    if (n > bound) throw std::invalid_argument("wg_unitary bound exceeded");
    Rational pref(1, factorial(n) * factorial(n));
    pref.canonicalize();
    RationalFunction sum;
    for (const Partition& lambda : partitions(n)) {
        Int dim = to_int(character_dimension(lambda));
        Rational num = pref * Rational(dim * dim * to_int(character(lambda, alpha)));
        num.canonicalize();
        RationalFunction term =
            RationalFunction::constant(num) /
            RationalFunction(schur_principal(lambda), Polynomial::constant(Rational(1)));
        sum = sum + term;
    }
    return sum;
}

RationalFunction wg_orthogonal(const Partition& beta, int bound) {
    int n = beta.weight();
    if (n < 1) throw std::invalid_argument("wg_orthogonal needs a nonempty partition");
    if (n > bound) throw std::invalid_argument("wg_orthogonal bound exceeded");
    Rational pref(int_pow(Int(2), n) * factorial(n), factorial(2 * n));
    pref.canonicalize();
    RationalFunction sum;
    for (const Partition& lambda : partitions(n)) {
        Rational num = pref * Rational(to_int(character_dimension(lambda.doubled()))) *
                       zonal_spherical(lambda, beta, bound);
        num.canonicalize();
        RationalFunction term =
            RationalFunction::constant(num) /
            RationalFunction(zonal_principal(lambda, bound), Polynomial::constant(Rational(1)));
        sum = sum + term;
    }
    return sum;
}

RationalFunction wg_orthogonal_shifted(const Partition& beta, int bound) {
    return wg_orthogonal(beta, bound).shifted(1);
}

WeingartenResult weingarten(Group g, const Partition& index) {
    switch (g) {
        case Group::Unitary:
            return {g, index, wg_unitary(index)};
        case Group::Orthogonal:
            return {g, index, wg_orthogonal(index)};
        case Group::OrthogonalShifted:
            return {g, index, wg_orthogonal_shifted(index)};
    }
    throw std::logic_error("unknown group");
}

}  // namespace wg
