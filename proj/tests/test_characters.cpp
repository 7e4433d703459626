#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "wg/cache.hpp"
#include "wg/characters.hpp"
#include "wg/zonal.hpp"

using namespace wg;

namespace {

/// Hook length formula, an oracle for dimensions independent of the
/// recursion in the library.
Int hook_dimension(const Partition& lambda) {
    int n = lambda.weight();
    const auto& parts = lambda.parts();
    std::vector<int> conj(n + 1, 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++conj[j];
    Int hooks(1);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < parts[i]; ++j) hooks *= (parts[i] - j) + (conj[j] - i) - 1;
    return factorial(n) / hooks;
}

/// Brute-force semistandard tableau counter: rows weakly increasing,
/// columns strictly increasing, entries in 1..N.
long long count_ssyt(const Partition& lambda, int N) {
    const auto& parts = lambda.parts();
    int rows = lambda.length();
    std::vector<std::vector<int>> t(rows);
    for (int i = 0; i < rows; ++i) t[i].assign(parts[i], 0);
    long long count = 0;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == rows) {
            ++count;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == parts[i]) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, t[i][j - 1]);
        if (i > 0 && j < parts[i - 1]) lo = std::max(lo, t[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v) {
            t[i][j] = v;
            self(self, ni, nj);
        }
        t[i][j] = 0;
    };
    rec(rec, 0, 0);
    return count;
}

}  // namespace

TEST_CASE("character values") {
    for (int n = 1; n <= 6; ++n)
        for (const Partition& mu : partitions(n)) CHECK(character(Partition{n}, mu) == 1);

    CHECK(character(Partition{1, 1}, Partition{2}) == -1);
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(hook_dimension(Partition{2, 1}) == 2);

    for (int n = 1; n <= 6; ++n)
        for (const Partition& lambda : partitions(n))
            CHECK(to_int(character_dimension(lambda)) == hook_dimension(lambda));

    CHECK_THROWS_AS(character(Partition{2}, Partition{3}), std::invalid_argument);
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions(n);
        // columns: sum_lambda chi(mu) chi(nu) = z_mu [mu == nu]
        for (const Partition& mu : ps)
            for (const Partition& nu : ps) {
                Int acc(0);
                for (const Partition& lambda : ps)
                    acc += to_int(character(lambda, mu)) * to_int(character(lambda, nu));
                CHECK(acc == (mu == nu ? z_of(mu) : Int(0)));
            }
        // rows: sum_mu |C_mu| chi_lambda(mu) chi_kappa(mu) = n! [lambda == kappa]
        for (const Partition& lambda : ps)
            for (const Partition& kappa : ps) {
                Int acc(0);
                for (const Partition& mu : ps)
                    acc += class_size(mu) * to_int(character(lambda, mu)) *
                           to_int(character(kappa, mu));
                CHECK(acc == (lambda == kappa ? factorial(n) : Int(0)));
            }
        Int burnside(0);
        for (const Partition& lambda : ps) {
            Int d = to_int(character_dimension(lambda));
            burnside += d * d;
        }
        CHECK(burnside == factorial(n));
    }
}

TEST_CASE("schur principal specialization") {
    CHECK(schur_principal(Partition{1}) == Polynomial::variable());
    CHECK(schur_principal(Partition{2}) ==
          Polynomial{Rational(0), Rational(1, 2), Rational(1, 2)});
    CHECK(schur_principal(Partition{1, 1}) ==
          Polynomial{Rational(0), Rational(-1, 2), Rational(1, 2)});

    // dimension counts against the brute-force tableau counter
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions(n))
            for (int N = 1; N <= 5; ++N)
                CHECK(schur_principal(lambda).evaluate(Rational(N)) ==
                      Rational(to_int(count_ssyt(lambda, N))));
}

TEST_CASE("zonal spherical functions") {
    for (int n = 1; n <= 4; ++n)
        for (const Partition& lambda : partitions(n))
            CHECK(zonal_spherical(lambda, Partition(std::vector<int>(n, 1))) == Rational(1));

    CHECK(zonal_spherical(Partition{2}, Partition{2}) == Rational(1));
    CHECK(zonal_spherical(Partition{1, 1}, Partition{2}) == Rational(-1, 2));

    // constancy on double cosets: average over explicit representatives
    for (int n = 2; n <= 3; ++n) {
        auto hn = hyperoctahedral_elements(n);
        for (const Partition& beta : partitions(n)) {
            Permutation tau = Permutation::standard(beta).to_hatted();
            for (const Partition& lambda : partitions(n)) {
                Rational reference = zonal_spherical(lambda, beta);
                for (size_t i = 0; i < hn.size(); i += 7) {
                    // another representative of the same double coset
                    Permutation rep = hn[i].compose(tau);
                    Int hsize = int_pow(Int(2), n) * factorial(n);
                    Int acc_num(0);
                    Rational acc(0);
                    for (const Permutation& xi : hn)
                        acc += Rational(to_int(character(lambda.doubled(),
                                                         rep.compose(xi).cycletype())));
                    acc /= Rational(hsize);
                    CHECK(acc == reference);
                }
            }
        }
    }
}

TEST_CASE("zonal principal specialization") {
    CHECK(zonal_principal(Partition{1}) == Polynomial::variable());
    CHECK(zonal_principal(Partition{2}) == Polynomial{Rational(0), Rational(2), Rational(1)});
    CHECK(zonal_principal(Partition{1, 1}) ==
          Polynomial{Rational(0), Rational(-1), Rational(1)});
}

TEST_CASE("cache round trip and self-heal") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "wg-cache-test";
    std::filesystem::remove_all(dir);
    cache::set_dir(dir.string());

    const CharacterTable& t = character_table(5);
    long long value = t.at(Partition{3, 2}, Partition{2, 2, 1});
    CHECK(value == character(Partition{3, 2}, Partition{2, 2, 1}));
    CHECK(std::filesystem::exists(dir / "characters-n5.json"));

    // corrupt the file; a fresh load must recompute, not fail
    {
        std::ofstream out(dir / "characters-n5.json");
        out << "{ not json";
    }
    auto reloaded = cache::load("characters-n5.json", "wg-characters-mn-v1");
    CHECK(!reloaded.has_value());

    // stale generator version is ignored
    cache::store("characters-n5.json", "some-other-version", nlohmann::json::object());
    CHECK(!cache::load("characters-n5.json", "wg-characters-mn-v1").has_value());
    cache::set_dir("");
}
