#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "uotto/specfun.hpp"

#include <cmath>
#include <random>

using namespace uotto;

namespace {

// Independent reference: plain term-by-term summation in long double,
// no acceleration, no compensation tricks.
long double lerch_naive(double z, int s, double a) {
    long double sum = 0.0L;
    for (long k = 0; k < 40'000'000; ++k) {
        long double den = (long double)k + (long double)a;
        long double term = std::pow((long double)z, (long double)k) /
                           (s == 1 ? den : den * den);
        sum += term;
        if (k + a > 1.0 && std::abs(term) < 1e-19L * std::abs(sum) &&
            z < 0.999)
            break;
    }
    return sum;
}

constexpr double kTol = 1e-12;

} // namespace

TEST_CASE("frozen high-precision reference values") {
    // 60+ digit arbitrary-precision evaluations of Phi(z, s, a),
    // rounded to double.
    CHECK(lerch_phi({0.5, 2, 1.0}, kTol) ==
          doctest::Approx(1.164481052930025).epsilon(5e-12));
    const double z = 0.93910136742429265; // exp(-2*pi*0.1/10)
    const double ap = 1.0 + 10.0 / (2.0 * M_PI);
    const double am = 1.0 - 10.0 / (2.0 * M_PI);
    CHECK(lerch_phi({z, 1, ap}, kTol) ==
          doctest::Approx(1.8479755466985756).epsilon(5e-12));
    CHECK(lerch_phi({z, 2, ap}, kTol) ==
          doctest::Approx(0.36728419745652984).epsilon(5e-12));
    CHECK(lerch_phi({z, 1, am}, kTol) ==
          doctest::Approx(2.8240030896668694).epsilon(5e-12));
    CHECK(lerch_phi({0.3, 2, -2.3}, kTol) ==
          doctest::Approx(1.4248545913650108).epsilon(5e-12));
    CHECK(lerch_phi({0.3, 1, -2.3}, kTol) ==
          doctest::Approx(-0.92105665195206137).epsilon(5e-12));
    CHECK(lerch_phi({0.95, 1, 0.7}, kTol) ==
          doctest::Approx(3.7557490815409912).epsilon(1e-11));
    CHECK(lerch_phi({0.99, 2, 3.2}, kTol) ==
          doctest::Approx(0.33638842660724884).epsilon(1e-11));
}

TEST_CASE("agreement with naive long-double summation on a grid") {
    for (int iz = 0; iz < 10; ++iz) {
        double z = 0.01 + 0.98 * iz / 9.0;
        for (int ia = 0; ia < 10; ++ia) {
            double a = -4.5 + 14.5 * ia / 9.0 + 0.013; // keep off integers
            for (int s : {1, 2}) {
                double got = lerch_phi({z, s, a}, kTol);
                double want = (double)lerch_naive(z, s, a);
                CHECK(got == doctest::Approx(want).epsilon(5e-9));
            }
        }
    }
}

TEST_CASE("contiguous-offset recurrence Phi(z,s,a) = z Phi(z,s,a+1) + a^-s") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> uz(0.0, 0.98);
    std::uniform_real_distribution<double> ua(-4.0, 8.0);
    int checked = 0;
    while (checked < 1000) {
        double z = uz(rng);
        double a = ua(rng);
        if (a <= 0.0 && std::abs(a - std::round(a)) < 1e-3) continue;
        if (a <= -1.0 && std::abs(a + 1.0 - std::round(a + 1.0)) < 1e-3)
            continue;
        int s = 1 + (checked & 1);
        double lhs = lerch_phi({z, s, a}, kTol);
        double rhs = z * lerch_phi({z, s, a + 1.0}, kTol) + std::pow(a, -s);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
        CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
        ++checked;
    }
}

TEST_CASE("monotone increasing in z for positive offsets") {
    for (double a : {0.3, 1.0, 2.7, 9.1}) {
        for (int s : {1, 2}) {
            double prev = lerch_phi({0.0, s, a}, kTol);
            for (double z : {0.1, 0.3, 0.5, 0.7, 0.9, 0.97}) {
                double cur = lerch_phi({z, s, a}, kTol);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(lerch_phi({-0.1, 2, 1.0}, kTol), DomainError);
    CHECK_THROWS_AS(lerch_phi({1.0, 2, 1.0}, kTol), DomainError);
    CHECK_THROWS_AS(lerch_phi({0.5, 3, 1.0}, kTol), DomainError);
    CHECK_THROWS_AS(lerch_phi({0.5, 2, 1.0}, 1e-2), DomainError);
    CHECK_THROWS_AS(lerch_phi({0.5, 2, 1.0}, 1e-15), DomainError);
    CHECK_THROWS_AS(lerch_phi({0.5, 2, 0.0}, kTol), SingularOffset);
    CHECK_THROWS_AS(lerch_phi({0.5, 2, -3.0}, kTol), SingularOffset);
    CHECK_THROWS_AS(lerch_phi({0.5, 1, -2.0 + 1e-12}, kTol), SingularOffset);
    CHECK_NOTHROW(lerch_phi({0.5, 1, -2.0 + 1e-6}, kTol));
}
