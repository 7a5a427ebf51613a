#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "entrovar/estimators.hpp"
#include "entrovar/maxvar.hpp"
#include "entrovar/population.hpp"
#include "oracles.hpp"

using entrovar::Error;
using entrovar::ErrorKind;

namespace {

entrovar::CountHistogram hist_of(std::initializer_list<std::int64_t> counts) {
    return entrovar::make_histogram(std::vector<std::int64_t>(counts));
}

constexpr double kArithLambda0 = 0.19710893709679452;
constexpr double kArithRoulston = 0.16603071305568246; // oracle value at the exact rates

} // namespace

TEST_CASE("plug_in_entropy") {
    CHECK(entrovar::plug_in_entropy(hist_of({5, 5})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(entrovar::plug_in_entropy(hist_of({10, 0})) == 0.0);
    CHECK(entrovar::plug_in_entropy(hist_of({1, 2, 3, 4, 5})) ==
          doctest::Approx(1.4897503188505911).epsilon(1e-14));
}

TEST_CASE("miller_madow_entropy uses the declared support") {
    CHECK(entrovar::miller_madow_entropy(hist_of({5, 5}), 2) ==
          doctest::Approx(std::log(2.0) + 0.05).epsilon(1e-15));
    CHECK(entrovar::miller_madow_entropy(hist_of({10, 0}), 2) ==
          doctest::Approx(0.05).epsilon(1e-15));
    try {
        entrovar::miller_madow_entropy(hist_of({3, 3, 3}), 2);
        FAIL("expected SupportTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SupportTooSmall);
    }
}

TEST_CASE("plug_in_lambda0") {
    CHECK(entrovar::plug_in_lambda0(hist_of({5, 5})) == 0.0);
    CHECK(entrovar::plug_in_lambda0(hist_of({1, 2, 3, 4, 5})) ==
          doctest::Approx(0.197).epsilon(5e-3));

    // rounded maximum-variance counts at growing n approach the maximum
    const double lmax = entrovar::max_variance(5).lambda0;
    double prev_gap = 1.0;
    for (std::int64_t n : {1000, 100000, 10000000}) {
        const auto p0 = static_cast<std::int64_t>(std::llround(0.834 * static_cast<double>(n)));
        const std::int64_t q0 = (n - p0) / 4;
        const auto h = entrovar::make_histogram(
            std::vector<std::int64_t>{p0, q0, q0, q0, n - p0 - 3 * q0});
        const double gap = std::abs(entrovar::plug_in_lambda0(h) - lmax);
        CHECK(gap < prev_gap + 1e-6);
        prev_gap = gap;
    }
    CHECK(prev_gap < 2e-3);
}

TEST_CASE("plug-in values at exact rates equal the population functionals") {
    std::mt19937_64 rng(20240910);
    std::uniform_int_distribution<std::int64_t> count(1, 500);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<std::int64_t> counts(5);
        for (auto& c : counts) c = count(rng);
        const auto h = entrovar::make_histogram(counts);
        std::vector<double> rates(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) rates[i] = h.rate(i);
        const auto d = entrovar::make_distribution(rates, true);
        CHECK(entrovar::plug_in_lambda0(h) ==
              doctest::Approx(entrovar::variance_parameter(d)).epsilon(1e-12));
        CHECK(entrovar::plug_in_entropy(h) ==
              doctest::Approx(entrovar::shannon_entropy(d)).epsilon(1e-12));
    }
}

TEST_CASE("count scaling leaves the rate statistics unchanged") {
    std::mt19937_64 rng(20240911);
    std::uniform_int_distribution<std::int64_t> count(0, 50);
    std::uniform_int_distribution<std::int64_t> scale(2, 9);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<std::int64_t> counts(7);
        for (auto& c : counts) c = count(rng);
        counts[0] += 1;
        const std::int64_t c = scale(rng);
        std::vector<std::int64_t> scaled(counts);
        for (auto& x : scaled) x *= c;
        const auto h1 = entrovar::make_histogram(counts);
        const auto h2 = entrovar::make_histogram(scaled);
        CHECK(entrovar::plug_in_entropy(h1) ==
              doctest::Approx(entrovar::plug_in_entropy(h2)).epsilon(1e-13));
        CHECK(entrovar::plug_in_lambda0(h1) ==
              doctest::Approx(entrovar::plug_in_lambda0(h2)).epsilon(1e-12));
        CHECK(entrovar::roulston_lambda(h1) ==
              doctest::Approx(entrovar::roulston_lambda(h2)).epsilon(1e-12));
    }
}

TEST_CASE("entropy_error_bar") {
    CHECK(entrovar::entropy_error_bar(hist_of({5, 5})) == 0.0);
    CHECK(entrovar::entropy_error_bar(hist_of({10, 0})) == 0.0);
    CHECK(entrovar::entropy_error_bar(hist_of({1, 2, 3, 4, 5})) ==
          doctest::Approx(std::sqrt(kArithLambda0 / 15.0)).epsilon(1e-13));
    CHECK(entrovar::entropy_error_bar(hist_of({1, 2, 3, 4, 5})) ==
          doctest::Approx(0.1146).epsilon(1e-3));
}

TEST_CASE("roulston_lambda") {
    CHECK(entrovar::roulston_lambda(hist_of({5, 5})) == 0.0);
    CHECK(entrovar::roulston_lambda(hist_of({10, 0})) == 0.0);
    const double r = entrovar::roulston_lambda(hist_of({1, 2, 3, 4, 5}));
    CHECK(r == doctest::Approx(kArithRoulston).epsilon(1e-13));
    CHECK(r != doctest::Approx(entrovar::plug_in_lambda0(hist_of({1, 2, 3, 4, 5}))));
}

TEST_CASE("antos_kontoyiannis_bound") {
    CHECK(entrovar::antos_kontoyiannis_bound(7) ==
          doctest::Approx(0.54093804402806738).epsilon(1e-14));
    CHECK(entrovar::antos_kontoyiannis_bound(1000000) ==
          doctest::Approx(1.9086833197722233e-4).epsilon(1e-14));
    CHECK_THROWS_AS(entrovar::antos_kontoyiannis_bound(1), Error);
}

TEST_CASE("worst_case_error_bar") {
    const auto b3 = entrovar::worst_case_error_bar(3, 100);
    CHECK(b3.sigma == doctest::Approx(std::sqrt(0.762 / 100.0)).epsilon(1e-3));
    const auto b5 = entrovar::worst_case_error_bar(5, 10000);
    CHECK(b5.sigma == doctest::Approx(0.01116).epsilon(1e-3));
    const auto b9 = entrovar::worst_case_error_bar(9, 4);
    CHECK(b9.sigma_asymptotic == doctest::Approx(std::log(9.0) / 4.0).epsilon(1e-15));
    CHECK_THROWS_AS(entrovar::worst_case_error_bar(1, 100), Error);
}

TEST_CASE("error-bar ordering against the worst case") {
    std::mt19937_64 rng(20240912);
    std::uniform_int_distribution<std::int64_t> count(0, 200);
    for (int rep = 0; rep < 300; ++rep) {
        std::vector<std::int64_t> counts(2 + rep % 9);
        for (auto& c : counts) c = count(rng);
        counts[rep % counts.size()] += 1;
        const auto h = entrovar::make_histogram(counts);
        const std::size_t m = counts.size();
        // the plug-in variance parameter is the population functional at a
        // simplex point, so it cannot exceed the maximum over the simplex
        const double lmax = entrovar::max_variance(m).lambda0;
        CHECK(entrovar::plug_in_lambda0(h) <= lmax + 1e-12);
        CHECK(entrovar::entropy_error_bar(h) <=
              entrovar::worst_case_error_bar(m, h.total()).sigma + 1e-12);
    }
}

TEST_CASE("worst-case bound beats the distribution-free one") {
    // ln(m) / (2 sqrt(n)) < ln(n) / sqrt(n) whenever n > m >= 2
    for (std::uint64_t m = 2; m <= 64; m *= 2) {
        for (std::uint64_t n = m + 1; n <= 1000000; n *= 7) {
            const double ours = entrovar::worst_case_error_bar(m, n).sigma_asymptotic;
            const double ak = std::sqrt(entrovar::antos_kontoyiannis_bound(n));
            CHECK(ours < ak);
        }
    }
}

TEST_CASE("plug-in lambda0 predictions") {
    const auto u5 = entrovar::uniform_distribution(5);
    CHECK(entrovar::predicted_lambda0_mean(u5, 100) == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(entrovar::predicted_lambda0_variance(u5, 100) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-13));

    const auto a5 = entrovar::arithmetic_distribution(5);
    CHECK(entrovar::predicted_lambda0_mean(a5, 10000) ==
          doctest::Approx(kArithLambda0 + 2.4988833944271568e-4).epsilon(1e-12));

    const auto mv = entrovar::build_stationary_distribution(entrovar::max_variance(5), 0);
    for (std::uint64_t n : {10u, 1000u, 100000u}) {
        CHECK(std::abs(entrovar::predicted_lambda0_variance(mv, n)) < 1e-12);
    }
    CHECK(entrovar::predicted_lambda0_mean(mv, 1000000000) ==
          doctest::Approx(1.2464472142872691).epsilon(1e-7));

    const std::vector<double> with_zero{0.5, 0.5, 0.0};
    CHECK_THROWS_AS(
        entrovar::predicted_lambda0_mean(entrovar::make_distribution(with_zero), 10), Error);
}

TEST_CASE("estimate_entropy bundle and the clamp flag") {
    const auto est = entrovar::estimate_entropy(hist_of({1, 2, 3, 4, 5}));
    CHECK(est.n == 15);
    CHECK(est.m_support == 5);
    CHECK(est.m_declared == 5);
    CHECK(est.h_miller_madow ==
          doctest::Approx(est.h_plugin + 4.0 / 30.0).epsilon(1e-14));
    CHECK(est.sigma_h == doctest::Approx(0.11463243784572048).epsilon(1e-12));
    CHECK(est.h_plugin <= std::log(5.0) + 1e-12);
    CHECK(est.h_plugin >= 0.0);

    const auto wide = entrovar::estimate_entropy(hist_of({1, 2, 3, 4, 5}), 8);
    CHECK(wide.m_declared == 8);
    CHECK(wide.h_miller_madow == doctest::Approx(wide.h_plugin + 7.0 / 30.0).epsilon(1e-14));

    // uniform rates: lambda0_hat collapses to zero up to representation
    // error of the rates (7/21 is not an exact third)
    const auto flat = entrovar::estimate_entropy(hist_of({7, 7, 7}));
    CHECK(flat.lambda0_hat <= 1e-15);
    CHECK(flat.sigma_h <= 1e-8);
    const auto halves = entrovar::estimate_entropy(hist_of({5, 5}));
    CHECK(halves.lambda0_hat == 0.0);
    CHECK(halves.sigma_h == 0.0);
    CHECK_FALSE(halves.lambda0_clamped);
    CHECK_THROWS_AS(entrovar::estimate_entropy(hist_of({5, 5}), 1), Error);
}
