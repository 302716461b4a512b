#include <doctest.h>

#include <cmath>

#include "lpfc/channel.hpp"
#include "lpfc/rng.hpp"

using namespace lpfc;

namespace {

std::pair<double, double> moments(const std::vector<double>& v) {
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double var = 0;
    for (double x : v) var += (x - mean) * (x - mean);
    var /= static_cast<double>(v.size() - 1);
    return {mean, var};
}

} // namespace

TEST_CASE("Eb/N0 conversion values") {
    CHECK(std::abs(sigma_to_ebn0_db(0.9, 0.25) - 3.93) <= 0.005);
    CHECK(std::abs(sigma_to_ebn0_db(1.20, 0.25) - 1.43) <= 0.005);
    CHECK(sigma_to_ebn0_db(1.0, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS(sigma_to_ebn0_db(0.0, 0.25));
    CHECK_THROWS(sigma_to_ebn0_db(-1.0, 0.25));
    CHECK_THROWS(sigma_to_ebn0_db(1.0, 0.0));
    CHECK_THROWS(sigma_to_ebn0_db(1.0, 1.0));
}

TEST_CASE("Eb/N0 strictly decreasing in sigma and rate") {
    double prev = sigma_to_ebn0_db(0.4, 0.25);
    for (double s = 0.5; s < 2.01; s += 0.1) {
        const double v = sigma_to_ebn0_db(s, 0.25);
        CHECK(v < prev);
        prev = v;
    }
    prev = sigma_to_ebn0_db(1.0, 0.1);
    for (double r = 0.2; r < 0.95; r += 0.1) {
        const double v = sigma_to_ebn0_db(1.0, r);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("sample_llr moments at sigma 1 and 0.5") {
    const int N = 1000000;
    {
        auto [mean, var] = moments(sample_llr(N, 1.0, 2024));
        CHECK(std::abs(mean - 2.0) < 0.02);
        CHECK(std::abs(var - 4.0) < 0.04);
    }
    {
        auto [mean, var] = moments(sample_llr(N, 0.5, 2025));
        CHECK(std::abs(mean - 8.0) < 0.08);
        CHECK(std::abs(var - 16.0) < 0.16);
    }
}

TEST_CASE("sample_llr determinism") {
    CHECK(sample_llr(1000, 0.9, 77) == sample_llr(1000, 0.9, 77));
    CHECK(sample_llr(1000, 0.9, 77) != sample_llr(1000, 0.9, 78));
}

TEST_CASE("llr_from_received closed form") {
    CHECK(llr_from_received(std::vector<double>{0.0}, 1.3)[0] == 0.0);
    CHECK(llr_from_received(std::vector<double>{1.0}, 1.0)[0] == doctest::Approx(2.0));
    // sign follows the observation
    SplitMix64 rng(5);
    std::vector<double> y(64);
    for (auto& v : y) v = rng.next_gaussian();
    const auto l = llr_from_received(y, 0.8);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(std::signbit(l[i]) == std::signbit(y[i]));
}

TEST_CASE("sample_llr matches llr_from_received of 1 + noise in distribution") {
    const int N = 400000;
    const double sigma = 0.8;
    SplitMix64 rng(99);
    std::vector<double> y(N);
    for (auto& v : y) v = 1.0 + sigma * rng.next_gaussian();
    auto [m1, v1] = moments(llr_from_received(y, sigma));
    auto [m2, v2] = moments(sample_llr(N, sigma, 1234));
    CHECK(std::abs(m1 - m2) < 0.05);
    CHECK(std::abs(v1 - v2) / v1 < 0.02);
}
