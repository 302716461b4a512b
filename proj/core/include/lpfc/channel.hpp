#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lpfc {

using LlrVector = std::vector<double>;

struct ChannelSpec {
    double sigma = 1.0; // noise standard deviation
    double rate = 0.5;  // design rate for Eb/N0 accounting
};

/// 10*log10(1/(2*rate*sigma^2)). Throws std::invalid_argument outside
/// sigma > 0, 0 < rate < 1.
double sigma_to_ebn0_db(double sigma, double rate);

/// n independent draws from N(2/sigma^2, 4/sigma^2) — the LLR distribution
/// under all-zero transmission. Deterministic per seed.
LlrVector sample_llr(int n, double sigma, std::uint64_t seed);

/// l_i = 2*y_i/sigma^2 under the 0 -> +1, 1 -> -1 mapping.
LlrVector llr_from_received(std::span<const double> y, double sigma);

} // namespace lpfc
