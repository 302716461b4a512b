#include "lpfc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "lpfc/rng.hpp"

namespace lpfc {

double sigma_to_ebn0_db(double sigma, double rate) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma_to_ebn0_db: sigma must be > 0");
    if (!(rate > 0.0) || !(rate < 1.0)) throw std::invalid_argument("sigma_to_ebn0_db: rate must be in (0,1)");
    return 10.0 * std::log10(1.0 / (2.0 * rate * sigma * sigma));
}

LlrVector sample_llr(int n, double sigma, std::uint64_t seed) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sample_llr: sigma must be > 0");
    if (n < 0) throw std::invalid_argument("sample_llr: n must be >= 0");
    const double mean = 2.0 / (sigma * sigma);
    const double stddev = 2.0 / sigma;
    SplitMix64 rng(seed);
    LlrVector l(static_cast<std::size_t>(n));
    for (auto& v : l) v = mean + stddev * rng.next_gaussian();
    return l;
}

LlrVector llr_from_received(std::span<const double> y, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("llr_from_received: sigma must be > 0");
    const double scale = 2.0 / (sigma * sigma);
    LlrVector l(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) l[i] = scale * y[i];
    return l;
}

} // namespace lpfc
