#include <doctest.h>

#include "lpfc/gf2.hpp"
#include "lpfc/rng.hpp"
#include "lpfc/tanner_graph.hpp"
#include "test_helpers.hpp"

using namespace lpfc;

TEST_CASE("single parity check nullspace is {11}") {
    Gf2Matrix h(1, 2);
    h.set(0, 0, true);
    h.set(0, 1, true);
    CHECK(h.rank() == 1);
    auto basis = h.nullspace_basis();
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("hamming(7,4) nullspace spans exactly the 16 exhaustive codewords") {
    const TannerGraph g = load_alist_text(test::kHamming74Alist);
    const Gf2Matrix h = parity_check_matrix(g);
    CHECK(h.rank() == 3);
    auto basis = h.nullspace_basis();
    REQUIRE(basis.size() == 4);

    auto spanned = test::enumerate_codewords_span(g);
    auto exhaustive = test::enumerate_codewords_exhaustive(g);
    REQUIRE(exhaustive.size() == 16);
    std::sort(spanned.begin(), spanned.end());
    std::sort(exhaustive.begin(), exhaustive.end());
    CHECK(spanned == exhaustive);
}

TEST_CASE("random matrices: span members satisfy H*x = 0 and count 2^k") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 2 + static_cast<int>(rng.next_below(4));
        const int cols = rows + 1 + static_cast<int>(rng.next_below(5));
        Gf2Matrix h(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) h.set(r, c, rng.next_below(2) == 1);

        const int rank = h.rank();
        auto basis = h.nullspace_basis();
        CHECK(static_cast<int>(basis.size()) == cols - rank);

        // every basis vector (and a few random combinations) is in the kernel
        for (const auto& v : basis) {
            auto hv = h.multiply(v);
            CHECK(std::all_of(hv.begin(), hv.end(), [](std::uint8_t b) { return b == 0; }));
        }
        for (int probe = 0; probe < 8 && !basis.empty(); ++probe) {
            std::vector<std::uint8_t> x(cols, 0);
            for (const auto& v : basis)
                if (rng.next_below(2))
                    for (int c = 0; c < cols; ++c) x[c] ^= v[c];
            auto hx = h.multiply(x);
            CHECK(std::all_of(hx.begin(), hx.end(), [](std::uint8_t b) { return b == 0; }));
        }

        // distinct basis combinations give distinct vectors (independence)
        if (cols <= 12 && basis.size() <= 8) {
            std::vector<std::vector<std::uint8_t>> all;
            for (std::uint32_t mask = 0; mask < (1u << basis.size()); ++mask) {
                std::vector<std::uint8_t> x(cols, 0);
                for (std::size_t b = 0; b < basis.size(); ++b)
                    if ((mask >> b) & 1u)
                        for (int c = 0; c < cols; ++c) x[c] ^= basis[b][c];
                all.push_back(std::move(x));
            }
            std::sort(all.begin(), all.end());
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        }
    }
}
