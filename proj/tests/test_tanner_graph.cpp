#include <doctest.h>

#include <set>
#include <sstream>

#include "lpfc/rng.hpp"
#include "lpfc/tanner_graph.hpp"
#include "test_helpers.hpp"

using namespace lpfc;

namespace {

// adjacency as sorted sets, for order-insensitive comparison
std::vector<std::set<int>> canonical(const TannerGraph& g) {
    std::vector<std::set<int>> out;
    for (const auto& mem : g.check_members) out.emplace_back(mem.begin(), mem.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("alist: single check over three variables") {
    const char* text =
        "3 1\n"
        "1 3\n"
        "1 1 1\n"
        "3\n"
        "1\n"
        "1\n"
        "1\n"
        "1 2 3\n";
    const TannerGraph g = load_alist_text(text);
    CHECK(g.n == 3);
    CHECK(g.m == 1);
    REQUIRE(g.check_members.size() == 1);
    CHECK(g.check_members[0] == std::vector<int>{0, 1, 2});
}

TEST_CASE("alist: hamming(7,4)") {
    const TannerGraph g = load_alist_text(test::kHamming74Alist);
    CHECK(g.n == 7);
    CHECK(g.m == 3);
    CHECK(parity_check_matrix(g).rank() == 3);
    CHECK(test::enumerate_codewords_exhaustive(g).size() == 16);
}

TEST_CASE("alist errors") {
    CHECK_THROWS(load_alist_text("banana"));
    CHECK_THROWS(load_alist_text("3 1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2 9\n")); // out of range
    CHECK_THROWS(load_alist_text("3 1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2\n"));   // truncated row
    CHECK_THROWS(load_alist_text("3 1\n1 3\n1 1 1\n3\n1\n1\n1\n1 2 2\n")); // repeated member
    // variable block disagrees with check block
    CHECK_THROWS(load_alist_text("3 1\n1 3\n1 1 0\n3\n1\n1\n1\n1 2 3\n"));
    // checks of degree < 2 are rejected
    CHECK_THROWS(load_alist_text("2 1\n1 1\n1 0\n1\n1\n0\n1\n"));
}

TEST_CASE("alist round trip reproduces the graph") {
    SplitMix64 rng(9);
    for (int t = 0; t < 5; ++t) {
        const TannerGraph g = sample_regular(24, 3, 4, rng.next());
        const TannerGraph h = load_alist_text(write_alist_text(g));
        CHECK(h.n == g.n);
        CHECK(h.m == g.m);
        CHECK(canonical(h) == canonical(g));
    }
}

TEST_CASE("sample_regular: forced tiny instance") {
    const TannerGraph g = sample_regular(4, 3, 4, 7);
    CHECK(g.m == 3);
    for (int c = 0; c < g.m; ++c) {
        std::set<int> mem(g.check_members[c].begin(), g.check_members[c].end());
        CHECK(mem.size() == 4);
    }
}

TEST_CASE("sample_regular: regularity, determinism, divisibility") {
    const TannerGraph a = sample_regular(160, 3, 4, 12345);
    CHECK(a.m == 120);
    for (int i = 0; i < a.n; ++i) CHECK(a.var_degree(i) == 3);
    for (int c = 0; c < a.m; ++c) CHECK(a.check_degree(c) == 4);

    const TannerGraph b = sample_regular(160, 3, 4, 12345);
    CHECK(canonical(a) == canonical(b));
    CHECK(a.check_members == b.check_members);

    const TannerGraph c = sample_regular(160, 3, 4, 54321);
    CHECK(a.check_members != c.check_members);

    CHECK_THROWS(sample_regular(5, 3, 4, 1)); // 15 % 4 != 0
}

TEST_CASE("tanner-155 structure") {
    const TannerGraph g = build_tanner155();
    CHECK(g.n == 155);
    CHECK(g.m == 93);
    for (int i = 0; i < g.n; ++i) CHECK(g.var_degree(i) == 3);
    for (int c = 0; c < g.m; ++c) CHECK(g.check_degree(c) == 5);
    const Gf2Matrix h = parity_check_matrix(g);
    CHECK(h.rank() == 91);
    CHECK(h.nullspace_basis().size() == 64);
}

TEST_CASE("mutual adjacency consistency") {
    const TannerGraph g = sample_regular(40, 3, 4, 3);
    for (int c = 0; c < g.m; ++c)
        for (int v : g.check_members[c])
            CHECK(std::find(g.var_checks[v].begin(), g.var_checks[v].end(), c) != g.var_checks[v].end());
    for (int v = 0; v < g.n; ++v)
        for (int c : g.var_checks[v])
            CHECK(std::find(g.check_members[c].begin(), g.check_members[c].end(), v) != g.check_members[c].end());
}
