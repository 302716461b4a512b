#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lpfc/linear_program.hpp"
#include "lpfc/rng.hpp"
#include "test_helpers.hpp"

using namespace lpfc;

TEST_CASE("unconstrained box: min x over [0,1]") {
    LinearProgram lp;
    lp.add_variable(0, 1, 1.0);
    const auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.values[0] == doctest::Approx(0.0));
    CHECK(sol.objective_value == doctest::Approx(0.0));
}

TEST_CASE("simplex vertex: min -x-y s.t. x+y+s=1") {
    LinearProgram lp;
    const int x = lp.add_variable(0, 1, -1.0);
    const int y = lp.add_variable(0, 1, -1.0);
    const int s = lp.add_variable(0, 1, 0.0);
    lp.add_row(SparseRow{{{x, 1.0}, {y, 1.0}, {s, 1.0}}, 1.0});
    const auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(-1.0));
}

TEST_CASE("degree-3 single-check decoding LP with l = (-1,-1,-1)") {
    // columns: b_i(0), b_i(1) per variable, then 4 even-parity configs
    // {000, 011, 101, 110}; optimum -2 at an even-weight vertex
    LinearProgram lp;
    for (int i = 0; i < 3; ++i) {
        lp.add_variable(0, 1, 0.0);
        lp.add_variable(0, 1, -1.0);
    }
    const int c0 = lp.num_vars();
    for (int k = 0; k < 4; ++k) lp.add_variable(0, 1, 0.0);
    const std::uint32_t configs[4] = {0b000, 0b011, 0b101, 0b110};
    for (int i = 0; i < 3; ++i) lp.add_row(SparseRow{{{2 * i, 1.0}, {2 * i + 1, 1.0}}, 1.0});
    for (int i = 0; i < 3; ++i) {
        for (int v = 0; v < 2; ++v) {
            SparseRow row;
            row.coeffs.emplace_back(2 * i + v, 1.0);
            for (int k = 0; k < 4; ++k)
                if (static_cast<int>((configs[k] >> i) & 1u) == v) row.coeffs.emplace_back(c0 + k, -1.0);
            lp.add_row(std::move(row));
        }
    }
    const auto sol = solve(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective_value == doctest::Approx(-2.0));
    // solution is a vertex: each b_i(1) integral and the bits even weight
    int weight = 0;
    for (int i = 0; i < 3; ++i) {
        const double b1 = sol.values[2 * i + 1];
        CHECK((std::abs(b1) < 1e-9 || std::abs(b1 - 1.0) < 1e-9));
        weight += b1 > 0.5;
    }
    CHECK(weight % 2 == 0);
}

TEST_CASE("infeasible equality is detected") {
    LinearProgram lp;
    const int x = lp.add_variable(0, 1, 0.0);
    const int y = lp.add_variable(0, 1, 0.0);
    lp.add_row(SparseRow{{{x, 1.0}, {y, 1.0}}, 3.0});
    CHECK(solve(lp).status == LpStatus::Infeasible);
}

TEST_CASE("extend: identity and monotone growth") {
    LinearProgram lp;
    lp.add_variable(0, 1, -1.0);
    lp.add_row(SparseRow{{{0, 1.0}}, 1.0});
    const LinearProgram same = extend(lp, {}, {});
    CHECK(same.num_vars() == lp.num_vars());
    CHECK(same.num_rows() == lp.num_rows());
    CHECK(same.stats().nonzeros == lp.stats().nonzeros);

    const LpVariable nv[] = {{0, 1, 0.5}};
    const SparseRow nr[] = {SparseRow{{{0, 1.0}, {1, 1.0}}, 1.0}};
    const LinearProgram grown = extend(lp, nv, nr);
    CHECK(grown.num_vars() == 2);
    CHECK(grown.num_rows() == 2);
    CHECK(grown.stats().nonzeros >= lp.stats().nonzeros);
    CHECK(grown.rows()[0].rhs == lp.rows()[0].rhs);

    CHECK_THROWS(extend(lp, {}, std::vector<SparseRow>{SparseRow{{{5, 1.0}}, 0.0}}));
}

TEST_CASE("extension never decreases the optimum (tightening)") {
    // add a valid equality pinning the degree-3 example to one vertex
    LinearProgram lp;
    for (int i = 0; i < 2; ++i) lp.add_variable(0, 1, -1.0);
    lp.add_row(SparseRow{{{0, 1.0}, {1, 1.0}}, 1.0});
    const double before = solve(lp).objective_value;
    const SparseRow pin[] = {SparseRow{{{0, 1.0}}, 1.0}};
    const double after = solve(extend(lp, {}, pin)).objective_value;
    CHECK(after >= before - 1e-7);
}

TEST_CASE("determinism: identical LPs give identical solutions and pivot counts") {
    SplitMix64 rng(7);
    LinearProgram lp;
    const int n = 12, m = 5;
    for (int j = 0; j < n; ++j) lp.add_variable(0, 1, rng.next_double() * 2 - 1);
    std::vector<double> x0(n);
    for (auto& v : x0) v = rng.next_double();
    for (int r = 0; r < m; ++r) {
        SparseRow row;
        double rhs = 0;
        for (int j = 0; j < n; ++j) {
            if (rng.next_below(3) == 0) {
                const double a = rng.next_double() * 2 - 1;
                row.coeffs.emplace_back(j, a);
                rhs += a * x0[j];
            }
        }
        row.rhs = rhs; // feasible by construction (x0 satisfies it)
        lp.add_row(std::move(row));
    }
    const auto s1 = solve(lp);
    const auto s2 = solve(lp);
    REQUIRE(s1.status == LpStatus::Optimal);
    CHECK(s1.iterations == s2.iterations);
    CHECK(s1.values == s2.values);
    CHECK(s1.objective_value == s2.objective_value);
}

TEST_CASE("random small LPs match the vertex-enumeration oracle") {
    SplitMix64 rng(321);
    int solved = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(4)); // 3..6
        const int m = 1 + static_cast<int>(rng.next_below(3)); // 1..3
        LinearProgram lp;
        for (int j = 0; j < n; ++j) lp.add_variable(0, 1, std::round((rng.next_double() * 4 - 2) * 8) / 8);
        // build rows through a random feasible point so feasibility is known
        std::vector<double> x0(n);
        for (auto& v : x0) v = rng.next_below(3) / 2.0; // 0, 0.5, or 1
        for (int r = 0; r < m; ++r) {
            SparseRow row;
            double rhs = 0;
            for (int j = 0; j < n; ++j) {
                if (rng.next_below(2) == 0) {
                    const double a = static_cast<double>(rng.next_below(5)) - 2; // -2..2
                    if (a == 0) continue;
                    row.coeffs.emplace_back(j, a);
                    rhs += a * x0[j];
                }
            }
            if (row.coeffs.empty()) row.coeffs.emplace_back(static_cast<int>(rng.next_below(n)), 1.0), rhs = x0[row.coeffs[0].first];
            row.rhs = rhs;
            lp.add_row(std::move(row));
        }
        const auto sol = solve(lp);
        REQUIRE(sol.status == LpStatus::Optimal);
        const double oracle = test::lp_vertex_oracle(lp);
        REQUIRE(std::isfinite(oracle));
        CHECK(sol.objective_value == doctest::Approx(oracle).epsilon(1e-7));

        // feasibility of the reported point
        for (const auto& row : lp.rows()) {
            double lhs = 0;
            for (const auto& [j, a] : row.coeffs) lhs += a * sol.values[j];
            CHECK(std::abs(lhs - row.rhs) <= 1e-7);
        }
        for (int j = 0; j < n; ++j) {
            CHECK(sol.values[j] >= -1e-9);
            CHECK(sol.values[j] <= 1 + 1e-9);
        }
        ++solved;
    }
    CHECK(solved == 120);
}

TEST_CASE("dump_lp emits objective, rows and bounds") {
    LinearProgram lp;
    lp.add_variable(0, 1, -1.5);
    lp.add_variable(0, 1, 0.0);
    lp.add_row(SparseRow{{{0, 1.0}, {1, 2.0}}, 1.0});
    std::ostringstream out;
    dump_lp(lp, out);
    const std::string text = out.str();
    CHECK(text.find("lp 1 2") != std::string::npos);
    CHECK(text.find("min 0:-1.5") != std::string::npos);
    CHECK(text.find("row 1 0:1 1:2") != std::string::npos);
    CHECK(text.find("bnd 1 0 1") != std::string::npos);
}
