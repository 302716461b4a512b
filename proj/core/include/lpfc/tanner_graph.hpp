#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpfc/gf2.hpp"

namespace lpfc {

/// Bipartite code structure. check_members and var_checks are kept mutually
/// consistent; checks are simple (no repeated variable) and have degree >= 2.
struct TannerGraph {
    int n = 0; // variable nodes
    int m = 0; // check nodes
    std::vector<std::vector<int>> check_members; // per check, variable indices
    std::vector<std::vector<int>> var_checks;    // per variable, check indices

    int var_degree(int i) const { return static_cast<int>(var_checks[i].size()); }
    int check_degree(int c) const { return static_cast<int>(check_members[c].size()); }
};

/// Build and validate a graph from its check adjacency. Throws
/// std::invalid_argument on out-of-range indices, repeated members within a
/// check, or checks of degree < 2.
TannerGraph make_tanner_graph(int n, std::vector<std::vector<int>> check_members);

/// Parse the standard alist layout (1-indexed, 0-padded). Throws
/// std::runtime_error on malformed input or internal inconsistency.
TannerGraph load_alist(std::istream& in);
TannerGraph load_alist_text(const std::string& text);
TannerGraph load_alist_file(const std::string& path);

/// Emit the standard alist layout (0-padded to the maximum degrees).
void write_alist(const TannerGraph& g, std::ostream& out);
std::string write_alist_text(const TannerGraph& g);

/// Uniform configuration-model sample of an (d_l, d_r)-regular bipartite
/// graph; whole permutation resampled until simple (cap 10000 attempts).
/// Deterministic for a fixed seed.
TannerGraph sample_regular(int n, int d_l, int d_r, std::uint64_t seed);

/// The fixed (155,64) code built from a 3x5 array of 31x31 circulant
/// permutation blocks with shifts 5^i * 2^j mod 31. Structure (dimensions,
/// regularity, GF(2) rank 91) is validated on every construction.
TannerGraph build_tanner155();

/// Parity-check matrix of the graph (m x n over GF(2)).
Gf2Matrix parity_check_matrix(const TannerGraph& g);

/// All parity checks satisfied?
bool is_codeword(const TannerGraph& g, const std::vector<std::uint8_t>& bits);

/// Nullspace basis convenience for the ML oracle: k = n - rank(H) codewords.
std::vector<std::vector<std::uint8_t>> nullspace_basis(const Gf2Matrix& h);

} // namespace lpfc
