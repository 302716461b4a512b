#include "lpfc/tanner_graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lpfc/rng.hpp"

namespace lpfc {

TannerGraph make_tanner_graph(int n, std::vector<std::vector<int>> check_members) {
    if (n <= 0) throw std::invalid_argument("tanner graph: n must be positive");
    TannerGraph g;
    g.n = n;
    g.m = static_cast<int>(check_members.size());
    g.check_members = std::move(check_members);
    g.var_checks.assign(n, {});
    for (int c = 0; c < g.m; ++c) {
        const auto& mem = g.check_members[c];
        if (mem.size() < 2)
            throw std::invalid_argument("tanner graph: check " + std::to_string(c) + " has degree < 2");
        std::set<int> seen;
        for (int v : mem) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("tanner graph: variable index out of range in check " + std::to_string(c));
            if (!seen.insert(v).second)
                throw std::invalid_argument("tanner graph: repeated variable in check " + std::to_string(c));
            g.var_checks[v].push_back(c);
        }
    }
    return g;
}

namespace {

std::vector<long long> read_ints(std::istream& in, std::size_t count, const char* what) {
    std::vector<long long> out;
    out.reserve(count);
    long long v;
    while (out.size() < count && (in >> v)) out.push_back(v);
    if (out.size() != count) throw std::runtime_error(std::string("alist: truncated while reading ") + what);
    return out;
}

std::vector<int> read_adjacency_line(std::istream& in, int degree, int max_degree, int range, const char* what) {
    // a line carries `degree` 1-indexed entries, optionally padded with zeros
    // up to max_degree
    std::string line;
    do {
        if (!std::getline(in, line)) throw std::runtime_error(std::string("alist: truncated adjacency (") + what + ")");
    } while (line.find_first_not_of(" \t\r\n") == std::string::npos);

    std::istringstream ls(line);
    std::vector<long long> vals;
    long long v;
    while (ls >> v) vals.push_back(v);
    if (static_cast<int>(vals.size()) != degree && static_cast<int>(vals.size()) != max_degree)
        throw std::runtime_error(std::string("alist: adjacency line length mismatch (") + what + ")");

    std::vector<int> out;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        if (k < static_cast<std::size_t>(degree)) {
            if (vals[k] < 1 || vals[k] > range)
                throw std::runtime_error(std::string("alist: index out of range (") + what + ")");
            out.push_back(static_cast<int>(vals[k]) - 1);
        } else if (vals[k] != 0) {
            throw std::runtime_error(std::string("alist: nonzero entry where zero padding expected (") + what + ")");
        }
    }
    return out;
}

} // namespace

TannerGraph load_alist(std::istream& in) {
    auto hdr = read_ints(in, 2, "header");
    const long long n = hdr[0], m = hdr[1];
    if (n <= 0 || m <= 0 || n > 1000000 || m > 1000000) throw std::runtime_error("alist: malformed header");
    auto maxdeg = read_ints(in, 2, "max degrees");
    const int max_vd = static_cast<int>(maxdeg[0]), max_cd = static_cast<int>(maxdeg[1]);
    if (max_vd <= 0 || max_cd <= 0) throw std::runtime_error("alist: malformed max degrees");

    auto vdeg = read_ints(in, static_cast<std::size_t>(n), "variable degrees");
    auto cdeg = read_ints(in, static_cast<std::size_t>(m), "check degrees");
    for (auto d : vdeg)
        if (d < 0 || d > max_vd) throw std::runtime_error("alist: variable degree out of range");
    for (auto d : cdeg)
        if (d < 0 || d > max_cd) throw std::runtime_error("alist: check degree out of range");

    // finish the degree line before switching to line-based reads
    std::string rest;
    std::getline(in, rest);

    std::vector<std::vector<int>> var_adj(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i)
        var_adj[i] = read_adjacency_line(in, static_cast<int>(vdeg[i]), max_vd, static_cast<int>(m), "variable row");
    std::vector<std::vector<int>> chk_adj(static_cast<std::size_t>(m));
    for (long long c = 0; c < m; ++c)
        chk_adj[c] = read_adjacency_line(in, static_cast<int>(cdeg[c]), max_cd, static_cast<int>(n), "check row");

    TannerGraph g = make_tanner_graph(static_cast<int>(n), std::move(chk_adj));

    // the variable-side block must agree with the check-side block
    for (int i = 0; i < g.n; ++i) {
        auto expect = g.var_checks[i];
        auto got = var_adj[i];
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        if (expect != got)
            throw std::runtime_error("alist: variable/check adjacency blocks disagree at variable " + std::to_string(i));
    }
    return g;
}

TannerGraph load_alist_text(const std::string& text) {
    std::istringstream in(text);
    return load_alist(in);
}

TannerGraph load_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("alist: cannot open " + path);
    return load_alist(in);
}

void write_alist(const TannerGraph& g, std::ostream& out) {
    int max_vd = 0, max_cd = 0;
    for (int i = 0; i < g.n; ++i) max_vd = std::max(max_vd, g.var_degree(i));
    for (int c = 0; c < g.m; ++c) max_cd = std::max(max_cd, g.check_degree(c));
    out << g.n << ' ' << g.m << '\n';
    out << max_vd << ' ' << max_cd << '\n';
    for (int i = 0; i < g.n; ++i) out << g.var_degree(i) << (i + 1 < g.n ? ' ' : '\n');
    for (int c = 0; c < g.m; ++c) out << g.check_degree(c) << (c + 1 < g.m ? ' ' : '\n');
    for (int i = 0; i < g.n; ++i) {
        for (int k = 0; k < max_vd; ++k) {
            const int v = k < g.var_degree(i) ? g.var_checks[i][k] + 1 : 0;
            out << v << (k + 1 < max_vd ? ' ' : '\n');
        }
    }
    for (int c = 0; c < g.m; ++c) {
        for (int k = 0; k < max_cd; ++k) {
            const int v = k < g.check_degree(c) ? g.check_members[c][k] + 1 : 0;
            out << v << (k + 1 < max_cd ? ' ' : '\n');
        }
    }
}

std::string write_alist_text(const TannerGraph& g) {
    std::ostringstream out;
    write_alist(g, out);
    return out.str();
}

TannerGraph sample_regular(int n, int d_l, int d_r, std::uint64_t seed) {
    if (n <= 0 || d_l < 1 || d_r < 2) throw std::invalid_argument("sample_regular: bad parameters");
    if ((static_cast<long long>(n) * d_l) % d_r != 0)
        throw std::invalid_argument("sample_regular: n*d_l must be divisible by d_r");
    const int m = static_cast<int>(static_cast<long long>(n) * d_l / d_r);

    const int sockets = n * d_l;
    std::vector<int> stub(sockets);
    for (int s = 0; s < sockets; ++s) stub[s] = s / d_l; // variable owning socket s

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        // Fisher-Yates
        for (int i = sockets - 1; i > 0; --i) {
            const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
            std::swap(stub[i], stub[j]);
        }
        std::vector<std::vector<int>> checks(m);
        bool simple = true;
        for (int c = 0; c < m && simple; ++c) {
            checks[c].assign(stub.begin() + static_cast<std::ptrdiff_t>(c) * d_r,
                             stub.begin() + static_cast<std::ptrdiff_t>(c + 1) * d_r);
            auto sorted = checks[c];
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) simple = false;
        }
        if (simple) return make_tanner_graph(n, std::move(checks));
    }
    throw std::runtime_error("sample_regular: resample cap exceeded (degenerate parameters)");
}

TannerGraph build_tanner155() {
    constexpr int p = 31;
    constexpr int a = 5; // order 3 mod 31
    constexpr int b = 2; // order 5 mod 31
    std::vector<std::vector<int>> checks(3 * p);
    int ai = 1;
    for (int i = 0; i < 3; ++i) {
        int shift = ai % p;
        for (int j = 0; j < 5; ++j) {
            for (int r = 0; r < p; ++r) checks[i * p + r].push_back(j * p + (r + shift) % p);
            shift = (shift * b) % p;
        }
        ai = (ai * a) % p;
    }
    TannerGraph g = make_tanner_graph(5 * p, std::move(checks));

    // structural validation instead of trusting the exponent convention
    for (int i = 0; i < g.n; ++i)
        if (g.var_degree(i) != 3) throw std::logic_error("tanner155: variable degree != 3");
    for (int c = 0; c < g.m; ++c)
        if (g.check_degree(c) != 5) throw std::logic_error("tanner155: check degree != 5");
    if (parity_check_matrix(g).rank() != 91) throw std::logic_error("tanner155: GF(2) rank != 91");
    return g;
}

Gf2Matrix parity_check_matrix(const TannerGraph& g) {
    Gf2Matrix h(g.m, g.n);
    for (int c = 0; c < g.m; ++c)
        for (int v : g.check_members[c]) h.set(c, v, true);
    return h;
}

bool is_codeword(const TannerGraph& g, const std::vector<std::uint8_t>& bits) {
    if (static_cast<int>(bits.size()) != g.n) return false;
    for (const auto& mem : g.check_members) {
        unsigned parity = 0;
        for (int v : mem) parity ^= bits[v];
        if (parity & 1u) return false;
    }
    return true;
}

std::vector<std::vector<std::uint8_t>> nullspace_basis(const Gf2Matrix& h) {
    return h.nullspace_basis();
}

} // namespace lpfc
