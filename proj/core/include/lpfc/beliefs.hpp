#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lpfc/linear_program.hpp"

namespace lpfc {

enum class CliqueKind : std::uint8_t { Check, Triangle, Pair };

/// Identity of a clique carrying a belief table. Members are sorted and
/// distinct; configuration bit k refers to members[k].
struct CliqueId {
    CliqueKind kind = CliqueKind::Check;
    std::vector<int> members;
    auto operator<=>(const CliqueId&) const = default;
};

struct CliqueEntry {
    CliqueId id;
    int col_offset = 0;                  // first LP column of the belief table
    std::vector<std::uint32_t> configs;  // admissible configurations
};

/// Keys identifying constraint rows already present in a decoding LP, so
/// augmentation never inserts a row twice.
struct RowKey {
    enum Type : std::uint8_t { VarNorm, CliqueNorm, Singleton, PairBind };
    std::uint8_t type = VarNorm;
    int a = -1, b = -1, c = -1, d = -1, e = -1;
    auto operator<=>(const RowKey&) const = default;
};

/// Column/row bookkeeping for a decoding LP: 2 columns per variable node
/// (b_i(0), b_i(1)) followed by one belief table per registered clique.
/// Grows monotonically under augmentation.
class BeliefLayout {
public:
    BeliefLayout() = default;
    explicit BeliefLayout(int num_graph_vars) : num_vars_(num_graph_vars), next_col_(2 * num_graph_vars) {}

    int num_graph_vars() const { return num_vars_; }
    int var_col(int i, int v) const { return 2 * i + v; }
    int num_cols() const { return next_col_; }

    const std::vector<CliqueEntry>& cliques() const { return cliques_; }
    const CliqueEntry& clique(int idx) const { return cliques_[idx]; }
    int clique_index(const CliqueId& id) const;

    /// registers a clique table occupying configs.size() columns; returns its index
    int add_clique(CliqueId id, std::vector<std::uint32_t> configs);

    bool row_emitted(const RowKey& k) const { return rows_.count(k) != 0; }
    void mark_row(const RowKey& k) { rows_.insert(k); }

    /// position of variable i within clique members (throws if absent)
    static int member_pos(const CliqueId& id, int i);

private:
    int num_vars_ = 0;
    int next_col_ = 0;
    std::vector<CliqueEntry> cliques_;
    std::map<CliqueId, int> index_;
    std::set<RowKey> rows_;

    friend class LayoutInit;
};

/// Per-clique belief values snapshot, self-contained (value semantics).
struct CliqueBelief {
    CliqueId id;
    std::vector<std::uint32_t> configs;
    std::vector<double> values; // aligned with configs
};

struct BeliefSolution {
    std::vector<std::array<double, 2>> var_beliefs; // [i] = (b_i(0), b_i(1))
    std::vector<CliqueBelief> cliques;              // aligned with the layout's registry
    double objective_value = 0.0;
};

/// Read a solved LP back into belief space.
BeliefSolution extract_beliefs(const BeliefLayout& layout, const LpSolution& sol);

/// Classification of a solved relaxation.
struct Assignment {
    bool integral = false;
    std::vector<std::uint8_t> bits;  // valid iff integral
    std::vector<int> fractional_set; // variable indices with non-integer b_i
};

inline bool is_ml_certificate(const Assignment& a) { return a.integral; }

} // namespace lpfc
