#include "lpfc/beliefs.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpfc {

int BeliefLayout::clique_index(const CliqueId& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int BeliefLayout::add_clique(CliqueId id, std::vector<std::uint32_t> configs) {
    if (index_.count(id)) throw std::invalid_argument("BeliefLayout: clique already registered");
    CliqueEntry e;
    e.id = std::move(id);
    e.col_offset = next_col_;
    e.configs = std::move(configs);
    next_col_ += static_cast<int>(e.configs.size());
    index_.emplace(e.id, static_cast<int>(cliques_.size()));
    cliques_.push_back(std::move(e));
    return static_cast<int>(cliques_.size()) - 1;
}

int BeliefLayout::member_pos(const CliqueId& id, int i) {
    auto it = std::lower_bound(id.members.begin(), id.members.end(), i);
    if (it == id.members.end() || *it != i) throw std::invalid_argument("clique does not contain variable");
    return static_cast<int>(it - id.members.begin());
}

BeliefSolution extract_beliefs(const BeliefLayout& layout, const LpSolution& sol) {
    if (static_cast<int>(sol.values.size()) < layout.num_cols())
        throw std::invalid_argument("extract_beliefs: solution size mismatch");
    BeliefSolution b;
    b.objective_value = sol.objective_value;
    const int n = layout.num_graph_vars();
    b.var_beliefs.resize(n);
    for (int i = 0; i < n; ++i) {
        b.var_beliefs[i][0] = sol.values[layout.var_col(i, 0)];
        b.var_beliefs[i][1] = sol.values[layout.var_col(i, 1)];
    }
    b.cliques.reserve(layout.cliques().size());
    for (const auto& e : layout.cliques()) {
        CliqueBelief cb;
        cb.id = e.id;
        cb.configs = e.configs;
        cb.values.resize(e.configs.size());
        for (std::size_t k = 0; k < e.configs.size(); ++k) cb.values[k] = sol.values[e.col_offset + static_cast<int>(k)];
        b.cliques.push_back(std::move(cb));
    }
    return b;
}

} // namespace lpfc
