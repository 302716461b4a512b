#include "lpfc/linear_program.hpp"

#include <ostream>
#include <stdexcept>

namespace lpfc {

int LinearProgram::add_variable(double lo, double hi, double cost) {
    if (!(lo <= hi)) throw std::invalid_argument("LinearProgram: lo > hi");
    lo_.push_back(lo);
    hi_.push_back(hi);
    cost_.push_back(cost);
    return static_cast<int>(cost_.size()) - 1;
}

void LinearProgram::add_row(SparseRow row) {
    for (const auto& [j, v] : row.coeffs) {
        (void)v;
        if (j < 0 || j >= num_vars()) throw std::invalid_argument("LinearProgram: row references unknown variable");
    }
    rows_.push_back(std::move(row));
}

LpStats LinearProgram::stats() const {
    LpStats s;
    s.rows = num_rows();
    s.cols = num_vars();
    for (const auto& r : rows_) s.nonzeros += static_cast<long long>(r.coeffs.size());
    return s;
}

LinearProgram extend(const LinearProgram& lp, std::span<const LpVariable> new_vars,
                     std::span<const SparseRow> new_rows) {
    LinearProgram out = lp;
    for (const auto& v : new_vars) out.add_variable(v.lo, v.hi, v.cost);
    for (const auto& r : new_rows) out.add_row(r);
    return out;
}

void dump_lp(const LinearProgram& lp, std::ostream& out) {
    out << "lp " << lp.num_rows() << ' ' << lp.num_vars() << '\n';
    out << "min";
    for (int j = 0; j < lp.num_vars(); ++j)
        if (lp.cost(j) != 0.0) out << ' ' << j << ':' << lp.cost(j);
    out << '\n';
    for (const auto& r : lp.rows()) {
        out << "row " << r.rhs;
        for (const auto& [j, a] : r.coeffs) out << ' ' << j << ':' << a;
        out << '\n';
    }
    for (int j = 0; j < lp.num_vars(); ++j) out << "bnd " << j << ' ' << lp.lower(j) << ' ' << lp.upper(j) << '\n';
}

} // namespace lpfc
