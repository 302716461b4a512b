#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "lpfc/linear_program.hpp"

namespace lpfc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivTol = 1e-9;   // smallest usable ratio-test pivot
constexpr double kLuPivTol = 1e-11;
constexpr int kRefactorEvery = 128;
constexpr int kStallLimit = 1000;  // degenerate iterations before Bland fallback

struct ColEntry {
    int row;
    double val;
};

struct NumericalBreakdown : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Simplex {
public:
    Simplex(const LinearProgram& lp, const SolveTolerances& tols) : tols_(tols) {
        m_ = lp.num_rows();
        n_ = lp.num_vars();
        total_ = n_ + m_;
        cols_.resize(n_);
        rhs_.resize(m_);
        for (int r = 0; r < m_; ++r) {
            const auto& row = lp.rows()[r];
            rhs_[r] = row.rhs;
            for (const auto& [j, a] : row.coeffs)
                if (a != 0.0) cols_[j].push_back({r, a});
        }
        lo_.resize(total_);
        hi_.resize(total_);
        real_cost_.assign(total_, 0.0);
        for (int j = 0; j < n_; ++j) {
            lo_[j] = lp.lower(j);
            hi_[j] = lp.upper(j);
            real_cost_[j] = lp.cost(j);
        }
        for (int j = n_; j < total_; ++j) {
            lo_[j] = 0.0;
            hi_[j] = kInf; // phase I; pinned to 0 in phase II
        }
        iter_limit_ = tols.max_iterations > 0 ? tols.max_iterations : 20000 + 50 * (m_ + n_);
    }

    LpSolution run() {
        LpSolution sol;
        try {
            setup_phase1();
            if (!iterate()) return iteration_limit_result("phase I iteration limit");
            double infeas = 0.0;
            for (int j = n_; j < total_; ++j) infeas += x_[j];
            if (infeas > tols_.feas) {
                sol.status = LpStatus::Infeasible;
                sol.iterations = static_cast<int>(iterations_);
                return sol;
            }
            setup_phase2();
            if (!iterate()) return iteration_limit_result("phase II iteration limit");

            // refresh the factorization and verify the claimed optimum
            factorize();
            compute_basic_values();
            std::string err;
            if (!verify(err)) return iteration_limit_result("verification failed: " + err);
        } catch (const NumericalBreakdown& e) {
            return iteration_limit_result(std::string("numerical breakdown: ") + e.what());
        }

        sol.status = LpStatus::Optimal;
        sol.values.assign(x_.begin(), x_.begin() + n_);
        sol.objective_value = 0.0;
        for (int j = 0; j < n_; ++j) sol.objective_value += real_cost_[j] * x_[j];
        sol.iterations = static_cast<int>(iterations_);
        return sol;
    }

private:
    enum : std::uint8_t { NB_LO = 0, NB_HI = 1, BASIC = 2 };

    // problem
    int m_ = 0, n_ = 0, total_ = 0;
    std::vector<std::vector<ColEntry>> cols_;
    std::vector<double> rhs_;
    std::vector<double> art_sign_;
    std::vector<double> lo_, hi_;
    std::vector<double> cost_;      // current phase
    std::vector<double> real_cost_;
    SolveTolerances tols_;
    int iter_limit_ = 0;

    // state
    std::vector<int> basis_;
    std::vector<std::uint8_t> state_;
    std::vector<double> x_;
    long long iterations_ = 0;
    bool bland_ = false;
    int stall_ = 0;
    double last_obj_ = kInf;

    // basis factorization: P*B = L*U plus product-form updates
    std::vector<double> lu_, luT_;
    std::vector<double> y_scratch_;
    std::vector<int> piv_;
    struct Eta {
        int pos;
        std::vector<double> w;
    };
    std::vector<Eta> etas_;

    template <typename F>
    void for_col(int j, F&& f) const {
        if (j < n_) {
            for (const auto& e : cols_[j]) f(e.row, e.val);
        } else {
            f(j - n_, art_sign_[j - n_]);
        }
    }

    void setup_phase1() {
        state_.assign(total_, NB_LO);
        x_.assign(total_, 0.0);
        for (int j = 0; j < n_; ++j) x_[j] = lo_[j];

        std::vector<double> r = rhs_;
        for (int j = 0; j < n_; ++j) {
            if (x_[j] != 0.0)
                for (const auto& e : cols_[j]) r[e.row] -= e.val * x_[j];
        }
        art_sign_.resize(m_);
        basis_.resize(m_);
        cost_.assign(total_, 0.0);
        for (int p = 0; p < m_; ++p) {
            art_sign_[p] = r[p] >= 0.0 ? 1.0 : -1.0;
            basis_[p] = n_ + p;
            state_[n_ + p] = BASIC;
            x_[n_ + p] = std::abs(r[p]);
            cost_[n_ + p] = 1.0;
        }
        factorize();
        last_obj_ = kInf;
        stall_ = 0;
    }

    void setup_phase2() {
        cost_ = real_cost_;
        for (int j = n_; j < total_; ++j) hi_[j] = 0.0;
        last_obj_ = kInf;
        stall_ = 0;
    }

    void factorize() {
        lu_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
        piv_.assign(m_, 0);
        for (int p = 0; p < m_; ++p)
            for_col(basis_[p], [&](int row, double val) { lu_[static_cast<std::size_t>(row) * m_ + p] = val; });

        for (int k = 0; k < m_; ++k) {
            int best = k;
            double bestval = std::abs(lu_[static_cast<std::size_t>(k) * m_ + k]);
            for (int i = k + 1; i < m_; ++i) {
                const double v = std::abs(lu_[static_cast<std::size_t>(i) * m_ + k]);
                if (v > bestval) {
                    bestval = v;
                    best = i;
                }
            }
            if (bestval < kLuPivTol) throw NumericalBreakdown("singular basis in LU factorization");
            piv_[k] = best;
            if (best != k)
                for (int j = 0; j < m_; ++j)
                    std::swap(lu_[static_cast<std::size_t>(k) * m_ + j], lu_[static_cast<std::size_t>(best) * m_ + j]);
            const double d = lu_[static_cast<std::size_t>(k) * m_ + k];
            for (int i = k + 1; i < m_; ++i) {
                double* Li = &lu_[static_cast<std::size_t>(i) * m_];
                const double f = Li[k] / d;
                if (f == 0.0) continue;
                Li[k] = f;
                const double* Uk = &lu_[static_cast<std::size_t>(k) * m_];
                for (int j = k + 1; j < m_; ++j) Li[j] -= f * Uk[j];
            }
        }
        luT_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) luT_[static_cast<std::size_t>(j) * m_ + i] = lu_[static_cast<std::size_t>(i) * m_ + j];
        etas_.clear();
    }

    // y = B^{-1} v
    void ftran(std::vector<double>& y) const {
        for (int k = 0; k < m_; ++k)
            if (piv_[k] != k) std::swap(y[k], y[piv_[k]]);
        for (int i = 1; i < m_; ++i) {
            const double* Li = &lu_[static_cast<std::size_t>(i) * m_];
            double s = 0.0;
            for (int k = 0; k < i; ++k) s += Li[k] * y[k];
            y[i] -= s;
        }
        for (int i = m_ - 1; i >= 0; --i) {
            const double* Ui = &lu_[static_cast<std::size_t>(i) * m_];
            double s = 0.0;
            for (int k = i + 1; k < m_; ++k) s += Ui[k] * y[k];
            y[i] = (y[i] - s) / Ui[i];
        }
        for (const auto& e : etas_) {
            const double yp = y[e.pos] / e.w[e.pos];
            if (yp != 0.0) {
                for (int i = 0; i < m_; ++i) y[i] -= e.w[i] * yp;
                y[e.pos] = yp;
            } else {
                y[e.pos] = 0.0;
            }
        }
    }

    // z = B^{-T} v
    void btran(std::vector<double>& z) const {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            double dot = 0.0;
            for (int i = 0; i < m_; ++i) dot += it->w[i] * z[i];
            z[it->pos] -= (dot - z[it->pos]) / it->w[it->pos];
        }
        for (int i = 0; i < m_; ++i) {
            const double* Ti = &luT_[static_cast<std::size_t>(i) * m_];
            double s = 0.0;
            for (int k = 0; k < i; ++k) s += Ti[k] * z[k];
            z[i] = (z[i] - s) / Ti[i];
        }
        for (int i = m_ - 2; i >= 0; --i) {
            const double* Ti = &luT_[static_cast<std::size_t>(i) * m_];
            double s = 0.0;
            for (int k = i + 1; k < m_; ++k) s += Ti[k] * z[k];
            z[i] -= s;
        }
        for (int k = m_ - 1; k >= 0; --k)
            if (piv_[k] != k) std::swap(z[k], z[piv_[k]]);
    }

    void compute_basic_values() {
        std::vector<double> r = rhs_;
        for (int j = 0; j < total_; ++j) {
            if (state_[j] == BASIC || x_[j] == 0.0) continue;
            for_col(j, [&](int row, double val) { r[row] -= val * x_[j]; });
        }
        ftran(r);
        for (int p = 0; p < m_; ++p) x_[basis_[p]] = r[p];
    }

    double current_objective() const {
        double z = 0.0;
        for (int j = 0; j < total_; ++j) z += cost_[j] * x_[j];
        return z;
    }

    // returns false on iteration limit
    bool iterate() {
        while (true) {
            if (iterations_ >= iter_limit_) return false;

            const double obj = current_objective();
            if (obj < last_obj_ - 1e-12) {
                stall_ = 0;
            } else if (++stall_ > kStallLimit) {
                bland_ = true;
            }
            last_obj_ = obj;

            std::vector<double>& y = y_scratch_;
            y.assign(m_, 0.0);
            for (int p = 0; p < m_; ++p) y[p] = cost_[basis_[p]];
            btran(y);

            int q = -1;
            double best_viol = tols_.opt;
            for (int j = 0; j < total_; ++j) {
                if (state_[j] == BASIC) continue;
                if (hi_[j] - lo_[j] <= 0.0) continue; // fixed, never enters
                double d = cost_[j];
                for_col(j, [&](int row, double val) { d -= y[row] * val; });
                const double viol = state_[j] == NB_LO ? -d : d;
                if (viol > best_viol) {
                    best_viol = viol;
                    q = j;
                    if (bland_) break; // least-index rule
                }
            }
            if (q < 0) return true; // optimal for the current phase

            const double sign = state_[q] == NB_LO ? 1.0 : -1.0;
            std::vector<double> w(m_, 0.0); // moved into the eta file on pivot
            for_col(q, [&](int row, double val) { w[row] = val; });
            ftran(w);

            // ratio test
            double t = hi_[q] - lo_[q]; // bound-flip distance
            bool flip = true;
            int leave_pos = -1;
            double leave_abs_w = 0.0;
            for (int p = 0; p < m_; ++p) {
                const double wp = sign * w[p];
                if (std::abs(wp) <= kPivTol) continue;
                const int k = basis_[p];
                double limit;
                if (wp > 0.0) {
                    if (lo_[k] == -kInf) continue;
                    limit = (x_[k] - lo_[k]) / wp;
                } else {
                    if (hi_[k] == kInf) continue;
                    limit = (hi_[k] - x_[k]) / (-wp);
                }
                if (limit < 0.0) limit = 0.0;
                if (limit < t - 1e-12) {
                    t = limit;
                    flip = false;
                    leave_pos = p;
                    leave_abs_w = std::abs(w[p]);
                } else if (!flip && limit <= t + 1e-12) {
                    // tie: prefer numerically larger pivot, then smaller index
                    const bool better = bland_ ? basis_[p] < basis_[leave_pos]
                                               : (std::abs(w[p]) > leave_abs_w + 1e-12 ||
                                                  (std::abs(w[p]) > leave_abs_w - 1e-12 && basis_[p] < basis_[leave_pos]));
                    if (better) {
                        leave_pos = p;
                        leave_abs_w = std::abs(w[p]);
                    }
                }
            }
            if (t == kInf) throw NumericalBreakdown("unbounded direction");

            ++iterations_;

            if (flip) {
                for (int p = 0; p < m_; ++p)
                    if (w[p] != 0.0) x_[basis_[p]] -= t * sign * w[p];
                state_[q] = state_[q] == NB_LO ? NB_HI : NB_LO;
                x_[q] = state_[q] == NB_LO ? lo_[q] : hi_[q];
                continue;
            }

            // pivot
            for (int p = 0; p < m_; ++p)
                if (w[p] != 0.0) x_[basis_[p]] -= t * sign * w[p];
            const int leaving = basis_[leave_pos];
            const double wp = sign * w[leave_pos];
            x_[leaving] = wp > 0.0 ? lo_[leaving] : hi_[leaving];
            state_[leaving] = wp > 0.0 ? NB_LO : NB_HI;
            x_[q] = (sign > 0.0 ? lo_[q] : hi_[q]) + sign * t;
            basis_[leave_pos] = q;
            state_[q] = BASIC;

            const bool shaky = std::abs(w[leave_pos]) < 1e-7;
            etas_.push_back({leave_pos, std::move(w)});
            if (static_cast<int>(etas_.size()) >= kRefactorEvery || shaky) {
                factorize();
                compute_basic_values();
            }
        }
    }

    bool verify(std::string& err) const {
        for (int j = 0; j < total_; ++j) {
            const double lo_viol = lo_[j] == -kInf ? 0.0 : lo_[j] - x_[j];
            const double hi_viol = hi_[j] == kInf ? 0.0 : x_[j] - hi_[j];
            if (lo_viol > 1e-9 || hi_viol > 1e-9) {
                err = "bound violation at column " + std::to_string(j);
                return false;
            }
        }
        std::vector<double> r = rhs_;
        for (int j = 0; j < n_; ++j) {
            if (x_[j] == 0.0) continue;
            for (const auto& e : cols_[j]) r[e.row] -= e.val * x_[j];
        }
        for (int p = 0; p < m_; ++p) {
            // artificial residue counts against feasibility of the structural solution
            if (std::abs(r[p]) > tols_.feas) {
                err = "equality residual " + std::to_string(std::abs(r[p])) + " at row " + std::to_string(p);
                return false;
            }
        }
        return true;
    }

    LpSolution iteration_limit_result(const std::string& why) const {
        LpSolution sol;
        sol.status = LpStatus::IterationLimit;
        sol.iterations = static_cast<int>(iterations_);
        std::ostringstream d;
        d << why << " (rows=" << m_ << " cols=" << n_ << " iters=" << iterations_ << ")";
        sol.diagnostics = d.str();
        return sol;
    }
};

} // namespace

LpSolution solve(const LinearProgram& lp, const SolveTolerances& tols) {
    Simplex s(lp, tols);
    return s.run();
}

} // namespace lpfc
