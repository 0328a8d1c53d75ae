// infsup — dense two-phase simplex implementation.

#include "infsup/detail/simplex.hpp"

#include <cmath>
#include <vector>

namespace infsup::detail {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-10;
constexpr double kFeasTol = 1e-9;

class Tableau {
 public:
  // Columns: [structural (n) | slacks (ml) | artificials (n_art) | rhs].
  Tableau(const LinearProgram& lp) {
    n_ = lp.cost.size();
    const Index me = lp.eq_a.rows();
    ml_ = lp.le_a.rows();
    m_ = me + ml_;

    RealMatrix a = RealMatrix::Zero(m_, n_ + ml_);
    RealVector b(m_);
    for (Index i = 0; i < me; ++i) {
      a.row(i).head(n_) = lp.eq_a.row(i);
      b(i) = lp.eq_b(i);
    }
    for (Index i = 0; i < ml_; ++i) {
      a.row(me + i).head(n_) = lp.le_a.row(i);
      a(me + i, n_ + i) = 1.0;
      b(me + i) = lp.le_b(i);
    }
    for (Index i = 0; i < m_; ++i) {
      if (b(i) < 0.0) {
        a.row(i) = -a.row(i);
        b(i) = -b(i);
      }
    }

    basis_.assign(m_, -1);
    std::vector<Index> art_rows;
    for (Index i = 0; i < m_; ++i) {
      const Index slack_col = n_ + (i - me);
      if (i >= me && a(i, slack_col) == 1.0) {
        basis_[i] = slack_col;
      } else {
        art_rows.push_back(i);
      }
    }
    n_art_ = static_cast<Index>(art_rows.size());
    n_total_ = n_ + ml_ + n_art_;

    t_ = RealMatrix::Zero(m_ + 1, n_total_ + 1);
    t_.topLeftCorner(m_, n_ + ml_) = a;
    for (Index k = 0; k < n_art_; ++k) {
      t_(art_rows[k], n_ + ml_ + k) = 1.0;
      basis_[art_rows[k]] = n_ + ml_ + k;
    }
    t_.col(n_total_).head(m_) = b;
  }

  void set_phase1_cost() {
    t_.row(m_).setZero();
    for (Index k = 0; k < n_art_; ++k) {
      t_(m_, n_ + ml_ + k) = 1.0;
    }
    price_out_basics();
  }

  void set_phase2_cost(const RealVector& cost) {
    t_.row(m_).setZero();
    t_.row(m_).head(n_) = cost;
    price_out_basics();
  }

  // Returns true on optimality, false when the iteration cap is hit.
  // Artificial columns never enter the basis; they only leave.
  bool iterate(bool* unbounded) {
    *unbounded = false;
    const Index enter_limit = n_ + ml_;
    const Index max_iters = 200 * (m_ + n_total_) + 2000;
    for (Index iter = 0; iter < max_iters; ++iter) {
      Index enter = -1;  // Bland: smallest improving index
      for (Index j = 0; j < enter_limit; ++j) {
        if (t_(m_, j) < -kCostTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) {
        return true;
      }
      Index leave = -1;
      double best_ratio = 0.0;
      for (Index i = 0; i < m_; ++i) {
        const double aie = t_(i, enter);
        if (aie > kPivotTol) {
          const double ratio = t_(i, n_total_) / aie;
          if (leave < 0 || ratio < best_ratio - kPivotTol ||
              (std::abs(ratio - best_ratio) <= kPivotTol &&
               basis_[i] < basis_[leave])) {
            leave = i;
            best_ratio = ratio;
          }
        }
      }
      if (leave < 0) {
        *unbounded = true;
        return true;
      }
      pivot(leave, enter);
    }
    return false;
  }

  void pivot(Index row, Index col) {
    t_.row(row) /= t_(row, col);
    for (Index i = 0; i <= m_; ++i) {
      if (i != row && t_(i, col) != 0.0) {
        t_.row(i) -= t_(i, col) * t_.row(row);
      }
    }
    basis_[row] = col;
  }

  double objective() const { return -t_(m_, n_total_); }

  bool basis_has_artificials() const {
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + ml_) {
        return true;
      }
    }
    return false;
  }

  // After phase 1, pivots remaining artificial basics onto structural or
  // slack columns where possible (all at zero value, so feasibility holds).
  void drive_out_artificials() {
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + ml_) {
        continue;
      }
      for (Index j = 0; j < n_ + ml_; ++j) {
        if (std::abs(t_(i, j)) > kPivotTol) {
          pivot(i, j);
          break;
        }
      }
      // A row with no eligible column is redundant; its artificial stays
      // basic at zero and can never become positive.
    }
  }

  RealVector solution() const {
    RealVector x = RealVector::Zero(n_);
    for (Index i = 0; i < m_; ++i) {
      if (basis_[i] < n_) {
        x(basis_[i]) = t_(i, n_total_);
      }
    }
    return x;
  }

 private:
  void price_out_basics() {
    for (Index i = 0; i < m_; ++i) {
      const double c = t_(m_, basis_[i]);
      if (c != 0.0) {
        t_.row(m_) -= c * t_.row(i);
      }
    }
  }

  RealMatrix t_;
  std::vector<Index> basis_;
  Index n_ = 0;
  Index ml_ = 0;
  Index m_ = 0;
  Index n_art_ = 0;
  Index n_total_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  LpResult result;
  Tableau tab(lp);

  bool unbounded = false;
  tab.set_phase1_cost();
  if (!tab.iterate(&unbounded)) {
    result.status = LpStatus::stalled;
    return result;
  }
  if (tab.objective() > kFeasTol) {
    result.status = LpStatus::infeasible;
    return result;
  }
  tab.drive_out_artificials();

  tab.set_phase2_cost(lp.cost);
  if (!tab.iterate(&unbounded)) {
    result.status = LpStatus::stalled;
    return result;
  }
  if (unbounded) {
    result.status = LpStatus::unbounded;
    return result;
  }

  result.status = LpStatus::optimal;
  result.x = tab.solution();
  result.value = lp.cost.dot(result.x);
  return result;
}

}  // namespace infsup::detail
