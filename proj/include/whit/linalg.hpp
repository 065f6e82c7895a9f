#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "whit/rational.hpp"

namespace whit {

using IMat = Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<long, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
  return q;
}

inline QMat to_qmat(const IMat& m) {
  QMat q(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) q(i, j) = Rat(m(i, j));
  return q;
}

// Gauss-Jordan inverse over an exact field.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw DimensionMismatch("exact_inverse: non-square");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> inv =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = col; r < n; ++r)
      if (a(r, col) != Scalar(0)) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("exact_inverse: singular matrix");
    a.row(piv).swap(a.row(col));
    inv.row(piv).swap(inv.row(col));
    Scalar d = a(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / d;
      inv(col, j) = inv(col, j) / d;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == Scalar(0)) continue;
      Scalar f = a(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(col, j);
        inv(r, j) = inv(r, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

// Sparse exact row-echelon accumulator: feed rows one at a time, read off the
// null space of the stacked matrix at the end.  Rows are linear constraints
// on `cols` unknowns.
template <typename Scalar>
class NullspaceSolver {
 public:
  using Row = std::map<int, Scalar>;

  explicit NullspaceSolver(int cols) : cols_(cols) {}

  void add_row(Row row) {
    strip_zeros(row);
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Scalar inv_lead = Scalar(1) / row.begin()->second;
        for (auto& [c, v] : row) v = v * inv_lead;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      // eliminate against the existing pivot row
      Scalar f = row.begin()->second;
      for (const auto& [c, v] : it->second) {
        auto jt = row.find(c);
        Scalar nv = (jt == row.end() ? Scalar(0) : jt->second) - f * v;
        if (nv == Scalar(0)) {
          if (jt != row.end()) row.erase(jt);
        } else {
          row[c] = nv;
        }
      }
    }
  }

  int rank() const { return static_cast<int>(pivots_.size()); }

  // Basis of {x : Ax = 0}, one column per free variable, deterministic order.
  std::vector<std::vector<Scalar>> nullspace_basis() const {
    // back-substitute to reduced echelon form
    std::map<int, Row> reduced = pivots_;
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it) {
      Row& r = it->second;
      for (auto jt = std::next(r.begin()); jt != r.end();) {
        auto pit = reduced.find(jt->first);
        if (pit == reduced.end() || pit->first == it->first) {
          ++jt;
          continue;
        }
        Scalar f = jt->second;
        for (const auto& [c, v] : pit->second) {
          if (c == pit->first) continue;
          Scalar nv = (r.count(c) ? r[c] : Scalar(0)) - f * v;
          if (nv == Scalar(0))
            r.erase(c);
          else
            r[c] = nv;
        }
        jt = r.erase(jt);
      }
    }
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < cols_; ++c) {
      if (reduced.count(c)) continue;
      std::vector<Scalar> x(cols_, Scalar(0));
      x[c] = Scalar(1);
      for (const auto& [p, row] : reduced) {
        auto it = row.find(c);
        if (it != row.end()) x[p] = -it->second;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  static void strip_zeros(Row& row) {
    for (auto it = row.begin(); it != row.end();)
      it = (it->second == Scalar(0)) ? row.erase(it) : std::next(it);
  }

  int cols_;
  std::map<int, Row> pivots_;  // leading column -> normalized row
};

}  // namespace whit
