#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "whit/linalg.hpp"

namespace whit {

// A weight of the (restricted) Cartan, stored in simple-root coordinates.
using Weight = QVec;

// A restricted root system, possibly non-reduced (type BC).  Immutable after
// construction; every query is pure.
struct RootDatum {
  int rank = 0;
  IMat cartan;                      // cartan(i,j) = 2<a_i,a_j>/<a_j,a_j>
  std::vector<IVec> positive_roots; // coordinates over the simple roots,
                                    // ordered by (height, lex)
  QMat form;                        // Gram matrix of the simple roots
  bool reduced = true;
  std::string label;

  // index of a positive root by coordinates; negatives are looked up by sign
  std::map<std::vector<long>, int> root_index;

  int num_positive() const { return static_cast<int>(positive_roots.size()); }
  IVec simple(int i) const;
  Weight simple_weight(int i) const { return to_qvec(simple(i)); }

  bool is_root(const IVec& v) const;
  bool is_positive_root(const IVec& v) const;
  long height(const IVec& v) const { return v.sum(); }
};

// `label_or` accepts A1..A7, B2..B4, C3..C4, D4, G2, F4, BC1..BC3.
RootDatum build_root_system(const std::string& label);
RootDatum build_root_system(const IMat& cartan, const std::string& label = "");

Rat inner_product(const RootDatum& R, const Weight& a, const Weight& b);

// <a, b^vee> = 2<a,b>/<b,b>
Rat pairing(const RootDatum& R, const Weight& a, const Weight& coroot_of);

// (1/2) * sum of the selected positive roots, each weighted by `mult`
// (default 1; this is where dim g_alpha would enter for non-split data).
Weight half_sum(const RootDatum& R, const std::vector<int>& subset,
                const std::map<int, long>& mult = {});

inline Weight rho0(const RootDatum& R, const std::map<int, long>& mult = {}) {
  std::vector<int> all(R.num_positive());
  for (int i = 0; i < R.num_positive(); ++i) all[i] = i;
  return half_sum(R, all, mult);
}

// Positive roots supported on Theta: Sigma_Theta^+ (as indices into
// positive_roots).
std::vector<int> sigma_theta_positive(const RootDatum& R,
                                      const std::vector<int>& theta);

// Fundamental-weight coordinates -> simple-root coordinates.
Weight fundamental_to_simple(const RootDatum& R, const QVec& fw_coords);

// Orthogonal projection of mu onto span(Theta) ("restriction to m cap a_0")
// and onto its orthocomplement ("restriction to a").
Weight project_theta(const RootDatum& R, const std::vector<int>& theta,
                     const Weight& mu);
inline Weight project_a(const RootDatum& R, const std::vector<int>& theta,
                        const Weight& mu) {
  return mu - project_theta(R, theta, mu);
}

}  // namespace whit
