#pragma once

#include "whit/cells.hpp"

namespace whit {

// Weyl dimension formula over the subsystem spanned by `sub` (subset of Pi).
// mu must be dominant integral for the subsystem.
long weyl_dim(const RootDatum& R, const std::vector<int>& sub, const Weight& mu);

struct GenericityFailure {
  std::string where;   // witness: root or Weyl element
  std::string value;   // the offending exact value
};

struct GenericityReport {
  bool passed = true;
  int variant = 0;  // 1 or 2 for condition (a); 0 for condition (b)
  std::vector<GenericityFailure> failures;
};

// Condition (a): 2<alpha, lambda+nu>/|alpha|^2 not in Z_{<=0} for every
// exponent nu and every alpha in the variant set
//   VARIANT-1: Sigma^+ \ w^{-1}(Sigma_M^+ cup Sigma_eta^+)
//   VARIANT-2: Sigma^+ \ w^{-1}(Sigma^+ cup Sigma_eta^-)
GenericityReport genericity_a(const ProblemInput& in, int w);

// Condition (b): lambda - wt(lambda + mu_tilde)|_a not in
// Z_{<=0}((Sigma^+ \ Sigma_M^+) cap w^{-1} Sigma^+)|_a \ {0} for all wt in
// the (split) complex Weyl group.
GenericityReport genericity_b(const ProblemInput& in, int w);

struct DimReport {
  long dimension = 0;
  bool genericity_ok = true;       // false: "formula outside proven range"
  bool cross_checked = false;      // both routes computed and compared
  bool cross_check_ok = true;
  long closed_form = -1;           // fin-dim closed form when available
  std::string route;               // provenance of `dimension`
  std::vector<std::string> notes;
};

// Continuous-dual theorem: sum over surviving cells.
DimReport dim_wh_continuous(const ProblemInput& in);

// K-finite-dual theorem: sum over all of W(Theta).
DimReport dim_wh_algebraic(const ProblemInput& in);

struct OshimaCheck {
  long pair_count = 0;        // # W(supp eta, Theta)
  long w_supp_order = 0;      // # W_{supp eta}
  long rhs1 = 0;              // #{w in W(Theta) : w(Sigma^+) cap Sigma_eta^+ = 0}
  long rhs2 = 0;              // #{w in W(Theta) : supp eta cap w(Sigma_M^+) = 0}
  bool identity1 = false;     // pair_count == rhs1
  bool identity2 = false;     // pair_count * w_supp_order == rhs2
};

// Both comparison-lemma identities, each side by brute force.
OshimaCheck oshima_identity_check(const WeylGroup& W,
                                  const std::vector<int>& theta,
                                  const std::vector<int>& supp_eta);

// Exponents used by the genericity checks: explicit for table sigma, derived
// for the finite-dimensional case (weights of sigma/(m cap n_0)sigma
// restricted to m cap a_0, with the rho_0 shift removed).
std::vector<Weight> effective_exponents(const ProblemInput& in);

}  // namespace whit
