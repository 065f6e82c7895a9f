#include "whit/cells.hpp"

#include <algorithm>

namespace whit {

namespace {

// simple indices of supp_eta found inside {w(beta) : beta in root_set}
std::vector<int> supp_hits(const ProblemInput& in, int w,
                           const std::vector<int>& root_set) {
  const RootDatum& R = *in.R;
  std::vector<bool> supp(R.rank, false);
  for (int s : in.supp_eta) supp[s] = true;
  std::vector<int> hits;
  for (int k : root_set) {
    SignedRoot sr = act_on_root(*in.W, w, k);
    if (!sr.positive) continue;
    const IVec& r = R.positive_roots[sr.index];
    if (r.sum() != 1) continue;  // only simple roots carry eta
    for (int j = 0; j < R.rank; ++j)
      if (r[j] == 1 && supp[j]) hits.push_back(j);
  }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

std::vector<int> complement_of_theta_roots(const RootDatum& R,
                                           const std::vector<int>& theta) {
  std::vector<bool> in_theta_span(R.num_positive(), false);
  for (int k : sigma_theta_positive(R, theta)) in_theta_span[k] = true;
  std::vector<int> out;
  for (int k = 0; k < R.num_positive(); ++k)
    if (!in_theta_span[k]) out.push_back(k);
  return out;
}

}  // namespace

void ProblemInput::validate() const {
  if (!R || !W) throw ValidationError("ProblemInput: missing root system");
  auto check_subset = [&](const std::vector<int>& s, const char* name) {
    for (int i : s)
      if (i < 0 || i >= R->rank)
        throw ValidationError(std::string(name) + " index out of range");
  };
  check_subset(theta, "theta");
  check_subset(supp_eta, "supp_eta");
  check_subset(m0_subsystem, "m0_subsystem");
  for (int s : supp_eta) {
    auto it = eta_values.find(s);
    if (it == eta_values.end() || it->second.is_zero())
      throw ValidationError("supp_eta must match the nonzero eta values");
  }
  for (const auto& [s, v] : eta_values) {
    if (s < 0 || s >= R->rank) throw ValidationError("eta index out of range");
    if (!v.is_zero() &&
        std::find(supp_eta.begin(), supp_eta.end(), s) == supp_eta.end())
      throw ValidationError("nonzero eta value outside supp_eta");
  }
  if (lambda.size() != R->rank)
    throw ValidationError("lambda has wrong coordinate length");
  if (genericity_variant != 1 && genericity_variant != 2)
    throw ValidationError("genericity_variant must be 1 or 2");
}

std::vector<int> enumerate_cells_ordered(const WeylGroup& W,
                                         const std::vector<int>& theta) {
  // stored group order is already (length, lex word): a linear extension of
  // Bruhat order with the identity (point cell) first and w_max last
  return min_coset_reps(W, theta);
}

bool findim_jacquet_nonzero(const ProblemInput& in, int w) {
  return supp_hits(in, w, sigma_theta_positive(*in.R, in.theta)).empty();
}

CellReport cell_survival(const ProblemInput& in, int w) {
  in.validate();
  const RootDatum& R = *in.R;
  // w must be a minimal coset representative
  for (int t : in.theta)
    if (!R.is_positive_root(in.W->operator[](w).act(R.simple(t))))
      throw NotACosetRep("cell_survival: w not in W(Theta)");

  CellReport rep;
  rep.w = w;
  rep.unitary_ok = in.unitary;
  rep.blocking_roots = supp_hits(in, w, complement_of_theta_roots(R, in.theta));

  if (in.sigma.kind == SigmaData::Kind::FiniteDim) {
    rep.jacquet_nonzero = findim_jacquet_nonzero(in, w);
  } else {
    auto it = in.sigma.wh_table.find(word_str(in.W->operator[](w).word));
    rep.jacquet_nonzero = (it == in.sigma.wh_table.end()) || it->second > 0;
  }
  rep.survives = rep.unitary_ok && rep.blocking_roots.empty() && rep.jacquet_nonzero;
  return rep;
}

std::vector<CellReport> survivor_set(const ProblemInput& in) {
  std::vector<int> cells = enumerate_cells_ordered(*in.W, in.theta);
  std::vector<CellReport> out;
  out.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellReport r = cell_survival(in, cells[i]);
    r.index = static_cast<int>(i);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace whit
