#include "whit/whitdim.hpp"

#include <algorithm>
#include <sstream>

namespace whit {

namespace {

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << rat_str(w[i]);
  }
  os << ")";
  return os.str();
}

std::vector<bool> positive_root_mask(const RootDatum& R,
                                     const std::vector<int>& idxs) {
  std::vector<bool> m(R.num_positive(), false);
  for (int k : idxs) m[k] = true;
  return m;
}

long findim_dim_m(const ProblemInput& in) {
  Weight hw = in.lambda + in.sigma.nu_tilde;
  return weyl_dim(*in.R, in.m0_subsystem, hw);
}

long table_value(const ProblemInput& in, int w) {
  const std::string key = word_str(in.W->operator[](w).word);
  auto it = in.sigma.wh_table.find(key);
  if (it == in.sigma.wh_table.end())
    throw MissingTable("wh_table has no entry for " + key);
  return it->second;
}

}  // namespace

long weyl_dim(const RootDatum& R, const std::vector<int>& sub, const Weight& mu) {
  if (mu.size() != R.rank) throw DimensionMismatch("weyl_dim: bad weight length");
  for (int t : sub) {
    Rat p = pairing(R, mu, R.simple_weight(t));
    if (!is_integer(p) || p < 0)
      throw NotDominant("weight fails <mu, a^vee> in Z>=0 at simple root #" +
                        std::to_string(t + 1) + " (value " + rat_str(p) + ")");
  }
  std::vector<int> pos = sigma_theta_positive(R, sub);
  Weight rho_sub = half_sum(R, pos);
  Rat dim(1);
  for (int k : pos) {
    Weight beta = to_qvec(R.positive_roots[k]);
    dim *= inner_product(R, mu + rho_sub, beta) / inner_product(R, rho_sub, beta);
  }
  if (!is_integer(dim)) throw Error("weyl_dim: non-integer product");
  return static_cast<long>(dim.get_num().get_si());
}

std::vector<Weight> effective_exponents(const ProblemInput& in) {
  if (in.sigma.kind == SigmaData::Kind::Table) return in.sigma.exponents;
  // finite-dimensional sigma: restricted weight of the highest weight of
  // sigma/(m cap n_0) sigma, minus the rho_0 shift
  Weight hw = in.lambda + in.sigma.nu_tilde;
  Weight r0 = rho0(*in.R, in.multiplicities);
  return {project_theta(*in.R, in.theta, hw) -
          project_theta(*in.R, in.theta, r0)};
}

GenericityReport genericity_a(const ProblemInput& in, int w) {
  in.validate();
  const RootDatum& R = *in.R;
  const WeylGroup& W = *in.W;
  GenericityReport rep;
  rep.variant = in.genericity_variant;

  auto sigma_m = positive_root_mask(R, sigma_theta_positive(R, in.theta));
  auto sigma_eta = positive_root_mask(R, sigma_theta_positive(R, in.supp_eta));

  std::vector<Weight> exps = effective_exponents(in);
  for (int k = 0; k < R.num_positive(); ++k) {
    SignedRoot img = act_on_root(W, w, k);
    bool excluded;
    if (in.genericity_variant == 1) {
      // w(alpha) in Sigma_M^+ cup Sigma_eta^+
      excluded = img.positive && (sigma_m[img.index] || sigma_eta[img.index]);
    } else {
      // w(alpha) in Sigma^+ cup Sigma_eta^-
      excluded = img.positive || sigma_eta[img.index];
    }
    if (excluded) continue;
    Weight alpha = to_qvec(R.positive_roots[k]);
    for (const Weight& nu : exps) {
      Rat q = pairing(R, in.lambda + nu, alpha);
      if (in_nonpositive_integers(q)) {
        rep.passed = false;
        rep.failures.push_back(
            {"alpha=" + weight_str(alpha) + " nu=" + weight_str(nu),
             rat_str(q)});
      }
    }
  }
  return rep;
}

namespace {

// Decide  target in Z_{>=0}-span of gens  by exhaustive bounded search.
// `phi` is a rational functional strictly positive on every generator, which
// bounds each coefficient by phi(target)/phi(gen).
bool cone_member(const std::vector<Weight>& gens,
                 const std::vector<Rat>& phi_gens, const Weight& target,
                 const Rat& phi_target, std::size_t s) {
  if (target.isZero()) return true;
  if (s == gens.size()) return false;
  if (phi_target < 0) return false;
  // max multiple of gens[s] that keeps phi nonnegative: floor(phi_t / phi_g)
  Rat q = phi_target / phi_gens[s];
  mpz_class b;
  mpz_fdiv_q(b.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  long bound = static_cast<long>(b.get_si());
  for (long n = 0; n <= bound; ++n) {
    Weight rest = target - Rat(n) * gens[s];
    if (cone_member(gens, phi_gens, rest, phi_target - Rat(n) * phi_gens[s],
                    s + 1))
      return true;
  }
  return false;
}

}  // namespace

GenericityReport genericity_b(const ProblemInput& in, int w) {
  in.validate();
  const RootDatum& R = *in.R;
  const WeylGroup& W = *in.W;
  GenericityReport rep;

  Weight mu_tilde;
  if (in.sigma.kind == SigmaData::Kind::FiniteDim) {
    // infinitesimal character of fin-dim sigma: nu_tilde + rho_M
    mu_tilde = in.sigma.nu_tilde +
               half_sum(R, sigma_theta_positive(R, in.theta));
  } else {
    if (!in.sigma.mu_tilde)
      throw MissingTable("genericity_b requires mu_tilde for table sigma");
    mu_tilde = *in.sigma.mu_tilde;
  }

  // generating set ((Sigma^+ \ Sigma_M^+) cap w^{-1} Sigma^+)|_a
  auto sigma_m = positive_root_mask(R, sigma_theta_positive(R, in.theta));
  std::vector<Weight> gens;
  for (int k = 0; k < R.num_positive(); ++k) {
    if (sigma_m[k]) continue;
    if (!act_on_root(W, w, k).positive) continue;
    Weight g = project_a(R, in.theta, to_qvec(R.positive_roots[k]));
    if (g.isZero()) continue;  // cannot happen for k outside Sigma_M
    gens.push_back(g);
  }

  // strictly positive functional: pairing with sum of fundamental weights of
  // the simple roots outside Theta (lies in a*, positive on every generator)
  QMat cinv_t = exact_inverse<Rat>(QMat(to_qmat(R.cartan).transpose()));
  Weight delta = Weight::Zero(R.rank);
  std::vector<bool> in_theta(R.rank, false);
  for (int t : in.theta) in_theta[t] = true;
  for (int j = 0; j < R.rank; ++j) {
    if (in_theta[j]) continue;
    QVec e = QVec::Zero(R.rank);
    e[j] = Rat(1);
    delta += Weight(cinv_t * e);  // fundamental weight of a_j
  }
  std::vector<Rat> phi_gens;
  for (const Weight& g : gens) {
    Rat p = inner_product(R, g, delta);
    if (p <= 0) throw Error("genericity_b: functional not positive on cone");
    phi_gens.push_back(p);
  }

  std::ostringstream cert;
  cert << "cone bound via <.,sum of fundamental weights off Theta>;"
       << " generator count " << gens.size();
  rep.failures.clear();

  Weight lam = in.lambda;
  for (int wt = 0; wt < W.size(); ++wt) {
    Weight v = lam - project_a(R, in.theta, Weight(W[wt].act(lam + mu_tilde)));
    if (v.isZero()) continue;  // excluded by "\ {0}"
    Weight target = -v;
    Rat phi_t = inner_product(R, target, delta);
    if (phi_t < 0) continue;
    if (cone_member(gens, phi_gens, target, phi_t, 0)) {
      rep.passed = false;
      rep.failures.push_back({"wtilde=" + word_str(W[wt].word),
                              "lambda - wt(lambda+mu)|_a = " + weight_str(v)});
    }
  }
  (void)cert;
  return rep;
}

DimReport dim_wh_continuous(const ProblemInput& in) {
  in.validate();
  DimReport rep;
  rep.route = "continuous (sum over surviving cells)";

  if (!in.unitary) {
    rep.dimension = 0;
    rep.notes.push_back("eta not unitary: J'_eta vanishes (main theorem part 1)");
    return rep;
  }

  std::vector<CellReport> cells = survivor_set(in);
  long dim_m = (in.sigma.kind == SigmaData::Kind::FiniteDim) ? findim_dim_m(in) : -1;

  long total = 0;
  for (const CellReport& c : cells) {
    // genericity is hypothesized for every w with eta trivial on wNw^-1 cap N0
    if (c.unitary_ok && c.blocking_roots.empty()) {
      if (!genericity_a(in, c.w).passed || !genericity_b(in, c.w).passed)
        rep.genericity_ok = false;
    }
    if (!c.survives) continue;
    total += (in.sigma.kind == SigmaData::Kind::FiniteDim) ? dim_m
                                                           : table_value(in, c.w);
  }
  rep.dimension = total;
  if (!rep.genericity_ok)
    rep.notes.push_back("formula outside proven range (genericity failed)");

  if (in.sigma.kind == SigmaData::Kind::FiniteDim) {
    long pairs = static_cast<long>(pair_set(*in.W, in.supp_eta, in.theta).size());
    rep.closed_form = pairs * dim_m;
    rep.cross_checked = true;
    rep.cross_check_ok = (rep.closed_form == total);
    rep.notes.push_back("closed form #W(supp eta, Theta) x dim_M = " +
                        std::to_string(rep.closed_form));
  }
  return rep;
}

DimReport dim_wh_algebraic(const ProblemInput& in) {
  in.validate();
  const WeylGroup& W = *in.W;
  DimReport rep;
  rep.route = "algebraic (sum over all of W(Theta))";

  // precondition: (lambda + mu) - wt(lambda + mu) not in Z Delta for wt
  // outside the parabolic subgroup
  Weight mu;
  bool have_mu = true;
  if (in.sigma.kind == SigmaData::Kind::FiniteDim) {
    mu = in.sigma.nu_tilde;
  } else if (in.sigma.mu_tilde) {
    mu = *in.sigma.mu_tilde;
  } else {
    have_mu = false;
    rep.notes.push_back("mu_tilde not supplied: integrality precondition unchecked");
  }
  if (have_mu) {
    std::vector<int> wm = parabolic_subgroup(W, in.theta);
    std::vector<bool> in_wm(W.size(), false);
    for (int v : wm) in_wm[v] = true;
    Weight base = in.lambda + mu;
    for (int wt = 0; wt < W.size(); ++wt) {
      if (in_wm[wt]) continue;
      Weight diff = base - Weight(W[wt].act(base));
      bool integral = true;
      for (Eigen::Index i = 0; i < diff.size(); ++i)
        if (!is_integer(diff[i])) {
          integral = false;
          break;
        }
      if (integral) {
        rep.genericity_ok = false;
        rep.notes.push_back("precondition violated at wtilde=" +
                            word_str(W[wt].word) +
                            ": (lambda+mu)-wt(lambda+mu) in Z Delta");
        break;
      }
    }
  }

  long dim_m = (in.sigma.kind == SigmaData::Kind::FiniteDim) ? findim_dim_m(in) : -1;
  long total = 0;
  for (int w : enumerate_cells_ordered(W, in.theta)) {
    if (in.sigma.kind == SigmaData::Kind::FiniteDim) {
      if (findim_jacquet_nonzero(in, w)) total += dim_m;
    } else {
      total += table_value(in, w);
    }
  }
  rep.dimension = total;

  if (in.sigma.kind == SigmaData::Kind::FiniteDim) {
    long pairs = static_cast<long>(pair_set(W, in.supp_eta, in.theta).size());
    long wsupp = static_cast<long>(parabolic_subgroup(W, in.supp_eta).size());
    rep.closed_form = pairs * wsupp * dim_m;
    rep.cross_checked = true;
    rep.cross_check_ok = (rep.closed_form == total);
    rep.notes.push_back(
        "closed form #W(supp eta, Theta) x #W_supp x dim_M = " +
        std::to_string(rep.closed_form));
  }
  return rep;
}

OshimaCheck oshima_identity_check(const WeylGroup& W,
                                  const std::vector<int>& theta,
                                  const std::vector<int>& supp_eta) {
  const RootDatum& R = W.datum();
  OshimaCheck out;
  out.pair_count = static_cast<long>(pair_set(W, supp_eta, theta).size());
  out.w_supp_order =
      static_cast<long>(parabolic_subgroup(W, supp_eta).size());

  auto sigma_eta = positive_root_mask(R, sigma_theta_positive(R, supp_eta));
  std::vector<int> sigma_m = sigma_theta_positive(R, theta);
  std::vector<bool> supp_mask(R.rank, false);
  for (int s : supp_eta) supp_mask[s] = true;

  for (int w : min_coset_reps(W, theta)) {
    // (1): w(Sigma^+) cap Sigma_eta^+ = empty
    bool ok1 = true;
    for (int k = 0; k < R.num_positive() && ok1; ++k) {
      SignedRoot img = act_on_root(W, w, k);
      if (img.positive && sigma_eta[img.index]) ok1 = false;
    }
    if (ok1) ++out.rhs1;
    // (2): supp eta cap w(Sigma_M^+) = empty
    bool ok2 = true;
    for (int k : sigma_m) {
      SignedRoot img = act_on_root(W, w, k);
      if (!img.positive) continue;
      const IVec& r = R.positive_roots[img.index];
      if (r.sum() == 1)
        for (int j = 0; j < R.rank; ++j)
          if (r[j] == 1 && supp_mask[j]) ok2 = false;
    }
    if (ok2) ++out.rhs2;
  }
  out.identity1 = (out.pair_count == out.rhs1);
  out.identity2 = (out.pair_count * out.w_supp_order == out.rhs2);
  return out;
}

}  // namespace whit
