#pragma once

#include <map>
#include <optional>

#include "whit/weylgrp.hpp"

namespace whit {

// Data of sigma: either a finite-dimensional highest weight, or an opaque
// table of Whittaker dimensions per coset representative (reduced word).
struct SigmaData {
  enum class Kind { FiniteDim, Table };
  Kind kind = Kind::FiniteDim;

  // FiniteDim: highest weight nu_tilde (simple-root coordinates)
  Weight nu_tilde;

  // Table: reduced word -> dim Wh_{w^{-1}eta}(sigma'); exponents and the
  // infinitesimal character mu_tilde feed the genericity checks.
  std::map<std::string, long> wh_table;
  std::vector<Weight> exponents;
  std::optional<Weight> mu_tilde;
};

struct ProblemInput {
  const RootDatum* R = nullptr;
  const WeylGroup* W = nullptr;
  std::vector<int> theta;               // subset of Pi (indices)
  std::vector<int> supp_eta;            // subset of Pi
  std::map<int, CRat> eta_values;       // simple index -> eta on that root space
  bool unitary = true;
  Weight lambda;                        // simple-root coordinates
  SigmaData sigma;
  int genericity_variant = 1;           // 1 or 2
  std::vector<int> m0_subsystem;        // compact-part subsystem (split: empty)

  void validate() const;
};

// Verdict for one Bruhat cell, indexed by w in W(Theta).
struct CellReport {
  int w = 0;       // group index
  int index = 0;   // position in the closure-compatible ordering
  bool survives = false;
  bool unitary_ok = false;
  std::vector<int> blocking_roots;  // simple indices in supp_eta cap w(S+ \ S_M+)
  bool jacquet_nonzero = true;
};

// W(Theta) in a linear extension of Bruhat order (ascending; every prefix is
// downward closed, the open dense cell comes last).
std::vector<int> enumerate_cells_ordered(const WeylGroup& W,
                                         const std::vector<int>& theta);

CellReport cell_survival(const ProblemInput& in, int w);

std::vector<CellReport> survivor_set(const ProblemInput& in);

// dim Wh_{w^{-1}eta}(sigma') for the finite-dimensional case is nonzero iff
// supp eta cap w(Sigma_Theta^+) is empty.
bool findim_jacquet_nonzero(const ProblemInput& in, int w);

}  // namespace whit
