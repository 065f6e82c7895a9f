#pragma once

#include <vector>

#include "whit/rootsys.hpp"

namespace whit {

// One Weyl group element: integer action matrix on simple-root coordinates
// plus the lexicographically minimal reduced word.  Matrix equality is the
// canonical identity; words are regenerated deterministically.
struct WeylElement {
  IMat matrix;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  IVec act(const IVec& v) const { return matrix * v; }
  Weight act(const Weight& v) const;
};

std::string word_str(const std::vector<int>& word);  // "s1.s2.s1", "e"

// The full group of a RootDatum, enumerated once.  Elements are ordered by
// (length, lex word) with the identity first; indices are stable handles.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& R, std::size_t cap = 1000000);

  const RootDatum& datum() const { return *R_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& operator[](int i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  int index_of(const IMat& m) const;
  int index_of(const WeylElement& w) const { return index_of(w.matrix); }
  int multiply(int a, int b) const;  // index of ab
  int inverse(int a) const;
  int simple_reflection(int i) const { return simples_.at(i); }
  int longest() const;  // w_0
  int from_word(const std::vector<int>& word) const;

  int length(int a) const { return elements_[a].length(); }

  // Bruhat order u <= w by the subword criterion on w's reduced word.
  bool bruhat_leq(int u, int w) const;
  // All v <= w (computed once per w, cached).
  const std::vector<bool>& bruhat_downset(int w) const;

 private:
  const RootDatum* R_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<long>, int> index_;
  std::vector<int> simples_;
  std::vector<int> inverse_;
  mutable std::vector<std::vector<bool>> downsets_;
};

// W(Theta) = {w : w(Theta) subset Sigma^+}: the minimal coset representatives
// of W / W_Theta.
std::vector<int> min_coset_reps(const WeylGroup& W, const std::vector<int>& theta);

// Subgroup W_Theta generated by {s_a : a in Theta}.
std::vector<int> parabolic_subgroup(const WeylGroup& W,
                                    const std::vector<int>& theta);

// W(Theta1, Theta2) =
//   {w in W(Theta1) cap W(Theta2)^{-1} : w(Sigma_Theta1) cap Sigma_Theta2 = 0}.
std::vector<int> pair_set(const WeylGroup& W, const std::vector<int>& theta1,
                          const std::vector<int>& theta2);

// Unique (u, v) with u in W(Theta), v in W_Theta, w = uv.
std::pair<int, int> factorize(const WeylGroup& W, const std::vector<int>& theta,
                              int w);

// w(beta) as a signed positive-root reference.
struct SignedRoot {
  int index;      // index into positive_roots
  bool positive;  // sign
};
SignedRoot act_on_root(const WeylGroup& W, int w, int pos_root_index);

// {w(beta) : beta in Sigma^+ \ Sigma_Theta^+} intersected with Sigma^+,
// i.e. the positive roots of Ad(w) n-bar intersect n_0 mirror-set used by
// the survival tests.  Returns positive-root indices.
std::vector<int> w_image_positive(const WeylGroup& W, int w,
                                  const std::vector<int>& root_subset);

}  // namespace whit
