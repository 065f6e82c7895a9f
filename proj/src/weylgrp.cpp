#include "whit/weylgrp.hpp"

#include <algorithm>

namespace whit {

namespace {

std::vector<long> key_of(const IMat& m) {
  return std::vector<long>(m.data(), m.data() + m.size());
}

IMat simple_reflection_matrix(const RootDatum& R, int i) {
  // s_i(a_j) = a_j - c(j,i) a_i  => row i of the coordinate action changes
  IMat s = IMat::Identity(R.rank, R.rank);
  for (int j = 0; j < R.rank; ++j) s(i, j) -= R.cartan(j, i);
  return s;
}

}  // namespace

Weight WeylElement::act(const Weight& v) const {
  return to_qmat(matrix) * v;
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += '.';
    s += 's' + std::to_string(word[k] + 1);
  }
  return s;
}

WeylGroup::WeylGroup(const RootDatum& R, std::size_t cap) : R_(&R) {
  const int n = R.rank;
  WeylElement id{IMat::Identity(n, n), {}};
  elements_.push_back(id);
  index_.emplace(key_of(id.matrix), 0);

  std::vector<IMat> gen(n);
  simples_.resize(n);
  for (int i = 0; i < n; ++i) gen[i] = simple_reflection_matrix(R, i);

  // BFS by length; scanning the previous level in stored (lex) order with
  // ascending generator index makes the first-found word the lex minimum.
  std::size_t level_begin = 0, level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t p = level_begin; p < level_end; ++p) {
      for (int j = 0; j < n; ++j) {
        IMat m = elements_[p].matrix * gen[j];  // w * s_j, word + [j]
        auto k = key_of(m);
        if (index_.count(k)) continue;
        WeylElement w;
        w.matrix = std::move(m);
        w.word = elements_[p].word;
        w.word.push_back(j);
        index_.emplace(std::move(k), static_cast<int>(elements_.size()));
        elements_.push_back(std::move(w));
        if (elements_.size() > cap)
          throw GroupTooLarge("Weyl group exceeds the configured cap");
      }
    }
    level_begin = level_end;
    level_end = elements_.size();
  }

  for (int i = 0; i < n; ++i) simples_[i] = index_of(gen[i]);
  inverse_.resize(elements_.size());
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    // multiply the reduced word backwards
    IMat m = IMat::Identity(R.rank, R.rank);
    const auto& wd = elements_[a].word;
    for (auto it = wd.rbegin(); it != wd.rend(); ++it) m = m * gen[*it];
    inverse_[a] = index_of(m);
  }
  downsets_.resize(elements_.size());
}

int WeylGroup::index_of(const IMat& m) const {
  auto it = index_.find(key_of(m));
  if (it == index_.end()) throw Error("WeylGroup: element not in group");
  return it->second;
}

int WeylGroup::multiply(int a, int b) const {
  return index_of(IMat(elements_[a].matrix * elements_[b].matrix));
}

int WeylGroup::inverse(int a) const { return inverse_[a]; }

int WeylGroup::longest() const {
  int best = 0;
  for (int i = 1; i < size(); ++i)
    if (elements_[i].length() > elements_[best].length()) best = i;
  return best;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  IMat m = IMat::Identity(R_->rank, R_->rank);
  for (int i : word) {
    if (i < 0 || i >= R_->rank) throw ValidationError("word letter out of range");
    m = m * elements_[simples_[i]].matrix;
  }
  return index_of(m);
}

const std::vector<bool>& WeylGroup::bruhat_downset(int w) const {
  auto& cache = downsets_[w];
  if (!cache.empty()) return cache;
  // subword criterion: u <= w iff u is a product of a subword of a fixed
  // reduced word of w; collecting length-increasing subword products reaches
  // exactly the Bruhat interval [e, w]
  std::vector<bool> in(size(), false);
  in[0] = true;
  std::vector<int> frontier{0};
  for (int letter : elements_[w].word) {
    std::vector<int> next = frontier;
    for (int u : frontier) {
      int us = multiply(u, simples_[letter]);
      if (length(us) > length(u) && !in[us]) {
        in[us] = true;
        next.push_back(us);
      }
    }
    frontier = std::move(next);
  }
  cache = std::move(in);
  return cache;
}

bool WeylGroup::bruhat_leq(int u, int w) const {
  if (length(u) > length(w)) return false;
  return bruhat_downset(w)[u];
}

std::vector<int> min_coset_reps(const WeylGroup& W, const std::vector<int>& theta) {
  const RootDatum& R = W.datum();
  std::vector<int> out;
  for (int a = 0; a < W.size(); ++a) {
    bool ok = true;
    for (int t : theta) {
      if (t < 0 || t >= R.rank) throw ValidationError("theta index out of range");
      IVec img = W[a].act(R.simple(t));
      if (!R.is_positive_root(img)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<int> parabolic_subgroup(const WeylGroup& W,
                                    const std::vector<int>& theta) {
  std::vector<bool> in(W.size(), false);
  in[0] = true;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int t : theta) {
      int nx = W.multiply(queue[h], W.simple_reflection(t));
      if (!in[nx]) {
        in[nx] = true;
        queue.push_back(nx);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> pair_set(const WeylGroup& W, const std::vector<int>& theta1,
                          const std::vector<int>& theta2) {
  const RootDatum& R = W.datum();
  std::vector<int> reps1 = min_coset_reps(W, theta1);
  std::vector<int> sig1 = sigma_theta_positive(R, theta1);
  std::vector<bool> in_sig2(R.num_positive(), false);
  for (int k : sigma_theta_positive(R, theta2)) in_sig2[k] = true;

  std::vector<int> out;
  for (int a : reps1) {
    // w in W(Theta2)^{-1}: w^{-1}(Theta2) positive
    int ainv = W.inverse(a);
    bool ok = true;
    for (int t : theta2)
      if (!R.is_positive_root(W[ainv].act(R.simple(t)))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // w(Sigma_Theta1) cap Sigma_Theta2 = empty (positive halves suffice)
    for (int k : sig1) {
      SignedRoot sr = act_on_root(W, a, k);
      if (in_sig2[sr.index]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::pair<int, int> factorize(const WeylGroup& W, const std::vector<int>& theta,
                              int w) {
  const RootDatum& R = W.datum();
  int u = w;
  std::vector<int> v_word_rev;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int t : theta) {
      if (!R.is_positive_root(W[u].act(R.simple(t)))) {
        u = W.multiply(u, W.simple_reflection(t));
        v_word_rev.push_back(t);
        moved = true;
        break;
      }
    }
  }
  std::vector<int> v_word(v_word_rev.rbegin(), v_word_rev.rend());
  return {u, W.from_word(v_word)};
}

SignedRoot act_on_root(const WeylGroup& W, int w, int pos_root_index) {
  const RootDatum& R = W.datum();
  IVec img = W[w].act(R.positive_roots[pos_root_index]);
  auto it = R.root_index.find(std::vector<long>(img.data(), img.data() + img.size()));
  if (it != R.root_index.end()) return {it->second, true};
  IVec neg = -img;
  auto jt = R.root_index.find(std::vector<long>(neg.data(), neg.data() + neg.size()));
  if (jt == R.root_index.end()) throw Error("act_on_root: image is not a root");
  return {jt->second, false};
}

std::vector<int> w_image_positive(const WeylGroup& W, int w,
                                  const std::vector<int>& root_subset) {
  std::vector<int> out;
  for (int k : root_subset) {
    SignedRoot sr = act_on_root(W, w, k);
    if (sr.positive) out.push_back(sr.index);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace whit
