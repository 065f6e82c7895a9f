#include "whit/rootsys.hpp"

#include <algorithm>
#include <set>

namespace whit {

namespace {

std::vector<long> key_of(const IVec& v) {
  return std::vector<long>(v.data(), v.data() + v.size());
}

// Connected components of the Dynkin diagram (edges where c_ij != 0).
std::vector<std::vector<int>> diagram_components(const IMat& c) {
  int n = static_cast<int>(c.rows());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s}, nodes;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (int u = 0; u < n; ++u)
        if (u != v && c(v, u) != 0 && comp[u] < 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    out.push_back(nodes);
  }
  return out;
}

void validate_cartan(const IMat& c) {
  int n = static_cast<int>(c.rows());
  if (n == 0 || c.cols() != n) throw InvalidCartan("matrix must be square and nonempty");
  if (n > 8) throw InvalidCartan("rank > 8 not supported");
  for (int i = 0; i < n; ++i) {
    if (c(i, i) != 2) throw InvalidCartan("diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) throw InvalidCartan("positive off-diagonal entry");
      if ((c(i, j) == 0) != (c(j, i) == 0))
        throw InvalidCartan("asymmetric zero pattern");
    }
  }
}

// Symmetrizer d with d_j * c_ij = d_i * c_ji, scaled so the long roots of
// each component have squared length 2 (i.e. max d = 1 per component).
QVec symmetrizer(const IMat& c) {
  int n = static_cast<int>(c.rows());
  QVec d(n);
  for (int i = 0; i < n; ++i) d[i] = Rat(0);
  for (const auto& nodes : diagram_components(c)) {
    d[nodes.front()] = Rat(1);
    // propagate along edges: d_j = d_i * c_ji / c_ij
    std::vector<int> stack{nodes.front()};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || c(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * Rat(c(j, i)) / Rat(c(i, j));
        stack.push_back(j);
      }
    }
    Rat mx(0);
    for (int i : nodes) mx = std::max(mx, d[i]);
    for (int i : nodes) d[i] /= mx;
  }
  return d;
}

bool positive_definite(const QMat& g) {
  // leading principal minors via fraction-free elimination on a copy
  QMat a = g;
  int n = static_cast<int>(a.rows());
  for (int k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rat f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

// Closure of the simple roots under simple reflections; positive side only.
std::vector<IVec> generate_positive_roots(const IMat& c) {
  int n = static_cast<int>(c.rows());
  const size_t bound = 300;  // far above any rank <= 8 finite type
  std::set<std::vector<long>> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < n; ++i) {
    IVec a = IVec::Zero(n);
    a[i] = 1;
    seen.insert(key_of(a));
    queue.push_back(a);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    IVec b = queue[head];
    for (int i = 0; i < n; ++i) {
      // s_i(b) = b - <b, a_i^vee> a_i, with <a_j, a_i^vee> = c(j,i)
      long p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * c(j, i);
      IVec r = b;
      r[i] -= p;
      bool pos = true, neg = true;
      for (int j = 0; j < n; ++j) {
        if (r[j] > 0) neg = false;
        if (r[j] < 0) pos = false;
      }
      if (!pos && !neg) throw InvalidCartan("reflection left the root cone");
      if (pos && seen.insert(key_of(r)).second) {
        queue.push_back(r);
        if (queue.size() > bound)
          throw NonFiniteType("root generation exceeded the finite-type bound");
      }
    }
  }
  return queue;
}

void sort_roots(std::vector<IVec>& roots) {
  std::sort(roots.begin(), roots.end(), [](const IVec& a, const IVec& b) {
    long ha = a.sum(), hb = b.sum();
    if (ha != hb) return ha < hb;
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
  });
}

RootDatum finish(const IMat& cartan, std::vector<IVec> roots, bool reduced,
                 std::string label) {
  RootDatum R;
  R.rank = static_cast<int>(cartan.rows());
  R.cartan = cartan;
  QVec d = symmetrizer(cartan);
  R.form = QMat(R.rank, R.rank);
  for (int i = 0; i < R.rank; ++i)
    for (int j = 0; j < R.rank; ++j) R.form(i, j) = Rat(cartan(i, j)) * d[j];
  if (!positive_definite(R.form))
    throw InvalidCartan("Gram matrix is not positive definite (not finite type)");
  sort_roots(roots);
  R.positive_roots = std::move(roots);
  R.reduced = reduced;
  R.label = std::move(label);
  for (int k = 0; k < R.num_positive(); ++k)
    R.root_index.emplace(key_of(R.positive_roots[k]), k);
  return R;
}

IMat cartan_of_type(char family, int n) {
  IMat c = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j, long cij, long cji) {
    c(i, j) = cij;
    c(j, i) = cji;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      break;
    case 'B':  // a_{n-1} long chain, a_n short: c(n-1,n) = -2? convention below
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      // last simple root short: 2<a_{n-1},a_n>/<a_n,a_n> = -2
      c(n - 2, n - 1) = -2;
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1, -1);
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1, -1, -1);
      link(n - 3, n - 1, -1, -1);
      break;
    default:
      throw InvalidCartan("unknown family");
  }
  return c;
}

}  // namespace

IVec RootDatum::simple(int i) const {
  IVec v = IVec::Zero(rank);
  v[i] = 1;
  return v;
}

bool RootDatum::is_root(const IVec& v) const {
  if (root_index.count(key_of(v))) return true;
  IVec n = -v;
  return root_index.count(key_of(n)) > 0;
}

bool RootDatum::is_positive_root(const IVec& v) const {
  return root_index.count(key_of(v)) > 0;
}

RootDatum build_root_system(const IMat& cartan, const std::string& label) {
  validate_cartan(cartan);
  return finish(cartan, generate_positive_roots(cartan), /*reduced=*/true,
                label.empty() ? "custom" : label);
}

RootDatum build_root_system(const std::string& label) {
  if (label.size() < 2) throw InvalidCartan("unrecognized label '" + label + "'");
  bool bc = label.size() >= 3 && label[0] == 'B' && label[1] == 'C';
  char fam = label[0];
  int n = 0;
  try {
    n = std::stoi(label.substr(bc ? 2 : 1));
  } catch (...) {
    throw InvalidCartan("unrecognized label '" + label + "'");
  }

  if (bc) {
    if (n < 1 || n > 3) throw InvalidCartan("BC rank must be 1..3");
    // reduced part of BC_n is B_n (B_1 = A_1)
    IMat c = (n == 1) ? cartan_of_type('A', 1) : cartan_of_type('B', n);
    std::vector<IVec> roots = generate_positive_roots(c);
    // add doubles of the short roots (the e_i's): exactly the roots of
    // minimal squared length
    QVec d = symmetrizer(c);
    QMat form(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) form(i, j) = Rat(c(i, j)) * d[j];
    Rat minlen(0);
    std::vector<Rat> len2(roots.size());
    for (size_t k = 0; k < roots.size(); ++k) {
      QVec q = to_qvec(roots[k]);
      len2[k] = (q.transpose() * form * q)(0, 0);
      if (k == 0 || len2[k] < minlen) minlen = len2[k];
    }
    std::vector<IVec> all = roots;
    for (size_t k = 0; k < roots.size(); ++k)
      if (len2[k] == minlen) all.push_back(2 * roots[k]);
    return finish(c, std::move(all), /*reduced=*/false, label);
  }

  switch (fam) {
    case 'A':
      if (n < 1 || n > 7) throw InvalidCartan("A rank must be 1..7");
      return build_root_system(cartan_of_type('A', n), label);
    case 'B':
      if (n < 2 || n > 4) throw InvalidCartan("B rank must be 2..4");
      return build_root_system(cartan_of_type('B', n), label);
    case 'C':
      if (n < 3 || n > 4) throw InvalidCartan("C rank must be 3..4");
      return build_root_system(cartan_of_type('C', n), label);
    case 'D': {
      if (n != 4) throw InvalidCartan("only D4 is supported");
      return build_root_system(cartan_of_type('D', n), label);
    }
    case 'G': {
      if (n != 2) throw InvalidCartan("only G2 is supported");
      IMat c(2, 2);
      c << 2, -1, -3, 2;
      return build_root_system(c, label);
    }
    case 'F': {
      if (n != 4) throw InvalidCartan("only F4 is supported");
      IMat c = IMat::Zero(4, 4);
      for (int i = 0; i < 4; ++i) c(i, i) = 2;
      c(0, 1) = c(1, 0) = -1;
      c(1, 2) = -2;
      c(2, 1) = -1;
      c(2, 3) = c(3, 2) = -1;
      return build_root_system(c, label);
    }
    default:
      throw InvalidCartan("unrecognized label '" + label + "'");
  }
}

Rat inner_product(const RootDatum& R, const Weight& a, const Weight& b) {
  if (a.size() != R.rank || b.size() != R.rank)
    throw DimensionMismatch("inner_product: coordinate length != rank");
  return (a.transpose() * R.form * b)(0, 0);
}

Rat pairing(const RootDatum& R, const Weight& a, const Weight& coroot_of) {
  Rat nn = inner_product(R, coroot_of, coroot_of);
  return Rat(2) * inner_product(R, a, coroot_of) / nn;
}

Weight half_sum(const RootDatum& R, const std::vector<int>& subset,
                const std::map<int, long>& mult) {
  Weight w = Weight::Zero(R.rank);
  for (int idx : subset) {
    if (idx < 0 || idx >= R.num_positive())
      throw Error("half_sum: root index out of range");
    long m = 1;
    if (auto it = mult.find(idx); it != mult.end()) m = it->second;
    w += Rat(m, 2) * to_qvec(R.positive_roots[idx]);
  }
  return w;
}

std::vector<int> sigma_theta_positive(const RootDatum& R,
                                      const std::vector<int>& theta) {
  std::vector<bool> in_theta(R.rank, false);
  for (int t : theta) {
    if (t < 0 || t >= R.rank) throw ValidationError("theta index out of range");
    in_theta[t] = true;
  }
  std::vector<int> out;
  for (int k = 0; k < R.num_positive(); ++k) {
    const IVec& r = R.positive_roots[k];
    bool ok = true;
    for (int j = 0; j < R.rank; ++j)
      if (r[j] != 0 && !in_theta[j]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(k);
  }
  return out;
}

Weight fundamental_to_simple(const RootDatum& R, const QVec& fw) {
  if (fw.size() != R.rank)
    throw DimensionMismatch("fundamental coordinates: wrong length");
  // x^T C = c^T  =>  x = C^{-T} c
  QMat ct = to_qmat(R.cartan).transpose();
  return exact_inverse<Rat>(ct) * fw;
}

Weight project_theta(const RootDatum& R, const std::vector<int>& theta,
                     const Weight& mu) {
  if (theta.empty()) return Weight::Zero(R.rank);
  // solve <mu - sum x_t a_t, a_s> = 0 for s in theta
  int m = static_cast<int>(theta.size());
  QMat g(m, m);
  QVec rhs(m);
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m; ++t) g(s, t) = R.form(theta[s], theta[t]);
    rhs[s] = inner_product(R, mu, R.simple_weight(theta[s]));
  }
  QVec x = exact_inverse<Rat>(g) * rhs;
  Weight out = Weight::Zero(R.rank);
  for (int t = 0; t < m; ++t) out += x[t] * R.simple_weight(theta[t]);
  return out;
}

}  // namespace whit
