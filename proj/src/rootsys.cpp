#include "dabru/rootsys.hpp"

#include <algorithm>
#include <deque>

namespace dabru {

IntVec mat_apply(const IntMat& m, const IntVec& v) {
  const int n = static_cast<int>(m.size());
  if (v.size() != m.size()) throw UsageError("mat_apply: dimension mismatch");
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

IntMat mat_mult(const IntMat& a, const IntMat& b) {
  const int n = static_cast<int>(a.size());
  IntMat out(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

IntMat mat_transpose(const IntMat& m) {
  const int n = static_cast<int>(m.size());
  IntMat out(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[j][i] = m[i][j];
  return out;
}

IntMat mat_identity(int n) {
  IntMat out(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

namespace {

IntMat cartan_from_edges(int rank, const std::vector<std::pair<int, int>>& edges) {
  IntMat a(rank, IntVec(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  for (auto [u, v] : edges) {
    a[u][v] = -1;
    a[v][u] = -1;
  }
  return a;
}

}  // namespace

CartanDatum CartanDatum::from_label(const std::string& label) {
  if (label.size() < 2) throw ConfigError("unknown ground label: " + label);
  const char family = label[0];
  int rank = 0;
  try {
    rank = std::stoi(label.substr(1));
  } catch (...) {
    throw ConfigError("unknown ground label: " + label);
  }
  std::vector<std::pair<int, int>> edges;
  if (family == 'A' && rank >= 1) {
    for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  } else if (family == 'D' && rank >= 4) {
    for (int i = 0; i + 1 < rank - 1; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(rank - 3, rank - 1);
  } else if (family == 'E' && rank >= 6 && rank <= 8) {
    // Bourbaki numbering: node 1 (index 0) on the long branch end, node 2
    // (index 1) the branch node hanging off node 4 (index 3).
    edges.emplace_back(0, 2);
    edges.emplace_back(2, 3);
    edges.emplace_back(1, 3);
    for (int i = 3; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
  } else {
    throw ConfigError("unsupported ground label: " + label);
  }
  return CartanDatum{label, rank, cartan_from_edges(rank, edges)};
}

FiniteRootSystem::FiniteRootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank;
  const IntMat& a = datum_.cartan;
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw ConfigError("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && a[i][j] != 0 && a[i][j] != -1)
        throw ConfigError("Cartan off-diagonal must be 0 or -1");
      if (a[i][j] != a[j][i]) throw ConfigError("Cartan matrix must be symmetric");
    }
  }
  enumerate_roots();
}

void FiniteRootSystem::enumerate_roots() {
  const int n = datum_.rank;
  std::deque<IntVec> queue;
  for (int i = 0; i < n; ++i) {
    IntVec alpha(n, 0);
    alpha[i] = 1;
    root_set_.insert(alpha);
    queue.push_back(alpha);
    IntVec neg(n, 0);
    neg[i] = -1;
    root_set_.insert(neg);
    queue.push_back(neg);
  }
  // Close under simple reflections: s_i(v) = v - (A v)_i e_i.
  while (!queue.empty()) {
    IntVec v = queue.front();
    queue.pop_front();
    const IntVec av = mat_apply(datum_.cartan, v);
    for (int i = 0; i < n; ++i) {
      IntVec w = v;
      w[i] -= av[i];
      if (root_set_.insert(w).second) queue.push_back(w);
    }
  }
  for (const IntVec& v : root_set_)
    if (is_positive_vec(v)) positive_roots_.push_back(v);
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const IntVec& x, const IntVec& y) {
              const int hx = height(x), hy = height(y);
              if (hx != hy) return hx < hy;
              return x < y;
            });
  highest_root_ = positive_roots_.back();
  dual_coxeter_ = 1 + height(highest_root_);
  positive_sum_.assign(datum_.rank, 0);
  for (const IntVec& v : positive_roots_)
    for (int i = 0; i < datum_.rank; ++i) positive_sum_[i] += v[i];
}

bool FiniteRootSystem::is_root(const IntVec& coords) const {
  return root_set_.count(coords) > 0;
}

bool FiniteRootSystem::is_positive_vec(const IntVec& coords) {
  bool nonzero = false;
  for (int c : coords) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

int FiniteRootSystem::height(const IntVec& root) {
  int h = 0;
  for (int c : root) h += c;
  return h;
}

int FiniteRootSystem::pairing(const IntVec& coweight, const IntVec& root) const {
  if (coweight.size() != root.size() || static_cast<int>(root.size()) != rank())
    throw UsageError("pairing: dimension mismatch");
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += coweight[i] * root[i];
  return s;
}

IntVec FiniteRootSystem::coroot(const IntVec& root) const {
  if (!is_root(root)) throw DomainError("coroot: not a root");
  return mat_apply(datum_.cartan, root);
}

int FiniteRootSystem::two_ht(const IntVec& coweight) const {
  return pairing(coweight, positive_sum_);
}

FiniteWeylElt FiniteRootSystem::identity() const {
  return FiniteWeylElt{mat_identity(rank()), mat_identity(rank())};
}

FiniteWeylElt FiniteRootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank()) throw UsageError("simple_reflection: index out of range");
  IntVec alpha(rank(), 0);
  alpha[i] = 1;
  return reflection(alpha);
}

FiniteWeylElt FiniteRootSystem::reflection(const IntVec& root) const {
  IntVec r = root;
  if (!is_positive_vec(r))
    for (int& c : r) c = -c;
  if (!is_root(r)) throw DomainError("reflection: not a root");
  const int n = rank();
  const IntVec rv = mat_apply(datum_.cartan, r);  // coroot in fc coordinates
  FiniteWeylElt w;
  w.root_mat.assign(n, IntVec(n, 0));
  w.cw_mat.assign(n, IntVec(n, 0));
  for (int j = 0; j < n; ++j) {
    // s_r(alpha_j) = alpha_j - <r^vee, alpha_j> r
    for (int i = 0; i < n; ++i) w.root_mat[i][j] = (i == j ? 1 : 0) - rv[j] * r[i];
    // s_r(omega_j^vee) = omega_j^vee - r_j r^vee
    for (int i = 0; i < n; ++i) w.cw_mat[i][j] = (i == j ? 1 : 0) - r[j] * rv[i];
  }
  return w;
}

FiniteWeylElt FiniteRootSystem::mult(const FiniteWeylElt& a, const FiniteWeylElt& b) const {
  return FiniteWeylElt{mat_mult(a.root_mat, b.root_mat), mat_mult(a.cw_mat, b.cw_mat)};
}

FiniteWeylElt FiniteRootSystem::inverse(const FiniteWeylElt& w) const {
  return FiniteWeylElt{mat_transpose(w.cw_mat), mat_transpose(w.root_mat)};
}

IntVec FiniteRootSystem::act_root(const FiniteWeylElt& w, const IntVec& root) const {
  return mat_apply(w.root_mat, root);
}

IntVec FiniteRootSystem::act_coweight(const FiniteWeylElt& w, const IntVec& coweight) const {
  return mat_apply(w.cw_mat, coweight);
}

std::vector<IntVec> FiniteRootSystem::inversions(const FiniteWeylElt& w) const {
  std::vector<IntVec> out;
  for (const IntVec& theta : positive_roots_)
    if (!is_positive_vec(act_root(w, theta))) out.push_back(theta);
  return out;
}

std::string int_vec_key(const IntVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += "]";
  return s;
}

FiniteGround::DomRes FiniteGround::dominant_translate(const Coweight& mu, int cap) const {
  Coweight rep = mu;
  Weyl w = identity();
  for (int step = 0; step < cap; ++step) {
    int i = -1;
    for (int j = 0; j < rank(); ++j)
      if (rep[j] < 0) {
        i = j;
        break;
      }
    if (i < 0) return DomRes{rep, w};
    const Weyl s = simple_reflection(i);
    rep = act_cw(s, rep);
    w = mult(s, w);
  }
  throw InternalError("dominant_translate: step cap exceeded");
}

std::vector<FiniteGround::Root> FiniteGround::neg_pairing_roots(const Coweight& mu) const {
  std::vector<Root> out;
  for (const Root& theta : fin_.positive_roots())
    if (pairing(mu, theta) < 0) out.push_back(theta);
  return out;
}

std::string FiniteGround::weyl_key(const Weyl& w) const {
  std::string s;
  for (const IntVec& row : w.root_mat) s += int_vec_key(row);
  return s;
}

}  // namespace dabru
