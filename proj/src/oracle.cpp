#include "dabru/oracle.hpp"

#include <deque>

namespace dabru {

namespace {

std::string mat_key(const IntMat& m) {
  std::string s;
  for (const IntVec& row : m) s += int_vec_key(row);
  return s;
}

}  // namespace

CoxeterOracle::CoxeterOracle(const std::string& label) {
  const FiniteRootSystem fin = FiniteRootSystem::from_label(label);
  rank_ = fin.rank();
  const int d = rank_ + 1;  // coordinates: (theta, delta-coeff)

  alphas_.assign(d, IntVec(d, 0));
  for (int i = 1; i <= rank_; ++i) alphas_[i][i - 1] = 1;
  const IntVec& hr = fin.highest_root();
  for (int j = 0; j < rank_; ++j) alphas_[0][j] = -hr[j];
  alphas_[0][rank_] = 1;

  // Coroot pairing rows: <alpha_i^vee, theta + r delta> = (A theta)_i for
  // i >= 1 and -<theta_h^vee, theta> for i = 0 (delta pairs to zero with
  // every real coroot).
  std::vector<IntVec> pairing_rows(d, IntVec(d, 0));
  for (int i = 1; i <= rank_; ++i)
    for (int j = 0; j < rank_; ++j) pairing_rows[i][j] = fin.cartan()[i - 1][j];
  const IntVec hrv = fin.coroot(hr);
  for (int j = 0; j < rank_; ++j) pairing_rows[0][j] = -hrv[j];

  gens_.clear();
  for (int i = 0; i < d; ++i) {
    IntMat m = mat_identity(d);
    // s_i(v) = v - <alpha_i^vee, v> alpha_i, column by column
    for (int col = 0; col < d; ++col)
      for (int row = 0; row < d; ++row)
        m[row][col] -= pairing_rows[i][col] * alphas_[i][row];
    gens_.push_back(m);
  }
}

IntMat CoxeterOracle::matrix(const CoxeterElt& e) const {
  IntMat m = mat_identity(rank_ + 1);
  for (int i : e.word) {
    if (i < 0 || i > rank_) throw UsageError("CoxeterElt: generator out of range");
    m = mat_mult(m, gens_[i]);
  }
  return m;
}

bool CoxeterOracle::is_descent(const IntMat& m, int i) const {
  const IntVec img = mat_apply(m, alphas_[i]);
  const int r = img[rank_];
  if (r != 0) return r < 0;
  for (int j = 0; j < rank_; ++j)
    if (img[j] != 0) return img[j] < 0;
  throw InternalError("CoxeterOracle: generator image vanished");
}

int CoxeterOracle::length_of_matrix(IntMat m) const {
  const IntMat id = mat_identity(rank_ + 1);
  int len = 0;
  while (!(m == id)) {
    int i = 0;
    while (i <= rank_ && !is_descent(m, i)) ++i;
    if (i > rank_) throw InternalError("CoxeterOracle: no descent off identity");
    m = mat_mult(m, gens_[i]);
    ++len;
    if (len > 100000) throw InternalError("CoxeterOracle: descent walk diverged");
  }
  return len;
}

int CoxeterOracle::cox_length(const CoxeterElt& e) const {
  return length_of_matrix(matrix(e));
}

std::vector<int> CoxeterOracle::reduced_word(const CoxeterElt& e) const {
  IntMat m = matrix(e);
  const IntMat id = mat_identity(rank_ + 1);
  std::vector<int> rev;
  while (!(m == id)) {
    int i = 0;
    while (i <= rank_ && !is_descent(m, i)) ++i;
    if (i > rank_) throw InternalError("CoxeterOracle: no descent off identity");
    m = mat_mult(m, gens_[i]);
    rev.push_back(i);
  }
  return std::vector<int>(rev.rbegin(), rev.rend());
}

bool CoxeterOracle::leq_matrices(const IntMat& a, const IntMat& b) const {
  if (a == b) return true;
  const std::string key = mat_key(a) + "#" + mat_key(b);
  const auto it = leq_memo_.find(key);
  if (it != leq_memo_.end()) return it->second;
  bool res;
  const int lb = length_of_matrix(b);
  if (length_of_matrix(a) >= lb) {
    res = false;
  } else if (lb == 0) {
    res = a == mat_identity(rank_ + 1);
  } else {
    // lifting property at any descent i of b
    int i = 0;
    while (!is_descent(b, i)) ++i;
    const IntMat bs = mat_mult(b, gens_[i]);
    if (is_descent(a, i))
      res = leq_matrices(mat_mult(a, gens_[i]), bs);
    else
      res = leq_matrices(a, bs);
  }
  leq_memo_[key] = res;
  return res;
}

bool CoxeterOracle::cox_leq(const CoxeterElt& a, const CoxeterElt& b) const {
  return leq_matrices(matrix(a), matrix(b));
}

std::vector<CoxeterElt> CoxeterOracle::elements_up_to(int L) const {
  std::vector<CoxeterElt> out;
  std::set<std::string> seen;
  std::deque<std::pair<IntMat, CoxeterElt>> queue;
  const IntMat id = mat_identity(rank_ + 1);
  seen.insert(mat_key(id));
  queue.emplace_back(id, CoxeterElt{});
  while (!queue.empty()) {
    auto [m, e] = queue.front();
    queue.pop_front();
    out.push_back(e);
    if (static_cast<int>(e.word.size()) == L) continue;
    for (int i = 0; i <= rank_; ++i) {
      IntMat nm = mat_mult(m, gens_[i]);
      if (!seen.insert(mat_key(nm)).second) continue;
      CoxeterElt ne = e;
      ne.word.push_back(i);
      queue.emplace_back(std::move(nm), std::move(ne));
    }
  }
  return out;
}

WP<FiniteGround> CoxeterOracle::identify(const CoxeterElt& e, const FiniteGround& g) const {
  if (g.rank() != rank_) throw UsageError("identify: ground rank mismatch");
  const IntVec hr = g.fin().highest_root();
  WP<FiniteGround> x = wp_identity(g);
  for (int i : e.word) {
    WP<FiniteGround> s;
    if (i == 0) {
      s = da_reflection(g, DARoot<FiniteGround>{hr, -1});
    } else {
      IntVec alpha(rank_, 0);
      alpha[i - 1] = 1;
      s = da_reflection(g, DARoot<FiniteGround>{alpha, 0});
    }
    x = wp_mult(g, x, s);
  }
  return x;
}

}  // namespace dabru
