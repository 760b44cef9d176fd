#include "dabru/parse.hpp"

#include <cctype>

namespace dabru {

namespace {

// Tiny cursor with whitespace skipping; everything else is exact-match.
struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  void expect(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) != 0)
      throw ParseError("expected '" + tok + "' at position " + std::to_string(pos) +
                       " in: " + s);
    pos += tok.size();
  }
  bool peek(const std::string& tok) {
    skip_ws();
    return s.compare(pos, tok.size(), tok) == 0;
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
      throw ParseError("expected integer at position " + std::to_string(start) +
                       " in: " + s);
    return std::stoi(s.substr(start, pos - start));
  }
};

IntVec int_list(Cursor& c, int expected_len, const std::string& what) {
  IntVec out;
  if (!c.peek("]")) {
    out.push_back(c.integer());
    while (c.peek(",")) {
      c.expect(",");
      out.push_back(c.integer());
    }
  }
  if (static_cast<int>(out.size()) != expected_len)
    throw ParseError(what + ": expected " + std::to_string(expected_len) +
                     " integers, got " + std::to_string(out.size()));
  return out;
}

}  // namespace

WP<AffineGround> parse_element(const AffineGround& g, const std::string& text) {
  Cursor c{text};
  c.expect("pi");
  c.expect("{");
  c.expect("l");
  c.expect("=");
  const int level = c.integer();
  c.expect(",");
  c.expect("nu");
  c.expect("=");
  c.expect("[");
  const IntVec nu = int_list(c, g.rank(), "nu");
  c.expect("]");
  c.expect(",");
  c.expect("k");
  c.expect("=");
  const int central = c.integer();
  c.expect("}");
  c.expect("t");
  c.expect("[");
  const IntVec lam = int_list(c, g.rank(), "t");
  c.expect("]");

  AffWeylElt w{lam, g.fin().identity()};
  if (c.peek("e")) {
    c.expect("e");
  } else {
    for (;;) {
      c.expect("s");
      const int i = c.integer();
      if (i < 0 || i > g.rank())
        throw ParseError("generator index out of range: s" + std::to_string(i));
      w = g.mult(w, g.simple_reflection(i));
      if (!c.peek("*")) break;
      c.expect("*");
    }
  }
  if (!c.done()) throw ParseError("trailing input in element: " + text);
  return WP<AffineGround>{AffCoweight{nu, level, central}, w};
}

DARootRN parse_root_rn(const AffineGround& g, const std::string& text) {
  Cursor c{text};
  c.expect("b");
  c.expect("[");
  const IntVec coords = int_list(c, g.rank(), "root coords");
  c.expect(";");
  c.expect("r");
  c.expect("=");
  const int r = c.integer();
  c.expect(";");
  c.expect("n");
  c.expect("=");
  const int n = c.integer();
  c.expect("]");
  if (!c.done()) throw ParseError("trailing input in root: " + text);
  if (!g.fin().is_root(coords) || !FiniteRootSystem::is_positive_vec(coords))
    throw ParseError("not a positive finite root: " + int_vec_key(coords));
  return DARootRN{coords, r, n};
}

DARoot<AffineGround> parse_root(const AffineGround& g, const std::string& text) {
  return rn_to_da(g, parse_root_rn(g, text));
}

namespace {

std::string join_ints(const IntVec& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

// Reduced word of a finite Weyl element by greedy descents.
std::string finite_word(const FiniteRootSystem& fin, const FiniteWeylElt& u) {
  FiniteWeylElt m = u;
  const FiniteWeylElt id = fin.identity();
  std::vector<int> rev;
  while (!(m == id)) {
    int i = 0;
    for (; i < fin.rank(); ++i) {
      IntVec alpha(fin.rank(), 0);
      alpha[i] = 1;
      if (!FiniteRootSystem::is_positive_vec(fin.act_root(m, alpha))) break;
    }
    if (i == fin.rank()) throw InternalError("finite_word: no descent off identity");
    m = fin.mult(m, fin.simple_reflection(i));
    rev.push_back(i);
  }
  if (rev.empty()) return "e";
  std::string s;
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += "s" + std::to_string(*it + 1);  // grammar indices are 1-based finite
  }
  return s;
}

}  // namespace

std::string format_element(const AffineGround& g, const WP<AffineGround>& x) {
  return "pi{l=" + std::to_string(x.mu.level) + ",nu=[" + join_ints(x.mu.nu) +
         "],k=" + std::to_string(x.mu.central) + "} t[" + join_ints(x.w.lam) + "] " +
         finite_word(g.fin(), x.w.u);
}

std::string format_root_rn(const DARootRN& c) {
  return "b[" + join_ints(c.betaFin) + "; r=" + std::to_string(c.r) +
         "; n=" + std::to_string(c.n) + "]";
}

}  // namespace dabru
