#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dabru/oracle.hpp"
#include "dabru/parse.hpp"
#include "dabru/sampling.hpp"

using json = nlohmann::json;
using namespace dabru;

namespace {

int thread_count() {
  if (const char* env = std::getenv("DABRU_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc > 8 ? 8 : hc) : 1;
}

// Runs fn(i) for i in [0, n), fanning out over DABRU_THREADS workers; the
// per-instance results are collected in index order so reports are
// scheduling-independent.
std::vector<json> run_instances(int n, const std::function<json(int)>& fn) {
  std::vector<json> records(n);
  const int workers = std::min(thread_count(), n > 0 ? n : 1);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) records[i] = fn(i);
    return records;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n) return;
        records[i] = fn(i);
      }
    });
  for (auto& th : pool) th.join();
  return records;
}

struct Tally {
  int pass = 0, fail = 0, inconclusive = 0;

  void add(const std::string& status) {
    if (status == "pass") ++pass;
    else if (status == "fail") ++fail;
    else ++inconclusive;
  }
  int exit_code() const {
    if (fail > 0) return 1;
    if (inconclusive > 0) return 3;
    return 0;
  }
};

class Report {
 public:
  explicit Report(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ConfigError("cannot open output path: " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
  void record(const json& j) { out() << j.dump() << "\n"; }
  int finish(Tally t, const json& extra = json::object()) {
    json s = {{"summary", true},
              {"pass", t.pass},
              {"fail", t.fail},
              {"inconclusive", t.inconclusive}};
    for (auto& [k, v] : extra.items()) s[k] = v;
    record(s);
    return t.exit_code();
  }

 private:
  std::ofstream file_;
};

int emit(Report& rep, std::vector<json> records) {
  Tally t;
  for (auto& r : records) {
    t.add(r.value("status", "pass"));
    rep.record(r);
  }
  return rep.finish(t);
}

std::string chain_json(const AffineGround& g, const Chain<AffineGround>& ch,
                       json& out) {
  json elems = json::array(), steps = json::array();
  for (const auto& e : ch.elements) elems.push_back(format_element(g, e));
  for (const auto& s : ch.steps) steps.push_back(format_root_rn(da_to_rn(g, s)));
  out["elements"] = elems;
  out["steps"] = steps;
  out["method"] = ch.method;
  return ch.method;
}

// One sampled up-edge instance of the main length-difference theorem,
// together with the internal-consistency identities it rides on.
json length_diff_instance(const AffineGround& g, std::uint64_t seed, int i) {
  SplitRng rng(seed, static_cast<std::uint64_t>(i));
  const auto [x, c] = sample_up_edge(g, rng);
  const WP<AffineGround> y = wp_mult(g, x, da_reflection(g, c));
  const auto ipp = inv_pp(g, x, c);
  const int diff = ell(g, y) - ell(g, x);
  const bool main_ok = diff == static_cast<int>(ipp.size()) && !ipp.empty();
  const bool closed_ok = ell(g, x) == ell_closed_form(g, x) && ell(g, y) == ell_closed_form(g, y);
  const bool lex_ok = ell_eps(g, x) < ell_eps(g, y);
  // interval membership vs direct action over a small grid around the edge
  bool interval_ok = true;
  for (const auto& theta : g.positive_roots_within(2)) {
    for (int m = -3; m <= 3; ++m) {
      const DARoot<AffineGround> r{theta, m};
      const bool direct = da_act(g, wp_inverse(g, x), r).sign < 0;
      if (inv_member(g, x, r) != direct) {
        interval_ok = false;
        break;
      }
    }
    if (!interval_ok) break;
  }
  json rec = {{"instance", i},
              {"check", "length-diff:invpp-count"},
              {"x", format_element(g, x)},
              {"root", format_root_rn(da_to_rn(g, c))},
              {"ell_x", ell(g, x)},
              {"ell_xs", ell(g, y)},
              {"invpp", ipp.size()},
              {"status", main_ok && closed_ok && lex_ok && interval_ok ? "pass" : "fail"}};
  if (!closed_ok) rec["detail"] = "closed-form length disagrees";
  if (!lex_ok) rec["detail"] = "lexicographic length not increasing";
  if (!interval_ok) rec["detail"] = "interval membership disagrees with action";
  return rec;
}

json phipsi_instance(const AffineGround& g, std::uint64_t seed, int i) {
  SplitRng rng(seed, static_cast<std::uint64_t>(i));
  const auto [x, c] = sample_up_edge(g, rng);
  const Window<AffineGround> s1 = build_window(g, x, c);
  const Window<AffineGround> s2 =
      build_window(g, x, c, g.positive_roots_within(2));
  const bool ok = decomposition_check(g, x, c, s1) && decomposition_check(g, x, c, s2);
  return json{{"instance", i},
              {"check", "phipsi:decomposition"},
              {"x", format_element(g, x)},
              {"root", format_root_rn(da_to_rn(g, c))},
              {"window", s1.size()},
              {"window2", s2.size()},
              {"status", ok ? "pass" : "fail"}};
}

json covers_instance(const AffineGround& g, std::uint64_t seed, int i, int budgetR,
                     int budgetN) {
  SplitRng rng(seed, static_cast<std::uint64_t>(i));
  const auto [x, c] = sample_up_edge(g, rng);
  const WP<AffineGround> y = wp_mult(g, x, da_reflection(g, c));
  const int diff = ell(g, y) - ell(g, x);
  json rec = {{"instance", i},
              {"x", format_element(g, x)},
              {"root", format_root_rn(da_to_rn(g, c))},
              {"ell_diff", diff}};
  if (diff >= 2) {
    rec["check"] = "covers:shorten-chain";
    const Chain<AffineGround> ch = shorten_chain(g, x, c);
    rec["status"] = verify_chain(g, ch) ? "pass" : "fail";
    chain_json(g, ch, rec);
  } else {
    rec["check"] = "covers:interval";
    const auto interval = brute_interval(g, x, y, budgetR, budgetN);
    rec["budgetR"] = budgetR;
    rec["budgetN"] = budgetN;
    rec["interval"] = interval.size();
    rec["status"] = interval.size() == 2 ? "pass" : "fail";
  }
  return rec;
}

json deodhar_instance(const AffineGround& g, std::uint64_t seed, int i, int budgetR,
                      int budgetN) {
  SplitRng rng(seed, static_cast<std::uint64_t>(i));
  // build a certified triple x <= y <= z by stacking up-edges
  const auto [x, c0] = sample_up_edge(g, rng);
  WP<AffineGround> y = x, z = x;
  for (int k = 0; k < 2 && ell(g, z) - ell(g, x) < 4; ++k) {
    for (int t = 0; t < 200; ++t) {
      const DARoot<AffineGround> c = sample_da_root(g, rng);
      const auto e = edge(g, z, c);
      if (!e || e->direction != EdgeDir::Up) continue;
      const WP<AffineGround> nz = wp_mult(g, z, da_reflection(g, c));
      if (ell(g, nz) - ell(g, x) > 4) continue;
      z = nz;
      if (k == 0) y = z;
      break;
    }
  }
  const DeodharResult res = deodhar_count(g, x, y, z, budgetR, budgetN);
  json rec = {{"instance", i},
              {"check", "deodhar:windowed-count"},
              {"x", format_element(g, x)},
              {"y", format_element(g, y)},
              {"z", format_element(g, z)},
              {"count", res.count},
              {"required", res.required},
              {"budgetR", budgetR},
              {"budgetN", budgetN},
              {"status", res.confirmed ? "pass" : "inconclusive"}};
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic engine for the double-affine Bruhat order"};
  app.require_subcommand(1);

  std::string ground = "A1", xs, ys, roots, output, mode;
  int samples = 100;
  std::uint64_t seed = 1;
  int budgetR = 3, budgetN = 4, maxlen = 8, maxlen_leq = 6;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--ground", ground, "ground label (A1, A2, D4, ...)");
    cmd->add_option("--output", output, "report path (default stdout)");
  };

  CLI::App* c_ell = app.add_subcommand("ell", "length of an element");
  add_common(c_ell);
  c_ell->add_option("--x", xs)->required();

  CLI::App* c_edge = app.add_subcommand("edge", "edge direction at (x, root)");
  add_common(c_edge);
  c_edge->add_option("--x", xs)->required();
  c_edge->add_option("--root", roots)->required();

  CLI::App* c_invpp = app.add_subcommand("invpp", "enumerate Inv^{++}");
  add_common(c_invpp);
  c_invpp->add_option("--x", xs)->required();
  c_invpp->add_option("--root", roots)->required();

  CLI::App* c_cover = app.add_subcommand("cover", "cover test for an up-edge");
  add_common(c_cover);
  c_cover->add_option("--x", xs)->required();
  c_cover->add_option("--root", roots)->required();

  CLI::App* c_chain = app.add_subcommand("chain", "3-step chain for a non-cover");
  add_common(c_chain);
  c_chain->add_option("--x", xs)->required();
  c_chain->add_option("--root", roots)->required();

  CLI::App* c_leq = app.add_subcommand("leq", "budgeted order comparison");
  add_common(c_leq);
  c_leq->add_option("--x", xs)->required();
  c_leq->add_option("--y", ys)->required();
  c_leq->add_option("--budget-r", budgetR);
  c_leq->add_option("--budget-n", budgetN);

  CLI::App* c_verify = app.add_subcommand("verify", "seeded verification campaigns");
  add_common(c_verify);
  c_verify
      ->add_option("mode", mode,
                   "length-diff | phipsi | height | rotation | single-affine | covers")
      ->required();
  c_verify->add_option("--samples", samples);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--budget-r", budgetR);
  c_verify->add_option("--budget-n", budgetN);
  c_verify->add_option("--max-len", maxlen);
  c_verify->add_option("--max-len-leq", maxlen_leq);

  CLI::App* c_deo = app.add_subcommand("deodhar", "windowed Deodhar counts");
  add_common(c_deo);
  c_deo->add_option("--samples", samples);
  c_deo->add_option("--seed", seed);
  c_deo->add_option("--budget-r", budgetR);
  c_deo->add_option("--budget-n", budgetN);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    Report rep(output);
    const AffineGround g = AffineGround::from_label(ground);

    if (c_ell->parsed()) {
      const auto x = parse_element(g, xs);
      const EpsLength le = ell_eps(g, x);
      rep.record({{"check", "ell"},
                  {"x", format_element(g, x)},
                  {"ell", le.base + le.eps},
                  {"base", le.base},
                  {"eps", le.eps}});
      return 0;
    }
    if (c_edge->parsed()) {
      const auto x = parse_element(g, xs);
      const auto c = parse_root(g, roots);
      const auto e = edge(g, x, c);
      rep.record({{"check", "edge"},
                  {"x", format_element(g, x)},
                  {"root", roots},
                  {"direction",
                   !e ? "none" : (e->direction == EdgeDir::Up ? "up" : "down")}});
      return 0;
    }
    if (c_invpp->parsed()) {
      const auto x = parse_element(g, xs);
      const auto c = parse_root(g, roots);
      const auto ipp = inv_pp(g, x, c);
      json list = json::array();
      for (const auto& r : ipp) list.push_back(format_root_rn(da_to_rn(g, r)));
      rep.record({{"check", "invpp"},
                  {"x", format_element(g, x)},
                  {"root", roots},
                  {"count", ipp.size()},
                  {"elements", list}});
      return 0;
    }
    if (c_cover->parsed()) {
      const auto x = parse_element(g, xs);
      const auto c = parse_root(g, roots);
      const bool cov = is_cover(g, x, c);
      rep.record({{"check", "cover"},
                  {"x", format_element(g, x)},
                  {"root", roots},
                  {"cover", cov}});
      return 0;
    }
    if (c_chain->parsed()) {
      const auto x = parse_element(g, xs);
      const auto c = parse_root(g, roots);
      const Chain<AffineGround> ch = shorten_chain(g, x, c);
      json rec = {{"check", "chain"}, {"x", format_element(g, x)}, {"root", roots}};
      chain_json(g, ch, rec);
      rec["status"] = verify_chain(g, ch) ? "pass" : "fail";
      rep.record(rec);
      return rec["status"] == "pass" ? 0 : 1;
    }
    if (c_leq->parsed()) {
      const auto x = parse_element(g, xs);
      const auto y = parse_element(g, ys);
      const auto res = leq(g, x, y, budgetR, budgetN);
      json rec = {{"check", "leq"},
                  {"x", format_element(g, x)},
                  {"y", format_element(g, y)},
                  {"budgetR", budgetR},
                  {"budgetN", budgetN}};
      if (res.verdict == LeqVerdict::Yes) {
        rec["verdict"] = "yes";
        json elems = json::array();
        for (const auto& e : res.chain.elements) elems.push_back(format_element(g, e));
        rec["certificate"] = elems;
      } else {
        rec["verdict"] =
            res.verdict == LeqVerdict::No ? "not-found-within-budget" : "inconclusive";
      }
      rep.record(rec);
      return res.verdict == LeqVerdict::Inconclusive ? 3 : 0;
    }
    if (c_deo->parsed()) {
      return emit(rep, run_instances(samples, [&](int i) {
                    return deodhar_instance(g, seed, i, budgetR, budgetN);
                  }));
    }

    // verify campaigns
    if (mode == "length-diff")
      return emit(rep, run_instances(samples, [&](int i) {
                    return length_diff_instance(g, seed, i);
                  }));
    if (mode == "phipsi")
      return emit(rep, run_instances(samples,
                                     [&](int i) { return phipsi_instance(g, seed, i); }));
    if (mode == "covers")
      return emit(rep, run_instances(samples, [&](int i) {
                    return covers_instance(g, seed, i, budgetR, budgetN);
                  }));
    if (mode == "height") {
      Tally t;
      const auto roots_in = g.positive_roots_within(budgetR);
      for (size_t i = 0; i < roots_in.size(); ++i) {
        const auto& beta = roots_in[i];
        const bool ok =
            height_identity_check(g, beta, height_window(g, beta)) &&
            height_identity_check(
                g, beta, height_window(g, beta, g.positive_roots_within(1)));
        json rec = {{"instance", i},
                    {"check", "height:2ht-window-sum"},
                    {"root", g.root_key(beta)},
                    {"status", ok ? "pass" : "fail"}};
        t.add(rec["status"].get<std::string>());
        rep.record(rec);
      }
      return rep.finish(t);
    }
    if (mode == "rotation") {
      Tally t;
      int bad = 0, total = 0;
      const auto pos = g.fin().positive_roots();
      for (const auto& b : pos)
        for (int r = -4; r <= 4; ++r)
          for (int n = -4; n <= 4; ++n) {
            ++total;
            const DARootRN c{b, r, n};
            bool ok = true;
            if (!(r == 0 && n == 0) && sigma_rn(-r, -n) != -sigma_rn(r, n)) ok = false;
            const DARoot<AffineGround> d = rn_to_da(g, c);
            if (!(da_to_rn(g, d) == c)) ok = false;
            // rotation law against the engine: |s_{b[r,n]}|(b[s,m])
            for (int s = -2; s <= 2 && ok; ++s)
              for (int m = -2; m <= 2 && ok; ++m) {
                const auto img =
                    da_act(g, da_reflection(g, d), rn_to_da(g, DARootRN{b, s, m}));
                if (!(da_to_rn(g, img.root) == rn_rotate(c, DARootRN{b, s, m})))
                  ok = false;
              }
            if (!ok) ++bad;
          }
      json rec = {{"check", "rotation:grid"},
                  {"grid", total},
                  {"failures", bad},
                  {"status", bad == 0 ? "pass" : "fail"}};
      t.add(rec["status"].get<std::string>());
      rep.record(rec);
      return rep.finish(t);
    }
    if (mode == "single-affine") {
      Tally t;
      const CoxeterOracle orc(ground);
      const FiniteGround fg = FiniteGround::from_label(ground);
      int checked = 0;
      for (const auto& e : orc.elements_up_to(maxlen)) {
        const auto x = orc.identify(e, fg);
        if (orc.cox_length(e) != ell(fg, x)) {
          rep.record({{"check", "single-affine:length"},
                      {"word", e.word},
                      {"status", "fail"}});
          t.add("fail");
        }
        ++checked;
      }
      const auto elems = orc.elements_up_to(maxlen_leq);
      for (const auto& a : elems)
        for (const auto& b : elems) {
          const bool lhs = orc.cox_leq(a, b);
          const auto res = leq(fg, orc.identify(a, fg), orc.identify(b, fg), 0,
                               maxlen_leq + 2);
          if (lhs != (res.verdict == LeqVerdict::Yes)) {
            rep.record({{"check", "single-affine:leq"},
                        {"a", a.word},
                        {"b", b.word},
                        {"status", "fail"}});
            t.add("fail");
          }
          ++checked;
        }
      if (t.fail == 0) {
        rep.record({{"check", "single-affine"},
                    {"checked", checked},
                    {"status", "pass"}});
        t.add("pass");
      }
      return rep.finish(t);
    }
    throw ConfigError("unknown verify mode: " + mode);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
