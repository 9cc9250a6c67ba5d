#pragma once
#include "cjac/cabled.hpp"
#include "cjac/shuffle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace cjac {

struct Check {
  std::string suite, name;
  bool pass = false;
  std::string detail;
};

// results land in task order whatever the thread count
inline std::vector<Check> run_tasks(const std::vector<std::function<Check()>>& tasks, unsigned threads) {
  std::vector<Check> out(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < tasks.size();) {
      try {
        out[i] = tasks[i]();
      } catch (const std::exception& e) {
        out[i] = {"?", "task " + std::to_string(i), false, std::string("exception: ") + e.what()};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, unsigned(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

namespace detail {
inline std::string tag(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
inline std::string tag(const Params& p, bool with_s = false) {
  std::string s = "(" + std::to_string(p.n) + "," + std::to_string(p.m) + "," + std::to_string(p.d);
  if (with_s) s += "," + std::to_string(p.s);
  return s + ")";
}
}  // namespace detail

// (n,m,d) triples whose bounded enumeration stays at desk scale
inline std::vector<Params> admissible_range(long max_size) {
  std::vector<Params> all = {{1, 1, 2, 1}, {1, 1, 3, 1}, {1, 2, 2, 1}, {1, 2, 3, 1}, {2, 3, 2, 1},
                             {2, 1, 2, 1}, {1, 3, 2, 1}, {3, 2, 2, 1}, {1, 1, 4, 1}, {1, 1, 5, 1},
                             {2, 5, 2, 1}, {2, 3, 3, 1}, {3, 4, 2, 1}};
  std::vector<Params> out;
  for (auto& p : all)
    if (p.N() * p.M() <= max_size) out.push_back(p);
  return out;
}

inline std::vector<Params> cabled_range(long max_size) {
  std::vector<Params> all = {{1, 1, 2, 3}, {1, 2, 2, 3}, {2, 3, 2, 3}, {1, 1, 3, 2}, {1, 2, 3, 2}, {1, 1, 2, 5},
                             {1, 1, 3, 4}, {2, 1, 2, 3}, {1, 3, 2, 3}, {1, 1, 4, 3}, {1, 2, 2, 5}, {1, 1, 3, 5}};
  std::vector<Params> out;
  for (auto& p : all)
    if (p.N() * p.M() <= max_size) out.push_back(p);
  return out;
}

inline std::vector<std::function<Check()>> dyck_tasks(long max_size) {
  std::vector<std::function<Check()>> t;
  for (int a = 1; a <= max_size; ++a)
    for (int b = 1; a * b <= max_size; ++b)
      t.push_back([a, b] {
        auto C = qt_catalan(a, b);
        bool sym = C.swapped() == C, tr = qt_catalan(b, a) == C;
        int g = std::gcd(a, b), dl = delta(a, b);
        auto P = poincare(a / g, b / g, g);
        auto q1 = qt_specialize_q1(C);
        bool spec = true;
        for (int k = 0; k <= dl; ++k) spec = spec && P.coeff(k) == q1.coeff(dl - k);
        UPoly byarea;
        for_each_path(a, b, [&](const DyckPath& D) { byarea.add(dl - area(D), 1); });
        bool cnt = qt_eval(C, 1, 1) == Rational(count_paths(a, b));
        bool ok = sym && tr && spec && byarea == P && cnt;
        return Check{"dyck", "qt_catalan" + detail::tag(a, b), ok,
                     std::string(sym ? "" : "asymmetric ") + (tr ? "" : "transpose ") + (spec ? "" : "q=1 ") + (byarea == P ? "" : "area ") +
                         (cnt ? "" : "count")};
      });
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {2, 3}, {3, 4}})
    t.push_back([n = n, m = m] { return Check{"dyck", "bizley" + detail::tag(n, m), bizley_check(n, m, 4), "d <= 4"}; });
  return t;
}

inline std::vector<std::function<Check()>> admissible_tasks(long max_size) {
  std::vector<std::function<Check()>> t;
  for (auto p : admissible_range(max_size))
    t.push_back([p] {
      auto adm = admissible_subsets(p, 1);
      std::map<long, long> dims, dinvs;
      for (auto& D : adm) ++dims[dim(D)];
      int a = int(p.N()), b = int(p.M()), dl = delta(a, b);
      for_each_path(a, b, [&](const DyckPath& D) { ++dinvs[dl - dinv(D)]; });
      bool ok = Int(long(adm.size())) == count_paths(a, b) && dims == dinvs;
      return Check{"admissible", detail::tag(p), ok, std::to_string(adm.size()) + " admissible"};
    });
  return t;
}

inline std::vector<std::function<Check()>> classes_tasks(long max_size) {
  std::vector<std::function<Check()>> t;
  for (auto p : admissible_range(max_size))
    t.push_back([p] {
      std::map<std::vector<long>, long> fiber_adm;
      std::string bad;
      for_each_bounded(p, default_bound(p), [&](const Subset& D) {
        auto R = normalize(D);
        auto& c = fiber_adm[R.gens()];
        if (is_s_admissible(D, 1)) ++c;
        if (!is_s_admissible(R, 1)) bad = "normalize not admissible";
        if (normalize(R) != R) bad = "not idempotent";
        if (dim(R) != dim(D)) bad = "dim changed";
      });
      for (auto& [k, c] : fiber_adm)
        if (c != 1) bad = "fiber with " + std::to_string(c) + " admissible";
      bool cnt = Int(long(fiber_adm.size())) == count_paths(int(p.N()), int(p.M()));
      if (!cnt) bad += " class count " + std::to_string(fiber_adm.size());
      return Check{"classes", detail::tag(p), bad.empty(), bad.empty() ? std::to_string(fiber_adm.size()) + " classes" : bad};
    });
  return t;
}

inline std::vector<std::function<Check()>> lemma_tasks(long max_size) {
  std::vector<std::function<Check()>> t;
  for (auto p : admissible_range(max_size))
    t.push_back([p] {
      const long N = p.N(), M = p.M(), d = p.d;
      std::map<std::string, long> viol;
      for_each_bounded(p, default_bound(p), [&](const Subset& D) {
        auto G = generator_grid(D);
        const long top = *std::max_element(D.gens().begin(), D.gens().end()) + M + N + d;
        const bool adm = is_s_admissible(D, 1);
        for (int j = 0; j < d; ++j)
          for (int i = 0; i < p.n; ++i) {
            long a = G.a[j][i], a1 = G.a[j][(i + 1) % p.n];
            for (long x = -(a + M); x <= top; ++x)
              if (!D.contains(a + M + x) && (D.contains(a + x) || D.contains(a1 + x))) ++viol["gap propagation"];
          }
        for (long x = 1; x <= top; ++x)
          for (int j = 0; j < d; ++j) {
            bool sus = is_suspicious(D, x, j);
            if (sus != D.component_contained(j + x, j, M + N + x)) ++viol["suspicion vs containment"];
            if (D.component_min(j + x) <= D.component_min(j) && sus) ++viol["minima rule"];
            if (fmod_pos(j + x, d) == 0 && sus) ++viol["last residue rule"];
            if (adm && sus) {
              bool found = false;
              for (int i = 0; i < p.n; ++i) found = found || !D.contains(G.a[j][i] + x - 1);
              if (!found) ++viol["predecessor gap"];
            }
          }
        if (adm)
          for (long a : D.gens())
            if (!D.contains(a + long(p.n) * p.m * p.d + 1)) ++viol["conductor"];
        if (dim(D) != dim_pairs(D)) ++viol["dim formulas"];
      });
      std::string det;
      for (auto& [k, v] : viol) det += k + ":" + std::to_string(v) + " ";
      return Check{"lemmas", detail::tag(p), viol.empty(), viol.empty() ? "0 violations" : det};
    });
  return t;
}

inline std::vector<std::function<Check()>> shuffle_tasks(int trials, std::uint64_t seed) {
  std::vector<std::function<Check()>> t;
  for (auto [n, m, d] : {std::tuple{1, 1, 1}, {2, 3, 1}, {1, 2, 2}, {1, 1, 3}, {2, 3, 2}})
    t.push_back([n = n, m = m, d = d, trials, seed] {
      auto r = verify_identity(n, m, d, trials, seed);
      return Check{"shuffle", "syt_sum" + detail::tag(Params{n, m, d, 1}), r.pass, std::to_string(r.points.size()) + " points"};
    });
  return t;
}

inline std::vector<std::function<Check()>> cabled_tasks(long max_size) {
  std::vector<std::function<Check()>> t;
  for (auto p : cabled_range(max_size))
    t.push_back([p] {
      auto adm = admissible_subsets(p, p.s);
      std::vector<CabledPath> imgs;
      std::string bad;
      for (auto& D : adm) {
        auto cp = to_cabled(D, p.s);
        if (from_cabled(p, cp) != D) bad = "round trip";
        imgs.push_back(cp);
      }
      std::sort(imgs.begin(), imgs.end());
      if (std::adjacent_find(imgs.begin(), imgs.end()) != imgs.end()) bad += " not injective";
      Int cc = cabled_count(p.n, p.m, p.d, p.s);
      if (cc != Int(long(adm.size()))) bad += " count " + std::to_string(adm.size()) + " vs " + cc.str();
      return Check{"cabled", detail::tag(p, true), bad.empty(), bad.empty() ? cc.str() + " s-admissible" : bad};
    });
  struct Fam {
    int n, m;
    Family f;
  };
  for (auto fam : {Fam{2, 3, Family::two_q}, Fam{2, 5, Family::two_q}, Fam{3, 4, Family::three_four}, Fam{3, 5, Family::three_five}})
    for (int s : {1, 3, 5})
      t.push_back([fam, s] {
        Int cc = cabled_count(fam.n, fam.m, 2, s);
        Int c1 = count_paths(fam.n, fam.m);
        Int closed = count_paths(2 * fam.n, 2 * fam.m) + c1 * c1 * (s - 1) / 2;
        Rational chi = piontkowski_chi(fam.f, fam.m, s);
        bool ok = cc == closed && Rational(cc) == chi;
        return Check{"cabled", "d=2 closed form" + detail::tag(fam.n, fam.m) + " s=" + std::to_string(s), ok, cc.str()};
      });
  return t;
}

inline std::vector<std::string> suite_names() { return {"dyck", "admissible", "classes", "lemmas", "shuffle", "cabled"}; }

inline std::vector<Check> run_suite(const std::string& suite, long max_size, int trials, std::uint64_t seed, unsigned threads) {
  std::vector<std::function<Check()>> t;
  auto add = [&](std::vector<std::function<Check()>> more) { t.insert(t.end(), more.begin(), more.end()); };
  bool all = suite == "all";
  if (all || suite == "dyck") add(dyck_tasks(max_size));
  if (all || suite == "admissible") add(admissible_tasks(max_size));
  if (all || suite == "classes") add(classes_tasks(max_size));
  if (all || suite == "lemmas") add(lemma_tasks(max_size));
  if (all || suite == "shuffle") add(shuffle_tasks(trials, seed));
  if (all || suite == "cabled") add(cabled_tasks(max_size));
  if (t.empty()) throw std::invalid_argument("verify: unknown suite " + suite);
  return run_tasks(t, threads);
}

}  // namespace cjac
