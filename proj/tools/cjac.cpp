// command line front end: polynomials, counts, admissible subsets, classes, cabled counts, checks
#include "cjac/io.hpp"
#include "cjac/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace cjac;

namespace {

enum Exit { ok = 0, failed = 1, bad_args = 2 };

struct Opts {
  int n = 1, m = 1, d = 1, s = 1, a = 1, b = 1, q = 3;
  long bound = 0, max_size = 36;
  int trials = 5, dmax = 4;
  std::uint64_t seed = 7;
  std::string format = "plain", out, suite = "all", family = "2q";
  std::vector<long> gens;
  bool cohomological = false, list = false;
};

unsigned thread_count() {
  if (const char* e = std::getenv("CJAC_THREADS")) {
    int v = std::atoi(e);
    if (v >= 1) return unsigned(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string qt_str(const QTPoly& p) {
  if (p.zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [k, c] : p.terms()) {
    if (!first || c < 0) s += c < 0 ? "-" : "+";
    first = false;
    Int a = c < 0 ? Int(-c) : c;
    bool mono = k.first || k.second;
    if (!mono || a != 1) s += a.str();
    if (k.first) s += "q" + (k.first > 1 ? "^" + std::to_string(k.first) : "");
    if (k.second) s += "t" + (k.second > 1 ? "^" + std::to_string(k.second) : "");
  }
  return s;
}

std::string latex_poly(std::string s) {
  std::string r;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      size_t j = i + 1;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      r += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      r += s[i];
    }
  }
  return "$" + r + "$";
}

std::string join(const std::vector<long>& v, const char* sep) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

void check_format(const Opts& o) {
  if (o.format != "plain" && o.format != "json" && o.format != "csv" && o.format != "latex")
    throw std::invalid_argument("unknown format " + o.format);
}

int cmd_poincare(const Opts& o, std::ostream& os) {
  auto P = poincare(o.n, o.m, o.d, o.cohomological);
  if (o.format == "json") {
    os << to_json(P).dump() << "\n";
  } else if (o.format == "csv") {
    os << "exponent,coefficient\n";
    for (auto& [e, c] : P.terms()) os << e << "," << c << "\n";
  } else if (o.format == "latex") {
    os << latex_poly(P.str()) << "\n";
  } else {
    os << P.str() << "\n";
  }
  return ok;
}

int cmd_qt(const Opts& o, std::ostream& os) {
  auto C = qt_catalan(o.a, o.b);
  if (o.format == "json") {
    os << to_json(C).dump() << "\n";
  } else if (o.format == "csv") {
    os << "q,t,c\n";
    for (auto& [k, c] : C.terms()) os << k.first << "," << k.second << "," << c << "\n";
  } else if (o.format == "latex") {
    os << latex_poly(qt_str(C)) << "\n";
  } else {
    os << qt_str(C) << "\n";
  }
  return ok;
}

int cmd_count(const Opts& o, std::ostream& os) {
  Int c = count_paths(o.a, o.b);
  if (o.format == "json")
    os << json{{"a", o.a}, {"b", o.b}, {"count", c.str()}}.dump() << "\n";
  else if (o.format == "csv")
    os << "a,b,count\n" << o.a << "," << o.b << "," << c << "\n";
  else
    os << c << "\n";
  return ok;
}

int cmd_admissible(const Opts& o, std::ostream& os) {
  Params p{o.n, o.m, o.d, o.s};
  p.validate();
  auto adm = admissible_subsets(p, o.s, o.bound);
  if (o.format == "json") {
    json rows = json::array();
    for (auto& D : adm) rows.push_back({{"subset", to_json(D)}, {"dim", dim(D)}});
    os << rows.dump() << "\n";
  } else if (o.format == "csv") {
    os << "gens,gaps,dim\n";
    for (auto& D : adm) os << join(D.gens(), " ") << "," << join(D.gaps(0), " ") << "," << dim(D) << "\n";
  } else if (o.format == "latex") {
    std::map<long, std::vector<std::string>> by;
    for (auto& D : adm) by[dim(D)].push_back("\\{" + join(D.gaps(0), ",") + "\\}");
    os << "\\begin{tabular}{|c|c|l|}\n\\hline\n$\\dim$ & $\\#$ & gaps \\\\\n\\hline\n";
    for (auto& [k, v] : by) {
      os << k << " & " << v.size() << " & $";
      for (size_t i = 0; i < v.size(); ++i) os << (i ? ",\\ " : "") << v[i];
      os << "$ \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
  } else {
    for (auto& D : adm) os << "gens=[" << join(D.gens(), ",") << "] gaps={" << join(D.gaps(0), ",") << "} dim=" << dim(D) << "\n";
  }
  return ok;
}

int cmd_classes(const Opts& o, std::ostream& os) {
  Params p{o.n, o.m, o.d, 1};
  p.validate();
  if (!o.gens.empty()) {
    auto nz = normalize_steps(Subset::from_generators(p, o.gens));
    if (o.format == "json") {
      os << to_json(nz).dump() << "\n";
    } else {
      os << "components:";
      for (auto& c : nz.decomposition.comps) os << " [" << join(c.theta0.gens(), ",") << "]+" << c.shift << "+" << c.residue;
      os << "\nminimal shifts:";
      for (auto& c : nz.minimal.comps) os << " " << c.shift;
      os << "\nedges:";
      for (auto& e : nz.graph.edges) os << " " << e.from << "->" << e.to << (e.color == Color::blue ? "(blue)" : "(green)");
      os << "\npath:";
      for (auto v : nz.path) os << " " << v;
      os << "\nnormalized: gens=[" << join(nz.result.gens(), ",") << "] gaps={" << join(nz.result.gaps(0), ",") << "}\n";
    }
    return ok;
  }
  std::map<std::vector<long>, long> fibers;
  for_each_bounded(p, o.bound > 0 ? o.bound : default_bound(p), [&](const Subset& D) { ++fibers[normalize(D).gens()]; });
  if (o.format == "json") {
    json rows = json::array();
    for (auto& [g, c] : fibers) rows.push_back({{"representative", to_json(Subset::unchecked(p, g))}, {"fiber_size", c}});
    os << json{{"classes", fibers.size()}, {"rows", rows}}.dump() << "\n";
  } else if (o.format == "csv") {
    os << "gens,fiber_size\n";
    for (auto& [g, c] : fibers) os << join(g, " ") << "," << c << "\n";
  } else {
    for (auto& [g, c] : fibers) os << "gens=[" << join(g, ",") << "] fiber=" << c << "\n";
    os << fibers.size() << " classes\n";
  }
  return ok;
}

int cmd_cabled(const Opts& o, std::ostream& os) {
  Params p{o.n, o.m, o.d, o.s};
  p.validate();
  Int c = cabled_count(o.n, o.m, o.d, o.s);
  if (!o.list) {
    if (o.format == "json")
      os << json{{"n", o.n}, {"m", o.m}, {"d", o.d}, {"s", o.s}, {"count", c.str()}}.dump() << "\n";
    else
      os << c << "\n";
    return ok;
  }
  auto adm = admissible_subsets(p, o.s, o.bound);
  json rows = json::array();
  for (auto& D : adm) {
    auto cp = to_cabled(D, o.s);
    if (o.format == "json")
      rows.push_back({{"subset", to_json(D)}, {"cabled", to_json(cp)}});
    else
      os << "gens=[" << join(D.gens(), ",") << "] v=(" << join({cp.pattern.v.begin(), cp.pattern.v.end()}, ",") << ") h=("
         << join({cp.pattern.h.begin(), cp.pattern.h.end()}, ",") << ")\n";
  }
  if (o.format == "json") os << rows.dump() << "\n";
  if (Int(long(adm.size())) != c) {
    std::cerr << "s-admissible count " << adm.size() << " differs from cabled count " << c << "\n";
    return failed;
  }
  return ok;
}

int cmd_piontkowski(const Opts& o, std::ostream& os) {
  struct Row {
    std::string name;
    Family f;
    int n, m;
  };
  std::vector<Row> rows;
  if (o.family == "2q") rows.push_back({"(2," + std::to_string(o.q) + ")", Family::two_q, 2, o.q});
  else if (o.family == "34") rows.push_back({"(3,4)", Family::three_four, 3, 4});
  else if (o.family == "35") rows.push_back({"(3,5)", Family::three_five, 3, 5});
  else if (o.family == "all")
    rows = {{"(2," + std::to_string(o.q) + ")", Family::two_q, 2, o.q}, {"(3,4)", Family::three_four, 3, 4}, {"(3,5)", Family::three_five, 3, 5}};
  else throw std::invalid_argument("unknown family " + o.family);
  bool agree = true;
  if (o.format == "latex") os << "\\begin{tabular}{|c|c|c|}\n\\hline\n$(n,m)$ & $\\chi$ & cabled count \\\\\n\\hline\n";
  json js = json::array();
  for (auto& r : rows) {
    Rational chi = piontkowski_chi(r.f, r.m, o.s);
    Int cc = cabled_count(r.n, r.m, 2, o.s);
    agree = agree && Rational(cc) == chi;
    if (o.format == "latex") os << "$" << r.name << "$ & " << str(chi) << " & " << cc << " \\\\\n";
    else if (o.format == "json") js.push_back({{"family", r.name}, {"s", o.s}, {"chi", str(chi)}, {"cabled_count", cc.str()}});
    else if (o.format == "csv") os << (&r == &rows[0] ? "family,s,chi,cabled_count\n" : "") << r.name << "," << o.s << "," << str(chi) << "," << cc << "\n";
    else os << r.name << " s=" << o.s << ": " << str(chi) << " (cabled count " << cc << ")\n";
  }
  if (o.format == "latex") os << "\\hline\n\\end{tabular}\n";
  if (o.format == "json") os << js.dump() << "\n";
  return agree ? ok : failed;
}

int cmd_bizley(const Opts& o, std::ostream& os) {
  auto e = bizley_series(o.n, o.m, o.dmax);
  json rows = json::array();
  bool good = true;
  for (int d = 1; d <= o.dmax; ++d) {
    Int c = count_paths(o.n * d, o.m * d);
    bool eq = e[d] == Rational(c);
    good = good && eq;
    if (o.format == "json") rows.push_back({{"d", d}, {"series", str(e[d])}, {"count", c.str()}, {"equal", eq}});
    else if (o.format == "csv") os << (d == 1 ? "d,series,count\n" : "") << d << "," << str(e[d]) << "," << c << "\n";
    else os << "d=" << d << " series=" << str(e[d]) << " count=" << c << (eq ? "" : " MISMATCH") << "\n";
  }
  if (o.format == "json") os << rows.dump() << "\n";
  return good ? ok : failed;
}

int cmd_verify(const Opts& o, std::ostream& os, bool single) {
  if (single) {
    auto r = verify_identity(o.n, o.m, o.d, o.trials, o.seed);
    os << to_json(r).dump(2) << "\n";
    return r.pass ? ok : failed;
  }
  auto checks = run_suite(o.suite, o.max_size, o.trials, o.seed, thread_count());
  bool all = true;
  json js = json::array();
  for (auto& c : checks) {
    all = all && c.pass;
    if (o.format == "json") js.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    else os << (c.pass ? "PASS " : "FAIL ") << c.suite << " " << c.name << "  " << c.detail << "\n";
  }
  if (o.format == "json") os << json{{"suite", o.suite}, {"seed", o.seed}, {"checks", js}, {"pass", all}}.dump(2) << "\n";
  else os << (all ? "all checks passed" : "some checks FAILED") << " (" << checks.size() << ")\n";
  return all ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare polynomials, q,t-Catalan numbers and cell counts for compactified Jacobians"};
  app.require_subcommand(1);
  Opts o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json | csv | latex | plain")->check(CLI::IsMember({"json", "csv", "latex", "plain"}));
    c->add_option("--out", o.out, "write output to this file");
    c->add_option("--seed", o.seed, "random seed");
  };
  auto nmd = [&](CLI::App* c, bool with_s) {
    c->add_option("-n", o.n)->required();
    c->add_option("-m", o.m)->required();
    c->add_option("-d", o.d)->required();
    if (with_s) c->add_option("-s", o.s, "second characteristic exponent (default 1)");
  };

  auto* poin = app.add_subcommand("poincare", "Poincare polynomial sum_D t^(delta - dinv)");
  nmd(poin, false);
  poin->add_flag("--cohomological", o.cohomological, "double the exponents");
  common(poin);

  auto* qt = app.add_subcommand("qt-catalan", "C_{a,b}(q,t) = sum q^area t^dinv");
  qt->add_option("-a", o.a)->required();
  qt->add_option("-b", o.b)->required();
  common(qt);

  auto* cnt = app.add_subcommand("count", "number of Dyck paths in an a x b rectangle");
  cnt->add_option("-a", o.a)->required();
  cnt->add_option("-b", o.b)->required();
  common(cnt);

  auto* adm = app.add_subcommand("admissible", "s-admissible invariant subsets with dim");
  nmd(adm, true);
  adm->add_option("--bound", o.bound, "generator bound (default d(nmd+nd+md))");
  common(adm);

  auto* cls = app.add_subcommand("classes", "normalize one subset (--gens) or list all classes");
  nmd(cls, false);
  cls->add_option("--gens", o.gens, "nd-generators by residue")->delimiter(',');
  cls->add_option("--bound", o.bound);
  common(cls);

  auto* cab = app.add_subcommand("cabled-count", "number of cabled Dyck paths");
  nmd(cab, true);
  cab->add_flag("--list", o.list, "map every s-admissible subset to its cabled path");
  cab->add_option("--bound", o.bound);
  common(cab);

  auto* pio = app.add_subcommand("piontkowski", "d=2 Euler characteristic table");
  pio->add_option("--family", o.family, "2q | 34 | 35 | all");
  pio->add_option("-q", o.q, "q for the (2,q) family");
  pio->add_option("-s", o.s)->required();
  common(pio);

  auto* biz = app.add_subcommand("bizley", "exp-series coefficients against path counts");
  biz->add_option("-n", o.n)->required();
  biz->add_option("-m", o.m)->required();
  biz->add_option("--dmax", o.dmax);
  common(biz);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", o.suite, "all | dyck | admissible | classes | lemmas | shuffle | cabled");
  ver->add_option("--max-size", o.max_size, "cap on nd*md");
  ver->add_option("--trials", o.trials);
  auto* vn = ver->add_option("-n", o.n, "with -m -d: one tableau-sum identity report");
  ver->add_option("-m", o.m);
  ver->add_option("-d", o.d);
  common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return bad_args;
  }

  std::ostringstream buf;
  int code = ok;
  try {
    check_format(o);
    if (*poin) code = cmd_poincare(o, buf);
    else if (*qt) code = cmd_qt(o, buf);
    else if (*cnt) code = cmd_count(o, buf);
    else if (*adm) code = cmd_admissible(o, buf);
    else if (*cls) code = cmd_classes(o, buf);
    else if (*cab) code = cmd_cabled(o, buf);
    else if (*pio) code = cmd_piontkowski(o, buf);
    else if (*biz) code = cmd_bizley(o, buf);
    else if (*ver) code = cmd_verify(o, buf, vn->count() > 0);
  } catch (const BoundInstability& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_args;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failed;
  }
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "error: cannot write " << o.out << "\n";
      return bad_args;
    }
    f << buf.str();
  } else {
    std::cout << buf.str();
  }
  return code;
}
