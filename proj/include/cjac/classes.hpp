#pragma once
#include "cjac/invariant.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace cjac {

// (n,m)-invariant subset of Z, one n-generator per residue mod n
class Theta {
 public:
  Theta() = default;
  Theta(int n, int m, std::vector<long> gens) : n_(n), m_(m), g_(size_t(n)) {
    if (long(gens.size()) != n) throw std::invalid_argument("Theta: need n generators");
    for (long v : gens) g_[size_t(fmod_pos(v, n))] = v;
    std::vector<bool> seen(size_t(n), false);
    for (long v : gens) seen[size_t(fmod_pos(v, n))] = true;
    for (bool b : seen)
      if (!b) throw std::invalid_argument("Theta: generators must cover every residue mod n");
    for (int r = 0; r < n; ++r)
      if (g_[size_t(fmod_pos(r + m, n))] > g_[size_t(r)] + m) throw SubsetError("Theta: not m-invariant at residue", r);
  }
  // Z>=lo minus a finite set
  static Theta from_missing(int n, int m, long lo, const std::vector<long>& missing) {
    std::set<long> ms(missing.begin(), missing.end());
    std::vector<long> g;
    for (int r = 0; r < n; ++r) {
      long v = lo + fmod_pos(r - lo, n);
      while (ms.count(v)) v += n;
      g.push_back(v);
    }
    Theta t(n, m, g);
    for (long x : ms)
      if (t.contains(x)) throw SubsetError("Theta::from_missing: removed set not closed", x);
    return t;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<long>& gens() const { return g_; }  // indexed by residue mod n
  long gen(long x) const { return g_[size_t(fmod_pos(x, n_))]; }
  bool contains(long x) const { return x >= gen(x); }
  long min() const { return *std::min_element(g_.begin(), g_.end()); }
  Theta shifted(long c) const {
    std::vector<long> g(g_);
    for (auto& v : g) v += c;
    return Theta(n_, m_, g);
  }
  Theta normalized() const { return shifted(-min()); }

  std::vector<long> m_cogenerators() const {
    std::vector<long> out;
    for (long v : g_)
      for (long b = gen(v + m_) - m_; b < v; b += n_) out.push_back(b);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<long> skeleton() const {
    std::vector<long> s(g_);
    auto c = m_cogenerators();
    s.insert(s.end(), c.begin(), c.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }
  bool subset_of(const Theta& o) const {
    for (int r = 0; r < n_; ++r)
      if (g_[size_t(r)] < o.g_[size_t(r)]) return false;
    return true;
  }
  friend bool operator==(const Theta& a, const Theta& b) { return a.n_ == b.n_ && a.m_ == b.m_ && a.g_ == b.g_; }

 private:
  int n_ = 1, m_ = 1;
  std::vector<long> g_{0};
};

// the component is d*theta0 + shift + residue, shift a multiple of d
struct Component {
  Theta theta0;
  long shift = 0;
  int residue = 0;
};

struct ClassDecomposition {
  Params params;
  std::vector<Component> comps;
  long level(size_t k) const { return comps[k].shift / params.d; }
  Theta theta(size_t k) const { return comps[k].theta0.shifted(level(k)); }
};

inline ClassDecomposition decompose(const Subset& D) {
  const auto& p = D.params();
  ClassDecomposition dec{p, {}};
  for (int r = 0; r < p.d; ++r) {
    std::vector<long> tg;
    for (int k = 0; k < p.n; ++k) tg.push_back((D.gen(r + long(p.d) * k) - r) / p.d);
    Theta th(p.n, p.m, tg);
    long c = th.min();
    dec.comps.push_back({th.shifted(-c), c * p.d, r});
  }
  return dec;
}

inline Subset reconstruct(const ClassDecomposition& dec) {
  const auto& p = dec.params;
  const long N = p.N();
  if (long(dec.comps.size()) != p.d) throw std::invalid_argument("reconstruct: need one component per residue mod d");
  std::vector<long> g(size_t(N), -1);
  for (size_t k = 0; k < dec.comps.size(); ++k) {
    const auto& c = dec.comps[k];
    for (long y : c.theta0.gens()) {
      long v = long(p.d) * y + c.shift + c.residue;
      long r = fmod_pos(v, N);
      if (g[r] >= 0) throw std::invalid_argument("reconstruct: two components share a residue");
      g[r] = v;
    }
  }
  return Subset::from_generators(p, g);
}

inline bool skeletons_intersect(const Theta& a, long level_a, const Theta& b, long level_b) {
  auto sa = a.skeleton(), sb = b.skeleton();
  for (auto& x : sa) x += level_a;
  for (auto& x : sb) x += level_b;
  std::vector<long> out;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return !out.empty();
}

enum class Containment { i_in_j, j_in_i };

// for disjoint skeletons exactly one of a ⊂ b+n+m, b ⊂ a+n+m holds
inline Containment containment_direction(const Theta& a, const Theta& b) {
  if (skeletons_intersect(a, 0, b, 0)) throw std::invalid_argument("containment_direction: skeletons intersect");
  const long nm = a.n() + a.m();
  bool ab = a.subset_of(b.shifted(nm)), ba = b.subset_of(a.shifted(nm));
  if (ab == ba) throw std::logic_error("containment_direction: containment is not a dichotomy here");
  return ab ? Containment::i_in_j : Containment::j_in_i;
}

namespace detail {
// differences s_j - s_i over the skeletons: positions where p_i - p_j puts the pair on a wall
inline std::vector<long> walls(const std::vector<long>& si, const std::vector<long>& sj) {
  std::vector<long> w;
  for (long a : si)
    for (long b : sj) w.push_back(b - a);
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}
}  // namespace detail

struct WallError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Least point of the closure of the region containing dec (positions shift/d + residue/d),
// with component 0 pinned at level 0 and every level >= 0.
inline ClassDecomposition minimal_point(const ClassDecomposition& dec) {
  const size_t L = dec.comps.size();
  const long d = dec.params.d;
  std::vector<std::vector<long>> S(L);
  for (size_t k = 0; k < L; ++k) S[k] = dec.comps[k].theta0.skeleton();
  // p_a >= p_b + c
  struct Con {
    size_t a, b;
    long c;
  };
  std::vector<Con> cons;
  for (size_t i = 0; i < L; ++i)
    for (size_t j = 0; j < L; ++j) {
      if (i == j) continue;
      // d*(p_i - p_j), compared against walls scaled by d
      long v = (dec.comps[i].shift + dec.comps[i].residue) - (dec.comps[j].shift + dec.comps[j].residue);
      auto W = detail::walls(S[i], S[j]);
      // W is integral, v/d is not unless on a wall
      for (long w : W)
        if (w * d == v) throw WallError("minimal_point: components " + std::to_string(i) + "," + std::to_string(j) + " lie on a wall");
      long lo_idx = -1, hi_idx = -1;
      for (size_t t = 0; t < W.size(); ++t) {
        if (W[t] * d < v) lo_idx = long(t);
        if (W[t] * d > v && hi_idx < 0) hi_idx = long(t);
      }
      if (lo_idx >= 0) cons.push_back({i, j, W[size_t(lo_idx)]});
      if (hi_idx >= 0) cons.push_back({j, i, -W[size_t(hi_idx)]});
    }
  for (size_t k = 1; k < L; ++k) cons.push_back({k, 0, 0});
  std::vector<long> mu(L, 0);
  for (size_t round = 0;; ++round) {
    bool changed = false;
    for (auto& c : cons)
      if (mu[c.a] < mu[c.b] + c.c) {
        mu[c.a] = mu[c.b] + c.c;
        changed = true;
      }
    if (!changed) break;
    if (round > L * cons.size() + 1) throw std::logic_error("minimal_point: constraints do not settle");
  }
  if (mu[0] != 0) throw std::logic_error("minimal_point: root component moved");
  ClassDecomposition out = dec;
  for (size_t k = 0; k < L; ++k) out.comps[k].shift = mu[k] * d;
  return out;
}

// Lower one disconnected block at a time until it touches the rest. Kept for comparison:
// it can stop short of the least point, so normalize does not use it.
inline ClassDecomposition minimal_point_descent(const ClassDecomposition& dec) {
  ClassDecomposition out = dec;
  const size_t L = out.comps.size();
  auto touch = [&](size_t i, size_t j) {
    return skeletons_intersect(out.comps[i].theta0, out.level(i), out.comps[j].theta0, out.level(j));
  };
  for (;;) {
    std::vector<size_t> comp(L);
    for (size_t i = 0; i < L; ++i) comp[i] = i;
    auto find = [&](size_t x) {
      while (comp[x] != x) x = comp[x];
      return x;
    };
    for (size_t i = 0; i < L; ++i)
      for (size_t j = i + 1; j < L; ++j)
        if (touch(i, j)) comp[find(i)] = find(j);
    std::set<size_t> roots;
    for (size_t i = 0; i < L; ++i) roots.insert(find(i));
    if (roots.size() == 1) return out;
    size_t r0 = find(0), other = L;
    for (size_t r : roots)
      if (r != r0) {
        other = r;
        break;
      }
    std::vector<bool> in(L, false);
    for (size_t i = 0; i < L; ++i) in[i] = find(i) == other;
    for (;;) {
      for (size_t i = 0; i < L; ++i)
        if (in[i]) out.comps[i].shift -= out.params.d;
      bool hit = false;
      for (size_t i = 0; i < L && !hit; ++i)
        for (size_t j = 0; j < L && !hit; ++j)
          if (in[i] && !in[j] && touch(i, j)) hit = true;
      if (hit) break;
    }
  }
}

enum class Color { blue, green };

struct Edge {
  size_t from, to;
  Color color;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BicoloredDigraph {
  size_t size = 0;
  std::vector<Edge> edges;

  std::optional<Edge> between(size_t i, size_t j) const {
    for (auto& e : edges)
      if ((e.from == i && e.to == j) || (e.from == j && e.to == i)) return e;
    return std::nullopt;
  }
  bool has(size_t i, size_t j, Color c) const {
    for (auto& e : edges)
      if (e.from == i && e.to == j && e.color == c) return true;
    return false;
  }
  // blue acyclic with 0 its unique source, green transitive
  bool valid() const {
    std::vector<int> indeg(size, 0);
    for (auto& e : edges)
      if (e.color == Color::blue) ++indeg[e.to];
    for (size_t v = 0; v < size; ++v)
      if ((indeg[v] == 0) != (v == 0)) return false;
    std::vector<int> deg = indeg;
    std::vector<size_t> st{0};
    size_t seen = 0;
    while (!st.empty()) {
      size_t v = st.back();
      st.pop_back();
      ++seen;
      for (auto& e : edges)
        if (e.color == Color::blue && e.from == v && --deg[e.to] == 0) st.push_back(e.to);
    }
    if (seen != size) return false;
    for (size_t i = 0; i < size; ++i)
      for (size_t j = 0; j < size; ++j)
        for (size_t k = 0; k < size; ++k)
          if (has(i, j, Color::green) && has(j, k, Color::green) && !has(i, k, Color::green)) return false;
    return true;
  }
};

// blue: skeletons touch at the minimal point, oriented towards the component the region lifts
// more; green: disjoint skeletons, oriented i->j iff theta_i ⊂ theta_j + n + m
inline BicoloredDigraph build_bicolored(const ClassDecomposition& region, const ClassDecomposition& minimal) {
  const size_t L = minimal.comps.size();
  BicoloredDigraph g;
  g.size = L;
  for (size_t i = 0; i < L; ++i)
    for (size_t j = i + 1; j < L; ++j) {
      if (skeletons_intersect(minimal.comps[i].theta0, minimal.level(i), minimal.comps[j].theta0, minimal.level(j))) {
        long dp = (region.comps[j].shift + region.comps[j].residue) - (region.comps[i].shift + region.comps[i].residue);
        long dm = minimal.comps[j].shift - minimal.comps[i].shift;
        g.edges.push_back(dp > dm ? Edge{i, j, Color::blue} : Edge{j, i, Color::blue});
      } else {
        auto c = containment_direction(minimal.theta(i), minimal.theta(j));
        g.edges.push_back(c == Containment::i_in_j ? Edge{i, j, Color::green} : Edge{j, i, Color::green});
      }
    }
  if (!g.valid()) throw std::logic_error("build_bicolored: blue part not rooted-acyclic or green part not transitive");
  return g;
}

// repeatedly take the green-least vertex among blue sources of the unused vertices
inline std::vector<size_t> monotone_path(const BicoloredDigraph& g) {
  std::vector<size_t> path;
  std::vector<bool> used(g.size, false);
  while (path.size() < g.size) {
    std::vector<size_t> src;
    for (size_t v = 0; v < g.size; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (size_t u = 0; u < g.size && ok; ++u)
        if (!used[u] && u != v && g.has(u, v, Color::blue)) ok = false;
      if (ok) src.push_back(v);
    }
    std::optional<size_t> pick;
    for (size_t v : src) {
      bool least = true;
      for (size_t w : src)
        if (w != v && !g.has(v, w, Color::green)) least = false;
      if (least) {
        if (pick) throw std::logic_error("monotone_path: green order among sources is not total");
        pick = v;
      }
    }
    if (!pick) throw std::logic_error("monotone_path: no green-least blue source");
    used[*pick] = true;
    path.push_back(*pick);
  }
  return path;
}

// component order[p] goes to residue p at its minimal-point level
inline Subset reassemble(const ClassDecomposition& minimal, const std::vector<size_t>& order) {
  ClassDecomposition out{minimal.params, {}};
  for (size_t p = 0; p < order.size(); ++p) {
    auto c = minimal.comps[order[p]];
    c.residue = int(p);
    out.comps.push_back(c);
  }
  return reconstruct(out);
}

struct Normalization {
  ClassDecomposition decomposition, minimal;
  BicoloredDigraph graph;
  std::vector<size_t> path;
  Subset result;
};

inline Normalization normalize_steps(const Subset& D) {
  Normalization r;
  r.decomposition = decompose(D);
  r.minimal = minimal_point(r.decomposition);
  r.graph = build_bicolored(r.decomposition, r.minimal);
  r.path = monotone_path(r.graph);
  r.result = reassemble(r.minimal, r.path);
  return r;
}

inline Subset normalize(const Subset& D) { return normalize_steps(D).result; }

}  // namespace cjac
