#pragma once
#include "cjac/dyck.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cjac {

inline long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

// S_i = ceil(im/n) - ceil((i-1)m/n), i = 1..nd
inline std::vector<long> s_sequence(int n, int m, int d) {
  require_coprime(n, m, "s_sequence");
  std::vector<long> S;
  for (long i = 1; i <= long(n) * d; ++i) S.push_back(ceil_div(i * m, n) - ceil_div((i - 1) * m, n));
  return S;
}

using Partition = std::vector<int>;

// largest first
inline std::vector<Partition> partitions(int N) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(N, N);
  return out;
}

struct Tableau {
  Partition shape;
  std::vector<std::pair<int, int>> cell;  // cell[i] = (row, col) of label i+1, 0-indexed
};

inline std::vector<Tableau> enumerate_syt(int N) {
  if (N < 1) throw std::invalid_argument("enumerate_syt: N must be >= 1");
  std::vector<Tableau> out;
  for (auto& lam : partitions(N)) {
    Tableau T{lam, std::vector<std::pair<int, int>>(size_t(N))};
    std::vector<int> filled(lam.size(), 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == N) {
        out.push_back(T);
        return;
      }
      for (size_t r = 0; r < lam.size(); ++r) {
        int c = filled[r];
        if (c < lam[r] && (r == 0 || filled[r - 1] > c)) {
          ++filled[r];
          T.cell[size_t(k)] = {int(r), c};
          rec(k + 1);
          --filled[r];
        }
      }
    };
    rec(0);
  }
  return out;
}

// Sum over SYT of size nd of
//   prod z_i^S_i / prod_{i>=2} (1 - 1/z_i)(1 - qt z_{i-1}/z_i)
//   * prod_{i<j} (1 - z_i/z_j)(1 - qt z_i/z_j) / ((1 - q z_i/z_j)(1 - t z_i/z_j))
// with z = q^col t^row. Factors 1 - q^0 t^0 vanish identically and are left out.
// nullopt when a remaining denominator vanishes at the point.
inline std::optional<Rational> negut_eval(int n, int m, int d, const Rational& q0, const Rational& t0) {
  const int N = n * d;
  auto S = s_sequence(n, m, d);
  Rational total = 0;
  for (auto& T : enumerate_syt(N)) {
    std::vector<std::pair<long, long>> z(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) z[size_t(i)] = {T.cell[size_t(i)].second, T.cell[size_t(i)].first};
    auto mono = [&](long a, long b) { return rpow(q0, a) * rpow(t0, b); };
    Rational num = 1, den = 1;
    for (int i = 0; i < N; ++i) num *= rpow(mono(z[i].first, z[i].second), S[size_t(i)]);
    auto mul = [&](Rational& acc, long a, long b) {
      if (a == 0 && b == 0) return;
      acc *= 1 - mono(a, b);
    };
    for (int i = 1; i < N; ++i) {
      mul(den, -z[i].first, -z[i].second);
      mul(den, 1 + z[i - 1].first - z[i].first, 1 + z[i - 1].second - z[i].second);
    }
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        long a = z[i].first - z[j].first, b = z[i].second - z[j].second;
        mul(num, a, b);
        mul(num, a + 1, b + 1);
        mul(den, a + 1, b);
        mul(den, a, b + 1);
      }
    if (den == 0) return std::nullopt;
    total += num / den;
  }
  return total;
}

struct IdentityReport {
  int n = 1, m = 1, d = 1;
  std::vector<std::pair<Rational, Rational>> points;
  std::vector<Rational> lhs, rhs;
  bool pass = false;
};

// numerators in [-9,9]\{0}, denominators in [1,9]; resample on poles
inline IdentityReport verify_identity(int n, int m, int d, int trials, std::uint64_t seed) {
  require_coprime(n, m, "verify_identity");
  if (n * d > 8) throw std::invalid_argument("verify_identity: nd must be <= 8");
  IdentityReport rep{n, m, d, {}, {}, {}, true};
  auto C = qt_catalan(n * d, m * d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  auto draw = [&]() {
    int a = 0;
    while (a == 0) a = num(rng);
    return Rational(a, den(rng));
  };
  while (int(rep.points.size()) < trials) {
    Rational q0 = draw(), t0 = draw();
    if (q0 == 1 || t0 == 1) continue;
    auto v = negut_eval(n, m, d, q0, t0);
    if (!v) continue;
    rep.points.push_back({q0, t0});
    rep.lhs.push_back(*v);
    rep.rhs.push_back(qt_eval(C, q0, t0));
    if (rep.lhs.back() != rep.rhs.back()) rep.pass = false;
  }
  return rep;
}

}  // namespace cjac
