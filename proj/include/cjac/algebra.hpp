#pragma once
#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cjac {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rpow(const Rational& x, long e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("rpow: zero to a negative power");
    return rpow(Rational(1) / x, -e);
  }
  Rational r = 1, b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// sparse polynomial in q,t with big integer coefficients
class QTPoly {
 public:
  using Key = std::pair<int, int>;
  using Map = std::map<Key, Int>;

  QTPoly() = default;
  static QTPoly monomial(int i, int j, Int c = 1) {
    QTPoly p;
    p.add(i, j, c);
    return p;
  }

  void add(int i, int j, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find({i, j});
    if (it == terms_.end()) {
      terms_.emplace(Key{i, j}, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Int coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Int(0) : it->second;
  }
  const Map& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  QTPoly swapped() const {
    QTPoly r;
    for (auto& [k, c] : terms_) r.add(k.second, k.first, c);
    return r;
  }

  QTPoly& operator+=(const QTPoly& o) {
    for (auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
  }
  QTPoly& operator-=(const QTPoly& o) {
    for (auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
  }
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    QTPoly r;
    for (auto& [ka, ca] : a.terms_)
      for (auto& [kb, cb] : b.terms_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

class UPoly {
 public:
  using Map = std::map<int, Int>;
  UPoly() = default;
  explicit UPoly(const std::vector<long>& dense) {
    for (size_t i = 0; i < dense.size(); ++i) add(int(i), dense[i]);
  }

  void add(int e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Int coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
  }
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  const Map& terms() const { return terms_; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.terms_ == b.terms_; }

  // 1+t+2t^2, "0" for the zero polynomial
  std::string str(const std::string& var = "t") const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : terms_) {
      Int a = c < 0 ? Int(-c) : c;
      if (!first || c < 0) s += c < 0 ? "-" : "+";
      first = false;
      if (e == 0 || a != 1) s += a.str();
      if (e > 0) s += var;
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

 private:
  Map terms_;
};

inline Rational qt_eval(const QTPoly& p, const Rational& q0, const Rational& t0) {
  Rational r = 0;
  for (auto& [k, c] : p.terms()) r += Rational(c) * rpow(q0, k.first) * rpow(t0, k.second);
  return r;
}

inline UPoly qt_specialize_q1(const QTPoly& p) {
  UPoly u;
  for (auto& [k, c] : p.terms()) u.add(k.second, c);
  return u;
}

// coefficients 0..order; anything above is undefined
class Series {
 public:
  explicit Series(int order) : c_(size_t(order) + 1, Rational(0)) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
  }
  int order() const { return int(c_.size()) - 1; }
  Rational& operator[](int i) { return c_.at(size_t(i)); }
  const Rational& operator[](int i) const { return c_.at(size_t(i)); }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
    return r;
  }
  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i)
      for (int k = 0; k <= i; ++k) r[i] += a[k] * b[i - k];
    return r;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
};

// n e_n = sum_k k s_k e_{n-k}
inline Series series_exp(const Series& s) {
  if (s[0] != 0) throw std::domain_error("series_exp: constant term must be 0");
  Series e(s.order());
  e[0] = 1;
  for (int n = 1; n <= s.order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * s[k] * e[n - k];
    e[n] = acc / n;
  }
  return e;
}

}  // namespace cjac
