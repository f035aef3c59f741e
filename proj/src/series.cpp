#include "flipcount/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "flipcount/charpoly.hpp"
#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

int int_degree(const std::vector<Int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] != 0) return i;
  }
  return -1;
}

void int_trim(std::vector<Int>& v) { v.resize(int_degree(v) + 1); }

Int int_content(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

void make_primitive(std::vector<Int>& v) {
  int_trim(v);
  if (v.empty()) return;
  Int g = int_content(v);
  for (const Int& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (Int& x : v) x /= g;
}

// Integer image of a rational polynomial, scaled primitive.
std::vector<Int> primitive_ints(const Poly& p) {
  Int l = 1;
  for (const Rat& r : p.c) {
    Int d = denominator(r);
    l = l / gcd(l, d) * d;
  }
  std::vector<Int> v(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    v[i] = numerator(p.c[i]) * (l / denominator(p.c[i]));
  }
  make_primitive(v);
  return v;
}

// One pseudo-division step followed by content removal, the primitive
// remainder sequence that keeps integer growth polynomial.
std::vector<Int> primitive_prem(std::vector<Int> a, const std::vector<Int>& b) {
  const Int lb = b.back();
  const int db = static_cast<int>(b.size()) - 1;
  while (int_degree(a) >= db) {
    const int da = int_degree(a);
    a.resize(da + 1);
    const Int la = a.back();
    for (Int& x : a) x *= lb;
    const int shift = da - db;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    int_trim(a);
  }
  make_primitive(a);
  return a;
}

Poly poly_from_primitive(const std::vector<Int>& v) {
  Poly p;
  p.c.reserve(v.size());
  for (const Int& x : v) p.c.emplace_back(x);
  return p;
}

}  // namespace

int Poly::degree() const {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] != 0) return i;
  }
  return -1;
}

Rat Poly::at(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return Rat(0);
  return c[i];
}

void Poly::trim() { c.resize(degree() + 1); }

bool Poly::operator==(const Poly& o) const {
  int d = degree();
  if (d != o.degree()) return false;
  for (int i = 0; i <= d; ++i) {
    if (c[i] != o.c[i]) return false;
  }
  return true;
}

Poly poly_from_ints(const std::vector<Int>& v) {
  Poly p;
  p.c.reserve(v.size());
  for (const Int& x : v) p.c.emplace_back(x);
  p.trim();
  return p;
}

Poly poly_one() { return Poly{{Rat(1)}}; }

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
  r.trim();
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) - b.at(static_cast<int>(i));
  r.trim();
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) {
      if (b.c[j] == 0) continue;
      r.c[i + j] += a.c[i] * b.c[j];
    }
  }
  r.trim();
  return r;
}

Poly poly_scale(const Poly& a, const Rat& s) {
  Poly r = a;
  for (Rat& x : r.c) x *= s;
  r.trim();
  return r;
}

Poly poly_shift(const Poly& a, int k) {
  if (a.is_zero()) return Poly{};
  Poly r;
  r.c.assign(a.c.size() + static_cast<size_t>(k), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<size_t>(k)] = a.c[i];
  return r;
}

Poly poly_compose_t2(const Poly& a) {
  Poly r;
  if (a.is_zero()) return r;
  r.c.assign(a.c.size() * 2 - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[2 * i] = a.c[i];
  return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly{};
  if (a.is_zero()) return poly_from_primitive(primitive_ints(b));
  if (b.is_zero()) return poly_from_primitive(primitive_ints(a));
  std::vector<Int> u = primitive_ints(a);
  std::vector<Int> v = primitive_ints(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<Int> r = primitive_prem(std::move(u), v);
    u = std::move(v);
    v = std::move(r);
  }
  return poly_from_primitive(u);
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvariantViolation("polynomial division by zero");
  if (a.is_zero()) return Poly{};
  int da = a.degree();
  int db = b.degree();
  if (da < db) throw InvariantViolation("inexact polynomial division");
  Poly rem = a;
  rem.trim();
  Poly q;
  q.c.assign(static_cast<size_t>(da - db) + 1, Rat(0));
  const Rat lb = b.c[db];
  for (int i = da; i >= db; --i) {
    Rat f = rem.at(i) / lb;
    q.c[static_cast<size_t>(i - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem.c[static_cast<size_t>(i - db + j)] -= f * b.c[static_cast<size_t>(j)];
    }
  }
  if (!rem.is_zero()) throw InvariantViolation("inexact polynomial division");
  q.trim();
  return q;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

std::string poly_to_string(const Poly& p) {
  int d = p.degree();
  if (d < 0) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= d; ++i) {
    const Rat& x = p.c[static_cast<size_t>(i)];
    if (x == 0) continue;
    Rat mag = x < 0 ? Rat(-x) : x;
    if (first) {
      if (x < 0) out << "-";
      first = false;
    } else {
      out << (x < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out << rat_to_string(mag);
    } else {
      if (!unit) out << rat_to_string(mag) << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

RatFunc RatFunc::from(Poly num, Poly den) {
  if (den.is_zero()) throw InvariantViolation("rational function with zero denominator");
  if (num.is_zero()) return RatFunc{Poly{}, poly_one()};
  Poly g = poly_gcd(num, den);
  if (g.degree() > 0 || (g.degree() == 0 && g.c[0] != 1)) {
    num = poly_div_exact(num, g);
    den = poly_div_exact(den, g);
  }
  Rat c0 = den.at(0);
  Rat scale = (c0 != 0) ? c0 : den.c[static_cast<size_t>(den.degree())];
  Rat inv = 1 / scale;
  num = poly_scale(num, inv);
  den = poly_scale(den, inv);
  return RatFunc{std::move(num), std::move(den)};
}

RatFunc RatFunc::zero() { return RatFunc{Poly{}, poly_one()}; }

RatFunc RatFunc::one() { return RatFunc{poly_one(), poly_one()}; }

bool RatFunc::operator==(const RatFunc& o) const {
  return poly_mul(num, o.den) == poly_mul(o.num, den);
}

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
  Poly num = poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den));
  return RatFunc::from(std::move(num), poly_mul(a.den, b.den));
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
  return RatFunc::from(poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RatFunc rf_scale(const RatFunc& a, const Rat& s) {
  if (s == 0) return RatFunc::zero();
  return RatFunc{poly_scale(a.num, s), a.den};
}

std::string ratfunc_to_string(const RatFunc& f) {
  auto wrap = [](const Poly& p) {
    std::string s = poly_to_string(p);
    int terms = 0;
    for (const Rat& x : p.c) {
      if (x != 0) ++terms;
    }
    bool negative = !s.empty() && s[0] == '-';
    bool fraction = s.find('/') != std::string::npos;
    if (terms > 1 || negative || fraction) return "(" + s + ")";
    return s;
  };
  if (f.den.degree() == 0 && f.den.at(0) == 1) return poly_to_string(f.num);
  return wrap(f.num) + "/" + wrap(f.den);
}

Series Series::zero(int order) {
  if (order < 0) throw SchemaError("series order must be non-negative");
  Series s;
  s.order = order;
  s.c.assign(static_cast<size_t>(order) + 1, Rat(0));
  return s;
}

Series series_truncate(const Series& s, int order) {
  if (order > s.order) throw InvariantViolation("cannot extend a truncated series");
  Series r = Series::zero(order);
  for (int i = 0; i <= order; ++i) r.c[static_cast<size_t>(i)] = s.c[static_cast<size_t>(i)];
  return r;
}

Series series_add(const Series& a, const Series& b) {
  int order = std::min(a.order, b.order);
  Series r = Series::zero(order);
  for (int i = 0; i <= order; ++i) {
    r.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)];
  }
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  int order = std::min(a.order, b.order);
  Series r = Series::zero(order);
  for (int i = 0; i <= order; ++i) {
    if (a.c[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order; ++j) {
      r.c[static_cast<size_t>(i + j)] += a.c[static_cast<size_t>(i)] * b.c[static_cast<size_t>(j)];
    }
  }
  return r;
}

Series series_inverse(const Series& s) {
  if (s.c[0] == 0) throw BadConstantTerm("series inverse needs a nonzero constant term");
  Series r = Series::zero(s.order);
  Rat inv0 = 1 / s.c[0];
  r.c[0] = inv0;
  for (int n = 1; n <= s.order; ++n) {
    Rat acc(0);
    for (int j = 1; j <= n; ++j) acc += s.c[static_cast<size_t>(j)] * r.c[static_cast<size_t>(n - j)];
    r.c[static_cast<size_t>(n)] = -inv0 * acc;
  }
  return r;
}

Series series_exp(const Series& s) {
  if (s.c[0] != 0) throw BadConstantTerm("series exp needs a zero constant term");
  Series r = Series::zero(s.order);
  r.c[0] = 1;
  for (int n = 1; n <= s.order; ++n) {
    Rat acc(0);
    for (int j = 1; j <= n; ++j) {
      acc += Rat(j) * s.c[static_cast<size_t>(j)] * r.c[static_cast<size_t>(n - j)];
    }
    r.c[static_cast<size_t>(n)] = acc / n;
  }
  return r;
}

Series series_log(const Series& s) {
  if (s.c[0] != 1) throw BadConstantTerm("series log needs constant term one");
  // log(s)' = s'/s, integrated term by term.
  Series inv = series_inverse(s);
  Series r = Series::zero(s.order);
  for (int n = 1; n <= s.order; ++n) {
    Rat acc(0);
    for (int j = 1; j <= n; ++j) {
      acc += Rat(j) * s.c[static_cast<size_t>(j)] * inv.c[static_cast<size_t>(n - j)];
    }
    r.c[static_cast<size_t>(n)] = acc / n;
  }
  return r;
}

Series series_sqrt(const Series& s) {
  if (s.c[0] != 1) throw BadConstantTerm("series sqrt needs constant term one");
  Series r = Series::zero(s.order);
  r.c[0] = 1;
  for (int n = 1; n <= s.order; ++n) {
    Rat acc = s.c[static_cast<size_t>(n)];
    for (int j = 1; j < n; ++j) acc -= r.c[static_cast<size_t>(j)] * r.c[static_cast<size_t>(n - j)];
    r.c[static_cast<size_t>(n)] = acc / 2;
  }
  return r;
}

Series series_compose_t2(const Series& s) {
  Series r = Series::zero(2 * s.order + 1);
  for (int i = 0; i <= s.order; ++i) r.c[static_cast<size_t>(2 * i)] = s.c[static_cast<size_t>(i)];
  return r;
}

Series expand(const RatFunc& f, int order) {
  if (f.den.at(0) == 0) throw BadConstantTerm("cannot expand at a pole of the denominator");
  Series den = Series::zero(order);
  for (int i = 0; i <= order; ++i) den.c[static_cast<size_t>(i)] = f.den.at(i);
  Series num = Series::zero(order);
  for (int i = 0; i <= order; ++i) num.c[static_cast<size_t>(i)] = f.num.at(i);
  return series_mul(num, series_inverse(den));
}

RatFunc zeta_rational(const std::vector<LevelMatrices>& levels) {
  Poly num = poly_one();
  Poly den = poly_one();
  for (const LevelMatrices& lm : levels) {
    Poly d = poly_from_ints(det_identity_minus_t(lm.A));
    if (lm.level % 2 == 1) {
      den = poly_mul(den, d);
    } else {
      num = poly_mul(num, d);
    }
  }
  return RatFunc::from(std::move(num), std::move(den));
}

namespace {

// Numerator of d(s) * sum_j c_j s^j when the sum is the resolvent series of a
// degree <= n-1 polynomial over d. Coefficients past n-1 must cancel.
Poly resolvent_numerator(const Poly& d, const std::vector<Rat>& coeffs, int n) {
  const int dd = d.degree();
  Poly out;
  out.c.assign(static_cast<size_t>(std::max(n, 1)), Rat(0));
  const int top = static_cast<int>(coeffs.size()) - 1;
  for (int m = 0; m <= top; ++m) {
    Rat acc(0);
    for (int j = 0; j <= std::min(m, dd); ++j) acc += d.at(j) * coeffs[static_cast<size_t>(m - j)];
    if (m <= n - 1) {
      out.c[static_cast<size_t>(m)] = acc;
    } else if (acc != 0) {
      throw InvariantViolation("resolvent numerator has unexpected high-order terms");
    }
  }
  out.trim();
  return out;
}

}  // namespace

RatFunc generating_rational(const std::vector<LevelMatrices>& levels) {
  RatFunc total = RatFunc::zero();
  for (const LevelMatrices& lm : levels) {
    const int n = static_cast<int>(lm.A.size());
    std::vector<Int> x1 = lm.J.diagonal();
    std::vector<Int> x2 = lm.J.mul(lm.A).diagonal();
    std::vector<Int> y3 = lm.A.mul(lm.J).diagonal();

    Poly d = poly_from_ints(det_identity_minus_t(lm.B));
    const int span = d.degree() + n;  // enough terms to verify cancellation

    std::vector<Rat> c1, c2, c3;
    c1.reserve(static_cast<size_t>(span));
    c2.reserve(static_cast<size_t>(span));
    c3.reserve(static_cast<size_t>(span));
    std::vector<Int> w = y3;   // B^j y3
    std::vector<Int> u = x1;   // x1^T B^(j+1) via left application
    for (int j = 0; j < span; ++j) {
      c1.emplace_back(dot(x1, w));
      c3.emplace_back(dot(x2, w));
      w = lm.B.apply(w);
      u = lm.B.apply_left(u);
      c2.emplace_back(dot(u, x1));
    }

    Poly n1 = resolvent_numerator(d, c1, n);
    Poly n2 = resolvent_numerator(d, c2, n);
    Poly n3 = resolvent_numerator(d, c3, n);

    // t * N1(t^2) + (1/2) t^2 * (N2(t^2) + N3(t^2)) over d(t^2).
    Poly odd_part = poly_shift(poly_compose_t2(n1), 1);
    Poly even_part = poly_shift(poly_scale(poly_add(poly_compose_t2(n2), poly_compose_t2(n3)), Rat(1, 2)), 2);
    RatFunc level_term = RatFunc::from(poly_add(odd_part, even_part), poly_compose_t2(d));
    if (lm.level % 2 == 0) level_term = rf_scale(level_term, Rat(-1));
    total = rf_add(total, level_term);
  }
  return total;
}

Series flip_zeta_series(const RatFunc& zeta, const RatFunc& g, int order) {
  if (order < 0) throw SchemaError("series order must be non-negative");
  Series half = expand(zeta, order / 2);
  Series zeta_t2 = series_truncate(series_compose_t2(half), order);
  Series root = series_sqrt(zeta_t2);
  Series expg = series_exp(expand(g, order));
  return series_mul(root, expg);
}

}  // namespace flipcount
