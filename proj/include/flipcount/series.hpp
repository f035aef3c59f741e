#ifndef FLIPCOUNT_SERIES_HPP
#define FLIPCOUNT_SERIES_HPP

#include <string>
#include <vector>

#include "flipcount/matrix.hpp"
#include "flipcount/signed_subsets.hpp"

namespace flipcount {

// Dense polynomial with exact rational coefficients, ascending powers.
struct Poly {
  std::vector<Rat> c;

  int degree() const;  // -1 for the zero polynomial
  Rat at(int i) const;
  bool is_zero() const { return degree() < 0; }
  void trim();

  bool operator==(const Poly& o) const;
};

Poly poly_from_ints(const std::vector<Int>& v);
Poly poly_one();
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Rat& s);
Poly poly_shift(const Poly& a, int k);  // multiply by t^k
Poly poly_compose_t2(const Poly& a);
Poly poly_gcd(const Poly& a, const Poly& b);  // primitive, lowest nonzero coefficient positive
Poly poly_div_exact(const Poly& a, const Poly& b);
std::string poly_to_string(const Poly& p);
std::string rat_to_string(const Rat& r);

// Quotient of polynomials, kept in lowest terms with the denominator's
// constant coefficient scaled to one whenever it is nonzero.
struct RatFunc {
  Poly num;
  Poly den;

  static RatFunc from(Poly num, Poly den);
  static RatFunc zero();
  static RatFunc one();

  bool operator==(const RatFunc& o) const;  // by cross multiplication
};

RatFunc rf_add(const RatFunc& a, const RatFunc& b);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_scale(const RatFunc& a, const Rat& s);
std::string ratfunc_to_string(const RatFunc& f);

// Truncated power series, exact through degree `order`.
struct Series {
  int order = 0;
  std::vector<Rat> c;  // size order + 1

  static Series zero(int order);
  Rat at(int i) const { return c[i]; }
};

Series series_truncate(const Series& s, int order);
Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_inverse(const Series& s);     // needs s(0) != 0
Series series_exp(const Series& s);         // needs s(0) == 0
Series series_log(const Series& s);         // needs s(0) == 1
Series series_sqrt(const Series& s);        // needs s(0) == 1
Series series_compose_t2(const Series& s);  // exact through 2*order + 1
Series expand(const RatFunc& f, int order);

// Alternating product of det(I - t*A_k) over the levels.
RatFunc zeta_rational(const std::vector<LevelMatrices>& levels);

// Closed form of the flip generating function, assembled per level from
// resolvent series against det(I - s*B_k).
RatFunc generating_rational(const std::vector<LevelMatrices>& levels);

// sqrt(zeta(t^2)) * exp(G(t)) as a truncated series.
Series flip_zeta_series(const RatFunc& zeta, const RatFunc& g, int order);

}  // namespace flipcount

#endif
