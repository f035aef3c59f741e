#include "flipcount/charpoly.hpp"

#include <cstdint>

#include "flipcount/errors.hpp"

namespace flipcount {

namespace {

using U64 = std::uint64_t;
using U128 = unsigned __int128;

U64 mulmod(U64 a, U64 b, U64 p) { return static_cast<U64>(U128(a) * b % p); }

U64 addmod(U64 a, U64 b, U64 p) {
  U64 s = a + b;
  if (s >= p) s -= p;
  return s;
}

U64 submod(U64 a, U64 b, U64 p) { return a >= b ? a - b : a + p - b; }

U64 powmod(U64 a, U64 e, U64 p) {
  U64 r = 1 % p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(U64 n) {
  if (n < 2) return false;
  for (U64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  U64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (U64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                29ULL, 31ULL, 37ULL}) {
    U64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Largest matching primes below 2^62 so that all modular sums and products
// stay inside 64 and 128 bit arithmetic.
std::vector<U64> primes_covering(const Int& bound) {
  std::vector<U64> primes;
  Int covered = 1;
  U64 candidate = (U64(1) << 62) - 1;
  while (covered <= bound) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    covered *= candidate;
    candidate -= 2;
  }
  return primes;
}

U64 entry_mod(const Int& x, U64 p) {
  Int r = x % Int(p);
  if (r < 0) r += p;
  return r.convert_to<U64>();
}

// Characteristic polynomial modulo p: similarity reduction to Hessenberg
// form, then the leading-block recurrence.
std::vector<U64> charpoly_mod(const IntMatrix& m, U64 p) {
  int n = m.size();
  std::vector<std::vector<U64>> h(n, std::vector<U64>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i][j] = entry_mod(m.at(i, j), p);
  }
  for (int j = 0; j + 2 < n; ++j) {
    int pivot = -1;
    for (int i = j + 1; i < n; ++i) {
      if (h[i][j] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    U64 inv = powmod(h[j + 1][j], p - 2, p);
    for (int i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      U64 f = mulmod(h[i][j], inv, p);
      for (int c = j; c < n; ++c) {
        h[i][c] = submod(h[i][c], mulmod(f, h[j + 1][c], p), p);
      }
      for (int r = 0; r < n; ++r) {
        h[r][j + 1] = addmod(h[r][j + 1], mulmod(f, h[r][i], p), p);
      }
    }
  }
  std::vector<std::vector<U64>> polys;
  polys.push_back({1 % p});
  for (int k = 1; k <= n; ++k) {
    const auto& prev = polys[k - 1];
    std::vector<U64> cur(k + 1, 0);
    for (int d = 0; d < k; ++d) {
      cur[d + 1] = addmod(cur[d + 1], prev[d], p);
      cur[d] = submod(cur[d], mulmod(h[k - 1][k - 1], prev[d], p), p);
    }
    U64 subprod = 1 % p;
    for (int i = 1; i < k; ++i) {
      subprod = mulmod(subprod, h[k - i][k - i - 1], p);
      if (subprod == 0) break;
      U64 coef = mulmod(h[k - 1 - i][k - 1], subprod, p);
      if (coef == 0) continue;
      const auto& low = polys[k - 1 - i];
      for (int d = 0; d <= k - 1 - i; ++d) {
        cur[d] = submod(cur[d], mulmod(coef, low[d], p), p);
      }
    }
    polys.push_back(std::move(cur));
  }
  return polys[n];
}

// Every coefficient of det(t*I - M) is, up to sign, a sum of principal
// minors; each k by k minor is at most (sqrt(k) * max entry)^k in absolute
// value, and there are n choose k of them.
Int coefficient_bound(const IntMatrix& m) {
  int n = m.size();
  Int max_entry = m.max_abs_entry();
  if (max_entry == 0) return 1;
  Int bound = 1;
  Int binom = 1;
  Int entry_pow = 1;
  for (int k = 1; k <= n; ++k) {
    binom = binom * (n - k + 1) / k;
    entry_pow *= max_entry;
    Int sqrt_pow = 1;
    Int kk = k;
    for (int e = 0; e < (k + 1) / 2; ++e) sqrt_pow *= kk;
    Int candidate = binom * sqrt_pow * entry_pow;
    if (candidate > bound) bound = candidate;
  }
  return bound;
}

}  // namespace

std::vector<Int> charpoly(const IntMatrix& m) {
  int n = m.size();
  if (n == 0) return {Int(1)};
  Int bound = coefficient_bound(m);
  std::vector<U64> primes = primes_covering(2 * bound + 1);
  std::vector<std::vector<U64>> residues;
  residues.reserve(primes.size());
  for (U64 p : primes) residues.push_back(charpoly_mod(m, p));

  std::vector<Int> out(n + 1);
  for (int d = 0; d <= n; ++d) {
    Int value = residues[0][d];
    Int modulus = primes[0];
    for (size_t i = 1; i < primes.size(); ++i) {
      U64 p = primes[i];
      U64 have = entry_mod(value, p);
      U64 want = residues[i][d];
      U64 inv = powmod(entry_mod(modulus, p), p - 2, p);
      U64 t = mulmod(submod(want, have, p), inv, p);
      value += modulus * Int(t);
      modulus *= p;
    }
    if (value * 2 > modulus) value -= modulus;
    out[d] = value;
  }
  if (out[n] != 1) throw InvariantViolation("characteristic polynomial not monic");
  return out;
}

std::vector<Int> det_identity_minus_t(const IntMatrix& m) {
  std::vector<Int> c = charpoly(m);
  std::vector<Int> d(c.rbegin(), c.rend());
  while (d.size() > 1 && d.back() == 0) d.pop_back();
  return d;
}

std::vector<Int> charpoly_reference(const IntMatrix& m) {
  int n = m.size();
  if (n == 0) return {Int(1)};
  auto mat_mul = [n](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    std::vector<Rat> out(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const Rat& left = x[static_cast<size_t>(i) * n + k];
        if (left == 0) continue;
        for (int j = 0; j < n; ++j) {
          out[static_cast<size_t>(i) * n + j] +=
              left * y[static_cast<size_t>(k) * n + j];
        }
      }
    }
    return out;
  };
  std::vector<Rat> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<size_t>(i) * n + j] = Rat(m.at(i, j));
    }
  }
  std::vector<Rat> coef(n + 1);
  coef[n] = 1;
  std::vector<Rat> work = a;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) work = mat_mul(a, work);
    Rat tr = 0;
    for (int i = 0; i < n; ++i) tr += work[static_cast<size_t>(i) * n + i];
    coef[n - k] = -tr / k;
    for (int i = 0; i < n; ++i) {
      work[static_cast<size_t>(i) * n + i] += coef[n - k];
    }
  }
  std::vector<Int> out(n + 1);
  for (int d = 0; d <= n; ++d) {
    if (denominator(coef[d]) != 1) {
      throw InvariantViolation("non-integer characteristic coefficient");
    }
    out[d] = numerator(coef[d]);
  }
  return out;
}

}  // namespace flipcount
