#include "flipcount/counting.hpp"

#include "flipcount/charpoly.hpp"
#include "flipcount/errors.hpp"

namespace flipcount {

std::pair<long long, long long> reduce_index(long long m, long long n) {
  if (m < 1) throw SchemaError("period must be positive");
  if (m % 2 != 0) return {m, 0};
  return {m, ((n % 2) + 2) % 2};
}

IntMatrix matrix_diag(const IntMatrix& m) {
  IntMatrix out(m.size());
  for (int i = 0; i < m.size(); ++i) out.at(i, i) = m.at(i, i);
  return out;
}

Int entry_sum(const IntMatrix& m) { return m.entry_sum(); }

void require_flip_pair(const IntMatrix& a, const IntMatrix& j) {
  if (a.size() != j.size()) {
    throw FlipIncompatible("matrix sizes differ");
  }
  if (j.mul(j) != IntMatrix::identity(j.size())) {
    throw FlipIncompatible("involution matrix does not square to identity");
  }
  if (j.mul(a) != a.transpose().mul(j)) {
    throw FlipIncompatible("matrices fail J*A = A^T*J");
  }
}

std::vector<Int> power_traces(const IntMatrix& a, long long max_m) {
  std::vector<Int> d = det_identity_minus_t(a);
  std::vector<Int> s(max_m + 1, 0);
  for (long long m = 1; m <= max_m; ++m) {
    Int acc = 0;
    if (m < static_cast<long long>(d.size())) acc = -m * d[m];
    for (long long j = 1; j < m && j < static_cast<long long>(d.size()); ++j) {
      acc -= d[j] * s[m - j];
    }
    s[m] = acc;
  }
  s.erase(s.begin());
  return s;
}

namespace {

std::vector<Int> diagonal_of(const IntMatrix& m) { return m.diagonal(); }

// S[X^diag M^power Y^diag] = x^T M^power y with x, y the diagonals of X, Y.
Int quad_form(const std::vector<Int>& x, const IntMatrix& mid, long long power,
              const std::vector<Int>& y) {
  std::vector<Int> w = y;
  for (long long i = 0; i < power; ++i) w = mid.apply(w);
  return dot(x, w);
}

// One alternating-sum term of the flip count formulas, on any (A, B, J)
// triple; level one uses B = A.
Int flip_count_term(const IntMatrix& a, const IntMatrix& b, const IntMatrix& j,
                    long long m, long long delta) {
  std::vector<Int> dj = diagonal_of(j);
  if (m % 2 == 1) {
    std::vector<Int> daj = diagonal_of(a.mul(j));
    return quad_form(dj, b, (m - 1) / 2, daj);
  }
  if (delta == 0) {
    return quad_form(dj, b, m / 2, dj);
  }
  std::vector<Int> dja = diagonal_of(j.mul(a));
  std::vector<Int> daj = diagonal_of(a.mul(j));
  return quad_form(dja, b, m / 2 - 1, daj);
}

}  // namespace

Int count_thmA(const IntMatrix& a, const IntMatrix& j, long long m) {
  require_flip_pair(a, j);
  if (m < 1) throw SchemaError("period must be positive");
  Int value = power_traces(a, m)[m - 1];
  if (value < 0) {
    throw InvariantViolation("negative periodic point count");
  }
  return value;
}

Int count_thmA(const IntMatrix& a, const IntMatrix& j, long long m,
               long long n) {
  require_flip_pair(a, j);
  auto [mm, delta] = reduce_index(m, n);
  Int value = flip_count_term(a, a, j, mm, delta);
  if (value < 0) {
    throw InvariantViolation("negative flip-fixed point count");
  }
  return value;
}

Int count_thmB(const std::vector<LevelMatrices>& levels, long long m) {
  if (m < 1) throw SchemaError("period must be positive");
  Int total = 0;
  for (const auto& lm : levels) {
    Int term = power_traces(lm.A, m)[m - 1];
    total += (lm.level % 2 == 1) ? term : -term;
  }
  if (total < 0) throw InvariantViolation("negative periodic point count");
  return total;
}

Int count_thmB(const std::vector<LevelMatrices>& levels, long long m,
               long long n) {
  auto [mm, delta] = reduce_index(m, n);
  Int total = 0;
  for (const auto& lm : levels) {
    Int term = flip_count_term(lm.A, lm.B, lm.J, mm, delta);
    total += (lm.level % 2 == 1) ? term : -term;
  }
  if (total < 0) throw InvariantViolation("negative flip-fixed point count");
  return total;
}

CountTable count_table(const std::vector<LevelMatrices>& levels,
                       long long max_m) {
  if (max_m < 1) throw SchemaError("horizon must be positive");
  CountTable table;
  std::vector<std::vector<Int>> traces;
  traces.reserve(levels.size());
  for (const auto& lm : levels) traces.push_back(power_traces(lm.A, max_m));
  for (long long m = 1; m <= max_m; ++m) {
    Int p = 0;
    for (size_t k = 0; k < levels.size(); ++k) {
      Int term = traces[k][m - 1];
      p += (levels[k].level % 2 == 1) ? term : -term;
    }
    if (p < 0) throw InvariantViolation("negative periodic point count");
    table.m.push_back(m);
    table.p.push_back(p);
    table.p0.push_back(count_thmB(levels, m, 0));
    if (m % 2 == 0) {
      table.p1.push_back(count_thmB(levels, m, 1));
      table.provenance.push_back("even-period formulas");
    } else {
      table.p1.push_back(std::nullopt);
      table.provenance.push_back("odd-period formula");
    }
  }
  return table;
}

}  // namespace flipcount
