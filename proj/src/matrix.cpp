#include "flipcount/matrix.hpp"

#include <stdexcept>

#include "flipcount/errors.hpp"

namespace flipcount {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
  if (n_ != other.n_) throw InvariantViolation("matrix size mismatch");
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int k = 0; k < n_; ++k) {
      const Int& left = at(i, k);
      if (left == 0) continue;
      for (int j = 0; j < n_; ++j) {
        const Int& right = other.at(k, j);
        if (right != 0) out.at(i, j) += left * right;
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::pow(long long e) const {
  if (e < 0) throw InvariantViolation("negative matrix power");
  IntMatrix result = identity(n_);
  IntMatrix base = *this;
  while (e > 0) {
    if (e & 1) result = result.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return result;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

Int IntMatrix::entry_sum() const {
  Int t = 0;
  for (const Int& x : a_) t += x;
  return t;
}

std::vector<Int> IntMatrix::diagonal() const {
  std::vector<Int> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = at(i, i);
  return d;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw InvariantViolation("vector size mismatch");
  }
  std::vector<Int> out(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const Int& m = at(i, j);
      if (m != 0 && v[j] != 0) out[i] += m * v[j];
    }
  }
  return out;
}

std::vector<Int> IntMatrix::apply_left(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != n_) {
    throw InvariantViolation("vector size mismatch");
  }
  std::vector<Int> out(n_);
  for (int i = 0; i < n_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      const Int& m = at(i, j);
      if (m != 0) out[j] += v[i] * m;
    }
  }
  return out;
}

Int IntMatrix::max_abs_entry() const {
  Int best = 0;
  for (const Int& x : a_) {
    Int ax = abs(x);
    if (ax > best) best = ax;
  }
  return best;
}

bool IntMatrix::is_zero_one() const {
  for (const Int& x : a_) {
    if (x != 0 && x != 1) return false;
  }
  return true;
}

Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.size() != y.size()) throw InvariantViolation("vector size mismatch");
  Int t = 0;
  for (size_t i = 0; i < x.size(); ++i) t += x[i] * y[i];
  return t;
}

}  // namespace flipcount
