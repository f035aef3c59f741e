#ifndef FLIPCOUNT_MATRIX_HPP
#define FLIPCOUNT_MATRIX_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace flipcount {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense square matrix with arbitrary precision integer entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  static IntMatrix identity(int n);

  int size() const { return n_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Int& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j];
  }

  IntMatrix mul(const IntMatrix& other) const;
  IntMatrix pow(long long e) const;
  IntMatrix transpose() const;
  Int trace() const;
  Int entry_sum() const;
  std::vector<Int> diagonal() const;
  std::vector<Int> apply(const std::vector<Int>& v) const;       // M v
  std::vector<Int> apply_left(const std::vector<Int>& v) const;  // v^T M
  Int max_abs_entry() const;
  bool is_zero_one() const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

Int dot(const std::vector<Int>& x, const std::vector<Int>& y);

}  // namespace flipcount

#endif
