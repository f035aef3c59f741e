#ifndef FLIPCOUNT_BITSET_HPP
#define FLIPCOUNT_BITSET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace flipcount {

// Fixed-width bit set with deterministic ordering.  operator< compares the
// ascending sequences of set positions lexicographically, so equal-size sets
// sort the way sorted index tuples do.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  void clear();

  bool any() const;
  bool none() const { return !any(); }
  int count() const;

  // -1 when exhausted.
  int first() const { return next(-1); }
  int next(int i) const;
  std::vector<int> bits() const;

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  bool intersects(const Bitset& o) const;

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }
  bool operator<(const Bitset& o) const;

  size_t hash() const;

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

// Square boolean relation on {0..n-1}; rows are bit sets of successors.
class BoolRel {
 public:
  BoolRel() = default;
  explicit BoolRel(int n) : n_(n), rows_(n, Bitset(n)) {}

  static BoolRel identity(int n);

  int size() const { return n_; }
  bool at(int i, int j) const { return rows_[i].test(j); }
  void set(int i, int j) { rows_[i].set(j); }
  const Bitset& row(int i) const { return rows_[i]; }

  BoolRel compose(const BoolRel& o) const;  // this followed by o
  BoolRel transpose() const;
  bool is_idempotent() const { return compose(*this) == *this; }
  bool is_zero() const;

  Bitset image(const Bitset& s) const;     // { j : exists i in s with i->j }
  Bitset preimage(const Bitset& s) const;  // { i : exists j in s with i->j }
  Bitset full_image() const;               // image of the full set
  Bitset full_preimage() const;

  bool operator==(const BoolRel& o) const { return n_ == o.n_ && rows_ == o.rows_; }
  bool operator<(const BoolRel& o) const;
  size_t hash() const;

 private:
  int n_ = 0;
  std::vector<Bitset> rows_;
};

}  // namespace flipcount

#endif
