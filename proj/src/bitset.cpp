#include "flipcount/bitset.hpp"

#include <bit>

namespace flipcount {

void Bitset::clear() {
  for (auto& w : w_) w = 0;
}

bool Bitset::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

int Bitset::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

int Bitset::next(int i) const {
  for (int j = i + 1; j < n_;) {
    uint64_t w = w_[j >> 6] >> (j & 63);
    if (w) return j + std::countr_zero(w);
    j = (j | 63) + 1;
  }
  return -1;
}

std::vector<int> Bitset::bits() const {
  std::vector<int> out;
  for (int i = first(); i >= 0; i = next(i)) out.push_back(i);
  return out;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

bool Bitset::intersects(const Bitset& o) const {
  for (size_t k = 0; k < w_.size(); ++k)
    if (w_[k] & o.w_[k]) return true;
  return false;
}

bool Bitset::operator<(const Bitset& o) const {
  int a = first(), b = o.first();
  while (a >= 0 && b >= 0) {
    if (a != b) return a < b;
    a = next(a);
    b = o.next(b);
  }
  return a < 0 && b >= 0;
}

size_t Bitset::hash() const {
  size_t h = size_t(n_) * 0x9e3779b97f4a7c15ull;
  for (auto w : w_) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

BoolRel BoolRel::identity(int n) {
  BoolRel r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BoolRel BoolRel::compose(const BoolRel& o) const {
  BoolRel out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = rows_[i].first(); j >= 0; j = rows_[i].next(j))
      out.rows_[i] |= o.rows_[j];
  return out;
}

BoolRel BoolRel::transpose() const {
  BoolRel out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = rows_[i].first(); j >= 0; j = rows_[i].next(j)) out.set(j, i);
  return out;
}

bool BoolRel::is_zero() const {
  for (const auto& r : rows_)
    if (r.any()) return false;
  return true;
}

Bitset BoolRel::image(const Bitset& s) const {
  Bitset out(n_);
  for (int i = s.first(); i >= 0; i = s.next(i)) out |= rows_[i];
  return out;
}

Bitset BoolRel::preimage(const Bitset& s) const {
  Bitset out(n_);
  for (int i = 0; i < n_; ++i)
    if (rows_[i].intersects(s)) out.set(i);
  return out;
}

Bitset BoolRel::full_image() const {
  Bitset out(n_);
  for (const auto& r : rows_) out |= r;
  return out;
}

Bitset BoolRel::full_preimage() const {
  Bitset out(n_);
  for (int i = 0; i < n_; ++i)
    if (rows_[i].any()) out.set(i);
  return out;
}

bool BoolRel::operator<(const BoolRel& o) const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] == o.rows_[i]) continue;
    return rows_[i] < o.rows_[i];
  }
  return false;
}

size_t BoolRel::hash() const {
  size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& r : rows_) h = h * 1099511628211ull ^ r.hash();
  return h;
}

}  // namespace flipcount
