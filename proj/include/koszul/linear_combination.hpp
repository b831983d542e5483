#pragma once

#include <map>
#include <utility>

#include "rational.hpp"

namespace koszul {

// Finite sum of keys with coefficients. Zero coefficients are never stored.
template <class Key, class Coeff>
class LinearCombination {
 public:
  using map_type = std::map<Key, Coeff>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& k, const Coeff& c) { add(k, c); }

  void add(const Key& k, const Coeff& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  void add(const LinearCombination& o, const Coeff& scale) {
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }

  template <class S>
  LinearCombination scaled(const S& s) const {
    LinearCombination r;
    for (const auto& [k, c] : terms_) r.add(k, c * s);
    return r;
  }

  Coeff coefficient(const Key& k, const Coeff& zero) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? zero : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

 private:
  map_type terms_;
};

}  // namespace koszul
