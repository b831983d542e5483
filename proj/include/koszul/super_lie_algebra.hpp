#pragma once

#include <string>
#include <vector>

#include "linear_combination.hpp"
#include "rational.hpp"

namespace koszul {

// Vector in a super Lie algebra, in basis coordinates.
using LieVector = LinearCombination<int, Rational>;

struct Violation {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void fail(std::string check, std::string witness) { violations.push_back({std::move(check), std::move(witness)}); }
  void merge(const ValidationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

// Finite-dimensional super Lie algebra over Q with homogeneous basis: indices
// [0, m) are even, [m, m+q) are odd.
class SuperLieAlgebra {
 public:
  SuperLieAlgebra() = default;
  SuperLieAlgebra(std::vector<std::string> even_names, std::vector<std::string> odd_names)
      : names_(std::move(even_names)), m_(names_.size()) {
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    q_ = odd_names.size();
    table_.assign(dim() * dim(), LieVector());
    defined_.assign(dim() * dim(), false);
  }

  std::size_t dim() const { return m_ + q_; }
  std::size_t even_dim() const { return m_; }
  std::size_t odd_dim() const { return q_; }
  int parity(int i) const { return static_cast<std::size_t>(i) < m_ ? 0 : 1; }
  const std::string& name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return static_cast<int>(i);
    return -1;
  }

  // Sets [e_i, e_j]; the partner [e_j, e_i] follows from super antisymmetry
  // unless it is set explicitly as well.
  void set_bracket(int i, int j, const LieVector& v) {
    at(i, j) = v;
    defined_[idx(i, j)] = true;
    if (!defined_[idx(j, i)]) at(j, i) = v.scaled(Rational(-sign(i, j)));
  }

  const LieVector& bracket(int i, int j) const { return table_[idx(i, j)]; }

  LieVector bracket(const LieVector& a, const LieVector& b) const {
    LieVector r;
    for (const auto& [i, ci] : a)
      for (const auto& [j, cj] : b) r.add(bracket(i, j), ci * cj);
    return r;
  }

  // (-1)^{|i||j|}
  int sign(int i, int j) const { return (parity(i) && parity(j)) ? -1 : 1; }

  std::string format(const LieVector& v) const {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : v) {
      Rational a = abs(c);
      std::string t = a == 1 ? name(i) : to_string(a) + "*" + name(i);
      out += first ? (sgn(c) < 0 ? "-" + t : t) : (sgn(c) < 0 ? " - " + t : " + " + t);
      first = false;
    }
    return out;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim() + static_cast<std::size_t>(j); }
  LieVector& at(int i, int j) { return table_[idx(i, j)]; }

  std::vector<std::string> names_;
  std::size_t m_ = 0;
  std::size_t q_ = 0;
  std::vector<LieVector> table_;
  std::vector<bool> defined_;
};

// Parity preservation, super antisymmetry and the super Jacobi identity on all
// basis pairs and triples.
inline ValidationReport validate_sla(const SuperLieAlgebra& g) {
  ValidationReport rep;
  int n = static_cast<int>(g.dim());
  auto e = [](int i) { return LieVector(i, Rational(1)); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = (g.parity(i) + g.parity(j)) % 2;
      for (const auto& [k, c] : g.bracket(i, j))
        if (g.parity(k) != p)
          rep.fail("parity", "[" + g.name(i) + "," + g.name(j) + "] has component " + g.name(k));
      LieVector sym = g.bracket(i, j) + g.bracket(j, i).scaled(Rational(g.sign(i, j)));
      if (!sym.empty())
        rep.fail("antisymmetry", "[" + g.name(i) + "," + g.name(j) + "] + sign*[" + g.name(j) + "," + g.name(i) +
                                     "] = " + g.format(sym));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        LieVector lhs = g.bracket(e(i), g.bracket(e(j), e(k)));
        LieVector rhs = g.bracket(g.bracket(e(i), e(j)), e(k)) +
                        g.bracket(e(j), g.bracket(e(i), e(k))).scaled(Rational(g.sign(i, j)));
        LieVector d = lhs - rhs;
        if (!d.empty())
          rep.fail("jacobi", "(" + g.name(i) + "," + g.name(j) + "," + g.name(k) + "): defect " + g.format(d));
      }
  return rep;
}

}  // namespace koszul
