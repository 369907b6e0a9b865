#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqdim/dimension_value.hpp"
#include "seqdim/rational.hpp"
#include "seqdim/unfolding.hpp"

namespace seqdim {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
 public:
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t num_vars, std::size_t v, std::uint32_t power = 1);

  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::uint32_t exponent(std::size_t v) const { return exps_[v]; }
  std::uint32_t degree() const noexcept { return degree_; }
  /// Sum of exponents of variables first..num_vars-1.
  std::uint32_t degree_from(std::size_t first) const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exps_ == b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic order with variable 0 largest.
/// Negative, zero or positive as a <, ==, > b.
int compare_grevlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Polynomial over Q with terms sorted in decreasing grevlex order and no
/// zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Precondition: !is_zero().
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }

  MultiPoly monic() const;
  MultiPoly scaled(const Rational& c, const Monomial& m) const;

  /// True when every term has the same total degree in variables >= first.
  bool is_homogeneous_from(std::size_t first) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
};

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

/// Full reduction of f modulo `basis` (remainder of multivariate division).
MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis);

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_pruned = 0;
  /// Every S-polynomial and remainder stayed homogeneous in the graded
  /// variables (only tracked when a grading was requested).
  bool graded = true;
};

/// Reduced Groebner basis (monic, sorted by leading monomial).
struct GroebnerBasis {
  std::vector<MultiPoly> elements;
  GroebnerStats stats;
};

/// Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
/// selection strategy. When `graded_from` is set, homogeneity in variables
/// >= graded_from is checked on every intermediate polynomial.
GroebnerBasis buchberger(std::span<const MultiPoly> generators,
                         std::optional<std::size_t> graded_from = std::nullopt);

/// The ideal <t1*t2 - 1, (A0 + t1*A1) x, x_i x_j> in Q[t1, t2, x_0..x_{H-1}],
/// with t2 standing for 1/t. Variable order t1 > t2 > x_0 > ... > x_{H-1}.
struct GroebnerInstance {
  static constexpr std::size_t kForward = 0;
  static constexpr std::size_t kBackward = 1;
  static constexpr std::size_t kFirstX = 2;

  std::size_t block_size = 0;
  std::size_t num_vars = 0;
  std::vector<MultiPoly> generators;
  std::size_t linear_generators = 0;

  std::size_t x(std::size_t i) const { return kFirstX + i; }
};

/// Zero rows of the pencil are dropped.
GroebnerInstance build_ideal(const UnfoldedSystem& sys);

GroebnerBasis buchberger(const GroebnerInstance& instance);

/// Counts standard monomials of x-degree one: for each x_i, the powers
/// t1^k x_i (k >= 0) and t2^m x_i (m >= 1) outside the leading-term ideal.
Dimension count_module_dimension(const GroebnerInstance& instance,
                                 const GroebnerBasis& basis);

Dimension dimension_via_module(const UnfoldedSystem& sys);

}  // namespace seqdim
