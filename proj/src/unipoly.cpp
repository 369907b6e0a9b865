#include "seqdim/unipoly.hpp"

#include <sstream>

#include "seqdim/errors.hpp"
#include "seqdim/linalg.hpp"

namespace seqdim {

UniPoly::UniPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly UniPoly::monomial(Rational c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::size_t UniPoly::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return k;
  }
  return 0;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = negative ? -c : c;
    const bool unit = mag == Rational(1);
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) {
        if (mag.is_integer()) {
          os << mag;
        } else {
          os << '(' << mag << ')';
        }
      }
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

UniPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolation size mismatch");
  const std::size_t n = xs.size();
  // Newton divided differences, then Horner-style expansion.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly(std::vector<Rational>{-xs[i], 1}) + UniPoly(dd[i]);
  }
  return result;
}

UniPoly poly_det(const PolyMatrix& m, std::size_t degree_bound) {
  if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  xs.reserve(degree_bound + 1);
  ys.reserve(degree_bound + 1);
  for (std::size_t p = 0; p <= degree_bound; ++p) {
    const Rational x(static_cast<long>(p));
    RatMatrix at(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) at(i, j) = m(i, j)(x);
    }
    xs.push_back(x);
    ys.push_back(determinant(at));
  }
  return interpolate(xs, ys);
}

}  // namespace seqdim
