#include "seqdim/equations.hpp"

#include <algorithm>

#include "seqdim/errors.hpp"

namespace seqdim {

DifferenceEquation::DifferenceEquation(std::vector<Sequence> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw DomainError("equation needs at least one coefficient");
}

std::optional<std::size_t> DifferenceEquation::first_nonperiodic() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_purely_periodic()) return k;
  }
  return std::nullopt;
}

std::vector<PeriodicSequence> DifferenceEquation::periodic_coefficients() const {
  std::vector<PeriodicSequence> out;
  out.reserve(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    auto p = coeffs_[k].as_periodic();
    if (!p) throw NonPeriodicCoefficients(k);
    out.push_back(std::move(*p));
  }
  return out;
}

Rational DifferenceEquation::residual(std::int64_t n, std::int64_t lo,
                                      std::span<const Rational> y) const {
  const std::int64_t offset = n - lo;
  if (offset < 0 || offset + static_cast<std::int64_t>(order()) >=
                        static_cast<std::int64_t>(y.size())) {
    throw DomainError("residual index outside the window");
  }
  Rational acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& yk = y[static_cast<std::size_t>(offset) + k];
    if (yk.is_zero()) continue;
    acc += coeffs_[k](n) * yk;
  }
  return acc;
}

DifferenceEquation constant_equation(std::vector<Rational> coefficients) {
  std::vector<Sequence> seqs;
  seqs.reserve(coefficients.size());
  for (auto& c : coefficients) seqs.push_back(Sequence::constant(std::move(c)));
  return DifferenceEquation(std::move(seqs));
}

Sequence interlace_sequences(std::span<const Sequence> parts) {
  if (parts.empty()) throw DomainError("interlacing of zero sequences");
  const std::size_t m = parts.size();
  const auto sm = static_cast<std::int64_t>(m);

  std::vector<PeriodicSequence> periodic;
  for (const auto& p : parts) {
    if (auto s = p.as_periodic()) periodic.push_back(std::move(*s));
  }
  auto interlaced_bases = [&](std::span<const PeriodicSequence> bases) {
    const std::size_t l = lcm_period(bases);
    std::vector<Rational> period(m * l);
    for (std::size_t n = 0; n < m * l; ++n) {
      period[n] = bases[n % m](static_cast<std::int64_t>(n / m));
    }
    return PeriodicSequence(std::move(period));
  };
  if (periodic.size() == m) return interlaced_bases(periodic);

  const bool all_finite_exceptions =
      std::all_of(parts.begin(), parts.end(), [](const Sequence& s) {
        return std::holds_alternative<PeriodicSequence>(s.variant()) ||
               std::holds_alternative<PerturbedSequence>(s.variant());
      });
  if (all_finite_exceptions) {
    std::vector<PeriodicSequence> bases;
    PerturbedSequence out{PeriodicSequence::constant(0), {}};
    for (std::size_t j = 0; j < m; ++j) {
      if (const auto* p = std::get_if<PeriodicSequence>(&parts[j].variant())) {
        bases.push_back(*p);
      } else {
        const auto& q = std::get<PerturbedSequence>(parts[j].variant());
        bases.push_back(q.base);
        for (const auto& [n, v] : q.exceptions) {
          out.exceptions.emplace(sm * n + static_cast<std::int64_t>(j), v);
        }
      }
    }
    out.base = interlaced_bases(bases);
    return out;
  }
  return InterlacedSequence{std::vector<Sequence>(parts.begin(), parts.end())};
}

DifferenceEquation interlace(std::span<const DifferenceEquation> parts) {
  if (parts.empty()) throw DomainError("interlacing of zero equations");
  const std::size_t m = parts.size();
  std::size_t r = 0;
  for (const auto& e : parts) r = std::max(r, e.order());

  std::vector<Sequence> coeffs(m * r + 1, Sequence::zero());
  std::vector<Sequence> column;
  for (std::size_t i = 0; i <= r; ++i) {
    column.clear();
    for (const auto& e : parts) {
      column.push_back(i <= e.order() ? e.coefficient(i) : Sequence::zero());
    }
    coeffs[m * i] = interlace_sequences(column);
  }
  return DifferenceEquation(std::move(coeffs));
}

DifferenceEquation interlace(const DifferenceEquation& first,
                             const DifferenceEquation& second) {
  const DifferenceEquation parts[] = {first, second};
  return interlace(std::span<const DifferenceEquation>(parts));
}

PerturbedSequence window_indicator(std::size_t d) {
  PerturbedSequence w{PeriodicSequence::constant(1), {}};
  for (std::size_t n = 0; n < d; ++n) {
    w.exceptions.emplace(static_cast<std::int64_t>(n), 0);
  }
  return w;
}

DifferenceEquation free_window_equation(std::size_t d) {
  return DifferenceEquation({Sequence(window_indicator(d))});
}

DifferenceEquation free_half_line_equation() {
  return DifferenceEquation({Sequence(StepSequence{1, 0})});
}

DifferenceEquation zero_solution_equation(std::size_t r) {
  if (r == 0) throw DomainError("zero_solution_equation needs order r >= 1");
  std::vector<Sequence> coeffs(r + 1, Sequence::zero());
  coeffs[0] = PerturbedSequence{PeriodicSequence::constant(0), {{0, 1}}};
  coeffs[r] = Sequence::constant(1);
  return DifferenceEquation(std::move(coeffs));
}

DifferenceEquation prescribed_dimension_equation(std::size_t r, Dimension d) {
  Sequence trailing = d.is_finite() ? Sequence(window_indicator(d.value()))
                                    : Sequence(StepSequence{1, 0});
  if (r == 0) return DifferenceEquation({trailing});
  // a_r is supported at the single index -r-1, where both y(-r-1) and
  // y(-1) lie in the region already forced to zero by a_0.
  std::vector<Sequence> coeffs(r + 1, Sequence::zero());
  coeffs[0] = std::move(trailing);
  coeffs[r] = PerturbedSequence{PeriodicSequence::constant(0),
                                {{-static_cast<std::int64_t>(r) - 1, 1}}};
  return DifferenceEquation(std::move(coeffs));
}

DifferenceEquation binomial_equation(std::size_t a) {
  std::vector<Rational> coeffs;
  coeffs.reserve(a + 1);
  for (std::size_t k = 0; k <= a; ++k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), a, k);
    if ((a - k) % 2 == 1) c = -c;
    coeffs.emplace_back(mpq_class(c));
  }
  return constant_equation(std::move(coeffs));
}

DifferenceEquation signal_equation(const OracleSequence& v) {
  return DifferenceEquation(
      {Sequence(PrefixIndicator(v, PrefixTest::AllZero, true, -1)),
       Sequence::constant(1)});
}

DifferenceEquation finite_dichotomy_equation(std::size_t a, std::size_t b,
                                             const OracleSequence& v) {
  if (b <= a) throw DomainError("finite dichotomy needs b > a");
  std::vector<DifferenceEquation> parts;
  if (a > 0) parts.push_back(binomial_equation(a));
  for (std::size_t k = a; k < b; ++k) parts.push_back(signal_equation(v));
  if (parts.size() == 1) return parts.front();
  return interlace(parts);
}

DifferenceEquation infinite_dichotomy_equation(std::size_t b,
                                               const OracleSequence& v) {
  const DifferenceEquation indicator(
      {Sequence(PrefixIndicator(v, PrefixTest::AllNonzero, false, 1))});
  return interlace(indicator, binomial_equation(b));
}

DifferenceEquation rotate(const DifferenceEquation& e, std::int64_t shift) {
  std::vector<Sequence> coeffs;
  for (const auto& p : e.periodic_coefficients()) coeffs.emplace_back(p.rotated(shift));
  return DifferenceEquation(std::move(coeffs));
}

}  // namespace seqdim
