#include "seqdim/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "seqdim/errors.hpp"

namespace seqdim {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t v, std::uint32_t power) {
  Monomial m(num_vars);
  m.exps_.at(v) = power;
  m.degree_ = power;
  return m;
}

std::uint32_t Monomial::degree_from(std::size_t first) const {
  std::uint32_t d = 0;
  for (std::size_t v = first; v < exps_.size(); ++v) d += exps_[v];
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] > other.exps_[v]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t v = 0; v < exps_.size(); ++v) {
    if (exps_[v] != 0 && other.exps_[v] != 0) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(other.num_vars());
  for (std::size_t v = 0; v < exps_.size(); ++v) q.exps_[v] = other.exps_[v] - exps_[v];
  q.degree_ = other.degree_ - degree_;
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  for (std::size_t v = 0; v < a.exps_.size(); ++v) out.exps_[v] = a.exps_[v] + b.exps_[v];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.num_vars());
  std::uint32_t d = 0;
  for (std::size_t v = 0; v < a.exps_.size(); ++v) {
    out.exps_[v] = std::max(a.exps_[v], b.exps_[v]);
    d += out.exps_[v];
  }
  out.degree_ = d;
  return out;
}

int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t v = a.num_vars(); v-- > 0;) {
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? -1 : 1;
  }
  return 0;
}

namespace {

struct Descending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare_grevlex(a, b) > 0;
  }
};

using Accumulator = std::map<Monomial, Rational, Descending>;

void add_scaled(Accumulator& acc, const MultiPoly& p, const Rational& c,
                const Monomial* shift) {
  for (const auto& t : p.terms()) {
    Monomial m = shift ? t.monomial * *shift : t.monomial;
    auto [it, inserted] = acc.try_emplace(std::move(m), 0);
    it->second += c * t.coefficient;
    if (it->second.is_zero()) acc.erase(it);
  }
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly* const> basis) {
  Accumulator work;
  add_scaled(work, f, 1, nullptr);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto top = work.begin();
    const MultiPoly* divisor = nullptr;
    for (const MultiPoly* g : basis) {
      if (g->leading_monomial().divides(top->first)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back({top->first, top->second});
      work.erase(top);
      continue;
    }
    const Monomial shift = divisor->leading_monomial().quotient_of(top->first);
    const Rational c = -(top->second / divisor->leading_term().coefficient);
    add_scaled(work, *divisor, c, &shift);
  }
  return MultiPoly::from_terms(std::move(remainder));
}

}  // namespace

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return compare_grevlex(a.monomial, b.monomial) > 0;
  });
  MultiPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient += t.coefficient;
      if (out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_term().coefficient,
                Monomial(leading_monomial().num_vars()));
}

MultiPoly MultiPoly::scaled(const Rational& c, const Monomial& m) const {
  MultiPoly out;
  if (c.is_zero()) return out;
  out.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves a monomial order.
  for (const auto& t : terms_) out.terms_.push_back({t.monomial * m, t.coefficient * c});
  return out;
}

bool MultiPoly::is_homogeneous_from(std::size_t first) const {
  if (terms_.empty()) return true;
  const std::uint32_t d = terms_.front().monomial.degree_from(first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree_from(first) == d;
  });
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  std::vector<Term> terms = a.terms_;
  for (const auto& t : b.terms_) terms.push_back({t.monomial, -t.coefficient});
  return MultiPoly::from_terms(std::move(terms));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  std::vector<Term> terms;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      terms.push_back({x.monomial * y.monomial, x.coefficient * y.coefficient});
    }
  }
  return MultiPoly::from_terms(std::move(terms));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coefficient.sign() < 0;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    const Rational mag = negative ? -t.coefficient : t.coefficient;
    const bool constant = t.monomial.degree() == 0;
    if (constant || mag != Rational(1)) os << mag << (constant ? "" : "*");
    bool first_var = true;
    for (std::size_t v = 0; v < t.monomial.num_vars(); ++v) {
      const auto e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (!first_var) os << '*';
      os << (v < names.size() ? names[v] : "v" + std::to_string(v));
      if (e > 1) os << '^' << e;
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const MultiPoly a = f.scaled(Rational(1) / f.leading_term().coefficient,
                               f.leading_monomial().quotient_of(l));
  const MultiPoly b = g.scaled(Rational(1) / g.leading_term().coefficient,
                               g.leading_monomial().quotient_of(l));
  return a - b;
}

MultiPoly normal_form(const MultiPoly& f, std::span<const MultiPoly> basis) {
  std::vector<const MultiPoly*> ptrs;
  for (const auto& g : basis) {
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return reduce(f, ptrs);
}

namespace {

struct Pair {
  std::size_t first;
  std::size_t second;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(std::optional<std::size_t> graded_from) : graded_from_(graded_from) {}

  GroebnerBasis run(std::span<const MultiPoly> generators) {
    for (const auto& f : generators) {
      if (f.is_zero()) continue;
      check(f);
      MultiPoly h = reduce(f, active_pointers());
      check(h);
      if (!h.is_zero()) add(h.monic());
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(),
                                 [](const Pair& a, const Pair& b) {
                                   return compare_grevlex(a.lcm, b.lcm) < 0;
                                 });
      const Pair p = std::move(*it);
      *it = std::move(pairs_.back());
      pairs_.pop_back();

      ++stats_.pairs_reduced;
      const MultiPoly s = s_polynomial(polys_[p.first], polys_[p.second]);
      check(s);
      MultiPoly h = reduce(s, active_pointers());
      check(h);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
      } else {
        add(h.monic());
      }
    }
    return finish();
  }

 private:
  void check(const MultiPoly& p) {
    if (graded_from_ && !p.is_homogeneous_from(*graded_from_)) stats_.graded = false;
  }

  std::vector<const MultiPoly*> active_pointers() const {
    std::vector<const MultiPoly*> out;
    out.reserve(active_.size());
    for (std::size_t i : active_) out.push_back(&polys_[i]);
    return out;
  }

  // Gebauer-Moeller update for a new basis element.
  void add(MultiPoly h) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    const Monomial& lh = polys_[hi].leading_monomial();

    std::vector<Pair> candidates;
    for (std::size_t g : active_) {
      candidates.push_back({g, hi, lcm(polys_[g].leading_monomial(), lh)});
    }
    // Chain criterion among the new pairs; coprime pairs survive this
    // round so they can still eliminate others.
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool redundant = false;
      if (!polys_[p.first].leading_monomial().coprime(lh)) {
        for (std::size_t o = c + 1; o < candidates.size() && !redundant; ++o) {
          redundant = candidates[o].lcm.divides(p.lcm);
        }
        for (std::size_t o = 0; o < kept.size() && !redundant; ++o) {
          redundant = kept[o].lcm.divides(p.lcm);
        }
      }
      if (redundant) {
        ++stats_.pairs_pruned;
      } else {
        kept.push_back(p);
      }
    }
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (polys_[p.first].leading_monomial().coprime(lh)) {
        ++stats_.pairs_pruned;
      } else {
        fresh.push_back(std::move(p));
      }
    }
    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      const bool removable =
          lh.divides(p.lcm) &&
          !(lcm(polys_[p.first].leading_monomial(), lh) == p.lcm) &&
          !(lcm(polys_[p.second].leading_monomial(), lh) == p.lcm);
      if (removable) {
        ++stats_.pairs_pruned;
      } else {
        old.push_back(std::move(p));
      }
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    std::vector<std::size_t> next;
    for (std::size_t g : active_) {
      if (!lh.divides(polys_[g].leading_monomial())) next.push_back(g);
    }
    next.push_back(hi);
    active_ = std::move(next);
  }

  GroebnerBasis finish() {
    std::vector<MultiPoly> basis;
    for (std::size_t i : active_) basis.push_back(polys_[i]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const MultiPoly*> others;
      for (std::size_t o = 0; o < basis.size(); ++o) {
        if (o != k) others.push_back(&basis[o]);
      }
      basis[k] = reduce(basis[k], others).monic();
    }
    std::sort(basis.begin(), basis.end(), [](const MultiPoly& a, const MultiPoly& b) {
      return compare_grevlex(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return {std::move(basis), stats_};
  }

  std::optional<std::size_t> graded_from_;
  std::vector<MultiPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(std::span<const MultiPoly> generators,
                         std::optional<std::size_t> graded_from) {
  return Buchberger(graded_from).run(generators);
}

GroebnerInstance build_ideal(const UnfoldedSystem& sys) {
  GroebnerInstance inst;
  inst.block_size = sys.block_size;
  inst.num_vars = GroebnerInstance::kFirstX + sys.block_size;
  const std::size_t n = inst.num_vars;
  const Monomial t1 = Monomial::variable(n, GroebnerInstance::kForward);

  const Monomial relation =
      t1 * Monomial::variable(n, GroebnerInstance::kBackward);
  inst.generators.push_back(
      MultiPoly::from_terms({{relation, 1}, {Monomial(n), -1}}));

  for (std::size_t i = 0; i < sys.block_size; ++i) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < sys.block_size; ++j) {
      const Monomial xj = Monomial::variable(n, inst.x(j));
      terms.push_back({xj, sys.same_block(i, j)});
      terms.push_back({t1 * xj, sys.next_block(i, j)});
    }
    MultiPoly row = MultiPoly::from_terms(std::move(terms));
    if (row.is_zero()) continue;
    inst.generators.push_back(std::move(row));
    ++inst.linear_generators;
  }

  for (std::size_t i = 0; i < sys.block_size; ++i) {
    for (std::size_t j = i; j < sys.block_size; ++j) {
      inst.generators.push_back(MultiPoly::from_terms(
          {{Monomial::variable(n, inst.x(i)) * Monomial::variable(n, inst.x(j)), 1}}));
    }
  }
  return inst;
}

GroebnerBasis buchberger(const GroebnerInstance& instance) {
  return buchberger(instance.generators, GroebnerInstance::kFirstX);
}

Dimension count_module_dimension(const GroebnerInstance& instance,
                                 const GroebnerBasis& basis) {
  const std::size_t n = instance.num_vars;
  std::uint32_t max_forward = 0;
  std::uint32_t max_backward = 0;
  for (const auto& g : basis.elements) {
    max_forward = std::max(max_forward, g.leading_monomial().exponent(GroebnerInstance::kForward));
    max_backward =
        std::max(max_backward, g.leading_monomial().exponent(GroebnerInstance::kBackward));
  }
  auto in_leading_ideal = [&](const Monomial& m) {
    return std::any_of(basis.elements.begin(), basis.elements.end(),
                       [&](const MultiPoly& g) { return g.leading_monomial().divides(m); });
  };
  // Smallest power p >= start with t^p x_i in the leading-term ideal; the
  // ideal is closed under multiplication, so p bounds the standard run.
  auto first_power = [&](std::size_t i, std::size_t var, std::uint32_t start,
                         std::uint32_t limit) -> std::optional<std::uint32_t> {
    const Monomial xi = Monomial::variable(n, instance.x(i));
    for (std::uint32_t p = start; p <= std::max(limit, start); ++p) {
      if (in_leading_ideal(xi * Monomial::variable(n, var, p))) return p;
    }
    return std::nullopt;
  };

  std::size_t total = 0;
  for (std::size_t i = 0; i < instance.block_size; ++i) {
    const auto k = first_power(i, GroebnerInstance::kForward, 0, max_forward);
    const auto m = first_power(i, GroebnerInstance::kBackward, 1, max_backward);
    if (!k || !m) return Dimension::infinite();
    total += *k + *m - 1;
  }
  return Dimension::finite(total);
}

Dimension dimension_via_module(const UnfoldedSystem& sys) {
  const GroebnerInstance inst = build_ideal(sys);
  return count_module_dimension(inst, buchberger(inst));
}

}  // namespace seqdim
