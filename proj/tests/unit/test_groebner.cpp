#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seqdim/groebner.hpp"
#include "seqdim/pencil.hpp"
#include "seqdim/unfolding.hpp"

using namespace seqdim;
using seqdim::testing::random_corpus;

namespace {

MultiPoly poly(std::size_t vars, std::vector<std::pair<std::vector<std::uint32_t>, long>> terms) {
  std::vector<Term> out;
  for (auto& [exps, c] : terms) {
    exps.resize(vars, 0);
    out.push_back({Monomial(exps), Rational(c)});
  }
  return MultiPoly::from_terms(std::move(out));
}

bool in_leading_ideal(const GroebnerBasis& gb, const Monomial& m) {
  return std::any_of(gb.elements.begin(), gb.elements.end(),
                     [&](const MultiPoly& g) { return g.leading_monomial().divides(m); });
}

const std::vector<std::string> kNames2{"t1", "t2", "x0", "x1"};

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("grevlex order") {
    const Monomial a({1, 0, 0});
    const Monomial b({0, 1, 0});
    const Monomial c({0, 0, 2});
    CHECK(compare_grevlex(a, b) > 0);
    CHECK(compare_grevlex(c, a) > 0);                              // degree first
    CHECK(compare_grevlex(Monomial({0, 2, 0}), Monomial({1, 0, 1})) > 0);  // revlex tie-break
    CHECK(compare_grevlex(a, a) == 0);
  }

  TEST_CASE("monomial operations") {
    const Monomial a({2, 0, 1});
    const Monomial b({1, 1, 0});
    CHECK(lcm(a, b) == Monomial({2, 1, 1}));
    CHECK((a * b) == Monomial({3, 1, 1}));
    CHECK(b.divides(Monomial({1, 1, 5})));
    CHECK_FALSE(a.divides(b));
    CHECK(Monomial({1, 0, 0}).coprime(Monomial({0, 3, 1})));
    CHECK(b.quotient_of(Monomial({3, 1, 2})) == Monomial({2, 0, 2}));
    CHECK(a.degree() == 3);
    CHECK(a.degree_from(2) == 1);
  }

  TEST_CASE("degenerate ideal") {
    const std::vector<MultiPoly> gens{poly(3, {{{0, 0, 1}, 2}})};
    const GroebnerBasis gb = buchberger(gens);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == poly(3, {{{0, 0, 1}, 1}}));
  }

  TEST_CASE("textbook basis") {
    // <x^2 - y, x^3 - x> in Q[x, y] grevlex: reduced basis {x^2 - y, xy - x, y^2 - y}.
    const std::vector<MultiPoly> gens{poly(2, {{{2, 0}, 1}, {{0, 1}, -1}}),
                                      poly(2, {{{3, 0}, 1}, {{1, 0}, -1}})};
    const GroebnerBasis gb = buchberger(gens);
    const std::vector<MultiPoly> expected{poly(2, {{{2, 0}, 1}, {{0, 1}, -1}}),
                                          poly(2, {{{1, 1}, 1}, {{1, 0}, -1}}),
                                          poly(2, {{{0, 2}, 1}, {{0, 1}, -1}})};
    REQUIRE(gb.elements.size() == expected.size());
    for (const auto& e : expected) {
      CHECK(std::find(gb.elements.begin(), gb.elements.end(), e) != gb.elements.end());
    }
  }

  TEST_CASE("ideal for the unit shift at H=2") {
    const UnfoldedSystem s = unfold(constant_equation({-1, 1}), 2);
    const GroebnerInstance inst = build_ideal(s);
    CHECK(inst.num_vars == 4);
    CHECK(inst.generators.size() == 1 + 2 + 3);
    CHECK(inst.linear_generators == 2);
    // Rows of (A0 + t1 A1) x: -x0 + x1 and t1 x0 - x1.
    const MultiPoly row0 = poly(4, {{{0, 0, 1, 0}, -1}, {{0, 0, 0, 1}, 1}});
    const MultiPoly row1 = poly(4, {{{1, 0, 1, 0}, 1}, {{0, 0, 0, 1}, -1}});
    CHECK(std::find(inst.generators.begin(), inst.generators.end(), row0) !=
          inst.generators.end());
    CHECK(std::find(inst.generators.begin(), inst.generators.end(), row1) !=
          inst.generators.end());
    CHECK(std::find(inst.generators.begin(), inst.generators.end(),
                    poly(4, {{{1, 1, 0, 0}, 1}, {{0, 0, 0, 0}, -1}})) != inst.generators.end());

    const GroebnerBasis gb = buchberger(inst);
    const MultiPoly x0 = poly(4, {{{0, 0, 1, 0}, 1}});
    const MultiPoly x1 = poly(4, {{{0, 0, 0, 1}, 1}});
    CHECK(normal_form(x0, gb.elements) == normal_form(x1, gb.elements));
    CHECK(dimension_via_module(s) == Dimension::finite(1));
    CHECK(!gb.elements.empty());
  }

  TEST_CASE("zero rows are dropped") {
    const UnfoldedSystem s =
        unfold(DifferenceEquation({Sequence(PeriodicSequence({1, 0}))}), 2);
    const GroebnerInstance inst = build_ideal(s);
    CHECK(inst.linear_generators == 1);
    CHECK(inst.generators.size() == 1 + 1 + 3);
    CHECK(dimension_via_module(s) == Dimension::infinite());
  }

  TEST_CASE("fibonacci") {
    CHECK(dimension_via_module(unfold(constant_equation({-1, -1, 1}))) == Dimension::finite(2));
    CHECK(dimension_via_module(unfold(constant_equation({-1, -1, 1}), 6)) ==
          Dimension::finite(2));
  }

  TEST_CASE("text form") {
    const MultiPoly p = poly(4, {{{1, 1, 0, 0}, 1}, {{0, 0, 0, 0}, -1}});
    CHECK(p.to_string(kNames2) == "t1*t2 - 1");
  }

  TEST_CASE("property: basis invariants on the corpus") {
    for (const auto& e : random_corpus(71, 30, {.max_order = 2, .max_period = 2})) {
      const UnfoldedSystem s = unfold(e);
      const GroebnerInstance inst = build_ideal(s);
      CHECK(inst.generators.size() ==
            1 + inst.linear_generators + s.block_size * (s.block_size + 1) / 2);
      for (const auto& g : inst.generators) CHECK(g.is_homogeneous_from(GroebnerInstance::kFirstX));
      const GroebnerBasis gb = buchberger(inst);
      CHECK(gb.stats.graded);
      for (const auto& g : gb.elements) {
        CHECK(g.is_homogeneous_from(GroebnerInstance::kFirstX));
        CHECK(g.leading_term().coefficient == 1);
      }
      // Each generator lies in the ideal; each S-polynomial reduces to zero.
      for (const auto& g : inst.generators) CHECK(normal_form(g, gb.elements).is_zero());
      for (std::size_t i = 0; i < gb.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.elements.size(); ++j) {
          CHECK(normal_form(s_polynomial(gb.elements[i], gb.elements[j]), gb.elements).is_zero());
        }
      }
      // Divisibility monotonicity in the t1 and t2 directions.
      for (std::size_t i = 0; i < s.block_size; ++i) {
        for (std::uint32_t a = 0; a < 6; ++a) {
          for (std::size_t var : {GroebnerInstance::kForward, GroebnerInstance::kBackward}) {
            std::vector<std::uint32_t> lo(inst.num_vars, 0);
            lo[inst.x(i)] = 1;
            lo[var] = a;
            std::vector<std::uint32_t> hi = lo;
            hi[var] = a + 1;
            if (in_leading_ideal(gb, Monomial(lo))) CHECK(in_leading_ideal(gb, Monomial(hi)));
          }
        }
      }
      // Route equivalence.
      CHECK(count_module_dimension(inst, gb) ==
            dimension_via_determinant(pencil_from_unfolded(s)));
    }
  }
}
