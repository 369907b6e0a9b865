#include "seqdim/dimension.hpp"

#include <future>

#include "seqdim/errors.hpp"
#include "seqdim/groebner.hpp"
#include "seqdim/pencil.hpp"
#include "seqdim/unfolding.hpp"

namespace seqdim {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Pencil:
      return "pencil";
    case Method::Groebner:
      return "groebner";
    case Method::Both:
      return "both";
  }
  return "pencil";
}

Method parse_method(std::string_view name) {
  if (name == "pencil") return Method::Pencil;
  if (name == "groebner") return Method::Groebner;
  if (name == "both") return Method::Both;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

DimensionReport analyze(const DifferenceEquation& e, Method method,
                        std::optional<std::size_t> block_size) {
  if (auto bad = e.first_nonperiodic()) throw NonPeriodicCoefficients(*bad);
  const UnfoldedSystem sys = block_size ? unfold(e, *block_size) : unfold(e);

  DimensionReport report{Dimension::finite(0), sys.block_size, method};
  switch (method) {
    case Method::Pencil:
      report.dimension = dimension_via_determinant(pencil_from_unfolded(sys));
      break;
    case Method::Groebner:
      report.dimension = dimension_via_module(sys);
      break;
    case Method::Both: {
      auto module_route = std::async(std::launch::async,
                                     [&sys] { return dimension_via_module(sys); });
      const Dimension via_det = dimension_via_determinant(pencil_from_unfolded(sys));
      const Dimension via_module = module_route.get();
      if (!(via_det == via_module)) {
        throw RouteMismatch("determinant route gives " + via_det.to_string() +
                            " but Groebner route gives " + via_module.to_string());
      }
      report.dimension = via_det;
      break;
    }
  }
  return report;
}

}  // namespace seqdim
