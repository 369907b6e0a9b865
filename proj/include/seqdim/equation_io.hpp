#pragma once

#include <filesystem>
#include <functional>
#include <string>

#include "json.hpp"
#include "seqdim/equations.hpp"

namespace seqdim {

/// Maps the "command" field of an oracle coefficient (possibly empty) to a
/// live sequence. Coefficients naming the same command share one sequence.
using OracleResolver = std::function<OracleSequence(const std::string& command)>;

/// Resolver whose sequences fail on first evaluation. Enough for commands
/// that only inspect structure (the periodicity gate, rewriting files).
OracleResolver unconnected_oracles();

nlohmann::json to_json(const DifferenceEquation& e);
nlohmann::json to_json(const Sequence& s);

/// Throws ParseError on any schema violation.
DifferenceEquation equation_from_json(const nlohmann::json& j,
                                      const OracleResolver& resolver = unconnected_oracles());

DifferenceEquation parse_equation(const std::string& text,
                                  const OracleResolver& resolver = unconnected_oracles());

DifferenceEquation read_equation(const std::filesystem::path& path,
                                 const OracleResolver& resolver = unconnected_oracles());

void write_equation(const DifferenceEquation& e, const std::filesystem::path& path);

}  // namespace seqdim
