#include "seqdim/equation_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "seqdim/errors.hpp"

namespace seqdim {

using nlohmann::json;

namespace {

std::string rational_text(const Rational& r) { return r.to_string(); }

void require_keys(const json& j, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) {
      throw ParseError("missing field '" + std::string(key) + "'");
    }
  }
  for (const auto& [key, _] : j.items()) {
    const bool known =
        std::find(required.begin(), required.end(), key) != required.end() ||
        std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) throw ParseError("unknown field '" + key + "'");
  }
}

Rational rational_field(const json& j) {
  if (!j.is_string()) throw ParseError("rationals must be strings \"p\" or \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

PeriodicSequence period_field(const json& j) {
  if (!j.is_array()) throw ParseError("'period' must be an array");
  if (j.empty()) throw ParseError("empty period");
  std::vector<Rational> values;
  for (const auto& x : j) values.push_back(rational_field(x));
  return PeriodicSequence(std::move(values));
}

std::int64_t index_field(const json& j) {
  if (!j.is_number_integer()) throw ParseError("exception index must be an integer");
  return j.get<std::int64_t>();
}

class Reader {
 public:
  explicit Reader(const OracleResolver& resolver) : resolver_(resolver) {}

  Sequence sequence(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
      throw ParseError("coefficient needs a string 'type'");
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "periodic") {
      require_keys(j, {"type", "period"});
      return period_field(j["period"]);
    }
    if (type == "perturbed") {
      require_keys(j, {"type", "period", "exceptions"});
      PerturbedSequence p{period_field(j["period"]), {}};
      if (!j["exceptions"].is_array()) throw ParseError("'exceptions' must be an array");
      for (const auto& x : j["exceptions"]) {
        require_keys(x, {"n", "value"});
        if (!p.exceptions.emplace(index_field(x["n"]), rational_field(x["value"])).second) {
          throw ParseError("duplicate exception index");
        }
      }
      return p;
    }
    if (type == "step") {
      require_keys(j, {"type", "negative", "nonnegative"});
      return StepSequence{rational_field(j["negative"]), rational_field(j["nonnegative"])};
    }
    if (type == "interlaced") {
      require_keys(j, {"type", "parts"});
      if (!j["parts"].is_array() || j["parts"].empty()) {
        throw ParseError("'parts' must be a nonempty array");
      }
      InterlacedSequence s;
      for (const auto& p : j["parts"]) s.parts.push_back(sequence(p));
      return s;
    }
    if (type == "oracle") {
      require_keys(j, {"type", "rule"}, {"command", "reflected", "scale"});
      std::string command;
      if (j.contains("command") && !j["command"].is_null()) {
        if (!j["command"].is_string()) throw ParseError("'command' must be a string");
        command = j["command"].get<std::string>();
      }
      const OracleSequence source = oracle(command);
      if (!j["rule"].is_string()) throw ParseError("'rule' must be a string");
      const std::string rule = j["rule"].get<std::string>();
      if (rule == "value") {
        if (j.contains("reflected") || j.contains("scale")) {
          throw ParseError("rule 'value' takes no 'reflected' or 'scale'");
        }
        return source;
      }
      PrefixTest test;
      if (rule == "all-zero-prefix") {
        test = PrefixTest::AllZero;
      } else if (rule == "all-nonzero-prefix") {
        test = PrefixTest::AllNonzero;
      } else {
        throw ParseError("unknown oracle rule '" + rule + "'");
      }
      bool reflected = false;
      if (j.contains("reflected")) {
        if (!j["reflected"].is_boolean()) throw ParseError("'reflected' must be a boolean");
        reflected = j["reflected"].get<bool>();
      }
      const Rational scale = j.contains("scale") ? rational_field(j["scale"]) : Rational(1);
      return PrefixIndicator(source, test, reflected, scale);
    }
    throw ParseError("unknown coefficient type '" + type + "'");
  }

 private:
  OracleSequence oracle(const std::string& command) {
    auto it = oracles_.find(command);
    if (it == oracles_.end()) it = oracles_.emplace(command, resolver_(command)).first;
    return it->second;
  }

  const OracleResolver& resolver_;
  std::map<std::string, OracleSequence> oracles_;
};

}  // namespace

OracleResolver unconnected_oracles() {
  return [](const std::string& command) {
    return OracleSequence(OracleSequence::Evaluator{}, command);
  };
}

json to_json(const Sequence& s) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, PeriodicSequence>) {
          json period = json::array();
          for (const auto& v : x.period()) period.push_back(rational_text(v));
          return {{"type", "periodic"}, {"period", period}};
        } else if constexpr (std::is_same_v<T, PerturbedSequence>) {
          json period = json::array();
          for (const auto& v : x.base.period()) period.push_back(rational_text(v));
          json exceptions = json::array();
          for (const auto& [n, v] : x.exceptions) {
            exceptions.push_back({{"n", n}, {"value", rational_text(v)}});
          }
          return {{"type", "perturbed"}, {"period", period}, {"exceptions", exceptions}};
        } else if constexpr (std::is_same_v<T, StepSequence>) {
          return {{"type", "step"},
                  {"negative", rational_text(x.negative)},
                  {"nonnegative", rational_text(x.nonnegative)}};
        } else if constexpr (std::is_same_v<T, PrefixIndicator>) {
          json out = {{"type", "oracle"},
                      {"rule", x.test() == PrefixTest::AllZero ? "all-zero-prefix"
                                                               : "all-nonzero-prefix"},
                      {"reflected", x.reflected()},
                      {"scale", rational_text(x.scale())}};
          out["command"] = x.source().command().empty() ? json(nullptr)
                                                        : json(x.source().command());
          return out;
        } else if constexpr (std::is_same_v<T, OracleSequence>) {
          json out = {{"type", "oracle"}, {"rule", "value"}};
          out["command"] = x.command().empty() ? json(nullptr) : json(x.command());
          return out;
        } else {
          json parts = json::array();
          for (const auto& p : x.parts) parts.push_back(to_json(p));
          return {{"type", "interlaced"}, {"parts", parts}};
        }
      },
      s.variant());
}

json to_json(const DifferenceEquation& e) {
  json coeffs = json::array();
  for (const auto& c : e.coefficients()) coeffs.push_back(to_json(c));
  return {{"order", e.order()}, {"coefficients", coeffs}};
}

DifferenceEquation equation_from_json(const json& j, const OracleResolver& resolver) {
  require_keys(j, {"order", "coefficients"});
  if (!j["order"].is_number_unsigned()) {
    throw ParseError("'order' must be a nonnegative integer");
  }
  const auto order = j["order"].get<std::size_t>();
  const json& coeffs = j["coefficients"];
  if (!coeffs.is_array()) throw ParseError("'coefficients' must be an array");
  if (coeffs.size() != order + 1) {
    throw ParseError("order " + std::to_string(order) + " needs " +
                     std::to_string(order + 1) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  Reader reader(resolver);
  std::vector<Sequence> seqs;
  for (const auto& c : coeffs) {
    try {
      seqs.push_back(reader.sequence(c));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  return DifferenceEquation(std::move(seqs));
}

DifferenceEquation parse_equation(const std::string& text, const OracleResolver& resolver) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return equation_from_json(j, resolver);
}

DifferenceEquation read_equation(const std::filesystem::path& path,
                                 const OracleResolver& resolver) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_equation(buf.str(), resolver);
}

void write_equation(const DifferenceEquation& e, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path.string());
  out << to_json(e).dump(2) << '\n';
}

}  // namespace seqdim
