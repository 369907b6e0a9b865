#include "cli.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seqdim/dimension.hpp"
#include "seqdim/equation_io.hpp"
#include "seqdim/equations.hpp"
#include "seqdim/errors.hpp"
#include "seqdim/pencil.hpp"
#include "seqdim/subprocess_oracle.hpp"
#include "seqdim/unfolding.hpp"
#include "seqdim/window_oracle.hpp"

namespace seqdim::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kParse = 1;
constexpr int kDomain = 2;
constexpr int kOracle = 3;
constexpr int kMismatch = 4;

constexpr const char* kCaveat =
    "caveat: coefficients are not purely periodic; this is a finite-window "
    "estimate, not a certified dimension";

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const OracleError& e) {
    err << "error: " << e.what() << '\n';
    return kOracle;
  } catch (const RouteMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

OracleResolver subprocess_resolver(const std::optional<std::string>& override_cmd) {
  return [override_cmd](const std::string& command) {
    const std::string cmd = override_cmd.value_or(command);
    if (cmd.empty()) return OracleSequence(OracleSequence::Evaluator{}, command);
    return subprocess_sequence(cmd);
  };
}

json dimension_json(const Dimension& d) {
  return d.is_infinite() ? json("infinite") : json(d.value());
}

void print_matrix(std::ostream& out, const RatMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      if (j) out << ' ';
      out << std::string(width - c.size(), ' ') << c;
    }
    out << "]\n";
  }
}

struct DimResult {
  int code = kOk;
  std::string out;
  std::string err;
  json record;
};

DimResult dimension_of_file(const std::string& file, Method method) {
  DimResult r;
  std::ostringstream err;
  r.code = guarded(err, [&] {
    const DifferenceEquation e = read_equation(file);
    const DimensionReport report = analyze(e, method);
    r.record = {{"dimension", dimension_json(report.dimension)},
                {"H", report.block_size},
                {"method", std::string(to_string(method))}};
    r.out = "dimension: " + report.dimension.to_string();
    return kOk;
  });
  r.err = err.str();
  return r;
}

int cmd_dim(const std::vector<std::string>& files, const std::string& method_name, bool as_json,
            std::ostream& out, std::ostream& err) {
  Method method;
  if (int code = guarded(err, [&] {
        method = parse_method(method_name);
        return kOk;
      })) {
    return code;
  }
  std::vector<std::future<DimResult>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, dimension_of_file, f, method));
  }
  int code = kOk;
  json batch = json::array();
  const bool single = files.size() == 1;
  for (std::size_t i = 0; i < files.size(); ++i) {
    DimResult r = jobs[i].get();
    if (!r.err.empty()) err << (single ? "" : files[i] + ": ") << r.err;
    if (r.code != kOk) {
      if (code == kOk) code = r.code;
      if (as_json && !single) batch.push_back({{"file", files[i]}, {"error", r.code}});
      continue;
    }
    if (as_json) {
      if (single) {
        out << r.record.dump() << '\n';
      } else {
        r.record["file"] = files[i];
        batch.push_back(r.record);
      }
    } else {
      out << (single ? "" : files[i] + ": ") << r.out << '\n';
    }
  }
  if (as_json && !single) out << batch.dump() << '\n';
  return code;
}

int cmd_unfold(const std::string& file, std::optional<std::size_t> block_size, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const DifferenceEquation e = read_equation(file);
    const UnfoldedSystem sys = block_size ? unfold(e, *block_size) : unfold(e);
    out << "H: " << sys.block_size << '\n';
    out << "A0:\n";
    print_matrix(out, sys.same_block);
    out << "A1:\n";
    print_matrix(out, sys.next_block);
    out << "det P(t): " << pencil_determinant(pencil_from_unfolded(sys)).to_string("t") << '\n';
    return kOk;
  });
}

struct ConstructParams {
  std::string kind;
  std::optional<std::string> d_text;
  std::optional<std::size_t> r;
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  std::optional<std::string> oracle_cmd;
  std::string output;
};

std::size_t required(const std::optional<std::size_t>& v, const char* name) {
  if (!v) throw DomainError(std::string("missing --") + name);
  return *v;
}

Dimension parse_dimension(const std::string& text) {
  if (text == "inf" || text == "infinite") return Dimension::infinite();
  std::size_t used = 0;
  unsigned long long k = 0;
  try {
    k = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw DomainError("--d must be a nonnegative integer or 'infinite'");
  }
  return Dimension::finite(static_cast<std::size_t>(k));
}

DifferenceEquation construct(const ConstructParams& p) {
  const OracleSequence v(OracleSequence::Evaluator{}, p.oracle_cmd.value_or(""));
  if (p.kind == "ed") {
    return free_window_equation(p.d_text ? parse_dimension(*p.d_text).value() : 0);
  }
  if (p.kind == "einf") return free_half_line_equation();
  if (p.kind == "ecirc") return zero_solution_equation(required(p.r, "r"));
  if (p.kind == "order-dim") {
    if (!p.d_text) throw DomainError("missing --d");
    return prescribed_dimension_equation(required(p.r, "r"), parse_dimension(*p.d_text));
  }
  if (p.kind == "thm4-finite") {
    return finite_dichotomy_equation(required(p.a, "a"), required(p.b, "b"), v);
  }
  if (p.kind == "thm4-infinite") return infinite_dichotomy_equation(required(p.b, "b"), v);
  if (p.kind == "signal") return signal_equation(v);
  throw DomainError("unknown construction '" + p.kind + "'");
}

int cmd_construct(const ConstructParams& p, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (p.kind == "ed" && p.d_text && parse_dimension(*p.d_text).is_infinite()) {
      throw DomainError("ed needs a finite --d; use einf");
    }
    const DifferenceEquation e = construct(p);
    if (p.output.empty() || p.output == "-") {
      out << to_json(e).dump(2) << '\n';
    } else {
      write_equation(e, p.output);
    }
    return kOk;
  });
}

int cmd_interlace(const std::string& first, const std::string& second, const std::string& output,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DifferenceEquation e = interlace(read_equation(first), read_equation(second));
    if (output.empty() || output == "-") {
      out << to_json(e).dump(2) << '\n';
    } else {
      write_equation(e, output);
    }
    return kOk;
  });
}

struct OracleParams {
  std::size_t inner = 4;
  std::optional<std::size_t> step;
  std::size_t stall = 3;
  std::size_t cap = 64;
  std::optional<std::string> oracle_cmd;
  bool as_json = false;
};

OracleConfig to_config(const OracleParams& p) {
  OracleConfig c;
  c.inner_start = p.inner;
  c.outer_step = p.step;
  c.stall_threshold = p.stall;
  c.cap = p.cap;
  return c;
}

void print_estimate(std::ostream& out, const OracleEstimate& est, bool periodic, bool as_json) {
  if (as_json) {
    out << json{{"value", est.value},
                {"status", std::string(to_string(est.status))},
                {"inner_radius", est.inner_radius},
                {"outer_radius", est.outer_radius},
                {"cap", est.cap},
                {"outer_step", est.outer_step},
                {"certified", false}}
               .dump()
        << '\n';
    return;
  }
  out << "value " << est.value << ", " << to_string(est.status) << '\n';
  out << "inner_radius: " << est.inner_radius << '\n';
  out << "outer_radius: " << est.outer_radius << '\n';
  out << "cap: " << est.cap << '\n';
  if (!periodic) out << kCaveat << '\n';
}

int cmd_oracle(const std::string& file, const OracleParams& p, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const DifferenceEquation e = read_equation(file, subprocess_resolver(p.oracle_cmd));
    const OracleEstimate est = estimate_dimension(e, to_config(p));
    print_estimate(out, est, e.is_purely_periodic(), p.as_json);
    return kOk;
  });
}

// Smallest examined index n >= 0 whose value satisfies `pred`, plus the
// length of the contiguous examined prefix v(0..N).
struct PrefixReport {
  std::optional<std::int64_t> hit;
  std::int64_t examined = -1;
};

template <class Pred>
PrefixReport scan_prefix(const OracleSequence& v, Pred pred) {
  PrefixReport r;
  const auto known = v.known_values();
  for (std::int64_t n = 0;; ++n) {
    auto it = known.find(n);
    if (it == known.end()) break;
    r.examined = n;
    if (pred(it->second)) {
      r.hit = n;
      break;
    }
  }
  return r;
}

std::string prefix_text(const PrefixReport& r) {
  return r.examined < 0 ? std::string("no values of v examined")
                        : "v examined on n=0.." + std::to_string(r.examined);
}

int cmd_gallery(const std::string& scenario, const std::string& command,
                std::optional<std::size_t> a, std::optional<std::size_t> b,
                const OracleParams& p, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (command.empty()) throw DomainError("gallery needs --oracle-cmd");
    const OracleSequence v = subprocess_sequence(command);
    DifferenceEquation e = [&] {
      if (scenario == "signal") return signal_equation(v);
      if (scenario == "thm4-finite") {
        return finite_dichotomy_equation(a.value_or(1), b.value_or(3), v);
      }
      if (scenario == "thm4-infinite") return infinite_dichotomy_equation(b.value_or(2), v);
      throw DomainError("unknown scenario '" + scenario + "'");
    }();
    const OracleEstimate est = estimate_dimension(e, to_config(p));
    const auto nonzero = [](const Rational& x) { return !x.is_zero(); };
    const auto zero = [](const Rational& x) { return x.is_zero(); };

    std::string verdict;
    json extra;
    if (scenario == "thm4-infinite") {
      const PrefixReport r = scan_prefix(v, zero);
      extra["examined_through"] = r.examined;
      extra["zero_at"] = r.hit ? json(*r.hit) : json(nullptr);
      verdict = r.hit ? "zero found at n=" + std::to_string(*r.hit) +
                            "; dimension is infinite once v has a zero"
                      : "no zero found (" + prefix_text(r) +
                            "); dimension " + std::to_string(b.value_or(2)) +
                            " expected while v stays nonzero";
    } else {
      const PrefixReport r = scan_prefix(v, nonzero);
      extra["examined_through"] = r.examined;
      extra["nonzero_at"] = r.hit ? json(*r.hit) : json(nullptr);
      const std::size_t low = scenario == "signal" ? 0 : a.value_or(1);
      const std::size_t high = scenario == "signal" ? 1 : b.value_or(3);
      verdict = r.hit ? "nonzero found at n=" + std::to_string(*r.hit) + "; dimension " +
                            std::to_string(low) + " expected when v has a nonzero element"
                      : "no nonzero found (" + prefix_text(r) + "); dimension " +
                            std::to_string(high) + " expected while v is zero";
    }
    if (p.as_json) {
      extra["scenario"] = scenario;
      extra["value"] = est.value;
      extra["status"] = std::string(to_string(est.status));
      extra["inner_radius"] = est.inner_radius;
      extra["outer_radius"] = est.outer_radius;
      extra["cap"] = est.cap;
      extra["report"] = verdict;
      out << extra.dump() << '\n';
      return kOk;
    }
    out << "scenario: " << scenario << '\n';
    out << "observed dimension: " << est.value << " (" << to_string(est.status) << ")\n";
    out << "windows: inner " << est.inner_radius << ", outer " << est.outer_radius << '\n';
    out << verdict << '\n';
    out << kCaveat << '\n';
    return kOk;
  });
}

void add_oracle_options(CLI::App* sub, OracleParams& p) {
  sub->add_option("--inner", p.inner, "Initial inner radius W0")->capture_default_str();
  sub->add_option("--step", p.step, "Outer radius step (default max(4, H))");
  sub->add_option("--stall", p.stall, "Stabilization threshold S")->capture_default_str();
  sub->add_option("--cap", p.cap, "Dimension cap")->capture_default_str();
  sub->add_flag("--json", p.as_json, "Print JSON");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solution-space dimensions of linear difference equations"};
  app.name("seqdim");
  app.require_subcommand(1);

  std::vector<std::string> dim_files;
  std::string method = "pencil";
  bool dim_json = false;
  auto* dim = app.add_subcommand("dim", "Exact dimension for periodic coefficients");
  dim->add_option("files", dim_files, "Equation files")->required();
  dim->add_option("--method", method, "pencil, groebner or both")->capture_default_str();
  dim->add_flag("--json", dim_json, "Print JSON");

  std::string unfold_file;
  std::optional<std::size_t> unfold_h;
  auto* unf = app.add_subcommand("unfold", "Print the unfolded system and det P(t)");
  unf->add_option("file", unfold_file, "Equation file")->required();
  unf->add_option("--H", unfold_h, "Block size");

  ConstructParams cp;
  auto* con = app.add_subcommand("construct", "Write a gadget equation");
  con->add_option("kind", cp.kind, "ed, einf, ecirc, order-dim, thm4-finite, thm4-infinite, signal")
      ->required();
  con->add_option("--d", cp.d_text, "Dimension (integer or 'infinite')");
  con->add_option("--r", cp.r, "Order");
  con->add_option("--a", cp.a, "Dimension when v has a nonzero element");
  con->add_option("--b", cp.b, "Dimension otherwise");
  con->add_option("--oracle-cmd", cp.oracle_cmd, "Command producing v");
  con->add_option("-o,--output", cp.output, "Output file (default stdout)");

  std::string il_first, il_second, il_output;
  auto* il = app.add_subcommand("interlace", "Interlace two equations");
  il->add_option("first", il_first, "Equation for even indices")->required();
  il->add_option("second", il_second, "Equation for odd indices")->required();
  il->add_option("-o,--output", il_output, "Output file (default stdout)");

  std::string oracle_file;
  OracleParams op;
  auto* orc = app.add_subcommand("oracle", "Finite-window dimension estimate");
  orc->add_option("file", oracle_file, "Equation file")->required();
  add_oracle_options(orc, op);
  orc->add_option("--oracle-cmd", op.oracle_cmd, "Command producing oracle coefficients");

  std::string scenario, gallery_cmd;
  std::optional<std::size_t> ga, gb;
  OracleParams gp;
  auto* gal = app.add_subcommand("gallery", "Run an undecidability scenario on a sequence program");
  gal->add_option("scenario", scenario, "signal, thm4-finite or thm4-infinite")->required();
  gal->add_option("--oracle-cmd", gallery_cmd, "Command producing v")->required();
  gal->add_option("--a", ga, "thm4-finite: dimension when v has a nonzero element (default 1)");
  gal->add_option("--b", gb, "Dimension while v has no nonzero (thm4-finite, default 3) or no zero (thm4-infinite, default 2) element");
  add_oracle_options(gal, gp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kDomain;
  }

  if (dim->parsed()) return cmd_dim(dim_files, method, dim_json, out, err);
  if (unf->parsed()) return cmd_unfold(unfold_file, unfold_h, out, err);
  if (con->parsed()) return cmd_construct(cp, out, err);
  if (il->parsed()) return cmd_interlace(il_first, il_second, il_output, out, err);
  if (orc->parsed()) return cmd_oracle(oracle_file, op, out, err);
  if (gal->parsed()) return cmd_gallery(scenario, gallery_cmd, ga, gb, gp, out, err);
  return kDomain;
}

}  // namespace seqdim::cli
