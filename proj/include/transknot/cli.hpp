#pragma once

// Command dispatch for the `transknot` tool. `dispatch` never touches
// stdout; it returns the exit code and the lines to print, so tests can call
// it directly. Exit codes: 0 success, 1 domain negative (with diagnostics),
// 2 usage or parse error (with usage text).

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "transknot/diagram.hpp"
#include "transknot/error.hpp"
#include "transknot/framing.hpp"
#include "transknot/generate.hpp"
#include "transknot/invariants.hpp"
#include "transknot/render.hpp"
#include "transknot/singular.hpp"
#include "transknot/stabilize.hpp"
#include "transknot/transversality.hpp"

namespace transknot::cli {

struct CommandOutcome {
  int exit_code = 0;
  std::vector<std::string> stdout_lines;
};

inline constexpr const char* kUsage =
    "usage: transknot <command> [options]\n"
    "  validate <file>\n"
    "  invariants <file>\n"
    "  oracle-sl <file>\n"
    "  stabilize <file> --edge <i> --count <k> -o <out>\n"
    "  resolve <file> --sites <i,j,...> --assign <+-...> -o <out>\n"
    "  order-check --invariant <writhe|v2|sl-pullback> --order <n> --seed <s> --samples <m>\n"
    "  mtor --pairings <a,b,...>\n"
    "  exists --euler-finite <0|1> --atoroidal <0|1> --tight <0|1> --pairings <list> [--exhaustive]\n"
    "  distinguish [exists flags] --nonseparating-sphere <0|1> --zero-homologous <0|1>\n"
    "              --stabilizations <k>\n"
    "  render <file> -o <out.svg>";

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Domain failure already formatted as output lines.
struct DomainFailure {
  std::vector<std::string> lines;
};

inline CommandOutcome usage(const std::string& why) {
  CommandOutcome out{2, {"error: " + why}};
  std::istringstream is(kUsage);
  for (std::string line; std::getline(is, line);) out.stdout_lines.push_back(line);
  return out;
}

inline std::vector<std::string> violation_lines(const std::vector<Violation>& vs) {
  std::vector<std::string> lines;
  for (const auto& v : vs)
    lines.push_back("VIOLATION " + std::string(kind_name(v.kind)) + " " + format_location(v));
  return lines;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

/// Parses the file; geometric rejection is a domain failure.
inline TransverseDiagram load(const std::string& path) {
  try {
    return parse_diagram(read_file(path));
  } catch (const DiagramRejected& e) {
    throw DomainFailure{violation_lines(e.violations())};
  }
}

inline TransverseDiagram load_valid(const std::string& path) {
  TransverseDiagram d = load(path);
  const auto report = validate(d);
  if (!report.valid()) throw DomainFailure{violation_lines(report.violations)};
  return d;
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad integer '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad integer '" + item + "'");
    out.push_back(v);
  }
  return out;
}

inline InvariantHandle invariant_by_name(const std::string& name) {
  if (name == "writhe") return writhe_invariant();
  if (name == "v2") return v2_invariant();
  if (name == "sl-pullback") return sl_pullback_invariant();
  throw UsageError("unknown invariant '" + name + "'");
}

struct DescriptorFlags {
  int euler = 0, atoroidal = 0, tight = 0, sphere = 0;
  std::string pairings;
  bool exhaustive = false;

  void attach(CLI::App& app, bool with_sphere) {
    app.add_option("--euler-finite", euler)->check(CLI::Range(0, 1));
    app.add_option("--atoroidal", atoroidal)->check(CLI::Range(0, 1));
    app.add_option("--tight", tight)->check(CLI::Range(0, 1));
    app.add_option("--pairings", pairings);
    app.add_flag("--exhaustive", exhaustive);
    if (with_sphere) app.add_option("--nonseparating-sphere", sphere)->check(CLI::Range(0, 1));
  }

  ManifoldDescriptor descriptor() const {
    return {euler == 1, atoroidal == 1, tight == 1, sphere == 1, parse_int_list(pairings), exhaustive};
  }
};

inline std::string verdict_line(const ExistenceVerdict& v) {
  switch (v.kind) {
    case ExistenceVerdict::Kind::Exists: return std::string("EXISTS ") + reason_name(v.reason);
    case ExistenceVerdict::Kind::ModOnly: return "MOD " + std::to_string(v.modulus);
    case ExistenceVerdict::Kind::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

}  // namespace detail

inline CommandOutcome dispatch(const std::vector<std::string>& argv) {
  using namespace detail;
  CLI::App app{"transverse knot diagrams", "transknot"};
  app.require_subcommand(1);
  CommandOutcome out;
  auto say = [&](std::string line) { out.stdout_lines.push_back(std::move(line)); };

  std::string file, output, sites_text, assign_text, invariant_name;
  std::size_t edge = 0, count = 0, samples = 0;
  int order = 0;
  std::uint64_t seed = 0;
  std::int64_t stabilizations = 0;
  int zero_homologous = 0;
  DescriptorFlags flags;

  auto* validate_cmd = app.add_subcommand("validate");
  validate_cmd->add_option("file", file)->required();
  auto* invariants_cmd = app.add_subcommand("invariants");
  invariants_cmd->add_option("file", file)->required();
  auto* oracle_cmd = app.add_subcommand("oracle-sl");
  oracle_cmd->add_option("file", file)->required();
  auto* stabilize_cmd = app.add_subcommand("stabilize");
  stabilize_cmd->add_option("file", file)->required();
  stabilize_cmd->add_option("--edge", edge)->required();
  stabilize_cmd->add_option("--count", count)->required();
  stabilize_cmd->add_option("-o", output)->required();
  auto* resolve_cmd = app.add_subcommand("resolve");
  resolve_cmd->add_option("file", file)->required();
  resolve_cmd->add_option("--sites", sites_text)->required();
  resolve_cmd->add_option("--assign", assign_text)->required();
  resolve_cmd->add_option("-o", output)->required();
  auto* order_cmd = app.add_subcommand("order-check");
  order_cmd->add_option("--invariant", invariant_name)->required();
  order_cmd->add_option("--order", order)->required()->check(CLI::Range(0, 6));
  order_cmd->add_option("--seed", seed)->required();
  order_cmd->add_option("--samples", samples)->required()->check(CLI::Range(1, 10000));
  auto* mtor_cmd = app.add_subcommand("mtor");
  mtor_cmd->add_option("--pairings", flags.pairings)->required();
  auto* exists_cmd = app.add_subcommand("exists");
  flags.attach(*exists_cmd, false);
  auto* distinguish_cmd = app.add_subcommand("distinguish");
  flags.attach(*distinguish_cmd, true);
  distinguish_cmd->add_option("--zero-homologous", zero_homologous)->check(CLI::Range(0, 1));
  distinguish_cmd->add_option("--stabilizations", stabilizations)->required();
  auto* render_cmd = app.add_subcommand("render");
  render_cmd->add_option("file", file)->required();
  render_cmd->add_option("-o", output)->required();

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  try {
    if (validate_cmd->parsed()) {
      const auto report = validate(load(file));
      if (report.valid()) {
        say("VALID");
      } else {
        out.exit_code = 1;
        for (auto& line : violation_lines(report.violations)) say(line);
      }
    } else if (invariants_cmd->parsed()) {
      const TransverseDiagram d = load_valid(file);
      say("writhe=" + std::to_string(writhe(d)));
      say("sl=" + std::to_string(self_linking(d)));
      say("whitney=" + std::to_string(whitney_index(d.curve)));
      say("crossings=" + std::to_string(d.crossings.size()));
      say("v2=" + std::to_string(v2(d)));
    } else if (oracle_cmd->parsed()) {
      say("oracle_sl=" + std::to_string(pushoff_linking_oracle(load_valid(file))));
    } else if (stabilize_cmd->parsed()) {
      const TransverseDiagram d = load_valid(file);
      if (edge < 1 || edge > d.curve.size())
        throw UsageError("--edge must lie in 1.." + std::to_string(d.curve.size()));
      write_file(output, serialize_diagram(stabilize(d, EdgeRef{edge}, count)));
    } else if (resolve_cmd->parsed()) {
      const TransverseDiagram d = load_valid(file);
      std::set<std::size_t> chosen;
      for (std::int64_t k : parse_int_list(sites_text)) {
        if (k < 1 || static_cast<std::size_t>(k) > d.crossings.size())
          throw UsageError("site " + std::to_string(k) + " is not a crossing number");
        if (!chosen.insert(static_cast<std::size_t>(k - 1)).second)
          throw UsageError("site " + std::to_string(k) + " repeated");
      }
      if (assign_text.size() != chosen.size())
        throw UsageError("--assign needs one sign per site");
      // Assignment characters follow the listed site order; the singular
      // diagram stores double points in crossing order.
      std::vector<std::int64_t> listed = parse_int_list(sites_text);
      std::vector<Resolution> by_site(d.crossings.size(), Resolution::Pos);
      for (std::size_t j = 0; j < listed.size(); ++j) {
        const char ch = assign_text[j];
        if (ch != '+' && ch != '-') throw UsageError("--assign accepts only '+' and '-'");
        by_site[static_cast<std::size_t>(listed[j] - 1)] = ch == '+' ? Resolution::Pos : Resolution::Neg;
      }
      ResolutionAssignment a;
      for (std::size_t k : chosen) a.choices.push_back(by_site[k]);
      write_file(output, serialize_diagram(resolve(make_singular(d, chosen), a)));
    } else if (order_cmd->parsed()) {
      const InvariantHandle inv = invariant_by_name(invariant_name);
      const auto family = singular_family(seed, static_cast<std::size_t>(order) + 1, samples);
      const OrderCheck check = is_order_at_most(inv, order, family);
      for (auto v : check.defects) say("defect=" + std::to_string(v));
      say(check.holds ? "ORDER_HOLDS" : "ORDER_FAILS");
      if (!check.holds) out.exit_code = 1;
    } else if (mtor_cmd->parsed()) {
      say("m=" + std::to_string(compute_m_T(parse_int_list(flags.pairings))));
    } else if (exists_cmd->parsed()) {
      say(verdict_line(relative_framing_exists(flags.descriptor())));
    } else if (distinguish_cmd->parsed()) {
      const auto report =
          distinguish_by_relative_framing(flags.descriptor(), zero_homologous == 1, stabilizations);
      say(report.verdict == Verdict::Distinguished ? "DISTINGUISHED" : "INCONCLUSIVE");
      say(report.torsor_line);
    } else if (render_cmd->parsed()) {
      write_file(output, render_svg(load(file)));
    }
  } catch (const UsageError& e) {
    return usage(e.what());
  } catch (const DomainFailure& f) {
    return {1, f.lines};
  } catch (const ParseError& e) {
    return usage(e.what());
  } catch (const Error& e) {
    return {1, {std::string("ERROR ") + e.what()}};
  }
  return out;
}

}  // namespace transknot::cli
