#include "commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lapspec/cache.hpp"
#include "lapspec/census.hpp"
#include "lapspec/conjectures.hpp"
#include "lapspec/constructors.hpp"
#include "lapspec/expression.hpp"
#include "lapspec/graph6.hpp"
#include "lapspec/realizability.hpp"
#include "lapspec/spec_target.hpp"
#include "lapspec/spectrum.hpp"
#include "lapspec/tables.hpp"

namespace lapspec::cli {
namespace {

using nlohmann::json;

SearchOptions search_options(const CliConfig& config) {
  SearchOptions o;
  o.allow_long_runs = config.allow_long_runs;
  o.cache_dir = config.cache_dir;
  return o;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CommandResult error_result(const CliConfig& config, int code, const std::string& kind, const std::string& message,
                           std::optional<std::size_t> position = std::nullopt) {
  CommandResult r;
  r.exit_code = code;
  if (config.format == Format::kJson) {
    json e = {{"kind", kind}, {"message", message}};
    if (position) e["position"] = *position;
    r.out = dump({{"error", e}});
  } else {
    r.err = "error: " + message + "\n";
  }
  return r;
}

// Maps library exceptions onto exit codes.
template <class Body>
CommandResult guarded(const CliConfig& config, Body body) {
  try {
    return body();
  } catch (const CacheError& e) {
    return error_result(config, kIo, "io", e.what());
  } catch (const ParseError& e) {
    return error_result(config, kUsage, "parse", e.what(), e.position());
  } catch (const Graph6Error& e) {
    return error_result(config, kUsage, "parse", e.what(), e.offset());
  } catch (const TargetError& e) {
    return error_result(config, kUsage, "target", e.what());
  } catch (const CapError& e) {
    return error_result(config, kUsage, "cap", e.what());
  } catch (const GraphError& e) {
    return error_result(config, kUsage, "graph", e.what());
  } catch (const VerificationError& e) {
    return error_result(config, kFailed, "verification", e.what());
  } catch (const std::exception& e) {
    return error_result(config, kFailed, "internal", e.what());
  }
}

struct ParsedGraph {
  Graph graph;
  std::optional<std::string> expression;
};

ParsedGraph parse_graph_input(const std::string& input) {
  try {
    Expression e = Expression::parse(input);
    return {e.evaluate(), e.to_ascii()};
  } catch (const ParseError& expr_error) {
    try {
      return {from_graph6(input), std::nullopt};
    } catch (const Graph6Error& g6_error) {
      throw ParseError("input is neither a composition expression (" + std::string(expr_error.what()) +
                           ") nor graph6 (" + g6_error.what() + ")",
                       expr_error.position());
    }
  }
}

json spectrum_json(const std::string& input) {
  const ParsedGraph parsed = parse_graph_input(input);
  const Graph& g = parsed.graph;
  const CharPoly poly = laplacian_char_poly(g);
  const auto spectrum = integer_roots(poly);
  json coefficients = json::array();
  for (const auto& c : poly.coefficients()) coefficients.push_back(c.str());

  json out;
  out["input"] = input;
  out["expression"] = parsed.expression ? json(*parsed.expression) : json(nullptr);
  out["graph6"] = to_graph6(g);
  out["order"] = g.order();
  out["edges"] = g.edge_count();
  out["connected"] = is_connected(g);
  out["char_poly"] = poly.to_string();
  out["coefficients"] = std::move(coefficients);
  out["integral"] = spectrum.has_value();
  out["spectrum"] = spectrum ? spectrum->to_string() : "NOT_INTEGRAL";
  out["spanning_trees"] = spanning_tree_count(g).str();
  std::optional<SpecTarget> label;
  if (spectrum && is_connected(g)) label = classify_spectrum(*spectrum);
  out["label"] = label ? json(label->label()) : json(nullptr);
  return out;
}

std::string spectrum_text(const json& j) {
  std::ostringstream os;
  auto line = [&os](const std::string& key, const std::string& value) {
    os << std::left << std::setw(16) << (key + ":") << value << "\n";
  };
  line("input", j["input"].get<std::string>());
  line("graph6", j["graph6"].get<std::string>());
  line("order", std::to_string(j["order"].get<int>()));
  line("edges", std::to_string(j["edges"].get<int>()));
  line("connected", j["connected"].get<bool>() ? "yes" : "no");
  line("char poly", j["char_poly"].get<std::string>());
  std::string coeffs = "[";
  for (std::size_t k = 0; k < j["coefficients"].size(); ++k) {
    if (k) coeffs += ", ";
    coeffs += j["coefficients"][k].get<std::string>();
  }
  line("coefficients", coeffs + "]  (constant term first)");
  line("spectrum", j["spectrum"].get<std::string>());
  line("spanning trees", j["spanning_trees"].get<std::string>());
  line("label", j["label"].is_null() ? "-" : j["label"].get<std::string>());
  return os.str();
}

json trace_json(const ConstructionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"rule", s.rule}, {"target", s.target.label()}, {"expression", s.expression.to_ascii()}});
  }
  return steps;
}

json census_json(const CensusRecord& r) {
  json spectra = json::array();
  for (const auto& [spectrum, graphs] : r.by_spectrum) {
    const auto t = classify_spectrum(spectrum);
    spectra.push_back({{"spectrum", spectrum.to_string()},
                       {"label", t ? json(t->label()) : json(nullptr)},
                       {"graphs", graphs}});
  }
  return {{"order", r.order},
          {"total_connected", r.total_connected},
          {"laplacian_integral", r.laplacian_integral},
          {"spectra", std::move(spectra)}};
}

}  // namespace

CommandResult cmd_spectrum(const std::string& input, const CliConfig& config) {
  return guarded(config, [&] {
    const json j = spectrum_json(input);
    return CommandResult{kOk, config.format == Format::kJson ? dump(j) : spectrum_text(j), ""};
  });
}

CommandResult cmd_construct(const std::string& target_text, const CliConfig& config) {
  return guarded(config, [&] {
    const SpecTarget t = parse_target(target_text);
    const TheoremVerdict theorem = theorem_realizable(t);
    json out = {{"target", t.label()}, {"expansion", expand(t).to_string()},
                {"verdict", std::string(to_string(theorem.verdict))}};
    std::ostringstream text;
    text << "target:    " << t.label() << " = " << expand(t).to_string() << "\n";
    CommandResult r;

    if (theorem.verdict == Verdict::kRealizable) {
      const Witness w = construct(t);
      const std::string g6 = to_graph6(w.graph);
      out["obstructions"] = json::array();
      out["witness_graph6"] = g6;
      out["expression"] = w.expression.to_ascii();
      out["expression_unicode"] = w.expression.to_unicode();
      out["trace"] = trace_json(w.trace);
      out["spectrum"] = w.spectrum.to_string();
      out["verified"] = true;
      out["provenance"] = theorem.reason;
      text << "witness:   " << w.expression.to_ascii() << "\n"
           << "           " << w.expression.to_unicode() << "\n"
           << "graph6:    " << g6 << "\n"
           << "trace:\n";
      for (const auto& s : w.trace.steps) {
        text << "  " << std::left << std::setw(26) << s.rule << std::setw(18) << s.target.label()
             << s.expression.to_ascii() << "\n";
      }
      text << "spectrum OK " << w.spectrum.to_string() << "\n";
      r.out = config.graph6_only ? g6 + "\n" : text.str();
    } else {
      json tags = json::array();
      for (Obstruction o : all_obstructions(t)) tags.push_back(std::string(to_string(o)));
      out["obstructions"] = tags;
      r.exit_code = kFailed;
      if (theorem.verdict == Verdict::kObstructed) {
        out["provenance"] = theorem.reason;
        text << "obstructed: " << (tags.empty() ? std::string("-") : "") ;
        for (std::size_t k = 0; k < tags.size(); ++k) text << (k ? ", " : "") << tags[k].get<std::string>();
        text << "\nreason:     " << theorem.reason << "\n";
      } else {
        out["provenance"] = "not settled by the classification; run `lapspec search " + target_text + "`";
        text << "UNKNOWN: not settled by the classification; no construction available.\n"
             << "try:     lapspec search '" << target_text << "'\n";
      }
      r.out = config.graph6_only ? "" : text.str();
    }
    if (config.format == Format::kJson) r.out = dump(out);
    return r;
  });
}

CommandResult cmd_search(const std::string& target_text, const CliConfig& config) {
  return guarded(config, [&] {
    const SpecTarget t = parse_target(target_text);
    const SearchOptions options = search_options(config);
    const std::vector<Graph> found = find_realizations(t, options);
    const TheoremVerdict theorem = theorem_realizable(t);

    json graphs = json::array();
    for (const auto& g : found) graphs.push_back(to_graph6(g));
    json out = {{"target", t.label()},
                {"expansion", expand(t).to_string()},
                {"order", t.n},
                {"count", found.size()},
                {"realizers", graphs},
                {"verdict", found.empty() ? "OBSTRUCTED" : "REALIZABLE"},
                {"obstructions", found.empty() ? json::array({"exhausted_search"}) : json::array()},
                {"theorem_verdict", std::string(to_string(theorem.verdict))}};

    CommandResult r;
    if (config.format == Format::kJson) {
      r.out = dump(out);
    } else if (config.graph6_only) {
      for (const auto& g : graphs) r.out += g.get<std::string>() + "\n";
    } else {
      std::ostringstream text;
      text << "target:    " << t.label() << " = " << expand(t).to_string() << "\n"
           << "realizers: " << found.size() << " (exhaustive over connected graphs of order " << t.n << ")\n";
      for (const auto& g : graphs) text << "  " << g.get<std::string>() << "\n";
      text << "classification: " << to_string(theorem.verdict) << "\n";
      r.out = text.str();
    }
    return r;
  });
}

CommandResult cmd_census(int order, const CliConfig& config) {
  return guarded(config, [&] {
    const CensusRecord record = laplacian_integral_census(order, search_options(config));
    CommandResult r;
    if (config.format == Format::kJson) {
      r.out = dump(census_json(record));
      return r;
    }
    std::ostringstream text;
    text << "connected=" << record.total_connected << " integral=" << record.laplacian_integral << "\n";
    for (const auto& [spectrum, graphs] : record.by_spectrum) {
      const auto t = classify_spectrum(spectrum);
      text << std::left << std::setw(4 * order + 4) << spectrum.to_string() << std::setw(20)
           << (t ? t->label() : std::string("-"));
      for (const auto& g : graphs) text << " " << g;
      text << "\n";
    }
    r.out = text.str();
    return r;
  });
}

CommandResult cmd_tables(const CliConfig& config) {
  return guarded(config, [&] {
    const TablesReport report = reproduce_appendix_tables(search_options(config));
    CommandResult r;
    r.exit_code = report.all_pass() ? kOk : kFailed;
    if (config.format == Format::kJson) {
      json rows = json::array();
      for (const auto& row : report.rows) {
        rows.push_back({{"table", row.table},
                        {"row", row.row},
                        {"expressions", row.expressions},
                        {"expected_spectrum", row.expected_spectrum},
                        {"computed_spectrum", row.computed_spectrum},
                        {"expected_label", row.expected_label},
                        {"computed_label", row.computed_label},
                        {"descriptions_agree", row.descriptions_agree},
                        {"found_by_search", row.found_by_search ? json(*row.found_by_search) : json(nullptr)},
                        {"pass", row.pass},
                        {"detail", row.detail}});
      }
      r.out = dump({{"rows", rows}, {"all_pass", report.all_pass()}});
      return r;
    }
    std::ostringstream text;
    for (const auto& row : report.rows) {
      text << "T" << row.table << "." << std::left << std::setw(3) << row.row << std::setw(36) << row.expressions
           << std::setw(18) << row.computed_spectrum << std::setw(16) << row.computed_label
           << (row.found_by_search ? (*row.found_by_search ? "search " : "SEARCH?") : "       ") << "  "
           << (row.pass ? "PASS" : "FAIL " + row.detail) << "\n";
    }
    int passed = 0;
    for (const auto& row : report.rows) passed += row.pass ? 1 : 0;
    text << passed << "/" << report.rows.size() << " rows pass\n";
    r.out = text.str();
    return r;
  });
}

CommandResult cmd_conjectures(const CliConfig& config) {
  return guarded(config, [&] {
    const auto checks = check_conjectures(config.max_order, search_options(config));
    CommandResult r;
    bool all = true;
    json out = json::array();
    std::ostringstream text;
    for (const auto& c : checks) {
      all = all && c.holds();
      json orders = json::array();
      text << to_string(c.id) << " (orders " << c.min_order << ".." << c.max_order << "): "
           << (c.holds() ? "holds" : "COUNTEREXAMPLE") << "\n";
      for (const auto& v : c.orders) {
        orders.push_back({{"order", v.order},
                          {"holds", v.holds},
                          {"observed", v.observed},
                          {"counterexamples", v.counterexamples},
                          {"note", v.note}});
        text << "  n=" << v.order << " " << (v.holds ? "holds" : "FAILS");
        if (!v.observed.empty()) {
          text << "  [";
          for (std::size_t k = 0; k < v.observed.size(); ++k) text << (k ? ", " : "") << v.observed[k];
          text << "]";
        }
        for (const auto& g : v.counterexamples) text << " " << g;
        text << "\n";
      }
      out.push_back({{"conjecture", std::string(to_string(c.id))},
                     {"min_order", c.min_order},
                     {"max_order", c.max_order},
                     {"holds", c.holds()},
                     {"orders", orders}});
    }
    r.exit_code = all ? kOk : kFailed;
    r.out = config.format == Format::kJson ? dump({{"checks", out}, {"all_hold", all}}) : text.str();
    return r;
  });
}

CommandResult run(const std::vector<std::string>& args, std::istream& input) {
  CliConfig config;
  if (const char* env = std::getenv("LAPSPEC_CACHE_DIR"); env && *env) config.cache_dir = env;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--format=json" || (args[k] == "--format" && k + 1 < args.size() && args[k + 1] == "json")) {
      config.format = Format::kJson;
    }
  }

  CLI::App app{"Exact Laplacian spectra, constructions and exhaustive searches for S-type spectra", "lapspec"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string cache_dir;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_dir, "Census cache directory (default: $LAPSPEC_CACHE_DIR)");
  app.add_option("--max-n", config.max_order, "Largest order for conjecture checks")->check(CLI::Range(1, 10));
  app.add_flag("--allow-long-runs", config.allow_long_runs, "Allow order-10 enumeration");
  app.add_flag("--graph6", config.graph6_only, "Print bare graph6 records (construct, search)");

  std::string graph_input;
  auto* spectrum = app.add_subcommand("spectrum", "Spectrum report for a graph6 record or composition expression");
  spectrum->add_option("graph", graph_input, "graph6, expression like \"K2 v (K1 u P3)\", or - for stdin")
      ->required();
  std::string target;
  auto* construct_cmd = app.add_subcommand("construct", "Build and verify a witness, e.g. S{1,4}_6^6 or S_3,6");
  construct_cmd->add_option("target", target)->required();
  auto* search = app.add_subcommand("search", "All realizers of a target by exhaustive search");
  search->add_option("target", target)->required();
  int order = 0;
  auto* census = app.add_subcommand("census", "Connected and Laplacian-integral census of one order");
  census->add_option("order", order)->required();
  auto* tables = app.add_subcommand("tables", "Reproduce the appendix tables");
  auto* conjectures = app.add_subcommand("conjectures", "Exhaustive conjecture checks up to --max-n");
  for (auto* sub : {spectrum, construct_cmd, search, census, tables, conjectures}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {kOk, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return error_result(config, kUsage, "usage", e.what());
  }
  config.format = format == "json" ? Format::kJson : Format::kText;
  if (!cache_dir.empty()) config.cache_dir = cache_dir;

  if (spectrum->parsed()) {
    if (graph_input != "-") return cmd_spectrum(graph_input, config);
    CommandResult all;
    json reports = json::array();
    for (std::string line; std::getline(input, line);) {
      if (line.empty()) continue;
      CommandResult one = cmd_spectrum(line, config);
      if (one.exit_code != kOk) return one;
      if (config.format == Format::kJson) {
        reports.push_back(json::parse(one.out));
      } else {
        all.out += one.out + "\n";
      }
    }
    if (config.format == Format::kJson) all.out = dump(reports);
    return all;
  }
  if (construct_cmd->parsed()) return cmd_construct(target, config);
  if (search->parsed()) return cmd_search(target, config);
  if (census->parsed()) return cmd_census(order, config);
  if (tables->parsed()) return cmd_tables(config);
  return cmd_conjectures(config);
}

}  // namespace lapspec::cli
