#include "ddrec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddrec/error.hpp"
#include "ddrec/oracle.hpp"
#include "ddrec/serialize.hpp"
#include "ddrec/speclang.hpp"

namespace ddrec::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kVerifyEgfOrder = 30;
constexpr int kVerifyOracleN = 8;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io_error, "cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FamilyDescriptor custom_descriptor(const RecurrenceSpec& spec) {
  spec.validate();
  FamilyDescriptor f;
  f.name = "custom";
  f.spec = spec;
  f.spec.label = "custom";
  try {
    f.saddle = build_exponent(spec);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::unsupported_shape) throw;
    f.saddle = SaddleFunction{};
    f.saddle.m = spec.m;
  }
  return f;
}

FamilyDescriptor from_parsed(const ParsedSpec& parsed) {
  if (const auto* req = std::get_if<FamilyRequest>(&parsed)) return catalog(req->name, req->params);
  return custom_descriptor(std::get<RecurrenceSpec>(parsed));
}

FamilyDescriptor resolve_source(const RunConfig& config) {
  const int sources = config.family.has_value() + config.spec_file.has_value() +
                      config.inline_text.has_value();
  if (sources != 1) {
    throw Error(ErrorKind::invalid_argument,
                "exactly one of --family, --spec, --inline is required");
  }
  if (config.family) {
    const FamilyRequest req = parse_family_request(*config.family, "--family");
    return catalog(req.name, req.params);
  }
  if (config.spec_file) {
    return from_parsed(parse(SpecSource{read_file(*config.spec_file), *config.spec_file}));
  }
  return from_parsed(parse(SpecSource{*config.inline_text, "--inline"}));
}

bool has_saddle(const FamilyDescriptor& f) { return !f.saddle.q1.empty() || !f.saddle.q2.is_zero(); }

std::vector<int> n_list(const RunConfig& config) {
  if (!config.ns.empty()) {
    if (config.n) throw Error(ErrorKind::invalid_argument, "give either --n or --ns, not both");
    return config.ns;
  }
  if (config.n) return {*config.n};
  throw Error(ErrorKind::invalid_argument, "command '" + config.command + "' needs --n or --ns");
}

int top_index(const RunConfig& config) {
  if (config.max_n && config.n) {
    throw Error(ErrorKind::invalid_argument, "give either --n or --max-n, not both");
  }
  if (config.max_n) return *config.max_n;
  if (config.n) return *config.n;
  throw Error(ErrorKind::invalid_argument, "command 'triangle' needs --max-n (or --n)");
}

std::vector<PMFTable> pmf_tables(const FamilyDescriptor& f, const std::vector<int>& ns) {
  std::vector<PMFTable> out;
  if (ns.empty()) return out;
  const int base = f.spec.start_index;
  for (int n : ns) {
    if (n < base) {
      throw Error(ErrorKind::invalid_index, "n = " + std::to_string(n) +
                                                " precedes the first row " + std::to_string(base));
    }
  }
  const auto polys = generate(f.spec, *std::max_element(ns.begin(), ns.end()));
  for (int n : ns) out.push_back(pmf(polys[static_cast<std::size_t>(n - base)], n));
  return out;
}

struct Check {
  std::string name;
  std::string status;  // passed, mismatch, skipped
  std::string detail;
};

std::vector<Check> verify_checks(const FamilyDescriptor& f) {
  std::vector<Check> checks;

  if (has_saddle(f)) {
    const EgfCheck egf = verify_egf_identity(f, kVerifyEgfOrder);
    checks.push_back({"egf_identity", egf.ok ? "passed" : "mismatch",
                      egf.ok ? "n <= " + std::to_string(egf.order)
                             : "first mismatch at n = " + std::to_string(*egf.first_mismatch)});
  } else {
    checks.push_back({"egf_identity", "skipped", "no closed-form exponent for this shape"});
  }

  const OracleReport oracle = verify_family(f, kVerifyOracleN);
  switch (oracle.status) {
    case OracleReport::Status::passed:
      checks.push_back({"oracle", "passed", "n <= " + std::to_string(oracle.max_n_checked)});
      break;
    case OracleReport::Status::mismatch:
      checks.push_back({"oracle", "mismatch",
                        "first mismatch at (n, k) = (" +
                            std::to_string(oracle.first_mismatch->first) + ", " +
                            std::to_string(oracle.first_mismatch->second) + ")"});
      break;
    case OracleReport::Status::skipped:
      checks.push_back({"oracle", "skipped", oracle.notice});
      break;
  }

  const auto rows = triangle(f.spec, f.spec.start_index + kVerifyEgfOrder);
  const NonnegativityReport nn = validate_nonnegativity(rows);
  checks.push_back({"nonnegativity", nn.nonnegative ? "passed" : "mismatch",
                    nn.nonnegative ? "rows " + std::to_string(rows.front().n) + ".." +
                                         std::to_string(rows.back().n)
                                   : "negative coefficient at (n, k) = (" +
                                         std::to_string(nn.first_violation->first) + ", " +
                                         std::to_string(nn.first_violation->second) + ")"});
  return checks;
}

std::string serialize_checks(const std::string& family, const std::vector<Check>& checks,
                             Format format) {
  if (format == Format::json) {
    Json out;
    out["family"] = family;
    out["checks"] = Json::array();
    for (const auto& c : checks) {
      out["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    }
    return out.dump(2) + "\n";
  }
  std::string text = "family,check,status,detail\n";
  for (const auto& c : checks) {
    text += family + "," + c.name + "," + c.status + ",\"" + c.detail + "\"\n";
  }
  return text;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_distribution:
    case ErrorKind::zero_mass:
    case ErrorKind::zero_variance:
    case ErrorKind::saddle_failure:
      return kNumeric;
    default:
      return kUsage;
  }
}

std::string error_object(const std::string& kind, const std::string& message,
                         const ParseError* parse = nullptr) {
  Json e;
  e["kind"] = kind;
  e["message"] = message;
  if (parse) {
    e["origin"] = parse->origin();
    e["line"] = parse->line();
    e["column"] = parse->column();
  }
  Json out;
  out["error"] = e;
  return out.dump() + "\n";
}

RunResult execute(const RunConfig& config) {
  const Format format = parse_format(config.format);
  RunResult result;
  if (config.command == "families") {
    if (config.family || config.spec_file || config.inline_text) {
      throw Error(ErrorKind::invalid_argument, "'families' takes no spec source");
    }
    const auto all = default_catalog();
    result.output = serialize_families(all, format);
    return result;
  }

  const FamilyDescriptor f = resolve_source(config);
  if (config.command == "triangle") {
    result.output = serialize_triangle(triangle(f.spec, top_index(config)), format);
  } else if (config.command == "pmf") {
    result.output = serialize_pmf(pmf_tables(f, n_list(config)), format);
  } else if (config.command == "moments") {
    result.output = serialize_moments(pmf_tables(f, n_list(config)), format);
  } else if (config.command == "clt") {
    const auto ns = n_list(config);
    result.output = serialize_normality(clt_scan(f, ns), format);
  } else if (config.command == "asymptotics") {
    if (!has_saddle(f)) {
      throw Error(ErrorKind::unsupported_shape,
                  "asymptotics needs a recurrence with a closed-form exponent");
    }
    const auto ns = n_list(config);
    result.output = serialize_asymptotics(compare_exact_scan(f, ns), format);
  } else if (config.command == "verify") {
    const auto checks = verify_checks(f);
    result.output = serialize_checks(f.display_name(), checks, format);
    for (const auto& c : checks) {
      if (c.status == "mismatch") {
        result.exit_code = kMismatch;
        result.error = error_object("verification_mismatch", c.name + ": " + c.detail);
        break;
      }
    }
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown command '" + config.command + "'");
  }
  return result;
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    return execute(config);
  } catch (const ParseError& e) {
    return {kUsage, "", error_object(to_string(e.kind()), e.detail(), &e)};
  } catch (const Error& e) {
    return {exit_code_for(e.kind()), "", error_object(to_string(e.kind()), e.what())};
  } catch (const std::bad_alloc&) {
    return {kNumeric, "", error_object("resource_exhausted", "out of memory")};
  } catch (const std::exception& e) {
    return {kNumeric, "", error_object("internal", e.what())};
  }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact triangles, laws and asymptotics of differential-difference recurrences"};
  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(
          {"triangle", "pmf", "moments", "clt", "asymptotics", "verify", "families"}));
  app.add_option("--family", config.family, "Catalog family, e.g. dowling(m=2)");
  app.add_option("--spec", config.spec_file, "Recurrence spec file");
  app.add_option("--inline", config.inline_text, "Recurrence spec text");
  app.add_option("--n", config.n, "Row index");
  app.add_option("--ns", config.ns, "Comma-separated row indices")->delimiter(',');
  app.add_option("--max-n", config.max_n, "Last triangle row");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << error_object("usage", e.what());
    return kUsage;
  }

  RunResult result = run(config);
  if (!result.output.empty()) {
    if (config.out) {
      std::ofstream file(*config.out, std::ios::binary);
      if (!file || !(file << result.output)) {
        err << error_object(to_string(ErrorKind::io_error),
                            "cannot write output file '" + *config.out + "'");
        return kUsage;
      }
    } else {
      out << result.output;
    }
  }
  if (!result.error.empty()) err << result.error;
  return result.exit_code;
}

}  // namespace ddrec::cli
