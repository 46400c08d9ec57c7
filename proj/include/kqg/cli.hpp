#pragma once

#include <algorithm>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kqg/engine.hpp"
#include "kqg/hall.hpp"
#include "kqg/kronecker.hpp"
#include "kqg/laurent_poly.hpp"
#include "kqg/oracle/kronecker_rep.hpp"

namespace kqg::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kNotPrimePower = 3,
  kMismatch = 4,
  kNotRealizable = 5,
};

/// One row of `count` output.
struct OutputRecord {
  std::string module;
  long a = 0;
  long b = 0;
  std::string polynomial;
  std::optional<std::pair<std::string, std::string>> value_at;  // (q0, value)
  std::optional<std::string> euler;

  nlohmann::json to_json() const {
    nlohmann::json j{{"module", module}, {"a", a}, {"b", b}, {"polynomial", polynomial}};
    if (value_at) j["value_at"] = {{"q", value_at->first}, {"value", value_at->second}};
    if (euler) j["euler"] = *euler;
    return j;
  }
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string rational_str(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return r.str();
}

inline bool is_prime_power(const Rational& q0) {
  if (boost::multiprecision::denominator(q0) != 1) return false;
  Integer n = boost::multiprecision::numerator(q0);
  if (n < 2) return false;
  Integer d = 2;
  while (d * d <= n && n % d != 0) ++d;
  if (n % d != 0) return true;  // n itself is prime
  while (n % d == 0) n /= d;
  return n == 1;
}

inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("invalid number '" + text + "'", 0);
  }
}

inline std::pair<long, long> parse_dim(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("dimension vector must look like a,b", text.size());
  auto to_long = [&](const std::string& s, std::size_t offset) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      throw ParseError("expected integer in dimension vector", offset);
    }
    if (used != s.size()) throw ParseError("trailing characters in dimension vector", offset + used);
    return v;
  };
  return {to_long(text.substr(0, comma), 0), to_long(text.substr(comma + 1), comma + 1)};
}

inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  if (text.empty() || text == "0") return {};
  while (pos <= text.size()) {
    const auto next = text.find(',', pos);
    const std::string piece = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(piece, &used);
    } catch (const std::exception&) {
      throw ParseError("expected partition part", pos);
    }
    if (used != piece.size() || v <= 0) throw ParseError("partition parts must be positive integers", pos);
    parts.push_back(v);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  try {
    return Partition(parts);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

inline void report_parse_error(std::ostream& err, const std::string& what, const std::string& input, const ParseError& e) {
  err << "error: cannot parse " << what << ": " << e.what() << "\n  " << input << "\n  "
      << std::string(std::min(e.position(), input.size()), ' ') << "^\n";
}

}  // namespace detail

/// Runs the command line tool. `args` excludes the program name. Output goes
/// to `out` only on success (or on a reported mismatch); diagnostics go to
/// `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point counts of Kronecker quiver Grassmannians over finite fields"};
  app.require_subcommand(1);

  std::string module_text, dim_text, format = "text", at_text;
  bool euler = false, no_cache = false;
  int prime = 2;
  std::string lambda_text, mu_text, nu_text, left_text, right_text;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--no-cache", no_cache, "Disable memoization");
  };

  auto* count_cmd = app.add_subcommand("count", "Count points of Gr_(a,b)(M) as a polynomial in q");
  count_cmd->add_option("-m,--module", module_text, "Module, e.g. \"2*P0 + R(p,[2,1]) + I1\"")->required();
  count_cmd->add_option("-d,--dim", dim_text, "Dimension vector a,b")->required();
  count_cmd->add_option("--at", at_text, "Also evaluate at q = q0");
  count_cmd->add_flag("--euler", euler, "Also print the value at q = 1");
  add_format(count_cmd);

  auto* table_cmd = app.add_subcommand("table", "Counts for every dimension vector of submodules");
  table_cmd->add_option("-m,--module", module_text, "Module")->required();
  add_format(table_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Compare the counts with brute-force enumeration over F_p");
  verify_cmd->add_option("-m,--module", module_text, "Module")->required();
  verify_cmd->add_option("-p,--prime", prime, "Prime p")->required();
  verify_cmd->add_option("-d,--dim", dim_text, "Only check this dimension vector");
  add_format(verify_cmd);

  auto* hall_cmd = app.add_subcommand("hall", "Hall polynomial g^lambda_{nu mu}(x)");
  hall_cmd->add_option("--lambda", lambda_text, "Partition lambda, e.g. 2,1")->required();
  hall_cmd->add_option("--mu", mu_text, "Subgroup type mu")->required();
  hall_cmd->add_option("--nu", nu_text, "Quotient type nu")->required();
  hall_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  auto* homext_cmd = app.add_subcommand("homext", "dim Hom and dim Ext^1 between two modules");
  homext_cmd->add_option("x", left_text, "First module")->required();
  homext_cmd->add_option("y", right_text, "Second module")->required();
  homext_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  std::ostringstream buf;
  auto parse_module = [&](const std::string& text) -> std::optional<KroneckerDescriptor> {
    try {
      return KroneckerDescriptor::parse(text);
    } catch (const ParseError& e) {
      detail::report_parse_error(err, "module", text, e);
      return std::nullopt;
    }
  };

  Engine engine(EngineOptions{.use_closed_forms = true, .use_cache = !no_cache});

  if (count_cmd->parsed()) {
    auto module = parse_module(module_text);
    if (!module) return kParseError;
    std::pair<long, long> ab;
    std::optional<Rational> q0;
    try {
      ab = detail::parse_dim(dim_text);
      if (!at_text.empty()) q0 = detail::parse_rational(at_text);
    } catch (const ParseError& e) {
      detail::report_parse_error(err, at_text.empty() ? "dimension vector" : "argument", at_text.empty() ? dim_text : at_text, e);
      return kParseError;
    }
    const LaurentPoly poly = engine.count(*module, ab.first, ab.second);
    OutputRecord rec{module->to_string(), ab.first, ab.second, poly.to_string('q'), std::nullopt, std::nullopt};
    if (q0) rec.value_at = std::make_pair(detail::rational_str(*q0), detail::rational_str(poly.eval_at(*q0)));
    if (euler) rec.euler = poly.eval_integer(1).str();

    if (format == "json") {
      buf << rec.to_json().dump(2) << "\n";
    } else if (format == "csv") {
      buf << "module,a,b,polynomial,q0,value,euler\n"
          << detail::csv_field(rec.module) << ',' << rec.a << ',' << rec.b << ',' << detail::csv_field(rec.polynomial) << ','
          << (rec.value_at ? rec.value_at->first : "") << ',' << (rec.value_at ? rec.value_at->second : "") << ','
          << rec.euler.value_or("") << "\n";
    } else {
      buf << rec.polynomial << "\n";
      if (rec.value_at) buf << "at q=" << rec.value_at->first << ": " << rec.value_at->second << "\n";
      if (rec.euler) buf << "euler: " << *rec.euler << "\n";
    }
    out << buf.str();
    if (q0 && !detail::is_prime_power(*q0)) {
      err << "warning: q0 = " << detail::rational_str(*q0) << " is not a prime power >= 2\n";
      return kNotPrimePower;
    }
    return kOk;
  }

  if (table_cmd->parsed()) {
    auto module = parse_module(module_text);
    if (!module) return kParseError;
    const DimVector dim = module->dim_vector();
    nlohmann::json entries = nlohmann::json::array();
    std::ostringstream csv, text;
    csv << "module,a,b,polynomial\n";
    const std::string name = module->to_string();
    for (long a = 0; a <= dim.a; ++a)
      for (long b = 0; b <= dim.b; ++b) {
        const std::string poly = engine.count(*module, a, b).to_string('q');
        entries.push_back({{"a", a}, {"b", b}, {"polynomial", poly}});
        csv << detail::csv_field(name) << ',' << a << ',' << b << ',' << detail::csv_field(poly) << "\n";
        text << "(" << a << "," << b << "): " << poly << "\n";
      }
    if (format == "json")
      out << nlohmann::json{{"module", name}, {"dim", {dim.a, dim.b}}, {"entries", entries}}.dump(2) << "\n";
    else if (format == "csv")
      out << csv.str();
    else
      out << text.str();
    return kOk;
  }

  if (verify_cmd->parsed()) {
    auto module = parse_module(module_text);
    if (!module) return kParseError;
    std::optional<std::pair<long, long>> only;
    if (!dim_text.empty()) {
      try {
        only = detail::parse_dim(dim_text);
      } catch (const ParseError& e) {
        detail::report_parse_error(err, "dimension vector", dim_text, e);
        return kParseError;
      }
    }
    if (!oracle::is_prime(prime)) {
      err << "error: " << prime << " is not prime\n";
      return kParseError;
    }
    oracle::MatrixRep rep;
    try {
      rep = oracle::build_rep(*module, prime);
    } catch (const oracle::RealizabilityError& e) {
      err << "error: " << e.what() << "\n";
      return kNotRealizable;
    }
    std::vector<std::pair<long, long>> cells;
    if (only)
      cells.push_back(*only);
    else
      for (long a = 0; a <= rep.dim1; ++a)
        for (long b = 0; b <= rep.dim2; ++b) cells.emplace_back(a, b);
    const auto table = only ? std::vector<std::vector<Integer>>{} : oracle::submodule_table(rep);

    const std::string name = module->to_string();
    nlohmann::json records = nlohmann::json::array();
    std::ostringstream csv, text;
    csv << "module,p,a,b,count,engine,match\n";
    int mismatches = 0;
    for (const auto& [a, b] : cells) {
      const Integer expected = only ? oracle::count_submodules(rep, a, b)
                                    : table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      const Integer got = engine.count(*module, a, b).eval_integer(prime);
      const bool match = got == expected;
      if (!match) ++mismatches;
      records.push_back({{"module", name}, {"p", prime}, {"a", a}, {"b", b}, {"count", expected.str()}, {"engine", got.str()}, {"match", match}});
      csv << detail::csv_field(name) << ',' << prime << ',' << a << ',' << b << ',' << expected << ',' << got << ',' << (match ? "true" : "false") << "\n";
      if (!match) text << "MISMATCH (" << a << "," << b << "): engine " << got << ", brute force " << expected << "\n";
    }
    if (format == "json")
      out << records.dump(2) << "\n";
    else if (format == "csv")
      out << csv.str();
    else {
      out << text.str();
      out << (mismatches == 0 ? "ok" : "FAILED") << ": " << cells.size() - static_cast<std::size_t>(mismatches) << "/" << cells.size()
          << " dimension vectors agree over F_" << prime << "\n";
    }
    return mismatches == 0 ? kOk : kMismatch;
  }

  if (hall_cmd->parsed()) {
    Partition lambda, mu, nu;
    try {
      lambda = detail::parse_partition(lambda_text);
      mu = detail::parse_partition(mu_text);
      nu = detail::parse_partition(nu_text);
    } catch (const ParseError& e) {
      err << "error: cannot parse partition: " << e.what() << "\n";
      return kParseError;
    }
    const std::string poly = hall_polynomial(lambda, nu, mu).to_string('x');
    if (format == "json")
      out << nlohmann::json{{"lambda", lambda.parts()}, {"mu", mu.parts()}, {"nu", nu.parts()}, {"polynomial", poly}}.dump(2) << "\n";
    else if (format == "csv")
      out << "lambda,mu,nu,polynomial\n"
          << detail::csv_field(lambda.to_string()) << ',' << detail::csv_field(mu.to_string()) << ','
          << detail::csv_field(nu.to_string()) << ',' << detail::csv_field(poly) << "\n";
    else
      out << poly << "\n";
    return kOk;
  }

  if (homext_cmd->parsed()) {
    auto x = parse_module(left_text);
    if (!x) return kParseError;
    auto y = parse_module(right_text);
    if (!y) return kParseError;
    long hom = 0, ext = 0;
    try {
      hom = hom_dim(*x, *y);
      ext = ext_dim(*x, *y);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kFailure;
    }
    if (format == "json")
      out << nlohmann::json{{"x", x->to_string()}, {"y", y->to_string()}, {"hom", hom}, {"ext", ext}}.dump(2) << "\n";
    else if (format == "csv")
      out << "x,y,hom,ext\n" << detail::csv_field(x->to_string()) << ',' << detail::csv_field(y->to_string()) << ',' << hom << ',' << ext << "\n";
    else
      out << "hom " << hom << "\next " << ext << "\n";
    return kOk;
  }
  return kFailure;
}

}  // namespace kqg::cli
