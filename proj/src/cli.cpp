#include "parkpat/cli.hpp"

#include "parkpat/bijections.hpp"
#include "parkpat/counting.hpp"
#include "parkpat/errors.hpp"
#include "parkpat/generalized.hpp"
#include "parkpat/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace parkpat {

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kBudget = 3 };

struct Record {
  int n;
  BigInt value;
  std::string method;
  long long elapsed_ms;
};

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what) {}
};

template <class F>
auto parse_arg(const std::string& name, const std::string& text, F&& parse) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw InputError(name, 1, e.column(), e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(name, 1, 1, e.what());
  }
}

Record timed(int n, const std::function<CountResult()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  CountResult r = fn();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return {n, std::move(r.value), method_name(r.method), ms.count()};
}

CountResult count(const std::string& notion, const PatternSet& set, int n) {
  return notion == "pk" ? pk_count(set, n) : pf_count(set, n);
}

nlohmann::json to_json(const Record& r, bool with_time) {
  nlohmann::json j{{"n", r.n}, {"value", to_string(r.value)}, {"method", r.method}};
  if (with_time) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

void emit(std::ostream& out, const std::vector<Record>& rows, const std::string& format, bool with_time,
          const nlohmann::json& header) {
  if (format == "bfile") {
    for (const auto& r : rows) out << r.n << ' ' << to_string(r.value) << '\n';
  } else if (format == "csv") {
    out << "n,value,method" << (with_time ? ",elapsed_ms" : "") << '\n';
    for (const auto& r : rows) {
      out << r.n << ',' << to_string(r.value) << ',' << r.method;
      if (with_time) out << ',' << r.elapsed_ms;
      out << '\n';
    }
  } else {
    nlohmann::json j = header;
    j["terms"] = nlohmann::json::array();
    for (const auto& r : rows) j["terms"].push_back(to_json(r, with_time));
    out << j.dump(2) << '\n';
  }
}

std::vector<std::pair<int, BigInt>> read_bfile(std::istream& in, const std::string& source) {
  std::vector<std::pair<int, BigInt>> terms;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    long long idx;
    std::string value;
    if (!(ss >> idx)) throw InputError(source, lineno, first + 1, "expected an index");
    if (!(ss >> value)) throw InputError(source, lineno, line.size() + 1, "expected a value");
    const auto col = line.find(value, line.find_first_of(" \t", first)) + 1;
    const bool neg = value[0] == '-';
    if (value.size() == (neg ? 1u : 0u) ||
        !std::all_of(value.begin() + (neg ? 1 : 0), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError(source, lineno, col, "value is not an integer");
    std::string rest;
    if (ss >> rest) throw InputError(source, lineno, line.find(rest, col - 1 + value.size()) + 1, "trailing text");
    terms.emplace_back(static_cast<int>(idx), BigInt(value));
  }
  return terms;
}

const std::map<std::string, ClassFamily> kFamilies{
    {"hyposylvester-multi", ClassFamily::HyposylvesterMulti},
    {"metasylvester-multi", ClassFamily::MetasylvesterMulti},
    {"metasylvester-m", ClassFamily::MetasylvesterM},
    {"hypoplactic-m", ClassFamily::HypoplacticM},
    {"hyposylvester-m", ClassFamily::HyposylvesterM},
};

std::string class_method(ClassFamily f) {
  switch (f) {
    case ClassFamily::MetasylvesterMulti: return method_name(Method::Recurrence);
    case ClassFamily::MetasylvesterM: return "path_enumeration";
    default: return method_name(Method::Formula);
  }
}

int run_bijection(const std::string& family, const std::string& direction, const std::string& file,
                  std::istream& in, std::ostream& out) {
  std::ifstream fin;
  std::istream* src = &in;
  const std::string source = file.empty() || file == "-" ? "<stdin>" : file;
  if (source != "<stdin>") {
    fin.open(file);
    if (!fin) throw InputError(file, 0, 0, "cannot open file");
    src = &fin;
  }
  std::string line;
  for (std::size_t lineno = 1; std::getline(*src, line); ++lineno) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(first, last - first + 1);
    try {
      if (direction == "forward") {
        const BlockNotation f = parse_blocks(text);
        out << format_tree(family == "123-132" ? phi_123_132(f) : phi_123_213(f)) << '\n';
      } else {
        const OrderedTree t = parse_tree(text);
        out << format_blocks(family == "123-132" ? psi_123_132(t) : psi_123_213(t)) << '\n';
      }
    } catch (const ParseError& e) {
      throw InputError(source, lineno, first + e.column(), e.what());
    } catch (const std::invalid_argument& e) {
      throw InputError(source, lineno, first + 1, e.what());
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts and bijections for pattern-avoiding parking functions", "parkpat"};
  app.require_subcommand(1);

  std::string notion = "pk", patterns, format = "bfile", family, direction = "forward", file, suite = "all";
  int n = 0, n_max = 8, m = 1;
  bool json = false, with_time = false, verbose = false;

  auto* cmd_count = app.add_subcommand("count", "Count pk_n(P) or pf_n(P)");
  cmd_count->add_option("--notion", notion)->check(CLI::IsMember({"pk", "pf"}))->required();
  cmd_count->add_option("--patterns", patterns)->required();
  cmd_count->add_option("--n", n)->check(CLI::NonNegativeNumber)->required();
  cmd_count->add_flag("--json", json);
  cmd_count->add_flag("--time", with_time, "Include elapsed milliseconds in JSON output");

  auto* cmd_seq = app.add_subcommand("sequence", "Print terms n = 1..n-max");
  cmd_seq->add_option("--notion", notion)->check(CLI::IsMember({"pk", "pf"}))->required();
  cmd_seq->add_option("--patterns", patterns)->required();
  cmd_seq->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber)->required();
  cmd_seq->add_option("--format", format)->check(CLI::IsMember({"bfile", "csv", "json"}));
  cmd_seq->add_flag("--time", with_time);

  auto* cmd_classes = app.add_subcommand("classes", "Count congruence classes of generalized parking functions");
  cmd_classes->add_option("--family", family)->required()->check([](const std::string& s) {
    return kFamilies.count(s) ? std::string() : "unknown family " + s;
  });
  cmd_classes->add_option("--m", m)->check(CLI::PositiveNumber)->required();
  cmd_classes->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber)->required();
  cmd_classes->add_option("--format", format)->check(CLI::IsMember({"bfile", "csv", "json"}));
  cmd_classes->add_flag("--time", with_time);

  auto* cmd_bij = app.add_subcommand("bijection", "Apply a tree bijection to one input per line");
  cmd_bij->add_option("--family", family)->check(CLI::IsMember({"123-132", "123-213"}))->required();
  cmd_bij->add_option("--direction", direction)->check(CLI::IsMember({"forward", "backward"}));
  cmd_bij->add_option("--input", file, "File to read, or - for stdin");

  auto* cmd_verify = app.add_subcommand("verify", "Compare formulas against the brute-force oracles");
  cmd_verify->add_option("--suite", suite)->check(CLI::IsMember({"formulas", "bijections", "classes", "all"}));
  cmd_verify->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  cmd_verify->add_flag("--verbose", verbose);

  auto* cmd_bcheck = app.add_subcommand("bfile-check", "Compare a b-file against computed terms");
  cmd_bcheck->add_option("--notion", notion)->check(CLI::IsMember({"pk", "pf"}))->required();
  cmd_bcheck->add_option("--patterns", patterns)->required();
  cmd_bcheck->add_option("--input", file, "File to read, or - for stdin");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (cmd_count->parsed()) {
      const PatternSet set = parse_arg("--patterns", patterns, parse_pattern_set);
      const Record r = timed(n, [&] { return count(notion, set, n); });
      if (json)
        out << to_json(r, with_time).dump() << '\n';
      else
        out << to_string(r.value) << '\n';
    } else if (cmd_seq->parsed()) {
      const PatternSet set = parse_arg("--patterns", patterns, parse_pattern_set);
      std::vector<Record> rows;
      int status = kOk;
      try {
        for (int k = 1; k <= n_max; ++k) rows.push_back(timed(k, [&] { return count(notion, set, k); }));
      } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        status = kBudget;
      }
      emit(out, rows, format, with_time,
           {{"notion", notion}, {"patterns", format_pattern_set(set)}});
      return status;
    } else if (cmd_classes->parsed()) {
      const ClassFamily fam = kFamilies.at(family);
      const std::uint64_t cap = path_cap_from_env();
      std::vector<Record> rows;
      int status = kOk;
      try {
        for (int k = 1; k <= n_max; ++k)
          rows.push_back(timed(k, [&] { return CountResult{class_count(fam, k, m, cap), Method::Formula}; }));
      } catch (const BudgetExceeded& e) {
        err << "budget: " << e.what() << '\n';
        status = kBudget;
      }
      for (auto& r : rows) r.method = class_method(fam);
      emit(out, rows, format, with_time, {{"family", family}, {"m", m}});
      return status;
    } else if (cmd_bij->parsed()) {
      return run_bijection(family, direction, file, in, out);
    } else if (cmd_verify->parsed()) {
      std::vector<Family> fams;
      if (suite == "formulas" || suite == "all") fams.insert(fams.end(), {Family::PkAllS3Subsets, Family::PfSupported});
      if (suite == "classes" || suite == "all") fams.push_back(Family::Generalized);
      if (suite == "bijections" || suite == "all") fams.push_back(Family::Bijections);
      const auto reports = verify_all(n_max, fams);
      std::size_t bad = 0;
      for (const auto& r : reports) {
        if (r.agree && !verbose) continue;
        bad += !r.agree;
        out << (r.agree ? "ok       " : "MISMATCH ") << r.quantity << " n=" << r.n;
        if (r.m) out << " m=" << *r.m;
        out << " oracle=" << to_string(r.oracle_value) << " formula=" << to_string(r.formula_value) << '\n';
      }
      out << reports.size() << " checks, " << bad << " mismatches\n";
      return bad ? kMismatch : kOk;
    } else if (cmd_bcheck->parsed()) {
      const PatternSet set = parse_arg("--patterns", patterns, parse_pattern_set);
      std::ifstream fin;
      std::istream* src = &in;
      const std::string source = file.empty() || file == "-" ? "<stdin>" : file;
      if (source != "<stdin>") {
        fin.open(file);
        if (!fin) throw InputError(file, 0, 0, "cannot open file");
        src = &fin;
      }
      std::size_t bad = 0;
      const auto terms = read_bfile(*src, source);
      for (const auto& [k, v] : terms) {
        const BigInt want = count(notion, set, k).value;
        if (want != v) {
          ++bad;
          out << "MISMATCH n=" << k << " file=" << to_string(v) << " computed=" << to_string(want) << '\n';
        }
      }
      out << terms.size() << " terms, " << bad << " mismatches\n";
      return bad ? kMismatch : kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace parkpat
