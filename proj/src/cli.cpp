#include "lcsurf/cli.hpp"

#include "lcsurf/error.hpp"
#include "lcsurf/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace lcsurf::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json error_json(const Error& e) {
  json body{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (auto* pe = dynamic_cast<const ParseError*>(&e)) {
    if (pe->line()) body["line"] = *pe->line();
    if (pe->column()) body["column"] = *pe->column();
    if (!pe->expected().empty()) body["expected"] = pe->expected();
  }
  return json{{"error", body}};
}

int exit_code(const Error& e) {
  return e.kind() == ErrorKind::ParseError ? kExitParse : kExitValidation;
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot read germ file \"" + path + "\"");
  buf << file.rdbuf();
  return buf.str();
}

Rat parse_arg_rat(const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const BadParameters& e) {
    throw ParseError(e.what(), {}, {}, "rational a/b");
  }
}

std::vector<Rat> parse_coeff_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_arg_rat(item));
  if (!text.empty() && text.back() == ',') out.push_back(parse_arg_rat(""));
  return out;
}

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  return no_color == nullptr || *no_color == '\0';
}

void summarize(const json& report, std::ostream& err) {
  const bool color = use_color();
  for (const auto& [key, value] : report.items()) {
    if (key == "input") continue;
    if (color) err << "\033[36m";
    err << key;
    if (color) err << "\033[0m";
    err << ": ";
    if (value.is_array())
      err << value.size() << " entries";
    else if (value.is_object())
      err << "{" << value.size() << " fields}";
    else
      err << value.dump();
    err << '\n';
  }
}

// Result of one germ-file command: exit status plus the JSON to print.
struct Outcome {
  int code = kExitOk;
  json body;
};

template <class F>
Outcome guarded(F&& f) {
  try {
    return {kExitOk, f()};
  } catch (const Error& e) {
    return {exit_code(e), error_json(e)};
  } catch (const std::exception& e) {
    return {kExitValidation, json{{"error", {{"kind", "InternalError"}, {"message", e.what()}}}}};
  }
}

Outcome report_directory(const fs::path& dir, std::int64_t m_max) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  // The library is pure, so files are evaluated concurrently; output order
  // follows the sorted file list.
  std::vector<std::future<Outcome>> pending;
  for (const auto& path : files) {
    pending.push_back(std::async(std::launch::async, [path, m_max] {
      return guarded([&] {
        std::istringstream none;
        return report::full(parse_germ_file(read_input(path.string(), none)), m_max);
      });
    }));
  }
  Outcome all;
  json reports = json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome one = pending[i].get();
    all.code = std::max(all.code, one.code);
    json entry{{"file", files[i].filename().string()}};
    if (one.code == kExitOk)
      entry["report"] = std::move(one.body);
    else
      entry.update(one.body);
    reports.push_back(std::move(entry));
  }
  all.body = json{{"command", "report"}, {"reports", reports}};
  return all;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact invariants of log canonical surface germs", "lcsurf"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Print a human-readable summary on stderr");

  std::string path;
  std::int64_t m_max = report::kDefaultMaxM;

  auto* classify = app.add_subcommand("classify", "Taxonomy of a germ or non-normal glued germ");
  classify->add_option("file", path, "Germ file, or - for stdin")->required();
  auto* discrepancy = app.add_subcommand("discrepancy", "Solved coefficients and discrepancies");
  discrepancy->add_option("file", path, "Germ file, or - for stdin")->required();
  auto* residue = app.add_subcommand("residue", "Residue degree table for m = 1..M");
  residue->add_option("file", path, "Germ file, or - for stdin")->required();
  residue->add_option("--m-max", m_max, "Largest m")->capture_default_str();
  auto* glue = app.add_subcommand("glue", "Gluing criteria for a glued germ");
  glue->add_option("file", path, "Germ file, or - for stdin")->required();
  glue->add_option("--m-max", m_max, "Largest m")->capture_default_str();
  std::string coeffs;
  auto* failure = app.add_subcommand("failure-m", "Least m where the multi-branch residue fails");
  failure->add_option("--coeffs", coeffs, "Comma-separated coefficients, e.g. 1/2,1/3")
      ->required();
  std::string c_text;
  std::int64_t level = 2;
  auto* stdcoeff = app.add_subcommand("stdcoeff", "Standard-coefficient checks for c at level m");
  stdcoeff->add_option("c", c_text, "Coefficient a/b")->required();
  stdcoeff->add_option("m", level, "Level m >= 2")->required();
  auto* full = app.add_subcommand("report", "Every applicable analysis");
  full->add_option("path", path, "Germ file, directory of *.json files, or - for stdin")
      ->required();
  full->add_option("--m-max", m_max, "Largest m")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_json(ParseError(e.what())).dump(2) << '\n';
    return kExitParse;
  }

  auto load = [&] { return parse_germ_file(read_input(path, in)); };
  Outcome result;
  if (*full && path != "-" && fs::is_directory(path)) {
    result = report_directory(path, m_max);
  } else {
    result = guarded([&]() -> json {
      if (*classify) return report::classify(load());
      if (*discrepancy) return report::discrepancy(load());
      if (*residue) return report::residue(load(), m_max);
      if (*glue) return report::glue(load(), m_max);
      if (*failure) return report::failure_m(parse_coeff_list(coeffs));
      if (*stdcoeff) return report::stdcoeff(parse_arg_rat(c_text), level);
      return report::full(load(), m_max);
    });
  }
  out << result.body.dump(2) << '\n';
  if (verbose) summarize(result.body, err);
  return result.code;
}

}  // namespace lcsurf::cli
