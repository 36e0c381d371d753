// Command-line front end: cmdev <command> <file> [flags].
// Exit status: 0 all assertions pass, 1 a mathematical assertion failed,
// 2 usage, input or resource error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cmdev/report.hpp"

namespace {

struct Options {
  std::string file;
  std::uint64_t seed = 0;
  std::string order;
  int degree_cap = cmdev::kDefaultDegreeCap;
  int trials = 0;
  std::string suite;
  bool text = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cmdev::InputError(path, "cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const cmdev::Json& doc, bool text) {
  if (text)
    std::cout << cmdev::render_text(doc);
  else
    std::cout << doc.dump(2) << "\n";
}

int fail_with(const std::string& command, const std::string& kind, const std::string& message, bool text, int code) {
  cmdev::Json doc{{"schema", cmdev::kSchemaVersion}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
  emit(doc, text);
  std::cerr << "cmdev: " << message << "\n";
  return code;
}

int run(const std::string& command, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  try {
    cmdev::ScopedDegreeCap cap(o.degree_cap);
    std::optional<std::string> order;
    if (!o.order.empty()) order = o.order;
    const cmdev::InputDescription input = cmdev::parse_input(read_file(o.file), order);
    const cmdev::PresentedModule m = input.module();
    cmdev::Json doc = cmdev::document_header(command, input, o.seed);
    int code = 0;
    if (command == "analyze") {
      doc["result"] = cmdev::analyze_json(m, o.seed);
    } else if (command == "hilbert") {
      doc["result"] = cmdev::hilbert_command_json(m);
    } else if (command == "filtration") {
      doc["result"] = cmdev::filtration_json(m, o.seed);
    } else if (command == "csop") {
      doc["result"] = cmdev::csop_json(m, o.seed);
      if (!doc["result"]["verified"].get<bool>()) code = 1;
    } else {
      const int trials = o.trials > 0 ? o.trials : (o.suite == "bertini" ? 10 : 3);
      doc["trials"] = trials;
      const cmdev::SuiteResult r = cmdev::run_suite(o.suite, m, o.seed, trials);
      doc["result"] = r.to_json();
      if (!r.passed) code = 1;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    doc["timing"] = {{"seconds", seconds}};
    emit(doc, o.text);
    return code;
  } catch (const cmdev::ParseError& e) {
    return fail_with(command, "parse", e.what(), o.text, 2);
  } catch (const cmdev::InputError& e) {
    return fail_with(command, "input", e.what(), o.text, 2);
  } catch (const cmdev::ResourceError& e) {
    return fail_with(command, "resource", e.what(), o.text, 2);
  } catch (const cmdev::SearchFailure& e) {
    return fail_with(command, "search", e.what(), o.text, 2);
  } catch (const cmdev::PreconditionError& e) {
    return fail_with(command, "precondition", e.what(), o.text, 2);
  } catch (const cmdev::Error& e) {
    // an internal certificate or invariant did not hold
    return fail_with(command, "assertion", e.what(), o.text, 1);
  } catch (const std::bad_alloc&) {
    return fail_with(command, "resource", "out of memory", o.text, 2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unmixed degrees and Cohen-Macaulay deviated sequences of graded modules"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "module description (JSON)")->required();
    sub->add_option("--seed", o.seed, "seed for the randomized searches")->capture_default_str();
    sub->add_option("--order", o.order, "monomial order: grevlex, grlex or lex");
    sub->add_option("--degree-cap", o.degree_cap, "Gröbner degree cap")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--trials", o.trials, "seeds (invariance) or trials (bertini)")->check(CLI::PositiveNumber);
    auto* json = sub->add_flag("--json", "JSON output (default)");
    auto* text = sub->add_flag("--text", o.text, "flat text output");
    json->excludes(text);
  };
  std::vector<std::pair<std::string, std::string>> commands{
      {"analyze", "dimension, depth, degrees, classification, deviated sequence"},
      {"hilbert", "Hilbert series and Gröbner basis"},
      {"filtration", "dimension filtration"},
      {"csop", "C-system of parameters with certificates"},
      {"verify", "run a verification suite"}};
  std::string command;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "verify")
      sub->add_option("--suite", o.suite, "suite to run")->required()->check(CLI::IsMember(cmdev::suite_names()));
    sub->callback([&command, n = name] { command = n; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return run(command, o);
}
