#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "multiconf/io.hpp"

using namespace multiconf;
using nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInvalid = 2, kLimit = 3 };

struct Options {
  std::string input;
  std::uint64_t seed = 0;
  std::string field;
  std::string out;
  bool json = false;
  bool timing = false;
  std::size_t count = 100;
};

std::optional<Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field(o.field);
}

ProblemInput load(const Options& o) {
  std::ifstream in(o.input);
  if (!in) throw InputError({"input: cannot open " + o.input});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_input_text(buffer.str(), field_override(o));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::runtime_error("cannot write " + o.out);
  file << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int run(const std::string& command, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  ordered_json doc;
  doc["command"] = command;
  doc["seed"] = o.seed;
  std::string text;
  bool passed = true;

  if (command == "random-suite") {
    const Field field = field_override(o).value_or(Field::rationals());
    doc["field"] = field.spec();
    doc["count"] = o.count;
    ordered_json instances = ordered_json::array();
    std::size_t failures = 0;
    for (std::size_t k = 0; k < o.count; ++k) {
      const std::uint64_t seed = o.seed + k;
      const RandomInstance inst = random_instance(seed, field);
      const TheoremReport report = verify_theorem(inst.multicomplex, inst.families);
      const GlicciCertificate cert = glicci_chain(inst.multicomplex, inst.families);
      const bool ok = report.passed() && cert.passed();
      if (!ok) ++failures;
      ordered_json entry;
      entry["seed"] = seed;
      entry["n"] = inst.multicomplex.nvars();
      entry["m"] = inst.ring->nvars();
      entry["multicomplex_size"] = inst.multicomplex.size();
      entry["verify"] = report.passed();
      entry["glicci"] = cert.passed();
      entry["biliaison_steps"] = cert.biliaison_count();
      if (!ok) {
        entry["document"] = to_document({field, inst.ring, inst.multicomplex, inst.families});
        if (const auto* f = report.first_failure()) entry["verify_failure"] = f->name + ": " + f->detail;
        if (cert.failure) entry["glicci_failure"] = *cert.failure;
      }
      text += "seed " + std::to_string(seed) + ": n = " + std::to_string(inst.multicomplex.nvars()) +
              ", m = " + std::to_string(inst.ring->nvars()) + ", |M| = " +
              std::to_string(inst.multicomplex.size()) + ", verify " + (report.passed() ? "pass" : "FAIL") +
              ", glicci " + (cert.passed() ? "pass" : "FAIL") + " (" + std::to_string(cert.biliaison_count()) +
              " biliaison steps)\n";
      instances.push_back(entry);
    }
    passed = failures == 0;
    doc["instances"] = instances;
    doc["failures"] = failures;
    text += std::to_string(o.count - failures) + "/" + std::to_string(o.count) + " instances pass\n";
  } else {
    const ProblemInput input = load(o);
    doc["input"] = to_document(input);
    if (command == "verify" || command == "report") {
      const TheoremReport report = verify_theorem(input.multicomplex, input.families);
      doc["verify"] = to_json(report);
      text += "== configuration checks\n" + to_text(report);
      passed = passed && report.passed();
    }
    if (command == "glicci" || command == "report") {
      const GlicciCertificate cert = glicci_chain(input.multicomplex, input.families);
      doc["glicci"] = to_json(cert);
      text += "== glicci certificate\n" + to_text(cert);
      passed = passed && cert.passed();
    }
    if (command == "betti" || command == "report") {
      const BettiComparison betti = compare_betti(input);
      doc["betti"] = to_json(betti);
      text += "== betti numbers\n" + to_text(betti);
      passed = passed && betti.passed();
    }
  }

  doc["passed"] = passed;
  if (o.timing) {
    const double t = seconds_since(start);
    doc["timing_seconds"] = t;
    text += "time: " + std::to_string(t) + " s\n";
  }
  text += passed ? "RESULT: PASS\n" : "RESULT: FAIL\n";
  emit(o, o.json ? doc.dump(2) + "\n" : text);
  return passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multicomplex configuration ideals: structure checks, glicci certificates and Betti numbers"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"verify", "check primary decomposition, Gröbner basis, initial ideal, height, degree and Cohen-Macaulayness"},
      {"glicci", "build and check a glicci certificate"},
      {"betti", "compare the Betti numbers of I(M) and I(M,F)"},
      {"report", "all of the above"},
      {"random-suite", "run verify and glicci on seeded random instances"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "random-suite")
      sub->add_option("--count", o.count, "number of instances")->capture_default_str();
    else
      sub->add_option("--input", o.input, "problem document (JSON)")->required();
    sub->add_option("--seed", o.seed, "seed (random-suite draws instances seed, seed+1, ...)")->capture_default_str();
    sub->add_option("--field", o.field, "q or p:PRIME, overrides the document");
    sub->add_option("--out", o.out, "write the report to a file");
    sub->add_flag("--json", o.json, "emit a JSON report");
    sub->add_flag("--timing", o.timing, "include wall-clock time (reports are otherwise reproducible byte for byte)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalid;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const ResourceLimitExceeded& e) {
    std::cerr << "resource limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input:\n" << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kFail;
  }
}
