#include <fstream>
#include <iostream>
#include <memory>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"

#include "soire/infer.hpp"
#include "soire/match.hpp"
#include "soire/metrics.hpp"
#include "soire/samples.hpp"
#include "soire/simplify.hpp"
#include "soire/soa.hpp"
#include "soire/text.hpp"
#include "soire/xml.hpp"

namespace {

using namespace soire;

struct CommonOpts {
  std::string samples_file;
  std::string xml_file;
  std::string element;
  std::string abbrev_file;
  bool dedup = false;
  bool verbose = false;
  bool json = false;
};

SampleSet load_samples(const CommonOpts& opts,
                       std::shared_ptr<Alphabet> alphabet = nullptr) {
  if (!opts.xml_file.empty()) {
    std::ifstream in(opts.xml_file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + opts.xml_file);
    return extract_samples(in, opts.element, std::move(alphabet));
  }
  std::ifstream in(opts.samples_file);
  if (!in) throw std::runtime_error("cannot open " + opts.samples_file);
  return read_samples(in, std::move(alphabet));
}

// Abbreviation files have one "name abbreviation" pair per line; the map must
// be injective. Applied at presentation time only.
std::unordered_map<SymbolId, std::string> load_abbreviations(
    const std::string& path, const Alphabet& alphabet) {
  std::unordered_map<SymbolId, std::string> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::unordered_map<std::string, std::string> reverse;
  std::string name, abbr;
  while (in >> name >> abbr) {
    auto [it, inserted] = reverse.emplace(abbr, name);
    if (!inserted && it->second != name) {
      throw std::runtime_error("abbreviation map is not injective: '" + abbr +
                               "' used twice");
    }
    if (auto id = alphabet.find(name)) out[*id] = abbr;
  }
  return out;
}

int run_infer(const CommonOpts& opts, bool verify) {
  SampleSet samples = load_samples(opts);
  std::size_t total = samples.size();
  SampleSet distinct = samples.deduplicated();
  const SampleSet& working = opts.dedup ? distinct : samples;

  InferOptions infer_opts;
  if (opts.verbose) {
    infer_opts.trace = [](const std::string& line) {
      std::cerr << "trace: " << line << "\n";
    };
  }
  Regex result = infer_soire(working, infer_opts);
  if (working.empty()) {
    std::cerr << "warning: empty sample set, inferred the empty language\n";
  }

  auto abbrev = load_abbreviations(opts.abbrev_file, samples.alphabet());
  std::string text =
      print(result, samples.alphabet(), abbrev.empty() ? nullptr : &abbrev);

  bool verified = true;
  std::size_t misses = 0;
  if (verify) {
    for (const Word& w : samples.words()) {
      if (!matches(result, w)) {
        verified = false;
        ++misses;
      }
    }
  }

  if (opts.json) {
    nlohmann::json j;
    if (!opts.element.empty()) j["element"] = opts.element;
    j["expression"] = text;
    j["sample_count"] = total;
    j["distinct_sample_count"] = distinct.size();
    j["alphabet_size"] = samples.symbol_set().size();
    if (verify) j["verified"] = verified;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
  if (verify && !verified) {
    std::cerr << "verify failed: " << misses << " sample(s) not matched\n";
    return 1;
  }
  return 0;
}

int run_metrics(const std::string& expr, const CommonOpts& opts,
                std::size_t state_cap) {
  auto alphabet = std::make_shared<Alphabet>();
  Regex r = parse(expr, *alphabet);
  SampleSet samples(alphabet);
  bool have_samples = !opts.samples_file.empty() || !opts.xml_file.empty();
  if (have_samples) samples = load_samples(opts, alphabet);
  CountOptions count_opts{.state_limit = state_cap};
  MetricsReport report =
      compute_metrics(r, *alphabet, have_samples ? &samples : nullptr, count_opts);
  if (!report.datacost && have_samples) {
    std::cerr << "note: datacost omitted: " << report.datacost_note << "\n";
  }
  std::cout << (opts.json ? report_to_json(report) + "\n"
                          : report_to_text(report));
  return 0;
}

int run_soa(const CommonOpts& opts) {
  SampleSet samples = load_samples(opts);
  Soa automaton = Soa::build(opts.dedup ? samples.deduplicated() : samples);
  std::cout << automaton.to_dot(samples.alphabet());
  return 0;
}

int run_match(const std::string& expr, const std::string& word_text) {
  Alphabet alphabet;
  Regex r = parse(expr, alphabet);
  Word w = parse_word(word_text, alphabet);
  return matches(r, w) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inference and evaluation of single-occurrence regular "
               "expressions with interleaving"};
  app.require_subcommand(1);

  CommonOpts infer_opts;
  bool verify = false;
  auto* infer_cmd = app.add_subcommand("infer", "Infer an expression from samples");
  auto* samples_opt =
      infer_cmd->add_option("--samples", infer_opts.samples_file, "sample word file");
  auto* xml_opt = infer_cmd->add_option("--xml", infer_opts.xml_file, "XML document");
  infer_cmd->add_option("--element", infer_opts.element,
                        "target element name (with --xml)");
  infer_cmd->add_option("--abbrev", infer_opts.abbrev_file,
                        "symbol abbreviation map file");
  infer_cmd->add_flag("--verify", verify, "check every sample against the result");
  infer_cmd->add_flag("--json", infer_opts.json, "JSON report");
  infer_cmd->add_flag("--dedup", infer_opts.dedup, "collapse duplicate samples");
  infer_cmd->add_flag("--verbose", infer_opts.verbose, "trace conversion branches");
  samples_opt->excludes(xml_opt);

  CommonOpts metrics_opts;
  std::string expr;
  std::size_t state_cap = CountOptions{}.state_limit;
  auto* metrics_cmd =
      app.add_subcommand("metrics", "Evaluate preciseness/conciseness measures");
  metrics_cmd->add_option("--expr", expr, "expression")->required();
  metrics_cmd->add_option("--samples", metrics_opts.samples_file,
                          "sample word file (enables datacost)");
  metrics_cmd->add_option("--xml", metrics_opts.xml_file, "XML document");
  metrics_cmd->add_option("--element", metrics_opts.element, "target element");
  metrics_cmd->add_option("--state-cap", state_cap,
                          "counting automaton state limit");
  metrics_cmd->add_flag("--json", metrics_opts.json, "JSON report");

  CommonOpts soa_opts;
  bool dot = false;
  auto* soa_cmd = app.add_subcommand("soa", "Print the sample automaton");
  soa_cmd->add_option("--samples", soa_opts.samples_file, "sample word file")
      ->required();
  soa_cmd->add_flag("--dot", dot, "DOT output (the only format)");
  soa_cmd->add_flag("--dedup", soa_opts.dedup, "collapse duplicate samples");

  std::string match_expr, match_word;
  auto* match_cmd =
      app.add_subcommand("match", "Test one word (exit 0 = match, 1 = no match)");
  match_cmd->add_option("--expr", match_expr, "expression")->required();
  match_cmd->add_option("--word", match_word, "whitespace-separated word")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (infer_cmd->parsed()) {
      if (infer_opts.samples_file.empty() && infer_opts.xml_file.empty()) {
        std::cerr << "error: infer needs --samples or --xml\n";
        return 2;
      }
      if (!infer_opts.xml_file.empty() && infer_opts.element.empty()) {
        std::cerr << "error: --xml needs --element\n";
        return 2;
      }
      return run_infer(infer_opts, verify);
    }
    if (metrics_cmd->parsed()) return run_metrics(expr, metrics_opts, state_cap);
    if (soa_cmd->parsed()) return run_soa(soa_opts);
    if (match_cmd->parsed()) return run_match(match_expr, match_word);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
