#include "soire/metrics.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "soire/match.hpp"

#include "json.hpp"

namespace soire {

namespace {

double log2_mpz(const mpz_class& n) {
  long exp;
  double d = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return static_cast<double>(exp) + std::log2(d);
}

// log2 C(n, k) for big n and small k.
double log2_binomial(const mpz_class& n, std::size_t k) {
  if (k == 0) return 0.0;
  if (n < static_cast<unsigned long>(k)) {
    throw SampleOutsideLanguageError(
        "more distinct samples than language words at some length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += log2_mpz(n - static_cast<unsigned long>(i));
  }
  return sum - std::lgamma(static_cast<double>(k) + 1.0) / std::log(2.0);
}

}  // namespace

mpz_class language_size(const Regex& r, const CountOptions& options) {
  int ell = ell_max(r);
  auto counts = count_words(r, ell, options);
  mpz_class total = 0;
  for (int l = 1; l <= ell; ++l) total += counts[l];
  return total;
}

double datacost(const Regex& r, const SampleSet& samples,
                const CountOptions& options) {
  int ell = ell_max(r);
  auto counts = count_words(r, ell, options);

  std::set<Word> distinct(samples.words().begin(), samples.words().end());
  std::map<int, std::size_t> per_length;
  for (const Word& w : distinct) {
    int l = static_cast<int>(w.size());
    if (l > ell) continue;
    if (!matches(r, w)) {
      throw SampleOutsideLanguageError("sample word not in L(r)");
    }
    ++per_length[l];
  }

  double total = 0.0;
  for (int l = 1; l <= ell; ++l) {
    total += 2.0 * std::log2(static_cast<double>(l));
    auto it = per_length.find(l);
    if (it != per_length.end()) {
      total += log2_binomial(counts[l], it->second);
    }
  }
  return total;
}

int len_metric(const Regex& r) {
  int sigma = static_cast<int>(symbols_of(r).size());
  int bits = static_cast<int>(std::ceil(std::log2(static_cast<double>(sigma + 8))));
  return layout_length(r) * bits;
}

int nesting_depth(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kEmpty:
    case RegexKind::kEpsilon:
    case RegexKind::kSymbol:
      return 0;
    case RegexKind::kStar:
    case RegexKind::kPlus:
    case RegexKind::kOpt:
      return nesting_depth(r.child()) + 1;
    default: {
      int best = 0;
      for (const auto& c : r.children()) {
        best = std::max(best, nesting_depth(c));
      }
      return best;
    }
  }
}

MetricsReport compute_metrics(const Regex& r, const Alphabet& alphabet,
                              const SampleSet* samples,
                              const CountOptions& options) {
  MetricsReport report;
  report.expression = print(r, alphabet);
  report.ell_max = ell_max(r);
  report.counts = count_words(r, report.ell_max, options);
  report.language_size = 0;
  for (int l = 1; l <= report.ell_max; ++l) report.language_size += report.counts[l];
  report.len = len_metric(r);
  report.nd = nesting_depth(r);
  if (samples) {
    try {
      report.datacost = datacost(r, *samples, options);
    } catch (const SampleOutsideLanguageError& e) {
      report.datacost_note = e.what();
    }
  } else {
    report.datacost_note = "no samples given";
  }
  return report;
}

std::string report_to_text(const MetricsReport& report) {
  std::ostringstream os;
  os << "expression: " << report.expression << "\n";
  os << "ell_max: " << report.ell_max << "\n";
  os << "language_size: " << report.language_size.get_str() << "\n";
  if (report.datacost) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", *report.datacost);
    os << "datacost: " << buf << "\n";
  } else {
    os << "datacost: n/a (" << report.datacost_note << ")\n";
  }
  os << "len: " << report.len << "\n";
  os << "nd: " << report.nd << "\n";
  return os.str();
}

std::string report_to_json(const MetricsReport& report) {
  nlohmann::json j;
  j["expression"] = report.expression;
  j["ell_max"] = report.ell_max;
  j["language_size"] = report.language_size.get_str();
  if (report.datacost) {
    j["datacost"] = *report.datacost;
  } else {
    j["datacost"] = nullptr;
    j["datacost_note"] = report.datacost_note;
  }
  j["len"] = report.len;
  j["nd"] = report.nd;
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& c : report.counts) counts.push_back(c.get_str());
  j["counts"] = std::move(counts);
  return j.dump();
}

}  // namespace soire
