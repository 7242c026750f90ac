#pragma once

#include <optional>
#include <string>

#include "soire/count.hpp"
#include "soire/samples.hpp"
#include "soire/text.hpp"

namespace soire {

struct SampleOutsideLanguageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sum of distinct-word counts over lengths 1..ell_max(r).
mpz_class language_size(const Regex& r, const CountOptions& options = {});

/// Per-length binomial description cost of S given r, in bits:
/// sum over l of 2*log2(l) + log2(C(|L^l(r)|, |S^l|)), with |S^l| counting
/// distinct sample words. Every distinct sample of length <= ell_max must be
/// in L(r), otherwise SampleOutsideLanguageError is thrown.
double datacost(const Regex& r, const SampleSet& samples,
                const CountOptions& options = {});

/// n * ceil(log2(|Sigma| + 8)) where n is the canonical token count
/// (symbols, operators, explicit concatenation dots, printed parentheses).
int len_metric(const Regex& r);

/// Nesting depth of the unary operators.
int nesting_depth(const Regex& r);

struct MetricsReport {
  std::string expression;
  int ell_max = 0;
  mpz_class language_size;
  std::optional<double> datacost;
  std::string datacost_note;  // set when datacost is omitted
  int len = 0;
  int nd = 0;
  std::vector<mpz_class> counts;  // counts[0..ell_max]
};

MetricsReport compute_metrics(const Regex& r, const Alphabet& alphabet,
                              const SampleSet* samples,
                              const CountOptions& options = {});

std::string report_to_text(const MetricsReport& report);
std::string report_to_json(const MetricsReport& report);

}  // namespace soire
