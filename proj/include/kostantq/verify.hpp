#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kostantq/qpolynomial.hpp"
#include "kostantq/root_systems.hpp"

namespace kostantq {
namespace verify {

enum class Method { oracle, recurrence, genfun, closed_form };

std::string method_name(Method m);  // oracle | recurrence | genfun | closed
Method method_from_name(const std::string& name);
std::vector<Method> all_methods();

struct Discrepancy {
    int rank = 0;
    Method first = Method::oracle;
    Method second = Method::oracle;
    QPolynomial first_value;
    QPolynomial second_value;
    std::string detail;  // extra context, e.g. which family in a sequence check
};

struct SkipNote {
    Method method = Method::oracle;
    int from_rank = 0;  // 0 = whole range
    int to_rank = 0;
    std::string reason;
};

/// Outcome of one cross-method comparison run. pass holds exactly when no
/// discrepancy was found; identical inputs serialize byte-identically.
struct VerificationReport {
    std::string family;  // "A".."D", or "q1" for the integer-sequence check
    int min_rank = 0;
    int max_rank = 0;
    std::vector<Method> methods;
    bool pass = true;
    std::optional<Discrepancy> discrepancy;
    std::vector<SkipNote> skips;

    std::string to_json_string(int indent = 2) const;
    std::string to_string() const;
};

struct Options {
    /// Largest rank the brute-force oracle runs at; 0 picks the family
    /// default (16 for A, 12 otherwise). Larger ranks are skipped with a
    /// recorded note, never failed.
    int oracle_budget = 0;

    /// Optional wall-clock guard: once cumulative oracle time passes this
    /// many seconds, remaining oracle ranks are skipped with a note. Disabled
    /// (0) by default so that reports stay deterministic.
    double oracle_seconds = 0.0;

    /// Test hook: replaces a method's evaluator.
    std::map<Method, std::function<QPolynomial(const LieType&)>> overrides;
};

int default_oracle_budget(Family f);

/// Pairwise exact comparison of the selected methods at every rank from the
/// family minimum to max_rank; each method enters at the smallest rank it is
/// defined for. Failures are data (a report with pass = false carrying the
/// minimal failing rank and both polynomials), not errors.
VerificationReport verify_family(Family f, int max_rank, const std::vector<Method>& methods,
                                 const Options& options = {});

/// Checks the q = 1 integer sequences for B, C, D: the recurrence values
/// evaluated at 1 against the integer expansion of the q = 1 specialized
/// series. max_rank must be >= 2.
VerificationReport verify_q1_sequences(int max_rank);

}  // namespace verify
}  // namespace kostantq
