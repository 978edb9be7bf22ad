#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"
#include "partlab/series.hpp"

namespace partlab {

enum class CheckStatus { verified, failed };

// One coefficient disagreement: which route of the identity check
// failed, at which q-degree (and z-degree, for bivariate routes), and
// the two values.
struct Discrepancy {
    std::string route;
    int q_degree = 0;
    std::optional<int> z_degree;
    BigInt lhs;
    BigInt rhs;
};

struct VerificationReport {
    std::string id;
    int order = 0;
    CheckStatus status = CheckStatus::failed;
    std::optional<Discrepancy> discrepancy; // set when failed
    long long comparisons = 0;              // coefficient comparisons made
    double elapsed_ms = 0.0;
};

struct IdentityInfo {
    std::string id;
    std::string description;
    int default_order = 0;
    int max_order = 0;
    bool optional_case = false; // excluded from verify_all by default
};

// The registry of all identity cases, in canonical order.
const std::vector<IdentityInfo>& identity_registry();
bool is_known_identity(const std::string& id);

// Check one identity. order = nullopt uses the registry default;
// orders above the registry maximum for that case throw
// FeasibilityError, order < 1 throws DomainError, unknown ids throw
// RegistryError.
VerificationReport verify_identity(const std::string& id,
                                   std::optional<int> order = std::nullopt);

// Check every registry case (skipping optional ones unless asked) at
// its default order, or at min(order, case maximum) when given.
std::vector<VerificationReport> verify_all(
    std::optional<int> order = std::nullopt, bool include_optional = false);

// Self-check of the harness itself: re-runs one identity with a
// deliberately perturbed right-hand side and reports whether the
// engine caught the planted error at the expected degree.
struct SelftestReport {
    bool detected = false;      // the perturbed check failed, as it must
    bool degree_correct = false; // ... at exactly the planted degree
    int expected_degree = 0;
    std::optional<Discrepancy> discrepancy;
};

SelftestReport run_perturbed_selftest();

// Named q-series available for printing: generating functions and
// classical series used across the identity checks.
struct NamedSeries {
    std::string id;
    std::string summary;
};

const std::vector<NamedSeries>& series_catalog();
bool is_known_series(const std::string& id);

// Build one catalog series to the given order. Unknown ids throw
// RegistryError; order < 0 throws DomainError.
TruncatedSeries build_named_series(const std::string& id, int order);

} // namespace partlab
