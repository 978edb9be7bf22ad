// Acceptance checks for the whole engine: eleven end-to-end criteria,
// each printed as one PASS/FAIL line with its elapsed time. The exit
// code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <partlab/concave.hpp>
#include <partlab/identities.hpp>
#include <partlab/involution.hpp>
#include <partlab/stats.hpp>

using namespace partlab;

namespace {

int failures = 0;

// limit_ms = 0 means untimed (only correctness is enforced).
void criterion(int number, const char* what, double limit_ms,
               const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& ex) {
        note = std::string("; threw: ") + ex.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (limit_ms > 0 && ms > limit_ms) {
        ok = false;
        note += "; over the time limit";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s - %s (%.0f ms%s)\n", number,
                ok ? "PASS" : "FAIL", what, ms, note.c_str());
    std::fflush(stdout);
}

bool worked_examples() {
    return evaluate_statistic("F", 6) == 3 && evaluate_statistic("F", 7) == 5 &&
           evaluate_statistic("UF_odd", 7) == 5 &&
           evaluate_statistic("UF_even", 7) == 5 &&
           evaluate_statistic("UF_odd", 6) == 4 &&
           evaluate_statistic("UF_even", 6) == 4;
}

bool phi_bijection() {
    auto image = [](std::vector<int> a, std::vector<int> b) {
        return phi(ConcaveComposition(std::move(a), std::move(b))).parts();
    };
    if (image({2, 1, 0}, {2, 1, 0}) != std::vector<int>{2, 2, 2}) return false;
    if (image({2, 1}, {2, 1}) != std::vector<int>{3, 3}) return false;
    if (image({3, 2, 0}, {2, 1, 0}) != std::vector<int>{4, 4}) return false;

    for (long long n = 1; n <= 25; ++n) {
        auto comps = concave_even_compositions(n);
        std::set<std::vector<int>> images;
        for (const auto& c : comps) {
            Partition p = phi(c);
            if (p.weight() != n) return false;
            if (is_proper(p)) return false;
            if (!images.insert(p.parts()).second) return false;
            if (!(phi_inverse(p) == c)) return false;
        }
        if (evaluate_statistic("IMPR", n) !=
            BigInt(static_cast<long long>(comps.size())))
            return false;
    }
    return true;
}

bool generating_functions() {
    auto flushed = build_named_series("flushed-gf", 30);
    auto concave = build_named_series("concave-even-gf", 30);
    for (long long n = 1; n <= 30; ++n) {
        BigInt f = evaluate_statistic("F", n);
        if (flushed.coeff(static_cast<int>(n)) != f) return false;
        if (evaluate_statistic("PR", n) != f) return false;
        auto ce = concave_even_compositions(n).size();
        if (concave.coeff(static_cast<int>(n)) !=
            BigInt(static_cast<long long>(ce)))
            return false;
    }
    return true;
}

bool involution_harnesses() {
    return run_involution_harness(InvolutionKind::alpha, 20, false).ok &&
           run_involution_harness(InvolutionKind::alpha1, 20, false).ok &&
           run_involution_harness(InvolutionKind::alpha2, 20, false).ok &&
           run_involution_harness(InvolutionKind::alpha, 15, true).ok;
}

bool registry_defaults() {
    auto reports = verify_all();
    if (reports.size() != 35) return false;
    for (const auto& rep : reports)
        if (rep.status != CheckStatus::verified) return false;
    return true;
}

bool verified_at(const char* id, int order) {
    return verify_identity(id, order).status == CheckStatus::verified;
}

bool selftest_detects() {
    SelftestReport rep = run_perturbed_selftest();
    if (!(rep.detected && rep.degree_correct && rep.expected_degree == 3))
        return false;
    int status = std::system(PARTLAB_CLI_PATH " selftest > /dev/null 2>&1");
    return status != -1 && WIFEXITED(status) && WEXITSTATUS(status) != 0;
}

} // namespace

int main() {
    criterion(1, "flushed counts at 6 and 7 and the odd/even unflushed splits",
              1000.0, worked_examples);
    criterion(2,
              "phi maps the pinned examples and is a bijection onto improper "
              "partitions for n <= 25",
              120000.0, phi_bijection);
    criterion(3,
              "flushed and concave generating functions match enumeration, and "
              "PR(n) = F(n), for n <= 30",
              120000.0, generating_functions);
    criterion(4,
              "involution harnesses pass to weight 20, alpha z-refined to 15",
              300000.0, involution_harnesses);
    criterion(5, "all 35 non-optional identity cases verify at default orders",
              300000.0, registry_defaults);
    criterion(6, "cor3.8-ramanujan verifies at order 100", 30000.0,
              [] { return verified_at("cor3.8-ramanujan", 100); });
    criterion(7, "thm3.3 verifies at order 30 (all m)", 120000.0,
              [] { return verified_at("thm3.3", 30); });
    criterion(8, "thm3.4-QE verifies at order 40", 0.0,
              [] { return verified_at("thm3.4-QE", 40); });
    criterion(9, "thm3.1-counts verifies at order 35", 0.0,
              [] { return verified_at("thm3.1-counts", 35); });
    criterion(10, "thm4.5-parity at order 30 and cor4.4-unflushed-m-parts at 25",
              0.0, [] {
                  return verified_at("thm4.5-parity", 30) &&
                         verified_at("cor4.4-unflushed-m-parts", 25);
              });
    criterion(11, "a planted error is caught at its degree with nonzero exit",
              0.0, selftest_detects);

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures;
}
