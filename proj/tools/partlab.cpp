// partlab: exact partition combinatorics from the command line.
//
// Commands: count, enumerate, verify, involution, bijection, series,
// selftest. Every run is deterministic; --format json swaps the human
// text for one JSON document on stdout. Exit status: 0 on success,
// 1 when a verification check fails, 2 on usage or domain errors.

#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <partlab/concave.hpp>
#include <partlab/enumerate.hpp>
#include <partlab/errors.hpp>
#include <partlab/identities.hpp>
#include <partlab/involution.hpp>
#include <partlab/partition.hpp>
#include <partlab/stats.hpp>

namespace {

using json = nlohmann::json;
using namespace partlab;

constexpr long long kEnumerateCap = 40;
constexpr long long kBijectionCap = 35;

std::string format_parts(const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += ")";
    return out;
}

std::string format_triple(const SignedTriple& t) {
    return "(" + format_parts(t.lambda) + "," + format_parts(t.mu) + ")";
}

std::string sign_str(int s) { return s >= 0 ? "+1" : "-1"; }

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json discrepancy_json(const std::optional<Discrepancy>& d) {
    if (!d) return nullptr;
    json j{{"route", d->route},
           {"q_degree", d->q_degree},
           {"lhs", d->lhs.str()},
           {"rhs", d->rhs.str()}};
    j["z_degree"] = d->z_degree ? json(*d->z_degree) : json(nullptr);
    return j;
}

json report_json(const VerificationReport& r) {
    return json{{"id", r.id},
                {"order", r.order},
                {"status", r.status == CheckStatus::verified ? "verified" : "failed"},
                {"comparisons", r.comparisons},
                {"elapsed_ms", r.elapsed_ms},
                {"discrepancy", discrepancy_json(r.discrepancy)}};
}

void print_report_line(const VerificationReport& r) {
    std::cout << r.id << " @" << r.order << ": ";
    if (r.status == CheckStatus::verified) {
        std::cout << "verified (" << r.comparisons << " comparisons, "
                  << r.elapsed_ms << " ms)\n";
        return;
    }
    std::cout << "FAILED";
    if (r.discrepancy) {
        const auto& d = *r.discrepancy;
        std::cout << " route=" << d.route << " at q^" << d.q_degree;
        if (d.z_degree) std::cout << " z^" << *d.z_degree;
        std::cout << ": lhs=" << d.lhs.str() << " rhs=" << d.rhs.str();
    }
    std::cout << "\n";
}

// ---- count ----

int run_count(bool list, const std::string& stat, std::optional<long long> n,
              std::optional<long long> m, bool as_json) {
    if (list) {
        if (as_json) {
            json items = json::array();
            for (const auto& s : statistic_registry())
                items.push_back(json{{"key", s.key},
                                     {"summary", s.summary},
                                     {"takes_m", s.takes_m},
                                     {"signed", s.is_signed}});
            emit(json{{"command", "count"}, {"statistics", items}});
        } else {
            for (const auto& s : statistic_registry()) {
                std::cout << s.key;
                if (s.takes_m) std::cout << " [--m]";
                if (s.is_signed) std::cout << " [signed]";
                std::cout << "  " << s.summary << "\n";
            }
        }
        return 0;
    }
    if (stat.empty() || !n)
        throw UsageError("count needs a statistic key and --n (or --list)");
    BigInt value = evaluate_statistic(stat, *n, m);
    if (as_json) {
        json doc{{"command", "count"}, {"stat", stat}, {"n", *n},
                 {"value", value.str()}};
        doc["m"] = m ? json(*m) : json(nullptr);
        emit(doc);
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

// ---- enumerate ----

int run_enumerate(const std::string& cls, long long n, bool as_json) {
    if (n < 0) throw DomainError("--n must be nonnegative");
    if (n > kEnumerateCap)
        throw FeasibilityError("enumeration is capped at n <= " +
                               std::to_string(kEnumerateCap));
    std::vector<std::string> items;
    if (cls == "concave-even") {
        for (const auto& c : concave_even_compositions(n))
            items.push_back(c.display());
    } else {
        std::function<bool(const Partition&)> keep;
        if (cls == "partitions") keep = [](const Partition&) { return true; };
        else if (cls == "distinct")
            keep = [](const Partition& p) { return p.has_distinct_parts(); };
        else if (cls == "flushed") keep = is_flushed;
        else if (cls == "unflushed")
            keep = [](const Partition& p) { return !is_flushed(p); };
        else if (cls == "proper") keep = is_proper;
        else if (cls == "improper")
            keep = [](const Partition& p) { return !is_proper(p); };
        else
            throw UsageError(
                "unknown class '" + cls +
                "' (partitions, distinct, flushed, unflushed, proper, "
                "improper, concave-even)");
        for_each_partition(n, Constraints{}, [&](const std::vector<int>& parts) {
            Partition p(parts);
            if (keep(p)) items.push_back(format_parts(parts));
            return true;
        });
    }
    if (as_json) {
        emit(json{{"command", "enumerate"},
                  {"class", cls},
                  {"n", n},
                  {"count", items.size()},
                  {"items", items}});
    } else {
        for (const auto& s : items) std::cout << s << "\n";
    }
    return 0;
}

// ---- verify ----

int run_verify(const std::string& id, bool all, std::optional<int> order,
               bool include_optional, bool as_json) {
    if (all == !id.empty())
        throw UsageError("verify needs exactly one of an identity id or --all");
    if (all) {
        auto reports = verify_all(order, include_optional);
        bool ok = true;
        for (const auto& r : reports)
            if (r.status != CheckStatus::verified) ok = false;
        if (as_json) {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            emit(arr);
        } else {
            long long verified = 0;
            for (const auto& r : reports) {
                print_report_line(r);
                if (r.status == CheckStatus::verified) ++verified;
            }
            std::cout << reports.size() << " cases: " << verified
                      << " verified, " << (reports.size() - verified)
                      << " failed\n";
        }
        return ok ? 0 : 1;
    }
    VerificationReport r = verify_identity(id, order);
    if (as_json) emit(report_json(r));
    else print_report_line(r);
    return r.status == CheckStatus::verified ? 0 : 1;
}

// ---- involution ----

int run_involution(const std::string& kind_str, long long max_weight,
                   std::optional<long long> trace_weight, bool z_refined,
                   bool as_json) {
    auto kind = parse_kind(kind_str);
    if (!kind)
        throw UsageError("unknown involution '" + kind_str +
                         "' (alpha, alpha1, alpha2)");
    HarnessReport rep = run_involution_harness(*kind, max_weight, z_refined);

    json trace_items = json::array();
    std::vector<std::string> trace_lines;
    if (trace_weight) {
        if (*trace_weight < 0 || *trace_weight > 60)
            throw FeasibilityError("--trace weight must be in 0..60");
        for (const auto& t : enumerate_triples(*kind, *trace_weight)) {
            int sign = triple_sign(*kind, t);
            auto image = apply_involution(*kind, t);
            if (as_json) {
                json item{{"triple", format_triple(t)}, {"sign", sign},
                          {"fixed", !image.has_value()}};
                if (image) {
                    item["image"] = format_triple(*image);
                    item["image_sign"] = triple_sign(*kind, *image);
                } else {
                    item["image"] = nullptr;
                    item["image_sign"] = nullptr;
                }
                trace_items.push_back(item);
            } else if (image) {
                trace_lines.push_back(format_triple(t) + " sign=" + sign_str(sign) +
                                      " -> " + format_triple(*image) + " sign=" +
                                      sign_str(triple_sign(*kind, *image)));
            } else {
                trace_lines.push_back(format_triple(t) + " sign=" +
                                      sign_str(sign) + " fixed");
            }
        }
    }

    if (as_json) {
        json rows = json::array();
        for (const auto& row : rep.rows)
            rows.push_back(json{{"weight", row.weight},
                                {"triples", row.triples},
                                {"signed_sum", row.signed_sum.str()},
                                {"fixed_sum", row.fixed_sum.str()},
                                {"series_all", row.series_all_coeff.str()},
                                {"series_fixed", row.series_fixed_coeff.str()},
                                {"structure_ok", row.structure_ok},
                                {"sums_ok", row.sums_ok},
                                {"refined_ok", row.refined_ok}});
        json doc{{"command", "involution"},
                 {"kind", kind_name(*kind)},
                 {"max_weight", rep.max_weight},
                 {"z_refined", rep.z_refined},
                 {"ok", rep.ok},
                 {"first_problem", rep.first_problem},
                 {"rows", rows}};
        if (trace_weight) {
            doc["trace_weight"] = *trace_weight;
            doc["trace"] = trace_items;
        }
        emit(doc);
    } else {
        std::cout << "involution " << kind_name(*kind) << ", weights 0.."
                  << rep.max_weight << (rep.z_refined ? ", z-refined" : "")
                  << "\n";
        for (const auto& row : rep.rows) {
            std::cout << "w=" << row.weight << ": " << row.triples
                      << " triples, signed=" << row.signed_sum.str()
                      << " fixed=" << row.fixed_sum.str() << " series="
                      << row.series_all_coeff.str() << "/"
                      << row.series_fixed_coeff.str() << " "
                      << (row.structure_ok && row.sums_ok && row.refined_ok
                              ? "ok"
                              : "PROBLEM")
                      << "\n";
        }
        std::cout << (rep.ok ? "harness OK" : "harness FAILED: " + rep.first_problem)
                  << "\n";
        if (trace_weight) {
            std::cout << "trace, weight " << *trace_weight << ":\n";
            for (const auto& line : trace_lines) std::cout << "  " << line << "\n";
        }
    }
    return rep.ok ? 0 : 1;
}

// ---- bijection ----

int run_bijection(const std::string& map_name, long long n, bool check_inverse,
                  bool show, bool as_json) {
    if (map_name != "phi")
        throw UsageError("unknown bijection '" + map_name + "' (phi)");
    if (n < 0) throw DomainError("--n must be nonnegative");
    if (n > kBijectionCap)
        throw FeasibilityError("bijection demo is capped at n <= " +
                               std::to_string(kBijectionCap));

    auto comps = concave_even_compositions(n);
    std::set<std::vector<int>> images;
    std::vector<std::pair<std::string, std::string>> pairs;
    bool verified = true;
    long long mapped = 0;
    for (const auto& c : comps) {
        if (c.empty()) continue; // weight-0 edge: phi acts on nonempty ones
        Partition p = phi(c);
        ++mapped;
        if (p.weight() != n || is_proper(p)) verified = false;
        if (!images.insert(p.parts()).second) verified = false; // injectivity
        if (check_inverse && !(phi_inverse(p) == c)) verified = false;
        if (show) pairs.emplace_back(c.display(), format_parts(p.parts()));
    }
    BigInt improper_count = evaluate_statistic("IMPR", n);
    if (improper_count != mapped) verified = false; // counting surjectivity

    if (as_json) {
        json doc{{"command", "bijection"},
                 {"map", "phi"},
                 {"n", n},
                 {"compositions", mapped},
                 {"improper_partitions", improper_count.str()},
                 {"verified", verified},
                 {"inverse_checked", check_inverse}};
        if (show) {
            json arr = json::array();
            for (const auto& [from, to] : pairs)
                arr.push_back(json{{"composition", from}, {"image", to}});
            doc["pairs"] = arr;
        }
        emit(doc);
    } else {
        if (show)
            for (const auto& [from, to] : pairs)
                std::cout << from << " -> " << to << "\n";
        std::cout << "phi: " << mapped << " compositions of " << n << " -> "
                  << improper_count.str() << " improper partitions, "
                  << (verified ? "bijection verified" : "MISMATCH")
                  << (check_inverse ? " (inverse round-trip checked)" : "")
                  << "\n";
    }
    return verified ? 0 : 1;
}

// ---- series ----

int run_series(bool list, const std::string& id, std::optional<int> order,
               bool as_json) {
    if (list) {
        if (as_json) {
            json items = json::array();
            for (const auto& s : series_catalog())
                items.push_back(json{{"id", s.id}, {"summary", s.summary}});
            emit(json{{"command", "series"}, {"catalog", items}});
        } else {
            for (const auto& s : series_catalog())
                std::cout << s.id << "  " << s.summary << "\n";
        }
        return 0;
    }
    if (id.empty() || !order)
        throw UsageError("series needs a series id and --order (or --list)");
    TruncatedSeries s = build_named_series(id, *order);
    if (as_json) {
        json coeffs = json::array();
        for (const auto& c : s.coefficients()) coeffs.push_back(c.str());
        emit(json{{"command", "series"},
                  {"id", id},
                  {"order", *order},
                  {"coefficients", coeffs}});
    } else {
        std::cout << s.str() << "\n";
    }
    return 0;
}

// ---- selftest ----

int run_selftest(bool as_json) {
    SelftestReport r = run_perturbed_selftest();
    bool passed = r.detected && r.degree_correct;
    if (as_json) {
        emit(json{{"command", "selftest"},
                  {"detected", r.detected},
                  {"degree_correct", r.degree_correct},
                  {"expected_degree", r.expected_degree},
                  {"discrepancy", discrepancy_json(r.discrepancy)}});
    } else {
        if (passed) {
            std::cout << "selftest: planted discrepancy caught at q^"
                      << r.discrepancy->q_degree << " (expected q^"
                      << r.expected_degree
                      << "); failure detection works, exiting 1\n";
        } else {
            std::cout << "selftest FAILED: the planted discrepancy was "
                      << (r.detected ? "caught at the wrong degree"
                                     : "not detected")
                      << "\n";
        }
    }
    // The perturbed identity must fail; surfacing that as a nonzero
    // exit proves failures propagate. A selftest that misses the
    // plant is an engine defect: exit 2.
    return passed ? 1 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partlab: exact partition combinatorics, identity "
                 "verification, and involution checks"};
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    add_format(&app);

    // count
    auto* count_cmd =
        app.add_subcommand("count", "Evaluate a registered statistic");
    std::string stat_key;
    long long count_n = 0, count_m = 0;
    bool count_list = false;
    count_cmd->add_option("stat", stat_key, "Statistic key (see --list)");
    auto* count_n_opt = count_cmd->add_option("--n", count_n, "Weight n");
    auto* count_m_opt =
        count_cmd->add_option("--m", count_m, "Refinement parameter m");
    count_cmd->add_flag("--list", count_list, "List the statistic registry");
    add_format(count_cmd);

    // enumerate
    auto* enum_cmd =
        app.add_subcommand("enumerate", "List the objects of one class");
    std::string enum_class;
    long long enum_n = 0;
    enum_cmd
        ->add_option("class", enum_class,
                     "partitions | distinct | flushed | unflushed | proper | "
                     "improper | concave-even")
        ->required();
    enum_cmd->add_option("--n", enum_n, "Weight n")->required();
    add_format(enum_cmd);

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Check identities coefficientwise");
    std::string verify_id;
    int verify_order = 0;
    bool verify_all_flag = false, verify_optional = false;
    verify_cmd->add_option("id", verify_id, "Identity id from the registry");
    auto* order_opt =
        verify_cmd->add_option("--order", verify_order, "Truncation order");
    verify_cmd->add_flag("--all", verify_all_flag, "Run every registry case");
    verify_cmd->add_flag("--include-optional", verify_optional,
                         "Include optional cases in --all");
    add_format(verify_cmd);

    // involution
    auto* inv_cmd = app.add_subcommand(
        "involution", "Run the sign-reversing involution harness");
    std::string inv_kind;
    long long inv_max_weight = 0, inv_trace = 0;
    bool inv_refined = false;
    inv_cmd->add_option("kind", inv_kind, "alpha | alpha1 | alpha2")->required();
    inv_cmd->add_option("--max-weight", inv_max_weight, "Check weights 0..W")
        ->required();
    auto* trace_opt = inv_cmd->add_option(
        "--trace", inv_trace, "Print every triple of this weight");
    inv_cmd->add_flag("--z-refined", inv_refined,
                      "Also check per staircase index");
    add_format(inv_cmd);

    // bijection
    auto* bij_cmd =
        app.add_subcommand("bijection", "Demonstrate a weight-preserving map");
    std::string bij_map;
    long long bij_n = 0;
    bool bij_inverse = false, bij_show = false;
    bij_cmd->add_option("map", bij_map, "phi")->required();
    bij_cmd->add_option("--n", bij_n, "Weight n")->required();
    bij_cmd->add_flag("--check-inverse", bij_inverse,
                      "Round-trip through the inverse map");
    bij_cmd->add_flag("--show", bij_show, "Print each composition and image");
    add_format(bij_cmd);

    // series
    auto* series_cmd =
        app.add_subcommand("series", "Print a catalog q-series");
    std::string series_id;
    int series_order = 0;
    bool series_list = false;
    series_cmd->add_option("id", series_id, "Series id (see --list)");
    auto* series_order_opt =
        series_cmd->add_option("--order", series_order, "Truncation order");
    series_cmd->add_flag("--list", series_list, "List the series catalog");
    add_format(series_cmd);

    // selftest
    auto* selftest_cmd = app.add_subcommand(
        "selftest", "Verify that a planted failure is detected");
    add_format(selftest_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // help/version exit 0; parse errors exit 2
    }

    bool as_json = format == "json";
    try {
        if (*count_cmd)
            return run_count(count_list, stat_key,
                             count_n_opt->count()
                                 ? std::optional<long long>(count_n)
                                 : std::nullopt,
                             count_m_opt->count()
                                 ? std::optional<long long>(count_m)
                                 : std::nullopt,
                             as_json);
        if (*enum_cmd) return run_enumerate(enum_class, enum_n, as_json);
        if (*verify_cmd)
            return run_verify(verify_id, verify_all_flag,
                              order_opt->count() ? std::optional<int>(verify_order)
                                                 : std::nullopt,
                              verify_optional, as_json);
        if (*inv_cmd)
            return run_involution(inv_kind, inv_max_weight,
                                  trace_opt->count()
                                      ? std::optional<long long>(inv_trace)
                                      : std::nullopt,
                                  inv_refined, as_json);
        if (*bij_cmd)
            return run_bijection(bij_map, bij_n, bij_inverse, bij_show, as_json);
        if (*series_cmd)
            return run_series(series_list, series_id,
                              series_order_opt->count()
                                  ? std::optional<int>(series_order)
                                  : std::nullopt,
                              as_json);
        if (*selftest_cmd) return run_selftest(as_json);
        throw UsageError("no command given");
    } catch (const std::invalid_argument& e) { // usage, domain, registry
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) { // feasibility, divergence
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
