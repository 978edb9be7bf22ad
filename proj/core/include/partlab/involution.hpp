#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partlab/bigint.hpp"

namespace partlab {

// Three sign-reversing involutions on pairs (lambda, mu). Each acts
// by moving a part between the front of lambda and the front of mu
// (alpha, alpha1) or between the backs (alpha2), reversing the sign of
// every non-fixed point so that signed sums collapse onto the fixed
// points.
enum class InvolutionKind {
    alpha,  // lambda: distinct >= 0 (at most one zero, as the least part),
            // nonempty; mu: weakly decreasing >= 0 (zeros allowed).
            // sign = (-1)^(lambda.back() + |mu|).
    alpha1, // lambda: distinct positive, possibly empty; mu as in alpha.
            // sign = (-1)^(|mu|).
    alpha2, // domains as in alpha. sign = (-1)^(lambda.front() - |lambda| + 1).
};

std::string kind_name(InvolutionKind kind);
std::optional<InvolutionKind> parse_kind(const std::string& name);

// One signed object: a pair of integer sequences, stored
// largest-first. The "staircase index" d = |lambda| + |mu| contributes
// a triangular number d(d+1)/2 to the weight on top of the entry sums.
struct SignedTriple {
    std::vector<int> lambda;
    std::vector<int> mu;

    bool operator==(const SignedTriple&) const = default;
};

int staircase_index(const SignedTriple& t) noexcept;
long long triple_weight(const SignedTriple& t) noexcept;

// Throws DomainError if t violates the domain rules of the given kind.
void validate_triple(InvolutionKind kind, const SignedTriple& t);

int triple_sign(InvolutionKind kind, const SignedTriple& t);
bool is_fixed(InvolutionKind kind, const SignedTriple& t);

// The image of t, or nullopt if t is fixed. Applying twice returns t.
std::optional<SignedTriple> apply_involution(InvolutionKind kind,
                                             const SignedTriple& t);

// All valid triples of the given kind and weight, ordered by
// (staircase index, |lambda|, lambda, mu).
std::vector<SignedTriple> enumerate_triples(InvolutionKind kind,
                                            long long weight);

// Machine check of one involution at one weight: pairing structure
// (involutive, weight- and d-preserving, sign-reversing), the signed
// sum against the fixed-point sum, both against independently built
// q-series coefficients, and optionally the same per staircase index
// (the z-refined check).
struct HarnessRow {
    long long weight = 0;
    long long triples = 0;
    BigInt signed_sum;
    BigInt fixed_sum;
    BigInt series_all_coeff;   // coefficient of q^weight in the full sum
    BigInt series_fixed_coeff; // coefficient in the fixed-point series
    bool structure_ok = false;
    bool sums_ok = false;
    bool refined_ok = true; // true when the z-refined check is off
};

struct HarnessReport {
    InvolutionKind kind = InvolutionKind::alpha;
    long long max_weight = 0;
    bool z_refined = false;
    std::vector<HarnessRow> rows;
    bool ok = false;
    std::string first_problem; // empty when ok
};

HarnessReport run_involution_harness(InvolutionKind kind,
                                     long long max_weight,
                                     bool z_refined);

} // namespace partlab
