#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pperm/parabolic.hpp"
#include "pperm/polynomial.hpp"

namespace pperm {

struct CheckOutcome {
    bool ok = true;
    std::string counterexample;  // empty when ok
};

// One verified (n, K) pair: the h-polynomial, the gamma vector by every
// requested route, membership counts, and the per-suite outcomes.
struct GammaRecord {
    int n = 0;
    KSubset K;
    std::int64_t count_min_reps = 0;  // |W^K|
    std::int64_t count_w_of_k = 0;    // |W(K)|
    std::int64_t count_tilde = 0;
    std::int64_t count_hat = 0;
    IntPolynomial h;
    GammaVector gamma_hpoly;
    GammaVector gamma_tilde;
    GammaVector gamma_hat;
    std::optional<GammaVector> gamma_rep;  // filled by the kostka suite
    bool gamma_equal = true;
    bool gamma_nonnegative = true;
    std::optional<CheckOutcome> bijection;
    std::optional<CheckOutcome> phi;
    std::optional<CheckOutcome> kostka;
    bool pass = true;
    double elapsed_ms = 0.0;
};

// Suites that depend on n only.
struct PerNRecord {
    int n = 0;
    std::optional<CheckOutcome> hop;
    std::optional<CheckOutcome> rsk;
    bool pass = true;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    int max_n = 0;
    std::vector<std::string> checks;
    std::vector<GammaRecord> records;
    std::vector<PerNRecord> per_n;
    int passed = 0;
    int failed = 0;
    bool pass = true;
    std::string first_counterexample;
    double elapsed_ms = 0.0;
    int jobs = 1;
};

// Known suite names, in canonical order.
const std::vector<std::string>& known_checks();

// Exhaustive theta machinery for one K: every permutation maps into W(K);
// on the theta domain descents are preserved, both roundtrips are the
// identity, the boundary rule holds along every effective expression, and
// the class sizes add up to |W(K)|.
CheckOutcome check_bijection_suite(const KSubset& K);

// Hop classes partition S_n, have size 2^(free letters), and each class
// descent polynomial factors as t^pk (1+t)^(n-1-2pk); canonical
// representatives are exactly the permutations with peak count equal to
// descent count, and exactly the tilde ones.
CheckOutcome check_hop_suite(int n);

// Roundtrip and the two defining properties of rsk over small alphabets,
// plus evacuation/star compatibility over permutations.
CheckOutcome check_rsk_suite(int n);

// The Kostka-weighted tableau route reproduces the gamma vector of P_n(K),
// in both the hat and tilde variants.
CheckOutcome check_kostka_suite(const KSubset& K, GammaVector* rep_out = nullptr);

// The standardization map is a descent-preserving bijection from hat words
// with content mu(K) onto the hat minimal coset representatives.
CheckOutcome check_phi_suite(const KSubset& K);

// Runs the selected suites for every K and every n <= max_n, in parallel
// across records; output is independent of the parallelism degree.
VerificationReport run_verification(int max_n, std::vector<std::string> checks, int jobs,
                                    int bound = kDefaultEnumerationBound);

std::string report_to_json(const VerificationReport& r, bool include_meta = true);
std::string report_to_csv(const VerificationReport& r);

}  // namespace pperm
