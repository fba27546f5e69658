#include "pperm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "pperm/checked.hpp"
#include "pperm/hopping.hpp"
#include "pperm/polytope.hpp"
#include "pperm/rsk.hpp"
#include "pperm/tableaux.hpp"
#include "pperm/theta.hpp"

namespace pperm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename Fn>
void for_each_permutation(int n, Fn&& fn) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    do {
        fn(img);
    } while (std::next_permutation(img.begin(), img.end()));
}

// Position in lexicographic order among all arrangements of [n].
std::int64_t lex_rank(const std::vector<int>& img) {
    const int n = static_cast<int>(img.size());
    std::int64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller_right = 0;
        for (int j = i + 1; j < n; ++j) {
            if (img[static_cast<std::size_t>(j)] < img[static_cast<std::size_t>(i)]) {
                ++smaller_right;
            }
        }
        rank = rank * (n - i) + smaller_right;
    }
    return rank;
}

std::vector<int> padded_multiplicities(const Word& v, int top) {
    std::vector<int> counts(static_cast<std::size_t>(top), 0);
    for (int x : v.letters) {
        if (x <= top) ++counts[static_cast<std::size_t>(x - 1)];
    }
    return counts;
}

CheckOutcome fail(std::string message) { return {false, std::move(message)}; }

}  // namespace

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"gamma",  "bijection", "hop",
                                                "rsk",    "kostka",    "phi"};
    return names;
}

CheckOutcome check_bijection_suite(const KSubset& K) {
    const int n = K.n;

    // The forward operator lands in W(K) from anywhere, not only from the
    // theta domain.
    {
        CheckOutcome bad;
        for_each_permutation(n, [&](const std::vector<int>& img) {
            if (!bad.ok) return;
            Permutation u{std::vector<int>(img)};
            if (!is_in_w_of_k(j_full(u, K), K)) {
                bad = fail("j_full left W(K) for u=" + to_string(u) + ", K={" + to_string(K) + "}");
            }
        });
        if (!bad.ok) return bad;
    }

    const std::vector<Permutation> wofk = enumerate_w_of_k(K);
    std::vector<Permutation> images;

    for (const Permutation& w : enumerate_w_upper_k(K, MinRepFilter::tilde)) {
        const HopClass cls = hop_class(w);
        for (const Permutation& u : cls.members) {
            ThetaTrace forward;
            const Permutation v = j_full(u, K, &forward);
            if (descent_count(v) != descent_count(u)) {
                return fail("descents not preserved: u=" + to_string(u) + " -> v=" +
                            to_string(v) + ", K={" + to_string(K) + "}, trace=" +
                            trace_to_json(forward));
            }
            try {
                effective_expression(u, K);
            } catch (const std::exception& e) {
                return fail(std::string("effective expression violation: ") + e.what() +
                            " for u=" + to_string(u) + ", K={" + to_string(K) + "}");
            }
            ThetaTrace backward;
            Permutation u_back = l_full(v, K, &backward);
            Permutation w_back = canonical_rep(u_back);
            if (!(u_back == u) || !(w_back == w)) {
                return fail("roundtrip failed: w=" + to_string(w) + ", u=" + to_string(u) +
                            ", v=" + to_string(v) + ", forward=" + trace_to_json(forward) +
                            ", backward=" + trace_to_json(backward));
            }
            images.push_back(v);
        }
    }

    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return fail("theta is not injective for K={" + to_string(K) + "}");
    }
    if (!(images == wofk)) {
        return fail("theta image differs from W(K) for K={" + to_string(K) + "}: " +
                    std::to_string(images.size()) + " images vs |W(K)|=" +
                    std::to_string(wofk.size()));
    }

    // And explicitly the other composition, through the validating entry
    // points.
    for (const Permutation& v : wofk) {
        const auto [w, u] = theta_inverse(v, K);
        if (!(theta(w, u, K) == v)) {
            return fail("theta(theta_inverse(v)) != v for v=" + to_string(v) + ", K={" +
                        to_string(K) + "}");
        }
    }
    return {};
}

CheckOutcome check_hop_suite(int n) {
    const std::int64_t total = checked_factorial(n);
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    std::int64_t covered = 0;
    CheckOutcome bad;

    for_each_permutation(n, [&](const std::vector<int>& img) {
        if (!bad.ok) return;
        Permutation w{std::vector<int>(img)};
        const PositionClass pc = classify_positions(w);
        const int peaks = pc.count(PositionKind::peak);
        const int valleys = pc.count(PositionKind::valley);
        const int free_up = pc.count(PositionKind::free_up);
        const int free_down = pc.count(PositionKind::free_down);

        if (valleys != peaks + 1 || free_up + free_down != n - 1 - 2 * peaks) {
            bad = fail("peak/valley/free-letter counts inconsistent for w=" + to_string(w));
            return;
        }
        if (descent_count(w) != peaks + free_down) {
            bad = fail("descents != peaks + downslope free letters for w=" + to_string(w));
            return;
        }

        const bool canonical = free_down == 0;
        if (canonical != is_tilde(w) || canonical != (peaks == descent_count(w))) {
            bad = fail("canonical-representative characterizations disagree for w=" +
                       to_string(w));
            return;
        }
        if (!canonical) return;

        HopClass cls;
        try {
            cls = hop_class(w);
            class_descent_poly(cls);  // throws if the closed form fails
        } catch (const std::exception& e) {
            bad = fail(std::string("hop class failure for w=") + to_string(w) + ": " + e.what());
            return;
        }
        if (cls.size() != (1 << (free_up + free_down))) {
            bad = fail("hop class size is not 2^(free letters) for w=" + to_string(w));
            return;
        }
        for (const Permutation& u : cls.members) {
            const std::int64_t idx = lex_rank(u.image);
            if (seen[static_cast<std::size_t>(idx)]) {
                bad = fail("hop classes overlap at u=" + to_string(u));
                return;
            }
            seen[static_cast<std::size_t>(idx)] = 1;
            ++covered;
        }
    });

    if (!bad.ok) return bad;
    if (covered != total) {
        return fail("hop classes cover " + std::to_string(covered) + " of " +
                    std::to_string(total) + " permutations at n=" + std::to_string(n));
    }
    return {};
}

CheckOutcome check_rsk_suite(int n) {
    // Exhaustive words over two- and three-letter alphabets.
    for (int m : {2, 3}) {
        std::vector<int> letters(static_cast<std::size_t>(n), 1);
        while (true) {
            Word v{std::vector<int>(letters)};
            const auto [p, q] = rsk(v);
            if (!(p.shape() == q.shape()) || (v.size() > 0 && !is_semistandard(p)) ||
                (v.size() > 0 && !is_standard(q))) {
                return fail("rsk produced an invalid pair for v=" + to_string(v));
            }
            if (content(p) != padded_multiplicities(v, p.boxes() == 0 ? 0 : *std::max_element(v.letters.begin(), v.letters.end()))) {
                return fail("content(P) differs from letter multiplicities for v=" + to_string(v));
            }
            if (tableau_descent_set(q) != descent_set(v)) {
                return fail("Des(Q) != Des(v) for v=" + to_string(v));
            }
            if (is_tilde(q) != is_tilde(v) || is_hat(q) != is_hat(v)) {
                return fail("tilde/hat status of Q differs from v for v=" + to_string(v));
            }
            if (!(rsk_inverse(p, q) == v)) {
                return fail("rsk roundtrip failed for v=" + to_string(v));
            }
            // Next word over [m], odometer order.
            int pos = n - 1;
            while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == m) {
                letters[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++letters[static_cast<std::size_t>(pos)];
        }
    }

    // Evacuation against the star involution, over whole symmetric groups.
    if (n <= 7) {
        CheckOutcome bad;
        for_each_permutation(n, [&](const std::vector<int>& img) {
            if (!bad.ok) return;
            Permutation w{std::vector<int>(img)};
            const auto [p, q] = rsk(w.as_word());
            if (!is_standard(p)) {
                bad = fail("P not standard for a permutation word w=" + to_string(w));
                return;
            }
            const auto [ps, qs] = rsk(star(w).as_word());
            if (!(evacuation(q) == qs)) {
                bad = fail("evacuation(Q_w) != Q_{star(w)} for w=" + to_string(w));
                return;
            }
            if (!(evacuation(evacuation(q)) == q)) {
                bad = fail("evacuation is not an involution at w=" + to_string(w));
                return;
            }
        });
        if (!bad.ok) return bad;
    }
    return {};
}

CheckOutcome check_kostka_suite(const KSubset& K, GammaVector* rep_out) {
    const GammaVector direct = gamma_partitioned(K, GammaMethod::hpoly);
    const GammaVector via_hat = rep_gamma(K, SytVariant::hat);
    const GammaVector via_tilde = rep_gamma(K, SytVariant::tilde);
    if (rep_out) *rep_out = via_hat;
    if (!(via_hat == via_tilde)) {
        return fail("hat and tilde tableau routes disagree for K={" + to_string(K) + "}");
    }
    if (!(via_hat == direct)) {
        return fail("Kostka-weighted gamma differs from the h-polynomial route for K={" +
                    to_string(K) + "}");
    }
    return {};
}

CheckOutcome check_phi_suite(const KSubset& K) {
    const Composition mu = composition_mu(K);
    std::vector<int> letters;
    for (int i = 0; i < mu.size(); ++i) {
        letters.insert(letters.end(), static_cast<std::size_t>(mu.parts[static_cast<std::size_t>(i)]),
                       i + 1);
    }

    const std::vector<Permutation> targets = enumerate_w_upper_k(K, MinRepFilter::hat);
    std::vector<Permutation> images;
    do {
        Word v{std::vector<int>(letters)};
        if (!is_hat(v)) continue;
        const Permutation p = phi(v, K);
        if (descent_set(p) != descent_set(v)) {
            return fail("phi does not preserve descents at v=" + to_string(v) + ", K={" +
                        to_string(K) + "}");
        }
        if (!is_min_rep(p, K) || !is_hat(p)) {
            return fail("phi image outside the hat representatives at v=" + to_string(v) +
                        ", K={" + to_string(K) + "}");
        }
        images.push_back(p);
    } while (std::next_permutation(letters.begin(), letters.end()));

    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
        return fail("phi is not injective for K={" + to_string(K) + "}");
    }
    if (!(images == targets)) {
        return fail("phi image differs from the hat representatives for K={" + to_string(K) +
                    "}");
    }
    return {};
}

namespace {

bool wants(const std::vector<std::string>& checks, const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

void fill_counts(GammaRecord& rec) {
    for_each_permutation(rec.n, [&](const std::vector<int>& img) {
        Permutation w{std::vector<int>(img)};
        if (is_in_w_of_k(w, rec.K)) ++rec.count_w_of_k;
        if (is_min_rep(w, rec.K)) {
            ++rec.count_min_reps;
            if (is_tilde(w)) ++rec.count_tilde;
            if (is_hat(w)) ++rec.count_hat;
        }
    });
}

void run_gamma_check(GammaRecord& rec, std::string& message) {
    const int n = rec.n;
    rec.h = h_poly_partitioned(rec.K);
    if (!is_palindromic(rec.h, n - 1)) {
        rec.gamma_equal = false;
        message = "h-polynomial is not palindromic for K={" + to_string(rec.K) + "}";
        return;
    }
    rec.gamma_hpoly = gamma_expand(rec.h, n - 1);
    rec.gamma_tilde = gamma_partitioned(rec.K, GammaMethod::tilde);
    rec.gamma_hat = gamma_partitioned(rec.K, GammaMethod::hat);
    rec.gamma_equal =
        rec.gamma_hpoly == rec.gamma_tilde && rec.gamma_tilde == rec.gamma_hat;
    rec.gamma_nonnegative =
        std::all_of(rec.gamma_hpoly.entries.begin(), rec.gamma_hpoly.entries.end(),
                    [](std::int64_t g) { return g >= 0; });
    if (rec.h(1) != rec.count_w_of_k) {
        rec.gamma_equal = false;
        message = "h(1) != |W(K)| for K={" + to_string(rec.K) + "}";
        return;
    }
    if (!rec.gamma_equal) {
        message = "gamma methods disagree for n=" + std::to_string(n) + ", K={" +
                  to_string(rec.K) + "}";
    } else if (!rec.gamma_nonnegative) {
        message = "negative gamma entry for n=" + std::to_string(n) + ", K={" +
                  to_string(rec.K) + "}";
    }
}

}  // namespace

VerificationReport run_verification(int max_n, std::vector<std::string> checks, int jobs,
                                    int bound) {
    if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
    if (max_n > bound) {
        throw std::invalid_argument("enumeration bound exceeded: n=" + std::to_string(max_n) +
                                    " > bound=" + std::to_string(bound));
    }
    if (wants(checks, "all")) checks = known_checks();
    for (const std::string& c : checks) {
        if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end()) {
            throw std::invalid_argument("unknown check '" + c + "'");
        }
    }
    std::vector<std::string> ordered;
    for (const std::string& c : known_checks()) {
        if (wants(checks, c)) ordered.push_back(c);
    }
    if (ordered.empty()) throw std::invalid_argument("no checks selected");

    VerificationReport report;
    report.max_n = max_n;
    report.checks = ordered;

    const bool want_gamma = wants(ordered, "gamma");
    const bool want_bijection = wants(ordered, "bijection");
    const bool want_kostka = wants(ordered, "kostka");
    const bool want_phi = wants(ordered, "phi");
    const bool want_hop = wants(ordered, "hop");
    const bool want_rsk = wants(ordered, "rsk");
    const bool per_k_checks = want_gamma || want_bijection || want_kostka || want_phi;

    if (per_k_checks) {
        for (int n = 1; n <= max_n; ++n) {
            for (KSubset& K : all_k_subsets(n)) {
                GammaRecord rec;
                rec.n = n;
                rec.K = std::move(K);
                report.records.push_back(std::move(rec));
            }
        }
    }
    if (want_hop || want_rsk) {
        for (int n = 1; n <= max_n; ++n) {
            PerNRecord rec;
            rec.n = n;
            report.per_n.push_back(std::move(rec));
        }
    }

    if (jobs < 1) {
        const unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : static_cast<int>(hw);
    }
    report.jobs = jobs;

    const auto started = Clock::now();
    const std::size_t record_count = report.records.size();
    const std::size_t task_count = record_count + report.per_n.size();
    std::atomic<std::size_t> cursor{0};

    std::vector<std::string> record_messages(record_count);
    std::vector<std::string> per_n_messages(report.per_n.size());

    auto worker = [&]() {
        while (true) {
            const std::size_t t = cursor.fetch_add(1);
            if (t >= task_count) break;
            if (t < record_count) {
                GammaRecord& rec = report.records[t];
                const auto task_start = Clock::now();
                std::string message;
                try {
                    fill_counts(rec);
                    if (want_gamma || want_kostka) run_gamma_check(rec, message);
                    if (want_bijection) rec.bijection = check_bijection_suite(rec.K);
                    if (want_kostka) {
                        GammaVector rep;
                        rec.kostka = check_kostka_suite(rec.K, &rep);
                        rec.gamma_rep = std::move(rep);
                    }
                    if (want_phi) rec.phi = check_phi_suite(rec.K);
                } catch (const std::exception& e) {
                    rec.gamma_equal = false;
                    message = std::string("unexpected failure: ") + e.what();
                }
                rec.pass = rec.gamma_equal && rec.gamma_nonnegative &&
                           (!rec.bijection || rec.bijection->ok) &&
                           (!rec.kostka || rec.kostka->ok) && (!rec.phi || rec.phi->ok);
                if (!rec.pass && message.empty()) {
                    if (rec.bijection && !rec.bijection->ok) message = rec.bijection->counterexample;
                    else if (rec.kostka && !rec.kostka->ok) message = rec.kostka->counterexample;
                    else if (rec.phi && !rec.phi->ok) message = rec.phi->counterexample;
                    else message = "record failed";
                }
                record_messages[t] = rec.pass ? std::string() : message;
                rec.elapsed_ms = ms_since(task_start);
            } else {
                PerNRecord& rec = report.per_n[t - record_count];
                const auto task_start = Clock::now();
                std::string message;
                if (want_hop) {
                    try {
                        rec.hop = check_hop_suite(rec.n);
                    } catch (const std::exception& e) {
                        rec.hop = fail(std::string("unexpected failure: ") + e.what());
                    }
                }
                if (want_rsk) {
                    try {
                        rec.rsk = check_rsk_suite(rec.n);
                    } catch (const std::exception& e) {
                        rec.rsk = fail(std::string("unexpected failure: ") + e.what());
                    }
                }
                rec.pass = (!rec.hop || rec.hop->ok) && (!rec.rsk || rec.rsk->ok);
                if (!rec.pass) {
                    if (rec.hop && !rec.hop->ok) message = rec.hop->counterexample;
                    else if (rec.rsk && !rec.rsk->ok) message = rec.rsk->counterexample;
                }
                per_n_messages[t - record_count] = message;
                rec.elapsed_ms = ms_since(task_start);
            }
        }
    };

    std::vector<std::thread> pool;
    for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    for (std::size_t i = 0; i < report.records.size(); ++i) {
        if (report.records[i].pass) {
            ++report.passed;
        } else {
            ++report.failed;
            if (report.first_counterexample.empty()) {
                report.first_counterexample = record_messages[i];
            }
        }
    }
    for (std::size_t i = 0; i < report.per_n.size(); ++i) {
        if (report.per_n[i].pass) {
            ++report.passed;
        } else {
            ++report.failed;
            if (report.first_counterexample.empty()) {
                report.first_counterexample = per_n_messages[i];
            }
        }
    }
    report.pass = report.failed == 0;
    report.elapsed_ms = ms_since(started);
    return report;
}

std::string report_to_json(const VerificationReport& r, bool include_meta) {
    using nlohmann::ordered_json;
    ordered_json root;
    root["schema"] = "v1";
    root["max_n"] = r.max_n;
    root["checks"] = r.checks;

    ordered_json records = ordered_json::array();
    for (const GammaRecord& rec : r.records) {
        ordered_json jr;
        jr["n"] = rec.n;
        jr["K"] = to_string(rec.K);
        jr["counts"] = {{"min_reps", rec.count_min_reps},
                        {"w_of_k", rec.count_w_of_k},
                        {"tilde", rec.count_tilde},
                        {"hat", rec.count_hat}};
        if (!rec.h.coeffs.empty()) {
            jr["h"] = rec.h.coeffs;
            ordered_json gamma;
            gamma["hpoly"] = rec.gamma_hpoly.entries;
            gamma["tilde"] = rec.gamma_tilde.entries;
            gamma["hat"] = rec.gamma_hat.entries;
            if (rec.gamma_rep) gamma["rep"] = rec.gamma_rep->entries;
            jr["gamma"] = std::move(gamma);
        }
        ordered_json flags;
        if (!rec.h.coeffs.empty()) {
            flags["gamma_equal"] = rec.gamma_equal;
            flags["gamma_nonnegative"] = rec.gamma_nonnegative;
        }
        if (rec.bijection) flags["bijection"] = rec.bijection->ok;
        if (rec.kostka) flags["kostka"] = rec.kostka->ok;
        if (rec.phi) flags["phi"] = rec.phi->ok;
        jr["flags"] = std::move(flags);
        jr["pass"] = rec.pass;
        records.push_back(std::move(jr));
    }
    root["records"] = std::move(records);

    ordered_json per_n = ordered_json::array();
    for (const PerNRecord& rec : r.per_n) {
        ordered_json jr;
        jr["n"] = rec.n;
        ordered_json flags;
        if (rec.hop) flags["hop"] = rec.hop->ok;
        if (rec.rsk) flags["rsk"] = rec.rsk->ok;
        jr["flags"] = std::move(flags);
        jr["pass"] = rec.pass;
        per_n.push_back(std::move(jr));
    }
    root["per_n"] = std::move(per_n);

    root["summary"] = {{"records", r.records.size() + r.per_n.size()},
                       {"passed", r.passed},
                       {"failed", r.failed},
                       {"pass", r.pass}};
    if (!r.pass) root["counterexample"] = r.first_counterexample;
    if (include_meta) {
        ordered_json meta;
        meta["elapsed_ms"] = r.elapsed_ms;
        meta["jobs"] = r.jobs;
        ordered_json rec_ms = ordered_json::array();
        for (const GammaRecord& rec : r.records) rec_ms.push_back(rec.elapsed_ms);
        meta["record_elapsed_ms"] = std::move(rec_ms);
        ordered_json per_n_ms = ordered_json::array();
        for (const PerNRecord& rec : r.per_n) per_n_ms.push_back(rec.elapsed_ms);
        meta["per_n_elapsed_ms"] = std::move(per_n_ms);
        root["meta"] = std::move(meta);
    }
    return root.dump(1) + "\n";
}

std::string report_to_csv(const VerificationReport& r) {
    std::string out = "n,K,j,gamma\n";
    for (const GammaRecord& rec : r.records) {
        for (std::size_t j = 0; j < rec.gamma_hpoly.entries.size(); ++j) {
            out += std::to_string(rec.n) + ",\"" + to_string(rec.K) + "\"," +
                   std::to_string(j) + "," + std::to_string(rec.gamma_hpoly.entries[j]) + "\n";
        }
    }
    return out;
}

}  // namespace pperm
