#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pperm/hopping.hpp"
#include "pperm/polytope.hpp"
#include "pperm/rsk.hpp"
#include "pperm/tableaux.hpp"
#include "pperm/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

ordered_json gamma_entries_json(const pperm::GammaVector& g) {
    return ordered_json(g.entries);
}

int run_gamma(int n, const std::string& k_text, const std::string& format,
              bool all_methods, int bound) {
    const pperm::KSubset K = pperm::parse_ksubset(k_text, n);
    const pperm::IntPolynomial h = pperm::h_poly_partitioned(K, bound);
    const pperm::GammaVector g = pperm::gamma_expand(h, n - 1);

    if (format == "json") {
        ordered_json out;
        out["h"] = h.coeffs;
        out["gamma"] = gamma_entries_json(g);
        if (all_methods) {
            out["gamma_tilde"] =
                gamma_entries_json(pperm::gamma_partitioned(K, pperm::GammaMethod::tilde, bound));
            out["gamma_hat"] =
                gamma_entries_json(pperm::gamma_partitioned(K, pperm::GammaMethod::hat, bound));
            out["gamma_rep"] =
                gamma_entries_json(pperm::rep_gamma(K, pperm::SytVariant::hat, bound));
        }
        std::cout << out.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,K,j,gamma\n";
        for (std::size_t j = 0; j < g.entries.size(); ++j) {
            std::cout << n << ",\"" << pperm::to_string(K) << "\"," << j << ','
                      << g.entries[j] << "\n";
        }
    } else if (format == "plain") {
        std::cout << "h     = " << pperm::to_string(h) << "\n";
        std::cout << "gamma = [";
        for (std::size_t j = 0; j < g.entries.size(); ++j) {
            if (j > 0) std::cout << ',';
            std::cout << g.entries[j];
        }
        std::cout << "]\n";
        if (all_methods) {
            const auto tilde = pperm::gamma_partitioned(K, pperm::GammaMethod::tilde, bound);
            const auto hat = pperm::gamma_partitioned(K, pperm::GammaMethod::hat, bound);
            const auto rep = pperm::rep_gamma(K, pperm::SytVariant::hat, bound);
            std::cout << "tilde = " << pperm::to_string(pperm::gamma_reconstruct(tilde))
                      << "  hat = " << pperm::to_string(pperm::gamma_reconstruct(hat))
                      << "  rep = " << pperm::to_string(pperm::gamma_reconstruct(rep)) << "\n";
        }
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    return kExitOk;
}

int run_verify(int max_n, const std::string& checks_text, int jobs,
               const std::string& format, const std::string& out_path, bool no_meta,
               int bound) {
    std::vector<std::string> checks;
    std::string tok;
    std::istringstream in(checks_text);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) checks.push_back(tok);
    }
    if (checks.empty()) checks.push_back("all");

    const pperm::VerificationReport report =
        pperm::run_verification(max_n, checks, jobs, bound);

    std::string rendered;
    if (format == "json") {
        rendered = pperm::report_to_json(report, !no_meta);
    } else if (format == "csv") {
        rendered = pperm::report_to_csv(report);
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }

    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open '" + out_path + "' for writing");
        out << rendered;
    }
    if (!report.pass) {
        std::cerr << "verification failed: " << report.first_counterexample << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

int run_enumerate(const std::string& kind, int n, const std::string& k_text,
                  const std::string& filter_text, const std::string& seed,
                  const std::string& shape_text, const std::string& format, int bound) {
    std::vector<std::string> lines;
    if (kind == "wk" || kind == "wofk") {
        const pperm::KSubset K = pperm::parse_ksubset(k_text, n);
        std::vector<pperm::Permutation> out;
        if (kind == "wofk") {
            out = pperm::enumerate_w_of_k(K, bound);
        } else {
            pperm::MinRepFilter filter = pperm::MinRepFilter::all;
            if (filter_text == "tilde") filter = pperm::MinRepFilter::tilde;
            else if (filter_text == "hat") filter = pperm::MinRepFilter::hat;
            else if (filter_text != "all") throw std::invalid_argument("unknown filter '" + filter_text + "'");
            out = pperm::enumerate_w_upper_k(K, filter, bound);
        }
        for (const auto& w : out) lines.push_back(pperm::to_string(w));
    } else if (kind == "hopclass") {
        if (seed.empty()) throw std::invalid_argument("--seed is required for kind hopclass");
        const pperm::Permutation w = pperm::parse_permutation(seed);
        const pperm::HopClass cls = pperm::hop_class(w, bound);
        for (const auto& u : cls.members) lines.push_back(pperm::to_string(u));
    } else if (kind == "syt") {
        if (shape_text.empty()) throw std::invalid_argument("--shape is required for kind syt");
        const pperm::Partition shape = pperm::parse_partition(shape_text);
        pperm::SytFilter filter = pperm::SytFilter::all;
        if (filter_text == "tilde") filter = pperm::SytFilter::tilde;
        else if (filter_text == "hat") filter = pperm::SytFilter::hat;
        else if (filter_text != "all") throw std::invalid_argument("unknown filter '" + filter_text + "'");
        for (const auto& t : pperm::enumerate_syt(shape, filter, bound + 2)) {
            lines.push_back(pperm::to_string(t));
        }
    } else {
        throw std::invalid_argument("unknown kind '" + kind + "'");
    }

    if (format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& line : lines) out.push_back(line);
        std::cout << out.dump() << "\n";
    } else if (format == "plain") {
        for (const auto& line : lines) std::cout << line << "\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    return kExitOk;
}

int run_rsk(const std::string& word_text, const std::string& format) {
    const pperm::Word v = pperm::parse_word(word_text);
    const auto [p, q] = pperm::rsk(v);

    if (format == "json") {
        ordered_json out;
        out["P"] = p.rows;
        out["Q"] = q.rows;
        out["shape"] = p.shape().parts;
        out["des"] = pperm::tableau_descent_set(q);
        std::cout << out.dump() << "\n";
    } else if (format == "plain") {
        std::cout << "P = " << pperm::to_string(p) << "\n";
        std::cout << "Q = " << pperm::to_string(q) << "\n";
        const auto des = pperm::tableau_descent_set(q);
        std::cout << "Des(Q) = {";
        for (std::size_t i = 0; i < des.size(); ++i) {
            if (i > 0) std::cout << ',';
            std::cout << des[i];
        }
        std::cout << "}\n";
    } else {
        throw std::invalid_argument("unknown format '" + format + "'");
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact h-polynomials and gamma vectors of partitioned permutohedra"};
    app.require_subcommand(1);

    int bound = pperm::kDefaultEnumerationBound;
    app.add_option("--bound", bound, "Enumeration rank bound (default 10)");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "h-polynomial and gamma vector of P_n(K)");
    int gamma_n = 0;
    std::string gamma_k;
    std::string gamma_format = "json";
    bool gamma_all_methods = false;
    gamma_cmd->add_option("--n", gamma_n, "Rank n")->required();
    gamma_cmd->add_option("--K", gamma_k, "Comma-separated subset of [n-1]; empty for the full permutohedron");
    gamma_cmd->add_option("--format", gamma_format, "json | csv | plain");
    gamma_cmd->add_flag("--all-methods", gamma_all_methods, "Also print the tilde/hat/tableau routes");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and emit a report");
    int verify_max_n = 0;
    std::string verify_checks = "all";
    int verify_jobs = 0;
    std::string verify_format = "json";
    std::string verify_out;
    bool verify_no_meta = false;
    verify_cmd->add_option("--max-n", verify_max_n, "Largest rank to verify")->required();
    verify_cmd->add_option("--checks", verify_checks,
                           "Comma-separated: gamma,bijection,hop,rsk,kostka,phi or all");
    verify_cmd->add_option("--jobs", verify_jobs, "Worker threads (default: all cores)");
    verify_cmd->add_option("--format", verify_format, "json | csv");
    verify_cmd->add_option("--out", verify_out, "Write the report to a file instead of stdout");
    verify_cmd->add_flag("--no-meta", verify_no_meta, "Omit the timing metadata field");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "List coset representatives, W(K), hop classes, or tableaux");
    std::string enum_kind;
    int enum_n = 0;
    std::string enum_k;
    std::string enum_filter = "all";
    std::string enum_seed;
    std::string enum_shape;
    std::string enum_format = "plain";
    enum_cmd->add_option("--kind", enum_kind, "wk | wofk | hopclass | syt")->required();
    enum_cmd->add_option("--n", enum_n, "Rank n (wk, wofk)");
    enum_cmd->add_option("--K", enum_k, "Comma-separated subset of [n-1]");
    enum_cmd->add_option("--filter", enum_filter, "all | tilde | hat");
    enum_cmd->add_option("--seed", enum_seed, "Seed permutation (hopclass)");
    enum_cmd->add_option("--shape", enum_shape, "Comma-separated partition (syt)");
    enum_cmd->add_option("--format", enum_format, "plain | json");

    // rsk
    auto* rsk_cmd = app.add_subcommand("rsk", "Insertion and recording tableaux of a word");
    std::string rsk_word;
    std::string rsk_format = "json";
    rsk_cmd->add_option("--word", rsk_word, "Word, space-separated or compact digits")->required();
    rsk_cmd->add_option("--format", rsk_format, "json | plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gamma_cmd->parsed()) {
            return run_gamma(gamma_n, gamma_k, gamma_format, gamma_all_methods, bound);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_max_n, verify_checks, verify_jobs, verify_format,
                              verify_out, verify_no_meta, bound);
        }
        if (enum_cmd->parsed()) {
            return run_enumerate(enum_kind, enum_n, enum_k, enum_filter, enum_seed,
                                 enum_shape, enum_format, bound);
        }
        if (rsk_cmd->parsed()) {
            return run_rsk(rsk_word, rsk_format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
