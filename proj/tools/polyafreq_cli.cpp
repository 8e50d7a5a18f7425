#include <CLI11.hpp>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "polyafreq/io.hpp"
#include "polyafreq/pipelines.hpp"
#include "polyafreq/series_eval.hpp"

using namespace polyafreq;

namespace {

// exit codes: 0 pass, 1 counterexample, 2 validation error, 3 undecided
constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUndecided = 3;

int thread_cap() {
    if (const char* env = std::getenv("POLYAFREQ_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return 1;
}

void emit(const nlohmann::json& payload, const nlohmann::json& config,
          const std::string& out_path) {
    const nlohmann::json doc = with_envelope(payload, config);
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
        out << doc.dump(2) << "\n";
    }
}

Rational parse_rational(const std::string& s) { return Rational(s); }

void write_estimate_csv(const std::string& path, const GrowthEstimate& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "window,window_sup,running_sup\n";
    out.precision(17);
    for (std::size_t i = 0; i < g.window_values.size(); ++i) {
        out << g.window_values[i].first << "," << g.window_values[i].second << ",";
        if (i < g.running_sup.size()) out << g.running_sup[i].second;
        out << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Polya frequency sequence toolkit"};
    app.require_subcommand(1);

    // shared options
    int r = 2;
    int window = 40;
    std::int64_t kmax = 10000;
    double tol = 1e-40;
    std::uint64_t seed = 0;
    int precision = 128;
    std::string format = "json";
    std::int64_t samples = 100000;
    app.add_option("--r", r, "PF order r");
    app.add_option("--window", window, "Toeplitz window size N");
    app.add_option("--kmax", kmax, "maximum coefficient index");
    app.add_option("--tol", tol, "tolerance / truncation target");
    app.add_option("--seed", seed, "PRNG seed for sampled verification");
    app.add_option("--precision", precision, "working precision in bits (recorded)");
    app.add_option("--format", format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // construct
    auto* construct = app.add_subcommand("construct", "emit a built-in family");
    std::string family = "aesw";
    std::string gamma_s = "0", q_s = "1/2";
    std::vector<std::string> alpha_s, beta_s;
    int J = 20;
    std::int64_t N_out = 64;
    std::string out_path;
    construct->add_option("--family", family)->check(CLI::IsMember({"aesw", "qproduct"}));
    construct->add_option("--gamma", gamma_s, "exponential factor coefficient");
    construct->add_option("--alpha", alpha_s, "zero factors (1+alpha z)");
    construct->add_option("--beta", beta_s, "pole factors 1/(1-beta z), beta < 1");
    construct->add_option("--q", q_s, "q for the q-product family");
    construct->add_option("--J", J, "factor count for the q-product family");
    construct->add_option("--N", N_out, "number of coefficients to write");
    construct->add_option("--out", out_path, "coefficient file path")->required();

    // karlin
    auto* karlin = app.add_subcommand("karlin", "integer samples of f_{r-1}");
    std::string in_path;
    karlin->add_option("--in", in_path, "input coefficient file")->required();
    karlin->add_option("--out", out_path, "output coefficient file")->required();

    // dh
    auto* dh = app.add_subcommand("dh", "coefficients of (1-z) times the g.f.");
    dh->add_option("--in", in_path)->required();
    dh->add_option("--out", out_path)->required();
    dh->add_option("--N", N_out, "number of coefficients to write");

    // binomial
    auto* binom = app.add_subcommand("binomial", "alternating binomial transform h_n");
    binom->add_option("--in", in_path)->required();
    binom->add_option("--out", out_path)->required();
    binom->add_option("--N", N_out, "number of coefficients to write");

    // verify-pf
    auto* verify = app.add_subcommand("verify-pf", "window minor verification");
    std::string strategy = "auto";
    verify->add_option("--in", in_path)->required();
    verify->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
    verify->add_option("--samples", samples, "random minors in sampled mode");
    verify->add_option("--out", out_path, "verdict file (stdout when absent)");

    // estimate-growth
    auto* estimate = app.add_subcommand("estimate-growth", "coefficient growth estimators");
    std::string functional = "levin";
    std::string po_path;
    estimate->add_option("--functional", functional)
        ->check(CLI::IsMember({"levin", "disk-type", "beuermann", "log-order-entire",
                               "log-order-disk", "direct-disk"}));
    estimate->add_option("--coeffs", in_path)->required();
    estimate->add_option("--po", po_path, "proximate order JSON file");
    estimate->add_option("--out", out_path, "output file (stdout when absent)");

    // pipelines
    auto* thm_a = app.add_subcommand("theorem-a", "entire-base construction pipeline");
    std::string out_dir = ".";
    std::string base = "exp";
    thm_a->add_option("--base", base, "entire base: exp, or aesw with --gamma/--alpha");
    thm_a->add_option("--gamma", gamma_s);
    thm_a->add_option("--alpha", alpha_s);
    thm_a->add_option("--out-dir", out_dir);

    auto* thm_b = app.add_subcommand("theorem-b", "user-base transform pipeline");
    std::string phi_path;
    thm_b->add_option("--phi", phi_path, "coefficient file of the entire PF_r base");
    thm_b->add_option("--out-dir", out_dir);

    auto* thm_c = app.add_subcommand("theorem-c", "logarithmic order/type pipeline");
    thm_c->add_option("--q", q_s);
    thm_c->add_option("--J", J);
    thm_c->add_option("--out-dir", out_dir);

    // continue-eval
    auto* cont = app.add_subcommand("continue-eval", "continuation value at z != 1");
    double z_re = 0.0, z_im = 0.0;
    cont->add_option("--in", in_path, "h_n coefficient file")->required();
    cont->add_option("--z-re", z_re)->required();
    cont->add_option("--z-im", z_im);
    cont->add_option("--out", out_path);

    for (CLI::App* sc : {construct, karlin, dh, binom, verify, estimate, thm_a, thm_b,
                         thm_c, cont})
        sc->fallthrough();

    CLI11_PARSE(app, argc, argv);

    nlohmann::json config = {
        {"r", r},         {"window", window},       {"kmax", kmax},
        {"tol", tol},     {"seed", seed},           {"precision", precision},
        {"format", format}, {"threads", thread_cap()},
    };

    if (construct->parsed()) {
        config["subcommand"] = "construct";
        config["family"] = family;
        config["N"] = N_out;
        CoefficientSequence s;
        if (family == "aesw") {
            AESWParams p;
            p.gamma = parse_rational(gamma_s);
            for (const auto& a : alpha_s) p.alphas.push_back(parse_rational(a));
            for (const auto& b : beta_s) p.betas.push_back(parse_rational(b));
            config["gamma"] = gamma_s;
            config["alphas"] = alpha_s;
            config["betas"] = beta_s;
            s = family_aesw(p, N_out);
        } else {
            config["q"] = q_s;
            config["J"] = J;
            s = family_qproduct(parse_rational(q_s), J);
        }
        write_coefficients(out_path, s, N_out);
        emit({{"written", out_path}, {"count", N_out}}, config, "");
        return kExitPass;
    }

    if (karlin->parsed()) {
        config["subcommand"] = "karlin";
        config["in"] = in_path;
        const CoefficientSequence c = read_coefficients(in_path);
        KarlinOutput kout = karlin_transform(c, r, kmax, tol);
        write_coefficients(out_path, kout.d, kmax + 1);
        double worst_tail = 0.0;
        for (double t : kout.tail_bound) worst_tail = std::max(worst_tail, t);
        emit({{"written", out_path},
              {"truncation_N", kout.truncation_N},
              {"worst_tail_bound", worst_tail}},
             config, "");
        return kExitPass;
    }

    if (dh->parsed() || binom->parsed()) {
        const bool is_dh = dh->parsed();
        config["subcommand"] = is_dh ? "dh" : "binomial";
        config["in"] = in_path;
        config["N"] = N_out;
        const CoefficientSequence s = read_coefficients(in_path);
        const CoefficientSequence t =
            is_dh ? dh_transform(s) : binomial_alternating_transform(s, N_out);
        write_coefficients(out_path, t, N_out);
        emit({{"written", out_path}, {"count", N_out}}, config, "");
        return kExitPass;
    }

    if (verify->parsed()) {
        config["subcommand"] = "verify-pf";
        config["in"] = in_path;
        config["strategy"] = strategy;
        config["samples"] = samples;
        const CoefficientSequence s = read_coefficients(in_path);
        VerifyStrategy strat;
        if (strategy == "auto") {
            strat = pick_strategy(window, r, seed, samples);
        } else if (strategy == "exhaustive") {
            strat.kind = VerifyStrategy::Kind::Exhaustive;
        } else {
            strat.kind = VerifyStrategy::Kind::ContiguousPlusRandom;
            strat.seed = seed;
            strat.samples = samples;
        }
        const PFVerdict v = verify_pf(s, r, window, strat);
        emit(verdict_to_json(v), config, out_path);
        switch (v.status) {
            case PFVerdict::Status::CertifiedPass: return kExitPass;
            case PFVerdict::Status::Counterexample: return kExitCounterexample;
            case PFVerdict::Status::Undecided: return kExitUndecided;
        }
    }

    if (estimate->parsed()) {
        config["subcommand"] = "estimate-growth";
        config["functional"] = functional;
        config["coeffs"] = in_path;
        const CoefficientSequence s = read_coefficients(in_path);
        GrowthEstimate g;
        if (functional == "levin" || functional == "disk-type" ||
            functional == "direct-disk") {
            if (po_path.empty()) {
                std::cerr << "error: --po is required for functional " << functional << "\n";
                return kExitValidation;
            }
            std::ifstream in(po_path);
            if (!in) {
                std::cerr << "error: cannot open " << po_path << "\n";
                return kExitValidation;
            }
            nlohmann::json pj;
            in >> pj;
            const ProximateOrder po = po_from_json(pj);
            config["po"] = pj;
            if (functional == "levin")
                g = levin_estimate(s, po, kmax);
            else if (functional == "disk-type")
                g = disk_type_estimate(s, po, kmax);
            else {
                std::vector<double> y_grid;
                for (int j = 3; j <= 12; ++j) y_grid.push_back(1.0 - std::pow(2.0, -j));
                g = direct_disk_growth(s, y_grid, DirectDiskFunctional::SigmaOverV, &po);
            }
        } else if (functional == "beuermann") {
            g = beuermann_lambda(s, kmax);
        } else if (functional == "log-order-entire") {
            g = log_order_type_entire(s, kmax);
        } else {
            g = log_order_type_disk(s, kmax);
        }
        if (format == "csv") {
            if (out_path.empty()) {
                std::cerr << "error: --out is required for csv output\n";
                return kExitValidation;
            }
            write_estimate_csv(out_path, g);
        } else {
            emit(estimate_to_json(g), config, out_path);
        }
        return kExitPass;
    }

    auto write_pipeline_artifacts = [&](const PipelineReport& rep,
                                        const std::string& dir) {
        write_coefficients_mixed(dir + "/coefficients.jsonl", rep.coefficients,
                                 rep.exact_upto + 1, rep.coefficients_log,
                                 rep.K + 1);
        {
            std::ofstream out(dir + "/verdict.json");
            out << with_envelope(verdict_to_json(rep.pf_verdict), config).dump(2) << "\n";
        }
        {
            std::ofstream out(dir + "/report.json");
            out << with_envelope(report_to_json(rep), config).dump(2) << "\n";
        }
        std::ofstream csv(dir + "/growth_trace.csv");
        csv << "estimate,window,window_sup\n";
        csv.precision(17);
        for (const auto& e : rep.estimates)
            for (const auto& [w, v] : e.window_values)
                csv << static_cast<int>(e.functional) << "," << w << "," << v << "\n";
    };

    if (thm_a->parsed()) {
        config["subcommand"] = "theorem-a";
        config["base"] = base;
        config["gamma"] = gamma_s;
        config["alphas"] = alpha_s;
        AESWParams p;
        p.gamma = base == "exp" ? Rational(1) : parse_rational(gamma_s);
        for (const auto& a : alpha_s) p.alphas.push_back(parse_rational(a));
        PipelineOptions opt{r, kmax, window, seed, samples, tol};
        const PipelineReport rep = theorem_a_pipeline(p, opt);
        write_pipeline_artifacts(rep, out_dir);
        emit(report_to_json(rep), config, "");
        return rep.pf_verdict.status == PFVerdict::Status::CertifiedPass
                   ? kExitPass
                   : kExitCounterexample;
    }

    if (thm_b->parsed()) {
        config["subcommand"] = "theorem-b";
        if (phi_path.empty()) {
            std::cerr << "error: theorem B's base is non-constructive; supply a verified "
                         "coefficient file with --phi\n";
            return kExitValidation;
        }
        config["phi"] = phi_path;
        const CoefficientSequence phi = read_coefficients(phi_path);
        PipelineOptions opt{r, kmax, window, seed, samples, tol};
        const PipelineReport rep = theorem_b_pipeline(phi, opt);
        write_pipeline_artifacts(rep, out_dir);
        emit(report_to_json(rep), config, "");
        return rep.pf_verdict.status == PFVerdict::Status::CertifiedPass
                   ? kExitPass
                   : kExitCounterexample;
    }

    if (thm_c->parsed()) {
        config["subcommand"] = "theorem-c";
        config["q"] = q_s;
        config["J"] = J;
        PipelineOptions opt{r, kmax, window, seed, samples, tol};
        const PipelineReport rep = theorem_c_pipeline(parse_rational(q_s), J, opt);
        write_pipeline_artifacts(rep, out_dir);
        emit(report_to_json(rep), config, "");
        return rep.pf_verdict.status == PFVerdict::Status::CertifiedPass
                   ? kExitPass
                   : kExitCounterexample;
    }

    if (cont->parsed()) {
        config["subcommand"] = "continue-eval";
        config["in"] = in_path;
        config["z"] = {z_re, z_im};
        const CoefficientSequence h = read_coefficients(in_path);
        const std::complex<double> v =
            evaluate_continued(h, {z_re, z_im}, tol < 1e-6 ? 1e-12 : tol);
        emit({{"re", v.real()}, {"im", v.imag()}}, config, out_path);
        return kExitPass;
    }

    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
