#include "polyafreq/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace polyafreq {

namespace {

constexpr double kLog10E = 0.43429448190325176;

std::string rational_str(const Rational& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

nlohmann::json coeff_line(std::int64_t k, const CoeffValue& v) {
    if (v.kind == CoeffValue::Kind::Exact)
        return {{"k", k}, {"v", rational_str(v.exact)}};
    const LogReal l = v.to_log();
    if (l.sign == 0) return {{"k", k}, {"v", "0"}};
    return {{"k", k}, {"log10_abs", l.log_abs * kLog10E}, {"sign", l.sign}};
}

}  // namespace

void write_coefficients(const std::string& path, const CoefficientSequence& s,
                        std::int64_t count) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::int64_t k = 0; k < count; ++k) out << coeff_line(k, s.at(k)).dump() << "\n";
}

void write_coefficients_mixed(const std::string& path, const CoefficientSequence& exact,
                              std::int64_t exact_upto, const CoefficientSequence& log_seq,
                              std::int64_t count) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    for (std::int64_t k = 0; k < std::min(exact_upto, count); ++k)
        out << coeff_line(k, exact.at(k)).dump() << "\n";
    for (std::int64_t k = exact_upto; k < count; ++k)
        out << coeff_line(k, log_seq.at(k)).dump() << "\n";
}

CoefficientSequence read_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::vector<Rational> exact;
    std::vector<LogReal> logs;
    bool all_exact = true;
    std::string line;
    std::int64_t expected = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const nlohmann::json j = nlohmann::json::parse(line);
        if (j.at("k").get<std::int64_t>() != expected)
            throw std::runtime_error("coefficient file indices must be consecutive from 0");
        ++expected;
        if (j.contains("v")) {
            const Rational v(j.at("v").get<std::string>());
            exact.push_back(v);
            logs.push_back(LogReal::from_rational(v));
        } else {
            all_exact = false;
            LogReal l;
            l.log_abs = j.at("log10_abs").get<double>() / kLog10E;
            l.sign = j.at("sign").get<int>();
            logs.push_back(l);
        }
    }
    if (all_exact) return CoefficientSequence::from_rationals(std::move(exact));
    auto data = std::make_shared<std::vector<LogReal>>(std::move(logs));
    return CoefficientSequence(
        CoeffValue::Kind::Log,
        [data](std::int64_t k) {
            if (k >= static_cast<std::int64_t>(data->size()))
                return CoeffValue::from_log(LogReal::zero());
            return CoeffValue::from_log((*data)[static_cast<std::size_t>(k)]);
        },
        std::nullopt, static_cast<std::int64_t>(data->size()));
}

nlohmann::json po_to_json(const ProximateOrder& po) {
    nlohmann::json j;
    switch (po.kind()) {
        case ProximateOrder::Kind::Constant:
            j["kind"] = "constant";
            j["rho"] = po.family_parameter();
            break;
        case ProximateOrder::Kind::Logarithmic:
            j["kind"] = "logarithmic";
            j["rho0"] = po.family_parameter();
            break;
        default: {
            j["kind"] = "tabulated";
            nlohmann::json samples = nlohmann::json::array();
            for (int i = 1; i <= 16; ++i) {
                const double x = std::pow(10.0, 0.5 * i);
                samples.push_back({x, po.rho(x)});
            }
            j["samples"] = samples;
            j["rho"] = po.rho_limit();
            break;
        }
    }
    j["patch_x0"] = po.patch_x0();
    return j;
}

ProximateOrder po_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant") return make_constant_po(j.at("rho").get<double>());
    if (kind == "logarithmic") return make_logarithmic_po(j.at("rho0").get<double>());
    if (kind == "tabulated") {
        std::vector<std::pair<double, double>> samples;
        for (const auto& s : j.at("samples"))
            samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
        return make_tabulated_po(samples, j.value("rho", samples.back().second));
    }
    throw std::runtime_error("unknown proximate order kind: " + kind);
}

nlohmann::json verdict_to_json(const PFVerdict& v) {
    nlohmann::json j;
    switch (v.status) {
        case PFVerdict::Status::CertifiedPass: j["status"] = "certified_pass"; break;
        case PFVerdict::Status::Counterexample: j["status"] = "counterexample"; break;
        case PFVerdict::Status::Undecided: j["status"] = "undecided"; break;
    }
    j["r"] = v.r;
    j["N"] = v.N;
    j["checked_minor_count"] = v.checked_minor_count;
    j["seed"] = v.seed;
    j["strategy"] = v.strategy;
    auto witness_json = [](const MinorWitness& w) {
        return nlohmann::json{
            {"order", w.order}, {"rows", w.rows}, {"cols", w.cols}, {"det", w.det}};
    };
    if (v.witness) j["witness"] = witness_json(*v.witness);
    if (!v.undecided_minors.empty()) {
        nlohmann::json u = nlohmann::json::array();
        for (const auto& w : v.undecided_minors) u.push_back(witness_json(w));
        j["undecided_minors"] = u;
    }
    return j;
}

nlohmann::json estimate_to_json(const GrowthEstimate& g) {
    static const char* names[] = {"levin_type",          "disk_type",
                                  "beuermann_lambda",    "log_order_type_entire",
                                  "log_order_type_disk", "direct_disk",
                                  "singularity_circle"};
    nlohmann::json j;
    j["functional"] = names[static_cast<int>(g.functional)];
    j["window_values"] = g.window_values;
    j["running_sup"] = g.running_sup;
    if (g.is_infinite)
        j["extrapolated"] = "inf";
    else
        j["extrapolated"] = g.extrapolated;
    j["degenerate"] = g.degenerate;
    j["residual"] = g.residual;
    j["derived"] = g.derived;
    return j;
}

nlohmann::json report_to_json(const PipelineReport& r) {
    nlohmann::json j;
    j["base"] = r.base_description;
    j["r"] = r.r;
    j["K"] = r.K;
    j["exact_upto"] = r.exact_upto;
    j["pf_verdict"] = verdict_to_json(r.pf_verdict);
    nlohmann::json growth = nlohmann::json::array();
    for (const auto& c : r.growth) {
        nlohmann::json g;
        g["name"] = c.name;
        if (c.measured_infinite)
            g["measured"] = "inf";
        else
            g["measured"] = c.measured;
        if (!std::isnan(c.target)) {
            g["target"] = c.target;
            g["rel_tolerance"] = c.rel_tolerance;
        }
        g["provenance"] = c.provenance;
        g["pass"] = c.pass;
        growth.push_back(g);
    }
    j["growth"] = growth;
    nlohmann::json ests = nlohmann::json::array();
    for (const auto& e : r.estimates) ests.push_back(estimate_to_json(e));
    j["estimates"] = ests;
    j["identity_residuals"] = r.identity_residuals;
    j["notes"] = r.notes;
    j["ok"] = r.ok;
    return j;
}

std::string config_hash(const nlohmann::json& config) {
    const std::string s = config.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

nlohmann::json with_envelope(nlohmann::json payload, const nlohmann::json& config) {
    payload["config"] = config;
    payload["config_hash"] = config_hash(config);
    payload["tool_version"] = kToolVersion;
    return payload;
}

}  // namespace polyafreq
