// Command-line surface: metrics, symmetrize, extract, counterexample,
// single-letter, validate. Reports are JSON on stdout or --output; CSV
// curves are optional side outputs. Everything is deterministic given
// --seed.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avwc/avc.hpp"
#include "avwc/counterexample.hpp"
#include "avwc/extraction.hpp"
#include "avwc/io.hpp"
#include "avwc/probability.hpp"
#include "avwc/security.hpp"
#include "avwc/wiretap.hpp"

namespace {

using avwc::io::json;

std::string resolve_output_path(const std::string& path) {
    if (path.empty() || path.front() == '/') return path;
    const char* dir = std::getenv("AVWC_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0') return path;
    std::string d(dir);
    if (d.back() != '/') d += '/';
    return d + path;
}

void emit(const json& report, const std::string& output) {
    if (output.empty()) {
        std::cout << report.dump(2) << '\n';
    } else {
        avwc::io::save_json_file(resolve_output_path(output), report);
    }
}

json envelope(const std::string& command, const std::vector<std::string>& input_paths,
              std::uint64_t seed) {
    json j;
    j["schema_version"] = avwc::io::kSchemaVersion;
    j["kind"] = "analysis_report";
    j["tool_version"] = avwc::io::kToolVersion;
    j["command"] = command;
    json inputs = json::object();
    for (const auto& p : input_paths) inputs[p] = avwc::io::file_digest(p);
    j["inputs"] = std::move(inputs);
    j["seeds"] = json{{"seed", seed}};
    return j;
}

std::vector<avwc::Channel> wiretaps_of(const avwc::io::ModelFile& model) {
    if (const auto* g = std::get_if<avwc::GavwcInstance>(&model)) return g->wiretaps();
    if (const auto* f = std::get_if<avwc::AvwcFamily>(&model)) return f->wiretap_channels();
    throw avwc::io::FormatError("expected a channel family file, got a code");
}

std::vector<avwc::Channel> mains_of(const avwc::io::ModelFile& model) {
    if (const auto* g = std::get_if<avwc::GavwcInstance>(&model)) return g->mains();
    if (const auto* f = std::get_if<avwc::AvwcFamily>(&model)) return f->main_channels();
    throw avwc::io::FormatError("expected a channel family file, got a code");
}

json audit_to_json(const avwc::EquivalenceAudit& audit, double tol) {
    json j;
    j["ss_advantage_lower"] = avwc::io::reported_value(audit.ss_lower, tol, false);
    j["ds_advantage"] = avwc::io::reported_value(audit.ds, tol, true);
    j["mis_advantage_bits"] = avwc::io::reported_value(audit.mis_bits, tol, false);
    j["strong_leakage_bits"] = avwc::io::reported_value(audit.strong_bits, tol, true);
    j["slacks"] = json{{"ss_le_ds", avwc::io::prob_to_string(audit.slack_ss_le_ds)},
                       {"ds_le_2ss", avwc::io::prob_to_string(audit.slack_ds_le_2ss)},
                       {"pinsker_squared", avwc::io::prob_to_string(audit.slack_pinsker)},
                       {"ds_to_mis", avwc::io::prob_to_string(audit.slack_ds_to_mis)}};
    j["pinsker_linear_bits_unasserted"] = avwc::io::prob_to_string(audit.pinsker_linear_bits);
    j["pass"] = json{{"ss_le_ds", audit.pass_ss_le_ds},
                     {"ds_le_2ss", audit.pass_ds_le_2ss},
                     {"pinsker_squared", audit.pass_pinsker},
                     {"ds_to_mis", audit.pass_ds_to_mis},
                     {"all", audit.all_pass}};
    j["note"] = audit.note;
    return j;
}

int run_metrics(const std::string& code_path, const std::string& family_path,
                const avwc::SearchConfig& config, double tol, const std::string& output) {
    const auto code_model = avwc::io::load_model(code_path);
    const auto* code = std::get_if<avwc::RandomEncoderCode>(&code_model);
    if (code == nullptr) throw avwc::io::FormatError(code_path + ": expected a code file");
    const auto family = avwc::io::load_model(family_path);
    const auto wiretaps = wiretaps_of(family);

    const avwc::AdvantageReport adv = avwc::advantage_report(*code, wiretaps, config);
    const avwc::EquivalenceAudit audit = avwc::equivalence_audit(*code, wiretaps, config, tol);

    json j = envelope("metrics", {code_path, family_path}, config.seed);
    json ja;
    ja["strong_leakage_bits"] = avwc::io::reported_value(adv.strong_leakage_bits, tol, true);
    ja["mis_advantage_bits"] = avwc::io::reported_value(adv.mis_advantage_bits, tol, false);
    ja["mis_converged"] = adv.mis_converged;
    ja["ds_advantage"] = avwc::io::reported_value(adv.ds_advantage, tol, true);
    ja["ss_advantage_lower"] = avwc::io::reported_value(adv.ss_advantage_lower, tol, false);
    ja["ss_restricted"] = adv.ss_restricted;
    ja["witnesses"] = json{{"strong_leakage_wiretap", adv.strong_leakage_wiretap},
                           {"mis_wiretap", adv.mis_wiretap},
                           {"ds", json{{"wiretap", adv.ds_witness.wiretap},
                                       {"u0", adv.ds_witness.u0},
                                       {"u1", adv.ds_witness.u1}}},
                           {"ss_wiretap", adv.ss_witness.wiretap},
                           {"ss_partition", adv.ss_witness.partition}};
    j["advantages"] = std::move(ja);
    j["equivalence_audit"] = audit_to_json(audit, tol);

    if (const auto* af = std::get_if<avwc::AvwcFamily>(&family)) {
        const auto sym = avwc::symmetrizability_check(af->main_channels());
        j["main_family_symmetrizable"] = sym.feasible;
        if (sym.feasible)
            j["advisory"] =
                "main family is symmetrizable: reliable deterministic-code communication "
                "is impossible without common randomness";
    }
    emit(j, output);
    return 0;
}

int run_symmetrize(const std::string& family_path, const std::string& output) {
    const auto family = avwc::io::load_model(family_path);
    const auto mains = mains_of(family);
    const auto result = avwc::symmetrizability_check(mains);

    json j = envelope("symmetrize", {family_path}, 0);
    j["feasible"] = result.feasible;
    if (result.feasible) {
        j["witness"] = avwc::io::to_json(result.witness->t);
        j["max_residual"] = avwc::io::prob_to_string(result.max_residual);
        j["advisory"] =
            "family is symmetrizable: reliable deterministic-code communication is "
            "impossible without common randomness";
    }
    emit(j, output);
    return 0;
}

json step_log_to_json(const std::vector<avwc::StepLog>& log) {
    json j = json::array();
    for (const auto& s : log)
        j.push_back(json{{"step", s.step},
                         {"retries", s.retries},
                         {"leakage_sum_bits", avwc::io::prob_to_string(s.leakage_sum_bits)},
                         {"error_sum", avwc::io::prob_to_string(s.error_sum)},
                         {"collisions", s.collisions}});
    return j;
}

int run_extract(const std::string& base_path, const std::string& family_path, int theorem,
                double epsilon, double a, std::uint64_t seed, std::size_t retries, double tol,
                const std::string& output) {
    const auto base_model = avwc::io::load_model(base_path);
    const auto* base = std::get_if<avwc::RandomEncoderCode>(&base_model);
    if (base == nullptr) throw avwc::io::FormatError(base_path + ": expected a code file");
    const auto family_model = avwc::io::load_model(family_path);
    const auto* family = std::get_if<avwc::GavwcInstance>(&family_model);
    if (family == nullptr)
        throw avwc::io::FormatError(family_path + ": extract needs a gavwc_instance");

    // Measured base statistics; the schedule treats them as lambda/8, mu/8.
    double mu_hat = 0.0, lambda_hat = 0.0, delta_hat = 0.0;
    for (const auto& v : family->wiretaps()) {
        const auto profile = avwc::leakage_profile(*base, v);
        double mean = 0.0;
        for (double d : profile) {
            mean += d;
            delta_hat = std::max(delta_hat, d);
        }
        mu_hat = std::max(mu_hat, mean / static_cast<double>(profile.size()));
    }
    for (const auto& w : family->mains())
        lambda_hat = std::max(lambda_hat, avwc::average_error(*base, w));
    const double delta_bound = avwc::uniform_delta_bound(*family);

    avwc::ScheduleResult schedule;
    if (theorem == 1)
        schedule = avwc::derive_params_theorem1(family->block_length(), epsilon, 8.0 * lambda_hat,
                                                8.0 * mu_hat, base->message_count(), delta_bound);
    else
        schedule = avwc::derive_params_theorem3(family->block_length(), epsilon, 8.0 * lambda_hat,
                                                8.0 * mu_hat, base->message_count(), delta_bound,
                                                a);

    json j = envelope("extract", {base_path, family_path}, seed);
    j["measured_base"] = json{{"lambda", avwc::io::prob_to_string(lambda_hat)},
                              {"mu_bits", avwc::io::prob_to_string(mu_hat)},
                              {"delta_bits", avwc::io::prob_to_string(delta_hat)},
                              {"uniform_delta_bound_bits", avwc::io::prob_to_string(delta_bound)},
                              {"budget_convention", "measured values enter the schedule as "
                                                    "lambda/8 and mu/8"}};
    j["schedule_violations"] = schedule.violations;
    if (!schedule.params.has_value()) {
        j["error"] = json{{"message", "no usable schedule at this block length"}};
        emit(j, output);
        return 1;
    }

    avwc::ExtractionParams params = *schedule.params;
    params.seed = seed;
    params.retry_budget = retries;
    j["params"] = json{{"J", params.message_count_j},
                       {"K", params.samples_per_message_k},
                       {"beta", avwc::io::prob_to_string(params.beta)},
                       {"A_bits", avwc::io::prob_to_string(params.leakage_budget_a_bits)},
                       {"B", avwc::io::prob_to_string(params.error_budget_b)},
                       {"delta_bits", avwc::io::prob_to_string(params.delta_bits)},
                       {"retry_budget", params.retry_budget},
                       {"seed", params.seed}};

    const auto pre = avwc::check_preconditions(params, family->mains().size(),
                                               family->wiretaps().size());
    j["preconditions"] = json{{"pass", pre.pass},
                              {"margin_wiretap", avwc::io::prob_to_string(pre.margin_wiretap)},
                              {"margin_main", avwc::io::prob_to_string(pre.margin_main)},
                              {"margin_collision",
                               avwc::io::prob_to_string(pre.margin_collision)},
                              {"violations", pre.violations}};

    const auto outcome = avwc::extract(*base, family->mains(), family->wiretaps(), params);
    if (!outcome.ok()) {
        const auto& f = *outcome.failure;
        j["failure"] = json{{"step", f.step},
                            {"retries", f.retries},
                            {"reason", f.reason},
                            {"worst_leakage_sum_bits",
                             avwc::io::prob_to_string(f.worst_leakage_sum_bits)},
                            {"worst_error_sum", avwc::io::prob_to_string(f.worst_error_sum)},
                            {"worst_collisions", f.worst_collisions}};
        emit(j, output);
        return 1;
    }

    const auto& result = *outcome.result;
    j["derived_code"] = avwc::io::to_json(result.derived);
    j["clusters"] = result.clusters;
    j["step_log"] = step_log_to_json(result.step_log);

    const auto audit =
        avwc::audit_extracted(result, *base, family->mains(), family->wiretaps(), params, tol);
    j["audit"] = json{
        {"error_bound", avwc::io::reported_value(audit.error_bound, tol, true)},
        {"leakage_bound_bits", avwc::io::reported_value(audit.leakage_bound_bits, tol, true)},
        {"worst_message_error", avwc::io::prob_to_string(audit.worst_message_error)},
        {"worst_message_leakage_bits",
         avwc::io::prob_to_string(audit.worst_message_leakage_bits)},
        {"worst_uniform_leakage_bits",
         avwc::io::prob_to_string(audit.worst_uniform_leakage_bits)},
        {"error_ok", audit.error_ok},
        {"leakage_ok", audit.leakage_ok},
        {"pass", audit.pass()}};
    emit(j, output);
    return audit.pass() ? 0 : 1;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
    std::ofstream out(resolve_output_path(path));
    if (!out) throw avwc::io::FormatError("cannot write '" + path + "'");
    out << header << '\n';
    for (const auto& r : rows) out << r << '\n';
}

int run_counterexample(const std::string& scenario, std::size_t n, double a, double b, double g,
                       std::size_t f_override, std::size_t samples, std::uint64_t seed,
                       const std::string& csv, const std::string& output) {
    json j = envelope("counterexample", {}, seed);
    j["scenario"] = scenario;
    std::vector<std::string> csv_rows;
    std::string csv_header;
    avwc::Rng rng(seed);

    if (scenario == "naive-strong") {
        // uniform-prior leakage of the rate-1 code, closed form vs brute force
        csv_header = "n,f,closed_form_bits,brute_force_bits";
        json rows = json::array();
        for (std::size_t ni = 2; ni <= n; ++ni) {
            const std::size_t f =
                f_override != 0 ? f_override : avwc::theta_size_for_rate(ni, a);
            const auto theta = avwc::sample_theta(ni, f, rng);
            const double closed = avwc::strong_leakage_closed_form(ni, f);
            const double brute = avwc::mutual_information(
                avwc::Distribution::uniform(std::size_t{1} << ni), avwc::v_theta_channel(theta));
            rows.push_back(json{{"n", ni},
                                {"f", f},
                                {"closed_form_bits", avwc::io::prob_to_string(closed)},
                                {"brute_force_bits", avwc::io::prob_to_string(brute)}});
            csv_rows.push_back(std::to_string(ni) + "," + std::to_string(f) + "," +
                               avwc::io::prob_to_string(closed) + "," +
                               avwc::io::prob_to_string(brute));
        }
        j["curve"] = std::move(rows);
    } else if (scenario == "skewed") {
        csv_header = "n,f,exact_leakage_bits,bound_bits";
        json rows = json::array();
        for (std::size_t ni = 2; ni <= n; ++ni) {
            const std::size_t f =
                f_override != 0 ? f_override : avwc::theta_size_for_rate(ni, a);
            auto theta = avwc::sample_theta(ni, f, rng);
            if (!theta.contains(0)) {
                theta.members[0] = 0;  // the attack needs the all-zero word
                theta = avwc::make_theta(ni, theta.members);
            }
            const auto report = avwc::skewed_attack(ni, theta.size(), theta);
            rows.push_back(json{{"n", ni},
                                {"f", theta.size()},
                                {"exact_leakage_bits",
                                 avwc::io::prob_to_string(report.exact_leakage_bits)},
                                {"bound_bits", avwc::io::prob_to_string(report.bound_bits)}});
            csv_rows.push_back(std::to_string(ni) + "," + std::to_string(theta.size()) + "," +
                               avwc::io::prob_to_string(report.exact_leakage_bits) + "," +
                               avwc::io::prob_to_string(report.bound_bits));
        }
        j["curve"] = std::move(rows);
    } else if (scenario == "case1") {
        const auto code = avwc::naive_identity_code(n);
        const auto report = avwc::case1_attack(code, a, g);
        j["result"] = json{
            {"covered_messages", report.covered_messages},
            {"theta_size", report.theta.size()},
            {"eavesdropper_success", avwc::io::prob_to_string(report.eavesdropper_success)},
            {"message_entropy_bits", avwc::io::prob_to_string(report.message_entropy_bits)},
            {"fano_lower_bound_bits_per_symbol",
             avwc::io::prob_to_string(report.fano_lower_bound)}};
    } else if (scenario == "case2") {
        const auto pc = avwc::case2_partition_code(n, 1.0 - b);
        const double bound = avwc::case2_leakage_bound(n, a, b);
        const std::size_t f = avwc::theta_size_for_rate(n, a);
        double worst = 0.0;
        // random Thetas plus adversarial ones: inside one cell / spread across cells
        for (std::size_t s = 0; s < samples; ++s) {
            const auto theta = avwc::sample_theta(n, f, rng);
            worst = std::max(worst, avwc::case2_radius_certificate(pc, theta));
        }
        for (std::size_t cell = 0; cell < std::min<std::size_t>(4, pc.cell_count); ++cell) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < std::min(f, pc.cell_size); ++i)
                members.push_back(cell * pc.cell_size + i);
            worst = std::max(
                worst, avwc::case2_radius_certificate(pc, avwc::make_theta(n, members)));
        }
        for (std::size_t off = 0; off < 4; ++off) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < f; ++i)
                members.push_back(((i + off) % pc.cell_count) * pc.cell_size + off);
            worst = std::max(
                worst, avwc::case2_radius_certificate(pc, avwc::make_theta(n, members)));
        }
        j["result"] = json{{"cells", pc.cell_count},
                           {"cell_size", pc.cell_size},
                           {"theta_size", f},
                           {"max_radius_certificate_bits", avwc::io::prob_to_string(worst)},
                           {"bound_bits", avwc::io::prob_to_string(bound)},
                           {"within_bound", worst <= bound + 1e-9}};
        csv_header = "n,a,b,max_certificate_bits,bound_bits";
        csv_rows.push_back(std::to_string(n) + "," + avwc::io::prob_to_string(a) + "," +
                           avwc::io::prob_to_string(b) + "," + avwc::io::prob_to_string(worst) +
                           "," + avwc::io::prob_to_string(bound));
    } else if (scenario == "gavc-erasure") {
        const std::size_t f = f_override != 0 ? f_override : avwc::theta_size_for_rate(n, a);
        std::vector<std::size_t> members(f);
        for (std::size_t i = 0; i < f; ++i) members[i] = i;
        const auto theta = avwc::make_theta(n, members);
        const auto code = avwc::naive_identity_code(n);
        const avwc::Channel w = avwc::gavc_erasure_channel(theta);
        // decode over the enlarged output alphabet: erasure is never decoded
        std::vector<std::size_t> decoder = code.decoder;
        decoder.push_back(avwc::RandomEncoderCode::kErrorSymbol);
        const avwc::RandomEncoderCode padded(code.encoder, decoder);
        j["result"] =
            json{{"theta_size", f},
                 {"max_error", avwc::io::prob_to_string(avwc::max_error(padded, w))},
                 {"average_error", avwc::io::prob_to_string(avwc::average_error(padded, w))}};
    } else {
        throw avwc::io::FormatError("unknown scenario '" + scenario + "'");
    }

    if (!csv.empty() && !csv_rows.empty()) write_csv(csv, csv_header, csv_rows);
    emit(j, output);
    return 0;
}

int run_single_letter(const std::string& family_path, double grid, std::size_t aux_cap,
                      std::size_t restarts, std::uint64_t seed, const std::string& output) {
    const auto family_model = avwc::io::load_model(family_path);
    const auto* family = std::get_if<avwc::AvwcFamily>(&family_model);
    if (family == nullptr)
        throw avwc::io::FormatError(family_path + ": single-letter needs an avwc_family");
    const auto opt = avwc::optimize_single_letter(*family, grid, aux_cap, restarts, seed);

    json j = envelope("single-letter", {family_path}, seed);
    j["value_bits"] = avwc::io::reported_value(opt.value_bits, grid, false);
    j["inner_exact"] = opt.inner_exact;
    json prior = json::array();
    for (std::size_t u = 0; u < opt.prior.size(); ++u)
        prior.push_back(avwc::io::prob_to_string(opt.prior[u]));
    j["prior"] = std::move(prior);
    j["cond"] = avwc::io::to_json(opt.cond);
    json q = json::array();
    for (std::size_t s = 0; s < opt.worst_q.size(); ++s)
        q.push_back(avwc::io::prob_to_string(opt.worst_q[s]));
    j["worst_q"] = std::move(q);
    emit(j, output);
    return 0;
}

int run_validate(const std::string& path) {
    const json j = avwc::io::load_json_file(path);
    if (!j.contains("kind") || !j["kind"].is_string())
        throw avwc::io::FormatError(path + ": missing 'kind'");
    const std::string kind = j["kind"];
    if (kind == "analysis_report") {
        avwc::io::check_schema_version(j, kind);
    } else {
        avwc::io::load_model(path);
    }
    std::cout << json{{"valid", true}, {"kind", kind}}.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wiretap security toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    std::string output;
    app.add_option("--seed", seed, "master seed for all randomized steps")->capture_default_str();
    app.add_option("--tolerance", tolerance, "numeric tolerance for audits")
        ->capture_default_str();
    app.add_option("--output", output, "report path (default: stdout)");

    auto* metrics = app.add_subcommand("metrics", "security advantages and equivalence audit");
    std::string code_path, family_path;
    avwc::SearchConfig config;
    metrics->add_option("--code", code_path, "code file")->required();
    metrics->add_option("--family", family_path, "channel family file")->required();
    metrics->add_option("--dirichlet-samples", config.dirichlet_samples)->capture_default_str();
    metrics->add_option("--partition-cap", config.partition_cap)->capture_default_str();

    auto* symmetrize = app.add_subcommand("symmetrize", "symmetrizability feasibility check");
    std::string sym_family;
    symmetrize->add_option("--input", sym_family, "channel family file")->required();

    auto* extract = app.add_subcommand("extract", "derive a per-message, prior-free code");
    std::string base_path, ext_family;
    int theorem = 1;
    double epsilon = 0.6, rate_a = 0.0;
    std::size_t retries = 64;
    extract->add_option("--base", base_path, "base code file")->required();
    extract->add_option("--family", ext_family, "gavwc instance file")->required();
    extract->add_option("--theorem", theorem)->check(CLI::IsMember({1, 3}))
        ->capture_default_str();
    extract->add_option("--epsilon", epsilon)->capture_default_str();
    extract->add_option("--a", rate_a, "rate sacrifice for the theorem-3 schedule")
        ->capture_default_str();
    extract->add_option("--retries", retries)->capture_default_str();

    auto* counterexample = app.add_subcommand("counterexample", "worked counterexample scenarios");
    std::string scenario, csv;
    std::size_t ce_n = 6, ce_f = 0, ce_samples = 64;
    double ce_a = 0.5, ce_b = 0.5, ce_g = 0.015625;
    counterexample->add_option("--scenario", scenario)
        ->check(CLI::IsMember({"naive-strong", "skewed", "case1", "case2", "gavc-erasure"}))
        ->required();
    counterexample->add_option("--n", ce_n)->capture_default_str();
    counterexample->add_option("--a", ce_a)->capture_default_str();
    counterexample->add_option("--b", ce_b)->capture_default_str();
    counterexample->add_option("--g", ce_g)->capture_default_str();
    counterexample->add_option("--f", ce_f, "override theta size")->capture_default_str();
    counterexample->add_option("--samples", ce_samples)->capture_default_str();
    counterexample->add_option("--csv", csv, "write a leakage-vs-n curve");

    auto* single_letter = app.add_subcommand("single-letter", "optimize the secrecy objective");
    std::string sl_family;
    double grid = 1e-2;
    std::size_t aux_cap = 0, budget = 16;
    single_letter->add_option("--family", sl_family, "avwc family file")->required();
    single_letter->add_option("--grid", grid)->capture_default_str();
    single_letter->add_option("--aux-cap", aux_cap, "auxiliary alphabet size (0: |X|+1)")
        ->capture_default_str();
    single_letter->add_option("--budget", budget, "random restarts")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "validate a model or report file");
    std::string val_path;
    validate->add_option("--input", val_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        config.seed = seed;
        if (metrics->parsed())
            return run_metrics(code_path, family_path, config, tolerance, output);
        if (symmetrize->parsed()) return run_symmetrize(sym_family, output);
        if (extract->parsed())
            return run_extract(base_path, ext_family, theorem, epsilon, rate_a, seed, retries,
                               tolerance, output);
        if (counterexample->parsed())
            return run_counterexample(scenario, ce_n, ce_a, ce_b, ce_g, ce_f, ce_samples, seed,
                                      csv, output);
        if (single_letter->parsed())
            return run_single_letter(sl_family, grid, aux_cap, budget, seed, output);
        if (validate->parsed()) return run_validate(val_path);
    } catch (const std::exception& e) {
        std::cout << json{{"error", json{{"message", e.what()}}}}.dump(2) << '\n';
        return 1;
    }
    return 0;
}
