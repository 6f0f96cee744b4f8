// Command-line front end: every analysis is a subcommand emitting CSV (or
// JSON with --json) suitable for regenerating capacity figures and tables.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bicm/alphabet.hpp"
#include "bicm/asymptotics.hpp"
#include "bicm/capacity.hpp"
#include "bicm/csv.hpp"
#include "bicm/curves.hpp"
#include "bicm/hadamard.hpp"
#include "bicm/search.hpp"
#include "bicm/shaping.hpp"
#include "bicm/tables.hpp"
#include "bicm/util.hpp"
#include "bicm/version.hpp"

using nlohmann::json;

namespace {

struct CommonOptions {
    std::string alphabet_spec;
    std::string labeling_spec;
    std::string bits_spec;
    double fading_second_moment = 1.0;
    int quad_nodes = 256;
    std::int64_t mc_samples = 1'000'000;
    std::uint64_t seed = 1;
    bool monte_carlo = false;
    bool json_output = false;
    std::string out_path;
};

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> values;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        if (field.empty()) continue;
        values.push_back(std::stod(field));
    }
    if (values.empty()) throw std::domain_error("expected a comma-separated list of numbers, got '" + text + "'");
    return values;
}

/// "lo:hi:count" with linear spacing.
std::vector<double> parse_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::domain_error("expected lo:hi:count, got '" + text + "'");
    const double lo = std::stod(text.substr(0, first));
    const double hi = std::stod(text.substr(first + 1, second - first - 1));
    const int count = std::stoi(text.substr(second + 1));
    if (count < 2 || !(hi > lo)) throw std::domain_error("range needs hi > lo and count >= 2");
    std::vector<double> values(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (count - 1);
    return values;
}

Eigen::MatrixXd resolve_alphabet(const std::string& spec) {
    if (spec.empty()) throw std::domain_error("--alphabet is required");
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "pam") return bicm::pam(std::stoll(tail));
    if (head == "psk") return bicm::psk(std::stoll(tail));
    if (head == "qam") {
        const auto x = tail.find('x');
        if (x == std::string::npos) throw std::domain_error("qam spec must look like qam:4x4");
        return bicm::qam(std::stoll(tail.substr(0, x)), std::stoll(tail.substr(x + 1)));
    }
    if (head == "file") return bicm::load_alphabet_file(tail);
    throw std::domain_error("unknown alphabet spec '" + spec + "' (expected pam:M, psk:M, qam:AxB or file:path)");
}

bicm::Labeling resolve_labeling(const std::string& spec, int order) {
    if (spec.empty()) throw std::domain_error("--labeling is required");
    if (spec.rfind("file:", 0) == 0) {
        const bicm::Labeling l = bicm::load_labeling_file(spec.substr(5));
        if (l.order() != order) throw std::domain_error("labeling file order does not match the alphabet size");
        return l;
    }
    return bicm::Labeling::standard(bicm::labeling_kind_from_string(spec), order);
}

bicm::Constellation resolve_constellation(const CommonOptions& options) {
    Eigen::MatrixXd alphabet = resolve_alphabet(options.alphabet_spec);
    const int order = bicm::exact_log2(alphabet.rows());
    bicm::Labeling labeling = resolve_labeling(options.labeling_spec, order);
    if (options.bits_spec.empty())
        return bicm::Constellation::uniform(std::move(alphabet), std::move(labeling));
    return bicm::Constellation::with_bits(std::move(alphabet), std::move(labeling),
                                          bicm::BitDistribution(parse_number_list(options.bits_spec)));
}

bicm::QuadratureSpec resolve_quadrature(const CommonOptions& options) {
    bicm::QuadratureSpec quad;
    quad.method = options.monte_carlo ? bicm::QuadratureSpec::Method::MonteCarlo
                                      : bicm::QuadratureSpec::Method::GaussHermite;
    quad.nodes = options.quad_nodes;
    quad.mc_samples = options.mc_samples;
    quad.seed = options.seed;
    return quad;
}

std::string timestamp_utc() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buffer[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

json manifest_json(const std::string& subcommand, const CommonOptions& options) {
    json quad{{"method", options.monte_carlo ? "monte-carlo" : "gauss-hermite"},
              {"nodes", options.quad_nodes},
              {"mc_samples", options.mc_samples},
              {"seed", options.seed}};
    return json{{"subcommand", subcommand},
                {"alphabet", options.alphabet_spec},
                {"labeling", options.labeling_spec},
                {"bits", options.bits_spec},
                {"fading_second_moment", options.fading_second_moment},
                {"quadrature", quad},
                {"version", bicm::kVersion},
                {"timestamp", timestamp_utc()}};
}

json number_or_null(double value) {
    if (std::isinf(value) || std::isnan(value)) return nullptr;
    return value;
}

/// Writes CSV to stdout or --out; a file output gets a sibling manifest.
void emit_csv(const CommonOptions& options, const std::string& subcommand, const std::string& csv) {
    if (options.out_path.empty()) {
        std::fputs(csv.c_str(), stdout);
        return;
    }
    std::ofstream out(options.out_path);
    if (!out) throw std::domain_error("cannot write to '" + options.out_path + "'");
    out << csv;
    std::ofstream manifest(options.out_path + ".manifest.json");
    manifest << manifest_json(subcommand, options).dump(2) << "\n";
}

void emit_json(const CommonOptions& options, json payload) {
    const std::string text = payload.dump(2) + "\n";
    if (options.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(options.out_path);
    if (!out) throw std::domain_error("cannot write to '" + options.out_path + "'");
    out << text;
}

std::string points_csv(const std::vector<bicm::CapacityPoint>& points) {
    std::string csv = "snr_db,rate_bpcu,ebn0_db\n";
    for (const auto& point : points) {
        csv += bicm::csv::number(bicm::linear_to_db(point.snr)) + "," + bicm::csv::number(point.rate) + "," +
               bicm::csv::number(point.ebn0_db) + "\n";
    }
    return csv;
}

json points_json(const std::vector<bicm::CapacityPoint>& points) {
    json rows = json::array();
    for (const auto& point : points)
        rows.push_back({{"snr_db", number_or_null(bicm::linear_to_db(point.snr))},
                        {"rate_bpcu", point.rate},
                        {"ebn0_db", number_or_null(point.ebn0_db)},
                        {"ebn0_db_infinite", std::isinf(point.ebn0_db)}});
    return rows;
}

void add_common_options(CLI::App* app, CommonOptions& options, bool with_labeling = true, bool with_bits = true) {
    app->add_option("--alphabet", options.alphabet_spec, "pam:M | psk:M | qam:AxB | file:<path>");
    if (with_labeling) {
        app->add_option("--labeling", options.labeling_spec, "brgc | nbc | bsgc | fbc | file:<path>");
        app->add_option("--labeling-file", [&options](const std::vector<std::string>& values) {
            options.labeling_spec = "file:" + values.front();
            return true;
        }, "labeling file path (alias for --labeling file:<path>)");
    }
    if (with_bits) app->add_option("--bits", options.bits_spec, "per-position probabilities P_{C_k}(0), comma separated");
    app->add_option("--h2", options.fading_second_moment, "fading second moment E[H^2] (1 = AWGN)");
    app->add_option("--quad-nodes", options.quad_nodes, "Gauss-Hermite nodes per dimension");
    app->add_option("--mc-samples", options.mc_samples, "Monte-Carlo sample count");
    app->add_option("--seed", options.seed, "Monte-Carlo seed");
    app->add_flag("--mc", options.monte_carlo, "integrate by Monte-Carlo instead of quadrature");
    app->add_flag("--json", options.json_output, "emit JSON with an embedded run manifest");
    app->add_option("--out", options.out_path, "write output to a file (CSV gets a sibling manifest)");
}

int run_cli(int argc, char** argv) {
    CLI::App app{"BICM capacity, labeling and shaping analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bicm::kVersion);

    // capacity
    CommonOptions capacity_options;
    std::string capacity_kind = "bicm";
    std::string snr_db_list, snr_db_range;
    CLI::App* capacity_cmd = app.add_subcommand("capacity", "capacity sweep over an SNR grid");
    add_common_options(capacity_cmd, capacity_options);
    capacity_cmd->add_option("--kind", capacity_kind, "awgn | cm | bicm");
    capacity_cmd->add_option("--snr-db", snr_db_list, "comma-separated SNR grid in dB");
    capacity_cmd->add_option("--snr-db-range", snr_db_range, "lo:hi:count SNR grid in dB");

    // f-curve
    CommonOptions fcurve_options;
    std::string fcurve_kind = "bicm";
    std::string rate_list, rate_range;
    CLI::App* fcurve_cmd = app.add_subcommand("f-curve", "Eb/N0 bound f(Rc) over a rate grid");
    add_common_options(fcurve_cmd, fcurve_options);
    fcurve_cmd->add_option("--kind", fcurve_kind, "awgn | cm | bicm");
    fcurve_cmd->add_option("--rates", rate_list, "comma-separated rate grid (bit/symbol)");
    fcurve_cmd->add_option("--rate-range", rate_range, "lo:hi:count rate grid");

    // gap
    CommonOptions gap_options;
    std::string gap_kind = "bicm";
    std::string gap_rate_list, gap_rate_range;
    CLI::App* gap_cmd = app.add_subcommand("gap", "SNR gap to the AWGN capacity over a rate grid");
    add_common_options(gap_cmd, gap_options);
    gap_cmd->add_option("--kind", gap_kind, "cm | bicm");
    gap_cmd->add_option("--rates", gap_rate_list, "comma-separated rate grid (bit/symbol)");
    gap_cmd->add_option("--rate-range", gap_rate_range, "lo:hi:count rate grid");

    // min-ebn0
    CommonOptions min_options;
    std::string min_kind = "bicm";
    double min_rate_lo = 0.01, min_rate_hi = 0.0;
    int min_grid = 200;
    CLI::App* min_cmd = app.add_subcommand("min-ebn0", "minimum Eb/N0 for reliable transmission");
    add_common_options(min_cmd, min_options);
    min_cmd->add_option("--kind", min_kind, "awgn | cm | bicm");
    min_cmd->add_option("--rate-min", min_rate_lo, "low end of the search grid");
    min_cmd->add_option("--rate-max", min_rate_hi, "high end of the search grid (default 0.9 * max rate)");
    min_cmd->add_option("--grid-points", min_grid, "log-spaced f samples used to bracket minima");

    // alpha
    CommonOptions alpha_options;
    std::string alpha_kind = "bicm";
    CLI::App* alpha_cmd = app.add_subcommand("alpha", "first-order capacity coefficient");
    add_common_options(alpha_cmd, alpha_options);
    alpha_cmd->add_option("--kind", alpha_kind, "cm | bicm");

    // foo-check
    CommonOptions foo_options;
    double foo_tolerance = 1e-9;
    CLI::App* foo_cmd = app.add_subcommand("foo-check", "first-order optimality verdict");
    add_common_options(foo_cmd, foo_options, true, false);
    foo_cmd->add_option("--tolerance", foo_tolerance, "relative residual tolerance");

    // ht
    CommonOptions ht_options;
    CLI::App* ht_cmd = app.add_subcommand("ht", "Hadamard spectrum of an alphabet (debug)");
    add_common_options(ht_cmd, ht_options, false, false);

    // search-labelings
    CommonOptions search_options_cli;
    int search_threads = 1;
    bool search_allow_large = false;
    std::string summary_out;
    CLI::App* search_cmd = app.add_subcommand("search-labelings", "exhaustive alpha census over all M! labelings");
    add_common_options(search_cmd, search_options_cli, false, false);
    search_cmd->add_option("--threads", search_threads, "contiguous permutation ranges scanned concurrently");
    search_cmd->add_flag("--allow-large", search_allow_large, "lift the M <= 8 guard");
    search_cmd->add_option("--summary-out", summary_out, "write the JSON summary to a file");

    // shape
    CommonOptions shape_options;
    double shape_snr_db = 0.0;
    double shape_step = 0.05;
    double shape_refine_step = 0.0;
    std::string shape_sweep;
    CLI::App* shape_cmd = app.add_subcommand("shape", "probabilistic shaping grid search at one SNR");
    add_common_options(shape_cmd, shape_options, true, false);
    shape_cmd->add_option("--snr-db", shape_snr_db, "SNR in dB")->required();
    shape_cmd->add_option("--step", shape_step, "grid step for each P_{C_k}(0)");
    shape_cmd->add_option("--refine-step", shape_refine_step, "optional local refinement step");
    shape_cmd->add_option("--sweep-snr-db", shape_sweep, "comma-separated SNR grid for a CSV sweep");

    // tables
    CommonOptions tables_options;
    std::string which_table = "both";
    CLI::App* tables_cmd = app.add_subcommand("tables", "reference asymptotics and SNR-gap tables");
    tables_cmd->add_option("--which", which_table, "asymptotics | gaps | both");
    tables_cmd->add_flag("--json", tables_options.json_output, "emit JSON");
    tables_cmd->add_option("--out", tables_options.out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;  // usage errors (unknown flags, missing subcommand)
    }

    const auto env_default_nodes = []() -> std::optional<int> {
        if (const char* env = std::getenv("BICM_QUAD_NODES")) {
            const int nodes = std::atoi(env);
            if (nodes >= 2) return nodes;
        }
        return std::nullopt;
    }();
    const auto apply_env_nodes = [&](CLI::App* cmd, CommonOptions& options) {
        if (env_default_nodes && cmd->count("--quad-nodes") == 0) options.quad_nodes = *env_default_nodes;
    };

    if (capacity_cmd->parsed()) {
        apply_env_nodes(capacity_cmd, capacity_options);
        const bicm::Constellation omega = resolve_constellation(capacity_options);
        const bicm::ChannelSpec channel{capacity_options.fading_second_moment, omega.dimension()};
        std::vector<double> snr_grid;
        if (!snr_db_list.empty())
            for (double db : parse_number_list(snr_db_list)) snr_grid.push_back(bicm::db_to_linear(db));
        else if (!snr_db_range.empty())
            for (double db : parse_range(snr_db_range)) snr_grid.push_back(bicm::db_to_linear(db));
        else
            throw std::domain_error("capacity needs --snr-db or --snr-db-range");
        const bicm::CapacityCurve curve = bicm::capacity_curve(
            omega, bicm::capacity_kind_from_string(capacity_kind), snr_grid, resolve_quadrature(capacity_options), channel);
        if (capacity_options.json_output)
            emit_json(capacity_options,
                      json{{"manifest", manifest_json("capacity", capacity_options)},
                           {"kind", capacity_kind},
                           {"degenerate_bit_levels",
                            omega.bit_distribution() ? json(omega.bit_distribution()->degenerate_positions()) : json::array()},
                           {"points", points_json(curve.points)}});
        else
            emit_csv(capacity_options, "capacity", points_csv(curve.points));
        return 0;
    }

    if (fcurve_cmd->parsed()) {
        apply_env_nodes(fcurve_cmd, fcurve_options);
        const bicm::Constellation omega = resolve_constellation(fcurve_options);
        const bicm::ChannelSpec channel{fcurve_options.fading_second_moment, omega.dimension()};
        std::vector<double> rates;
        if (!rate_list.empty())
            rates = parse_number_list(rate_list);
        else if (!rate_range.empty())
            rates = parse_range(rate_range);
        else
            throw std::domain_error("f-curve needs --rates or --rate-range");
        const bicm::CapacityCurve curve = bicm::f_curve(omega, bicm::capacity_kind_from_string(fcurve_kind), rates,
                                                        resolve_quadrature(fcurve_options), channel);
        if (fcurve_options.json_output)
            emit_json(fcurve_options, json{{"manifest", manifest_json("f-curve", fcurve_options)},
                                           {"kind", fcurve_kind},
                                           {"points", points_json(curve.points)}});
        else
            emit_csv(fcurve_options, "f-curve", points_csv(curve.points));
        return 0;
    }

    if (gap_cmd->parsed()) {
        apply_env_nodes(gap_cmd, gap_options);
        const bicm::Constellation omega = resolve_constellation(gap_options);
        std::vector<double> rates;
        if (!gap_rate_list.empty())
            rates = parse_number_list(gap_rate_list);
        else if (!gap_rate_range.empty())
            rates = parse_range(gap_rate_range);
        else
            throw std::domain_error("gap needs --rates or --rate-range");
        const bicm::QuadratureSpec quad = resolve_quadrature(gap_options);
        const bicm::CapacityKind kind = bicm::capacity_kind_from_string(gap_kind);
        const bicm::ChannelSpec channel{gap_options.fading_second_moment, omega.dimension()};
        const auto f = bicm::f_functional(omega, kind, quad, channel);
        std::string csv = "snr_db,rate_bpcu,ebn0_db,gap_db\n";
        json rows = json::array();
        for (double rate : rates) {
            const double ebn0 = f(rate);
            const double gap_db = bicm::linear_to_db(ebn0 / bicm::f_awgn(rate, omega.dimension()));
            const double snr = ebn0 * channel.fading_second_moment * rate;
            csv += bicm::csv::number(bicm::linear_to_db(snr)) + "," + bicm::csv::number(rate) + "," +
                   bicm::csv::number(bicm::linear_to_db(ebn0)) + "," + bicm::csv::number(gap_db) + "\n";
            rows.push_back({{"rate_bpcu", rate},
                            {"ebn0_db", number_or_null(bicm::linear_to_db(ebn0))},
                            {"gap_db", number_or_null(gap_db)}});
        }
        if (gap_options.json_output)
            emit_json(gap_options,
                      json{{"manifest", manifest_json("gap", gap_options)}, {"kind", gap_kind}, {"points", rows}});
        else
            emit_csv(gap_options, "gap", csv);
        return 0;
    }

    if (min_cmd->parsed()) {
        apply_env_nodes(min_cmd, min_options);
        const bicm::Constellation omega = resolve_constellation(min_options);
        const bicm::QuadratureSpec quad = resolve_quadrature(min_options);
        const bicm::CapacityKind kind = bicm::capacity_kind_from_string(min_kind);
        const bicm::ChannelSpec channel{min_options.fading_second_moment, omega.dimension()};
        double alpha = 0.0;
        if (kind == bicm::CapacityKind::Awgn)
            alpha = bicm::kLog2E;
        else if (kind == bicm::CapacityKind::Cm)
            alpha = bicm::alpha_cm(omega).alpha;
        else
            alpha = bicm::alpha_bicm(omega).alpha;
        const double rate_hi = min_rate_hi > 0.0 ? min_rate_hi : 0.9 * omega.order();
        const auto f = bicm::f_functional(omega, kind, quad, channel);
        const bicm::MinimumEbn0 minimum = bicm::min_ebn0(f, alpha, min_rate_lo, rate_hi, min_grid);
        const double snr = minimum.ebn0 * channel.fading_second_moment * minimum.rate;
        if (min_options.json_output)
            emit_json(min_options, json{{"manifest", manifest_json("min-ebn0", min_options)},
                                        {"kind", min_kind},
                                        {"rate_bpcu", minimum.rate},
                                        {"ebn0_db", number_or_null(minimum.ebn0_db)},
                                        {"ebn0_db_infinite", std::isinf(minimum.ebn0_db)},
                                        {"interior", minimum.interior}});
        else {
            std::string csv = "snr_db,rate_bpcu,ebn0_db\n";
            csv += bicm::csv::number(minimum.rate > 0 ? bicm::linear_to_db(snr) : -bicm::kInf) + "," +
                   bicm::csv::number(minimum.rate) + "," + bicm::csv::number(minimum.ebn0_db) + "\n";
            emit_csv(min_options, "min-ebn0", csv);
        }
        return 0;
    }

    if (alpha_cmd->parsed()) {
        const bicm::Constellation omega = resolve_constellation(alpha_options);
        const bicm::AlphaResult result = alpha_kind == "cm" ? bicm::alpha_cm(omega) : bicm::alpha_bicm(omega);
        if (alpha_options.json_output)
            emit_json(alpha_options, json{{"manifest", manifest_json("alpha", alpha_options)},
                                          {"kind", alpha_kind},
                                          {"alpha", result.alpha},
                                          {"zero_rate_ebn0_db", number_or_null(result.zero_rate_ebn0_db)},
                                          {"zero_rate_ebn0_infinite", std::isinf(result.zero_rate_ebn0)}});
        else {
            std::string csv = "alpha,zero_rate_ebn0,zero_rate_ebn0_db\n";
            csv += bicm::csv::number(result.alpha) + "," + bicm::csv::number(result.zero_rate_ebn0) + "," +
                   bicm::csv::number(result.zero_rate_ebn0_db) + "\n";
            emit_csv(alpha_options, "alpha", csv);
        }
        return 0;
    }

    if (foo_cmd->parsed()) {
        const Eigen::MatrixXd alphabet = resolve_alphabet(foo_options.alphabet_spec);
        const bicm::Labeling labeling = resolve_labeling(foo_options.labeling_spec, bicm::exact_log2(alphabet.rows()));
        const bicm::FooVerdict verdict = bicm::is_foo(alphabet, labeling, foo_tolerance);
        if (foo_options.json_output) {
            json v_rows = json::array();
            for (Eigen::Index r = 0; r < verdict.projection.rows(); ++r) {
                json row = json::array();
                for (Eigen::Index c = 0; c < verdict.projection.cols(); ++c) row.push_back(verdict.projection(r, c));
                v_rows.push_back(row);
            }
            emit_json(foo_options, json{{"manifest", manifest_json("foo-check", foo_options)},
                                        {"is_foo", verdict.is_foo},
                                        {"residual", verdict.residual},
                                        {"projection", v_rows}});
        } else {
            std::string csv = "is_foo,residual\n";
            csv += std::string(verdict.is_foo ? "true" : "false") + "," + bicm::csv::number(verdict.residual) + "\n\n";
            csv += "row";
            for (Eigen::Index c = 0; c < verdict.projection.cols(); ++c) csv += ",v" + std::to_string(c);
            csv += "\n";
            for (Eigen::Index r = 0; r < verdict.projection.rows(); ++r) {
                csv += std::to_string(r);
                for (Eigen::Index c = 0; c < verdict.projection.cols(); ++c)
                    csv += "," + bicm::csv::number(verdict.projection(r, c));
                csv += "\n";
            }
            emit_csv(foo_options, "foo-check", csv);
        }
        return 0;
    }

    if (ht_cmd->parsed()) {
        const Eigen::MatrixXd alphabet = resolve_alphabet(ht_options.alphabet_spec);
        const Eigen::MatrixXd spectrum = bicm::ht(alphabet);
        std::string csv = "index";
        for (Eigen::Index c = 0; c < spectrum.cols(); ++c) csv += ",coord" + std::to_string(c);
        csv += "\n";
        for (Eigen::Index r = 0; r < spectrum.rows(); ++r) {
            csv += std::to_string(r);
            for (Eigen::Index c = 0; c < spectrum.cols(); ++c) csv += "," + bicm::csv::number(spectrum(r, c));
            csv += "\n";
        }
        emit_csv(ht_options, "ht", csv);
        return 0;
    }

    if (search_cmd->parsed()) {
        const Eigen::MatrixXd alphabet = resolve_alphabet(search_options_cli.alphabet_spec);
        bicm::SearchOptions options;
        options.threads = search_threads;
        options.allow_large = search_allow_large;
        const bicm::AlphaCensus census = bicm::enumerate_alpha_classes(alphabet, options);

        std::string csv = "alpha,count\n";
        for (const auto& [key, cls] : census.classes)
            csv += bicm::csv::number(cls.alpha) + "," + std::to_string(cls.count) + "\n";

        std::vector<std::string> witness_rows;
        {
            const bicm::Labeling witness = census.witness_labeling();
            std::istringstream lines(witness.to_text());
            std::string line;
            while (std::getline(lines, line)) witness_rows.push_back(line);
        }
        json summary{{"manifest", manifest_json("search-labelings", search_options_cli)},
                     {"alphabet", search_options_cli.alphabet_spec},
                     {"total_labelings", census.total},
                     {"class_count", census.class_count()},
                     {"distinct_pmf_values", bicm::distinct_value_count_of_pmf(census)},
                     {"foo_count", census.foo_count},
                     {"max_alpha", census.max_alpha},
                     {"max_alpha_witness", witness_rows},
                     {"min_class_spacing", census.min_class_spacing}};

        if (search_options_cli.json_output) {
            json classes = json::array();
            for (const auto& [key, cls] : census.classes) classes.push_back({{"alpha", cls.alpha}, {"count", cls.count}});
            summary["classes"] = classes;
            emit_json(search_options_cli, summary);
        } else {
            emit_csv(search_options_cli, "search-labelings", csv);
            if (!summary_out.empty()) {
                std::ofstream out(summary_out);
                if (!out) throw std::domain_error("cannot write to '" + summary_out + "'");
                out << summary.dump(2) << "\n";
            }
        }
        return 0;
    }

    if (shape_cmd->parsed()) {
        apply_env_nodes(shape_cmd, shape_options);
        const Eigen::MatrixXd alphabet = resolve_alphabet(shape_options.alphabet_spec);
        const bicm::Labeling labeling = resolve_labeling(shape_options.labeling_spec, bicm::exact_log2(alphabet.rows()));
        const bicm::QuadratureSpec quad = resolve_quadrature(shape_options);

        if (!shape_sweep.empty()) {
            std::vector<double> snr_grid;
            for (double db : parse_number_list(shape_sweep)) snr_grid.push_back(bicm::db_to_linear(db));
            const bicm::CapacityCurve curve = bicm::shaped_f_curve(alphabet, labeling, snr_grid, shape_step, quad);
            emit_csv(shape_options, "shape", points_csv(curve.points));
            return 0;
        }

        const double snr = bicm::db_to_linear(shape_snr_db);
        const bicm::ShapingResult result =
            shape_refine_step > 0.0 ? bicm::optimize_refined(alphabet, labeling, snr, shape_step, shape_refine_step, quad)
                                    : bicm::optimize_distribution(alphabet, labeling, snr, shape_step, quad);
        emit_json(shape_options, json{{"manifest", manifest_json("shape", shape_options)},
                                      {"snr_db", shape_snr_db},
                                      {"step", result.step},
                                      {"best_bits_p0", result.best.p_zero()},
                                      {"shaped_capacity_bpcu", result.shaped_capacity},
                                      {"uniform_capacity_bpcu", result.uniform_capacity}});
        return 0;
    }

    if (tables_cmd->parsed()) {
        std::string csv;
        if (which_table == "asymptotics" || which_table == "both") {
            csv += "labeling,pam_alpha_limit,pam_zero_rate_ebn0_db,psk_alpha_limit,psk_zero_rate_ebn0_db\n";
            for (const auto& row : bicm::asymptotics_table())
                csv += to_string(row.labeling) + "," + bicm::csv::number(row.pam.alpha) + "," +
                       bicm::csv::number(row.pam.zero_rate_ebn0_db) + "," + bicm::csv::number(row.psk.alpha) + "," +
                       bicm::csv::number(row.psk.zero_rate_ebn0_db) + "\n";
            if (which_table == "both") csv += "\n";
        }
        if (which_table == "gaps" || which_table == "both") {
            csv += "constellation,labeling,gap_db\n";
            for (const auto& row : bicm::gap_table())
                csv += row.constellation + "," + row.labeling + "," + bicm::csv::number(row.gap_db) + "\n";
        }
        if (csv.empty()) throw std::domain_error("--which must be asymptotics, gaps or both");
        if (tables_options.json_output) {
            json asym = json::array();
            for (const auto& row : bicm::asymptotics_table())
                asym.push_back({{"labeling", to_string(row.labeling)},
                                {"pam_alpha_limit", row.pam.alpha},
                                {"pam_zero_rate_ebn0_db", number_or_null(row.pam.zero_rate_ebn0_db)},
                                {"psk_alpha_limit", row.psk.alpha},
                                {"psk_zero_rate_ebn0_db", number_or_null(row.psk.zero_rate_ebn0_db)}});
            json gaps = json::array();
            for (const auto& row : bicm::gap_table())
                gaps.push_back({{"constellation", row.constellation},
                                {"labeling", row.labeling},
                                {"gap_db", number_or_null(row.gap_db)},
                                {"gap_db_infinite", std::isinf(row.gap_db)}});
            emit_json(tables_options, json{{"manifest", manifest_json("tables", tables_options)},
                                           {"asymptotics", asym},
                                           {"gaps", gaps}});
        } else {
            emit_csv(tables_options, "tables", csv);
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const CLI::ParseError&) {
        return 64;  // unreachable: CLI11_PARSE handles these
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::range_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 70;
    }
}
