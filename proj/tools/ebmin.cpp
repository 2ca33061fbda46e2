// ebmin: reproducible experiment driver for multicast energy-per-bit bounds.
// Subcommands: generate, bounds, flood, sweep, validate-lemmas, schema.
// Exit codes: 0 success, 2 usage/config error, 3 precondition error, 4 I/O error.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebmin/flood.hpp"
#include "ebmin/io.hpp"
#include "ebmin/pathloss.hpp"
#include "ebmin/placement.hpp"
#include "ebmin/radius.hpp"
#include "ebmin/rng.hpp"
#include "ebmin/schemes.hpp"
#include "ebmin/topology.hpp"

using nlohmann::json;
using namespace ebmin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitIo = 4;

constexpr const char* kSweepColumns =
    "class,k,akOrLambda,seed,placementEventHolds,covered,totalEbPerBit,lowerBoundEbN0,ratio,"
    "c1,c2,normalizedUpper,normalizedLower,converseEventHolds,error";

constexpr const char* kValidateColumns =
    "eventKind,k,area,lambda,cellSide,beta,delta,trials,failures,frequency,stdErr,analyticBound";

struct ModelFlags {
    double alpha = 4.0;
    double r0 = 1.0;
    double gbar = 1.0;

    PathLossModel build() const { return PathLossModel(alpha, r0, gbar); }
};

void add_model_flags(CLI::App* cmd, ModelFlags& m) {
    cmd->add_option("--alpha", m.alpha, "path-loss exponent (> 2)")->capture_default_str();
    cmd->add_option("--r0", m.r0, "near-field cutoff distance")->capture_default_str();
    cmd->add_option("--gbar", m.gbar, "gain cap (>= r0^-alpha)")->capture_default_str();
}

std::uint64_t seed_with_env(std::uint64_t flag_value) {
    if (const char* env = std::getenv("EBMIN_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return flag_value;
}

void write_stamp(std::ostream& out, bool deterministic) {
    if (deterministic) return;
    const std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    out << "# generated " << buf << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string csv_escape(std::string text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c == '\n' ? ' ' : c;
    }
    quoted += '"';
    return quoted;
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    std::string cls = "dense";
    int k = 100;
    std::uint64_t seed = 1;
    std::string out;
    double area = 0.0;   // dense: explicit area, 0 = use the rule
    double rule_a = 1.0; // dense area rule A_k = a k / (ln k)^b
    double rule_b = 2.0;
    double lambda = 1.0;
    double cell_side = 1.0;
    double beta = 0.0;
    std::string policy = "center";
};

int run_generate(const GenerateOpts& opt) {
    const std::uint64_t seed = seed_with_env(opt.seed);
    Network net;
    if (opt.cls == "dense") {
        double area = opt.area;
        if (area <= 0.0) {
            if (!validate_dense_sequence(opt.rule_a, opt.rule_b))
                throw std::invalid_argument(
                    "area rule needs b > 1 so that A_k = o(k / log k); got b = " +
                    std::to_string(opt.rule_b));
            area = dense_area(opt.k, opt.rule_a, opt.rule_b);
        }
        net = generate_dense(opt.k, area, seed);
    } else if (opt.cls == "extended") {
        net = generate_extended(opt.k, opt.lambda, seed);
    } else if (opt.cls == "regular") {
        net = generate_regular({opt.k, opt.cell_side, opt.beta, placement_policy_from_string(opt.policy)},
                               seed);
    } else {
        throw std::invalid_argument("unknown class: " + opt.cls);
    }
    save_network(net, opt.out);
    json summary{{"class", to_string(net.cls)},
                 {"k", net.size()},
                 {"areaSide", net.area_side},
                 {"seed", seed},
                 {"path", opt.out}};
    std::cout << summary.dump() << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct BoundsOpts {
    std::string network;
    ModelFlags model;
    std::string dest = "all";
    std::string tighten = "none";
};

std::vector<int> parse_destinations(const Network& net, const std::string& spec) {
    if (spec == "all") return all_destinations(net);
    std::vector<int> dest;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        dest.push_back(std::stoi(item));
    }
    return dest;
}

int run_bounds(const BoundsOpts& opt) {
    const Network net = load_network(opt.network);
    const PathLossModel model = opt.model.build();
    const std::vector<int> dest = parse_destinations(net, opt.dest);
    const BoundReport plain = lower_bound_ebn0(net, model, dest);
    json out = bound_report_to_json(plain);
    if (opt.tighten != "none") {
        const TightenStrategy strategy = opt.tighten == "exhaustive" ? TightenStrategy::exhaustive
                                                                     : TightenStrategy::heuristic;
        out["tightened"] = bound_report_to_json(tightened_lower_bound(net, model, dest, strategy));
        out["tightenStrategy"] = opt.tighten;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------- flood

struct FloodOpts {
    std::string network;
    ModelFlags model;
    double eb1 = 0.0;
    double eb2 = 0.0;
    int slots = 0;
    bool scheme_auto = false;
    double eps1 = 1e-6 * std::numbers::ln2;
    double eps2 = 1.0;
    double delta = 0.1;
    double beta = 0.0; // regular scheme derivation only
    std::string trace_out;
    bool deterministic = false;
};

SchemeConfig derive_scheme(const Network& net, const PathLossModel& model, const FloodOpts& opt) {
    const double area = net.area_side * net.area_side;
    switch (net.cls) {
    case NetworkClass::dense:
        return dense_params(net.size(), area, model, opt.eps1, opt.eps2);
    case NetworkClass::extended:
        return extended_params(net.size(), net.size() / area, model, opt.eps1, opt.delta);
    case NetworkClass::regular: {
        const int dim = static_cast<int>(std::round(std::sqrt(double(net.size()))));
        return regular_params(net.size(), net.area_side / dim, opt.beta, model, opt.eps1);
    }
    }
    throw std::invalid_argument("unknown network class tag");
}

int run_flood(const FloodOpts& opt) {
    const Network net = load_network(opt.network);
    const PathLossModel model = opt.model.build();

    FloodParams params{opt.eb1, opt.eb2, opt.slots};
    json scheme_info;
    if (opt.scheme_auto) {
        const SchemeConfig cfg = derive_scheme(net, model, opt);
        params = cfg.params;
        scheme_info["cellSide"] = cfg.cell_side;
        if (cfg.case_id) scheme_info["caseId"] = *cfg.case_id;
        if (cfg.step_radius) scheme_info["stepRadius"] = *cfg.step_radius;
    }

    const FloodTrace trace = simulate_flood(net, model, params);
    const BoundReport bound = lower_bound_ebn0(net, model, all_destinations(net));

    if (!opt.trace_out.empty()) {
        std::ofstream out = open_output(opt.trace_out);
        write_stamp(out, opt.deterministic);
        out << "# covered=" << (trace.covered ? 1 : 0)
            << " totalEnergyPerBit=" << format_double(trace.total_energy_per_bit)
            << " coverage=" << format_double(coverage_fraction(trace))
            << " lowerBoundEbN0=" << format_double(bound.lower_bound_ebn0) << '\n';
        write_trace_csv(out, net, trace);
        if (!out) throw std::runtime_error("write failed: " + opt.trace_out);
    }

    json summary{{"covered", trace.covered},
                 {"coverage", coverage_fraction(trace)},
                 {"totalEnergyPerBit", trace.total_energy_per_bit},
                 {"lowerBoundEbN0", bound.lower_bound_ebn0},
                 {"ratio", trace.total_energy_per_bit / bound.lower_bound_ebn0},
                 {"eb1", params.eb1},
                 {"eb2", params.eb2},
                 {"maxSlots", params.max_slots}};
    if (!scheme_info.empty()) summary["scheme"] = scheme_info;
    std::cout << summary.dump() << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------- sweep

struct SweepOpts {
    std::string config_path;
    std::string cls = "dense";
    std::vector<int> k_list;
    ModelFlags model;
    double rule_a = 1.0;
    double rule_b = 2.0;
    double lambda = 1.0;
    double cell_side = 1.0;
    double beta = 0.0;
    std::string policy = "center";
    double eps1 = 1e-6 * std::numbers::ln2;
    double eps2 = 1.0;
    double delta = 0.1;
    int trials = 10;
    std::uint64_t seed = 1;
    std::string out = "sweep.csv";
    bool deterministic = false;
};

void apply_sweep_config(SweepOpts& opt, const json& cfg) {
    if (cfg.contains("class")) opt.cls = cfg["class"].get<std::string>();
    if (cfg.contains("kList")) opt.k_list = cfg["kList"].get<std::vector<int>>();
    if (cfg.contains("model")) {
        const json& m = cfg["model"];
        if (m.contains("alpha")) opt.model.alpha = m["alpha"].get<double>();
        if (m.contains("r0")) opt.model.r0 = m["r0"].get<double>();
        if (m.contains("gbar")) opt.model.gbar = m["gbar"].get<double>();
    }
    if (cfg.contains("areaRule")) {
        opt.rule_a = cfg["areaRule"].value("a", opt.rule_a);
        opt.rule_b = cfg["areaRule"].value("b", opt.rule_b);
    }
    if (cfg.contains("lambda")) opt.lambda = cfg["lambda"].get<double>();
    if (cfg.contains("cellSide")) opt.cell_side = cfg["cellSide"].get<double>();
    if (cfg.contains("beta")) opt.beta = cfg["beta"].get<double>();
    if (cfg.contains("policy")) opt.policy = cfg["policy"].get<std::string>();
    if (cfg.contains("eps1")) opt.eps1 = cfg["eps1"].get<double>();
    if (cfg.contains("eps2")) opt.eps2 = cfg["eps2"].get<double>();
    if (cfg.contains("delta")) opt.delta = cfg["delta"].get<double>();
    if (cfg.contains("trialsPerK")) opt.trials = cfg["trialsPerK"].get<int>();
    if (cfg.contains("masterSeed")) opt.seed = cfg["masterSeed"].get<std::uint64_t>();
    if (cfg.contains("outputPath")) opt.out = cfg["outputPath"].get<std::string>();
}

struct SweepRow {
    std::string cls;
    int k = 0;
    double ak_or_lambda = 0.0;
    std::uint64_t seed = 0;
    bool event_holds = false;
    bool covered = false;
    double total_eb = 0.0;
    double lower_bound = 0.0;
    double ratio = 0.0;
    double c1 = 0.0;
    std::optional<double> c2;
    double normalized_upper = 0.0;
    double normalized_lower = 0.0;
    bool converse_event_holds = false;
    std::string error;
};

void write_sweep_row(std::ostream& out, const SweepRow& row) {
    out << row.cls << ',' << row.k << ',' << format_double(row.ak_or_lambda) << ',' << row.seed
        << ',';
    if (row.error.empty()) {
        out << (row.event_holds ? 1 : 0) << ',' << (row.covered ? 1 : 0) << ','
            << format_double(row.total_eb) << ',' << format_double(row.lower_bound) << ','
            << format_double(row.ratio) << ',' << format_double(row.c1) << ',';
        if (row.c2) out << format_double(*row.c2);
        out << ',' << format_double(row.normalized_upper) << ','
            << format_double(row.normalized_lower) << ',' << (row.converse_event_holds ? 1 : 0)
            << ',';
    } else {
        out << ",,,,,,,,,,";
    }
    out << csv_escape(row.error) << '\n';
}

SweepRow sweep_trial(const SweepOpts& opt, const PathLossModel& model, int k, int trial) {
    SweepRow row;
    row.cls = opt.cls;
    row.k = k;
    // per-k trial streams: reordering kList never changes a row
    row.seed = trial_seed(opt.seed ^ static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(trial));

    Network net;
    SchemeConfig scheme;
    if (opt.cls == "dense") {
        const double area = dense_area(k, opt.rule_a, opt.rule_b);
        row.ak_or_lambda = area;
        net = generate_dense(k, area, row.seed);
        scheme = dense_params(k, area, model, opt.eps1, opt.eps2);
        row.event_holds = check_dense_good(net, scheme.cell_side, opt.delta);
        row.converse_event_holds = row.event_holds;
        const TheoremConstants tc = dense_constants(model);
        row.c1 = tc.c1;
        row.c2 = tc.c2;
    } else if (opt.cls == "extended") {
        row.ak_or_lambda = opt.lambda;
        net = generate_extended(k, opt.lambda, row.seed);
        scheme = extended_params(k, opt.lambda, model, opt.eps1, opt.delta);
        row.event_holds = check_no_empty_cell(net, scheme.cell_side);
        // converse event: good cells on the lambda^(-1/2) grid, beta per regime
        const TheoremConstants tc = extended_constants(model, opt.lambda);
        const double beta = tc.regime == DensityRegime::low ? 1.0 / 3.0 : 1.0;
        row.converse_event_holds = check_extended_good(net, opt.lambda, beta, opt.delta);
        row.c1 = tc.c1;
        row.c2 = tc.c2;
    } else if (opt.cls == "regular") {
        row.ak_or_lambda = k * opt.cell_side * opt.cell_side;
        net = generate_regular({k, opt.cell_side, opt.beta, placement_policy_from_string(opt.policy)},
                               row.seed);
        scheme = regular_params(k, opt.cell_side, opt.beta, model, opt.eps1);
        row.event_holds = true; // regularity is structural
        row.converse_event_holds = true;
        row.c1 = regular_ratio_bound(model, opt.beta);
        row.c2.reset();
    } else {
        throw std::invalid_argument("unknown class: " + opt.cls);
    }

    const FloodTrace trace = simulate_flood(net, model, scheme.params);
    const BoundReport bound = lower_bound_ebn0(net, model, all_destinations(net));
    row.covered = trace.covered;
    row.total_eb = trace.total_energy_per_bit;
    row.lower_bound = bound.lower_bound_ebn0;
    row.ratio = row.total_eb / row.lower_bound;

    if (opt.cls == "dense") {
        row.normalized_upper = row.total_eb / row.ak_or_lambda;
        row.normalized_lower = row.lower_bound / row.ak_or_lambda;
    } else if (opt.cls == "extended") {
        const double alpha = model.alpha();
        const double converse_unit = k * std::pow(opt.lambda, -alpha / 2.0);
        const double flood_unit = converse_unit * std::pow(std::log(double(k)), alpha / 2.0);
        row.normalized_upper = row.total_eb / flood_unit;
        row.normalized_lower = row.lower_bound / converse_unit;
    } else {
        row.normalized_upper = row.ratio; // the scaling unit is ln2 / G itself
        row.normalized_lower = 1.0;
    }
    return row;
}

int run_sweep(SweepOpts opt, const CLI::App* cmd) {
    if (!opt.config_path.empty()) {
        const SweepOpts flags = opt; // values as parsed from the command line
        std::ifstream in(opt.config_path);
        if (!in) throw std::runtime_error("cannot open config: " + opt.config_path);
        json cfg;
        in >> cfg;
        apply_sweep_config(opt, cfg);
        // flags override file values
        if (cmd->count("--class")) opt.cls = flags.cls;
        if (cmd->count("--k-list")) opt.k_list = flags.k_list;
        if (cmd->count("--alpha")) opt.model.alpha = flags.model.alpha;
        if (cmd->count("--r0")) opt.model.r0 = flags.model.r0;
        if (cmd->count("--gbar")) opt.model.gbar = flags.model.gbar;
        if (cmd->count("--area-a")) opt.rule_a = flags.rule_a;
        if (cmd->count("--area-b")) opt.rule_b = flags.rule_b;
        if (cmd->count("--lambda")) opt.lambda = flags.lambda;
        if (cmd->count("--cell-side")) opt.cell_side = flags.cell_side;
        if (cmd->count("--beta")) opt.beta = flags.beta;
        if (cmd->count("--policy")) opt.policy = flags.policy;
        if (cmd->count("--eps1")) opt.eps1 = flags.eps1;
        if (cmd->count("--eps2")) opt.eps2 = flags.eps2;
        if (cmd->count("--delta")) opt.delta = flags.delta;
        if (cmd->count("--trials")) opt.trials = flags.trials;
        if (cmd->count("--seed")) opt.seed = flags.seed;
        if (cmd->count("--out")) opt.out = flags.out;
    }
    opt.seed = seed_with_env(opt.seed);
    if (opt.k_list.empty())
        throw std::invalid_argument("sweep: need a nonempty kList (--k-list or config)");
    if (opt.trials < 1)
        throw std::invalid_argument("sweep: trialsPerK must be at least 1");
    if (opt.cls == "dense" && !validate_dense_sequence(opt.rule_a, opt.rule_b))
        throw std::invalid_argument("sweep: dense area rule needs b > 1; got b = " +
                                    std::to_string(opt.rule_b));
    const PathLossModel model = opt.model.build();

    std::ofstream out = open_output(opt.out);
    write_stamp(out, opt.deterministic);
    out << kSweepColumns << '\n';
    long failures = 0;
    for (int k : opt.k_list) {
        for (int trial = 0; trial < opt.trials; ++trial) {
            SweepRow row;
            try {
                row = sweep_trial(opt, model, k, trial);
            } catch (const std::exception& err) {
                row.cls = opt.cls;
                row.k = k;
                row.seed = trial_seed(opt.seed ^ static_cast<std::uint64_t>(k),
                                      static_cast<std::uint64_t>(trial));
                row.error = err.what();
                ++failures;
            }
            write_sweep_row(out, row);
        }
    }
    if (!out) throw std::runtime_error("write failed: " + opt.out);
    std::cerr << "sweep: wrote " << opt.out << " (" << failures << " trial errors)\n";
    return kExitOk;
}

// --------------------------------------------------------- validate-lemmas

struct ValidateOpts {
    std::string config_path;
    std::uint64_t seed = 1;
    std::string out = "lemmas.csv";
    bool deterministic = false;
};

int run_validate(const ValidateOpts& opt) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::runtime_error("cannot open config: " + opt.config_path);
    json cfg;
    in >> cfg;
    std::uint64_t master = cfg.value("masterSeed", opt.seed);
    master = seed_with_env(master);
    if (!cfg.contains("events") || !cfg["events"].is_array() || cfg["events"].empty())
        throw std::invalid_argument("validate-lemmas: config needs a nonempty events array");

    std::ofstream out = open_output(opt.out);
    write_stamp(out, opt.deterministic);
    out << kValidateColumns << '\n';

    std::uint64_t index = 0;
    for (const json& entry : cfg["events"]) {
        const std::string kind = entry.at("kind").get<std::string>();
        const int k = entry.at("k").get<int>();
        const long trials = entry.at("trials").get<long>();

        EventSpec event;
        if (kind == "denseGood")
            event.kind = PlacementEvent::dense_good;
        else if (kind == "extendedGood")
            event.kind = PlacementEvent::extended_good;
        else if (kind == "noEmptyCell")
            event.kind = PlacementEvent::no_empty_cell;
        else
            throw std::invalid_argument("unknown event kind: " + kind);
        event.cell_side = entry.value("cellSide", 0.0);
        event.beta = entry.value("beta", 0.0);
        event.delta = entry.value("delta", 0.0);

        GeneratorSpec gen;
        gen.k = k;
        if (entry.contains("area")) {
            gen.cls = NetworkClass::dense;
            gen.area = entry["area"].get<double>();
        } else if (entry.contains("lambda")) {
            gen.cls = NetworkClass::extended;
            gen.lambda = entry["lambda"].get<double>();
        } else {
            throw std::invalid_argument("event needs either area (dense) or lambda (extended)");
        }

        const McResult res = mc_estimate(event, gen, trials, trial_seed(master, index++));
        out << kind << ',' << k << ',';
        if (gen.cls == NetworkClass::dense) out << format_double(gen.area);
        out << ',';
        if (gen.cls == NetworkClass::extended) out << format_double(gen.lambda);
        out << ',' << (event.cell_side > 0.0 ? format_double(event.cell_side) : "") << ','
            << (event.kind == PlacementEvent::extended_good ? format_double(event.beta) : "") << ','
            << (event.delta > 0.0 ? format_double(event.delta) : "") << ',' << res.trials << ','
            << res.failures << ',' << format_double(res.frequency) << ','
            << format_double(res.standard_error) << ',' << format_double(res.analytic_bound)
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + opt.out);
    std::cerr << "validate-lemmas: wrote " << opt.out << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------ schema

int run_schema() {
    std::cout <<
        R"(output schemas

network file (JSON)
  {"class": "dense"|"extended"|"regular", "areaSide": number,
   "nodes": [[x, y], ...]}  node order preserved; the source is nodes[0].
  Node indices everywhere in this tool are 0-based with the source at 0.

flood trace (CSV, written by `flood --trace-out`)
  comment lines:  # generated <utc>   (suppressed by --deterministic)
                  # covered=0|1 totalEnergyPerBit=.. coverage=.. lowerBoundEbN0=..
  columns: nodeIndex,x,y,decodeSlot,transmitSlot,accumEnergy
    decodeSlot    slot the node first decoded (0 for the source); empty = never
    transmitSlot  slot the node transmitted; empty = never
    accumEnergy   received energy per bit in units of N0, frozen at decode time

sweep (CSV, written by `sweep`)
  columns: )" << kSweepColumns << R"(
    akOrLambda           dense: A_k from the area rule; extended: lambda;
                         regular: k * cellSide^2
    seed                 per-trial seed = trial_seed(masterSeed XOR k, trialIndex)
    placementEventHolds  dense: good placement at the scheme grid and delta;
                         extended: no cell of the scheme grid is empty;
                         regular: always 1 (regularity is structural)
    covered              flood reached every node
    ratio                totalEbPerBit / lowerBoundEbN0
    c1, c2               theorem constants (regular: c1 is the ratio bound,
                         c2 is empty)
    normalizedUpper      dense: totalEbPerBit / A_k;
                         extended: totalEbPerBit / (k lambda^(-a/2) (ln k)^(a/2));
                         regular: the ratio itself
    normalizedLower      dense: lowerBoundEbN0 / A_k;
                         extended: lowerBoundEbN0 / (k lambda^(-a/2));
                         regular: 1
    converseEventHolds   dense: same as placementEventHolds; extended: the
                         good-cell count event at the regime beta; regular: 1
    error                per-trial error message; other fields empty on error

validate-lemmas (CSV)
  columns: )" << kValidateColumns << R"(
    area/lambda set according to the generator named in the config event;
    analyticBound is the matching closed-form bound for the event.

exit codes: 0 ok, 2 usage/config, 3 precondition, 4 I/O
environment: EBMIN_SEED overrides the master seed of generate/sweep/validate-lemmas
)";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multicast energy-per-bit bounds: generators, converse bounds, flooding, sweeps"};
    app.require_subcommand(1);

    GenerateOpts gen;
    CLI::App* cmd_gen = app.add_subcommand("generate", "generate a network realization (JSON)");
    cmd_gen->add_option("--class", gen.cls, "dense|extended|regular")->capture_default_str();
    cmd_gen->add_option("--k", gen.k, "node count")->capture_default_str();
    cmd_gen->add_option("--seed", gen.seed, "generation seed")->capture_default_str();
    cmd_gen->add_option("--out", gen.out, "output path")->required();
    cmd_gen->add_option("--area", gen.area, "dense: explicit area (overrides the rule)");
    cmd_gen->add_option("--area-a", gen.rule_a, "dense rule A_k = a k/(ln k)^b")->capture_default_str();
    cmd_gen->add_option("--area-b", gen.rule_b, "dense rule exponent (must exceed 1)")->capture_default_str();
    cmd_gen->add_option("--lambda", gen.lambda, "extended: node density")->capture_default_str();
    cmd_gen->add_option("--cell-side", gen.cell_side, "regular: cell side")->capture_default_str();
    cmd_gen->add_option("--beta", gen.beta, "regular: window fraction")->capture_default_str();
    cmd_gen->add_option("--policy", gen.policy, "regular: center|uniformInWindow|cornerAdversarial")
        ->capture_default_str();

    BoundsOpts bounds;
    CLI::App* cmd_bounds =
        app.add_subcommand("bounds", "effective network radius and converse bound (JSON to stdout)");
    cmd_bounds->add_option("--network", bounds.network, "network JSON file")->required();
    add_model_flags(cmd_bounds, bounds.model);
    cmd_bounds->add_option("--dest", bounds.dest, "destination set: 'all' or 0-based indices i,j,...")
        ->capture_default_str();
    cmd_bounds->add_option("--tighten", bounds.tighten, "none|heuristic|exhaustive (<= 20 nodes)")
        ->capture_default_str();

    FloodOpts flood;
    CLI::App* cmd_flood = app.add_subcommand("flood", "run FLOOD(Eb1, Eb2) on a network file");
    cmd_flood->add_option("--network", flood.network, "network JSON file")->required();
    add_model_flags(cmd_flood, flood.model);
    cmd_flood->add_option("--eb1", flood.eb1, "source energy per bit (units of N0)");
    cmd_flood->add_option("--eb2", flood.eb2, "relay energy per bit (0 = one-shot)");
    cmd_flood->add_option("--slots", flood.slots, "slot budget T");
    cmd_flood->add_flag("--scheme-auto", flood.scheme_auto,
                        "derive parameters from the network class theorem");
    cmd_flood->add_option("--eps1", flood.eps1, "scheme margin eps1")->capture_default_str();
    cmd_flood->add_option("--eps2", flood.eps2, "dense scheme margin eps2")->capture_default_str();
    cmd_flood->add_option("--delta", flood.delta, "extended scheme delta")->capture_default_str();
    cmd_flood->add_option("--beta", flood.beta, "regular scheme window fraction")->capture_default_str();
    cmd_flood->add_option("--trace-out", flood.trace_out, "per-node trace CSV path");
    cmd_flood->add_flag("--deterministic", flood.deterministic, "suppress the timestamp line");

    SweepOpts sweep;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "scaling sweep over k; one CSV row per trial (see `schema`)");
    cmd_sweep->add_option("--config", sweep.config_path, "JSON config; flags override its values");
    cmd_sweep->add_option("--class", sweep.cls, "dense|extended|regular")->capture_default_str();
    cmd_sweep->add_option("--k-list", sweep.k_list, "node counts")->delimiter(',');
    add_model_flags(cmd_sweep, sweep.model);
    cmd_sweep->add_option("--area-a", sweep.rule_a, "dense rule coefficient")->capture_default_str();
    cmd_sweep->add_option("--area-b", sweep.rule_b, "dense rule exponent")->capture_default_str();
    cmd_sweep->add_option("--lambda", sweep.lambda, "extended density")->capture_default_str();
    cmd_sweep->add_option("--cell-side", sweep.cell_side, "regular cell side")->capture_default_str();
    cmd_sweep->add_option("--beta", sweep.beta, "regular window fraction")->capture_default_str();
    cmd_sweep->add_option("--policy", sweep.policy, "regular placement policy")->capture_default_str();
    cmd_sweep->add_option("--eps1", sweep.eps1, "scheme margin eps1")->capture_default_str();
    cmd_sweep->add_option("--eps2", sweep.eps2, "dense scheme margin eps2")->capture_default_str();
    cmd_sweep->add_option("--delta", sweep.delta,
                          "dense: placement-event delta; extended: s_k and event delta")
        ->capture_default_str();
    cmd_sweep->add_option("--trials", sweep.trials, "trials per k")->capture_default_str();
    cmd_sweep->add_option("--seed", sweep.seed, "master seed")->capture_default_str();
    cmd_sweep->add_option("--out", sweep.out, "output CSV path")->capture_default_str();
    cmd_sweep->add_flag("--deterministic", sweep.deterministic, "suppress the timestamp line");

    ValidateOpts validate;
    CLI::App* cmd_validate = app.add_subcommand(
        "validate-lemmas", "Monte Carlo placement-event frequencies vs analytic bounds");
    cmd_validate->add_option("--config", validate.config_path, "JSON config with an events array")
        ->required();
    cmd_validate->add_option("--seed", validate.seed, "master seed (config masterSeed wins)")
        ->capture_default_str();
    cmd_validate->add_option("--out", validate.out, "output CSV path")->capture_default_str();
    cmd_validate->add_flag("--deterministic", validate.deterministic, "suppress the timestamp line");

    CLI::App* cmd_schema = app.add_subcommand("schema", "print all output schemas and exit codes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_gen->parsed()) return run_generate(gen);
        if (cmd_bounds->parsed()) return run_bounds(bounds);
        if (cmd_flood->parsed()) return run_flood(flood);
        if (cmd_sweep->parsed()) return run_sweep(sweep, cmd_sweep);
        if (cmd_validate->parsed()) return run_validate(validate);
        if (cmd_schema->parsed()) return run_schema();
    } catch (const nlohmann::json::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitPrecondition;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitPrecondition;
    } catch (const std::out_of_range& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kExitIo;
    }
    return kExitUsage;
}
