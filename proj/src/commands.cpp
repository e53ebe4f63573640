#include "ccover/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccover/instance_io.hpp"
#include "ccover/oracle.hpp"

namespace ccover::cli {

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitModel = 3;
constexpr int kExitOracleCap = 4;

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file " + path.string());
    out << j.dump() << '\n';
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file " + path.string());
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::exception& e) {
        throw InputError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

std::string infer_mode(const IntersectionModel& m) {
    if (!m.exact_intersection()) return "theorem1";
    return m.t() == 2 ? "cor1" : "cor2";
}

CoverCertificate solve_with_mode(const IntersectionModel& m, const std::string& mode,
                                 const SolveOptions& opts) {
    if (mode == "cor1") return solve_cor1(m, opts);
    if (mode == "cor2") return solve_cor2(m, 1, opts);
    if (mode == "theorem1") {
        if (m.exact_intersection()) {
            // With an exact model the remaining layers are the exact base,
            // which is precisely the layer-peeling solver.
            return solve_cor2(m, 1, opts);
        }
        if (m.interval_layers().empty())
            throw InputError("theorem1 mode needs at least one interval layer");
        BaseSolver base = greedy_graph_base(m.graph());
        SolveOptions o = opts;
        o.validate_supergraph = false; // already checked at model construction
        return solve_theorem1(m.graph(), m.interval_layers().front(), base, o);
    }
    throw InputError("unknown mode \"" + mode + "\"");
}

struct SolveArgs {
    std::string in, out, mode;
    bool no_check = false;
};

int do_solve(const SolveArgs& a, std::ostream& out) {
    io::Instance inst = io::load_instance(a.in);
    IntersectionModel model = io::build_model(inst);
    const std::string mode = a.mode.empty() ? infer_mode(model) : a.mode;

    SolveOptions opts;
    opts.check_contracts = !a.no_check;
    CoverCertificate cert = solve_with_mode(model, mode, opts);

    std::optional<VerifyReport> report;
    if (!a.no_check) report = verify_certificate(model.graph(), cert);

    write_json(a.out, io::certificate_to_json(cert, report ? &*report : nullptr));

    out << "n=" << model.n() << " mode=" << mode << " cover=" << cert.cover.parts.size()
        << " independent=" << cert.independent.size() << " bound=" << cert.bound
        << " verified=" << (report ? (report->passed() ? "pass" : "FAIL") : "skipped")
        << '\n';
    if (report && !report->passed()) {
        for (const auto& f : report->failures) out << "  " << f << '\n';
        return kExitVerifyFailed;
    }
    return 0;
}

struct GenArgs {
    std::string type = "rectangles", out;
    int n = 0;
    std::uint64_t seed = 0;
    std::int64_t coord_max = 1000;
    int dim = 3;
};

int do_gen(const GenArgs& a) {
    io::Instance inst = io::generate_instance(a.type, a.n, a.seed, a.coord_max, a.dim);
    write_json(a.out, io::instance_to_json(inst));
    return 0;
}

struct OracleArgs {
    std::string in, out, cert;
    int max_alpha_n = 20;
    int max_beta_n = 18;
};

int do_oracle(const OracleArgs& a, std::ostream& out) {
    io::Instance inst = io::load_instance(a.in);
    IntersectionModel model = io::build_model(inst);
    OracleLimit limit;
    limit.max_alpha_n = a.max_alpha_n;
    limit.max_beta_n = a.max_beta_n;

    AlphaResult alpha = exact_alpha(model.graph(), limit);
    BetaResult beta = exact_beta(model.graph(), limit);

    json j;
    j["v"] = 1;
    j["n"] = model.n();
    j["alpha"] = alpha.value;
    j["alpha_witness"] = alpha.witness.ids();
    j["beta"] = beta.value;
    auto& parts = j["beta_witness"] = json::array();
    for (const auto& p : beta.witness.parts) parts.push_back(p.ids());

    if (!a.cert.empty()) {
        CoverCertificate cert = io::certificate_from_json(read_json(a.cert));
        j["cert_cover_size"] = cert.cover.parts.size();
        if (beta.value > 0)
            j["cert_ratio"] =
                static_cast<double>(cert.cover.parts.size()) / beta.value;
    }

    if (a.out.empty()) out << j.dump() << '\n';
    else write_json(a.out, j);
    return 0;
}

int do_verify(const std::string& instance_path, const std::string& cert_path,
              std::ostream& out) {
    io::Instance inst = io::load_instance(instance_path);
    IntersectionModel model = io::build_model(inst);
    CoverCertificate cert = io::certificate_from_json(read_json(cert_path));

    VerifyReport report = verify_certificate(model.graph(), cert);
    double expected = bound_value(cert.alphas, cert.independent.size(), cert.phi);
    bool bound_consistent =
        std::abs(expected - cert.bound) <= 1e-6 * std::max(1.0, expected);
    if (!bound_consistent)
        report.failures.push_back("bound field " + std::to_string(cert.bound) +
                                  " inconsistent with alphas/phi (expected " +
                                  std::to_string(expected) + ")");

    out << "partition=" << (report.partition ? "pass" : "FAIL")
        << " cliques=" << (report.cliques ? "pass" : "FAIL")
        << " independent=" << (report.independent ? "pass" : "FAIL")
        << " bound=" << (report.bound && bound_consistent ? "pass" : "FAIL") << '\n';
    for (const auto& f : report.failures) out << "  " << f << '\n';
    return report.passed() && bound_consistent ? 0 : kExitVerifyFailed;
}

struct BenchArgs {
    std::string type = "rectangles";
    std::vector<int> sizes{1000, 2000, 4000};
    std::uint64_t seed = 1;
    int repetitions = 3;
    int dim = 3;
};

int do_bench(const BenchArgs& a, std::ostream& out) {
    out << "type,n,seed,repetitions,median_ms,cover,independent,bound,max_depth,base_calls,"
           "split_nodes\n";
    for (int n : a.sizes) {
        io::Instance inst =
            io::generate_instance(a.type, n, a.seed, std::max<std::int64_t>(10 * n, 1), a.dim);
        std::vector<double> times;
        CoverCertificate cert;
        for (int r = 0; r < a.repetitions; ++r) {
            auto start = std::chrono::steady_clock::now();
            IntersectionModel model = io::build_model(inst);
            SolveOptions opts;
            opts.check_contracts = false;
            cert = solve_with_mode(model, infer_mode(model), opts);
            auto stop = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        out << a.type << ',' << n << ',' << a.seed << ',' << a.repetitions << ',' << median
            << ',' << cert.cover.parts.size() << ',' << cert.independent.size() << ','
            << cert.bound << ',' << cert.stats.max_depth << ',' << cert.stats.base_calls
            << ',' << cert.stats.split_nodes << '\n';
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"certified clique covers and independent sets for intersection-model graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve an instance and write a certificate");
    solve->add_option("instance", solve_args.in, "instance JSON file")->required();
    solve->add_option("certificate", solve_args.out, "output certificate JSON file")
        ->required();
    solve->add_option("--mode", solve_args.mode, "cor1, cor2 or theorem1 (default inferred)")
        ->check(CLI::IsMember({"cor1", "cor2", "theorem1"}));
    solve->add_flag("--no-check", solve_args.no_check,
                    "skip base-solver contract checks and certificate verification");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a deterministic random instance");
    gen->add_option("--type", gen_args.type, "rectangles, boxes, chords or explicit")
        ->required();
    gen->add_option("--n", gen_args.n, "instance size")->required();
    gen->add_option("--seed", gen_args.seed, "PRNG seed");
    gen->add_option("--coord-max", gen_args.coord_max, "coordinate range [0, coord-max]");
    gen->add_option("--dim", gen_args.dim, "box dimension (boxes only)");
    gen->add_option("--out", gen_args.out, "output instance file")->required();

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle", "exact alpha/beta for desk-scale instances");
    oracle->add_option("instance", oracle_args.in, "instance JSON file")->required();
    oracle->add_option("--out", oracle_args.out, "output JSON file (default stdout)");
    oracle->add_option("--cert", oracle_args.cert, "certificate to compare against");
    oracle->add_option("--max-alpha-n", oracle_args.max_alpha_n, "alpha size cap");
    oracle->add_option("--max-beta-n", oracle_args.max_beta_n, "beta size cap");

    std::string verify_instance, verify_cert;
    auto* verify = app.add_subcommand("verify", "re-check a certificate against an instance");
    verify->add_option("instance", verify_instance, "instance JSON file")->required();
    verify->add_option("certificate", verify_cert, "certificate JSON file")->required();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "solve timings as CSV on stdout");
    bench->add_option("--type", bench_args.type, "instance type");
    bench->add_option("--sizes", bench_args.sizes, "instance sizes")->delimiter(',');
    bench->add_option("--seed", bench_args.seed, "PRNG seed");
    bench->add_option("--repetitions", bench_args.repetitions, "runs per size (median)");
    bench->add_option("--dim", bench_args.dim, "box dimension (boxes only)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve) return do_solve(solve_args, out);
        if (*gen) return do_gen(gen_args);
        if (*oracle) return do_oracle(oracle_args, out);
        if (*verify) return do_verify(verify_instance, verify_cert, out);
        if (*bench) return do_bench(bench_args, out);
    } catch (const OracleCapError& e) {
        err << "error: " << e.what() << '\n';
        return kExitOracleCap;
    } catch (const ModelError& e) {
        err << "error: " << e.what() << '\n';
        return kExitModel;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return kExitModel;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ccover");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace ccover::cli
