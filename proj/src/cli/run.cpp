#include "oscillab/cli/run.hpp"

#include "oscillab/cli/manifest.hpp"
#include "oscillab/cli/plot.hpp"
#include "oscillab/core/error.hpp"
#include "oscillab/dyn/doubling.hpp"
#include "oscillab/dyn/entropy.hpp"
#include "oscillab/dyn/map_io.hpp"
#include "oscillab/erg/scenario.hpp"
#include "oscillab/expsum/weighted_sum.hpp"
#include "oscillab/lab/gowers.hpp"
#include "oscillab/lab/oscillation.hpp"
#include "oscillab/lab/po_verify.hpp"
#include "oscillab/seq/generators.hpp"
#include "oscillab/seq/sequence_io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#ifndef OSCILLAB_VERSION
#define OSCILLAB_VERSION "0.0.0"
#endif

namespace oscillab::cli {

namespace fs = std::filesystem;

namespace {

// Options whose value may name an input file; recorded with their hash.
const std::set<std::string> kFileOptions{"seq", "map", "scenario"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

struct Globals {
    std::string out_dir = ".";
    unsigned threads = 1;
    bool quiet = false;
    std::string config;
};

// One invocation: collects outputs and timings, then writes the manifest.
class Session {
   public:
    Session(const Globals& g, std::ostream& out) : dir_(g.out_dir), quiet_(g.quiet), out_(out) {
        manifest_.version = OSCILLAB_VERSION;
        manifest_.threads = g.threads;
    }

    ExecPolicy policy() const { return ExecPolicy{manifest_.threads}; }
    RunManifest& manifest() { return manifest_; }

    template <typename F>
    auto stage(const std::string& name, F&& f) {
        const auto t0 = std::chrono::steady_clock::now();
        auto finish = [&] {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
            manifest_.timings.push_back({name, dt.count()});
        };
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            finish();
        } else {
            auto r = f();
            finish();
            return r;
        }
    }

    // Writes an output file and, for the main result, echoes it to stdout.
    void emit(const std::string& name, const std::string& content, bool echo = true) {
        const fs::path p = dir_ / name;
        write_atomic(p, content);
        manifest_.outputs.push_back({name, sha256_hex(content), content.size()});
        if (echo && !quiet_) out_ << content;
    }

    void plot(const std::string& name, const expsum::SumProfile& profile, const std::string& title) {
        const std::string svg = render_plot(profile, title);
        emit(name, svg, false);
    }

    void note(const std::string& line) {
        if (!quiet_) out_ << line << '\n';
    }

    void finish() { write_atomic(dir_ / "manifest.json", json_text(to_json(manifest_))); }

    const fs::path& dir() const { return dir_; }

   private:
    fs::path dir_;
    bool quiet_;
    std::ostream& out_;
    RunManifest manifest_;
};

std::string csv_profile(const expsum::SumProfile& p, bool with_error) {
    std::string s = with_error ? "N,re,im,modulus,err_bound\n" : "N,re,im,modulus\n";
    for (const auto& r : p.results) {
        s += std::to_string(r.N) + ',' + num(r.value.real()) + ',' + num(r.value.imag()) + ',' + num(std::abs(r.value));
        if (with_error) s += ',' + num(r.max_phase_error);
        s += '\n';
    }
    return s;
}

expsum::SumProfile worst_profile(const lab::OscillationReport& r) {
    expsum::SumProfile p;
    p.grid = r.grid;
    for (std::size_t i = 0; i < r.grid.size(); ++i) {
        expsum::SumResult s;
        s.N = r.grid[i];
        s.value = r.worst_abs[i];
        p.results.push_back(s);
    }
    return p;
}

// Either an explicit N or a geometric grid.
std::vector<std::size_t> grid_or_n(const std::optional<std::size_t>& n, const std::string& grid) {
    if (n && !grid.empty()) fail(ErrorKind::usage, "give either --N or --grid, not both");
    if (n) return {*n};
    if (grid.empty()) fail(ErrorKind::usage, "one of --N or --grid is required");
    return expsum::parse_grid(grid);
}

struct SamplerOptions {
    int order = 1;
    std::string grid;
    double tau = 0.05;
    std::uint64_t seed = 0;
    std::size_t random_phases = 128;
    std::uint64_t grid_denominator = 0;
    std::vector<std::string> phases;

    void add_to(CLI::App* sub) {
        sub->add_option("--order", order, "Polynomial degree d to test")->check(CLI::Range(1, 12));
        sub->add_option("--grid", grid, "Geometric N grid: start,factor,count")->required();
        sub->add_option("--tau", tau, "Verdict threshold")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "Sampler seed");
        sub->add_option("--random-phases", random_phases, "Random phases per test");
        sub->add_option("--grid-denominator", grid_denominator, "Rational grid denominator Q (0: default)");
        sub->add_option("--phase", phases, "Extra phase coefficients, e.g. \"0,-0.4142\"");
    }

    lab::PhaseSampler sampler() const {
        lab::PhaseSampler s;
        s.degree = order;
        s.seed = seed;
        s.random_count = random_phases;
        s.grid_denominator = grid_denominator;
        for (const auto& p : phases) s.extra.push_back(expsum::parse_phase(p, expsum::Backend::floating));
        return s;
    }
};

struct Params {
    // gen
    std::string spec, format = "csv";
    // shared
    std::string seq, phase, grid, backend = "exact", map, scenario, manifest, method = "brute";
    std::optional<std::size_t> n;
    bool plot = false;
    std::uint64_t p = 0, step = 2, check = 0;
    int k = 2;
    std::optional<std::string> m_first;
    std::optional<std::uint64_t> m_count;
    SamplerOptions osc, sub;
};

class Tool {
   public:
    Tool(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int execute(std::vector<std::string> args);

   private:
    void build(CLI::App& app);
    Json config_echo(CLI::App* sub, RunManifest& m) const;
    std::vector<std::string> expand_config(std::vector<std::string> args, CLI::App& app) const;

    void cmd_gen(Session& s);
    void cmd_sum(Session& s);
    void cmd_oscillate(Session& s);
    void cmd_po_verify(Session& s);
    void cmd_subseq(Session& s);
    void cmd_map_analyze(Session& s);
    void cmd_erg_avg(Session& s);
    void cmd_reduce(Session& s);
    void cmd_gowers(Session& s);
    int cmd_replay();

    std::ostream& out_;
    std::ostream& err_;
    Globals g_;
    Params p_;
    bool out_given_ = false;
    bool threads_given_ = false;
};

// Files a scenario points at (map, weights), relative to the scenario.
void record_scenario_files(const fs::path& scenario, RunManifest& m) {
    std::ifstream in(scenario);
    const Json j = Json::parse(in, nullptr, false);
    if (!j.is_object()) return;
    for (const char* key : {"map", "weights"}) {
        if (!j.contains(key) || !j[key].is_string()) continue;
        const fs::path p = (scenario.parent_path() / j[key].get<std::string>()).lexically_normal();
        std::error_code ec;
        if (fs::is_regular_file(p, ec)) m.inputs.push_back({p.string(), sha256_file(p), fs::file_size(p)});
    }
}

int exit_code(const Error& e) { return e.is_usage() || e.kind() == ErrorKind::io ? 2 : 1; }

void diagnose(std::ostream& err, const std::string& name, const std::string& message, const std::string& detail, int code) {
    Json j{{"error", name}, {"message", message}, {"exit", code}};
    if (!detail.empty()) {
        const Json parsed = Json::parse(detail, nullptr, false);
        j["detail"] = parsed.is_discarded() ? Json(detail) : parsed;
    }
    err << j.dump() << '\n';
}

void Tool::build(CLI::App& app) {
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(OSCILLAB_VERSION));
    app.add_option("--out", g_.out_dir, "Output directory");
    app.add_option("--threads", g_.threads, "Worker threads (default: OSCILLAB_THREADS or 1)")->check(CLI::Range(1u, 1024u));
    app.add_flag("--quiet", g_.quiet, "Do not echo results to stdout");
    app.add_option("--config", g_.config, "JSON run config: {\"subcommand\": ..., option: value, ...}");

    auto* gen = app.add_subcommand("gen", "Generate a weight sequence");
    gen->add_option("--spec", p_.spec, "Generator, e.g. mobius:N=1000000 or rademacher:N=65536,seed=1")->required();
    gen->add_option("--format", p_.format, "csv or bin (OSCS1)")->check(CLI::IsMember({"csv", "bin"}));

    auto* sum = app.add_subcommand("sum", "Weighted exponential sums over an N grid");
    sum->add_option("--seq", p_.seq, "Sequence file or generator spec")->required();
    sum->add_option("--phase", p_.phase, "Phase coefficients a0,a1,... (p/q, decimals, sqrt(k))")->required();
    sum->add_option("--N", p_.n, "Single N");
    sum->add_option("--grid", p_.grid, "Geometric N grid: start,factor,count");
    sum->add_option("--backend", p_.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sum->add_flag("--plot", p_.plot, "Also write an SVG plot");

    auto* osc = app.add_subcommand("oscillate", "Probe a sequence against sampled degree-d phases");
    osc->add_option("--seq", p_.seq, "Sequence file or generator spec")->required();
    p_.osc.add_to(osc);
    osc->add_flag("--plot", p_.plot, "Also write an SVG plot of the worst |S_N|");

    auto* po = app.add_subcommand("po-verify", "Residue-class and twist identities for a prime modulus");
    po->add_option("--seq", p_.seq, "Sequence file or generator spec")->required();
    po->add_option("--p", p_.p, "Prime modulus")->required();
    po->add_option("--phase", p_.phase, "Phase coefficients")->required();
    po->add_option("--N", p_.n, "Number of terms")->required();
    po->add_option("--backend", p_.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));

    auto* sub = app.add_subcommand("subseq", "test_order on the subsequences c_{an+b}");
    sub->add_option("--seq", p_.seq, "Sequence file or generator spec")->required();
    sub->add_option("--step", p_.step, "Step a >= 2")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 20));
    p_.sub.add_to(sub);

    auto* ma = app.add_subcommand("map-analyze", "Zero-entropy certificate of an affine map and of its doubled map");
    ma->add_option("--map", p_.map, "Affine map JSON")->required();
    ma->add_option("--check", p_.check, "Also compare T^n x with W^n (x, b) for n <= this, at the translation point");

    auto* erg = app.add_subcommand("erg-avg", "Weighted multiple ergodic averages over an N grid");
    erg->add_option("--scenario", p_.scenario, "Scenario JSON")->required();
    erg->add_flag("--plot", p_.plot, "Also write an SVG plot");

    auto* red = app.add_subcommand("reduce", "Phase polynomials P_r and their crosscheck against direct orbits");
    red->add_option("--scenario", p_.scenario, "Scenario JSON")->required();
    red->add_option("--m-first", p_.m_first, "First m (default: scenario m_range or kappa)");
    red->add_option("--m-count", p_.m_count, "Number of m values");

    auto* gw = app.add_subcommand("gowers", "Gowers U^k norm over Z_N");
    gw->add_option("--seq", p_.seq, "Sequence file or generator spec")->required();
    gw->add_option("--k", p_.k, "Order k")->check(CLI::Range(1, 4));
    gw->add_option("--method", p_.method, "brute or fourier")->check(CLI::IsMember({"brute", "fourier"}));
    gw->add_option("--N", p_.n, "Use the first N terms (default: all)");

    auto* rp = app.add_subcommand("replay", "Rerun a manifest and compare output hashes");
    rp->add_option("--manifest", p_.manifest, "manifest.json of an earlier run")->required();
}

std::vector<std::string> Tool::expand_config(std::vector<std::string> args, CLI::App& app) const {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (path.empty()) return args;
    std::ifstream in(path);
    if (!in) fail(ErrorKind::io, "cannot open config " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) fail(ErrorKind::config, path + ": not a JSON object");
    if (!j.contains("subcommand") || !j["subcommand"].is_string()) fail(ErrorKind::config, path + ": missing \"subcommand\"");
    const std::string name = j["subcommand"];
    CLI::App* sub = nullptr;
    try {
        sub = app.get_subcommand(name);
    } catch (const CLI::OptionNotFound&) {
        fail(ErrorKind::config, path + ": unknown subcommand '" + name + "'");
    }
    if (name == "replay") fail(ErrorKind::config, path + ": replay cannot be configured from a file");
    std::vector<std::string> tokens{name};
    for (const auto& [key, value] : j.items()) {
        if (key == "subcommand") continue;
        const CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (!opt) fail(ErrorKind::config, path + ": unknown key '" + key + "' for " + name);
        auto push = [&](const Json& v) {
            tokens.push_back("--" + key);
            if (v.is_string()) tokens.push_back(v.get<std::string>());
            else if (!v.is_boolean()) tokens.push_back(v.dump());
        };
        if (value.is_boolean()) {
            if (value.get<bool>()) push(value);
        } else if (value.is_array()) {
            for (const auto& v : value) push(v);
        } else if (value.is_string() || value.is_number()) {
            push(value);
        } else {
            fail(ErrorKind::config, path + ": value of '" + key + "' must be a string, number, boolean or array");
        }
    }
    tokens.insert(tokens.end(), args.begin(), args.end());
    return tokens;
}

Json Tool::config_echo(CLI::App* sub, RunManifest& m) const {
    Json c{{"subcommand", sub->get_name()}};
    for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_lnames().empty()) continue;
        const std::string key = opt->get_lnames().front();
        if (key == "help") continue;
        if (opt->get_expected_max() == 0) {
            c[key] = true;
            continue;
        }
        const auto& res = opt->results();
        if (kFileOptions.count(key) && res.size() == 1) {
            std::error_code ec;
            if (fs::is_regular_file(res[0], ec)) {
                const fs::path abs = fs::absolute(res[0]).lexically_normal();
                c[key] = abs.string();
                m.inputs.push_back({abs.string(), sha256_file(abs), fs::file_size(abs)});
                if (key == "scenario") record_scenario_files(abs, m);
                continue;
            }
        }
        if (opt->get_expected_max() > 1) c[key] = res;
        else c[key] = res.back();
    }
    return c;
}

int Tool::execute(std::vector<std::string> args) {
    CLI::App app{"oscillab: oscillating sequences and weighted multiple ergodic averages", "oscillab"};
    build(app);
    g_.threads = default_threads();
    try {
        args = expand_config(std::move(args), app);
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::Success& e) {
        return app.exit(e, out_, err_);
    } catch (const CLI::ParseError& e) {
        diagnose(err_, "UsageError", e.what(), {}, 2);
        return 2;
    }
    out_given_ = app.get_option("--out")->count() > 0;
    threads_given_ = app.get_option("--threads")->count() > 0;
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "replay") return cmd_replay();

    Session s(g_, out_);
    s.manifest().config = config_echo(sub, s.manifest());
    std::exception_ptr pending;
    try {
        if (name == "gen") cmd_gen(s);
        else if (name == "sum") cmd_sum(s);
        else if (name == "oscillate") cmd_oscillate(s);
        else if (name == "po-verify") cmd_po_verify(s);
        else if (name == "subseq") cmd_subseq(s);
        else if (name == "map-analyze") cmd_map_analyze(s);
        else if (name == "erg-avg") cmd_erg_avg(s);
        else if (name == "reduce") cmd_reduce(s);
        else if (name == "gowers") cmd_gowers(s);
    } catch (const Error& e) {
        // domain failures still leave a manifest beside whatever was written
        if (!e.is_usage() && e.kind() != ErrorKind::io) pending = std::current_exception();
        else throw;
    }
    s.finish();
    if (pending) std::rethrow_exception(pending);
    return 0;
}

void Tool::cmd_gen(Session& s) {
    const auto spec = seq::parse_generator(p_.spec);
    const auto c = s.stage("generate", [&] { return seq::build(spec); });
    std::ostringstream data;
    if (p_.format == "bin") seq::write_binary(c, data);
    else seq::write_csv(c, data);
    const std::string file = p_.format == "bin" ? "sequence.oscs" : "sequence.csv";
    s.emit(file, data.str(), false);
    s.emit("generator.json", json_text(seq::to_json(c.provenance())), false);
    s.note(Json{{"file", (s.dir() / file).string()}, {"length", c.size()}, {"sup_norm_bound", c.sup_norm_bound()}}.dump());
}

void Tool::cmd_sum(Session& s) {
    const auto grid = grid_or_n(p_.n, p_.grid);
    const auto c = s.stage("load", [&] { return seq::load_sequence(p_.seq); });
    const auto phase = expsum::parse_phase(p_.phase, expsum::parse_backend(p_.backend));
    const auto prof = s.stage("sum", [&] { return expsum::sum_profile(c, phase, grid, s.policy()); });
    s.emit("sum.csv", csv_profile(prof, true));
    if (p_.plot) s.plot("sum.svg", prof, "|S_N|");
}

void Tool::cmd_oscillate(Session& s) {
    const auto grid = expsum::parse_grid(p_.osc.grid);
    const auto sampler = p_.osc.sampler();
    const auto c = s.stage("load", [&] { return seq::load_sequence(p_.seq); });
    const auto r = s.stage("test_order", [&] { return lab::test_order(c, p_.osc.order, grid, sampler, p_.osc.tau, s.policy()); });
    s.emit("oscillate.json", json_text(lab::to_json(r)));
    if (p_.plot) s.plot("oscillate.svg", worst_profile(r), "worst |S_N| over sampled phases");
}

void Tool::cmd_po_verify(Session& s) {
    const auto c = s.stage("load", [&] { return seq::load_sequence(p_.seq); });
    const auto phase = expsum::parse_phase(p_.phase, expsum::parse_backend(p_.backend));
    const auto v = s.stage("verify", [&] { return lab::verify_po(c, p_.p, phase, *p_.n, s.policy()); });
    s.emit("po_verify.json", json_text(lab::to_json(v)));
}

void Tool::cmd_subseq(Session& s) {
    const auto grid = expsum::parse_grid(p_.sub.grid);
    const auto sampler = p_.sub.sampler();
    const auto c = s.stage("load", [&] { return seq::load_sequence(p_.seq); });
    const auto r = s.stage("test_subsequences", [&] {
        return lab::test_subsequences(c, p_.step, p_.sub.order, grid, sampler, p_.sub.tau, s.policy());
    });
    s.emit("subseq.json", json_text(lab::to_json(r)));
}

void Tool::cmd_map_analyze(Session& s) {
    const auto t = s.stage("load", [&] { return dyn::load_map(p_.map); });
    Json report{{"map", dyn::to_json(t)}};
    try {
        const auto cert = s.stage("certificate", [&] { return dyn::entropy_certificate(t); });
        report["certificate"] = dyn::to_json(cert);
        const auto w = dyn::build_w(t);
        const auto wcert = s.stage("doubled_certificate", [&] { return dyn::entropy_certificate(w.w); });
        report["doubled"] = {{"group", dyn::to_json(w.w.group())}, {"certificate", dyn::to_json(wcert)}};
        if (p_.check > 0) {
            if (t.approximate) fail(ErrorKind::config, "--check needs an exact translation");
            const auto rep = s.stage("conjugation", [&] { return dyn::conjugation_check(t, {t.translation}, p_.check); });
            report["conjugation"] = dyn::to_json(rep);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::positive_entropy) throw;
        report["positive_entropy"] = {{"message", e.what()}, {"cofactor", Json::parse(e.detail(), nullptr, false)}};
        s.emit("map_analysis.json", json_text(report));
        throw;
    }
    s.emit("map_analysis.json", json_text(report));
}

void Tool::cmd_erg_avg(Session& s) {
    const auto sc = s.stage("load", [&] { return erg::load_scenario(p_.scenario); });
    const auto c = s.stage("weights", [&] { return erg::load_weights(sc); });
    expsum::SumProfile prof;
    Json results = Json::array();
    s.stage("average", [&] {
        if (!sc.trig && sc.residues == 0) {
            prof = erg::decay_profile(c, sc.map, sc.point, sc.characters, sc.polynomials, sc.grid, s.policy());
            for (const auto& r : prof.results) {
                erg::AverageResult a;
                a.N = r.N;
                a.value = r.value;
                results.push_back(erg::to_json(a));
            }
            return;
        }
        prof.grid = sc.grid;
        for (std::size_t N : sc.grid) {
            const auto a = sc.trig ? erg::multiple_average_trig(c, sc.map, sc.point, *sc.trig, sc.polynomials, N, s.policy())
                                   : erg::multiple_average(c, sc.map, sc.point, sc.characters, sc.polynomials, N, s.policy(),
                                                           sc.residues);
            expsum::SumResult r;
            r.N = N;
            r.value = a.value;
            prof.results.push_back(r);
            results.push_back(erg::to_json(a));
        }
    });
    s.emit("erg_avg.csv", csv_profile(prof, false));
    s.emit("erg_avg.json", json_text(Json{{"approximate", sc.map.approximate}, {"results", results}}), false);
    if (p_.plot) s.plot("erg_avg.svg", prof, "|multiple average|");
}

void Tool::cmd_reduce(Session& s) {
    const auto sc = s.stage("load", [&] { return erg::load_scenario(p_.scenario); });
    BigInt m_first;
    if (p_.m_first) m_first = parse_integer(*p_.m_first);
    else if (sc.m_first) m_first = *sc.m_first;
    else m_first = s.stage("doubled_certificate", [&] { return dyn::entropy_certificate(dyn::build_w(sc.map).w).kappa; });
    const std::uint64_t count = p_.m_count.value_or(sc.m_count);
    const auto rep = s.stage("crosscheck", [&] {
        return erg::reduction_crosscheck(sc.map, sc.point, sc.characters, sc.polynomials, m_first, count);
    });
    s.emit("reduce.json", json_text(erg::to_json(rep)));
    if (!rep.violations.empty())
        fail(ErrorKind::mismatch, std::to_string(rep.violations.size()) + " crosscheck violations",
             Json{{"first_r", rep.violations.front().r}, {"first_m", rep.violations.front().m.str()}}.dump());
}

void Tool::cmd_gowers(Session& s) {
    const auto c = s.stage("load", [&] { return seq::load_sequence(p_.seq); });
    const std::size_t N = p_.n.value_or(c.size());
    if (N == 0 || N > c.size()) fail(ErrorKind::length, "--N must be in [1, " + std::to_string(c.size()) + "]");
    const Eigen::VectorXcd f = c.values().head(static_cast<Eigen::Index>(N));
    const auto method = p_.method == "fourier" ? lab::GowersMethod::fourier : lab::GowersMethod::brute;
    const auto r = s.stage("gowers", [&] { return lab::gowers_norm(f, p_.k, method, s.policy()); });
    s.emit("gowers.json", json_text(lab::to_json(r)));
}

int Tool::cmd_replay() {
    const auto m = load_manifest(p_.manifest);
    for (const auto& in : m.inputs) {
        std::error_code ec;
        if (!fs::is_regular_file(in.path, ec) || sha256_file(in.path) != in.sha256)
            fail(ErrorKind::mismatch, "input changed since the recorded run: " + in.path);
    }
    // default target: a sibling directory of the manifest
    const std::string dir = out_given_ ? g_.out_dir : (fs::path(p_.manifest).parent_path() / "replay").string();
    const unsigned threads = threads_given_ ? g_.threads : m.threads;

    const fs::path cfg = fs::path(dir) / "replay_config.json";
    write_atomic(cfg, json_text(m.config));
    std::ostringstream sink;
    Tool inner(sink, err_);
    const int rc = inner.execute({"--config", cfg.string(), "--out", dir, "--threads", std::to_string(threads), "--quiet"});
    std::error_code ec;
    fs::remove(cfg, ec);
    if (rc != 0) return rc;

    Json files = Json::array();
    bool match = true;
    for (const auto& o : m.outputs) {
        const fs::path p = fs::path(dir) / o.path;
        const std::string actual = fs::is_regular_file(p, ec) ? sha256_file(p) : "";
        match = match && actual == o.sha256;
        files.push_back({{"path", o.path}, {"expected", o.sha256}, {"actual", actual}, {"match", actual == o.sha256}});
    }
    Json report{{"manifest", p_.manifest}, {"out", dir}, {"threads", threads}, {"files", files}, {"match", match}};
    if (!g_.quiet) out_ << report.dump(2) << '\n';
    if (!match) fail(ErrorKind::mismatch, "replayed outputs differ from the manifest");
    return 0;
}

}  // namespace

unsigned default_threads() {
    const char* env = std::getenv("OSCILLAB_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 1024) return 1;
    return static_cast<unsigned>(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Tool tool(out, err);
        return tool.execute(args);
    } catch (const Error& e) {
        const int code = exit_code(e);
        diagnose(err, e.name(), e.what(), e.detail(), code);
        return code;
    } catch (const std::bad_alloc&) {
        diagnose(err, "CapacityError", "out of memory", {}, 1);
        return 1;
    } catch (const std::exception& e) {
        diagnose(err, "InternalError", e.what(), {}, 1);
        return 1;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace oscillab::cli
