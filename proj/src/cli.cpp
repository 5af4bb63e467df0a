#include "cmlab/cli.hpp"

#include "cmlab/cmfields.hpp"
#include "cmlab/embeddings.hpp"
#include "cmlab/equidist.hpp"
#include "cmlab/localmod.hpp"
#include "cmlab/report.hpp"
#include "cmlab/specialfiber.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <iostream>
#include <sstream>

namespace cmlab::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    bool dry_run = false;
    int jobs = 1;
    std::string format = "json";
    std::string output;
    std::string config;
};

struct Params {
    // algebra
    std::string a, b;
    // orders
    i64 disc = 0, level = 1, ell = 0, n = 0;
    std::vector<i64> brandt;
    // fields and fibers
    i64 p = 0, q = 0, dK = 0, c = 1, c0 = 1;
    int nmax = 6;
    std::string target = "singular";
    // local
    std::string choice = "sqrtp";
    int k = 4, radius = 3;
    std::string plot_data;
    // simul
    std::vector<i64> ps, qs, dKs, c0s;
    std::vector<std::string> targets;
};

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& name) {
    const std::string flag = "--" + name;
    for (const auto& a : args)
        if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
}

std::optional<std::string> flag_value(const std::vector<std::string>& args, const std::string& name) {
    const std::string flag = "--" + name;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == flag && i + 1 < args.size()) return args[i + 1];
        if (args[i].rfind(flag + "=", 0) == 0) return args[i].substr(flag.size() + 1);
    }
    return std::nullopt;
}

/// Appends config entries that are not already given as flags.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    auto path = flag_value(args, "config");
    if (!path) return args;
    std::ifstream in(*path);
    if (!in) throw IoError("cannot read config file " + *path);
    for (const auto& [key, value] : parse_config(in)) {
        if (key == "config" || has_flag(args, key)) continue;
        if (key == "dry-run") {
            if (value == "true" || value == "1") args.push_back("--dry-run");
            else if (value != "false" && value != "0") throw ValidationError("config: dry-run must be true or false");
            continue;
        }
        args.push_back("--" + key);
        args.push_back(value);
    }
    return args;
}

Rational parse_rational(const std::string& s, const char* what) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ValidationError(std::string(what) + ": not a rational number: '" + s + "'");
    r.canonicalize();
    return r;
}

void require_prime(i64 x, const char* what) {
    if (!is_prime(x)) throw ValidationError(std::string(what) + " must be prime, got " + std::to_string(x));
}

lattices::OrderPtr base_order(const Params& prm) {
    require_prime(prm.disc, "--disc");
    auto o = lattices::maximal_order(prm.disc);
    if (prm.level == 1) return o;
    require_prime(prm.level, "--level");
    return lattices::eichler_order(o, prm.level);
}

void check_order_params(const Params& prm) {
    require_prime(prm.disc, "--disc");
    if (prm.level != 1) {
        require_prime(prm.level, "--level");
        if (prm.level == prm.disc) throw ValidationError("--level must differ from --disc");
    }
    if (prm.ell != 0 && (!is_prime(prm.ell) || prm.ell == prm.disc || prm.ell == prm.level))
        throw ValidationError("--ell must be a prime not dividing disc * level");
}

localmod::RamifiedChoice parse_choice(const std::string& s) {
    if (s == "sqrtp") return localmod::RamifiedChoice::SqrtP;
    if (s == "sqrtpu") return localmod::RamifiedChoice::SqrtPU;
    throw ValidationError("--choice must be sqrtp or sqrtpu");
}

int env_precision() {
    const char* v = std::getenv("CMLAB_PRECISION");
    if (!v) return 4;
    try {
        std::size_t used = 0;
        int k = std::stoi(v, &used);
        if (used == std::string(v).size()) return k;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("CMLAB_PRECISION must be an integer, got '") + v + "'");
}

std::vector<equidist::ExperimentConfig> simul_configs(const Params& prm, int jobs) {
    const std::size_t m = prm.ps.size();
    if (m == 0) throw ValidationError("simul: --p needs at least one prime");
    auto pick = [&](const auto& v, std::size_t i, const char* name) {
        if (v.size() == 1) return v[0];
        if (v.size() != m) throw ValidationError(std::string("simul: ") + name + " needs one value or one per prime");
        return v[i];
    };
    std::vector<equidist::ExperimentConfig> out;
    for (std::size_t i = 0; i < m; ++i) {
        equidist::ExperimentConfig cfg;
        cfg.p = prm.ps[i];
        cfg.q = pick(prm.qs, i, "--q");
        cfg.dK = pick(prm.dKs, i, "--dK");
        cfg.c0 = prm.c0s.empty() ? 1 : pick(prm.c0s, i, "--c0");
        cfg.target = equidist::parse_target(prm.targets.empty() ? std::string("singular") : pick(prm.targets, i, "--target"));
        cfg.n_max = prm.nmax;
        cfg.jobs = jobs;
        equidist::validate(cfg);
        out.push_back(cfg);
    }
    return out;
}

void emit(const Common& com, const std::string& text, std::ostream& out) {
    if (com.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(com.output);
    if (!f) throw IoError("cannot open output file " + com.output);
    f << text;
    if (!f) throw IoError("write failed: " + com.output);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot open output file " + path);
    f << text;
    if (!f) throw IoError("write failed: " + path);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key.empty()) throw ValidationError("config line " + std::to_string(lineno) + ": empty key");
        out[key] = value;
    }
    return out;
}

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Common com;
    Params prm;
    prm.k = 0;

    CLI::App app{"Exact CM-point and quaternion class-set computations", "cmlab"};
    app.require_subcommand(1, 1);

    auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_flag("--dry-run", com.dry_run, "Validate arguments without computing");
        sub->add_option("--jobs", com.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--format", com.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--output", com.output, "Output file (default stdout)");
        sub->add_option("--config", com.config, "Flat key = value file; flags take precedence");
    };

    auto* algebra = app.add_subcommand("algebra", "Ramification of a quaternion algebra");
    algebra->add_option("--a", prm.a, "First structure constant (rational)");
    algebra->add_option("--b", prm.b, "Second structure constant (rational)");
    algebra->add_option("--disc", prm.disc, "Definite algebra of this prime discriminant");
    common(algebra, {"json"});

    auto* classset = app.add_subcommand("classset", "Right ideal classes of a maximal or Eichler order");
    classset->add_option("--disc", prm.disc, "Prime discriminant q")->required();
    classset->add_option("--level", prm.level, "Eichler level (1 or a prime)");
    classset->add_option("--ell", prm.ell, "Neighbour prime (default: smallest good prime)");
    classset->add_option("--brandt", prm.brandt, "Brandt matrices to include")->delimiter(',');
    common(classset, {"json"});

    auto* brandt = app.add_subcommand("brandt", "Brandt matrix B(n)");
    brandt->add_option("--disc", prm.disc, "Prime discriminant q")->required();
    brandt->add_option("--level", prm.level, "Eichler level (1 or a prime)");
    brandt->add_option("--n", prm.n, "Index n")->required();
    common(brandt, {"json", "csv"});

    auto* emb = app.add_subcommand("embeddings", "Optimal embeddings of O_c, per class");
    emb->add_option("--disc", prm.disc, "Prime discriminant q")->required();
    emb->add_option("--level", prm.level, "Eichler level (1 or a prime)");
    emb->add_option("--dK", prm.dK, "Fundamental discriminant of K")->required();
    emb->add_option("--c", prm.c, "Conductor");
    common(emb, {"json"});

    auto* model = app.add_subcommand("model", "Special fiber model and dual graph");
    model->add_option("--p", prm.p, "Reduction prime")->required();
    model->add_option("--q", prm.q, "Discriminant of the definite algebra")->required();
    model->add_option("--dK", prm.dK, "Fundamental discriminant of K")->required();
    common(model, {"json", "dot"});

    auto* bimod = app.add_subcommand("bimodule", "Type of the CM reduction bimodule");
    bimod->add_option("--p", prm.p, "Odd prime")->required();
    bimod->add_option("--choice", prm.choice, "Ramified extension: sqrtp or sqrtpu");
    bimod->add_option("--k", prm.k, "Precision (default CMLAB_PRECISION or 4)");
    common(bimod, {"json"});

    auto* tree = app.add_subcommand("tree", "Ball in the Bruhat-Tits tree");
    tree->add_option("--p", prm.p, "Prime")->required();
    tree->add_option("--radius", prm.radius, "Radius (at most 6)");
    common(tree, {"json", "dot"});

    auto* eq = app.add_subcommand("equidist", "Equidistribution experiment along a conductor tower");
    eq->add_option("--p", prm.p, "Reduction prime")->required();
    eq->add_option("--q", prm.q, "Discriminant of the definite algebra")->required();
    eq->add_option("--dK", prm.dK, "Fundamental discriminant of K")->required();
    eq->add_option("--c0", prm.c0, "Base conductor prime to p");
    eq->add_option("--nmax", prm.nmax, "Largest exponent n");
    eq->add_option("--target", prm.target, "singular or components");
    eq->add_option("--plot-data", prm.plot_data, "Also write (n, tv) pairs to this file");
    common(eq, {"json", "csv"});

    auto* simul = app.add_subcommand("simul", "Simultaneous reduction at several primes");
    simul->add_option("--p", prm.ps, "Reduction primes")->delimiter(',')->required();
    simul->add_option("--q", prm.qs, "Discriminants, one or one per prime")->delimiter(',')->required();
    simul->add_option("--dK", prm.dKs, "Field discriminants, one or one per prime")->delimiter(',')->required();
    simul->add_option("--c0", prm.c0s, "Base conductors")->delimiter(',');
    simul->add_option("--target", prm.targets, "Targets")->delimiter(',');
    simul->add_option("--nmax", prm.nmax, "Largest exponent n");
    common(simul, {"json", "csv"});

    if (!raw_args.empty() && raw_args[0].rfind("-", 0) != 0 && app.get_subcommand_no_throw(raw_args[0]) == nullptr) {
        err << "error: unknown subcommand '" << raw_args[0] << "'\n";
        return kExitValidation;
    }

    try {
        std::vector<std::string> args = merge_config(raw_args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return kExitOk;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return kExitOk;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return kExitValidation;
        }
        if (com.jobs < 1) throw ValidationError("--jobs must be positive");
        // a squarefree d = 2, 3 mod 4 names the field Q(sqrt d)
        auto field_disc = [](i64 d) {
            if (d >= 0) throw ValidationError("--dK must be negative");
            return cmfields::field_discriminant(d);
        };
        if (prm.dK != 0) prm.dK = field_disc(prm.dK);
        for (auto& d : prm.dKs) d = field_disc(d);
        auto done_dry = [&](const std::string& what) {
            out << "dry-run ok: " << what << "\n";
            return kExitOk;
        };

        if (algebra->parsed()) {
            std::optional<qalg::QuaternionAlgebra> alg;
            if (prm.disc != 0) {
                if (!prm.a.empty() || !prm.b.empty()) throw ValidationError("give either --disc or --a/--b");
                require_prime(prm.disc, "--disc");
                alg = qalg::definite_algebra(prm.disc);
            } else {
                if (prm.a.empty() || prm.b.empty()) throw ValidationError("algebra needs --a and --b, or --disc");
                alg = qalg::QuaternionAlgebra(parse_rational(prm.a, "--a"), parse_rational(prm.b, "--b"));
            }
            if (com.dry_run) return done_dry("algebra");
            emit(com, report::algebra_json(*alg), out);
        } else if (classset->parsed()) {
            check_order_params(prm);
            for (auto n : prm.brandt) {
                if (n < 1) throw ValidationError("--brandt entries must be positive");
                if (std::gcd(n, prm.disc) != 1) throw ValidationError("bad level: gcd(n, disc) != 1");
            }
            if (com.dry_run) return done_dry("classset");
            auto cs = lattices::right_ideal_classes(base_order(prm), prm.ell);
            report::BrandtTable table;
            for (auto n : prm.brandt) table[n] = lattices::brandt_matrix(cs, n);
            emit(com, report::classset_json(cs, table), out);
        } else if (brandt->parsed()) {
            check_order_params(prm);
            if (prm.n < 1) throw ValidationError("--n must be positive");
            if (std::gcd(prm.n, prm.disc) != 1) throw ValidationError("bad level: gcd(n, disc) != 1");
            if (com.dry_run) return done_dry("brandt");
            auto cs = lattices::right_ideal_classes(base_order(prm));
            auto b = lattices::brandt_matrix(cs, prm.n);
            emit(com, com.format == "csv" ? report::brandt_csv(b) : report::brandt_json(prm.n, b), out);
        } else if (emb->parsed()) {
            check_order_params(prm);
            auto cm = cmfields::make_order(prm.dK, prm.c);
            if (com.dry_run) return done_dry("embeddings");
            auto cs = lattices::right_ideal_classes(base_order(prm));
            auto gc = embeddings::gross_points(cs, cm, com.jobs);
            emit(com, report::embeddings_json(gc, cmfields::class_number(cm)), out);
        } else if (model->parsed()) {
            specialfiber::validate(prm.p, prm.q, prm.dK);
            if (com.dry_run) return done_dry("model");
            auto m = specialfiber::build_model(prm.p, prm.q, prm.dK);
            emit(com, com.format == "dot" ? report::model_dot(m) : report::model_json(m), out);
        } else if (bimod->parsed()) {
            const auto choice = parse_choice(prm.choice);
            const int k = prm.k != 0 ? prm.k : env_precision();
            if (k < 2) throw ValidationError("precision must be at least 2");
            require_prime(prm.p, "--p");
            if (prm.p == 2) throw ValidationError("wild ramification unsupported (p = 2)");
            if (com.dry_run) return done_dry("bimodule");
            emit(com, report::bimodule_json(localmod::classify_cm_reduction(prm.p, choice, k)), out);
        } else if (tree->parsed()) {
            require_prime(prm.p, "--p");
            if (prm.radius < 0 || prm.radius > 6) throw ValidationError("--radius must be in 0..6");
            if (com.dry_run) return done_dry("tree");
            auto t = localmod::dual_graph_patch(prm.p, prm.radius);
            emit(com, com.format == "dot" ? report::tree_dot(t) : report::tree_json(t), out);
        } else if (eq->parsed()) {
            equidist::ExperimentConfig cfg;
            cfg.p = prm.p;
            cfg.q = prm.q;
            cfg.dK = prm.dK;
            cfg.c0 = prm.c0;
            cfg.n_max = prm.nmax;
            cfg.target = equidist::parse_target(prm.target);
            cfg.jobs = com.jobs;
            equidist::validate(cfg);
            if (com.dry_run) return done_dry("equidist");
            auto r = equidist::run_experiment(cfg);
            emit(com, com.format == "csv" ? report::equidist_csv(r) : report::equidist_json(r), out);
            if (!prm.plot_data.empty()) write_file(prm.plot_data, report::equidist_plot_data(r));
        } else if (simul->parsed()) {
            auto configs = simul_configs(prm, com.jobs);
            std::set<i64> primes(prm.ps.begin(), prm.ps.end());
            if (primes.size() != prm.ps.size()) throw ValidationError("simul: reduction primes must be distinct");
            if (com.dry_run) return done_dry("simul");
            auto r = equidist::simultaneous_report(configs);
            emit(com, com.format == "csv" ? report::simultaneous_csv(r) : report::simultaneous_json(r), out);
        }
        return kExitOk;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace cmlab::cli
