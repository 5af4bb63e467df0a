#include "cmlab/equidist.hpp"

#include <set>

namespace cmlab::equidist {

std::string to_string(Target t) { return t == Target::Singular ? "singular" : "components"; }

Target parse_target(const std::string& s) {
    if (s == "singular") return Target::Singular;
    if (s == "components") return Target::Components;
    throw ValidationError("target must be 'singular' or 'components', got '" + s + "'");
}

void validate(const ExperimentConfig& cfg) {
    if (!is_prime(cfg.p) || cfg.p == 2) throw ValidationError("the reduction prime p must be an odd prime");
    specialfiber::validate(cfg.p, cfg.q, cfg.dK);
    if (cfg.c0 < 1) throw ValidationError("c0 must be positive");
    if (cfg.c0 % cfg.p == 0) throw ValidationError("base conductor c0 must be prime to p");
    if (cfg.n_max < 0) throw ValidationError("n_max must be nonnegative");
    const int s = kronecker(cfg.dK, cfg.p);
    if (cfg.target == Target::Singular && s != 0)
        throw ValidationError("target singular needs p ramified in K: CM points reduce to superspecial points if and only if v ramifies in K");
    if (cfg.target == Target::Components && s != -1)
        throw ValidationError("target components needs p inert in K: CM points reduce to superspecial points if and only if v ramifies in K");
}

Rational tv_distance(const std::vector<Rational>& nu, const std::vector<Rational>& mu) {
    if (nu.size() != mu.size()) throw ValidationError("tv_distance: mismatched supports");
    Rational s = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) s += abs(nu[i] - mu[i]);
    s /= 2;
    s.canonicalize();
    return s;
}

Rational tv_distance(const WeightedMeasure& nu, const WeightedMeasure& mu) { return tv_distance(nu.masses, mu.masses); }

EquidistReport run_experiment(const ExperimentConfig& cfg) {
    validate(cfg);
    return run_experiment(cfg, specialfiber::build_model(cfg.p, cfg.q, cfg.dK));
}

EquidistReport run_experiment(const ExperimentConfig& cfg, const specialfiber::SpecialFiberModel& model) {
    validate(cfg);
    if (model.p != cfg.p || model.q != cfg.q || model.dK != cfg.dK) throw ValidationError("model does not match the configuration");
    EquidistReport rep;
    rep.config = cfg;
    const auto mu = specialfiber::measures(model);
    const bool singular = cfg.target == Target::Singular;
    const auto& classes = singular ? model.singular : model.components;
    rep.weights = singular ? model.singular.weights : model.component_weights();
    rep.mu_paper = singular ? mu.ram : mu.in;
    rep.mu_inverse = singular ? mu.ram_inv : mu.in_inv;

    for (const auto& cm : cmfields::conductor_tower(cfg.dK, cfg.c0, cfg.p, cfg.n_max)) {
        LevelRow row;
        row.n = static_cast<int>(rep.rows.size());
        row.c = cm.c;
        row.D = cm.discriminant();
        row.h = cmfields::class_number(cm);
        auto gc = embeddings::gross_points(classes, cm, cfg.jobs);
        rep.orientation = gc.orientation;
        row.counts = gc.counts;
        if (!singular) row.counts.insert(row.counts.end(), gc.counts.begin(), gc.counts.end());
        for (i64 m : row.counts) row.total += m;
        row.empty = row.total == 0;
        if (!row.empty) {
            for (i64 m : row.counts) {
                Rational x(m, row.total);
                x.canonicalize();
                row.nu.push_back(x);
            }
            row.tv_paper = tv_distance(row.nu, rep.mu_paper.masses);
            row.tv_inverse = tv_distance(row.nu, rep.mu_inverse.masses);
        }
        rep.rows.push_back(std::move(row));
    }
    rep.verdict = "tie";
    for (auto it = rep.rows.rbegin(); it != rep.rows.rend(); ++it) {
        if (it->empty) continue;
        if (*it->tv_paper < *it->tv_inverse) rep.verdict = "paper";
        else if (*it->tv_inverse < *it->tv_paper) rep.verdict = "inverse";
        break;
    }
    return rep;
}

std::vector<Rational> product_measure(const std::vector<std::vector<Rational>>& factors) {
    std::vector<Rational> out{Rational(1)};
    for (const auto& f : factors) {
        std::vector<Rational> next;
        for (const auto& a : out)
            for (const auto& b : f) next.push_back(a * b);
        out = std::move(next);
    }
    return out;
}

SimultaneousReport simultaneous_report(const std::vector<ExperimentConfig>& configs) {
    if (configs.empty()) throw ValidationError("simultaneous_report: no configurations");
    std::set<i64> primes;
    for (const auto& c : configs) {
        validate(c);
        if (!primes.insert(c.p).second) throw ValidationError("simultaneous_report: reduction primes must be distinct");
    }
    SimultaneousReport sr;
    std::size_t levels = SIZE_MAX;
    for (const auto& c : configs) {
        sr.marginals.push_back(run_experiment(c));
        sr.shape.push_back(sr.marginals.back().weights.size());
        levels = std::min(levels, sr.marginals.back().rows.size());
    }
    std::vector<std::vector<Rational>> by_weight, inverse;
    for (const auto& m : sr.marginals) {
        by_weight.push_back(m.mu_paper.masses);
        inverse.push_back(m.mu_inverse.masses);
    }
    const auto mu_p = product_measure(by_weight), mu_i = product_measure(inverse);
    for (std::size_t n = 0; n < levels; ++n) {
        ProductRow row;
        row.n = static_cast<int>(n);
        std::vector<std::vector<Rational>> nus;
        bool empty = false;
        for (const auto& m : sr.marginals) {
            if (m.rows[n].empty) empty = true;
            nus.push_back(m.rows[n].nu);
        }
        if (!empty) {
            row.nu = product_measure(nus);
            row.tv_paper = tv_distance(row.nu, mu_p);
            row.tv_inverse = tv_distance(row.nu, mu_i);
        }
        sr.rows.push_back(std::move(row));
    }
    return sr;
}

}  // namespace cmlab::equidist
