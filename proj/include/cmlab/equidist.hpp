#pragma once

// Equidistribution harness: Gross points of conductor c0 p^n reduced to
// the singular points (p ramified in K) or to the components (p inert in
// K) of the special-fiber model, compared against the weight measures.

#include "cmlab/embeddings.hpp"
#include "cmlab/specialfiber.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cmlab::equidist {

using specialfiber::WeightedMeasure;

enum class Target { Singular, Components };

std::string to_string(Target t);
Target parse_target(const std::string& s);

struct ExperimentConfig {
    i64 p = 3;
    i64 q = 2;
    i64 dK = -3;
    i64 c0 = 1;
    int n_max = 6;
    Target target = Target::Singular;
    int jobs = 1;
};

/// Throws ValidationError on any violated gate; no computation.
void validate(const ExperimentConfig& cfg);

struct LevelRow {
    int n = 0;
    i64 c = 1;
    i64 D = 0;
    i64 h = 0;
    std::vector<i64> counts;  // one per target point
    i64 total = 0;
    bool empty = false;       // "empty fiber": total = 0
    std::vector<Rational> nu;
    std::optional<Rational> tv_paper, tv_inverse;
};

struct EquidistReport {
    ExperimentConfig config;
    std::vector<i64> weights;  // target weights
    WeightedMeasure mu_paper, mu_inverse;
    embeddings::Orientation orientation;
    std::vector<LevelRow> rows;
    std::string verdict;  // "paper", "inverse" or "tie"
};

Rational tv_distance(const WeightedMeasure& nu, const WeightedMeasure& mu);
Rational tv_distance(const std::vector<Rational>& nu, const std::vector<Rational>& mu);

EquidistReport run_experiment(const ExperimentConfig& cfg);
EquidistReport run_experiment(const ExperimentConfig& cfg, const specialfiber::SpecialFiberModel& model);

struct ProductRow {
    int n = 0;
    std::vector<Rational> nu;  // product distribution, row-major over the factors
    std::optional<Rational> tv_paper, tv_inverse;
};

struct SimultaneousReport {
    std::vector<EquidistReport> marginals;
    std::vector<std::size_t> shape;  // target sizes
    std::vector<ProductRow> rows;
};

/// Product of measures in row-major order.
std::vector<Rational> product_measure(const std::vector<std::vector<Rational>>& factors);

/// Requires distinct reduction primes. Rows run over the common levels.
SimultaneousReport simultaneous_report(const std::vector<ExperimentConfig>& configs);

}  // namespace cmlab::equidist
