#pragma once

// Deterministic JSON / CSV / DOT rendering of the library objects.
// Rationals appear as "num/den" next to a 12-digit decimal rendering.

#include "cmlab/embeddings.hpp"
#include "cmlab/equidist.hpp"
#include "cmlab/localmod.hpp"
#include "cmlab/specialfiber.hpp"

#include <map>
#include <string>
#include <vector>

namespace cmlab::report {

/// "num/den", always with a denominator.
std::string fraction(const Rational& x);

std::string algebra_json(const qalg::QuaternionAlgebra& alg);

using BrandtTable = std::map<i64, std::vector<std::vector<i64>>>;

std::string classset_json(const lattices::ClassSet& cs, const BrandtTable& brandt);
std::string brandt_json(i64 n, const std::vector<std::vector<i64>>& b);
std::string brandt_csv(const std::vector<std::vector<i64>>& b);

std::string embeddings_json(const embeddings::GrossCounts& gc, i64 h);

std::string model_json(const specialfiber::SpecialFiberModel& m);
std::string model_dot(const specialfiber::SpecialFiberModel& m);

std::string tree_json(const localmod::TreePatch& t);
std::string tree_dot(const localmod::TreePatch& t);

std::string bimodule_json(const localmod::BimoduleReport& r);

std::string equidist_json(const equidist::EquidistReport& r);
std::string equidist_csv(const equidist::EquidistReport& r);
/// "n,tv_paper,tv_inverse" with decimal values, one line per nonempty level.
std::string equidist_plot_data(const equidist::EquidistReport& r);

std::string simultaneous_json(const equidist::SimultaneousReport& r);
std::string simultaneous_csv(const equidist::SimultaneousReport& r);

}  // namespace cmlab::report
