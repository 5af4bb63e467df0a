#include "cmlab/report.hpp"

#include "json.hpp"

#include <sstream>

namespace cmlab::report {

using nlohmann::json;

namespace {

json rational(const Rational& x) {
    return json{{"exact", fraction(x)}, {"decimal", to_decimal(x)}};
}

json rationals(const std::vector<Rational>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(rational(x));
    return out;
}

json optional_rational(const std::optional<Rational>& x) {
    return x ? rational(*x) : json(nullptr);
}

json place(qalg::Place v) {
    return v == qalg::kInfinity ? json("inf") : json(v);
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

json quat(const qalg::Quat& x) {
    json out = json::array();
    for (int k = 0; k < 4; ++k) out.push_back(fraction(x[k]));
    return out;
}

json config_json(const equidist::ExperimentConfig& c) {
    return json{{"p", c.p}, {"q", c.q}, {"dK", c.dK}, {"c0", c.c0}, {"n_max", c.n_max},
                {"target", equidist::to_string(c.target)}};
}

json orientation_json(const embeddings::Orientation& o) {
    return json{{"halved_at_q", o.halved_at_q}, {"typed_at_p", o.typed_at_p},
                {"supported", o.supported}, {"note", o.note}};
}

json report_json(const equidist::EquidistReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back(json{{"n", row.n}, {"c", row.c}, {"D", row.D}, {"h", row.h},
                            {"counts", row.counts}, {"total", row.total}, {"empty_fiber", row.empty},
                            {"nu", rationals(row.nu)}, {"tv_paper", optional_rational(row.tv_paper)},
                            {"tv_inverse", optional_rational(row.tv_inverse)}});
    }
    return json{{"config", config_json(r.config)},
                {"weights", r.weights},
                {"mu_paper", rationals(r.mu_paper.masses)},
                {"mu_inverse", rationals(r.mu_inverse.masses)},
                {"orientation", orientation_json(r.orientation)},
                {"rows", rows},
                {"verdict", r.verdict}};
}

std::string csv_rational(const std::optional<Rational>& x) {
    return x ? fraction(*x) + "," + to_decimal(*x) : std::string(",");
}

}  // namespace

std::string fraction(const Rational& x) {
    Rational y = x;
    y.canonicalize();
    return y.get_num().get_str() + "/" + y.get_den().get_str();
}

std::string algebra_json(const qalg::QuaternionAlgebra& alg) {
    json ram = json::array();
    for (auto v : alg.ramification()) ram.push_back(place(v));
    return render(json{{"a", fraction(alg.a())}, {"b", fraction(alg.b())},
                       {"ramification", ram}, {"definite", alg.is_definite()},
                       {"discriminant", alg.discriminant().get_str()}});
}

std::string classset_json(const lattices::ClassSet& cs, const BrandtTable& brandt) {
    json classes = json::array();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        json basis = json::array();
        for (const auto& b : cs.ideals[i].lattice.basis()) basis.push_back(quat(b));
        classes.push_back(json{{"basis", basis}, {"norm", fraction(cs.ideals[i].norm)}, {"weight", cs.weights[i]}});
    }
    json b = json::object();
    for (const auto& [n, m] : brandt) b[std::to_string(n)] = m;
    return render(json{{"disc", cs.order->algebra().discriminant().get_str()},
                       {"level", cs.order->level()},
                       {"neighbour_prime", cs.neighbour_prime},
                       {"weights", cs.weights},
                       {"mass", rational(lattices::mass(cs))},
                       {"classes", classes},
                       {"brandt", b}});
}

std::string brandt_json(i64 n, const std::vector<std::vector<i64>>& b) {
    return render(json{{"n", n}, {"matrix", b}});
}

std::string brandt_csv(const std::vector<std::vector<i64>>& b) {
    std::ostringstream os;
    os << "row";
    for (std::size_t j = 0; j < b.size(); ++j) os << ",c" << j;
    os << "\n";
    for (std::size_t i = 0; i < b.size(); ++i) {
        os << i;
        for (auto v : b[i]) os << "," << v;
        os << "\n";
    }
    return os.str();
}

std::string embeddings_json(const embeddings::GrossCounts& gc, i64 h) {
    json witnesses = json::array();
    for (const auto& cls : gc.points) {
        json w = json::array();
        for (const auto& gp : cls) w.push_back(quat(gp.witness));
        witnesses.push_back(w);
    }
    return render(json{{"D", gc.D}, {"c", gc.c}, {"h", h}, {"counts", gc.counts}, {"total", gc.total},
                       {"unoriented", gc.unoriented}, {"orientation", orientation_json(gc.orientation)},
                       {"witnesses", witnesses}});
}

std::string model_json(const specialfiber::SpecialFiberModel& m) {
    json vertices = json::array();
    for (int parity = 0; parity < 2; ++parity)
        for (std::size_t j = 0; j < m.components.size(); ++j)
            vertices.push_back(json{{"id", m.vertex(j, parity)}, {"class", j}, {"parity", parity},
                                    {"weight", m.components.weights[j]}});
    json edges = json::array();
    for (const auto& e : m.edge_multiplicities()) edges.push_back(json::array({e[0], e[1], e[2]}));
    json singular = json::array();
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        singular.push_back(json{{"id", i}, {"weight", m.singular.weights[i]},
                                {"even", m.vertex(m.edges[i].even, 0)}, {"odd", m.vertex(m.edges[i].odd, 1)}});
    const auto ms = specialfiber::measures(m);
    return render(json{{"p", m.p}, {"q", m.q}, {"dK", m.dK},
                       {"vertices", vertices}, {"edges", edges}, {"singular_points", singular},
                       {"betti_number", m.betti_number()}, {"connected", m.connected()},
                       {"brandt_consistent", specialfiber::brandt_consistent(m)},
                       {"mu_ram", rationals(ms.ram.masses)}, {"mu_ram_inverse", rationals(ms.ram_inv.masses)},
                       {"mu_in", rationals(ms.in.masses)}, {"mu_in_inverse", rationals(ms.in_inv.masses)}});
}

std::string model_dot(const specialfiber::SpecialFiberModel& m) {
    std::ostringstream os;
    os << "graph dual_graph {\n";
    for (int parity = 0; parity < 2; ++parity)
        for (std::size_t j = 0; j < m.components.size(); ++j)
            os << "  v" << m.vertex(j, parity) << " [label=\"C" << j << (parity ? "'" : "")
               << " w=" << m.components.weights[j] << "\"];\n";
    for (std::size_t i = 0; i < m.edges.size(); ++i)
        os << "  v" << m.vertex(m.edges[i].even, 0) << " -- v" << m.vertex(m.edges[i].odd, 1)
           << " [label=\"s" << i << " w=" << m.singular.weights[i] << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string tree_json(const localmod::TreePatch& t) {
    json vertices = json::array();
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        vertices.push_back(json{{"id", i}, {"n", t.vertices[i].n}, {"u", fraction(t.vertices[i].u)},
                                {"depth", t.depth[i]}});
    json edges = json::array();
    for (const auto& [a, b] : t.edges) edges.push_back(json::array({a, b}));
    return render(json{{"p", t.p}, {"radius", t.radius}, {"vertices", vertices}, {"edges", edges}});
}

std::string tree_dot(const localmod::TreePatch& t) {
    std::ostringstream os;
    os << "graph bruhat_tits {\n";
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << t.vertices[i].label() << "\"];\n";
    for (const auto& [a, b] : t.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string bimodule_json(const localmod::BimoduleReport& r) {
    return render(json{{"p", r.p}, {"k", r.k}, {"admissible", r.admissible},
                       {"type", json::array({r.type.first, r.type.second})}});
}

std::string equidist_json(const equidist::EquidistReport& r) { return render(report_json(r)); }

std::string equidist_csv(const equidist::EquidistReport& r) {
    std::ostringstream os;
    os << "n,c,h";
    for (std::size_t i = 0; i < r.weights.size(); ++i) os << ",m_" << i + 1;
    os << ",total,empty_fiber,tv_paper,tv_paper_decimal,tv_inv,tv_inv_decimal\n";
    for (const auto& row : r.rows) {
        os << row.n << "," << row.c << "," << row.h;
        for (auto m : row.counts) os << "," << m;
        os << "," << row.total << "," << (row.empty ? 1 : 0) << "," << csv_rational(row.tv_paper) << ","
           << csv_rational(row.tv_inverse) << "\n";
    }
    return os.str();
}

std::string equidist_plot_data(const equidist::EquidistReport& r) {
    std::ostringstream os;
    os << "n,tv_paper,tv_inverse\n";
    for (const auto& row : r.rows) {
        if (!row.tv_paper || !row.tv_inverse) continue;
        os << row.n << "," << to_decimal(*row.tv_paper) << "," << to_decimal(*row.tv_inverse) << "\n";
    }
    return os.str();
}

std::string simultaneous_json(const equidist::SimultaneousReport& r) {
    json marginals = json::array();
    for (const auto& m : r.marginals) marginals.push_back(report_json(m));
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"n", row.n}, {"nu", rationals(row.nu)}, {"tv_paper", optional_rational(row.tv_paper)},
                            {"tv_inverse", optional_rational(row.tv_inverse)}});
    return render(json{{"shape", r.shape}, {"marginals", marginals}, {"rows", rows}});
}

std::string simultaneous_csv(const equidist::SimultaneousReport& r) {
    std::ostringstream os;
    os << "n,tv_paper,tv_paper_decimal,tv_inv,tv_inv_decimal\n";
    for (const auto& row : r.rows)
        os << row.n << "," << csv_rational(row.tv_paper) << "," << csv_rational(row.tv_inverse) << "\n";
    return os.str();
}

}  // namespace cmlab::report
