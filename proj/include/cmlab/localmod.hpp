#pragma once

// Local structures at a prime p: the Bruhat-Tits tree of PGL_2(Q_p), the
// maximal order of the ramified quaternion algebra over Q_p truncated mod
// p^k, and bimodules over it.

#include "cmlab/arith.hpp"

#include <array>
#include <string>
#include <vector>

namespace cmlab::localmod {

// ---------------------------------------------------------------- tree

/// Class of the lattice spanned by the columns of [[p^n, u], [0, 1]].
/// n is any integer and u a rational with p-power denominator reduced
/// into [0, p^n); for n >= 0 and integral u this is the usual (n, u mod p^n).
struct BTVertex {
    i64 p = 2;
    i64 n = 0;
    Rational u = 0;

    bool operator==(const BTVertex& o) const { return p == o.p && n == o.n && u == o.u; }
    bool operator<(const BTVertex& o) const;
    std::string label() const;
};

BTVertex bt_root(i64 p);
/// Canonicalizes u into [0, p^n). Throws if u has a denominator prime to p.
BTVertex bt_vertex(i64 p, i64 n, const Rational& u);
std::vector<BTVertex> bt_neighbors(const BTVertex& v);
i64 bt_distance(const BTVertex& v, const BTVertex& w);

struct TreePatch {
    i64 p = 2;
    int radius = 0;
    std::vector<BTVertex> vertices;                       // BFS order, root first
    std::vector<int> depth;                               // distance from the root
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (parent, child)
};

/// Radius ball around the root. Vertices are the components of the dual
/// graph, edges its singular points. radius <= 6.
TreePatch dual_graph_patch(i64 p, int radius);

// ------------------------------------------------------- local order

/// W = (Z/p^k)[t]/(t^2 - eps) with eps the least quadratic nonresidue mod p;
/// sigma(t) = -t. Elements of O = W + Pi W are (a, b) meaning a + Pi b, with
/// Pi^2 = p and Pi a = sigma(a) Pi.
class LocalQuatOrder {
public:
    using W = std::array<i64, 2>;        // x + y t
    using Elem = std::array<i64, 4>;     // coordinates in 1, t, Pi, Pi t

    LocalQuatOrder(i64 p, int k);

    i64 p() const { return p_; }
    int k() const { return k_; }
    i64 modulus() const { return mod_; }
    i64 eps() const { return eps_; }

    W wmul(const W& x, const W& y) const;
    W sigma(const W& x) const;
    W wnorm(const W& x) const;  // x sigma(x), a scalar
    Elem mul(const Elem& x, const Elem& y) const;
    Elem add(const Elem& x, const Elem& y) const;
    Elem scale(const Elem& x, i64 s) const;
    Elem make(const W& a, const W& b) const { return {a[0], a[1], b[0], b[1]}; }

    static constexpr Elem one() { return {1, 0, 0, 0}; }
    static constexpr Elem zeta() { return {0, 1, 0, 0}; }
    static constexpr Elem pi() { return {0, 0, 1, 0}; }

private:
    i64 p_;
    int k_;
    i64 mod_;
    i64 eps_;
};

using Matrix = std::vector<std::vector<i64>>;

/// Free Z/p^k-module of rank n with commuting left and right actions of
/// the generators zeta and Pi (matrices act on column coordinate vectors).
struct LocalBimodule {
    i64 p = 3;
    int k = 4;
    i64 modulus = 81;
    std::size_t rank = 0;
    Matrix left_zeta, left_pi, right_zeta, right_pi;
};

/// Checks commutation of left with right actions and the defining
/// relations of O on both sides. Returns an empty string when valid.
std::string validate(const LocalBimodule& m);

LocalBimodule regular_bimodule(i64 p, int k);         // O
LocalBimodule ideal_bimodule(i64 p, int k);           // b = Pi O
LocalBimodule direct_sum(const LocalBimodule& x, const LocalBimodule& y);
/// O + O with right action through zeta -> diag(zeta, sigma zeta),
/// Pi -> [[0, 1], [p, 0]]; not admissible.
LocalBimodule twisted_pair(i64 p, int k);
/// Same actions written in the basis given by an invertible P (P^{-1} A P).
LocalBimodule change_basis(const LocalBimodule& m, const Matrix& p_mat, const Matrix& p_inv);

/// log_p of the size of the column span of a matrix over Z/p^k.
int image_length(const Matrix& a, i64 p, int k);

bool is_admissible(const LocalBimodule& m);

/// (r, s) from M / M b; throws ValidationError when not admissible.
std::pair<int, int> bimodule_type(const LocalBimodule& m);

enum class RamifiedChoice { SqrtP, SqrtPU };

/// O tensor_{O_K} O for O_K = Z_p[Pi u'], u' = 1 (K = Q_p(sqrt p)) or u' a
/// unit of W whose norm u is a nonresidue (K = Q_p(sqrt(p u))).
LocalBimodule cm_reduction_bimodule(i64 p, RamifiedChoice choice, int k = 4);

struct BimoduleReport {
    i64 p = 0;
    int k = 0;
    bool admissible = false;
    std::pair<int, int> type{0, 0};
};

/// Classifies at precision k and again at k + 2; throws if they disagree.
BimoduleReport classify_cm_reduction(i64 p, RamifiedChoice choice, int k = 4);

}  // namespace cmlab::localmod
