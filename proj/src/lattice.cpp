#include "cmlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmlab::lat {

namespace {

bool is_zero_row(const IntVec& r) {
    return std::all_of(r.begin(), r.end(), [](const Integer& v) { return v == 0; });
}

// Rational 4x4 inverse by Gauss-Jordan.
std::array<std::array<Rational, 4>, 4> inverse(std::array<std::array<Rational, 4>, 4> m) {
    std::array<std::array<Rational, 4>, 4> inv{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = (i == j) ? 1 : 0;
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        while (piv < 4 && m[piv][col] == 0) ++piv;
        if (piv == 4) throw std::domain_error("singular lattice basis");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rational s = m[col][col];
        for (int j = 0; j < 4; ++j) {
            m[col][j] /= s;
            inv[col][j] /= s;
        }
        for (int i = 0; i < 4; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational f = m[i][col];
            for (int j = 0; j < 4; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Dual with respect to the coordinate dot product.
Lattice dual(const Lattice& l) {
    if (l.rank() != 4) throw std::domain_error("dual lattice needs full rank");
    std::array<std::array<Rational, 4>, 4> b{};
    auto basis = l.basis();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) b[i][j] = basis[i][j];
    auto inv = inverse(b);
    // rows of (B^{-1})^T
    std::vector<Quat> gens;
    for (int j = 0; j < 4; ++j) gens.push_back(Quat(inv[0][j], inv[1][j], inv[2][j], inv[3][j]));
    return Lattice::from_generators(gens);
}

}  // namespace

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows) {
    const int n = 4;
    int r = 0;
    const int m = static_cast<int>(rows.size());
    for (int col = 0; col < n && r < m; ++col) {
        for (int i = r + 1; i < m; ++i) {
            if (rows[i][col] == 0) continue;
            const Integer a = rows[r][col], b = rows[i][col];
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            const Integer ag = a / g, bg = b / g;
            IntVec nr, ni;
            for (int k = 0; k < n; ++k) {
                nr[k] = s * rows[r][k] + t * rows[i][k];
                ni[k] = ag * rows[i][k] - bg * rows[r][k];
            }
            rows[r] = nr;
            rows[i] = ni;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& v : rows[r]) v = -v;
        const Integer piv = rows[r][col];
        for (int k = 0; k < r; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[k][col].get_mpz_t(), piv.get_mpz_t());
            if (q != 0)
                for (int c = 0; c < n; ++c) rows[k][c] -= q * rows[r][c];
        }
        ++r;
    }
    rows.resize(r);
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero_row), rows.end());
    return rows;
}

Lattice Lattice::from_generators(const std::vector<Quat>& gens) {
    Integer den = 1;
    for (const auto& g : gens)
        for (int k = 0; k < 4; ++k) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g[k].get_den_mpz_t());
    std::vector<IntVec> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        IntVec r;
        for (int k = 0; k < 4; ++k) {
            Rational s = g[k] * den;
            r[k] = s.get_num();
        }
        rows.push_back(r);
    }
    rows = hermite_normal_form(std::move(rows));
    Integer content = den;
    for (const auto& r : rows)
        for (const auto& v : r) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    Lattice l;
    l.den_ = den / content;
    for (auto& r : rows)
        for (auto& v : r) v /= content;
    l.rows_ = std::move(rows);
    for (const auto& r : l.rows_) {
        int c = 0;
        while (r[c] == 0) ++c;
        l.pivots_.push_back(c);
    }
    return l;
}

std::vector<Quat> Lattice::basis() const {
    std::vector<Quat> out;
    for (const auto& r : rows_) {
        Quat q;
        for (int k = 0; k < 4; ++k) {
            q[k] = Rational(r[k], den_);
            q[k].canonicalize();
        }
        out.push_back(q);
    }
    return out;
}

std::optional<std::vector<Integer>> Lattice::coordinates(const Quat& x) const {
    std::array<Rational, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = x[k] * den_;
    std::vector<Integer> coords(rows_.size());
    int next_col = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const int pc = pivots_[i];
        for (int c = next_col; c < pc; ++c)
            if (v[c] != 0) return std::nullopt;
        Rational q = v[pc] / Rational(rows_[i][pc]);
        if (q.get_den() != 1) return std::nullopt;
        coords[i] = q.get_num();
        for (int c = pc; c < 4; ++c) v[c] -= Rational(coords[i] * rows_[i][c]);
        next_col = pc + 1;
    }
    for (int c = next_col; c < 4; ++c)
        if (v[c] != 0) return std::nullopt;
    return coords;
}

std::array<Rational, 4> Lattice::rational_coordinates(const Quat& x) const {
    if (rank() != 4) throw std::domain_error("rational_coordinates needs full rank");
    std::array<Rational, 4> v;
    for (int k = 0; k < 4; ++k) v[k] = x[k] * den_;
    std::array<Rational, 4> coords;
    for (int i = 0; i < 4; ++i) {
        coords[i] = v[i] / Rational(rows_[i][i]);
        for (int c = i; c < 4; ++c) v[c] -= coords[i] * Rational(rows_[i][c]);
    }
    return coords;
}

bool Lattice::contains(const Quat& x) const { return coordinates(x).has_value(); }

Rational Lattice::covolume() const {
    if (rank() != 4) throw std::domain_error("covolume needs full rank");
    Integer d = 1;
    for (int i = 0; i < 4; ++i) d *= rows_[i][i];
    Integer den4 = den_ * den_ * den_ * den_;
    Rational r(d, den4);
    r.canonicalize();
    return r;
}

bool Lattice::operator<(const Lattice& o) const {
    if (den_ != o.den_) return den_ < o.den_;
    return rows_ < o.rows_;
}

Lattice sum(const Lattice& x, const Lattice& y) {
    auto gens = x.basis();
    auto more = y.basis();
    gens.insert(gens.end(), more.begin(), more.end());
    return Lattice::from_generators(gens);
}

Lattice intersection(const Lattice& x, const Lattice& y) { return dual(sum(dual(x), dual(y))); }

Lattice product(const QuaternionAlgebra& alg, const Lattice& x, const Lattice& y) {
    std::vector<Quat> gens;
    for (const auto& a : x.basis())
        for (const auto& b : y.basis()) gens.push_back(alg.mul(a, b));
    return Lattice::from_generators(gens);
}

Lattice conjugate(const QuaternionAlgebra& alg, const Lattice& x) {
    std::vector<Quat> gens;
    for (const auto& a : x.basis()) gens.push_back(alg.conj(a));
    return Lattice::from_generators(gens);
}

Lattice scale(const Lattice& x, const Rational& s) {
    std::vector<Quat> gens;
    for (const auto& a : x.basis()) gens.push_back(a * s);
    return Lattice::from_generators(gens);
}

Lattice left_multiply(const QuaternionAlgebra& alg, const Quat& a, const Lattice& x) {
    std::vector<Quat> gens;
    for (const auto& b : x.basis()) gens.push_back(alg.mul(a, b));
    return Lattice::from_generators(gens);
}

Lattice right_multiply(const QuaternionAlgebra& alg, const Lattice& x, const Quat& a) {
    std::vector<Quat> gens;
    for (const auto& b : x.basis()) gens.push_back(alg.mul(b, a));
    return Lattice::from_generators(gens);
}

bool is_subset(const Lattice& x, const Lattice& y) {
    for (const auto& b : x.basis())
        if (!y.contains(b)) return false;
    return true;
}

Rational index(const Lattice& x, const Lattice& y) { return x.covolume() / y.covolume(); }

Lattice left_order(const QuaternionAlgebra& alg, const Lattice& l) {
    // z l ⊂ l  <=>  z ∈ l b^{-1} for every basis element b
    std::optional<Lattice> acc;
    for (const auto& b : l.basis()) {
        Lattice piece = right_multiply(alg, l, alg.inverse(b));
        acc = acc ? intersection(*acc, piece) : piece;
    }
    return *acc;
}

Lattice right_order(const QuaternionAlgebra& alg, const Lattice& l) {
    std::optional<Lattice> acc;
    for (const auto& b : l.basis()) {
        Lattice piece = left_multiply(alg, alg.inverse(b), l);
        acc = acc ? intersection(*acc, piece) : piece;
    }
    return *acc;
}

std::vector<IntVec> inclusion_matrix(const Lattice& x, const Lattice& y) {
    std::vector<IntVec> out;
    for (const auto& b : x.basis()) {
        auto c = y.coordinates(b);
        if (!c || c->size() != 4) throw std::domain_error("inclusion_matrix: lattice not contained");
        out.push_back({(*c)[0], (*c)[1], (*c)[2], (*c)[3]});
    }
    return out;
}

}  // namespace cmlab::lat
