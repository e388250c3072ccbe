#include "freedist/polymat.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace freedist {

using galois::Elem;
using galois::Field;

std::vector<int> row_degrees(const GeneratorMatrix& G) {
    std::vector<int> nu(G.k, -1);
    for (std::size_t i = 0; i < G.k; ++i) {
        for (std::size_t j = 0; j < G.n; ++j) nu[i] = std::max(nu[i], G.at(i, j).degree());
        if (nu[i] < 0) throw ZeroRow("row " + std::to_string(i + 1) + " of the generator matrix is zero");
    }
    return nu;
}

namespace {

// Determinant of the k x k submatrix of G selected by cols, by Laplace
// expansion along the first remaining row. k <= 4 in all intended uses.
Poly minor_det(const GeneratorMatrix& G, std::vector<std::size_t> rows, std::vector<std::size_t> cols) {
    const Field& F = *G.field;
    assert(rows.size() == cols.size());
    if (rows.size() == 1) return G.at(rows[0], cols[0]);
    Poly det;
    const std::size_t r0 = rows[0];
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Poly& entry = G.at(r0, cols[c]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != c) sub_cols.push_back(cols[t]);
        Poly term = poly_mul(F, entry, minor_det(G, sub_rows, sub_cols));
        det = (c % 2 == 0) ? poly_add(F, det, term) : poly_sub(F, det, term);
    }
    return det;
}

// Applies fn to every k-subset of columns until fn returns false.
template <class Fn>
void for_each_column_subset(std::size_t n, std::size_t k, Fn fn) {
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), 0);
    while (true) {
        if (!fn(cols)) return;
        // next combination
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (cols[i] != i + n - k) {
                ++cols[i];
                for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

std::vector<Poly> all_minors(const GeneratorMatrix& G) {
    std::vector<std::size_t> rows(G.k);
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<Poly> minors;
    for_each_column_subset(G.n, G.k, [&](const std::vector<std::size_t>& cols) {
        minors.push_back(minor_det(G, rows, cols));
        return true;
    });
    return minors;
}

}  // namespace

int internal_degree(const GeneratorMatrix& G) {
    int best = -1;
    for (const Poly& m : all_minors(G)) best = std::max(best, m.degree());
    if (best < 0) throw RankDeficient("every k x k minor of the generator matrix is zero");
    return best;
}

int external_degree(const GeneratorMatrix& G) {
    const auto nu = row_degrees(G);
    return std::accumulate(nu.begin(), nu.end(), 0);
}

bool is_row_reduced(const GeneratorMatrix& G) {
    const Field& F = *G.field;
    const auto nu = row_degrees(G);
    // Leading-coefficient matrix: entry (i, j) = coefficient of z^{nu_i} in g_ij.
    std::vector<std::vector<Elem>> lead(G.k, std::vector<Elem>(G.n, 0));
    for (std::size_t i = 0; i < G.k; ++i)
        for (std::size_t j = 0; j < G.n; ++j) lead[i][j] = G.at(i, j).coeff(nu[i]);
    // Gaussian elimination over F_q.
    std::size_t rank = 0;
    for (std::size_t col = 0; col < G.n && rank < G.k; ++col) {
        std::size_t pivot = rank;
        while (pivot < G.k && lead[pivot][col] == 0) ++pivot;
        if (pivot == G.k) continue;
        std::swap(lead[pivot], lead[rank]);
        const Elem inv = F.inv(lead[rank][col]);
        for (std::size_t j = col; j < G.n; ++j) lead[rank][j] = F.mul(lead[rank][j], inv);
        for (std::size_t r = 0; r < G.k; ++r) {
            if (r == rank || lead[r][col] == 0) continue;
            const Elem f = lead[r][col];
            for (std::size_t j = col; j < G.n; ++j) lead[r][j] = F.sub(lead[r][j], F.mul(f, lead[rank][j]));
        }
        ++rank;
    }
    return rank == G.k;
}

bool is_noncatastrophic(const GeneratorMatrix& G) {
    const Field& F = *G.field;
    row_degrees(G);  // reject zero rows up front
    Poly g;
    bool any = false;
    for (const Poly& m : all_minors(G)) {
        if (m.is_zero()) continue;
        any = true;
        g = g.is_zero() ? poly_monic(F, m) : poly_gcd(F, g, m);
        if (g.degree() == 0) return true;  // gcd already a unit
    }
    if (!any) throw RankDeficient("every k x k minor of the generator matrix is zero");
    return g.degree() == 0;
}

GeneratorMatrix reverse_code(const GeneratorMatrix& G) {
    if (!is_row_reduced(G)) throw NotRowReduced("reverse code requires a row-reduced generator matrix");
    if (!is_noncatastrophic(G)) throw Catastrophic("reverse code requires a non-catastrophic generator matrix");
    const auto nu = row_degrees(G);
    GeneratorMatrix R = G;
    for (std::size_t i = 0; i < G.k; ++i)
        for (std::size_t j = 0; j < G.n; ++j) R.rows[i][j] = poly_reverse(G.at(i, j), nu[i]);
    return R;
}

int singleton_bound(int n, int k, int delta) {
    assert(k >= 1 && k <= n && delta >= 0);
    return (n - k) * (delta / k + 1) + delta + 1;
}

PolyVector encode(const PolyVector& u, const GeneratorMatrix& G) {
    if (u.size() != G.k) throw DimensionMismatch("input vector length does not match the number of rows");
    const Field& F = *G.field;
    PolyVector v(G.n);
    for (std::size_t j = 0; j < G.n; ++j)
        for (std::size_t i = 0; i < G.k; ++i) v[j] = poly_add(F, v[j], poly_mul(F, u[i], G.at(i, j)));
    return v;
}

CodeProfile profile(const GeneratorMatrix& G) {
    CodeProfile p;
    p.nu = row_degrees(G);
    p.M = *std::max_element(p.nu.begin(), p.nu.end());
    p.external_degree = std::accumulate(p.nu.begin(), p.nu.end(), 0);
    p.delta = internal_degree(G);
    p.row_reduced = p.delta == p.external_degree;
    p.noncatastrophic = is_noncatastrophic(G);
    p.singleton = singleton_bound(static_cast<int>(G.n), static_cast<int>(G.k), p.delta);
    p.q = G.field->q();
    return p;
}

}  // namespace freedist
