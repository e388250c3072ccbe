#ifndef FREEDIST_POLYMAT_HPP
#define FREEDIST_POLYMAT_HPP

#include <memory>
#include <vector>

#include "freedist/poly.hpp"

namespace freedist {

/// k x n polynomial generator matrix over F_q. Rows span the code.
struct GeneratorMatrix {
    std::shared_ptr<const galois::Field> field;
    std::size_t k = 0;
    std::size_t n = 0;
    std::vector<PolyVector> rows;  // k rows of n polynomials each

    const Poly& at(std::size_t i, std::size_t j) const { return rows[i][j]; }
};

/// Derived invariants of a generator matrix. delta is the internal degree;
/// for row-reduced matrices it equals the external degree (sum of the nu_i).
struct CodeProfile {
    std::vector<int> nu;      // row degrees
    int M = 0;                // memory = max nu_i
    int delta = 0;            // internal degree
    int external_degree = 0;  // sum of row degrees
    bool row_reduced = false;
    bool noncatastrophic = false;
    int singleton = 0;  // generalized Singleton bound for (n, k, delta)
    std::uint32_t q = 0;
};

/// Row degrees nu_i = largest degree of any entry in row i.
/// Throws ZeroRow if some row is entirely zero.
std::vector<int> row_degrees(const GeneratorMatrix& G);

/// Maximum degree over all k x k minors (determinants by Laplace expansion
/// over polynomial arithmetic). Throws RankDeficient when every minor is the
/// zero polynomial.
int internal_degree(const GeneratorMatrix& G);

int external_degree(const GeneratorMatrix& G);

/// True iff the matrix of z^{nu_i} coefficients of row i has rank k over F_q
/// (equivalently: internal degree equals external degree).
bool is_row_reduced(const GeneratorMatrix& G);

/// True iff the gcd over F_q[z] of all k x k minors is a nonzero constant.
/// Throws RankDeficient when every minor is zero.
bool is_noncatastrophic(const GeneratorMatrix& G);

/// Reverse code: entry (i, j) of the result is z^{nu_i} g_ij(1/z).
/// Requires a row-reduced non-catastrophic input (NotRowReduced /
/// Catastrophic otherwise).
GeneratorMatrix reverse_code(const GeneratorMatrix& G);

/// Generalized Singleton bound (n-k)(floor(delta/k)+1) + delta + 1.
int singleton_bound(int n, int k, int delta);

/// v(z) = u(z) G(z). Throws DimensionMismatch when u has the wrong length.
PolyVector encode(const PolyVector& u, const GeneratorMatrix& G);

/// Computes every profile field in one pass.
CodeProfile profile(const GeneratorMatrix& G);

}  // namespace freedist

#endif
