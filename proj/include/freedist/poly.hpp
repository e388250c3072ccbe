#ifndef FREEDIST_POLY_HPP
#define FREEDIST_POLY_HPP

#include <vector>

#include "freedist/galois.hpp"

namespace freedist {

/// Polynomial over F_q, coefficients low -> high with no trailing zeros;
/// the zero polynomial is the empty sequence. The degree of the zero
/// polynomial is reported as -1 (standing in for the -infinity sentinel).
struct Poly {
    std::vector<galois::Elem> c;

    Poly() = default;
    explicit Poly(std::vector<galois::Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    galois::Elem coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(d)] : 0;
    }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

/// Row vector of n polynomials.
using PolyVector = std::vector<Poly>;

Poly poly_add(const galois::Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const galois::Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const galois::Field& F, const Poly& a, const Poly& b);

/// Quotient and remainder of a by nonzero b. Throws DivisionByZero.
struct PolyDivMod {
    Poly quot;
    Poly rem;
};
PolyDivMod poly_divmod(const galois::Field& F, const Poly& a, const Poly& b);

/// Scales a nonzero polynomial to leading coefficient 1; zero stays zero.
Poly poly_monic(const galois::Field& F, const Poly& a);

/// Euclid's algorithm; the result is monic (or zero when both inputs are zero).
Poly poly_gcd(const galois::Field& F, Poly a, Poly b);

/// z^shift * a.
Poly poly_shift(const Poly& a, int shift);

/// z^target * a(1/z); requires degree(a) <= target.
Poly poly_reverse(const Poly& a, int target);

/// Number of nonzero coefficients.
int poly_weight(const Poly& a);

/// Total Hamming weight across all entries and degrees of a polynomial vector.
int poly_weight(const PolyVector& v);

}  // namespace freedist

#endif
