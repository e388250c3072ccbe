#ifndef FREEDIST_GALOIS_HPP
#define FREEDIST_GALOIS_HPP

#include <cstdint>
#include <vector>

#include "freedist/errors.hpp"

namespace freedist::galois {

/// Field element, encoded as an integer in [0, q). The value packs the
/// coefficient vector of the residue polynomial in base p: the coefficient
/// of degree i sits in base-p digit i. For prime fields this is just the
/// usual representative in [0, p).
using Elem = std::uint16_t;

/// Description of F_{p^m}. The modulus is given low -> high over F_p and is
/// required exactly when m > 1.
struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    std::vector<std::uint32_t> modulus;
};

/// Arithmetic in F_q = F_{p^m}, q <= 2^16. Immutable after construction and
/// safe to share across threads. For q <= 256 full add/mul/inv tables are
/// precomputed so the trellis inner loops are table lookups.
class Field {
   public:
    explicit Field(FieldSpec spec);

    /// Checks the FieldSpec invariants without building tables.
    /// Throws NonPrimeCharacteristic, MissingModulus, ReducibleModulus or
    /// UnsupportedField.
    static void validate(const FieldSpec& spec);

    std::uint32_t p() const { return spec_.p; }
    std::uint32_t m() const { return spec_.m; }
    std::uint32_t q() const { return q_; }
    const FieldSpec& spec() const { return spec_; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DivisionByZero on a = 0
    Elem div(Elem a, Elem b) const;

    bool same_field(const Field& other) const;

   private:
    Elem add_nocache(Elem a, Elem b) const;
    Elem mul_nocache(Elem a, Elem b) const;
    Elem pow_nocache(Elem a, std::uint64_t e) const;

    FieldSpec spec_;
    std::uint32_t q_ = 2;
    bool tables_ = false;
    std::vector<Elem> add_table_;  // q*q
    std::vector<Elem> mul_table_;  // q*q
    std::vector<Elem> neg_table_;  // q
    std::vector<Elem> inv_table_;  // q, entry 0 unused
};

}  // namespace freedist::galois

#endif
