#ifndef FREEDIST_CODEGEN_HPP
#define FREEDIST_CODEGEN_HPP

#include <cstdint>
#include <random>

#include "freedist/polymat.hpp"

namespace freedist {

/// Builds a generator matrix from integer coefficient lists (low -> high)
/// over the given field; convenience for tests and examples.
GeneratorMatrix make_matrix(const galois::FieldSpec& spec,
                            const std::vector<std::vector<std::vector<int>>>& rows);

/// FieldSpec for the small orders used throughout: 2, 3, 5, 7 (prime) and
/// 4 = F_{2^2} with modulus z^2 + z + 1.
galois::FieldSpec small_field(std::uint32_t q);

/// Draws a random row-reduced non-catastrophic code with the exact profile
/// (q, n, k, delta). Row degrees are a random composition of delta; entries
/// are uniform subject to the row degrees being attained. Deterministic for
/// a fixed seed.
GeneratorMatrix random_code(std::uint32_t q, int n, int k, int delta, std::mt19937_64& rng);

}  // namespace freedist

#endif
