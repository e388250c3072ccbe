#include "freedist/codegen.hpp"

#include <algorithm>
#include <cassert>

namespace freedist {

GeneratorMatrix make_matrix(const galois::FieldSpec& spec,
                            const std::vector<std::vector<std::vector<int>>>& rows) {
    GeneratorMatrix G;
    G.field = std::make_shared<const galois::Field>(spec);
    G.k = rows.size();
    G.n = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows) {
        assert(row.size() == G.n);
        PolyVector pv;
        for (const auto& entry : row) {
            std::vector<galois::Elem> c;
            for (int x : entry) {
                assert(x >= 0 && x < static_cast<int>(G.field->q()));
                c.push_back(static_cast<galois::Elem>(x));
            }
            pv.emplace_back(std::move(c));
        }
        G.rows.push_back(std::move(pv));
    }
    return G;
}

galois::FieldSpec small_field(std::uint32_t q) {
    galois::FieldSpec spec;
    if (q == 4) {
        spec.p = 2;
        spec.m = 2;
        spec.modulus = {1, 1, 1};  // z^2 + z + 1
    } else {
        spec.p = q;
        spec.m = 1;
    }
    return spec;
}

GeneratorMatrix random_code(std::uint32_t q, int n, int k, int delta, std::mt19937_64& rng) {
    assert(k >= 1 && k <= n && delta >= 0);
    auto field = std::make_shared<const galois::Field>(small_field(q));
    std::uniform_int_distribution<std::uint32_t> elem(0, q - 1);
    std::uniform_int_distribution<int> pick_row(0, k - 1);

    while (true) {
        // Random composition of delta into k nonnegative row degrees.
        std::vector<int> nu(static_cast<std::size_t>(k), 0);
        for (int d = 0; d < delta; ++d) ++nu[static_cast<std::size_t>(pick_row(rng))];

        GeneratorMatrix G;
        G.field = field;
        G.k = static_cast<std::size_t>(k);
        G.n = static_cast<std::size_t>(n);
        G.rows.assign(G.k, PolyVector(G.n));
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            for (int j = 0; j < n; ++j) {
                std::vector<galois::Elem> c(static_cast<std::size_t>(nu[static_cast<std::size_t>(i)]) + 1);
                for (auto& x : c) x = static_cast<galois::Elem>(elem(rng));
                G.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Poly(std::move(c));
            }
            // The row degree must be attained and the row must be nonzero.
            int have = -1;
            for (int j = 0; j < n; ++j)
                have = std::max(have, G.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].degree());
            ok = have == nu[static_cast<std::size_t>(i)];
        }
        if (!ok) continue;
        if (!is_row_reduced(G)) continue;
        try {
            if (!is_noncatastrophic(G)) continue;
        } catch (const RankDeficient&) {
            continue;
        }
        return G;
    }
}

}  // namespace freedist
