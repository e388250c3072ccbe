#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace freedist;
using tests::fig1_code;

TEST_CASE("forward extensions on the (1,2,2) code") {
    const auto G = fig1_code();
    const Trellis T(G);
    CHECK(T.num_states() == 4);
    CHECK(T.num_inputs() == 2);
    CHECK(T.delta() == 2);
    CHECK(T.memory() == 2);

    const auto ext = T.forward_extensions(0);
    REQUIRE(ext.size() == 2);
    // zero input: zero self-loop with zero output
    CHECK(ext[0].to == 0);
    CHECK(ext[0].weight == 0);
    // input 1: state (1, 0), output (1, 0)
    CHECK(ext[1].to == 1);
    CHECK(ext[1].output == std::vector<galois::Elem>{1, 0});
    CHECK(ext[1].weight == 1);
}

TEST_CASE("predecessor chain of the worked example") {
    // 00 <- 01 <- 10 <- 00 with edge outputs 11, 00, 10.
    const auto G = fig1_code();
    const Trellis T(G);
    const std::uint64_t s10 = T.pack({{1, 0}});
    const std::uint64_t s01 = T.pack({{0, 1}});
    CHECK(s10 == 1);
    CHECK(s01 == 2);

    bool found = false;
    for (const auto& t : T.backward_extensions(0))
        if (t.from == s01) {
            found = true;
            CHECK(t.output == std::vector<galois::Elem>{1, 1});
            CHECK(t.weight == 2);
        }
    CHECK(found);

    found = false;
    for (const auto& t : T.backward_extensions(s01))
        if (t.from == s10) {
            found = true;
            CHECK(t.output == std::vector<galois::Elem>{0, 0});
        }
    CHECK(found);

    found = false;
    for (const auto& t : T.backward_extensions(s10))
        if (t.from == 0) {
            found = true;
            CHECK(t.output == std::vector<galois::Elem>{1, 0});
        }
    CHECK(found);
}

TEST_CASE("backward extensions enumerate exactly the incoming edges") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 6; ++i) {
        const auto G = random_code(i % 2 ? 3 : 2, 3, 2, 2, rng);
        const Trellis T(G);
        // All edges, grouped by destination.
        std::map<std::uint64_t, std::multiset<std::uint64_t>> incoming;
        for (std::uint64_t s = 0; s < T.num_states(); ++s)
            for (const auto& t : T.forward_extensions(s)) incoming[t.to].insert(t.from);
        for (std::uint64_t s = 0; s < T.num_states(); ++s) {
            std::multiset<std::uint64_t> preds;
            for (const auto& t : T.backward_extensions(s)) {
                CHECK(t.to == s);
                preds.insert(t.from);
            }
            CHECK(preds == incoming[s]);
            CHECK(preds.size() == T.num_inputs());
        }
    }
}

TEST_CASE("zero state predecessors have the shape (0,...,0,a)") {
    const auto G = make_matrix(small_field(2), {{{1, 1}, {0, 1}, {1}}, {{1, 0, 1}, {1}, {0, 1, 1}}});
    REQUIRE(is_row_reduced(G));
    const Trellis T(G);
    for (const auto& t : T.backward_extensions(0)) {
        const auto regs = T.unpack(t.from);
        for (std::size_t i = 0; i < regs.size(); ++i)
            for (std::size_t c = 0; c + 1 < regs[i].size(); ++c) CHECK(regs[i][c] == 0);
    }
}

TEST_CASE("parallel edges when a row degree is zero") {
    // nu = (0, 1): every successor is reached by exactly q^{#zero-degree rows}
    // = 2 input vectors.
    const auto G = make_matrix(small_field(2), {{{1}, {1}, {0}}, {{0, 1}, {1}, {1, 1}}});
    REQUIRE(row_degrees(G) == std::vector<int>{0, 1});
    REQUIRE(is_row_reduced(G));
    const Trellis T(G);
    for (std::uint64_t s = 0; s < T.num_states(); ++s) {
        std::map<std::uint64_t, int> hits;
        for (const auto& t : T.forward_extensions(s)) ++hits[t.to];
        for (const auto& [to, count] : hits) CHECK(count == 2);
    }
}

TEST_CASE("m vector and sigma") {
    const auto G = fig1_code();
    const Trellis T(G);
    CHECK(T.m_vector(T.pack({{1, 0}})) == std::vector<int>{1});
    CHECK(T.m_vector(T.pack({{0, 1}})) == std::vector<int>{0});
    CHECK(T.m_vector(0) == std::vector<int>{2});  // all-zero row: m = nu
    CHECK(T.sigma(0) == 0);
    CHECK(T.sigma(T.pack({{0, 1}})) == 2);
    CHECK(T.sigma(T.pack({{1, 0}})) == 1);
}

TEST_CASE("sigma equals the shortest forward path length from zero") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 8; ++i) {
        const auto G = tests::suite_codes(8, 3, 17)[static_cast<std::size_t>(i)];
        const Trellis T(G);
        if (T.num_states() > (1ull << 12)) continue;
        // BFS from zero over forward edges.
        std::vector<int> depth(static_cast<std::size_t>(T.num_states()), -1);
        std::vector<std::uint64_t> frontier{0};
        depth[0] = 0;
        int level = 0;
        while (!frontier.empty()) {
            std::vector<std::uint64_t> next;
            ++level;
            for (auto s : frontier)
                for (std::uint64_t u = 0; u < T.num_inputs(); ++u) {
                    const auto e = T.forward_step(s, u);
                    if (depth[static_cast<std::size_t>(e.state)] < 0) {
                        depth[static_cast<std::size_t>(e.state)] = level;
                        next.push_back(e.state);
                    }
                }
            frontier = std::move(next);
        }
        for (std::uint64_t s = 0; s < T.num_states(); ++s) CHECK(depth[static_cast<std::size_t>(s)] == T.sigma(s));
        // The all-zero backward walk reaches zero in exactly sigma steps.
        for (std::uint64_t s = 0; s < T.num_states(); ++s) {
            std::uint64_t cur = s;
            int steps = 0;
            while (cur != 0) {
                cur = T.backward_step(cur, 0).state;
                ++steps;
            }
            CHECK(steps == T.sigma(s));
        }
    }
}

TEST_CASE("forward then backward recovers the source state") {
    std::mt19937_64 rng(3);
    const auto codes = tests::suite_codes(6, 3, 23);
    for (const auto& G : codes) {
        const Trellis T(G);
        std::uniform_int_distribution<std::uint64_t> dist(0, T.num_states() - 1);
        for (int rep = 0; rep < 20; ++rep) {
            const std::uint64_t s = dist(rng);
            for (const auto& t : T.forward_extensions(s)) {
                bool recovered = false;
                for (const auto& b : T.backward_extensions(t.to)) recovered = recovered || b.from == s;
                CHECK(recovered);
            }
        }
    }
}

TEST_CASE("output linearity") {
    std::mt19937_64 rng(9);
    const auto codes = tests::suite_codes(6, 3, 29);
    for (const auto& G : codes) {
        const Trellis T(G);
        const auto& F = *G.field;
        std::uniform_int_distribution<std::uint64_t> sdist(0, T.num_states() - 1);
        std::uniform_int_distribution<std::uint64_t> udist(0, T.num_inputs() - 1);
        for (int rep = 0; rep < 30; ++rep) {
            const std::uint64_t s1 = sdist(rng), s2 = sdist(rng);
            const std::uint64_t u1 = udist(rng), u2 = udist(rng);
            const auto t1 = T.transition(s1, u1), t2 = T.transition(s2, u2);
            // componentwise sums of states and inputs
            StateRegisters r1 = T.unpack(s1), r2 = T.unpack(s2);
            for (std::size_t i = 0; i < r1.size(); ++i)
                for (std::size_t c = 0; c < r1[i].size(); ++c) r1[i][c] = F.add(r1[i][c], r2[i][c]);
            std::vector<galois::Elem> u(t1.input.size());
            for (std::size_t i = 0; i < u.size(); ++i) u[i] = F.add(t1.input[i], t2.input[i]);
            const auto ts = T.transition(T.pack(r1), T.input_index(u));
            for (std::size_t j = 0; j < ts.output.size(); ++j)
                CHECK(ts.output[j] == F.add(t1.output[j], t2.output[j]));
        }
    }
}

TEST_CASE("walking the trellis encodes exactly") {
    std::mt19937_64 rng(123);
    const auto codes = tests::suite_codes(8, 4, 31);
    for (const auto& G : codes) {
        const Trellis T(G);
        const int L = 5;
        std::uniform_int_distribution<std::uint32_t> edist(0, G.field->q() - 1);
        for (int rep = 0; rep < 10; ++rep) {
            PolyVector u(G.k);
            for (auto& p : u) {
                std::vector<galois::Elem> c(L);
                for (auto& x : c) x = static_cast<galois::Elem>(edist(rng));
                p = Poly(std::move(c));
            }
            const PolyVector v = encode(u, G);
            // Walk: feed the L input blocks, then drain with zeros.
            std::uint64_t state = 0;
            int walked_weight = 0;
            std::vector<std::vector<galois::Elem>> blocks;
            for (int t = 0; t < L + T.memory(); ++t) {
                std::vector<galois::Elem> in(G.k);
                for (std::size_t i = 0; i < G.k; ++i) in[i] = t < L ? u[i].coeff(t) : 0;
                const auto tr = T.transition(state, T.input_index(in));
                state = tr.to;
                walked_weight += tr.weight;
                blocks.push_back(tr.output);
            }
            CHECK(state == 0);
            CHECK(walked_weight == poly_weight(v));
            for (std::size_t t = 0; t < blocks.size(); ++t)
                for (std::size_t j = 0; j < G.n; ++j)
                    CHECK(blocks[t][j] == v[j].coeff(static_cast<int>(t)));
        }
    }
}

TEST_CASE("pack unpack round trip and reverse involution") {
    const auto codes = tests::suite_codes(6, 3, 37);
    for (const auto& G : codes) {
        const Trellis T(G);
        for (std::uint64_t s = 0; s < T.num_states(); ++s) {
            CHECK(T.pack(T.unpack(s)) == s);
            CHECK(T.reverse_state(T.reverse_state(s)) == s);
        }
    }
}
