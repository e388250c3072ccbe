// Regenerates the bundled benchmark corpus: 80 row-reduced non-catastrophic
// codes stratified over q in {2,3,4,5}, n <= 4, k < n, delta in [1, 6], with
// fixed seeds so the output is reproducible byte for byte.
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "freedist/codefile.hpp"
#include "freedist/codegen.hpp"

int main(int argc, char** argv) {
    const std::string out_dir = argc > 1 ? argv[1] : "corpus";
    std::filesystem::create_directories(out_dir);

    struct Stratum {
        std::uint32_t q;
        int n, k, delta;
    };
    std::vector<Stratum> strata;
    const std::pair<int, int> shapes[] = {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}};
    for (int delta = 1; delta <= 6; ++delta)
        for (const auto& [n, k] : shapes)
            for (std::uint32_t q : {2u, 3u, 4u, 5u}) strata.push_back({q, n, k, delta});

    constexpr int kCount = 80;
    for (int i = 0; i < kCount; ++i) {
        const Stratum& s = strata[static_cast<std::size_t>(i) * strata.size() / kCount];
        std::mt19937_64 rng(0xC0DE5EEDull + static_cast<std::uint64_t>(i));
        freedist::CodeFile code;
        code.G = freedist::random_code(s.q, s.n, s.k, s.delta, rng);
        char name[64];
        std::snprintf(name, sizeof(name), "c%02d_q%u_n%d_k%d_d%d", i, s.q, s.n, s.k, s.delta);
        code.id = name;
        freedist::save_code(code, out_dir + "/" + name + ".json");
    }
    std::printf("wrote %d codes to %s\n", kCount, out_dir.c_str());
    return 0;
}
