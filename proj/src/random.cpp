#include "hocc/random.hpp"

namespace hocc {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    using Wide = unsigned __int128;
    Wide m = Wide(engine_()) * bound;
    auto low = std::uint64_t(m);
    if (low < bound) {
        std::uint64_t threshold = -bound % bound;
        while (low < threshold) {
            m = Wide(engine_()) * bound;
            low = std::uint64_t(m);
        }
    }
    return std::uint64_t(m >> 64);
}

}  // namespace hocc
