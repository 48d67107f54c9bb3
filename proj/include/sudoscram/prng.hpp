#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace sudoscram {

// Fixed-increment SplitMix64. Every deterministic draw in the artifact goes
// through this generator, so the constants and update order are frozen and
// covered by golden-value tests.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

// In-place Fisher-Yates using next() mod k index draws. The modulo bias is
// accepted for the sake of a bit-exact, portable shuffle.
template <class T>
void fisher_yates(SplitMix64& rng, std::vector<T>& a) {
    for (std::size_t i = a.size(); i-- > 1;) {
        std::size_t j = static_cast<std::size_t>(rng.next() % (i + 1));
        std::swap(a[i], a[j]);
    }
}

inline std::vector<int> sequence_1_to(int k) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 1);
    return v;
}

inline std::vector<int> random_permutation_1_to(SplitMix64& rng, int k) {
    auto v = sequence_1_to(k);
    fisher_yates(rng, v);
    return v;
}

}  // namespace sudoscram
