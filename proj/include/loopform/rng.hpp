#pragma once

#include <loopform/rational.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace loopform {

// Deterministic stream of small rationals for property tests and the
// seeded verification suites.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform_int(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(gen_);
    }

    Rat small_rat(int num_bound = 9, int den_bound = 4) {
        int num = uniform_int(-num_bound, num_bound);
        int den = uniform_int(1, den_bound);
        return Rat(num, den);
    }

    std::vector<Rat> rat_vector(std::size_t n, int num_bound = 9, int den_bound = 4) {
        std::vector<Rat> v(n);
        for (auto& x : v)
            x = small_rat(num_bound, den_bound);
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace loopform
