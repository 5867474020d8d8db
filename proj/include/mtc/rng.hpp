#pragma once

// splitmix64: tiny, seedable, identical output on every platform. The test
// suites and the scenario randomizer must be bit-deterministic, so we do not
// rely on <random> distributions.

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace mtc {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    // uniform in [lo, hi] inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    // small nonzero rational, handy for random exact matrices
    Rational small_rational(long long max_abs_num = 9, long long max_den = 4) {
        long long n = range(-max_abs_num, max_abs_num);
        long long d = range(1, max_den);
        return rat(n, d);
    }

    Rational small_nonzero_rational(long long max_abs_num = 9, long long max_den = 4) {
        Rational r;
        do {
            r = small_rational(max_abs_num, max_den);
        } while (r == 0);
        return r;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

  private:
    std::uint64_t state_;
};

}  // namespace mtc
