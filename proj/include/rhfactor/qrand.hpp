#pragma once

#include <cstdint>
#include <complex>
#include <vector>

namespace rhf {

// Bit-stable deterministic RNG (SplitMix64); std distributions are avoided so
// runs are byte-identical across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    long long integer(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Van der Corput radical inverse; halton(i,2) x halton(i,3) is the plane grid.
inline double radical_inverse(std::uint64_t i, std::uint64_t base) {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv, r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

// Low-discrepancy complex points in [re0,re1] x [im0,im1], seed-shifted,
// filtered by an acceptance predicate.
template <class Accept>
std::vector<std::complex<double>> quasi_points(std::size_t count, double re0, double re1,
                                               double im0, double im1, std::uint64_t seed,
                                               Accept&& accept, std::size_t max_tries = 1u << 20) {
    std::vector<std::complex<double>> out;
    double sx = radical_inverse(seed * 2654435761ull + 1, 5);
    double sy = radical_inverse(seed * 2654435761ull + 1, 7);
    for (std::uint64_t i = 1; out.size() < count && i < max_tries; ++i) {
        double u = radical_inverse(i, 2) + sx;
        double v = radical_inverse(i, 3) + sy;
        u -= std::floor(u);
        v -= std::floor(v);
        std::complex<double> z{re0 + (re1 - re0) * u, im0 + (im1 - im0) * v};
        if (accept(z)) out.push_back(z);
    }
    return out;
}

} // namespace rhf
