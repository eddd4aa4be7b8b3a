#pragma once

#include <bit>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace riesz {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place iterative radix-2 transform, unnormalized:
///   forward: X[m] = sum_k x[k] exp(-2 pi i k m / n)
///   inverse: X[k] = sum_m x[m] exp(+2 pi i k m / n)
/// n must be a power of two.
inline void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_radix2: size must be a power of two");
    if (n == 1) return;

    // Bit-reversal permutation.
    const int levels = std::countr_zero(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = 0;
        for (int b = 0; b < levels; ++b) j |= ((i >> b) & 1u) << (levels - 1 - b);
        if (j > i) std::swap(a[i], a[j]);
    }

    std::vector<std::complex<double>> tw;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        tw.resize(len / 2);
        for (std::size_t j = 0; j < len / 2; ++j) tw[j] = std::polar(1.0, ang * j);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * tw[j];
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

}  // namespace riesz
