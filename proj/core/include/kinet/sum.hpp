#ifndef KINET_SUM_HPP
#define KINET_SUM_HPP

#include <cstddef>
#include <span>

namespace kinet {

/// Pairwise (tree) summation with fixed fan-in. Deterministic for a given
/// input order and accurate to ~eps·log(n) relative.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 32) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

/// Pairwise sum of f(i) over i in [0, n).
template <typename F>
double pairwise_sum_indexed(std::size_t begin, std::size_t end, F&& f) {
    const std::size_t n = end - begin;
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += f(i);
        return s;
    }
    const std::size_t mid = begin + n / 2;
    return pairwise_sum_indexed(begin, mid, f) + pairwise_sum_indexed(mid, end, f);
}

}  // namespace kinet

#endif
