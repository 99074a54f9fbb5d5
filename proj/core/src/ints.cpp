#include "diomon/ints.hpp"

#include <numeric>

namespace diomon {

Int checked_dot(std::span<const Int> xs, std::span<const Int> ys) {
    if (xs.size() != ys.size()) fail(Errc::dimension_mismatch, "dot product of unequal lengths");
    Int acc = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) acc = checked_add(acc, checked_mul(xs[i], ys[i]));
    return acc;
}

Int gcd_of(std::span<const Int> xs) {
    Int g = 0;
    for (Int x : xs) g = std::gcd(g, checked_abs(x));
    return g;
}

std::vector<Int> vec_sub(std::span<const Int> y, std::span<const Int> x) {
    if (x.size() != y.size()) fail(Errc::dimension_mismatch, "difference of unequal lengths");
    std::vector<Int> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = checked_sub(y[i], x[i]);
    return out;
}

}  // namespace diomon
