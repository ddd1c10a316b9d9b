#include "simpqe/features/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "simpqe/util/error.hpp"

namespace simpqe {

namespace {

double clamp_unit(double v) {
    return v > 1.0 ? 1.0 : (v < -1.0 ? -1.0 : v);
}

// Entries whose squares would overflow or underflow are rescaled first; the cosine is
// invariant to scaling either vector.
constexpr double kSafeMin = 1e-140;
constexpr double kSafeMax = 1e140;

double scale_for(double max_abs) {
    return (max_abs < kSafeMin || max_abs > kSafeMax) ? 1.0 / max_abs : 1.0;
}

// sqrt(na * nb) is exact when na == nb, so a vector's cosine with itself is exactly 1.
double finish(double dot, double na, double nb) {
    const double prod = na * nb;
    const double denom = (std::isfinite(prod) && prod > 0.0) ? std::sqrt(prod) : std::sqrt(na) * std::sqrt(nb);
    return clamp_unit(dot / denom);
}

template <class Map>
double max_abs(const Map& m) {
    double out = 0.0;
    for (const auto& [term, w] : m) out = std::max(out, std::abs(w));
    return out;
}

}  // namespace

double cosine(const SparseVector& a, const SparseVector& b) {
    const double ma = max_abs(a);
    const double mb = max_abs(b);
    if (ma == 0.0 || mb == 0.0) {
        return 0.0;
    }
    const double sa = scale_for(ma);
    const double sb = scale_for(mb);
    double dot = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            dot += (ia->second * sa) * (ib->second * sb);
            ++ia;
            ++ib;
        }
    }
    double na = 0.0;
    for (const auto& [term, w] : a) na += (w * sa) * (w * sa);
    double nb = 0.0;
    for (const auto& [term, w] : b) nb += (w * sb) * (w * sb);
    return finish(dot, na, nb);
}

double cosine(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error("cosine: vector lengths differ");
    }
    double ma = 0.0;
    double mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma = std::max(ma, std::abs(a[i]));
        mb = std::max(mb, std::abs(b[i]));
    }
    if (ma == 0.0 || mb == 0.0) {
        return 0.0;
    }
    const double sa = scale_for(ma);
    const double sb = scale_for(mb);
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double x = a[i] * sa;
        const double y = b[i] * sb;
        dot += x * y;
        na += x * x;
        nb += y * y;
    }
    return finish(dot, na, nb);
}

}  // namespace simpqe
