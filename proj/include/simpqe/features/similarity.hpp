#pragma once

#include <map>
#include <span>
#include <string>

namespace simpqe {

/// Term -> weight, ordered by term so dot products sum in a fixed order.
using SparseVector = std::map<std::string, double>;

/// a.b / (|a| |b|); 0 when either vector is all-zero.
double cosine(const SparseVector& a, const SparseVector& b);
/// Dense counterpart, same zero rule. Throws Error on a length mismatch.
double cosine(std::span<const double> a, std::span<const double> b);

}  // namespace simpqe
