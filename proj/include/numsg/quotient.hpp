#pragma once

#include <vector>

#include "numsg/semigroup.hpp"
#include "numsg/triple.hpp"

namespace numsg {

/// τ_j(S_i) = S_i ∩ (0, a_j), where S_i = <a_j', a_k'> / a_i for the two
/// indices j', k' other than i. Carries its indices so correspondence inputs
/// can be checked at runtime.
struct TauSet {
    std::vector<Int> values;  ///< ascending, duplicate-free, all in (0, bound)
    int i = 0;                ///< quotient index
    int j = 0;                ///< bound index
    Int bound = 0;            ///< a_j

    friend bool operator==(const TauSet&, const TauSet&) = default;
};

/// L_i = min{ x > 0 : x·a_i ∈ <a_j, a_k> }.
struct LValues {
    Int L1 = 0;
    Int L2 = 0;
    Int L3 = 0;

    [[nodiscard]] Int at(int i) const;

    friend bool operator==(const LValues&, const LValues&) = default;
};

/// S_i as a quotient descriptor.
[[nodiscard]] QuotientDescriptor quotient_of(const CoprimeTriple& t, int i);

/// Scans (0, a_j) with the closed-form quotient membership test.
[[nodiscard]] TauSet tau_direct(const CoprimeTriple& t, int i, int j);

/// τ_j(S_i) ∪ {0, a_j}, ascending.
[[nodiscard]] std::vector<Int> phi_set(const CoprimeTriple& t, int i, int j);

/// τ_j(S_k) from τ_j(S_1) for {j, k} = {2, 3}: the image of the complement
/// of τ_j(S_1) in (0, a_j) under μ ↦ [μ a_1 a_k^{-1}]_{a_j}.
///
/// Throws IndexContract when tau1 is not a τ_j(S_1) of this triple with
/// j in {2, 3}, or when k is not the remaining index.
[[nodiscard]] TauSet tau_from_correspondence(const TauSet& tau1, const CoprimeTriple& t, int k);

/// τ_2(S_1) ∩ (0, a_3) as τ_3(S_1).
[[nodiscard]] TauSet restrict_to_a3(const TauSet& tau2_s1, const CoprimeTriple& t);

/// min(τ ∪ {bound}).
[[nodiscard]] Int min_or_bound(const TauSet& tau);

/// L values via the correspondence path, in one pass over (0, a_2) and
/// O(1) memory: membership in S_1 decides L1, and the complement of
/// τ_j(S_1) is mapped through the correspondence to get min τ_3(S_2) and
/// min τ_2(S_3).
[[nodiscard]] LValues l_values(const CoprimeTriple& t);

/// Same values from materialized TauSets (tau_direct + correspondence),
/// asserting the two L1 routes agree. For tests and small inputs.
[[nodiscard]] LValues l_values_from_sets(const CoprimeTriple& t);

}  // namespace numsg
