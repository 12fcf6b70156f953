#pragma once

// Brute-force ground truth. Nothing in here may use modular inverses or the
// closed-form membership tests; it exists to check them.

#include <cstdint>
#include <vector>

#include "numsg/modular.hpp"
#include "numsg/triple.hpp"

namespace numsg::oracle {

/// Sorted, duplicate-free positive generators.
class GeneratorSet {
public:
    /// Throws InvalidGenerators on an empty list or a non-positive entry.
    explicit GeneratorSet(std::vector<Int> gens);

    [[nodiscard]] const std::vector<Int>& gens() const noexcept { return gens_; }
    [[nodiscard]] Int gcd() const noexcept;

private:
    std::vector<Int> gens_;
};

/// Coin-change reachability table over [0, limit].
class ReachTable {
public:
    ReachTable(const GeneratorSet& g, Int limit);

    /// Throws std::out_of_range beyond the table limit.
    [[nodiscard]] bool operator[](Int n) const;
    [[nodiscard]] Int limit() const noexcept { return static_cast<Int>(reach_.size()) - 1; }

private:
    std::vector<std::uint8_t> reach_;
};

[[nodiscard]] bool representable(const GeneratorSet& g, Int n);

/// Largest non-representable integer; -1 when everything is representable.
/// Throws InvalidGenerators when the gcd is not 1.
[[nodiscard]] Int frobenius_oracle(const GeneratorSet& g);

/// Least positive x with x·a_i ∈ <a_j, a_k>.
[[nodiscard]] Int L_oracle(const CoprimeTriple& t, int i);

/// { x : 0 < x < a_j, x·a_i ∈ <a_j', a_k'> } where j', k' are the indices
/// other than i.
[[nodiscard]] std::vector<Int> tau_oracle(const CoprimeTriple& t, int i, int j);

}  // namespace numsg::oracle
