#pragma once

#include <optional>
#include <vector>

#include "numsg/modular.hpp"

namespace numsg {

/// The semigroup <a, b> with gcd(a, b) = 1, stored with a > b >= 1.
class TwoGenSemigroup {
public:
    /// Accepts either order. Throws NotCoprime when gcd > 1 and
    /// std::invalid_argument for non-positive or equal generators.
    TwoGenSemigroup(Int x, Int y);

    [[nodiscard]] Int a() const noexcept { return a_; }  ///< larger generator
    [[nodiscard]] Int b() const noexcept { return b_; }  ///< smaller generator

    /// Sylvester bound ab - a - b; -1 when b = 1.
    [[nodiscard]] Int frobenius() const;

    friend bool operator==(const TwoGenSemigroup&, const TwoGenSemigroup&) = default;

private:
    Int a_;
    Int b_;
};

/// Which generator plays the modulus in the closed-form membership test.
enum class ModulusChoice { larger, smaller };

/// x ∈ <a, b> via m·[m^{-1} x]_M <= x, where M is the modulus generator and
/// m the other. Both choices give the same answer.
[[nodiscard]] bool member_two_gen(const TwoGenSemigroup& s, Int x,
                                  ModulusChoice choice = ModulusChoice::larger);

/// The quotient <a, b> / d = { x : d·x ∈ <a, b> }.
class QuotientDescriptor {
public:
    /// Throws std::invalid_argument when divisor < 1.
    QuotientDescriptor(TwoGenSemigroup base, Int divisor);

    [[nodiscard]] const TwoGenSemigroup& base() const noexcept { return base_; }
    [[nodiscard]] Int divisor() const noexcept { return divisor_; }

    /// [d · b^{-1}]_a when d is coprime to both generators; the per-x multiplier of the
    /// closed-form test.
    [[nodiscard]] std::optional<Int> step() const noexcept { return step_; }

private:
    TwoGenSemigroup base_;
    Int divisor_;
    std::optional<Int> step_;
};

/// x ∈ base / divisor. Uses [x d b^{-1}]_a · b <= x d when d is coprime to
/// both generators, else tests d·x directly.
[[nodiscard]] bool member_quotient(const QuotientDescriptor& q, Int x);

/// All gaps of <a, b> in ascending order; empty when b = 1.
[[nodiscard]] std::vector<Int> gaps_two_gen(const TwoGenSemigroup& s);

/// Gaps x with 2x and 3x in the semigroup.
[[nodiscard]] std::vector<Int> fundamental_gaps(const TwoGenSemigroup& s);

/// Single-element form of fundamental_gaps, O(1) in the generators.
[[nodiscard]] bool is_fundamental_gap(const TwoGenSemigroup& s, Int x);

}  // namespace numsg
