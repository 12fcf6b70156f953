#pragma once

#include <array>
#include <string>

#include "numsg/modular.hpp"

namespace numsg {

/// Pairwise-coprime generators with a1 > a2 > a3 > 1.
///
/// Indices 1, 2, 3 follow the descending order. Every routine that takes an
/// index validates it and throws IndexContract on anything outside {1,2,3}.
class CoprimeTriple {
public:
    /// Throws std::invalid_argument unless a1 > a2 > a3 > 1, and NotCoprime
    /// when some pair shares a factor.
    CoprimeTriple(Int a1, Int a2, Int a3);

    /// Sorts descending first; same checks as the constructor.
    static CoprimeTriple from_unordered(Int x, Int y, Int z);

    /// Whether (a1, a2, a3) would construct without throwing.
    [[nodiscard]] static bool valid(Int a1, Int a2, Int a3) noexcept;

    [[nodiscard]] Int a1() const noexcept { return g_[0]; }
    [[nodiscard]] Int a2() const noexcept { return g_[1]; }
    [[nodiscard]] Int a3() const noexcept { return g_[2]; }

    /// a_i for i in {1,2,3}.
    [[nodiscard]] Int at(int i) const;

    /// The two indices other than i, ascending.
    [[nodiscard]] static std::array<int, 2> others(int i);

    /// The index in {1,2,3} distinct from i and j.
    [[nodiscard]] static int third(int i, int j);

    [[nodiscard]] Int sum() const { return checked_add(checked_add(g_[0], g_[1]), g_[2]); }

    [[nodiscard]] std::string str() const;

    friend bool operator==(const CoprimeTriple&, const CoprimeTriple&) = default;

private:
    std::array<Int, 3> g_;
};

/// Throws IndexContract unless i is 1, 2 or 3.
void check_index(int i);

}  // namespace numsg
