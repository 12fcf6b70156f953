#include "numsg/triple.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace numsg {

void check_index(int i) {
    if (i < 1 || i > 3) {
        throw IndexContract("generator index must be 1, 2 or 3, got " + std::to_string(i));
    }
}

CoprimeTriple::CoprimeTriple(Int a1, Int a2, Int a3) : g_{a1, a2, a3} {
    if (!(a1 > a2 && a2 > a3 && a3 > 1)) {
        throw std::invalid_argument("triple must satisfy a1 > a2 > a3 > 1, got " + str());
    }
    for (const auto& [x, y] : {std::pair{a1, a2}, std::pair{a1, a3}, std::pair{a2, a3}}) {
        if (const Int d = gcd(x, y); d != 1) {
            throw NotCoprime("triple " + str() + " is not pairwise coprime: gcd(" +
                             std::to_string(x) + ", " + std::to_string(y) + ") = " +
                             std::to_string(d));
        }
    }
}

CoprimeTriple CoprimeTriple::from_unordered(Int x, Int y, Int z) {
    std::array<Int, 3> v{x, y, z};
    std::ranges::sort(v, std::greater<>());
    return {v[0], v[1], v[2]};
}

bool CoprimeTriple::valid(Int a1, Int a2, Int a3) noexcept {
    return a1 > a2 && a2 > a3 && a3 > 1 && gcd(a1, a2) == 1 && gcd(a1, a3) == 1 &&
           gcd(a2, a3) == 1;
}

Int CoprimeTriple::at(int i) const {
    check_index(i);
    return g_[static_cast<std::size_t>(i - 1)];
}

std::array<int, 2> CoprimeTriple::others(int i) {
    check_index(i);
    switch (i) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        default: return {1, 2};
    }
}

int CoprimeTriple::third(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) {
        throw IndexContract("indices must differ, got " + std::to_string(i) + " twice");
    }
    return 6 - i - j;
}

std::string CoprimeTriple::str() const {
    return "(" + std::to_string(g_[0]) + "," + std::to_string(g_[1]) + "," +
           std::to_string(g_[2]) + ")";
}

}  // namespace numsg
