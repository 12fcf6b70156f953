#include "numsg/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace numsg {

TwoGenSemigroup::TwoGenSemigroup(Int x, Int y) : a_(std::max(x, y)), b_(std::min(x, y)) {
    if (b_ < 1) {
        throw std::invalid_argument("generators must be positive");
    }
    if (a_ == b_) {
        throw std::invalid_argument("generators must be distinct");
    }
    if (const Int d = gcd(a_, b_); d != 1) {
        throw NotCoprime("generators " + std::to_string(a_) + " and " + std::to_string(b_) +
                         " share the factor " + std::to_string(d));
    }
}

Int TwoGenSemigroup::frobenius() const {
    if (b_ == 1) {
        return -1;
    }
    return checked_sub(checked_mul(a_, b_), checked_add(a_, b_));
}

namespace {

/// Closed-form membership with the inverse of b modulo a computed once.
class FastMember {
public:
    explicit FastMember(const TwoGenSemigroup& s)
        : s_(s), m_(s.a()), inv_(mod_inverse(s.b(), m_)) {}

    bool operator()(Int x) const {
        return x >= 0 && s_.b() * mul_mod(inv_, rem(x, m_), m_) <= x;
    }

private:
    TwoGenSemigroup s_;
    Modulus m_;
    Int inv_;
};

}  // namespace

bool member_two_gen(const TwoGenSemigroup& s, Int x, ModulusChoice choice) {
    if (x < 0) {
        return false;
    }
    const auto [mod, mult] = choice == ModulusChoice::larger ? std::pair{s.a(), s.b()}
                                                             : std::pair{s.b(), s.a()};
    const Modulus m(mod);
    const Int coeff = mul_mod(mod_inverse(mult, m), rem(x, m), m);
    // coeff < mod, so mult·coeff < a·b fits comfortably.
    return mult * coeff <= x;
}

QuotientDescriptor::QuotientDescriptor(TwoGenSemigroup base, Int divisor)
    : base_(base), divisor_(divisor) {
    if (divisor < 1) {
        throw std::invalid_argument("quotient divisor must be >= 1");
    }
    const Modulus m(base_.a());
    if (gcd(divisor_, base_.a()) == 1 && gcd(divisor_, base_.b()) == 1) {
        step_ = rem_product({divisor_}, {base_.b()}, m);
    }
}

bool member_quotient(const QuotientDescriptor& q, Int x) {
    if (x < 0) {
        return false;
    }
    const auto& s = q.base();
    if (!q.step()) {
        return member_two_gen(s, checked_mul(q.divisor(), x));
    }
    const Modulus m(s.a());
    const Int coeff = mul_mod(*q.step(), rem(x, m), m);
    return s.b() * coeff <= checked_mul(x, q.divisor());
}

std::vector<Int> gaps_two_gen(const TwoGenSemigroup& s) {
    std::vector<Int> out;
    if (s.b() < 2) {
        return out;
    }
    const FastMember member(s);
    const Int g = s.frobenius();
    for (Int x = 1; x <= g; ++x) {
        if (!member(x)) {
            out.push_back(x);
        }
    }
    return out;
}

bool is_fundamental_gap(const TwoGenSemigroup& s, Int x) {
    return x > 0 && !member_two_gen(s, x) && member_two_gen(s, checked_mul(2, x)) &&
           member_two_gen(s, checked_mul(3, x));
}

std::vector<Int> fundamental_gaps(const TwoGenSemigroup& s) {
    const FastMember member(s);
    std::vector<Int> out;
    for (const Int x : gaps_two_gen(s)) {
        if (member(2 * x) && member(3 * x)) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace numsg
