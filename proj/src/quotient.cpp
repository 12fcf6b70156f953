#include "numsg/quotient.hpp"

#include <algorithm>
#include <string>

namespace numsg {

Int LValues::at(int i) const {
    check_index(i);
    return i == 1 ? L1 : (i == 2 ? L2 : L3);
}

QuotientDescriptor quotient_of(const CoprimeTriple& t, int i) {
    const auto o = CoprimeTriple::others(i);
    return {TwoGenSemigroup(t.at(o[0]), t.at(o[1])), t.at(i)};
}

TauSet tau_direct(const CoprimeTriple& t, int i, int j) {
    (void)CoprimeTriple::third(i, j);  // validates i != j
    const QuotientDescriptor q = quotient_of(t, i);
    TauSet out{{}, i, j, t.at(j)};
    for (Int x = 1; x < out.bound; ++x) {
        if (member_quotient(q, x)) {
            out.values.push_back(x);
        }
    }
    return out;
}

std::vector<Int> phi_set(const CoprimeTriple& t, int i, int j) {
    const TauSet tau = tau_direct(t, i, j);
    std::vector<Int> out;
    out.reserve(tau.values.size() + 2);
    out.push_back(0);
    out.insert(out.end(), tau.values.begin(), tau.values.end());
    out.push_back(tau.bound);
    return out;
}

TauSet tau_from_correspondence(const TauSet& tau1, const CoprimeTriple& t, int k) {
    if (tau1.i != 1) {
        throw IndexContract("correspondence input must be a τ_j(S_1), got S_" +
                            std::to_string(tau1.i));
    }
    if (tau1.j != 2 && tau1.j != 3) {
        throw IndexContract("correspondence bound index must be 2 or 3, got " +
                            std::to_string(tau1.j));
    }
    if (k != 5 - tau1.j) {
        throw IndexContract("target quotient index must be " + std::to_string(5 - tau1.j) +
                            ", got " + std::to_string(k));
    }
    if (tau1.bound != t.at(tau1.j)) {
        throw IndexContract("τ set bound " + std::to_string(tau1.bound) +
                            " does not match a_" + std::to_string(tau1.j) + " of " + t.str());
    }
    const Modulus aj(tau1.bound);
    const Int c = rem_product({t.a1()}, {t.at(k)}, aj);

    TauSet out{{}, k, tau1.j, tau1.bound};
    auto in_tau = tau1.values.begin();
    for (Int mu = 1; mu < tau1.bound; ++mu) {
        if (in_tau != tau1.values.end() && *in_tau == mu) {
            ++in_tau;
            continue;
        }
        out.values.push_back(mul_mod(mu, c, aj));
    }
    std::ranges::sort(out.values);
    return out;
}

TauSet restrict_to_a3(const TauSet& tau2_s1, const CoprimeTriple& t) {
    if (tau2_s1.i != 1 || tau2_s1.j != 2) {
        throw IndexContract("restriction expects τ_2(S_1)");
    }
    TauSet out{{}, 1, 3, t.a3()};
    for (const Int x : tau2_s1.values) {
        if (x >= out.bound) {
            break;
        }
        out.values.push_back(x);
    }
    return out;
}

Int min_or_bound(const TauSet& tau) {
    return tau.values.empty() ? tau.bound : std::min(tau.values.front(), tau.bound);
}

LValues l_values(const CoprimeTriple& t) {
    const QuotientDescriptor s1 = quotient_of(t, 1);
    const Modulus m2(t.a2());
    const Modulus m3(t.a3());
    const Int c2 = rem_product({t.a1()}, {t.a2()}, m3);  // τ_3(S_1) -> τ_3(S_2)
    const Int c3 = rem_product({t.a1()}, {t.a3()}, m2);  // τ_2(S_1) -> τ_2(S_3)

    LValues l{t.a3(), t.a3(), t.a2()};
    Int l1_from_a2 = t.a2();
    for (Int mu = 1; mu < t.a2(); ++mu) {
        if (member_quotient(s1, mu)) {
            if (l1_from_a2 == t.a2()) {
                l1_from_a2 = mu;
            }
            if (mu < t.a3() && l.L1 == t.a3()) {
                l.L1 = mu;
            }
            continue;
        }
        if (mu < t.a3()) {
            l.L2 = std::min(l.L2, mul_mod(mu, c2, m3));
        }
        l.L3 = std::min(l.L3, mul_mod(mu, c3, m2));
    }
    if (l.L1 != l1_from_a2) {
        throw IdentityViolation("L1 from τ_3(S_1) is " + std::to_string(l.L1) +
                                " but from τ_2(S_1) is " + std::to_string(l1_from_a2) + " for " +
                                t.str());
    }
    return l;
}

LValues l_values_from_sets(const CoprimeTriple& t) {
    const TauSet tau2_s1 = tau_direct(t, 1, 2);
    const TauSet tau3_s1 = restrict_to_a3(tau2_s1, t);
    const Int l1 = min_or_bound(tau3_s1);
    if (l1 != min_or_bound(tau2_s1)) {
        throw IdentityViolation("L1 routes disagree for " + t.str());
    }
    return {l1, min_or_bound(tau_from_correspondence(tau3_s1, t, 2)),
            min_or_bound(tau_from_correspondence(tau2_s1, t, 3))};
}

}  // namespace numsg
