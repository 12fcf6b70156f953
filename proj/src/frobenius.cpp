#include "numsg/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

namespace {

constexpr std::array<std::pair<Branch, std::string_view>, 6> kBranchNames{{
    {Branch::sylvester, "sylvester"},
    {Branch::main_formula, "main_formula"},
    {Branch::fg_corollary, "fg_corollary"},
    {Branch::johnson_crosscheck, "johnson_crosscheck"},
    {Branch::reduction, "reduction"},
    {Branch::oracle_fallback, "oracle_fallback"},
}};

std::string num(Int v) { return std::to_string(v); }

}  // namespace

std::string_view to_string(Branch b) noexcept {
    for (const auto& [br, name] : kBranchNames) {
        if (br == b) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Branch> branch_from_string(std::string_view s) noexcept {
    for (const auto& [br, name] : kBranchNames) {
        if (name == s) {
            return br;
        }
    }
    return std::nullopt;
}

Int sylvester(Int a, Int b) {
    if (a < 1 || b < 1) {
        throw InvalidGenerators("generators must be positive");
    }
    if (const Int d = gcd(a, b); d != 1) {
        throw NotCoprime("gcd(" + num(a) + ", " + num(b) + ") is " + num(d));
    }
    if (a == 1 || b == 1) {
        return -1;
    }
    return checked_sub(checked_mul(a, b), checked_add(a, b));
}

CoeffPair coeff_pair(const CoprimeTriple& t, const LValues& l, int j) {
    if (j != 2 && j != 3) {
        throw IndexContract("coefficient identity needs j in {2,3}, got " + std::to_string(j));
    }
    const int k = 5 - j;
    const Int lj = l.at(j);
    const Int aj = t.at(j);
    const Int ak = t.at(k);
    CoeffPair p;
    p.identity_lhs = checked_mul(lj, aj);
    p.x_first = rem_product({lj, aj}, {t.a1()}, Modulus(ak));
    p.x_second = rem_product({lj, aj}, {ak}, Modulus(t.a1()));
    const Int rhs = checked_add(checked_mul(p.x_first, t.a1()), checked_mul(p.x_second, ak));
    if (rhs != p.identity_lhs || p.x_first >= ak || p.x_second >= t.a1()) {
        throw IdentityViolation("L_" + std::to_string(j) + "·a_" + std::to_string(j) + " = " +
                                num(p.identity_lhs) + " but " + num(p.x_first) + "·" +
                                num(t.a1()) + " + " + num(p.x_second) + "·" + num(ak) + " = " +
                                num(rhs) + " for " + t.str());
    }
    return p;
}

CoeffPair coeff_pair(const CoprimeTriple& t, int j) { return coeff_pair(t, l_values(t), j); }

void check_result(const FrobeniusResult& r) {
    if (r.value < -1) {
        throw IdentityViolation("Frobenius value " + num(r.value) + " is below -1");
    }
    if (r.branch != Branch::main_formula) {
        return;
    }
    if (!r.l_values || !r.coefficients) {
        throw IdentityViolation("main_formula result lacks its witnesses");
    }
    const auto& [a1, a2, a3] = r.sorted;
    const auto& c = *r.coefficients;
    const Int recomputed = checked_sub(
        checked_add(checked_mul(r.l_values->L1, a1), std::max(c.term2, c.term3)),
        checked_add(checked_add(a1, a2), a3));
    if (recomputed != r.value || c.term2 != checked_mul(c.x23, a3) ||
        c.term3 != checked_mul(c.x32, a2)) {
        throw IdentityViolation("main_formula witnesses recompute to " + num(recomputed) +
                                ", stored value " + num(r.value));
    }
}

FrobeniusResult frobenius_main(const CoprimeTriple& t, const LValues& l) {
    const Modulus m1(t.a1());
    MainCoefficients c;
    c.x23 = rem_product({l.L2, t.a2()}, {t.a3()}, m1);
    c.x32 = rem_product({l.L3, t.a3()}, {t.a2()}, m1);
    c.term2 = checked_mul(c.x23, t.a3());
    c.term3 = checked_mul(c.x32, t.a2());

    FrobeniusResult r;
    r.value = checked_sub(checked_add(checked_mul(l.L1, t.a1()), std::max(c.term2, c.term3)),
                          t.sum());
    r.branch = Branch::main_formula;
    r.input = r.sorted = {t.a1(), t.a2(), t.a3()};
    r.l_values = l;
    r.coefficients = c;
    return r;
}

FrobeniusResult frobenius_main(const CoprimeTriple& t) { return frobenius_main(t, l_values(t)); }

std::vector<std::array<Int, 2>> decompositions(Int target, Int p, Int q) {
    std::vector<std::array<Int, 2>> out;
    for (Int x = 0; x * p <= target; ++x) {
        const Int rest = target - x * p;
        if (rest % q == 0) {
            out.push_back({x, rest / q});
        }
    }
    return out;
}

JohnsonWitness johnson_witness(const CoprimeTriple& t, const LValues& l) {
    for (int i = 1; i <= 3; ++i) {
        if (l.at(i) <= 1) {
            throw HypothesisNotMet("Johnson's form needs every L_i > 1, but L_" +
                                   std::to_string(i) + " = " + num(l.at(i)) + " for " + t.str());
        }
    }
    JohnsonWitness w;
    for (int i = 1; i <= 3; ++i) {
        const auto [j, k] = CoprimeTriple::others(i);
        const Int target = checked_mul(l.at(i), t.at(i));
        const auto sols = decompositions(target, t.at(j), t.at(k));
        if (sols.size() != 1) {
            throw IdentityViolation("L_" + std::to_string(i) + "·a_" + std::to_string(i) +
                                    " = " + num(target) + " has " + std::to_string(sols.size()) +
                                    " decompositions for " + t.str());
        }
        w.x[i][j] = sols.front()[0];
        w.x[i][k] = sols.front()[1];
        if (i != 1) {
            const CoeffPair cp = coeff_pair(t, l, i);
            if (cp.x_first != w.x[i][1] || cp.x_second != w.x[i][5 - i]) {
                throw IdentityViolation("scanned decomposition of L_" + std::to_string(i) +
                                        "·a_" + std::to_string(i) +
                                        " differs from the remainder coefficients for " +
                                        t.str());
            }
        }
    }
    for (int i = 1; i <= 3; ++i) {
        const auto [j, k] = CoprimeTriple::others(i);
        const Int m = std::max(checked_mul(w.x[j][k], t.at(k)), checked_mul(w.x[k][j], t.at(j)));
        w.evaluations[i - 1] = checked_sub(checked_add(checked_mul(l.at(i), t.at(i)), m), t.sum());
    }
    if (w.evaluations[0] != w.evaluations[1] || w.evaluations[0] != w.evaluations[2]) {
        throw AgreementFailure("Johnson evaluations " + num(w.evaluations[0]) + ", " +
                               num(w.evaluations[1]) + ", " + num(w.evaluations[2]) +
                               " disagree for " + t.str());
    }
    return w;
}

FrobeniusResult frobenius_johnson_crosscheck(const CoprimeTriple& t, const LValues& l) {
    const JohnsonWitness w = johnson_witness(t, l);
    FrobeniusResult r;
    r.value = w.evaluations[0];
    r.branch = Branch::johnson_crosscheck;
    r.input = r.sorted = {t.a1(), t.a2(), t.a3()};
    r.l_values = l;
    MainCoefficients c;
    c.x23 = w.x[2][3];
    c.x32 = w.x[3][2];
    c.term2 = checked_mul(c.x23, t.a3());
    c.term3 = checked_mul(c.x32, t.a2());
    r.coefficients = c;
    return r;
}

void check_l1_two_identities(const CoprimeTriple& t, const LValues& l) {
    if (l.L1 != 2) {
        throw HypothesisNotMet("identities need L1 = 2, got " + num(l.L1) + " for " + t.str());
    }
    for (const int j : {2, 3}) {
        const int k = 5 - j;
        const Int lj = l.at(j);
        const Int aj = t.at(j);
        const Int ak = t.at(k);
        const Int first = rem_product({lj, aj}, {t.a1()}, Modulus(ak));
        const Int second = checked_mul(rem_product({lj, aj}, {ak}, Modulus(t.a1())), ak);
        if (first != 1) {
            throw IdentityViolation("[L_" + std::to_string(j) + " a_" + std::to_string(j) +
                                    " a_1^{-1}]_{a_" + std::to_string(k) + "} = " + num(first) +
                                    ", expected 1, for " + t.str());
        }
        if (second != checked_sub(checked_mul(lj, aj), t.a1())) {
            throw IdentityViolation("complementary term " + num(second) + " != L_" +
                                    std::to_string(j) + " a_" + std::to_string(j) +
                                    " - a_1 for " + t.str());
        }
    }
}

FrobeniusResult frobenius_fg(const CoprimeTriple& t, FgOptions opts) {
    if (!is_fundamental_gap(TwoGenSemigroup(t.a2(), t.a3()), t.a1())) {
        throw HypothesisNotMet(num(t.a1()) + " is not a fundamental gap of <" + num(t.a2()) +
                               "," + num(t.a3()) + ">");
    }
    const Int l2 = rem_product({t.a1()}, {t.a2()}, Modulus(t.a3()));
    const Int l3 = rem_product({t.a1()}, {t.a3()}, Modulus(t.a2()));
    const Int term_a = checked_mul(l2, t.a2());
    const Int term_b = checked_mul(l3, t.a3());

    FrobeniusResult r;
    r.value = checked_sub(std::max(term_a, term_b), checked_add(t.a2(), t.a3()));
    r.branch = Branch::fg_corollary;
    r.input = r.sorted = {t.a1(), t.a2(), t.a3()};
    r.l_values = LValues{2, l2, l3};

    if (opts.verify) {
        const LValues l = l_values(t);
        if (l != *r.l_values) {
            throw IdentityViolation("fundamental-gap L values (2," + num(l2) + "," + num(l3) +
                                    ") differ from computed (" + num(l.L1) + "," + num(l.L2) +
                                    "," + num(l.L3) + ") for " + t.str());
        }
        check_l1_two_identities(t, l);
        if (const Int main = frobenius_main(t, l).value; main != r.value) {
            throw AgreementFailure("fundamental-gap value " + num(r.value) +
                                   " differs from main formula " + num(main) + " for " + t.str());
        }
    }
    return r;
}

namespace {

struct Partial {
    Int value = -1;
    Branch branch = Branch::sylvester;
    std::optional<LValues> l;
    std::optional<MainCoefficients> c;
};

Partial on_coprime_triple(const CoprimeTriple& t, const DispatchOptions& opts) {
    FrobeniusResult r;
    switch (opts.method) {
        case Method::automatic:
        case Method::main:
            r = frobenius_main(t);
            break;
        case Method::johnson:
            r = frobenius_johnson_crosscheck(t, l_values(t));
            break;
        case Method::fg:
            r = frobenius_fg(t, {opts.verify});
            break;
        case Method::oracle:
            return {oracle::frobenius_oracle(oracle::GeneratorSet({t.a1(), t.a2(), t.a3()})),
                    Branch::oracle_fallback, std::nullopt, std::nullopt};
    }
    return {r.value, r.branch, r.l_values, r.coefficients};
}

// gens: distinct, descending, overall gcd 1.
Partial dispatch_distinct(std::vector<Int> gens, const DispatchOptions& opts,
                          std::vector<ReductionStep>& chain) {
    if (gens.back() == 1) {
        return {-1, Branch::sylvester, std::nullopt, std::nullopt};
    }
    if (gens.size() == 2) {
        return {sylvester(gens[0], gens[1]), Branch::sylvester, std::nullopt, std::nullopt};
    }
    for (std::size_t p = 0; p < 3; ++p) {
        for (std::size_t q = p + 1; q < 3; ++q) {
            const Int d = gcd(gens[p], gens[q]);
            if (d == 1) {
                continue;
            }
            const Int c = gens[3 - p - q];
            chain.push_back({d, c});
            std::vector<Int> next{gens[p] / d, gens[q] / d, c};
            std::ranges::sort(next, std::greater<>());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            const Partial inner = dispatch_distinct(std::move(next), opts, chain);
            return {checked_add(checked_mul(d, inner.value), checked_mul(c, d - 1)),
                    Branch::reduction, std::nullopt, std::nullopt};
        }
    }
    return on_coprime_triple(CoprimeTriple(gens[0], gens[1], gens[2]), opts);
}

}  // namespace

FrobeniusResult frobenius(std::array<Int, 3> gens, DispatchOptions opts) {
    for (const Int g : gens) {
        if (g < 1) {
            throw InvalidGenerators("generators must be positive, got " + num(g));
        }
    }
    if (const Int d = std::gcd(std::gcd(gens[0], gens[1]), gens[2]); d != 1) {
        throw InvalidGenerators("gcd is " + num(d));
    }
    FrobeniusResult r;
    r.input = gens;
    std::ranges::stable_sort(r.permutation, std::greater<>(),
                             [&](int p) { return gens[static_cast<std::size_t>(p)]; });
    for (std::size_t s = 0; s < 3; ++s) {
        r.sorted[s] = gens[static_cast<std::size_t>(r.permutation[s])];
    }

    Partial p;
    std::vector<ReductionStep> chain;
    if (opts.method == Method::oracle) {
        p = {oracle::frobenius_oracle(oracle::GeneratorSet({gens.begin(), gens.end()})),
             Branch::oracle_fallback, std::nullopt, std::nullopt};
    } else {
        std::vector<Int> distinct(r.sorted.begin(), r.sorted.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        p = dispatch_distinct(std::move(distinct), opts, chain);
    }
    r.value = p.value;
    r.branch = p.branch;
    r.l_values = p.l;
    r.coefficients = p.c;
    if (!chain.empty()) {
        r.reduction_chain = std::move(chain);
    }

    if (opts.verify) {
        check_result(r);
        const Int truth =
            oracle::frobenius_oracle(oracle::GeneratorSet({gens.begin(), gens.end()}));
        if (truth != r.value) {
            throw AgreementFailure(std::string(to_string(r.branch)) + " gives " + num(r.value) +
                                   " but the oracle gives " + num(truth));
        }
    }
    return r;
}

PaperReductionAudit paper_reduction_audit(std::array<Int, 3> gens, Int oracle_limit) {
    const FrobeniusResult iterated = frobenius(gens);
    PaperReductionAudit a;
    a.sorted = iterated.sorted;
    const auto& [a1, a2, a3] = a.sorted;
    a.d12 = gcd(a1, a2);
    a.d23 = gcd(a2, a3);
    a.d31 = gcd(a3, a1);
    a.b = {a1 / (a.d12 * a.d31), a2 / (a.d12 * a.d23), a3 / (a.d23 * a.d31)};
    a.paper_value = checked_mul(checked_mul(checked_mul(a.d12, a.d23), a.d31),
                                frobenius(a.b).value);
    a.iterated_value = iterated.value;
    if (a.iterated_value <= oracle_limit) {
        a.oracle_value = oracle::frobenius_oracle(oracle::GeneratorSet({a1, a2, a3}));
    }
    return a;
}

}  // namespace numsg
