#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "numsg/quotient.hpp"
#include "numsg/triple.hpp"

namespace numsg {

enum class Branch {
    sylvester,
    main_formula,
    fg_corollary,
    johnson_crosscheck,
    reduction,
    oracle_fallback,
};

[[nodiscard]] std::string_view to_string(Branch b) noexcept;
/// Inverse of to_string; nullopt for unknown names.
[[nodiscard]] std::optional<Branch> branch_from_string(std::string_view s) noexcept;

/// Remainder coefficients of the main formula:
/// term2 = [L2 a2 a3^{-1}]_{a1} · a3 and term3 = [L3 a3 a2^{-1}]_{a1} · a2.
struct MainCoefficients {
    Int x23 = 0;
    Int x32 = 0;
    Int term2 = 0;
    Int term3 = 0;

    [[nodiscard]] bool tie() const noexcept { return term2 == term3; }
    friend bool operator==(const MainCoefficients&, const MainCoefficients&) = default;
};

/// One application of g(d·a, d·b, c) = d·g(a, b, c) + c·(d − 1).
struct ReductionStep {
    Int divisor = 0;
    Int absorbed = 0;  ///< the generator c not divided by d
    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct FrobeniusResult {
    Int value = -1;
    Branch branch = Branch::main_formula;
    std::array<Int, 3> input{};   ///< generators as given
    std::array<Int, 3> sorted{};  ///< descending
    /// permutation[r] is the input position of sorted[r].
    std::array<int, 3> permutation{0, 1, 2};
    std::optional<LValues> l_values;
    std::optional<MainCoefficients> coefficients;
    std::optional<std::vector<ReductionStep>> reduction_chain;

    [[nodiscard]] bool tie() const noexcept { return coefficients && coefficients->tie(); }
    friend bool operator==(const FrobeniusResult&, const FrobeniusResult&) = default;
};

/// Throws IdentityViolation if a main_formula result does not recompute
/// from its stored L values and coefficients, or value < -1.
void check_result(const FrobeniusResult& r);

/// ab − a − b; -1 when either is 1. Throws NotCoprime when gcd > 1.
[[nodiscard]] Int sylvester(Int a, Int b);

/// L_j a_j = x_first·a_1 + x_second·a_k for {j, k} = {2, 3}, with
/// x_first = [L_j a_j a_1^{-1}]_{a_k} and x_second = [L_j a_j a_k^{-1}]_{a_1}.
struct CoeffPair {
    Int x_first = 0;
    Int x_second = 0;
    Int identity_lhs = 0;  ///< L_j · a_j
    friend bool operator==(const CoeffPair&, const CoeffPair&) = default;
};

/// Throws IdentityViolation if the reconstruction or the bounds
/// x_first < a_k, x_second < a_1 fail.
[[nodiscard]] CoeffPair coeff_pair(const CoprimeTriple& t, const LValues& l, int j);
[[nodiscard]] CoeffPair coeff_pair(const CoprimeTriple& t, int j);

/// The main formula
///   g = L1 a1 + max([L2 a2 a3^{-1}]_{a1} a3, [L3 a3 a2^{-1}]_{a1} a2) − a1 − a2 − a3,
/// valid for L1 = 1 and L1 > 1 alike.
[[nodiscard]] FrobeniusResult frobenius_main(const CoprimeTriple& t, const LValues& l);
[[nodiscard]] FrobeniusResult frobenius_main(const CoprimeTriple& t);

/// All (x, y) >= 0 with x·p + y·q = target, ascending in x.
[[nodiscard]] std::vector<std::array<Int, 2>> decompositions(Int target, Int p, Int q);

/// Coefficients x_ij (coefficient of a_j in L_i a_i) and the three
/// evaluations of g = L_i a_i + max(x_jk a_k, x_kj a_j) − a1 − a2 − a3.
struct JohnsonWitness {
    std::array<std::array<Int, 4>, 4> x{};  ///< 1-based; diagonal unused
    std::array<Int, 3> evaluations{};       ///< for i = 1, 2, 3
};

/// Requires every L_i > 1 (HypothesisNotMet otherwise). Every decomposition
/// of L_i a_i is found by scan and must be unique (IdentityViolation); for
/// i in {2, 3} it must match coeff_pair. The three evaluations must agree
/// (AgreementFailure).
[[nodiscard]] JohnsonWitness johnson_witness(const CoprimeTriple& t, const LValues& l);
[[nodiscard]] FrobeniusResult frobenius_johnson_crosscheck(const CoprimeTriple& t,
                                                           const LValues& l);

struct FgOptions {
    /// Also check L values, both L1 = 2 identities, and agreement
    /// with the main formula.
    bool verify = false;
};

/// Closed form when a1 is a fundamental gap of <a2, a3>:
///   g = max([a1 a2^{-1}]_{a3} a2, [a1 a3^{-1}]_{a2} a3) − a2 − a3.
/// Throws HypothesisNotMet otherwise.
[[nodiscard]] FrobeniusResult frobenius_fg(const CoprimeTriple& t, FgOptions opts = {});

/// Throws IdentityViolation unless, for (j,k) in {(2,3),(3,2)},
/// [L_j a_j a_1^{-1}]_{a_k} = 1 and [L_j a_j a_k^{-1}]_{a_1} a_k = L_j a_j − a_1.
/// Requires L1 = 2 (HypothesisNotMet otherwise).
void check_l1_two_identities(const CoprimeTriple& t, const LValues& l);

enum class Method { automatic, main, johnson, fg, oracle };

struct DispatchOptions {
    Method method = Method::automatic;
    /// Cross-check every formula value against the brute-force oracle
    /// (AgreementFailure on mismatch).
    bool verify = false;
};

/// Any three positive generators with gcd 1. Sorts, deduplicates, handles
/// unit generators, reduces shared factors pairwise, then applies the
/// selected formula. Throws InvalidGenerators on zero/negative input or
/// gcd != 1.
[[nodiscard]] FrobeniusResult frobenius(std::array<Int, 3> gens, DispatchOptions opts = {});

/// Side-by-side of the product reduction g = d12·d23·d31·g(b1, b2, b3)
/// with the iterated rule and (when cheap) the oracle.
struct PaperReductionAudit {
    std::array<Int, 3> sorted{};
    Int d12 = 1;
    Int d23 = 1;
    Int d31 = 1;
    std::array<Int, 3> b{};
    Int paper_value = 0;
    Int iterated_value = 0;
    std::optional<Int> oracle_value;

    /// Product-form value differs from the oracle (or the iterated value when the
    /// oracle was skipped).
    [[nodiscard]] bool discrepancy() const noexcept {
        return paper_value != oracle_value.value_or(iterated_value);
    }
};

/// Oracle is run only when the iterated value is at most oracle_limit.
[[nodiscard]] PaperReductionAudit paper_reduction_audit(std::array<Int, 3> gens,
                                                        Int oracle_limit = 50'000'000);

}  // namespace numsg
