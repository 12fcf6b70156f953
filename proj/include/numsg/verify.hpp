#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/modular.hpp"

namespace numsg::verify {

enum class Property {
    membership,       ///< closed-form two-generator and quotient membership vs DP
    gaps,             ///< gap / fundamental-gap enumeration of <a, b>
    tau_direct,       ///< scanned τ sets vs oracle
    correspondence,   ///< τ_j(S_k) from τ_j(S_1), cardinality, restriction
    l_values,         ///< streamed and set-based L values vs oracle, bounds
    main_formula,     ///< main formula vs oracle
    coeff_identity,   ///< L_j a_j = x_first a_1 + x_second a_k
    johnson,          ///< three-index form agrees with main formula
    fg_identities,         ///< L1 = 2 identities and the fundamental-gap formula
    l1_branch,        ///< L1 = 1 collapses to Sylvester
    reduction,        ///< dispatcher on non-pairwise-coprime triples vs oracle
    paper_reduction,  ///< product reduction audit; expected to fail
};

[[nodiscard]] std::string_view to_string(Property p) noexcept;
[[nodiscard]] std::optional<Property> property_from_string(std::string_view s) noexcept;
[[nodiscard]] const std::vector<Property>& all_properties();
/// Everything except reduction and paper_reduction.
[[nodiscard]] std::vector<Property> default_properties();

struct SweepConfig {
    Int max_a1 = 30;
    /// Coprime pairs b < a <= pair_max for membership and gaps.
    Int pair_max = 30;
    /// Upper bound on the largest generator of reduction triples.
    Int reduction_max = 30;
    std::vector<Property> properties = default_properties();
    unsigned jobs = 1;
    /// Reserved for sampled modes; exhaustive sweeps ignore it.
    std::uint64_t seed = 0;
};

struct Failure {
    Property property{};
    std::array<Int, 3> subject{};  ///< triple, or (a, b, x) for pair checks
    std::string detail;
    std::optional<Int> formula_value;
    std::optional<Int> oracle_value;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct SweepReport {
    SweepConfig config;
    Int triples = 0;
    Int pairs = 0;
    Int reduction_triples = 0;
    std::map<Property, Int> checks;
    std::vector<Failure> failures;
    double seconds = 0.0;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
    [[nodiscard]] Int failure_count(Property p) const;
};

/// All pairwise-coprime a1 > a2 > a3 > 1 with a1 <= max_a1, ordered by
/// (a1, a2, a3) ascending.
[[nodiscard]] std::vector<std::array<Int, 3>> coprime_triples(Int max_a1);

/// Descending a >= b >= c >= 1, a <= max, overall gcd 1, some pairwise gcd > 1.
[[nodiscard]] std::vector<std::array<Int, 3>> reduction_triples(Int max);

/// Deterministic for fixed config, including across `jobs` values.
[[nodiscard]] SweepReport run_sweep(const SweepConfig& config);

/// Human-readable report; `with_timing` appends the wall-clock line.
[[nodiscard]] std::string format_text(const SweepReport& r, bool with_timing = false);
[[nodiscard]] std::string format_json(const SweepReport& r, bool with_timing = false);

}  // namespace numsg::verify
