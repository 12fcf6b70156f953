#include "numsg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "numsg/frobenius.hpp"
#include "numsg/oracle.hpp"
#include "numsg/quotient.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::verify {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 12> kNames{{
    {Property::membership, "membership"},
    {Property::gaps, "gaps"},
    {Property::tau_direct, "tau-direct"},
    {Property::correspondence, "correspondence"},
    {Property::l_values, "l-values"},
    {Property::main_formula, "main-formula"},
    {Property::coeff_identity, "coeff-identity"},
    {Property::johnson, "johnson"},
    {Property::fg_identities, "fg-identities"},
    {Property::l1_branch, "l1-branch"},
    {Property::reduction, "reduction"},
    {Property::paper_reduction, "paper-reduction"},
}};

std::string join(const std::vector<Int>& v) {
    std::string s;
    for (const Int x : v) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(x);
    }
    return "{" + s + "}";
}

/// Results of one work item; merged in item order.
struct Partial {
    std::map<Property, Int> checks;
    std::vector<Failure> failures;

    void merge(Partial&& o) {
        for (const auto& [p, n] : o.checks) {
            checks[p] += n;
        }
        std::ranges::move(o.failures, std::back_inserter(failures));
    }
};

class Checker {
public:
    Checker(const std::vector<Property>& props, std::array<Int, 3> subject, Partial& out)
        : props_(props), subject_(subject), out_(out) {}

    [[nodiscard]] bool wants(Property p) const {
        return std::ranges::find(props_, p) != props_.end();
    }

    /// Counts one check; records a failure when !ok.
    void expect(Property p, bool ok, const std::string& detail,
                std::optional<Int> formula = std::nullopt,
                std::optional<Int> truth = std::nullopt) {
        ++out_.checks[p];
        if (!ok) {
            out_.failures.push_back({p, subject_, detail, formula, truth});
        }
    }

    /// Runs body; an exception counts as a failed check of p.
    template <typename F>
    void guarded(Property p, F&& body) {
        if (!wants(p)) {
            return;
        }
        try {
            body();
        } catch (const std::exception& e) {
            expect(p, false, e.what());
        }
    }

private:
    const std::vector<Property>& props_;
    std::array<Int, 3> subject_;
    Partial& out_;
};

void check_triple(const std::array<Int, 3>& g, const std::vector<Property>& props, Partial& out) {
    const CoprimeTriple t(g[0], g[1], g[2]);
    const std::string ts = t.str();
    Checker c(props, g, out);

    // Oracle quantities shared across properties.
    const Int truth = oracle::frobenius_oracle(oracle::GeneratorSet({g[0], g[1], g[2]}));
    const LValues lo{oracle::L_oracle(t, 1), oracle::L_oracle(t, 2), oracle::L_oracle(t, 3)};

    c.guarded(Property::membership, [&] {
        for (int i = 1; i <= 3; ++i) {
            const QuotientDescriptor q = quotient_of(t, i);
            const auto o = CoprimeTriple::others(i);
            const oracle::ReachTable table(oracle::GeneratorSet({t.at(o[0]), t.at(o[1])}),
                                           t.at(i) * t.a1());
            bool ok = true;
            Int bad = -1;
            for (Int x = 0; x <= t.a1() && ok; ++x) {
                if (member_quotient(q, x) != table[x * t.at(i)]) {
                    ok = false;
                    bad = x;
                }
            }
            c.expect(Property::membership, ok,
                     "quotient S_" + std::to_string(i) + " membership of " + std::to_string(bad) +
                         " disagrees with oracle for " + ts);
        }
    });

    c.guarded(Property::tau_direct, [&] {
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                if (i == j) {
                    continue;
                }
                const auto direct = tau_direct(t, i, j).values;
                const auto truth_tau = oracle::tau_oracle(t, i, j);
                c.expect(Property::tau_direct, direct == truth_tau,
                         "τ_" + std::to_string(j) + "(S_" + std::to_string(i) + ") scan " +
                             join(direct) + " vs oracle " + join(truth_tau) + " for " + ts);
            }
        }
    });

    c.guarded(Property::correspondence, [&] {
        const TauSet tau2_s1 = tau_direct(t, 1, 2);
        const TauSet tau3_s1 = restrict_to_a3(tau2_s1, t);
        c.expect(Property::correspondence, tau3_s1 == tau_direct(t, 1, 3),
                 "τ_3(S_1) is not τ_2(S_1) ∩ (0, a3) for " + ts);
        for (const int j : {2, 3}) {
            const int k = 5 - j;
            const TauSet& base = j == 2 ? tau2_s1 : tau3_s1;
            const TauSet derived = tau_from_correspondence(base, t, k);
            const TauSet direct = tau_direct(t, k, j);
            c.expect(Property::correspondence, derived == direct,
                     "τ_" + std::to_string(j) + "(S_" + std::to_string(k) + ") correspondence " +
                         join(derived.values) + " vs scan " + join(direct.values) + " for " + ts);
            const auto expected_size = t.at(j) - 1 - static_cast<Int>(base.values.size());
            c.expect(Property::correspondence,
                     static_cast<Int>(direct.values.size()) == expected_size,
                     "|τ_" + std::to_string(j) + "(S_" + std::to_string(k) + ")| = " +
                         std::to_string(direct.values.size()) + ", expected " +
                         std::to_string(expected_size) + " for " + ts,
                     static_cast<Int>(direct.values.size()), expected_size);
        }
    });

    c.guarded(Property::l_values, [&] {
        const LValues streamed = l_values(t);
        const LValues sets = l_values_from_sets(t);
        for (int i = 1; i <= 3; ++i) {
            c.expect(Property::l_values,
                     streamed.at(i) == lo.at(i) && sets.at(i) == lo.at(i),
                     "L_" + std::to_string(i) + " streamed " + std::to_string(streamed.at(i)) +
                         ", from sets " + std::to_string(sets.at(i)) + ", oracle " +
                         std::to_string(lo.at(i)) + " for " + ts,
                     streamed.at(i), lo.at(i));
            const auto o = CoprimeTriple::others(i);
            c.expect(Property::l_values,
                     1 <= streamed.at(i) && streamed.at(i) <= std::min(t.at(o[0]), t.at(o[1])),
                     "L_" + std::to_string(i) + " out of bounds for " + ts);
        }
        c.expect(Property::l_values, streamed.L1 == 1 || (streamed.L2 > 1 && streamed.L3 > 1),
                 "L1 > 1 but some other L is 1 for " + ts);
    });

    c.guarded(Property::main_formula, [&] {
        const FrobeniusResult r = frobenius_main(t);
        check_result(r);
        c.expect(Property::main_formula, r.value == truth,
                 "main formula " + std::to_string(r.value) + " vs oracle " +
                     std::to_string(truth) + " for " + ts,
                 r.value, truth);
    });

    c.guarded(Property::coeff_identity, [&] {
        for (const int j : {2, 3}) {
            const CoeffPair p = coeff_pair(t, lo, j);
            c.expect(Property::coeff_identity,
                     p.x_first * t.a1() + p.x_second * t.at(5 - j) == lo.at(j) * t.at(j),
                     "coefficient identity for j=" + std::to_string(j) + " on " + ts);
        }
    });

    c.guarded(Property::johnson, [&] {
        if (lo.L1 > 1 && lo.L2 > 1 && lo.L3 > 1) {
            const JohnsonWitness w = johnson_witness(t, lo);
            const Int main = frobenius_main(t, lo).value;
            for (int i = 0; i < 3; ++i) {
                c.expect(Property::johnson, w.evaluations[static_cast<std::size_t>(i)] == main,
                         "Johnson form with i=" + std::to_string(i + 1) + " gives " +
                             std::to_string(w.evaluations[static_cast<std::size_t>(i)]) +
                             ", main formula " + std::to_string(main) + " for " + ts,
                         w.evaluations[static_cast<std::size_t>(i)], main);
            }
        }
    });

    c.guarded(Property::fg_identities, [&] {
        if (lo.L1 == 2) {
            check_l1_two_identities(t, lo);
            c.expect(Property::fg_identities, true, "");
        }
        if (is_fundamental_gap(TwoGenSemigroup(t.a2(), t.a3()), t.a1())) {
            const FrobeniusResult r = frobenius_fg(t, {.verify = true});
            c.expect(Property::fg_identities, r.value == truth,
                     "fundamental-gap formula " + std::to_string(r.value) + " vs oracle " +
                         std::to_string(truth) + " for " + ts,
                     r.value, truth);
            c.expect(Property::fg_identities,
                     lo.L2 == rem_product({t.a1()}, {t.a2()}, Modulus(t.a3())) &&
                         lo.L3 == rem_product({t.a1()}, {t.a3()}, Modulus(t.a2())),
                     "fundamental-gap L2/L3 closed forms disagree with oracle for " + ts);
        }
    });

    c.guarded(Property::l1_branch, [&] {
        if (lo.L1 == 1) {
            const Int main = frobenius_main(t, lo).value;
            const Int syl = sylvester(t.a2(), t.a3());
            c.expect(Property::l1_branch, main == syl,
                     "L1 = 1 but main formula " + std::to_string(main) + " != sylvester " +
                         std::to_string(syl) + " for " + ts,
                     main, syl);
            c.expect(Property::l1_branch, lo.L2 == t.a3() && lo.L3 == t.a2(),
                     "L1 = 1 but (L2, L3) = (" + std::to_string(lo.L2) + ", " +
                         std::to_string(lo.L3) + ") for " + ts);
        }
    });
}

void check_pair(Int a, Int b, const std::vector<Property>& props, Partial& out) {
    const TwoGenSemigroup s(a, b);
    const oracle::ReachTable table(oracle::GeneratorSet({a, b}), 3 * a * b);
    Checker c(props, {a, b, 0}, out);
    const std::string ps = "<" + std::to_string(a) + "," + std::to_string(b) + ">";

    c.guarded(Property::membership, [&] {
        Int bad = -1;
        for (Int x = 0; x <= a * b && bad < 0; ++x) {
            const bool l = member_two_gen(s, x, ModulusChoice::larger);
            const bool r = member_two_gen(s, x, ModulusChoice::smaller);
            if (l != table[x] || r != table[x]) {
                bad = x;
            }
        }
        c.expect(Property::membership, bad < 0,
                 "membership of " + std::to_string(bad) + " in " + ps + " disagrees with oracle");
    });

    c.guarded(Property::gaps, [&] {
        const auto gaps = gaps_two_gen(s);
        std::vector<Int> truth_gaps;
        for (Int x = 1; x <= a * b; ++x) {
            if (!table[x]) {
                truth_gaps.push_back(x);
            }
        }
        c.expect(Property::gaps, gaps == truth_gaps, "gaps of " + ps + " disagree with oracle");
        c.expect(Property::gaps, !gaps.empty() && gaps.back() == s.frobenius(),
                 "largest gap of " + ps + " is not the Sylvester value",
                 gaps.empty() ? std::nullopt : std::optional<Int>(gaps.back()), s.frobenius());
        // b consecutive members past the bound cover every larger value.
        bool above = true;
        for (Int x = s.frobenius() + 1; above && x <= s.frobenius() + b; ++x) {
            above = table[x] && member_two_gen(s, x);
        }
        c.expect(Property::gaps, above, "a value above the Sylvester bound of " + ps +
                                            " is not a member");
        const auto fg = fundamental_gaps(s);
        bool ok = std::ranges::includes(gaps, fg);
        // Past a·b everything is a member, so multiples beyond it are free.
        for (const Int x : fg) {
            for (Int k = 2; ok && k * x <= a * b; ++k) {
                ok = table[k * x];
            }
        }
        for (const Int x : gaps) {
            const bool is_fg = table[2 * x] && table[3 * x];
            ok = ok && (is_fg == std::ranges::binary_search(fg, x)) &&
                 is_fg == is_fundamental_gap(s, x);
        }
        c.expect(Property::gaps, ok, "fundamental gaps of " + ps + " " + join(fg) + " are wrong");
    });
}

void check_reduction(const std::array<Int, 3>& g, const std::vector<Property>& props,
                     Partial& out) {
    Checker c(props, g, out);
    const Int truth = oracle::frobenius_oracle(oracle::GeneratorSet({g[0], g[1], g[2]}));
    const std::string ts =
        "(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
    c.guarded(Property::reduction, [&] {
        const Int v = frobenius(g).value;
        c.expect(Property::reduction, v == truth,
                 "dispatcher " + std::to_string(v) + " vs oracle " + std::to_string(truth) +
                     " for " + ts,
                 v, truth);
    });
    c.guarded(Property::paper_reduction, [&] {
        const PaperReductionAudit a = paper_reduction_audit(g);
        c.expect(Property::paper_reduction, a.paper_value == truth,
                 "product reduction d12·d23·d31·g(" + std::to_string(a.b[0]) + "," +
                     std::to_string(a.b[1]) + "," + std::to_string(a.b[2]) + ") = " +
                     std::to_string(a.paper_value) + " vs oracle " + std::to_string(truth) +
                     " for " + ts,
                 a.paper_value, truth);
    });
}

}  // namespace

std::string_view to_string(Property p) noexcept {
    for (const auto& [q, name] : kNames) {
        if (q == p) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Property> property_from_string(std::string_view s) noexcept {
    for (const auto& [q, name] : kNames) {
        if (name == s) {
            return q;
        }
    }
    return std::nullopt;
}

const std::vector<Property>& all_properties() {
    static const std::vector<Property> all = [] {
        std::vector<Property> v;
        for (const auto& [p, name] : kNames) {
            v.push_back(p);
        }
        return v;
    }();
    return all;
}

std::vector<Property> default_properties() {
    std::vector<Property> v;
    for (const auto& [p, name] : kNames) {
        if (p != Property::reduction && p != Property::paper_reduction) {
            v.push_back(p);
        }
    }
    return v;
}

Int SweepReport::failure_count(Property p) const {
    return static_cast<Int>(
        std::ranges::count_if(failures, [p](const Failure& f) { return f.property == p; }));
}

std::vector<std::array<Int, 3>> coprime_triples(Int max_a1) {
    std::vector<std::array<Int, 3>> out;
    for (Int a1 = 4; a1 <= max_a1; ++a1) {
        for (Int a2 = 3; a2 < a1; ++a2) {
            for (Int a3 = 2; a3 < a2; ++a3) {
                if (CoprimeTriple::valid(a1, a2, a3)) {
                    out.push_back({a1, a2, a3});
                }
            }
        }
    }
    return out;
}

std::vector<std::array<Int, 3>> reduction_triples(Int max) {
    std::vector<std::array<Int, 3>> out;
    for (Int a = 1; a <= max; ++a) {
        for (Int b = 1; b <= a; ++b) {
            for (Int c = 1; c <= b; ++c) {
                if (std::gcd(std::gcd(a, b), c) != 1) {
                    continue;
                }
                if (std::gcd(a, b) > 1 || std::gcd(a, c) > 1 || std::gcd(b, c) > 1) {
                    out.push_back({a, b, c});
                }
            }
        }
    }
    return out;
}

SweepReport run_sweep(const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const auto& props = config.properties;
    const auto wants = [&](Property p) { return std::ranges::find(props, p) != props.end(); };

    // Work items in a fixed order: pairs, triples, reduction triples.
    struct Item {
        enum class Kind { pair, triple, reduction } kind;
        std::array<Int, 3> g;
    };
    std::vector<Item> items;
    SweepReport report;
    report.config = config;

    if (wants(Property::membership) || wants(Property::gaps)) {
        for (Int a = 3; a <= config.pair_max; ++a) {
            for (Int b = 2; b < a; ++b) {
                if (std::gcd(a, b) == 1) {
                    items.push_back({Item::Kind::pair, {a, b, 0}});
                    ++report.pairs;
                }
            }
        }
    }
    const bool triple_props = std::ranges::any_of(props, [](Property p) {
        return p != Property::reduction && p != Property::paper_reduction && p != Property::gaps;
    });
    if (triple_props) {
        for (const auto& g : coprime_triples(config.max_a1)) {
            items.push_back({Item::Kind::triple, g});
            ++report.triples;
        }
    }
    if (wants(Property::reduction) || wants(Property::paper_reduction)) {
        for (const auto& g : reduction_triples(std::min(config.max_a1, config.reduction_max))) {
            items.push_back({Item::Kind::reduction, g});
            ++report.reduction_triples;
        }
    }

    const auto run_range = [&](std::size_t lo, std::size_t hi) {
        Partial part;
        for (std::size_t n = lo; n < hi; ++n) {
            const Item& it = items[n];
            switch (it.kind) {
                case Item::Kind::pair: check_pair(it.g[0], it.g[1], props, part); break;
                case Item::Kind::triple: check_triple(it.g, props, part); break;
                case Item::Kind::reduction: check_reduction(it.g, props, part); break;
            }
        }
        return part;
    };

    const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
    const std::size_t chunk = (items.size() + jobs - 1) / jobs;
    std::vector<std::future<Partial>> futures;
    for (std::size_t lo = 0; lo < items.size(); lo += chunk) {
        const std::size_t hi = std::min(items.size(), lo + chunk);
        futures.push_back(jobs == 1 ? std::async(std::launch::deferred, run_range, lo, hi)
                                    : std::async(std::launch::async, run_range, lo, hi));
    }
    Partial merged;
    for (auto& f : futures) {
        merged.merge(f.get());
    }
    for (const Property p : props) {
        report.checks[p] += merged.checks[p];
    }
    report.failures = std::move(merged.failures);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string format_text(const SweepReport& r, bool with_timing) {
    std::ostringstream os;
    os << "verify: max-a1=" << r.config.max_a1 << " pair-max=" << r.config.pair_max
       << " reduction-max=" << std::min(r.config.max_a1, r.config.reduction_max) << '\n';
    os << "triples: " << r.triples << '\n';
    os << "pairs: " << r.pairs << '\n';
    os << "reduction-triples: " << r.reduction_triples << '\n';
    for (const auto& [p, n] : r.checks) {
        os << "property " << to_string(p) << ": " << n << " checks, " << r.failure_count(p)
           << " failures\n";
    }
    for (const Failure& f : r.failures) {
        os << "FAIL " << to_string(f.property) << " (" << f.subject[0] << "," << f.subject[1]
           << "," << f.subject[2] << "): " << f.detail << '\n';
    }
    os << "failures: " << r.failures.size() << '\n';
    if (with_timing) {
        os << "seconds: " << r.seconds << '\n';
    }
    return os.str();
}

std::string format_json(const SweepReport& r, bool with_timing) {
    nlohmann::ordered_json j;
    j["max_a1"] = r.config.max_a1;
    j["pair_max"] = r.config.pair_max;
    j["reduction_max"] = std::min(r.config.max_a1, r.config.reduction_max);
    j["triples"] = r.triples;
    j["pairs"] = r.pairs;
    j["reduction_triples"] = r.reduction_triples;
    nlohmann::ordered_json props = nlohmann::ordered_json::object();
    for (const auto& [p, n] : r.checks) {
        props[std::string(to_string(p))] = {{"checks", n}, {"failures", r.failure_count(p)}};
    }
    j["properties"] = props;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const Failure& f : r.failures) {
        nlohmann::ordered_json e;
        e["property"] = std::string(to_string(f.property));
        e["subject"] = f.subject;
        e["formula"] = f.formula_value ? nlohmann::ordered_json(*f.formula_value) : nullptr;
        e["oracle"] = f.oracle_value ? nlohmann::ordered_json(*f.oracle_value) : nullptr;
        e["detail"] = f.detail;
        fails.push_back(std::move(e));
    }
    j["failures"] = fails;
    j["ok"] = r.ok();
    if (with_timing) {
        j["seconds"] = r.seconds;
    }
    return j.dump() + "\n";
}

}  // namespace numsg::verify
