// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
// Usage: acceptance <path-to-numsg-cli>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "numsg/frobenius.hpp"
#include "numsg/oracle.hpp"
#include "numsg/quotient.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/verify.hpp"

using namespace numsg;

namespace {

// Pinned from the acceptance criteria.
constexpr Int kSweepMaxA1 = 60;
constexpr Int kPairMax = 150;
constexpr Int kReductionMax = 40;
constexpr double kMainFormulaSeconds = 10.0;

struct Outcome {
    bool pass = true;
    Int checked = 0;
    std::string note;

    void fail(const std::string& why) {
        if (pass) {
            note = why;
        }
        pass = false;
    }
};

using Triples = std::vector<CoprimeTriple>;

Triples sweep() {
    Triples out;
    for (const auto& g : verify::coprime_triples(kSweepMaxA1)) {
        out.emplace_back(g[0], g[1], g[2]);
    }
    return out;
}

Int oracle_g(std::vector<Int> g) { return oracle::frobenius_oracle(oracle::GeneratorSet(std::move(g))); }

LValues oracle_l(const CoprimeTriple& t) {
    return {oracle::L_oracle(t, 1), oracle::L_oracle(t, 2), oracle::L_oracle(t, 3)};
}

Outcome main_formula(const Triples& ts) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& t : ts) {
        ++o.checked;
        const Int f = frobenius_main(t).value;
        const Int g = oracle_g({t.a1(), t.a2(), t.a3()});
        if (f != g) {
            o.fail(t.str() + ": formula " + std::to_string(f) + " oracle " + std::to_string(g));
        }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= kMainFormulaSeconds) {
        o.fail("took " + std::to_string(secs) + " s");
    }
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(secs) + " s";
    return o;
}

Outcome correspondence(const Triples& ts) {
    Outcome o;
    for (const auto& t : ts) {
        const TauSet t2 = tau_direct(t, 1, 2);
        const TauSet t3 = restrict_to_a3(t2, t);
        for (const auto& [base, k] : {std::pair{t2, 3}, std::pair{t3, 2}}) {
            ++o.checked;
            const TauSet derived = tau_from_correspondence(base, t, k);
            const TauSet direct = tau_direct(t, k, base.j);
            if (derived.values != direct.values) {
                o.fail(t.str() + ": τ_" + std::to_string(base.j) + "(S_" + std::to_string(k) +
                       ") mismatch");
            }
            if (static_cast<Int>(direct.values.size()) !=
                base.bound - 1 - static_cast<Int>(base.values.size())) {
                o.fail(t.str() + ": cardinality identity fails");
            }
        }
    }
    return o;
}

Outcome coeff_identity(const Triples& ts) {
    Outcome o;
    for (const auto& t : ts) {
        const LValues l = oracle_l(t);
        for (const int j : {2, 3}) {
            ++o.checked;
            const int k = 5 - j;
            try {
                const CoeffPair p = coeff_pair(t, l, j);
                if (p.x_first * t.a1() + p.x_second * t.at(k) != l.at(j) * t.at(j) ||
                    p.x_first >= t.at(k) || p.x_second >= t.a1()) {
                    o.fail(t.str() + " j=" + std::to_string(j));
                }
            } catch (const std::exception& e) {
                o.fail(e.what());
            }
        }
    }
    return o;
}

Outcome johnson(const Triples& ts) {
    Outcome o;
    for (const auto& t : ts) {
        const LValues l = oracle_l(t);
        if (l.L1 == 1 || l.L2 == 1 || l.L3 == 1) {
            continue;
        }
        ++o.checked;
        try {
            // Throws on a non-unique decomposition or disagreeing evaluations.
            const JohnsonWitness w = johnson_witness(t, l);
            const Int main = frobenius_main(t, l).value;
            for (const Int e : w.evaluations) {
                if (e != main) {
                    o.fail(t.str() + ": Johnson " + std::to_string(e) + " main " +
                           std::to_string(main));
                }
            }
        } catch (const std::exception& e) {
            o.fail(e.what());
        }
    }
    return o;
}

Outcome fg_identities(const Triples& ts) {
    Outcome o;
    Int fg_count = 0;
    for (const auto& t : ts) {
        const LValues l = oracle_l(t);
        if (l.L1 != 2) {
            continue;
        }
        ++o.checked;
        for (const int j : {2, 3}) {
            const int k = 5 - j;
            const Int lj = l.at(j);
            const Int aj = t.at(j);
            const Int ak = t.at(k);
            if (rem_product({lj, aj}, {t.a1()}, Modulus(ak)) != 1) {
                o.fail(t.str() + ": first L1 = 2 identity, j=" + std::to_string(j));
            }
            if (rem_product({lj, aj}, {ak}, Modulus(t.a1())) * ak != lj * aj - t.a1()) {
                o.fail(t.str() + ": complementary term, j=" + std::to_string(j));
            }
        }
        if (is_fundamental_gap(TwoGenSemigroup(t.a2(), t.a3()), t.a1())) {
            ++fg_count;
            const Int f = frobenius_fg(t).value;
            const Int g = oracle_g({t.a1(), t.a2(), t.a3()});
            if (f != g) {
                o.fail(t.str() + ": fundamental-gap formula " + std::to_string(f) + " oracle " +
                       std::to_string(g));
            }
        }
    }
    if (fg_count == 0) {
        o.fail("no fundamental-gap triples in sweep");
    }
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(fg_count) + " fundamental-gap triples";
    return o;
}

Outcome l1_branch(const Triples& ts) {
    Outcome o;
    for (const auto& t : ts) {
        const LValues l = oracle_l(t);
        if (l.L1 != 1) {
            continue;
        }
        ++o.checked;
        if (frobenius_main(t, l).value != sylvester(t.a2(), t.a3())) {
            o.fail(t.str() + ": main formula is not Sylvester");
        }
        if (l.L2 != t.a3() || l.L3 != t.a2()) {
            o.fail(t.str() + ": L2/L3 not (a3, a2)");
        }
    }
    return o;
}

Outcome reduction() {
    Outcome o;
    // Unordered triples: each multiset once.
    for (const auto& g : verify::reduction_triples(kReductionMax)) {
        ++o.checked;
        const Int f = frobenius(g).value;
        const Int truth = oracle_g({g[0], g[1], g[2]});
        if (f != truth) {
            o.fail("(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," +
                   std::to_string(g[2]) + "): " + std::to_string(f) + " vs " +
                   std::to_string(truth));
        }
    }
    const PaperReductionAudit a = paper_reduction_audit({4, 6, 9});
    if (!(a.discrepancy() && a.paper_value == -6 && a.oracle_value == 11)) {
        o.fail("product-form audit did not report -6 vs 11 on (4,6,9)");
    }
    return o;
}

Outcome membership(const Triples& ts) {
    Outcome o;
    for (Int a = 3; a <= kPairMax; ++a) {
        for (Int b = 2; b < a; ++b) {
            if (std::gcd(a, b) != 1) {
                continue;
            }
            ++o.checked;
            const TwoGenSemigroup s(a, b);
            const oracle::ReachTable table(oracle::GeneratorSet({a, b}), a * b);
            for (Int x = 0; x <= a * b; ++x) {
                if (member_two_gen(s, x) != table[x] ||
                    member_two_gen(s, x, ModulusChoice::smaller) != table[x]) {
                    o.fail("<" + std::to_string(a) + "," + std::to_string(b) + "> at " +
                           std::to_string(x));
                    break;
                }
            }
        }
    }
    for (const auto& t : ts) {
        for (int i = 1; i <= 3; ++i) {
            ++o.checked;
            const QuotientDescriptor q = quotient_of(t, i);
            const auto others = CoprimeTriple::others(i);
            const oracle::ReachTable table(
                oracle::GeneratorSet({t.at(others[0]), t.at(others[1])}), t.at(i) * t.a1());
            for (Int x = 0; x <= t.a1(); ++x) {
                if (member_quotient(q, x) != table[x * t.at(i)]) {
                    o.fail(t.str() + ": S_" + std::to_string(i) + " at " + std::to_string(x));
                    break;
                }
            }
        }
    }
    return o;
}

Outcome spot_values() {
    Outcome o;
    // Frozen from a brute-force run made before the library existed.
    const std::vector<std::pair<std::vector<Int>, Int>> golden{
        {{3, 5}, 7}, {{2, 3}, 1}, {{3, 5, 7}, 4}, {{4, 6, 9}, 11}};
    for (const auto& [g, want] : golden) {
        ++o.checked;
        const Int got = g.size() == 2 ? sylvester(g[0], g[1]) : frobenius({g[0], g[1], g[2]}).value;
        if (got != want || oracle_g(g) != want) {
            o.fail("g mismatch, expected " + std::to_string(want) + " got " + std::to_string(got));
        }
    }
    return o;
}

std::string run(const std::string& cmd) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        return out;
    }
    std::array<char, 4096> buf{};
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) {
        out.append(buf.data(), n);
    }
    return out;
}

Outcome cli_golden(const std::string& cli) {
    Outcome o;
    if (cli.empty()) {
        o.fail("no CLI path given");
        return o;
    }
    ++o.checked;
    const std::string json = run("'" + cli + "' frobenius 7 5 3 --witness --format json");
    const std::string want =
        R"({"input":[7,5,3],"sorted":[7,5,3],"g":4,"branch":"main_formula","L":[2,2,4],"tie":false,"chain":null})"
        "\n";
    if (json != want) {
        o.fail("frobenius JSON was: " + json);
    }

    const auto input = std::filesystem::temp_directory_path() / "numsg_acceptance_batch.txt";
    {
        std::ofstream f(input);
        for (Int a = 3; a <= 300; ++a) {
            f << a << ' ' << (a * 7) % 97 + 1 << ' ' << (a * 13) % 89 + 2 << '\n';
            if (a % 17 == 0) {
                f << "malformed " << a << '\n';
            }
        }
    }
    for (const std::string fmt : {"json", "csv", "text"}) {
        ++o.checked;
        const std::string base = "'" + cli + "' batch '" + input.string() + "' --format " + fmt;
        const std::string one = run(base + " --jobs 1");
        const std::string eight = run(base + " --jobs 8");
        if (one.empty() || one != eight) {
            o.fail("batch --format " + fmt + " differs between --jobs 1 and --jobs 8");
        }
    }
    std::filesystem::remove(input);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const Triples ts = sweep();
    std::cout << "sweep: " << ts.size() << " pairwise-coprime triples with a1 <= " << kSweepMaxA1
              << "\n";

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 main formula equals oracle (a1 <= 60, < 10 s)", [&] { return main_formula(ts); }},
        {"2 correspondence and cardinality identity", [&] { return correspondence(ts); }},
        {"3 coefficient identity with bounds", [&] { return coeff_identity(ts); }},
        {"4 Johnson three-index agreement, unique decompositions", [&] { return johnson(ts); }},
        {"5 L1 = 2 identities and fundamental-gap formula", [&] { return fg_identities(ts); }},
        {"6 L1 = 1 collapses to Sylvester", [&] { return l1_branch(ts); }},
        {"7 iterated reduction (max <= 40) and product-form audit", [] { return reduction(); }},
        {"8 closed-form membership (pairs a <= 150, quotients)", [&] { return membership(ts); }},
        {"9 spot values", [] { return spot_values(); }},
        {"10 CLI golden JSON and batch determinism", [&] { return cli_golden(cli); }},
    };

    bool all = true;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        all = all && o.pass;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << " [" << o.checked << " checked"
                  << (o.note.empty() ? "" : "; " + o.note) << "]\n";
    }
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << '\n';
    return all ? 0 : 1;
}
