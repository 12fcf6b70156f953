// numsg: Frobenius numbers of three-generator numerical semigroups.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "numsg/frobenius.hpp"
#include "numsg/oracle.hpp"
#include "numsg/quotient.hpp"
#include "numsg/record.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/verify.hpp"

namespace {

using numsg::Int;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Thrown for bad user input; main() maps it to exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Int>& v) {
    std::string s;
    for (const Int x : v) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(x);
    }
    return s;
}

std::array<Int, 3> checked_generators(const std::vector<Int>& v) {
    std::array<Int, 3> g{};
    for (std::size_t n = 0; n < 3; ++n) {
        if (v[n] < 1 || v[n] > numsg::io::kMaxGenerator) {
            throw UsageError("generator " + std::to_string(v[n]) + " outside [1, " +
                             std::to_string(numsg::io::kMaxGenerator) + "]");
        }
        g[n] = v[n];
    }
    return g;
}

numsg::CoprimeTriple triple_arg(const std::vector<Int>& v) {
    const auto g = checked_generators(v);
    try {
        return numsg::CoprimeTriple::from_unordered(g[0], g[1], g[2]);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

void warn_large(const numsg::CoprimeTriple& t) {
    if (t.a2() > 100'000'000) {
        std::cerr << "warning: a2 = " << t.a2()
                  << " makes the τ scan slow (linear in a2)\n";
    }
}

void check_indices(int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) {
        throw UsageError("indices must be 1, 2 or 3");
    }
    if (i == j) {
        throw UsageError("indices i and j must differ");
    }
}

numsg::io::Format format_of(const std::string& s) {
    if (s == "json") return numsg::io::Format::json;
    if (s == "csv") return numsg::io::Format::csv;
    return numsg::io::Format::text;
}

numsg::Method method_of(const std::string& s) {
    if (s == "main") return numsg::Method::main;
    if (s == "johnson") return numsg::Method::johnson;
    if (s == "fg") return numsg::Method::fg;
    if (s == "oracle") return numsg::Method::oracle;
    return numsg::Method::automatic;
}

// frobenius ----------------------------------------------------------------

struct FrobeniusArgs {
    std::vector<Int> gens;
    bool witness = false;
    bool paper_reduction = false;
    bool verify = false;
    std::string format = "text";
    std::string method = "auto";
};

void print_witness(const numsg::FrobeniusResult& r) {
    std::cout << "branch: " << numsg::to_string(r.branch) << '\n';
    std::cout << "sorted: " << r.sorted[0] << ' ' << r.sorted[1] << ' ' << r.sorted[2]
              << " (input positions " << r.permutation[0] + 1 << ' ' << r.permutation[1] + 1
              << ' ' << r.permutation[2] + 1 << ")\n";
    if (r.l_values) {
        std::cout << "L: " << r.l_values->L1 << ' ' << r.l_values->L2 << ' ' << r.l_values->L3
                  << '\n';
    }
    if (r.coefficients) {
        const auto& c = *r.coefficients;
        std::cout << "x23: " << c.x23 << " (term " << c.term2 << ")\n";
        std::cout << "x32: " << c.x32 << " (term " << c.term3 << ")\n";
        std::cout << "tie: " << (c.tie() ? "yes" : "no") << '\n';
    }
    if (r.reduction_chain) {
        std::cout << "chain:";
        for (const auto& s : *r.reduction_chain) {
            std::cout << " (d=" << s.divisor << ", c=" << s.absorbed << ")";
        }
        std::cout << '\n';
    }
}

int run_frobenius(const FrobeniusArgs& a) {
    const auto gens = checked_generators(a.gens);
    auto by_size = gens;
    std::ranges::sort(by_size);
    if (by_size[1] > 100'000'000 && a.method != "oracle") {
        std::cerr << "warning: middle generator " << by_size[1]
                  << " makes the L-value scan slow (linear in it)\n";
    }
    numsg::FrobeniusResult r;
    try {
        r = numsg::frobenius(gens, {method_of(a.method), a.verify});
    } catch (const numsg::InvalidGenerators& e) {
        throw UsageError(e.what());
    } catch (const numsg::HypothesisNotMet& e) {
        throw UsageError(e.what());
    }
    const auto format = format_of(a.format);
    if (format == numsg::io::Format::json) {
        std::cout << numsg::io::to_json(numsg::io::to_record(r)).dump() << '\n';
    } else if (format == numsg::io::Format::csv) {
        numsg::io::BatchRecord rec{1, {}, r, {}, 0};
        std::cout << numsg::io::csv_header(false) << '\n' << numsg::io::csv_row(rec, false) << '\n';
    } else {
        std::cout << r.value << '\n';
        if (a.witness) {
            print_witness(r);
        }
    }
    if (a.paper_reduction) {
        const auto audit = numsg::paper_reduction_audit(gens);
        if (format == numsg::io::Format::json) {
            numsg::io::Json j;
            j["paper_reduction"] = audit.paper_value;
            j["d"] = {audit.d12, audit.d23, audit.d31};
            j["b"] = audit.b;
            j["iterated"] = audit.iterated_value;
            j["oracle"] = audit.oracle_value ? numsg::io::Json(*audit.oracle_value) : nullptr;
            j["discrepancy"] = audit.discrepancy();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << "product reduction: d12=" << audit.d12 << " d23=" << audit.d23
                      << " d31=" << audit.d31 << " b=(" << audit.b[0] << "," << audit.b[1] << ","
                      << audit.b[2] << ") product=" << audit.paper_value << '\n';
            std::cout << "iterated reduction: " << audit.iterated_value << '\n';
            std::cout << "oracle: "
                      << (audit.oracle_value ? std::to_string(*audit.oracle_value) : "skipped")
                      << '\n';
            std::cout << "verdict: " << (audit.discrepancy() ? "discrepancy" : "agree") << '\n';
        }
    }
    return kOk;
}

// tau / phi ------------------------------------------------------------------

struct TauArgs {
    std::vector<Int> gens;
    int i = 0;
    int j = 0;
    std::string method = "direct";
};

numsg::TauSet tau_by_correspondence(const numsg::CoprimeTriple& t, int i, int j) {
    if (i == 1) {
        return numsg::tau_direct(t, 1, j);
    }
    if (j == 1) {
        throw UsageError("the correspondence only yields τ_j(S_k) for {j,k} = {2,3}");
    }
    const numsg::TauSet tau2_s1 = numsg::tau_direct(t, 1, 2);
    const numsg::TauSet base = j == 2 ? tau2_s1 : numsg::restrict_to_a3(tau2_s1, t);
    return numsg::tau_from_correspondence(base, t, i);
}

int run_tau(const TauArgs& a) {
    check_indices(a.i, a.j);
    const auto t = triple_arg(a.gens);
    warn_large(t);
    if (a.method == "direct") {
        std::cout << join(numsg::tau_direct(t, a.i, a.j).values) << '\n';
        return kOk;
    }
    if (a.method == "correspondence") {
        std::cout << join(tau_by_correspondence(t, a.i, a.j).values) << '\n';
        return kOk;
    }
    const auto direct = numsg::tau_direct(t, a.i, a.j);
    const auto corr = tau_by_correspondence(t, a.i, a.j);
    std::cout << "direct: " << join(direct.values) << '\n';
    std::cout << "correspondence: " << join(corr.values) << '\n';
    const bool match = direct == corr;
    std::cout << (match ? "match" : "mismatch") << '\n';
    return match ? kOk : kFail;
}

int run_phi(const TauArgs& a) {
    check_indices(a.i, a.j);
    const auto t = triple_arg(a.gens);
    warn_large(t);
    std::cout << join(numsg::phi_set(t, a.i, a.j)) << '\n';
    return kOk;
}

// lvalues ------------------------------------------------------------------

struct LValuesArgs {
    std::vector<Int> gens;
    std::string method = "stream";
    std::string format = "text";
};

int run_lvalues(const LValuesArgs& a) {
    const auto t = triple_arg(a.gens);
    warn_large(t);
    numsg::LValues l;
    if (a.method == "sets") {
        l = numsg::l_values_from_sets(t);
    } else if (a.method == "oracle") {
        l = {numsg::oracle::L_oracle(t, 1), numsg::oracle::L_oracle(t, 2),
             numsg::oracle::L_oracle(t, 3)};
    } else {
        l = numsg::l_values(t);
    }
    if (a.format == "json") {
        numsg::io::Json j;
        j["sorted"] = {t.a1(), t.a2(), t.a3()};
        j["L"] = {l.L1, l.L2, l.L3};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << l.L1 << ' ' << l.L2 << ' ' << l.L3 << '\n';
    }
    return kOk;
}

// fgaps / quotient-member --------------------------------------------------

numsg::TwoGenSemigroup pair_arg(Int a, Int b) {
    if (a < 1 || b < 1 || a > numsg::io::kMaxGenerator || b > numsg::io::kMaxGenerator) {
        throw UsageError("generators must be in [1, " + std::to_string(numsg::io::kMaxGenerator) +
                         "]");
    }
    try {
        return {a, b};
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

struct FgapsArgs {
    Int a = 0;
    Int b = 0;
    bool all = false;
};

int run_fgaps(const FgapsArgs& a) {
    const auto s = pair_arg(a.a, a.b);
    if (a.all) {
        std::cout << "gaps: " << join(numsg::gaps_two_gen(s)) << '\n';
        std::cout << "fundamental: ";
    }
    std::cout << join(numsg::fundamental_gaps(s)) << '\n';
    return kOk;
}

struct QuotientArgs {
    Int a = 0;
    Int b = 0;
    Int d = 0;
    Int x = 0;
    bool oracle = false;
};

int run_quotient_member(const QuotientArgs& a) {
    const auto s = pair_arg(a.a, a.b);
    if (a.d < 1 || a.x < 0) {
        throw UsageError("divisor must be >= 1 and x >= 0");
    }
    const bool member = numsg::member_quotient({s, a.d}, a.x);
    std::cout << (member ? "true" : "false") << '\n';
    if (a.oracle) {
        const bool truth = numsg::oracle::representable(numsg::oracle::GeneratorSet({a.a, a.b}),
                                                        numsg::checked_mul(a.d, a.x));
        std::cout << "oracle: " << (truth ? "true" : "false") << '\n';
        return truth == member ? kOk : kFail;
    }
    return kOk;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    Int max_a1 = 30;
    Int pair_max = -1;
    Int reduction_max = 40;
    std::vector<std::string> properties;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    bool reduction = false;
    bool timing = false;
    std::string format = "text";
};

int run_verify(const VerifyArgs& a) {
    if (a.max_a1 < 0 || a.reduction_max < 0) {
        throw UsageError("range bounds must be nonnegative");
    }
    numsg::verify::SweepConfig cfg;
    cfg.max_a1 = a.max_a1;
    cfg.pair_max = a.pair_max < 0 ? a.max_a1 : a.pair_max;
    cfg.reduction_max = a.reduction_max;
    cfg.jobs = a.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.jobs;
    cfg.seed = a.seed;
    if (!a.properties.empty()) {
        cfg.properties.clear();
        for (const auto& name : a.properties) {
            const auto p = numsg::verify::property_from_string(name);
            if (!p) {
                throw UsageError("unknown property '" + name + "'");
            }
            cfg.properties.push_back(*p);
        }
    } else if (a.reduction) {
        cfg.properties.push_back(numsg::verify::Property::reduction);
    }
    const auto report = numsg::verify::run_sweep(cfg);
    std::cout << (a.format == "json" ? numsg::verify::format_json(report, a.timing)
                                     : numsg::verify::format_text(report, a.timing));
    std::cerr << "verify finished in " << report.seconds << " s\n";
    return report.ok() ? kOk : kFail;
}

// batch --------------------------------------------------------------------

struct BatchArgs {
    std::string input = "-";
    std::string format = "text";
    unsigned jobs = 1;
    bool timing = false;
    std::string method = "auto";
};

int run_batch(const BatchArgs& a) {
    numsg::io::BatchOptions opts;
    opts.format = format_of(a.format);
    opts.jobs = a.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.jobs;
    opts.timing = a.timing;
    opts.dispatch.method = method_of(a.method);
    std::vector<numsg::io::BatchRecord> records;
    if (a.input == "-") {
        records = numsg::io::run_batch(std::cin, opts);
    } else {
        std::ifstream in(a.input);
        if (!in) {
            throw UsageError("cannot read '" + a.input + "'");
        }
        records = numsg::io::run_batch(in, opts);
    }
    numsg::io::write_batch(std::cout, records, opts);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius numbers and quotient first-element sets of numerical semigroups"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"text", "json", "csv"};
    const std::vector<std::string> methods{"auto", "main", "johnson", "fg", "oracle"};

    FrobeniusArgs fa;
    auto* frob = app.add_subcommand("frobenius", "Frobenius number of three generators");
    frob->add_option("generators", fa.gens, "three positive integers with gcd 1")
        ->required()
        ->expected(3);
    frob->add_flag("--witness", fa.witness, "print branch, L values and coefficients");
    frob->add_flag("--paper-reduction", fa.paper_reduction,
                   "also report the product-form gcd reduction next to the iterated rule");
    frob->add_flag("--verify", fa.verify, "cross-check against the brute-force oracle");
    frob->add_option("--format", fa.format)->check(CLI::IsMember(formats));
    frob->add_option("--method", fa.method, "formula for pairwise-coprime triples")
        ->check(CLI::IsMember(methods));

    TauArgs ta;
    auto* tau = app.add_subcommand("tau", "τ_j(S_i): elements of S_i in (0, a_j)");
    tau->add_option("generators", ta.gens)->required()->expected(3);
    tau->add_option("--i", ta.i, "quotient index")->required();
    tau->add_option("--j", ta.j, "bound index")->required();
    tau->add_option("--method", ta.method)
        ->check(CLI::IsMember({"direct", "correspondence", "both"}));

    TauArgs pa;
    auto* phi = app.add_subcommand("phi", "φ_j(S_i) = τ_j(S_i) ∪ {0, a_j}");
    phi->add_option("generators", pa.gens)->required()->expected(3);
    phi->add_option("--i", pa.i)->required();
    phi->add_option("--j", pa.j)->required();

    LValuesArgs la;
    auto* lv = app.add_subcommand("lvalues", "L1 L2 L3 of a pairwise-coprime triple");
    lv->add_option("generators", la.gens)->required()->expected(3);
    lv->add_option("--method", la.method)->check(CLI::IsMember({"stream", "sets", "oracle"}));
    lv->add_option("--format", la.format)->check(CLI::IsMember({"text", "json"}));

    FgapsArgs ga;
    auto* fg = app.add_subcommand("fgaps", "fundamental gaps of <a, b>");
    fg->add_option("a", ga.a)->required();
    fg->add_option("b", ga.b)->required();
    fg->add_flag("--all", ga.all, "also print every gap");

    QuotientArgs qa;
    auto* qm = app.add_subcommand("quotient-member", "whether x ∈ <a, b> / d");
    qm->add_option("a", qa.a)->required();
    qm->add_option("b", qa.b)->required();
    qm->add_option("d", qa.d)->required();
    qm->add_option("x", qa.x)->required();
    qm->add_flag("--oracle", qa.oracle, "cross-check by brute force");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "exhaustive property sweep against the oracle");
    ver->add_option("--max-a1", va.max_a1, "largest a1 of swept triples");
    ver->add_option("--pair-max", va.pair_max, "largest generator of swept pairs (default max-a1)");
    ver->add_option("--reduction-max", va.reduction_max,
                    "largest generator of reduction triples, capped by max-a1");
    ver->add_option("--properties", va.properties, "subset of properties to check")
        ->delimiter(',');
    ver->add_option("--jobs", va.jobs, "worker threads (0 = all cores)");
    ver->add_option("--seed", va.seed, "reserved for sampled modes; unused");
    ver->add_flag("--reduction", va.reduction, "include non-pairwise-coprime triples");
    ver->add_flag("--timing", va.timing, "include wall-clock time in the report");
    ver->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

    BatchArgs ba;
    auto* bat = app.add_subcommand("batch", "one Frobenius record per input line");
    bat->add_option("input", ba.input, "file path, or - for standard input");
    bat->add_option("--format", ba.format)->check(CLI::IsMember(formats));
    bat->add_option("--jobs", ba.jobs, "worker threads (0 = all cores)");
    bat->add_flag("--timing", ba.timing, "include per-record microseconds");
    bat->add_option("--method", ba.method)->check(CLI::IsMember(methods));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (frob->parsed()) return run_frobenius(fa);
        if (tau->parsed()) return run_tau(ta);
        if (phi->parsed()) return run_phi(pa);
        if (lv->parsed()) return run_lvalues(la);
        if (fg->parsed()) return run_fgaps(ga);
        if (qm->parsed()) return run_quotient_member(qa);
        if (ver->parsed()) return run_verify(va);
        if (bat->parsed()) return run_batch(ba);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const numsg::OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
