#include "numsg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace numsg::oracle {

GeneratorSet::GeneratorSet(std::vector<Int> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) {
        throw InvalidGenerators("generator set is empty");
    }
    std::ranges::sort(gens_);
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.front() < 1) {
        throw InvalidGenerators("generators must be positive");
    }
}

Int GeneratorSet::gcd() const noexcept {
    Int d = 0;
    for (const Int g : gens_) {
        d = std::gcd(d, g);
    }
    return d;
}

ReachTable::ReachTable(const GeneratorSet& g, Int limit)
    : reach_(static_cast<std::size_t>(std::max<Int>(limit, 0) + 1), 0) {
    reach_[0] = 1;
    for (std::size_t n = 1; n < reach_.size(); ++n) {
        for (const Int c : g.gens()) {
            const auto cs = static_cast<std::size_t>(c);
            if (cs <= n && reach_[n - cs]) {
                reach_[n] = 1;
                break;
            }
        }
    }
}

bool ReachTable::operator[](Int n) const {
    if (n < 0) {
        return false;
    }
    return reach_.at(static_cast<std::size_t>(n)) != 0;
}

bool representable(const GeneratorSet& g, Int n) {
    if (n < 0) {
        return false;
    }
    return ReachTable(g, n)[n];
}

Int frobenius_oracle(const GeneratorSet& g) {
    if (g.gcd() != 1) {
        throw InvalidGenerators("gcd of generators is " + std::to_string(g.gcd()));
    }
    const auto& gens = g.gens();
    const Int smallest = gens.front();
    if (smallest == 1) {
        return -1;
    }
    // Grow the table until `smallest` consecutive values are reachable; every
    // later value then follows by adding the smallest generator.
    std::vector<std::uint8_t> reach{1};
    Int run = 1;
    Int last_gap = -1;
    for (Int n = 1; run < smallest; ++n) {
        bool r = false;
        for (const Int c : gens) {
            if (c <= n && reach[static_cast<std::size_t>(n - c)]) {
                r = true;
                break;
            }
        }
        reach.push_back(r ? 1 : 0);
        if (r) {
            ++run;
        } else {
            run = 0;
            last_gap = n;
        }
    }
    return last_gap;
}

namespace {

GeneratorSet complement_pair(const CoprimeTriple& t, int i) {
    const auto o = CoprimeTriple::others(i);
    return GeneratorSet({t.at(o[0]), t.at(o[1])});
}

}  // namespace

Int L_oracle(const CoprimeTriple& t, int i) {
    const GeneratorSet pair = complement_pair(t, i);
    const Int ai = t.at(i);
    const Int bound = pair.gens().front();  // L_i <= min of the others
    const ReachTable table(pair, ai * bound);
    for (Int x = 1; x <= bound; ++x) {
        if (table[x * ai]) {
            return x;
        }
    }
    throw IdentityViolation("no multiple of a_" + std::to_string(i) + " up to " +
                            std::to_string(bound) + " is representable for " + t.str());
}

std::vector<Int> tau_oracle(const CoprimeTriple& t, int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) {
        throw IndexContract("tau requires i != j");
    }
    const GeneratorSet pair = complement_pair(t, i);
    const Int ai = t.at(i);
    const Int aj = t.at(j);
    const ReachTable table(pair, ai * aj);
    std::vector<Int> out;
    for (Int x = 1; x < aj; ++x) {
        if (table[x * ai]) {
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace numsg::oracle
