#include "numsg/record.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>

namespace numsg::io {

ResultRecord to_record(const FrobeniusResult& r) {
    ResultRecord rec;
    rec.input = r.input;
    rec.sorted = r.sorted;
    rec.g = r.value;
    rec.branch = r.branch;
    if (r.l_values) {
        rec.L = std::array<Int, 3>{r.l_values->L1, r.l_values->L2, r.l_values->L3};
    }
    rec.tie = r.tie();
    rec.chain = r.reduction_chain;
    return rec;
}

Json to_json(const ResultRecord& r) {
    Json j;
    j["input"] = r.input;
    j["sorted"] = r.sorted;
    j["g"] = r.g;
    j["branch"] = std::string(to_string(r.branch));
    j["L"] = r.L ? Json(*r.L) : Json(nullptr);
    j["tie"] = r.tie;
    if (r.chain) {
        Json chain = Json::array();
        for (const auto& s : *r.chain) {
            chain.push_back(Json{{"divisor", s.divisor}, {"absorbed", s.absorbed}});
        }
        j["chain"] = std::move(chain);
    } else {
        j["chain"] = nullptr;
    }
    return j;
}

ResultRecord record_from_json(const Json& j) {
    try {
        ResultRecord r;
        r.input = j.at("input").get<std::array<Int, 3>>();
        r.sorted = j.at("sorted").get<std::array<Int, 3>>();
        r.g = j.at("g").get<Int>();
        const auto name = j.at("branch").get<std::string>();
        const auto branch = branch_from_string(name);
        if (!branch) {
            throw Error("unknown branch '" + name + "'");
        }
        r.branch = *branch;
        if (!j.at("L").is_null()) {
            r.L = j.at("L").get<std::array<Int, 3>>();
        }
        r.tie = j.at("tie").get<bool>();
        if (!j.at("chain").is_null()) {
            std::vector<ReductionStep> chain;
            for (const auto& s : j.at("chain")) {
                chain.push_back({s.at("divisor").get<Int>(), s.at("absorbed").get<Int>()});
            }
            r.chain = std::move(chain);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed result record: ") + e.what());
    }
}

std::variant<std::array<Int, 3>, std::string> parse_triple_line(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string tok; ss >> tok;) {
        tokens.push_back(tok);
    }
    if (tokens.size() != 3) {
        return std::string("expected 3 integers");
    }
    std::array<Int, 3> out{};
    for (std::size_t n = 0; n < 3; ++n) {
        const std::string& tok = tokens[n];
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec == std::errc::result_out_of_range) {
            return "integer out of range: '" + tok + "'";
        }
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            return "invalid integer '" + tok + "'";
        }
        if (v < 1 || v > kMaxGenerator) {
            return "generator " + tok + " outside [1, " + std::to_string(kMaxGenerator) + "]";
        }
        out[n] = v;
    }
    return out;
}

namespace {

void evaluate(BatchRecord& rec, const BatchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const auto parsed = parse_triple_line(rec.text);
    if (const auto* msg = std::get_if<std::string>(&parsed)) {
        rec.error = *msg;
    } else {
        try {
            rec.result = frobenius(std::get<std::array<Int, 3>>(parsed), opts.dispatch);
        } catch (const std::exception& e) {
            rec.error = e.what();
        }
    }
    rec.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::vector<BatchRecord> run_batch(std::istream& in, const BatchOptions& opts) {
    std::vector<BatchRecord> records;
    Int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        records.push_back({lineno, line, std::nullopt, {}, 0});
    }

    const std::size_t jobs = std::max<std::size_t>(1, opts.jobs);
    if (jobs == 1 || records.size() < 2) {
        for (auto& r : records) {
            evaluate(r, opts);
        }
        return records;
    }
    // Each worker owns a strided slice, so writes never overlap.
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t n = w; n < records.size(); n += jobs) {
                evaluate(records[n], opts);
            }
        }));
    }
    for (auto& f : workers) {
        f.get();
    }
    return records;
}

std::string csv_header(bool timing) {
    return timing ? "line,a,b,c,g,branch,L1,L2,L3,tie,error,micros"
                  : "line,a,b,c,g,branch,L1,L2,L3,tie,error";
}

std::string csv_row(const BatchRecord& r, bool timing) {
    std::ostringstream os;
    os << r.line << ',';
    if (r.result) {
        const auto& res = *r.result;
        os << res.input[0] << ',' << res.input[1] << ',' << res.input[2] << ',' << res.value << ','
           << to_string(res.branch) << ',';
        if (res.l_values) {
            os << res.l_values->L1 << ',' << res.l_values->L2 << ',' << res.l_values->L3 << ',';
        } else {
            os << ",,,";
        }
        os << (res.tie() ? "true" : "false") << ',';
    } else {
        os << ",,,,,,,,,";
        os << csv_escape(r.error);
    }
    if (timing) {
        os << ',' << r.micros;
    }
    return os.str();
}

void write_batch(std::ostream& out, const std::vector<BatchRecord>& records,
                 const BatchOptions& opts) {
    if (opts.format == Format::csv) {
        out << csv_header(opts.timing) << '\n';
    }
    for (const auto& r : records) {
        switch (opts.format) {
            case Format::json: {
                Json j;
                if (r.result) {
                    j = to_json(to_record(*r.result));
                } else {
                    j["line"] = r.line;
                    j["text"] = r.text;
                    j["error"] = r.error;
                }
                if (opts.timing) {
                    j["micros"] = r.micros;
                }
                out << j.dump() << '\n';
                break;
            }
            case Format::csv:
                out << csv_row(r, opts.timing) << '\n';
                break;
            case Format::text:
                if (r.result) {
                    const auto& in = r.result->input;
                    out << in[0] << ' ' << in[1] << ' ' << in[2] << ": " << r.result->value;
                } else {
                    out << "line " << r.line << ": error: " << r.error;
                }
                if (opts.timing) {
                    out << " (" << r.micros << " us)";
                }
                out << '\n';
                break;
        }
    }
}

}  // namespace numsg::io
