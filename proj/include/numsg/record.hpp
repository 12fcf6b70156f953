#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "numsg/frobenius.hpp"

namespace numsg::io {

using Json = nlohmann::ordered_json;

/// The frozen output record:
/// {"input","sorted","g","branch","L","tie","chain"} in that key order.
struct ResultRecord {
    std::array<Int, 3> input{};
    std::array<Int, 3> sorted{};
    Int g = -1;
    Branch branch = Branch::main_formula;
    std::optional<std::array<Int, 3>> L;
    bool tie = false;
    std::optional<std::vector<ReductionStep>> chain;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

[[nodiscard]] ResultRecord to_record(const FrobeniusResult& r);
[[nodiscard]] Json to_json(const ResultRecord& r);
/// Throws Error when a field is missing or has the wrong type.
[[nodiscard]] ResultRecord record_from_json(const Json& j);

enum class Format { text, json, csv };

/// Largest generator accepted from user input.
inline constexpr Int kMaxGenerator = 2'147'483'647;

/// Three whitespace-separated integers in [1, kMaxGenerator], or a message.
[[nodiscard]] std::variant<std::array<Int, 3>, std::string> parse_triple_line(
    const std::string& line);

struct BatchRecord {
    Int line = 0;      ///< 1-based physical line number
    std::string text;  ///< line content without comment
    std::optional<FrobeniusResult> result;
    std::string error;
    Int micros = 0;
};

struct BatchOptions {
    Format format = Format::text;
    unsigned jobs = 1;
    bool timing = false;
    DispatchOptions dispatch;
};

/// Reads every line first, evaluates records on up to `jobs` threads, and
/// returns them in input order. Blank lines and `#` comments are skipped.
[[nodiscard]] std::vector<BatchRecord> run_batch(std::istream& in, const BatchOptions& opts);

void write_batch(std::ostream& out, const std::vector<BatchRecord>& records,
                 const BatchOptions& opts);

[[nodiscard]] std::string csv_header(bool timing);
[[nodiscard]] std::string csv_row(const BatchRecord& r, bool timing);

}  // namespace numsg::io
