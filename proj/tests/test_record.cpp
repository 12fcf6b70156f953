#include <doctest.h>

#include <sstream>

#include "numsg/record.hpp"

using namespace numsg;
using namespace numsg::io;

TEST_CASE("json record schema and key order") {
    const Json j = to_json(to_record(frobenius({7, 5, 3})));
    CHECK(j.dump() ==
          R"({"input":[7,5,3],"sorted":[7,5,3],"g":4,"branch":"main_formula","L":[2,2,4],"tie":false,"chain":null})");
    const Json k = to_json(to_record(frobenius({4, 6, 9})));
    CHECK(k.dump() ==
          R"({"input":[4,6,9],"sorted":[9,6,4],"g":11,"branch":"reduction","L":null,"tie":false,"chain":[{"divisor":3,"absorbed":4},{"divisor":2,"absorbed":3}]})");
}

TEST_CASE("json records round-trip") {
    for (const auto& g : {std::array<Int, 3>{7, 5, 3}, {4, 6, 9}, {1, 17, 30}, {6, 6, 5},
                          {3, 11, 7}, {6, 10, 15}}) {
        const ResultRecord r = to_record(frobenius(g));
        const ResultRecord back = record_from_json(Json::parse(to_json(r).dump()));
        CHECK(back == r);
    }
}

TEST_CASE("malformed json records are rejected") {
    CHECK_THROWS_AS((void)record_from_json(Json::parse(R"({"input":[1,2,3]})")), Error);
    Json j = to_json(to_record(frobenius({7, 5, 3})));
    j["branch"] = "nope";
    CHECK_THROWS_AS((void)record_from_json(j), Error);
}

TEST_CASE("parse_triple_line") {
    using A = std::array<Int, 3>;
    CHECK(std::get<A>(parse_triple_line("7 5 3")) == A{7, 5, 3});
    CHECK(std::get<A>(parse_triple_line("  7\t5   3 ")) == A{7, 5, 3});
    CHECK(std::get<std::string>(parse_triple_line("7 5")) == "expected 3 integers");
    CHECK(std::get<std::string>(parse_triple_line("7 5 3 1")) == "expected 3 integers");
    CHECK(std::get<std::string>(parse_triple_line("7 x 3")) == "invalid integer 'x'");
    CHECK(std::holds_alternative<std::string>(parse_triple_line("7 0 3")));
    CHECK(std::holds_alternative<std::string>(parse_triple_line("7 2147483648 3")));
    CHECK(std::holds_alternative<std::string>(parse_triple_line("7 99999999999999999999 3")));
}

TEST_CASE("batch keeps order, skips comments and reports errors inline") {
    std::istringstream in("# header\n7 5 3\n\n7 5\n4 6 9  # trailing\n2 4 6\n");
    const auto recs = run_batch(in, {});
    REQUIRE(recs.size() == 4);
    CHECK(recs[0].line == 2);
    CHECK(recs[0].result->value == 4);
    CHECK(recs[1].line == 4);
    CHECK(recs[1].error == "expected 3 integers");
    CHECK(recs[2].result->value == 11);
    CHECK(recs[3].error == "gcd is 2");
}

TEST_CASE("batch output is identical for any job count") {
    std::ostringstream src;
    for (Int a = 5; a < 60; ++a) {
        src << a << ' ' << a - 2 << ' ' << (a % 7) + 2 << '\n';
        src << "bad line\n";
    }
    for (const Format f : {Format::text, Format::json, Format::csv}) {
        std::string outputs[2];
        for (const unsigned jobs : {1u, 8u}) {
            std::istringstream in(src.str());
            BatchOptions opts;
            opts.format = f;
            opts.jobs = jobs;
            std::ostringstream out;
            write_batch(out, run_batch(in, opts), opts);
            outputs[jobs == 1 ? 0 : 1] = out.str();
        }
        CHECK(outputs[0] == outputs[1]);
        CHECK_FALSE(outputs[0].empty());
    }
}

TEST_CASE("csv rows") {
    std::istringstream in("7 5 3\n7 5\n");
    BatchOptions opts;
    opts.format = Format::csv;
    std::ostringstream out;
    write_batch(out, run_batch(in, opts), opts);
    CHECK(out.str() ==
          "line,a,b,c,g,branch,L1,L2,L3,tie,error\n"
          "1,7,5,3,4,main_formula,2,2,4,false,\n"
          "2,,,,,,,,,,expected 3 integers\n");
}

TEST_CASE("empty batch") {
    std::istringstream in("");
    const auto recs = run_batch(in, {});
    CHECK(recs.empty());
}
