#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mkoszul/report.hpp"

using namespace mkoszul;
using report::Json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_schema(const std::string& name) {
    return Json::parse(slurp(std::string(SCHEMA_DIR) + "/" + name + ".schema.json"));
}

/// Structural validator for the schema subset used here: type (including
/// union types), properties, required, items, enum.
bool validates(const Json& value, const Json& schema, std::string& why) {
    if (schema.contains("enum")) {
        for (auto& v : schema["enum"])
            if (v == value) return true;
        why = "enum mismatch at " + value.dump();
        return false;
    }
    if (schema.contains("type")) {
        auto matches = [&](const std::string& t) {
            if (t == "object") return value.is_object();
            if (t == "array") return value.is_array();
            if (t == "string") return value.is_string();
            if (t == "integer") return value.is_number_integer();
            if (t == "number") return value.is_number();
            if (t == "boolean") return value.is_boolean();
            if (t == "null") return value.is_null();
            return false;
        };
        bool ok = false;
        if (schema["type"].is_array()) {
            for (auto& t : schema["type"]) ok = ok || matches(t.get<std::string>());
        } else {
            ok = matches(schema["type"].get<std::string>());
        }
        if (!ok) {
            why = "type mismatch: expected " + schema["type"].dump() + " at " + value.dump().substr(0, 60);
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (auto& k : schema["required"])
                if (!value.contains(k.get<std::string>())) {
                    why = "missing required key " + k.dump();
                    return false;
                }
        if (schema.contains("properties"))
            for (auto& [k, sub] : schema["properties"].items())
                if (value.contains(k) && !validates(value[k], sub, why)) return false;
    }
    if (value.is_array() && schema.contains("items") && schema["items"].is_object()) {
        for (auto& e : value)
            if (!validates(e, schema["items"], why)) return false;
    }
    return true;
}

void check_schema(const Json& value, const std::string& schema_name) {
    std::string why;
    bool ok = validates(value, load_schema(schema_name), why);
    CAPTURE(schema_name);
    CAPTURE(why);
    CHECK(ok);
}

void check_golden(const Json& value, const std::string& golden_name) {
    std::string expected = slurp(std::string(GOLDEN_DIR) + "/" + golden_name + ".json");
    CAPTURE(golden_name);
    CHECK(value.dump(2) + "\n" == expected);
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("reports validate against the shipped schemas") {
    check_schema(report::relations_report(4), "relations");
    check_schema(report::gb_report(4), "gb_check");
    check_schema(report::hilbert_report(5), "hilbert");
    check_schema(report::normal_report(4, 2), "normal");
    check_schema(report::trees_report(4), "trees");
    check_schema(report::phi_report(4, "[1,[2,3,4]]"), "tree_map");
    check_schema(report::psi_report(4, "[[1,2,3],[1,2,3,4]]"), "tree_map");
    check_schema(report::dual_report(4), "dual");
    check_schema(report::lie_check_report(4), "lie_check");
    check_schema(report::homotopy_report(3, 8), "homotopy_ranks");
    check_schema(report::hh0_report(4, 5, 3), "hh0");
    check_schema(report::nonvanishing_report_json(4), "nonvanishing");
    check_schema(report::toric_report_json(std::string(FAN_DATA_DIR) + "/p2.json"), "toric");
    check_schema(report::toric_report_json(std::string(FAN_DATA_DIR) + "/p1xp1.json"), "toric");
}

TEST_CASE("golden outputs, n <= 5") {
    check_golden(report::hilbert_report(3), "hilbert_n3");
    check_golden(report::hilbert_report(4), "hilbert_n4");
    check_golden(report::hilbert_report(5), "hilbert_n5");
    check_golden(report::relations_report(4), "relations_n4");
    check_golden(report::gb_report(4), "gb_check_n4");
    check_golden(report::gb_report(5), "gb_check_n5");
    check_golden(report::normal_report(4, 2), "normal_n4_d2");
    check_golden(report::trees_report(4), "trees_n4");
    check_golden(report::trees_report(5), "trees_n5");
    check_golden(report::dual_report(4), "dual_n4");
    check_golden(report::lie_check_report(5), "lie_check_n5");
    check_golden(report::homotopy_report(3, 8), "homotopy_ranks_n3");
    check_golden(report::homotopy_report(4, 12), "homotopy_ranks_n4");
    check_golden(report::hh0_report(4, 5, 4), "hh0_n4_p5");
    check_golden(report::nonvanishing_report_json(4), "nonvanishing_n4");
    check_golden(report::nonvanishing_report_json(5), "nonvanishing_n5");
    check_golden(report::phi_report(4, "[1,[2,3,4]]"), "phi_example");
    check_golden(report::psi_report(4, "[[1,2,3],[1,2,3,4]]"), "psi_example");
    check_golden(report::toric_report_json(std::string(FAN_DATA_DIR) + "/p2.json"), "toric_p2");
    check_golden(report::toric_report_json(std::string(FAN_DATA_DIR) + "/p1xp1.json"), "toric_p1xp1");
    check_golden(report::toric_report_json(std::string(FAN_DATA_DIR) + "/permutohedral2.json"),
                 "toric_permutohedral2");
}

TEST_CASE("byte-identical output across runs and worker counts") {
    std::string a = report::gb_report(5, 1).dump(2);
    std::string b = report::gb_report(5, 2).dump(2);
    std::string c = report::gb_report(5, 0, true).dump(2);  // serial reference
    CHECK(a == b);
    CHECK(a == c);
    CHECK(report::trees_report(5).dump(2) == report::trees_report(5).dump(2));
}

TEST_CASE("spec examples: gb-check n=4 and hilbert n=5") {
    Json gb = report::gb_report(4);
    CHECK(gb["outcome"] == "verified");
    CHECK(gb["relation_count"] == 14);
    CHECK(gb["normal_counts"] == Json::array({1, 5, 1, 0}));
    Json h = report::hilbert_report(5);
    CHECK(report::to_pretty(h) == "1 16 16 1\n");
}

TEST_CASE("csv output shape") {
    std::string csv = report::to_csv(report::hilbert_report(4));
    CHECK(csv == "degree,dimension\n0,1\n1,5\n2,1\n");
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("gb-check --n 4") == 0);
    CHECK(run_cli(std::string("toric --fan ") + FAN_DATA_DIR + "/p2.json") == 2);
    CHECK(run_cli(std::string("toric --fan ") + FAN_DATA_DIR + "/p1xp1.json") == 0);
    CHECK(run_cli("gb-check") == 1);            // missing --n
    CHECK(run_cli("gb-check --n 9") == 1);      // out of range
    CHECK(run_cli("gb-check --n 7") == 1);      // larger run without --big
    CHECK(run_cli("no-such-command") == 1);
    CHECK(run_cli("toric --fan /nonexistent.json") == 1);
    CHECK(run_cli("hilbert --n 6 --format pretty") == 0);
}
