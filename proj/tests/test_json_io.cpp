#include "doctest.h"

#include "sclosure/json_io.hpp"

#include <fstream>
#include <string>

using namespace sclosure;
using nlohmann::json;

namespace {

MonomialIdeal mk(std::size_t nvars, std::vector<ExponentVector> gens) {
    return MonomialIdeal::from_generators(nvars, std::move(gens));
}

json load_schema(const std::string& name) {
    std::ifstream in(std::string(SCLOSURE_SCHEMA_DIR) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

// Minimal validator for the keyword subset the shipped schemas use:
// type (string or list), properties, required, items, enum,
// additionalProperties (boolean), $ref (sibling schema file).
bool type_matches(const json& value, const std::string& t) {
    if (t == "object") return value.is_object();
    if (t == "array") return value.is_array();
    if (t == "string") return value.is_string();
    if (t == "boolean") return value.is_boolean();
    if (t == "integer") return value.is_number_integer();
    if (t == "number") return value.is_number();
    if (t == "null") return value.is_null();
    FAIL(("unknown type keyword: " + t));
    return false;
}

bool validate(const json& value, const json& schema) {
    if (schema.contains("$ref")) return validate(value, load_schema(schema["$ref"]));
    if (schema.contains("enum")) {
        bool hit = false;
        for (const auto& option : schema["enum"])
            if (value == option) hit = true;
        if (!hit) return false;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        if (t.is_string()) {
            if (!type_matches(value, t.get<std::string>())) return false;
        } else {
            bool any = false;
            for (const auto& option : t)
                if (type_matches(value, option.get<std::string>())) any = true;
            if (!any) return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) return false;
        const json props = schema.value("properties", json::object());
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!validate(sub, props[key])) return false;
            } else if (schema.value("additionalProperties", json(true)) == json(false)) {
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& sub : value)
            if (!validate(sub, schema["items"])) return false;
    }
    return true;
}

} // namespace

TEST_CASE("integers fit numbers until they do not") {
    CHECK(int_to_json(Int(42)) == json(42));
    CHECK(int_to_json(Int(-7)) == json(-7));
    Int big = int_pow(Int(10), 25);
    json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == "10000000000000000000000000");
    CHECK(rat_to_json(Rat(3, 2)) == json("3/2"));
    CHECK(rat_to_json(Rat(4)) == json("4"));
}

TEST_CASE("ideal serialization carries the ring and canonical text") {
    VarTable vars(2);
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});
    json j = ideal_to_json(i, vars);
    CHECK(j["nvars"] == 2);
    CHECK(j["generators"] == json::parse("[[3,0],[0,3]]"));
    CHECK(j["meta"]["text"] == "x^3, y^3");
    CHECK(j["meta"]["is_zero"] == false);
    CHECK(j["meta"]["is_unit"] == false);
    CHECK(validate(j, load_schema("ideal.schema.json")));

    json z = ideal_to_json(MonomialIdeal::zero(2), vars);
    CHECK(z["generators"].empty());
    CHECK(z["meta"]["is_zero"] == true);
    CHECK(validate(z, load_schema("ideal.schema.json")));

    json u = ideal_to_json(MonomialIdeal::unit(2), vars);
    CHECK(u["meta"]["is_unit"] == true);
    CHECK(u["meta"]["text"] == "1");
    CHECK(validate(u, load_schema("ideal.schema.json")));
}

TEST_CASE("closure reports validate and round-trip their content") {
    VarTable vars(2);
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});
    ClosureReport rep = s_closure(i, Rat(5, 4));
    json j = closure_report_to_json(rep, vars);
    CHECK(validate(j, load_schema("closure_report.schema.json")));
    CHECK(j["s"] == "5/4");
    CHECK(j["route"] == "iterate");
    CHECK(j["iterations"] == 1);
    CHECK(j["new_generators"] == json::parse("[[2,2]]"));
    CHECK(j["result"]["meta"]["text"] == "x^3, x^2*y^2, y^3");
}

TEST_CASE("jumping-number reports validate") {
    VarTable vars(2);
    json j = jumping_numbers_to_json(jumping_numbers(mk(2, {{4, 0}, {0, 4}}), Rat(1), Rat(2)), vars);
    CHECK(validate(j, load_schema("jumping_numbers.schema.json")));
    REQUIRE(j["jumping_numbers"].size() == 3);
    CHECK(j["jumping_numbers"][0]["s"] == "1");
    CHECK(j["jumping_numbers"][1]["s"] == "5/4");
    CHECK(j["jumping_numbers"][2]["s"] == "3/2");
    // Empty result still validates.
    json empty = jumping_numbers_to_json({}, vars);
    CHECK(validate(empty, load_schema("jumping_numbers.schema.json")));
    CHECK(empty["jumping_numbers"].empty());
}

TEST_CASE("containment reports validate") {
    VarTable vars(2);
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});
    BSReport rep = briancon_skoda_check(make_bs_query(i, Rat(1), Rat(2), Int(2)));
    json j = bs_report_to_json(rep, vars);
    CHECK(validate(j, load_schema("bs_report.schema.json")));
    CHECK(j["r"] == 1);
    CHECK(j["all_hold"] == true);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["n"] == 1);
    CHECK(j["rows"][0]["holds"] == true);
}

TEST_CASE("degree reports validate with and without the upper half") {
    VarTable vars(2);
    json with_upper = degree_report_to_json(degree_bound_check(mk(2, {{2, 0}, {0, 3}}), Rat(3, 2), true), vars);
    CHECK(validate(with_upper, load_schema("degree_report.schema.json")));
    CHECK(with_upper["upper_checked"] == true);
    CHECK(with_upper.contains("upper_holds"));

    json lower_only = degree_report_to_json(degree_bound_check(mk(2, {{2, 1}, {1, 2}}), Rat(3, 2), false), vars);
    CHECK(validate(lower_only, load_schema("degree_report.schema.json")));
    CHECK(lower_only["upper_checked"] == false);
    CHECK_FALSE(lower_only.contains("upper_holds"));
    CHECK(lower_only["delta_min"] == json::parse("[1,1]"));
    CHECK(lower_only["delta_max"] == json::parse("[2,2]"));
}

TEST_CASE("oracle witnesses validate for both verdicts") {
    VarTable vars(2);
    MonomialIdeal i = mk(2, {{3, 0}, {0, 3}});
    json member = oracle_witness_to_json(definition_oracle(i, Rat(3, 2), ExponentVector{2, 2}, Int(2), 4, Int(6)), vars);
    CHECK(validate(member, load_schema("oracle_witness.schema.json")));
    CHECK(member["verdict"] == "member_evidence");
    CHECK(member["checked_q"] == json::parse("[2,4,8,16]"));

    json non = oracle_witness_to_json(definition_oracle(i, Rat(3, 2), ExponentVector{1, 0}, Int(2), 4, Int(6)), vars);
    CHECK(validate(non, load_schema("oracle_witness.schema.json")));
    CHECK(non["verdict"] == "non_member_evidence");
    CHECK(non["c"] == json::parse("[0,0]"));
    CHECK(non["c_text"] == "1");
}

TEST_CASE("multiplicity records validate") {
    json j = multiplicity_records_to_json(
        s_multiplicity_sequence(mk(2, {{1, 0}, {0, 1}}), Rat(1), Int(2), 3));
    CHECK(validate(j, load_schema("multiplicity_records.schema.json")));
    REQUIRE(j["records"].size() == 3);
    CHECK(j["records"][0]["q"] == 2);
    CHECK(j["records"][0]["colength"] == 3);
    CHECK(j["records"][0]["normalized"] == "3/2");
}

TEST_CASE("the validator itself rejects shape violations") {
    json schema = load_schema("ideal.schema.json");
    json good = ideal_to_json(mk(2, {{1, 0}}), VarTable(2));
    CHECK(validate(good, schema));
    json missing = good;
    missing.erase("meta");
    CHECK_FALSE(validate(missing, schema));
    json extra = good;
    extra["surprise"] = 1;
    CHECK_FALSE(validate(extra, schema));
    json wrong_type = good;
    wrong_type["nvars"] = "2";
    CHECK_FALSE(validate(wrong_type, schema));
    json bad_enum = json{{"verdict", "maybe"}, {"c", json::array()}, {"c_text", "1"}, {"checked_q", json::array()}};
    CHECK_FALSE(validate(bad_enum, load_schema("oracle_witness.schema.json")));
}
