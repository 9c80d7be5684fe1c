#include "sclosure/json_io.hpp"

namespace sclosure {

using nlohmann::json;

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json rat_to_json(const Rat& v) { return json(format_rational(v)); }

namespace {

json vector_to_json(const ExponentVector& v) {
    json arr = json::array();
    for (std::size_t i = 0; i < v.size(); ++i) arr.push_back(int_to_json(v[i]));
    return arr;
}

json vectors_to_json(const std::vector<ExponentVector>& vs) {
    json arr = json::array();
    for (const ExponentVector& v : vs) arr.push_back(vector_to_json(v));
    return arr;
}

} // namespace

json ideal_to_json(const MonomialIdeal& ideal, const VarTable& vars) {
    json gens = json::array();
    for (const ExponentVector& g : ideal.generators()) gens.push_back(vector_to_json(g));
    return json{{"nvars", ideal.nvars()},
                {"generators", gens},
                {"meta",
                 {{"text", format_ideal(ideal, vars)},
                  {"is_zero", ideal.is_zero()},
                  {"is_unit", ideal.is_unit()}}}};
}

json closure_report_to_json(const ClosureReport& rep, const VarTable& vars) {
    return json{{"input", ideal_to_json(rep.input, vars)},
                {"s", rat_to_json(rep.s)},
                {"result", ideal_to_json(rep.result, vars)},
                {"new_generators", vectors_to_json(rep.new_generators)},
                {"iterations", rep.iterations},
                {"route", rep.route == ClosureRoute::closed_form ? "closed_form" : "iterate"}};
}

json jumping_numbers_to_json(const std::vector<JumpingNumber>& jumps, const VarTable& vars) {
    json arr = json::array();
    for (const JumpingNumber& j : jumps) {
        arr.push_back(json{{"s", rat_to_json(j.s)},
                           {"closure_at", ideal_to_json(j.at, vars)},
                           {"closure_after", ideal_to_json(j.after, vars)}});
    }
    return json{{"jumping_numbers", arr}};
}

json bs_report_to_json(const BSReport& rep, const VarTable& vars) {
    json rows = json::array();
    for (const BSRow& row : rep.rows) {
        rows.push_back(json{{"n", int_to_json(row.n)},
                            {"lhs", ideal_to_json(row.lhs, vars)},
                            {"rhs", ideal_to_json(row.rhs, vars)},
                            {"holds", row.holds}});
    }
    return json{{"ideal", ideal_to_json(rep.query.ideal, vars)},
                {"t", rat_to_json(rep.query.t)},
                {"s", rat_to_json(rep.query.s)},
                {"r", int_to_json(rep.query.r)},
                {"n_max", int_to_json(rep.query.n_max)},
                {"rows", rows},
                {"all_hold", rep.all_hold}};
}

json degree_report_to_json(const DegreeBoundReport& rep, const VarTable& vars) {
    json out{{"delta_min", vector_to_json(rep.bounds.delta_min)},
             {"delta_max", vector_to_json(rep.bounds.delta_max)},
             {"lower_holds", rep.lower_holds},
             {"lower_violations", vectors_to_json(rep.lower_violations)},
             {"upper_checked", rep.upper_checked}};
    if (rep.upper_checked) {
        out["upper_holds"] = rep.upper_holds;
        out["upper_violations"] = vectors_to_json(rep.upper_violations);
    }
    (void)vars;
    return out;
}

json oracle_witness_to_json(const OracleWitness& wit, const VarTable& vars) {
    const char* verdict = wit.verdict == OracleVerdict::member_evidence ? "member_evidence"
                          : wit.verdict == OracleVerdict::non_member_evidence
                              ? "non_member_evidence"
                              : "inconclusive";
    json qs = json::array();
    for (const Int& q : wit.checked_q) qs.push_back(int_to_json(q));
    return json{{"verdict", verdict},
                {"c", vector_to_json(wit.c)},
                {"c_text", format_monomial(wit.c, vars)},
                {"checked_q", qs}};
}

json multiplicity_records_to_json(const std::vector<MultiplicityRecord>& records) {
    json arr = json::array();
    for (const MultiplicityRecord& rec : records) {
        arr.push_back(json{{"q", int_to_json(rec.q)},
                           {"colength", int_to_json(rec.colength)},
                           {"normalized", rat_to_json(rec.normalized)}});
    }
    return json{{"records", arr}};
}

} // namespace sclosure
