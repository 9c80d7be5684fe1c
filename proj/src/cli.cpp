#include "sclosure/cli.hpp"

#include "sclosure/briancon_skoda.hpp"
#include "sclosure/closure.hpp"
#include "sclosure/degree_bounds.hpp"
#include "sclosure/errors.hpp"
#include "sclosure/ideal_text.hpp"
#include "sclosure/json_io.hpp"
#include "sclosure/jumping_numbers.hpp"
#include "sclosure/mixed_power.hpp"
#include "sclosure/multiplicity.hpp"
#include "sclosure/oracle.hpp"
#include "sclosure/rational_power.hpp"
#include "sclosure/verify.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace sclosure {
namespace {

struct Options {
    std::string ideal_text;
    std::string vars_csv;
    std::size_t nvars = 0;  // 0 = infer from the ideal text
    std::string s_text = "1";
    std::string t_text = "1";
    std::string alpha_text = "1";
    std::string from_text = "1";
    std::string to_text = "2";
    std::string p_text = "2";
    std::string q_text = "2";
    std::string nmax_text = "4";
    unsigned long kmax = 4;
    std::string cbound_text;  // empty = 2 * max exponent
    std::string monomial_text;
    std::string upper = "auto";  // auto | on | off
    std::string suite = "all";
    unsigned long seed = 0;
    std::string output = "plain";
    std::string out_file;
};

Int parse_int_flag(const std::string& text, const std::string& flag) {
    const Rat r = parse_rational(text);
    if (r.get_den() != 1)
        throw ParseError("not_an_integer", 0, flag + " needs an integer, got '" + text + "'");
    return r.get_num();
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> names;
    std::string current;
    for (const char c : csv) {
        if (c == ',') {
            names.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            current += c;
        }
    }
    names.push_back(current);
    return names;
}

SessionConfig make_session(const Options& o) {
    SessionConfig cfg;
    if (!o.vars_csv.empty()) {
        cfg.var_names = split_names(o.vars_csv);
        cfg.nvars = cfg.var_names.size();
        if (o.nvars != 0 && o.nvars != cfg.nvars)
            throw ParseError("vars_count_mismatch", 0,
                             "--nvars disagrees with the number of names in --vars");
    } else if (o.nvars != 0) {
        cfg.nvars = o.nvars;
    } else {
        std::string scan = o.ideal_text;
        if (!o.monomial_text.empty())
            scan = scan.empty() ? o.monomial_text : scan + ", " + o.monomial_text;
        cfg.nvars = infer_nvars(scan);
    }
    cfg.p = parse_int_flag(o.p_text, "--p");
    if (!is_prime(cfg.p))
        throw MathDomainError("p_not_prime", "--p must be a prime, got " + cfg.p.get_str());
    cfg.output = o.output;
    cfg.seed = o.seed;
    return cfg;
}

VarTable make_vars(const SessionConfig& cfg) {
    if (!cfg.var_names.empty()) return VarTable(cfg.nvars, cfg.var_names);
    return VarTable(cfg.nvars);
}

void emit(const Options& o, const std::string& plain, const nlohmann::json& j) {
    const std::string text = o.output == "json" ? j.dump(2) + "\n" : plain;
    if (o.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.out_file);
    if (!out) throw ParseError("bad_output_file", 0, "cannot open '" + o.out_file + "'");
    out << text;
}

std::string join_monomials(const std::vector<ExponentVector>& ms, const VarTable& vars) {
    if (ms.empty()) return "(none)";
    std::string joined;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i > 0) joined += ", ";
        joined += format_monomial(ms[i], vars);
    }
    return joined;
}

// The env var is an advisory worker-count hint; every engine path is
// single-threaded today, so a valid value is accepted and unused.
void read_thread_hint() {
    const char* env = std::getenv("SCLOSURE_THREADS");
    if (env == nullptr) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        std::cerr << "warning: ignoring SCLOSURE_THREADS='" << env
                  << "' (want a positive integer)\n";
}

void do_closure(const Options& o, bool iterate) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MonomialIdeal ideal = parse_ideal(o.ideal_text, vars);
    const Rat s = parse_rational(o.s_text);
    const ClosureReport rep = iterate ? s_closure(ideal, s) : weak_s_closure(ideal, s);
    std::ostringstream plain;
    plain << format_ideal(rep.result, vars) << "\n";
    plain << "new generators: " << join_monomials(rep.new_generators, vars) << "\n";
    if (iterate) plain << "iterations: " << rep.iterations << "\n";
    emit(o, plain.str(), closure_report_to_json(rep, vars));
}

void do_integral_closure(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MonomialIdeal closed = integral_closure(parse_ideal(o.ideal_text, vars));
    emit(o, format_ideal(closed, vars) + "\n", ideal_to_json(closed, vars));
}

void do_rational_power(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MonomialIdeal result =
        rational_power(parse_ideal(o.ideal_text, vars), parse_rational(o.alpha_text));
    emit(o, format_ideal(result, vars) + "\n", ideal_to_json(result, vars));
}

void do_mixed_power(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MixedPowerSpec spec(parse_rational(o.s_text), cfg.p,
                              parse_int_flag(o.q_text, "--q"));
    const MonomialIdeal result = mixed_power(parse_ideal(o.ideal_text, vars), spec);
    emit(o, format_ideal(result, vars) + "\n", ideal_to_json(result, vars));
}

void do_jumping_numbers(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const std::vector<JumpingNumber> jumps = jumping_numbers(
        parse_ideal(o.ideal_text, vars), parse_rational(o.from_text), parse_rational(o.to_text));
    std::string plain;
    if (jumps.empty()) {
        plain = "(none)\n";
    } else {
        for (std::size_t i = 0; i < jumps.size(); ++i) {
            if (i > 0) plain += ", ";
            plain += format_rational(jumps[i].s);
        }
        plain += "\n";
    }
    emit(o, plain, jumping_numbers_to_json(jumps, vars));
}

void do_bs_check(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const BSQuery query =
        make_bs_query(parse_ideal(o.ideal_text, vars), parse_rational(o.t_text),
                      parse_rational(o.s_text), parse_int_flag(o.nmax_text, "--nmax"));
    const BSReport rep = briancon_skoda_check(query);
    std::ostringstream plain;
    plain << "r: " << rep.query.r.get_str() << "\n";
    for (const BSRow& row : rep.rows)
        plain << "n=" << row.n.get_str() << ": " << (row.holds ? "holds" : "fails") << "\n";
    plain << "all: " << (rep.all_hold ? "holds" : "fails") << "\n";
    emit(o, plain.str(), bs_report_to_json(rep, vars));
}

void do_collapse(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MonomialIdeal ideal = parse_ideal(o.ideal_text, vars);
    const Rat s = parse_rational(o.s_text);
    const Int first = tight_closure_collapse(ideal, s);
    const Int threshold = collapse_threshold(ideal, s);
    emit(o, first.get_str() + "\n",
         nlohmann::json{{"collapse_power", int_to_json(first)},
                        {"threshold", int_to_json(threshold)}});
}

void do_degree_check(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MonomialIdeal ideal = parse_ideal(o.ideal_text, vars);
    bool check_upper = false;
    if (o.upper == "on")
        check_upper = true;
    else if (o.upper == "auto")
        check_upper = ideal.is_m_primary();
    const DegreeBoundReport rep = degree_bound_check(ideal, parse_rational(o.s_text), check_upper);
    std::ostringstream plain;
    plain << "delta_min: " << format_monomial(rep.bounds.delta_min, vars) << "\n";
    plain << "delta_max: " << format_monomial(rep.bounds.delta_max, vars) << "\n";
    plain << "lower: " << (rep.lower_holds ? "holds" : "fails") << "\n";
    plain << "upper: "
          << (rep.upper_checked ? (rep.upper_holds ? "holds" : "fails") : "skipped") << "\n";
    emit(o, plain.str(), degree_report_to_json(rep, vars));
}

void do_multiplicity(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const auto records = s_multiplicity_sequence(parse_ideal(o.ideal_text, vars),
                                                 parse_rational(o.s_text), cfg.p, o.kmax);
    std::ostringstream plain;
    for (const MultiplicityRecord& rec : records)
        plain << "q=" << rec.q.get_str() << " colength=" << rec.colength.get_str()
              << " normalized=" << format_rational(rec.normalized) << "\n";
    emit(o, plain.str(), multiplicity_records_to_json(records));
}

void do_oracle(const Options& o) {
    const SessionConfig cfg = make_session(o);
    const VarTable vars = make_vars(cfg);
    const MonomialIdeal ideal = parse_ideal(o.ideal_text, vars);
    const ExponentVector probe = parse_monomial(o.monomial_text, vars);
    const Int c_bound = o.cbound_text.empty() ? Int(2 * ideal.max_exponent())
                                              : parse_int_flag(o.cbound_text, "--cbound");
    const OracleWitness wit =
        definition_oracle(ideal, parse_rational(o.s_text), probe, cfg.p, o.kmax, c_bound);
    std::ostringstream plain;
    const char* verdict = wit.verdict == OracleVerdict::member_evidence ? "member_evidence"
                          : wit.verdict == OracleVerdict::non_member_evidence
                              ? "non_member_evidence"
                              : "inconclusive";
    plain << "verdict: " << verdict << "\n";
    plain << "c: "
          << (wit.verdict == OracleVerdict::member_evidence ? format_monomial(wit.c, vars)
                                                            : "(none)")
          << "\n";
    plain << "q:";
    for (const Int& q : wit.checked_q) plain << " " << q.get_str();
    plain << "\n";
    emit(o, plain.str(), oracle_witness_to_json(wit, vars));
}

void do_verify(const Options& o, int& exit_code) {
    const std::vector<SuiteResult> results = run_suites(o.suite, o.seed);
    std::ostringstream plain;
    nlohmann::json suites = nlohmann::json::array();
    bool all_ok = true;
    for (const SuiteResult& res : results) {
        if (res.ok()) {
            plain << res.name << ": ok (" << res.checks << " checks)\n";
        } else {
            all_ok = false;
            plain << res.name << ": FAIL (" << res.failures.size() << " of " << res.checks
                  << " checks)\n";
            for (const std::string& f : res.failures) plain << "  - " << f << "\n";
        }
        suites.push_back(nlohmann::json{
            {"name", res.name}, {"checks", res.checks}, {"failures", res.failures}});
    }
    emit(o, plain.str(), nlohmann::json{{"suites", suites}, {"ok", all_ok}});
    if (!all_ok) exit_code = 3;
}

void add_ring_flags(CLI::App* sub, Options& o, bool ideal_required) {
    auto* ideal = sub->add_option("--ideal", o.ideal_text,
                                  "generators, e.g. \"x^3, x*y^2\" (empty = zero ideal)");
    if (ideal_required) ideal->required();
    sub->add_option("--nvars", o.nvars, "ring width (default: inferred from the text)");
    sub->add_option("--vars", o.vars_csv, "comma-separated variable names");
    sub->add_option("--output", o.output, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    sub->add_option("--out", o.out_file, "write output to this file instead of stdout");
}

} // namespace

int run_cli(int argc, char** argv) {
    read_thread_hint();
    Options o;
    int exit_code = 0;

    CLI::App app{"exact closure arithmetic for monomial ideals"};
    app.require_subcommand(1);

    auto* closure = app.add_subcommand("closure", "weak s-closure I + I_s");
    add_ring_flags(closure, o, true);
    closure->add_option("--s", o.s_text, "rate s >= 1, integer or a/b")->required();
    closure->callback([&o] { do_closure(o, false); });

    auto* iterated = app.add_subcommand("s-closure", "iterate the weak closure to its fixed point");
    add_ring_flags(iterated, o, true);
    iterated->add_option("--s", o.s_text, "rate s >= 1, integer or a/b")->required();
    iterated->callback([&o] { do_closure(o, true); });

    auto* integral = app.add_subcommand("integral-closure", "integral closure");
    add_ring_flags(integral, o, true);
    integral->callback([&o] { do_integral_closure(o); });

    auto* ratpow = app.add_subcommand("rational-power", "rational power I_alpha");
    add_ring_flags(ratpow, o, true);
    ratpow->add_option("--alpha", o.alpha_text, "scale alpha >= 0, integer or a/b")->required();
    ratpow->callback([&o] { do_rational_power(o); });

    auto* mixed = app.add_subcommand("mixed-power", "I^ceil(s*q) + I^[q]");
    add_ring_flags(mixed, o, true);
    mixed->add_option("--s", o.s_text, "rate s >= 1")->required();
    mixed->add_option("--p", o.p_text, "characteristic (prime, default 2)");
    mixed->add_option("--q", o.q_text, "prime power p^k")->required();
    mixed->callback([&o] { do_mixed_power(o); });

    auto* jumps = app.add_subcommand("jumping-numbers", "closure jumps in [from, to)");
    add_ring_flags(jumps, o, true);
    jumps->add_option("--from", o.from_text, "scan start, >= 1")->required();
    jumps->add_option("--to", o.to_text, "scan end (exclusive)")->required();
    jumps->callback([&o] { do_jumping_numbers(o); });

    auto* bs = app.add_subcommand("bs-check", "shifted-power containment table");
    add_ring_flags(bs, o, true);
    bs->add_option("--t", o.t_text, "inner rate, 1 <= t < s")->required();
    bs->add_option("--s", o.s_text, "outer rate")->required();
    bs->add_option("--nmax", o.nmax_text, "largest power to test (default 4)");
    bs->callback([&o] { do_bs_check(o); });

    auto* collapse = app.add_subcommand("collapse", "least n with closure(I^n) = I^n");
    add_ring_flags(collapse, o, true);
    collapse->add_option("--s", o.s_text, "rate s > 1")->required();
    collapse->callback([&o] { do_collapse(o); });

    auto* degree = app.add_subcommand("degree-check", "closure generators against degree boxes");
    add_ring_flags(degree, o, true);
    degree->add_option("--s", o.s_text, "rate s >= 1")->required();
    degree->add_option("--upper", o.upper, "upper half: auto, on, off (default auto)")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    degree->callback([&o] { do_degree_check(o); });

    auto* mult = app.add_subcommand("multiplicity", "normalized colength sequence");
    add_ring_flags(mult, o, true);
    mult->add_option("--s", o.s_text, "rate s >= 1")->required();
    mult->add_option("--p", o.p_text, "characteristic (prime, default 2)");
    mult->add_option("--kmax", o.kmax, "records for q = p^1..p^kmax (default 4)");
    mult->callback([&o] { do_multiplicity(o); });

    auto* oracle = app.add_subcommand("oracle", "definition-level membership evidence");
    add_ring_flags(oracle, o, true);
    oracle->add_option("--s", o.s_text, "rate s >= 1")->required();
    oracle->add_option("--monomial", o.monomial_text, "candidate monomial")->required();
    oracle->add_option("--p", o.p_text, "characteristic (prime, default 2)");
    oracle->add_option("--kmax", o.kmax, "check q = p^1..p^kmax (default 4)");
    oracle->add_option("--cbound", o.cbound_text,
                       "multiplier box edge (default 2 * max exponent)");
    oracle->callback([&o] { do_oracle(o); });

    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", o.suite,
                       "all, monomial-core, newton-geometry, closure-engine, multiplicity")
        ->check(CLI::IsMember({"all", "monomial-core", "newton-geometry", "closure-engine",
                               "multiplicity"}));
    verify->add_option("--seed", o.seed, "suite seed (default 0)");
    verify->add_option("--output", o.output, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    verify->add_option("--out", o.out_file, "write output to this file instead of stdout");
    verify->callback([&o, &exit_code] { do_verify(o, exit_code); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    } catch (const MathDomainError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace sclosure
