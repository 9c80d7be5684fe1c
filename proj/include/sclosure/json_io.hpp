#ifndef SCLOSURE_JSON_IO_HPP
#define SCLOSURE_JSON_IO_HPP

#include "sclosure/briancon_skoda.hpp"
#include "sclosure/closure.hpp"
#include "sclosure/degree_bounds.hpp"
#include "sclosure/ideal_text.hpp"
#include "sclosure/jumping_numbers.hpp"
#include "sclosure/monomial_ideal.hpp"
#include "sclosure/multiplicity.hpp"
#include "sclosure/oracle.hpp"

#include "json.hpp"

#include <vector>

namespace sclosure {

// Integers that fit 64 bits are emitted as JSON numbers, anything bigger as a
// decimal string; rationals are always "a/b" strings.  Exactness survives the
// trip either way.
nlohmann::json int_to_json(const Int& v);
nlohmann::json rat_to_json(const Rat& v);

// {"nvars": n, "generators": [[e1..en]..], "meta": {"text": .., "is_zero": ..,
//  "is_unit": ..}}
nlohmann::json ideal_to_json(const MonomialIdeal& ideal, const VarTable& vars);

nlohmann::json closure_report_to_json(const ClosureReport& rep, const VarTable& vars);
nlohmann::json jumping_numbers_to_json(const std::vector<JumpingNumber>& jumps,
                                       const VarTable& vars);
nlohmann::json bs_report_to_json(const BSReport& rep, const VarTable& vars);
nlohmann::json degree_report_to_json(const DegreeBoundReport& rep, const VarTable& vars);
nlohmann::json oracle_witness_to_json(const OracleWitness& wit, const VarTable& vars);
nlohmann::json multiplicity_records_to_json(const std::vector<MultiplicityRecord>& records);

} // namespace sclosure

#endif
