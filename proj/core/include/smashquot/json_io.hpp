#pragma once

#include <string>

#include "smashquot/hopf.hpp"
#include "smashquot/hopf_image.hpp"

namespace smashquot {

// Generators serialize as [{"name":"q","order":12}] with order null meaning
// infinite; values serialize as exponent maps {"q":5}, omitted names meaning
// exponent zero.
std::string unit_group_to_json(const UnitGroupSpec& spec);
UnitGroupRef unit_group_from_json(const std::string& text);
std::string unit_value_to_json(const UnitValue& v);

QSpec qspec_from_json(const std::string& text);
std::string qspec_to_json(const QSpec& q);

// {"M":..,"N":..,"unit_group":{...},"G":[0,1,2],"N_basis":[[...],...],
//  "Phi":{"0":{"0":{},"1":{"w":1}},...}}  (basis index -> h-exponent -> value)
QuotientDatum datum_from_json(const std::string& text);
std::string datum_to_json(const QuotientDatum& d);

std::string group_table_to_json(const FiniteGroupTable& g);
FiniteGroupTable group_table_from_json(const std::string& text);

std::string hopf_to_json(const HopfSC& A);
HopfSC hopf_from_json(const std::string& text);

std::string hopf_image_result_to_json(const HopfImageResult& r);

}  // namespace smashquot
