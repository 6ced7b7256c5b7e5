#pragma once

#include <string>

#include "flatdirac/dirac.hpp"
#include "flatdirac/eta.hpp"
#include "flatdirac/isospec.hpp"
#include "flatdirac/spin_structure.hpp"
#include "flatdirac/zp.hpp"

#include "json.hpp"

namespace flatdirac {

using json = nlohmann::json;

// group description files: {"n": int, "generators": [{"perm": [1-based],
// "signs": [..], "translation": ["p/q", ...]}]}
json group_to_json(const BieberbachGroup& g);
BieberbachGroup group_from_json(const json& j);

json structure_to_json(const SpinStructure& e);
SpinStructure structure_from_json(const json& j);

json spectrum_to_json(const SpectrumTable& t);
SpectrumTable spectrum_from_json(const json& j);

json eta_report_to_json(const EtaReport& r);

json zp_rows_to_json(const std::vector<ZpRow>& rows);
std::string zp_rows_to_csv(const std::vector<ZpRow>& rows);
std::string zp_rows_to_markdown(const std::vector<ZpRow>& rows);

json table1_to_json(const std::vector<Table1Row>& rows);
std::string table1_to_markdown(const std::vector<Table1Row>& rows);

/// Registry name or a JSON file path.
BieberbachGroup resolve_group(const std::string& spec);

}  // namespace flatdirac
