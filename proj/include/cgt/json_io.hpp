#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cgt/diagrams.hpp"
#include "cgt/families.hpp"
#include "cgt/oracles.hpp"
#include "cgt/tower.hpp"
#include "cgt/wordproblem.hpp"

namespace cgt {

using json = nlohmann::json;

// Words are arrays of nonzero signed generator indices; alphabets are arrays
// of generator names (position = index). All decoders throw FormatError with
// a field diagnostic on malformed input.

json word_to_json(const Word& w);
Word word_from_json(const AlphabetRef& alphabet, const json& j);

json alphabet_to_json(const Alphabet& a);
AlphabetRef alphabet_from_json(const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json op_to_json(const ElementaryOp& op);
ElementaryOp op_from_json(const json& j);
json ops_to_json(const std::vector<ElementaryOp>& ops);
std::vector<ElementaryOp> ops_from_json(const json& j);

json null_sequence_to_json(const NullSequence& seq);
NullSequence null_sequence_from_json(const json& j);

json tower_to_json(const TowerInt& t);

json certificate_to_json(const ZCertificate& cert);

json diagram_to_json(const VanKampenDiagram& d);
VanKampenDiagram diagram_from_json(const json& j);

json validation_report_to_json(const ValidationReport& rep);

json dehn_profile_to_json(const std::vector<DehnProfileRow>& rows);
std::string dehn_profile_to_csv(const std::vector<DehnProfileRow>& rows);

json scaling_report_to_json(const std::vector<ScalingRow>& rows);
std::string scaling_report_to_csv(const std::vector<ScalingRow>& rows);

}  // namespace cgt
