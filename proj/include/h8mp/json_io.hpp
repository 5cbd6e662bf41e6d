#pragma once

#include <filesystem>
#include <string>

#include "h8mp/actions.hpp"
#include "h8mp/classify.hpp"
#include "h8mp/coquasi.hpp"
#include "h8mp/presentations.hpp"
#include "h8mp/ybe.hpp"

// Single-header nlohmann/json from vendor/.
#include <json.hpp>

namespace h8mp {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldElement& f);
FieldElement field_from_json(const Json& j);

Json elt_to_json(const Elt& e);
Elt elt_from_json(const Json& j);

Json hopf_to_json(const HopfData& H);
HopfData hopf_from_json(const Json& j);

Json action_to_json(const ActionTable& a);
ActionTable action_from_json(const Json& j);

Json matched_pair_to_json(const MatchedPair& mp);
MatchedPair matched_pair_from_json(const Json& j);

Json iso_to_json(const HopfIso& iso);
HopfIso iso_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json transcript_to_json(const SolverTranscript& t);

Json braid_report_to_json(const BraidOperator& r, const BraidCheck& braid, bool involutive,
                          const CriteriaReport& criteria, const Matrix& inverse);

Json classification_to_json(const Classification& c);

Json correspondence_to_json(const CorrespondenceReport& rep);

Json axiom_report_to_json(const AxiomReport& rep);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

}  // namespace h8mp
