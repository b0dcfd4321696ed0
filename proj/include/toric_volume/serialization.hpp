#pragma once

// Text and JSON forms for weight sequences, germs, intersection matrices,
// factorizations and accumulation certificates. Numbers are always exact:
// integers as JSON integers (or decimal strings when they exceed 64 bits),
// rationals as "num/den" strings.

#include "toric_volume/accumulation.hpp"
#include "toric_volume/blowup_chain.hpp"
#include "toric_volume/germ.hpp"
#include "toric_volume/intersection.hpp"
#include "toric_volume/lattice_fan.hpp"
#include "toric_volume/volume.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Json = nlohmann::ordered_json;

/// "p1:q1,p2:q2,..." -> pairs (unvalidated apart from syntax).
std::vector<LatticeVector> parse_weight_pairs(std::string_view text);
std::string format_weights(const WeightSequence& ws);

Json integer_to_json(const Integer& value);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);

Json weights_to_json(const WeightSequence& ws);
std::vector<LatticeVector> weight_pairs_from_json(const Json& j);

/// {"b1_sq": "a/b", "l": int, "vol_x": "a/b", "kb_dot_b2": "a/b", "label": string}
Json germ_to_json(const GermParams& germ);
RawGermParams raw_germ_from_json(const Json& j);
GermParams germ_from_json(const Json& j);
GermParams load_germ_file(const std::filesystem::path& path);

Json read_json_file(const std::filesystem::path& path);

/// Entries are {"num": string, "den": string} or "undefined".
Json matrix_to_json(const IntersectionMatrix& m);
Json volume_report_to_json(const VolumeReport& report);
Json factorization_to_json(const std::vector<FactorizationStep>& steps);

Json certificate_to_json(const AccumulationCertificate& cert);
AccumulationCertificate certificate_from_json(const Json& j);

} // namespace toric
