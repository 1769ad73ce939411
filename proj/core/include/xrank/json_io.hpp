#pragma once

#include <string>

#include "xrank/binary.hpp"
#include "xrank/bounds.hpp"
#include "xrank/decompose.hpp"
#include "xrank/dimension.hpp"
#include "xrank/typical.hpp"
#include "xrank/variety.hpp"

namespace xrank {

// Serialized JSON documents. Floats use the shortest round-trip
// representation; exact rationals are emitted as "p/q" strings in decimal
// digits. indent < 0 means compact output.

std::string ambient_point_to_json(const AmbientPoint& point, int indent = -1);
AmbientPoint ambient_point_from_json(const std::string& text);

std::string decomposition_to_json(const Decomposition& dec, int indent = -1);
// Needs the variety/field context the bare term list does not carry.
Decomposition decomposition_from_json(const std::string& text, const VarietySpec& spec,
                                      Field field);

std::string split_report_to_json(const SplitReport& report, int indent = -1);
std::string generic_rank_to_json(const GenericRankResult& result, int indent = -1);
std::string terracini_to_json(const TerraciniEstimate& estimate, int indent = -1);
std::string bound_report_to_json(const BoundReport& report, int indent = -1);
std::string waring_rows_to_json(const std::vector<WaringTableRow>& rows, int indent = -1);
std::string typical_report_to_json(const TypicalRankReport& report, int indent = -1);
std::string binary_rank_to_json(const RankCertificate& cert, const BinaryForm& form,
                                const BinaryDecomposition& dec, int indent = -1);

}  // namespace xrank
