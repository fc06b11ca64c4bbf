#pragma once

#include <optional>

#include <json.hpp>

#include "indel/bounds.hpp"
#include "indel/constant_weight.hpp"
#include "indel/constructions.hpp"
#include "indel/oracle.hpp"

namespace indel {

using Json = nlohmann::ordered_json;

/// {bound, applicable, value_num, value_den, value, value_decimal, exactness,
///  params}; the value fields are absent when not applicable.
Json bound_record(const BoundValue& bv, const CodeParams& p,
                  std::optional<ListParams> lp);

Json cw_answer_record(const CWAnswer& a);

Json oracle_record(const OracleResult& r, const CodeParams& p,
                   std::optional<std::uint64_t> seed);

/// The instance document embeds the code and family text formats.
Json tightness_record(const TightnessInstance& inst);

Json report_record(const VerificationReport& report);

} // namespace indel
