#ifndef SEMPRIV_JSON_IO_HPP
#define SEMPRIV_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "sempriv/bounds.hpp"
#include "sempriv/channel.hpp"
#include "sempriv/frl.hpp"
#include "sempriv/joint_table.hpp"
#include "sempriv/oracle.hpp"

namespace sempriv {

using ordered_json = nlohmann::ordered_json;

/// {"axes":[{"name":...,"alphabet":[...]},...],"cells":[...row-major...]}
ordered_json joint_to_json(const JointTable& j);
JointTable joint_from_json(const ordered_json& doc);

/// Generic channel form: {"input_axes":[...],"output_axis":{...},"rows":[[...],...]}
ordered_json channel_to_json(const Channel& ch);

/// {"u_alphabet":[...],"rows":{"(s,f)":[...]},"leakage":...,"utility_semantic":...,
///  "rr_prob":..., "epsilon_clamped":..., "degenerate_s":...}
ordered_json mechanism_to_json(const Mechanism& m);

/// Flat report; fields that were not computed are emitted as null.
ordered_json bounds_report_to_json(const BoundsReport& r);

ordered_json oracle_result_to_json(const OracleResult& r, bool include_channel);

ordered_json sandwich_report_to_json(const SandwichReport& r);

}  // namespace sempriv

#endif
