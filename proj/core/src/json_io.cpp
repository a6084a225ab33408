#include "sempriv/json_io.hpp"

#include "sempriv/errors.hpp"

namespace sempriv {

namespace {

ordered_json axis_to_json(const Axis& ax) {
  return ordered_json{{"name", ax.name}, {"alphabet", ax.alphabet}};
}

ordered_json opt(const std::optional<double>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json joint_to_json(const JointTable& j) {
  ordered_json axes = ordered_json::array();
  for (const auto& ax : j.axes()) axes.push_back(axis_to_json(ax));
  return ordered_json{{"axes", std::move(axes)}, {"cells", j.cells()}};
}

JointTable joint_from_json(const ordered_json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("axes") || !doc.contains("cells")) {
      throw data_error("joint json: expected object with 'axes' and 'cells'");
    }
    std::vector<Axis> axes;
    for (const auto& ax : doc.at("axes")) {
      axes.push_back(Axis{ax.at("name").get<std::string>(),
                          ax.at("alphabet").get<std::vector<std::string>>()});
    }
    auto cells = doc.at("cells").get<std::vector<double>>();
    return JointTable(std::move(axes), std::move(cells));
  } catch (const nlohmann::json::exception& e) {
    throw data_error(std::string("joint json: ") + e.what());
  } catch (const validation_error& e) {
    throw data_error(std::string("joint json: ") + e.what());
  }
}

ordered_json channel_to_json(const Channel& ch) {
  ordered_json inputs = ordered_json::array();
  for (const auto& ax : ch.input_axes()) inputs.push_back(axis_to_json(ax));
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < ch.input_count(); ++r) {
    auto row = ch.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  return ordered_json{{"input_axes", std::move(inputs)},
                      {"output_axis", axis_to_json(ch.output_axis())},
                      {"rows", std::move(rows)}};
}

ordered_json mechanism_to_json(const Mechanism& m) {
  const auto& inputs = m.channel.input_axes();
  ordered_json rows = ordered_json::object();
  std::size_t r = 0;
  for (const auto& s_label : inputs[0].alphabet) {
    for (const auto& f_label : inputs[1].alphabet) {
      auto row = m.channel.row(r++);
      rows["(" + s_label + "," + f_label + ")"] = std::vector<double>(row.begin(), row.end());
    }
  }
  return ordered_json{{"u_alphabet", m.channel.output_axis().alphabet},
                      {"rows", std::move(rows)},
                      {"leakage", m.leakage},
                      {"utility_semantic", m.utility_semantic},
                      {"rr_prob", m.rr_prob},
                      {"epsilon_clamped", m.epsilon_clamped},
                      {"degenerate_s", m.degenerate_s}};
}

ordered_json bounds_report_to_json(const BoundsReport& r) {
  return ordered_json{{"epsilon", r.epsilon},
                      {"alpha", opt(r.alpha)},
                      {"L_h1", r.L_h1},
                      {"L_h2", opt(r.L_h2)},
                      {"L_h2_clamped", opt(r.L_h2_clamped)},
                      {"upper_h_eps", r.upper_h_eps},
                      {"tight", r.tight},
                      {"degenerate_s", r.degenerate_s},
                      {"util_L1", opt(r.util_L1)},
                      {"util_L2", opt(r.util_L2)},
                      {"util_L2_clamped", opt(r.util_L2_clamped)},
                      {"util_L3", opt(r.util_L3)},
                      {"util_upper", opt(r.util_upper)},
                      {"gap", opt(r.gap)},
                      {"corollary2_upper", opt(r.corollary2_upper)},
                      {"H_S", r.H_S},
                      {"H_F_given_S", r.H_F_given_S},
                      {"H_S_given_F", r.H_S_given_F},
                      {"I_S_F", r.I_S_F},
                      {"H_F_given_H", opt(r.H_F_given_H)},
                      {"H_H_given_F", opt(r.H_H_given_F)}};
}

ordered_json oracle_result_to_json(const OracleResult& r, bool include_channel) {
  ordered_json doc{{"value", r.value},
                   {"leakage", r.leakage},
                   {"restarts_used", r.restarts_used},
                   {"seed", r.seed},
                   {"u_size", r.u_size}};
  if (include_channel) doc["channel"] = channel_to_json(r.channel);
  return doc;
}

ordered_json sandwich_report_to_json(const SandwichReport& r) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back(ordered_json{{"epsilon", row.epsilon},
                                {"lower", row.lower},
                                {"estimate", row.estimate},
                                {"upper", row.upper},
                                {"leakage", row.leakage},
                                {"lower_margin", row.lower_margin},
                                {"upper_margin", row.upper_margin},
                                {"ok", row.ok}});
  }
  return ordered_json{{"passed", r.passed}, {"rows", std::move(rows)}};
}

}  // namespace sempriv
