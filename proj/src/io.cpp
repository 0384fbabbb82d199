#include "dmlab/io.hpp"

#include "json.hpp"
#include <sstream>

#include "dmlab/error.hpp"

namespace dmlab {

using ordered_json = nlohmann::ordered_json;

CenteredLabeling LabelingDocument::centered() const {
  if (scheme == Scheme::Centered) return CenteredLabeling{labels};
  return from_standard(StandardLabeling{labels});
}

std::string write_labeling_json(const LabelingDocument& doc) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["order"] = doc.labels.size();
  j["scheme"] = doc.scheme == Scheme::Centered ? "centered" : "standard";
  j["labels"] = doc.labels;
  return j.dump();
}

LabelingDocument parse_labeling_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("labeling JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("labeling JSON: top level must be an object");
  if (j.contains("schema") && j["schema"] != kSchemaVersion)
    throw ParseError("labeling JSON: unsupported schema " + j["schema"].dump());
  for (const char* key : {"order", "scheme", "labels"})
    if (!j.contains(key)) throw ParseError(std::string("labeling JSON: missing field '") + key + "'");
  if (!j["order"].is_number_integer()) throw ParseError("labeling JSON: 'order' must be an integer");
  LabelingDocument doc;
  const auto& scheme = j["scheme"];
  if (scheme == "centered") doc.scheme = Scheme::Centered;
  else if (scheme == "standard") doc.scheme = Scheme::Standard;
  else throw ParseError("labeling JSON: 'scheme' must be \"centered\" or \"standard\"");
  if (!j["labels"].is_array()) throw ParseError("labeling JSON: 'labels' must be an array");
  for (const auto& v : j["labels"]) {
    if (!v.is_number_integer()) throw ParseError("labeling JSON: labels must be integers, got " + v.dump());
    doc.labels.push_back(v.get<Label>());
  }
  if (j["order"].get<long long>() != static_cast<long long>(doc.labels.size()))
    throw ParseError("labeling JSON: 'order' disagrees with the number of labels");
  return doc;
}

std::string verification_json(const VerificationReport& report) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["pass"] = report.pass;
  j["bijective"] = report.bijective;
  j["target"] = report.target;
  j["weights"] = report.weights;
  if (report.first_violation) j["first_violation"] = *report.first_violation;
  else j["first_violation"] = nullptr;
  return j.dump();
}

std::string search_outcome_json(const SearchOutcome& outcome, bool count_mode) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["verdict"] = to_string(outcome.verdict);
  if (count_mode) {
    j["folded_count"] = outcome.folded_count;
    j["raw_count"] = outcome.raw_count;
  }
  if (outcome.labeling) j["labeling"] = ordered_json::parse(write_labeling_json(LabelingDocument::of(*outcome.labeling)));
  j["stats"] = {{"nodes", outcome.stats.nodes},
                {"closure_prunes", outcome.stats.closure_prunes},
                {"interval_prunes", outcome.stats.interval_prunes},
                {"forced_conflicts", outcome.stats.forced_conflicts},
                {"prefilter_ruled_out", outcome.stats.prefilter_ruled_out}};
  return j.dump();
}

std::string export_dot(const Graph& g, const CenteredLabeling* lab, const DotOptions& opts) {
  if (lab && lab->order() != g.order())
    throw PreconditionError("export_dot: labeling order does not match graph order");
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (lab) out << " [label=\"" << lab->labels[v] << "\"]";
    out << ";\n";
  }
  if (opts.qw_m) {
    const int m = *opts.qw_m;
    for (int row = 0; row < 2; ++row) {
      out << "  { rank=same;";
      for (int i = 0; i < m && row * m + i < g.order(); ++i) out << ' ' << row * m + i << ';';
      out << " }\n";
    }
  }
  for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace dmlab
