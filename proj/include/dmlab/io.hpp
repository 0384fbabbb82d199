#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dmlab/graph.hpp"
#include "dmlab/labeling.hpp"
#include "dmlab/search.hpp"

namespace dmlab {

inline constexpr const char* kSchemaVersion = "dmlab/1";

enum class Scheme { Centered, Standard };

/// {"schema":"dmlab/1","order":n,"scheme":"centered"|"standard","labels":[...]}
struct LabelingDocument {
  Scheme scheme = Scheme::Centered;
  std::vector<Label> labels;

  static LabelingDocument of(const CenteredLabeling& lab) { return {Scheme::Centered, lab.labels}; }
  static LabelingDocument of(const StandardLabeling& lab) { return {Scheme::Standard, lab.labels}; }

  /// Converts standard documents on the way in; validates bijectivity for them.
  CenteredLabeling centered() const;

  friend bool operator==(const LabelingDocument&, const LabelingDocument&) = default;
};

std::string write_labeling_json(const LabelingDocument& doc);
/// Throws ParseError on malformed JSON, missing fields, non-integer labels,
/// a wrong schema tag or an order that disagrees with the label count.
LabelingDocument parse_labeling_json(std::string_view text);

std::string verification_json(const VerificationReport& report);
std::string search_outcome_json(const SearchOutcome& outcome, bool count_mode);

struct DotOptions {
  /// When set, x_i (0..m-1) and y_i (m..2m-1) are placed on separate ranks.
  std::optional<int> qw_m;
};

/// Undirected DOT document; node labels show label values when given.
std::string export_dot(const Graph& g, const CenteredLabeling* lab = nullptr, const DotOptions& opts = {});

}  // namespace dmlab
