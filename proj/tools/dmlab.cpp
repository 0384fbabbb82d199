// dmlab: command line front end. Graphs travel as graph6, labelings as JSON,
// tables as TSV. Exit codes: 0 success, 1 negative verdict, 2 usage, input
// or operational error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "dmlab/constructive.hpp"
#include "dmlab/enumerate.hpp"
#include "dmlab/error.hpp"
#include "dmlab/io.hpp"
#include "dmlab/kfk.hpp"
#include "dmlab/qw.hpp"
#include "dmlab/search.hpp"
#include "dmlab/spectral.hpp"
#include "json.hpp"

namespace {

using namespace dmlab;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

// "-" is stdin, an existing path is read, anything else is taken literally.
std::string resolve_text(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  std::error_code ec;
  if (std::filesystem::exists(arg, ec)) {
    std::ifstream f(arg);
    if (!f) throw ParseError("cannot open " + arg);
    return slurp(f);
  }
  return arg;
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line != "\r") return line;
  throw ParseError("no graph6 line in input");
}

Graph load_graph(const std::string& arg) { return parse_graph6(first_line(resolve_text(arg))); }

CenteredLabeling load_labels(const std::string& arg) {
  return parse_labeling_json(resolve_text(arg)).centered();
}

QWSequence load_sequence(const std::string& profile, const std::string& sequence) {
  if (!profile.empty() && !sequence.empty()) throw ParseError("give either --profile or --sequence");
  if (!profile.empty()) return profile_to_sequence(parse_profile(profile));
  if (!sequence.empty()) {
    std::vector<int> bits;
    for (char c : sequence) {
      if (c == '0' || c == '1') bits.push_back(c - '0');
      else if (c != ',' && c != ' ' && c != '[' && c != ']')
        throw ParseError("sequence: unexpected character '" + std::string(1, c) + "'");
    }
    return validate_sequence(bits);
  }
  throw ParseError("a QW graph needs --profile or --sequence");
}

unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DMLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::min<unsigned>(static_cast<unsigned>(v), hw);
  }
  return hw;
}

std::vector<ordered_json> segments_json(const QWSequence& s) {
  std::vector<ordered_json> out;
  for (const auto& seg : segments(s))
    out.push_back({{"index", seg.index}, {"start", seg.start}, {"length", seg.length},
                   {"type", to_string(seg.type)}});
  return out;
}

int cmd_qw_build(const std::string& profile, const std::string& sequence) {
  std::cout << write_graph6(build_qw(load_sequence(profile, sequence))) << '\n';
  return kOk;
}

int cmd_qw_classify(const std::string& profile, const std::string& sequence) {
  const auto s = load_sequence(profile, sequence);
  const auto c = classify(s);
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["profile"] = sequence_to_profile(s);
  j["verdict"] = c.distance_magic ? "DistanceMagic" : "NotDistanceMagic";
  j["reasons"] = c.reasons;
  j["segments"] = segments_json(s);
  std::cout << j.dump() << '\n';
  std::cerr << "QW(" << format_profile(sequence_to_profile(s)) << "): "
            << (c.distance_magic ? "distance magic" : "not distance magic") << '\n';
  return c.distance_magic ? kOk : kNegative;
}

int cmd_label_construct(const std::string& profile, const std::string& sequence, bool tilde,
                        const std::string& scheme) {
  const auto s = load_sequence(profile, sequence);
  const auto lab = tilde ? construct_tilde_labeling(s) : construct_labeling(s);
  if (scheme == "standard") std::cout << write_labeling_json(LabelingDocument::of(to_standard(lab))) << '\n';
  else std::cout << write_labeling_json(LabelingDocument::of(lab)) << '\n';
  return kOk;
}

int cmd_label_verify(const std::string& graph, const std::string& labels) {
  const auto g = load_graph(graph);
  const auto doc = parse_labeling_json(resolve_text(labels));
  VerificationReport report = doc.scheme == Scheme::Centered
                                  ? verify(g, CenteredLabeling{doc.labels})
                                  : verify_standard(g, StandardLabeling{doc.labels});
  std::cout << verification_json(report) << '\n';
  std::cerr << (report.pass ? "distance magic labeling" : "not a distance magic labeling");
  if (report.first_violation) std::cerr << " (first violation at vertex " << *report.first_violation << ")";
  std::cerr << '\n';
  return report.pass ? kOk : kNegative;
}

int cmd_label_convert(const std::string& labels, const std::string& to) {
  const auto doc = parse_labeling_json(resolve_text(labels));
  const auto centered = doc.centered();
  if (to == "standard") std::cout << write_labeling_json(LabelingDocument::of(to_standard(centered))) << '\n';
  else std::cout << write_labeling_json(LabelingDocument::of(centered)) << '\n';
  return kOk;
}

int cmd_search(const std::string& graph, bool count, bool no_prefilter, std::uint64_t budget_nodes,
               double budget_secs, bool static_order) {
  const auto g = load_graph(graph);
  SearchOptions opts;
  opts.mode = count ? SearchMode::CountAll : SearchMode::FindOne;
  opts.prefilter = !no_prefilter;
  if (budget_nodes > 0) opts.node_budget = budget_nodes;
  if (budget_secs > 0) opts.time_budget_secs = budget_secs;
  if (static_order) opts.order = VertexOrder::Static;
  const auto out = find_labeling(g, opts);
  std::cerr << to_string(out.verdict) << " after " << out.stats.nodes << " nodes\n";
  if (out.verdict == SearchVerdict::BudgetExhausted) {
    std::cout << "BudgetExhausted\n";
    return kError;
  }
  if (count) {
    std::cout << search_outcome_json(out, true) << '\n';
    return out.raw_count > 0 ? kOk : kNegative;
  }
  if (out.verdict == SearchVerdict::Found) {
    std::cout << write_labeling_json(LabelingDocument::of(*out.labeling)) << '\n';
    return kOk;
  }
  std::cout << "NotFound\n";
  return kNegative;
}

int cmd_filter(const std::string& input) {
  std::string text = resolve_text(input);
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  // Parse up front so malformed input fails before any output is written.
  std::vector<Graph> graphs;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    try {
      graphs.push_back(parse_graph6(lines[k]));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  std::vector<std::string> rows(graphs.size());
  std::vector<char> candidate(graphs.size(), 0);
  std::vector<std::string> failures(graphs.size());
  const unsigned workers = std::min<unsigned>(worker_count(), std::max<std::size_t>(1, graphs.size()));
  auto work = [&](unsigned w) {
    for (std::size_t k = w; k < graphs.size(); k += workers) {
      try {
        const auto v = corollary_filter(graphs[k]);
        candidate[k] = v.candidate;
        rows[k] = lines[k] + '\t' + (v.candidate ? "Candidate" : "RuledOut") + '\t' + v.reason;
      } catch (const std::exception& e) {
        failures[k] = "line " + std::to_string(k + 1) + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (const auto& f : failures)
    if (!f.empty()) throw PreconditionError(f);
  bool any = false;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::cout << rows[k] << '\n';
    any = any || candidate[k];
  }
  return any ? kOk : kNegative;
}

int cmd_enumerate(int order, int valency, bool connected, bool sorted) {
  std::uint64_t count = 0;
  enumerate_regular(EnumerationTask{order, valency, connected, sorted}, [&](const Graph& g) {
    std::cout << write_graph6(g) << '\n';
    ++count;
  });
  std::cerr << count << " graphs\n";
  return kOk;
}

int cmd_census(const std::string& orders_text, bool confirm) {
  const auto rows = census_pipeline(parse_profile(orders_text), confirm);
  std::cout << "order\tgraphs\tcandidates" << (confirm ? "\tdistance_magic" : "") << '\n';
  for (const auto& r : rows) {
    std::cout << r.order << '\t' << r.graphs << '\t' << r.candidates;
    if (confirm) std::cout << '\t' << r.distance_magic;
    std::cout << '\n';
  }
  return kOk;
}

int cmd_expand(const std::string& graph, const std::string& labels, const std::string& cycle_text) {
  const auto g = load_graph(graph);
  const auto lab = load_labels(labels);
  Expansion out = [&] {
    if (cycle_text.empty()) return expand(g, lab);
    const auto parts = parse_profile(cycle_text);
    if (parts.size() != 4) throw ParseError("--cycle needs four vertices a,b,c,d");
    ZeroAntipodalCycle c{{parts[0], parts[1], parts[2], parts[3]}};
    return expand(g, lab, c);
  }();
  std::cout << write_graph6(out.graph) << '\n' << write_labeling_json(LabelingDocument::of(out.labeling)) << '\n';
  return kOk;
}

int cmd_dot(const std::string& graph, const std::string& labels, const std::string& profile) {
  const auto g = load_graph(graph);
  DotOptions opts;
  if (!profile.empty()) {
    const auto s = profile_to_sequence(parse_profile(profile));
    if (2 * s.length() != g.order()) throw PreconditionError("--profile does not match the graph order");
    opts.qw_m = s.length();
  }
  if (labels.empty()) {
    std::cout << export_dot(g, nullptr, opts);
  } else {
    const auto lab = load_labels(labels);
    std::cout << export_dot(g, &lab, opts);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance magic labelings of quasi wreath graphs"};
  app.require_subcommand(1);
  int status = kOk;

  std::string profile, sequence, graph, labels = "-", scheme = "centered", to = "centered", cycle, input = "-",
                                             orders = "6,8,10";
  bool tilde = false, count = false, no_prefilter = false, connected = false, sorted = false, confirm = false,
       static_order = false;
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0;
  int order = 0, valency = 4;

  auto* qw = app.add_subcommand("qw", "Quasi wreath graphs");
  qw->require_subcommand(1);
  auto* qw_build = qw->add_subcommand("build", "Print QW(S) as graph6");
  auto* qw_classify = qw->add_subcommand("classify", "Decide whether QW(S) is distance magic");
  for (auto* sub : {qw_build, qw_classify}) {
    sub->add_option("--profile", profile, "Segment lengths, e.g. 11,3,5,3,7,5,3");
    sub->add_option("--sequence", sequence, "Bit sequence, e.g. 0,1,1,0,1,1");
  }
  qw_build->callback([&] { status = cmd_qw_build(profile, sequence); });
  qw_classify->callback([&] { status = cmd_qw_classify(profile, sequence); });

  auto* label = app.add_subcommand("label", "Labelings");
  label->require_subcommand(1);
  auto* construct = label->add_subcommand("construct", "Explicit labeling of a distance magic QW graph");
  construct->add_option("--profile", profile);
  construct->add_option("--sequence", sequence);
  construct->add_flag("--tilde", tilde, "Emit the block-swapped variant");
  construct->add_option("--scheme", scheme)->check(CLI::IsMember({"centered", "standard"}));
  construct->callback([&] { status = cmd_label_construct(profile, sequence, tilde, scheme); });
  auto* lverify = label->add_subcommand("verify", "Check a labeling against a graph");
  lverify->add_option("--graph", graph, "graph6 file, literal, or -")->required();
  lverify->add_option("--labels", labels, "Labeling JSON file, or - for stdin");
  lverify->callback([&] { status = cmd_label_verify(graph, labels); });
  auto* convert = label->add_subcommand("convert", "Convert between centered and standard schemes");
  convert->add_option("--labels", labels);
  convert->add_option("--to", to)->check(CLI::IsMember({"centered", "standard"}))->required();
  convert->callback([&] { status = cmd_label_convert(labels, to); });

  auto* search = app.add_subcommand("search", "Exhaustive search for a distance magic labeling");
  search->add_option("--graph", graph)->required();
  search->add_flag("--count", count, "Count all labelings");
  search->add_flag("--no-prefilter", no_prefilter);
  search->add_option("--budget-nodes", budget_nodes);
  search->add_option("--budget-secs", budget_secs);
  search->add_flag("--static-order", static_order);
  search->callback([&] { status = cmd_search(graph, count, no_prefilter, budget_nodes, budget_secs, static_order); });

  auto* filter = app.add_subcommand("filter", "Zero-eigenspace filter over graph6 lines (TSV out)");
  filter->add_option("--input", input, "graph6 file, or - for stdin");
  filter->callback([&] { status = cmd_filter(input); });

  auto* enumerate = app.add_subcommand("enumerate", "All r-regular graphs of an order, up to isomorphism");
  enumerate->add_option("--order", order)->required();
  enumerate->add_option("--valency", valency);
  enumerate->add_flag("--connected", connected);
  enumerate->add_flag("--sorted", sorted);
  enumerate->callback([&] { status = cmd_enumerate(order, valency, connected, sorted); });

  auto* census = app.add_subcommand("census", "Enumerate, filter and optionally confirm per order");
  census->add_option("--orders", orders);
  census->add_flag("--confirm", confirm, "Confirm candidates by search");
  census->callback([&] { status = cmd_census(orders, confirm); });

  auto* expand_cmd = app.add_subcommand("expand", "Expand along a zero-antipodal 4-cycle");
  expand_cmd->add_option("--graph", graph)->required();
  expand_cmd->add_option("--labels", labels)->required();
  expand_cmd->add_option("--cycle", cycle, "a,b,c,d");
  expand_cmd->callback([&] { status = cmd_expand(graph, labels, cycle); });

  auto* dot = app.add_subcommand("dot", "Graphviz DOT export");
  dot->add_option("--graph", graph)->required();
  std::string dot_labels;
  dot->add_option("--labels", dot_labels);
  dot->add_option("--profile", profile, "Rank x and y rows of QW(profile) separately");
  dot->callback([&] { status = cmd_dot(graph, dot_labels, profile); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return status;
}
