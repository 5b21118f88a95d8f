#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cytrans/transition.hpp"

namespace cytrans {

struct WebNode {
  std::string id;
  Fingerprint fingerprint;
  std::string description;
  bool primitive = false;

  bool operator==(const WebNode&) const = default;
};

// Directed from the resolution side Y to the smoothing side Ytilde.
struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  std::string transition_path;  // relative to the graph file
  std::optional<Verdict::Kind> simplicity;
};

// Immutable value; add_node/add_arrow return a new graph and drop any stored
// validation.
class WebGraph {
 public:
  WebGraph add_node(WebNode node) const;
  WebGraph add_arrow(Arrow arrow, std::optional<TransitionRecord> record = std::nullopt) const;
  WebGraph with_validation(std::vector<Finding> findings) const;

  const std::vector<WebNode>& nodes() const { return nodes_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Loaded transition record of arrow i, if any.
  const std::optional<TransitionRecord>& record(std::size_t i) const { return records_[i]; }
  const WebNode* find_node(std::string_view id) const;
  const std::optional<std::vector<Finding>>& validation() const { return validation_; }

  // Same nodes and arrows; records and validation are not compared.
  bool structurally_equal(const WebGraph& other) const;

 private:
  std::vector<WebNode> nodes_;
  std::vector<Arrow> arrows_;
  std::vector<std::optional<TransitionRecord>> records_;
  std::optional<std::vector<Finding>> validation_;
};

// Pure: identical content gives identical findings in identical order.
// Arrow verdicts are recomputed from loaded records (verifying witnesses).
std::vector<Finding> validate(const WebGraph& g, const AnalysisOptions& options = {});

// Verdict per arrow: recomputed from the record when loaded, else the cache.
std::vector<std::optional<Verdict::Kind>> arrow_verdicts(const WebGraph& g, const AnalysisOptions& options = {});
// Graph with every loaded arrow's cache set to its recomputed verdict.
WebGraph refresh_simplicity(const WebGraph& g, const AnalysisOptions& options = {});

// Undirected components, node ids in file order, components ordered by first node.
std::vector<std::vector<std::string>> connected_components(const WebGraph& g);
// Shortest undirected arrow sequence from a to b.
std::optional<std::vector<std::string>> path(const WebGraph& g, std::string_view a, std::string_view b);

std::string export_dot(const WebGraph& g);
std::string export_csv(const WebGraph& g);
std::string format_web(const WebGraph& g);

// With `base_dir`, transition files are loaded relative to it.
WebGraph parse_web(std::string_view text, const std::optional<std::string>& base_dir = std::nullopt);
WebGraph load_web(const std::string& path);

}  // namespace cytrans
