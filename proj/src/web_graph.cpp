#include "cytrans/web_graph.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <map>
#include <sstream>

#include "cytrans/errors.hpp"
#include "cytrans/keyvalue.hpp"

namespace cytrans {

WebGraph WebGraph::add_node(WebNode node) const {
  if (node.id.empty()) throw DomainError("node id is empty");
  if (find_node(node.id)) throw DomainError("duplicate node id '" + node.id + "'");
  for (const auto& a : arrows_)
    if (a.id == node.id) throw DomainError("id '" + node.id + "' is already used by an arrow");
  WebGraph g = *this;
  node.fingerprint.name = node.id;
  g.nodes_.push_back(std::move(node));
  g.validation_.reset();
  return g;
}

WebGraph WebGraph::add_arrow(Arrow arrow, std::optional<TransitionRecord> record) const {
  if (arrow.id.empty()) throw DomainError("arrow id is empty");
  if (find_node(arrow.id) || std::any_of(arrows_.begin(), arrows_.end(), [&](const Arrow& a) { return a.id == arrow.id; }))
    throw DomainError("duplicate id '" + arrow.id + "'");
  if (!find_node(arrow.source)) throw DomainError("arrow '" + arrow.id + "' has unknown source '" + arrow.source + "'");
  if (!find_node(arrow.target)) throw DomainError("arrow '" + arrow.id + "' has unknown target '" + arrow.target + "'");
  WebGraph g = *this;
  g.arrows_.push_back(std::move(arrow));
  g.records_.push_back(std::move(record));
  g.validation_.reset();
  return g;
}

WebGraph WebGraph::with_validation(std::vector<Finding> findings) const {
  WebGraph g = *this;
  g.validation_ = std::move(findings);
  return g;
}

const WebNode* WebGraph::find_node(std::string_view id) const {
  for (const auto& n : nodes_)
    if (n.id == id) return &n;
  return nullptr;
}

bool WebGraph::structurally_equal(const WebGraph& other) const {
  if (nodes_ != other.nodes_ || arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow &a = arrows_[i], &b = other.arrows_[i];
    if (a.id != b.id || a.source != b.source || a.target != b.target || a.transition_path != b.transition_path ||
        a.simplicity != b.simplicity)
      return false;
  }
  return true;
}

std::vector<std::optional<Verdict::Kind>> arrow_verdicts(const WebGraph& g, const AnalysisOptions& options) {
  std::vector<std::optional<Verdict::Kind>> out;
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    if (g.record(i)) {
      out.push_back(decide_simplicity(*g.record(i), options).kind);
    } else {
      out.push_back(g.arrows()[i].simplicity);
    }
  }
  return out;
}

WebGraph refresh_simplicity(const WebGraph& g, const AnalysisOptions& options) {
  auto verdicts = arrow_verdicts(g, options);
  WebGraph out;
  for (const auto& n : g.nodes()) out = out.add_node(n);
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    Arrow a = g.arrows()[i];
    if (g.record(i)) a.simplicity = verdicts[i];
    out = out.add_arrow(std::move(a), g.record(i));
  }
  return out;
}

std::vector<Finding> validate(const WebGraph& g, const AnalysisOptions& options) {
  using S = Finding::Severity;
  std::vector<Finding> out;
  for (const auto& n : g.nodes()) {
    if (!n.fingerprint.smooth)
      out.push_back({S::error, "node", n.id + ": web nodes must be smooth Calabi-Yau threefolds"});
    for (auto& f : fingerprint_findings(n.fingerprint)) out.push_back(std::move(f));
  }

  auto verdicts = arrow_verdicts(g, options);
  for (std::size_t i = 0; i < g.arrows().size(); ++i) {
    const Arrow& a = g.arrows()[i];
    const WebNode& src = *g.find_node(a.source);
    const WebNode& dst = *g.find_node(a.target);
    const auto& record = g.record(i);
    const std::string prefix = "arrow " + a.id + ": ";

    if (record && a.simplicity && *a.simplicity != *verdicts[i])
      out.push_back({S::error, "stale", prefix + "cached verdict " + to_string(*a.simplicity) +
                                            " differs from recomputed " + to_string(*verdicts[i])});

    const bool conifold = record && record->type == TransitionType::conifold;
    const bool type2 = record && record->type == TransitionType::typeII;
    const bool simple = verdicts[i] == Verdict::Kind::simple;
    if (src.fingerprint.pi1 && dst.fingerprint.pi1 && *src.fingerprint.pi1 != *dst.fingerprint.pi1) {
      const std::string what =
          prefix + "fundamental group changes from " + *src.fingerprint.pi1 + " to " + *dst.fingerprint.pi1;
      if (simple || conifold)
        out.push_back({S::error, "pi1", what + " across a " + (simple ? "simple" : "conifold") + " transition"});
      else
        out.push_back({S::info, "pi1", what + (type2 ? " across a type II transition" : "")});
    }

    if (!record) continue;
    for (auto& f : consistency_check(*record)) {
      f.message = prefix + f.message;
      out.push_back(std::move(f));
    }
    TransitionTable table;
    try {
      table = compute_table(*record);
    } catch (const InconsistentData&) {
      continue;  // already reported by consistency_check
    }
    auto same = [](const Fingerprint& x, const Fingerprint& y) { return x.b == y.b && x.chi == y.chi; };
    if (!same(table.resolution, src.fingerprint))
      out.push_back({S::error, "endpoint", prefix + "resolution side does not match node " + src.id});
    if (!same(table.smoothing, dst.fingerprint))
      out.push_back({S::error, "endpoint", prefix + "smoothing side does not match node " + dst.id});
  }
  return out;
}

namespace {

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const WebGraph& g) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.nodes().size(); ++i) index.emplace(g.nodes()[i].id, i);
  // (neighbor, arrow) per node, in arrow order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.nodes().size());
  for (std::size_t a = 0; a < g.arrows().size(); ++a) {
    std::size_t s = index.at(g.arrows()[a].source), t = index.at(g.arrows()[a].target);
    adj[s].emplace_back(t, a);
    adj[t].emplace_back(s, a);
  }
  return adj;
}

std::size_t node_index(const WebGraph& g, std::string_view id) {
  for (std::size_t i = 0; i < g.nodes().size(); ++i)
    if (g.nodes()[i].id == id) return i;
  throw DomainError("unknown node '" + std::string(id) + "'");
}

}  // namespace

std::vector<std::vector<std::string>> connected_components(const WebGraph& g) {
  auto adj = adjacency(g);
  std::vector<int> comp(g.nodes().size(), -1);
  std::vector<std::vector<std::string>> out;
  for (std::size_t start = 0; start < g.nodes().size(); ++start) {
    if (comp[start] >= 0) continue;
    const int c = static_cast<int>(out.size());
    std::vector<std::size_t> members;
    std::deque<std::size_t> queue{start};
    comp[start] = c;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (auto [w, a] : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          queue.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::string> ids;
    for (std::size_t m : members) ids.push_back(g.nodes()[m].id);
    out.push_back(std::move(ids));
  }
  return out;
}

std::optional<std::vector<std::string>> path(const WebGraph& g, std::string_view a, std::string_view b) {
  const std::size_t from = node_index(g, a), to = node_index(g, b);
  auto adj = adjacency(g);
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(g.nodes().size());
  std::vector<bool> seen(g.nodes().size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (auto [w, arrow] : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = std::make_pair(v, arrow);
        queue.push_back(w);
      }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<std::string> arrows;
  for (std::size_t v = to; v != from; v = parent[v]->first) arrows.push_back(g.arrows()[parent[v]->second].id);
  std::reverse(arrows.begin(), arrows.end());
  return arrows;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string dot_style(const std::optional<Verdict::Kind>& v) {
  if (v == Verdict::Kind::simple) return "solid";
  if (v == Verdict::Kind::not_simple) return "dotted";
  return "dashed";
}

}  // namespace

std::string export_dot(const WebGraph& g) {
  std::ostringstream os;
  os << "digraph web {\n";
  for (const auto& n : g.nodes()) {
    const Fingerprint& fp = n.fingerprint;
    std::string label = n.id + "\\nchi=" + std::to_string(fp.chi);
    if (fp.h11 && fp.h21) label += " h11=" + std::to_string(*fp.h11) + " h21=" + std::to_string(*fp.h21);
    os << "  " << quoted(n.id) << " [label=\"" << label << "\"" << (n.primitive ? ", peripheries=2" : "")
       << "];\n";
  }
  for (const auto& a : g.arrows())
    os << "  " << quoted(a.source) << " -> " << quoted(a.target) << " [label=" << quoted(a.id)
       << ", style=" << dot_style(a.simplicity) << "];\n";
  os << "}\n";
  return os.str();
}

std::string export_csv(const WebGraph& g) {
  std::ostringstream os;
  os << "arrow,source,target,transition,verdict\n";
  for (const auto& a : g.arrows())
    os << a.id << "," << a.source << "," << a.target << "," << a.transition_path << ","
       << (a.simplicity ? to_string(*a.simplicity) : "") << "\n";
  return os.str();
}

std::string format_web(const WebGraph& g) {
  std::ostringstream os;
  bool first = true;
  for (const auto& n : g.nodes()) {
    os << (first ? "" : "\n") << "[node]\nid: " << n.id << "\n";
    first = false;
    if (!n.description.empty()) os << "description: " << n.description << "\n";
    os << "primitive: " << (n.primitive ? "true" : "false") << "\n";
    for (const auto& kv : fingerprint_entries(n.fingerprint)) os << kv.key << ": " << kv.value << "\n";
  }
  for (const auto& a : g.arrows()) {
    os << (first ? "" : "\n") << "[arrow]\nid: " << a.id << "\nsource: " << a.source << "\ntarget: " << a.target
       << "\n";
    first = false;
    if (!a.transition_path.empty()) os << "transition: " << a.transition_path << "\n";
    if (a.simplicity) os << "simplicity: " << to_string(*a.simplicity) << "\n";
  }
  return os.str();
}

WebGraph parse_web(std::string_view text, const std::optional<std::string>& base_dir) {
  auto sections = parse_sections(text);
  if (!sections.front().entries.empty())
    throw ParseError("entries must belong to a [node] or [arrow] block", sections.front().entries.front().line);
  WebGraph g;
  for (std::size_t i = 1; i < sections.size(); ++i) {
    const Section& s = sections[i];
    try {
      if (s.name == "node") {
        WebNode n;
        n.id = s.require("id").value;
        if (const auto* kv = s.find("description")) n.description = kv->value;
        if (const auto* kv = s.find("primitive")) n.primitive = parse_bool(*kv);
        n.fingerprint = parse_fingerprint(s, true);
        g = g.add_node(std::move(n));
      } else if (s.name == "arrow") {
        Arrow a;
        a.id = s.require("id").value;
        a.source = s.require("source").value;
        a.target = s.require("target").value;
        std::optional<TransitionRecord> record;
        if (const auto* kv = s.find("transition")) {
          a.transition_path = kv->value;
          if (base_dir) {
            auto file = (std::filesystem::path(*base_dir) / a.transition_path).string();
            try {
              record = parse_transition(read_text_file(file));
            } catch (const Error& e) {
              throw ParseError(file + ": " + e.what(), kv->line);
            }
          }
        }
        if (const auto* kv = s.find("simplicity")) {
          a.simplicity = parse_verdict_kind(kv->value);
          if (!a.simplicity) throw ParseError("unknown verdict '" + kv->value + "'", kv->line);
        }
        g = g.add_arrow(std::move(a), std::move(record));
      } else {
        throw ParseError("unknown block [" + s.name + "]", s.line);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), s.line);
    }
  }
  return g;
}

WebGraph load_web(const std::string& path) {
  auto dir = std::filesystem::path(path).parent_path().string();
  return parse_web(read_text_file(path), dir.empty() ? std::string(".") : dir);
}

}  // namespace cytrans
