#ifndef FILLPAIR_IO_HPP
#define FILLPAIR_IO_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fillpair/origami.hpp"
#include "fillpair/surgery.hpp"

namespace fillpair {

using json = nlohmann::ordered_json;

struct PointSurgery {
  int crossing = 0;
  SurgeryKind kind = SurgeryKind::SingleSWNE;
  friend bool operator==(const PointSurgery &, const PointSurgery &) = default;
};

// On-disk scheme: either explicit gamma arcs, a point-local surgery list,
// or both; loading concatenates them (arcs first) into one Scheme.
struct SchemeDocument {
  int version = 1;
  int seed_m = 0;
  std::vector<GammaArc> arcs;
  std::vector<PointSurgery> surgeries;
  friend bool operator==(const SchemeDocument &, const SchemeDocument &) = default;
};

// On-disk curve pair.  alpha_order/beta_order are the successor image
// arrays; indices are 0-based throughout.
struct PairDocument {
  int version = 1;
  Permutation alpha_order;
  Permutation beta_order;
  std::optional<std::vector<int>> signs;
  std::map<int, int> punctures;
  std::optional<SchemeDocument> provenance;
};

namespace detail {

inline std::string kind_name(SurgeryKind kind) {
  switch (kind) {
  case SurgeryKind::SingleSWNE:
    return "single-swne";
  case SurgeryKind::SingleNWSE:
    return "single-nwse";
  case SurgeryKind::Double:
    return "double";
  }
  throw error("unknown surgery kind");
}

inline SurgeryKind kind_from_name(const std::string &name) {
  if (name == "single-swne")
    return SurgeryKind::SingleSWNE;
  if (name == "single-nwse")
    return SurgeryKind::SingleNWSE;
  if (name == "double")
    return SurgeryKind::Double;
  throw parse_error("unknown surgery kind '" + name + "'");
}

inline const json &field(const json &j, const char *key) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("missing field '") + key + "'");
  return *it;
}

inline int int_field(const json &j, const char *key) {
  const json &f = field(j, key);
  if (!f.is_number_integer())
    throw parse_error(std::string("field '") + key + "' must be an integer");
  return f.get<int>();
}

inline void check_header(const json &j, const char *kind) {
  if (!j.is_object())
    throw parse_error("document must be a JSON object");
  if (int_field(j, "version") != 1)
    throw parse_error("unsupported document version");
  const json &k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw parse_error(std::string("document kind must be '") + kind + "'");
}

inline std::vector<int> int_array(const json &j, const char *key, int n) {
  const json &f = field(j, key);
  if (!f.is_array() || static_cast<int>(f.size()) != n)
    throw parse_error(std::string("field '") + key + "' must be an array of length " +
                      std::to_string(n));
  std::vector<int> out;
  out.reserve(n);
  for (const auto &e : f) {
    if (!e.is_number_integer())
      throw parse_error(std::string("field '") + key + "' must contain integers");
    out.push_back(e.get<int>());
  }
  return out;
}

} // namespace detail

inline json scheme_to_json(const SchemeDocument &doc) {
  json j;
  j["version"] = doc.version;
  j["kind"] = "scheme";
  j["seed_m"] = doc.seed_m;
  if (!doc.arcs.empty() || doc.surgeries.empty()) {
    json arcs = json::array();
    for (const auto &arc : doc.arcs) {
      json a;
      a["splice"] = arc.splice;
      a["entry_side"] = arc.entry_side == EntrySide::East ? "east" : "west";
      json interior = json::array();
      for (const auto &pos : arc.interior) {
        json p;
        p["gap"] = pos.gap;
        p["rank"] = pos.rank;
        interior.push_back(std::move(p));
      }
      a["interior"] = std::move(interior);
      arcs.push_back(std::move(a));
    }
    j["arcs"] = std::move(arcs);
  }
  if (!doc.surgeries.empty()) {
    json list = json::array();
    for (const auto &s : doc.surgeries) {
      json e;
      e["crossing"] = s.crossing;
      e["kind"] = detail::kind_name(s.kind);
      list.push_back(std::move(e));
    }
    j["surgeries"] = std::move(list);
  }
  return j;
}

inline SchemeDocument scheme_from_json(const json &j) {
  detail::check_header(j, "scheme");
  SchemeDocument doc;
  doc.seed_m = detail::int_field(j, "seed_m");
  if (auto it = j.find("arcs"); it != j.end()) {
    if (!it->is_array())
      throw parse_error("field 'arcs' must be an array");
    for (const auto &a : *it) {
      GammaArc arc;
      arc.splice = detail::int_field(a, "splice");
      const json &side = detail::field(a, "entry_side");
      if (!side.is_string())
        throw parse_error("field 'entry_side' must be a string");
      const std::string name = side.get<std::string>();
      if (name == "east")
        arc.entry_side = EntrySide::East;
      else if (name == "west")
        arc.entry_side = EntrySide::West;
      else
        throw parse_error("entry_side must be 'east' or 'west'");
      if (auto in = a.find("interior"); in != a.end()) {
        if (!in->is_array())
          throw parse_error("field 'interior' must be an array");
        for (const auto &p : *in)
          arc.interior.push_back(
              {detail::int_field(p, "gap"), detail::int_field(p, "rank")});
      }
      doc.arcs.push_back(std::move(arc));
    }
  }
  if (auto it = j.find("surgeries"); it != j.end()) {
    if (!it->is_array())
      throw parse_error("field 'surgeries' must be an array");
    for (const auto &s : *it) {
      PointSurgery ps;
      ps.crossing = detail::int_field(s, "crossing");
      const json &k = detail::field(s, "kind");
      if (!k.is_string())
        throw parse_error("surgery kind must be a string");
      ps.kind = detail::kind_from_name(k.get<std::string>());
      doc.surgeries.push_back(ps);
    }
  }
  return doc;
}

inline Scheme to_scheme(const SchemeDocument &doc) {
  Scheme scheme{doc.seed_m, doc.arcs};
  for (const auto &s : doc.surgeries)
    scheme.arcs.push_back(point_arc(s.kind, s.crossing, doc.seed_m));
  return scheme;
}

inline SchemeDocument scheme_document(const Scheme &scheme) {
  SchemeDocument doc;
  doc.seed_m = scheme.seed_m;
  doc.arcs = scheme.arcs;
  return doc;
}

inline json pair_to_json(const PairDocument &doc) {
  json j;
  j["version"] = doc.version;
  j["kind"] = "curve-pair";
  j["n"] = doc.alpha_order.degree();
  j["alpha_order"] = doc.alpha_order.images();
  j["beta_order"] = doc.beta_order.images();
  if (doc.signs)
    j["signs"] = *doc.signs;
  if (!doc.punctures.empty()) {
    json marks = json::object();
    for (auto [face, count] : doc.punctures)
      marks[std::to_string(face)] = count;
    j["punctures"] = std::move(marks);
  }
  if (doc.provenance)
    j["provenance"] = scheme_to_json(*doc.provenance);
  return j;
}

inline PairDocument pair_from_json(const json &j) {
  detail::check_header(j, "curve-pair");
  const int n = detail::int_field(j, "n");
  if (n < 1)
    throw parse_error("crossing count must be positive");
  auto make_perm = [&](const char *key) {
    try {
      return Permutation(detail::int_array(j, key, n));
    } catch (const parse_error &) {
      throw;
    } catch (const error &e) {
      throw parse_error(std::string("field '") + key + "': " + e.what());
    }
  };
  PairDocument doc{1, make_perm("alpha_order"), make_perm("beta_order"), {}, {}, {}};
  if (auto it = j.find("signs"); it != j.end()) {
    std::vector<int> signs = detail::int_array(j, "signs", n);
    for (int s : signs)
      if (s != 1 && s != -1)
        throw parse_error("signs must be +1 or -1");
    doc.signs = std::move(signs);
  }
  if (auto it = j.find("punctures"); it != j.end()) {
    if (!it->is_object())
      throw parse_error("field 'punctures' must be an object");
    for (auto &[key, value] : it->items()) {
      int face = 0;
      try {
        size_t used = 0;
        face = std::stoi(key, &used);
        if (used != key.size())
          throw std::invalid_argument(key);
      } catch (const std::exception &) {
        throw parse_error("puncture keys must be face ids");
      }
      if (!value.is_number_integer() || value.get<int>() < 1)
        throw parse_error("puncture counts must be positive integers");
      doc.punctures[face] = value.get<int>();
    }
  }
  if (auto it = j.find("provenance"); it != j.end())
    doc.provenance = scheme_from_json(*it);
  return doc;
}

// Builds a CurvePair from a document, checking that the curves are single
// cycles and that puncture marks land on existing faces.
inline CurvePair to_curve_pair(const PairDocument &doc) {
  CurvePair pair(doc.alpha_order, doc.beta_order, doc.punctures);
  if (!doc.punctures.empty()) {
    const int face_count = faces(pair).face_count();
    for (auto [face, count] : doc.punctures)
      if (face >= face_count)
        throw parse_error("puncture mark references nonexistent face " +
                          std::to_string(face));
  }
  return pair;
}

inline PairDocument pair_document(const CurvePair &pair,
                                  std::optional<SchemeDocument> provenance = {}) {
  PairDocument doc{1, pair.h(), pair.v(),
                   std::vector<int>(pair.n(), 1), pair.puncture_marks(),
                   std::move(provenance)};
  return doc;
}

inline std::string write_pair(const PairDocument &doc) {
  return pair_to_json(doc).dump(2) + "\n";
}

inline std::string write_scheme(const SchemeDocument &doc) {
  return scheme_to_json(doc).dump(2) + "\n";
}

inline json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

inline PairDocument read_pair(const std::string &text) {
  return pair_from_json(parse_json(text));
}

inline SchemeDocument read_scheme(const std::string &text) {
  return scheme_from_json(parse_json(text));
}

// DOT export of an A-graph, one edge per handle, with the tree/forest
// verdict in the header comment.
inline std::string to_dot(const AGraph &graph) {
  const auto comps = components(graph);
  bool forest = true;
  for (const auto &c : comps)
    forest = forest && c.acyclic;
  const bool tree = forest && comps.size() == 1;
  const std::string verdict = tree ? "tree" : forest ? "forest" : "not-a-forest";
  std::ostringstream out;
  out << "// a-graph: faces=" << graph.vertex_count
      << " handles=" << graph.edges.size() << " components=" << comps.size()
      << " verdict=" << verdict << "\n";
  out << "graph agraph {\n";
  for (int v = 0; v < graph.vertex_count; ++v)
    out << "  " << v << ";\n";
  for (auto [u, v] : graph.edges)
    out << "  " << std::min(u, v) << " -- " << std::max(u, v) << ";\n";
  out << "}\n";
  return out.str();
}

namespace detail {

inline void svg_text(std::ostringstream &out, int x, int y, int size,
                     const std::string &body) {
  out << "  <text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
      << "\" text-anchor=\"middle\">" << body << "</text>\n";
}

inline void svg_line(std::ostringstream &out, int x1, int y1, int x2, int y2,
                     const char *stroke) {
  out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
      << "\" y2=\"" << y2 << "\" stroke=\"" << stroke << "\"/>\n";
}

} // namespace detail

// Strip picture: alpha drawn as one horizontal segment with identified
// ends, beta as vertical chords.  Top ends are labeled 1..n left to
// right; each bottom end carries the label of the top end it glues to.
inline std::string render_strip(const CurvePair &pair) {
  const int n = pair.n();
  std::vector<int> order;
  order.reserve(n);
  for (int x = 0;;) {
    order.push_back(x);
    x = pair.h()(x);
    if (x == 0)
      break;
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i)
    pos[order[i]] = i;
  const Permutation vi = pair.v().inverse();

  const int width = 60 * n + 120;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
      << " 240\" font-family=\"monospace\">\n";
  detail::svg_line(out, 20, 120, width - 20, 120, "black");
  detail::svg_line(out, 20, 112, 20, 128, "black");
  detail::svg_line(out, width - 20, 112, width - 20, 128, "black");
  for (int i = 0; i < n; ++i) {
    const int cx = 80 + 60 * i;
    detail::svg_line(out, cx, 40, cx, 200, "#1f6fbf");
    detail::svg_text(out, cx, 28, 14, std::to_string(i + 1));
    detail::svg_text(out, cx, 224, 14, std::to_string(pos[vi(order[i])] + 1));
    detail::svg_text(out, cx + 14, 136, 10, std::to_string(order[i]));
  }
  out << "</svg>\n";
  return out.str();
}

// Tiling picture: one row of unit squares per horizontal cylinder.  Top
// and bottom edges carry the id of the square they glue to; row ends
// carry the ids of their wrap-around neighbors.
inline std::string render_tiling(const CurvePair &pair) {
  const auto rows = pair.h().cycles().cycles;
  const Permutation vi = pair.v().inverse();
  const Permutation hi = pair.h().inverse();
  size_t longest = 0;
  for (const auto &row : rows)
    longest = std::max(longest, row.size());
  const int width = 40 + 60 * static_cast<int>(longest);
  const int height = 20 + 80 * static_cast<int>(rows.size());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width
      << " " << height << "\" font-family=\"monospace\">\n";
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto &row = rows[r];
    const int y0 = 20 + 80 * static_cast<int>(r);
    for (size_t k = 0; k < row.size(); ++k) {
      const int x = row[k];
      const int x0 = 20 + 60 * static_cast<int>(k);
      out << "  <rect x=\"" << x0 << "\" y=\"" << y0
          << "\" width=\"60\" height=\"60\" fill=\"none\" stroke=\"black\"/>\n";
      detail::svg_text(out, x0 + 30, y0 + 38, 14, std::to_string(x));
      detail::svg_text(out, x0 + 30, y0 + 12, 10, std::to_string(pair.v()(x)));
      detail::svg_text(out, x0 + 30, y0 + 56, 10, std::to_string(vi(x)));
      if (k == 0)
        detail::svg_text(out, x0 + 8, y0 + 38, 10, std::to_string(hi(x)));
      if (k + 1 == row.size())
        detail::svg_text(out, x0 + 52, y0 + 38, 10, std::to_string(pair.h()(x)));
    }
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace fillpair

#endif
