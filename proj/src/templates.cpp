#include "tangles/templates.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stitcher.hpp"
#include "tangles/errors.hpp"
#include "tangles/parser.hpp"
#include "tangles/slope.hpp"
#include "tangles/surface.hpp"

namespace tangles {

namespace {

int vertex_index(const DiagramTemplate& t, const std::string& id) {
  for (std::size_t i = 0; i < t.vertices.size(); ++i)
    if (t.vertices[i] == id) return static_cast<int>(i);
  return -1;
}

// Template-level half edges: 4 per vertex, id = 4*vertex + port.
std::vector<int> port_mates(const DiagramTemplate& t, std::string* error) {
  std::vector<int> mate(4 * t.vertices.size(), -1);
  for (const auto& e : t.edges) {
    int ids[2];
    for (int k = 0; k < 2; ++k) {
      int v = vertex_index(t, e[k].vertex);
      if (v < 0) {
        if (error) *error = "edge references unknown vertex '" + e[k].vertex + "'";
        return {};
      }
      if (e[k].port < 0 || e[k].port > 3) {
        if (error) *error = "edge references port out of range";
        return {};
      }
      ids[k] = 4 * v + e[k].port;
    }
    if (ids[0] == ids[1]) {
      if (error) *error = "edge joins a port to itself";
      return {};
    }
    for (int k = 0; k < 2; ++k) {
      if (mate[ids[k]] != -1) {
        if (error)
          *error = "port used more than once: " + e[k].vertex + "." +
                   std::to_string(e[k].port);
        return {};
      }
    }
    mate[ids[0]] = ids[1];
    mate[ids[1]] = ids[0];
  }
  for (std::size_t h = 0; h < mate.size(); ++h) {
    if (mate[h] < 0) {
      if (error)
        *error = "unused port: " + t.vertices[h / 4] + "." + std::to_string(h % 4);
      return {};
    }
  }
  return mate;
}

bool template_connected(const DiagramTemplate& t, const std::vector<int>& mate) {
  if (t.vertices.empty()) return false;
  std::vector<char> seen(t.vertices.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4; ++p) {
      int w = mate[4 * v + p] / 4;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (char s : seen)
    if (!s) return false;
  return true;
}

// Faces of the template map: orbits of h -> rot(mate(h)).
std::vector<int> template_face_lengths(const std::vector<int>& mate) {
  std::vector<int> face(mate.size(), -1);
  std::vector<int> lengths;
  int next = 0;
  for (std::size_t h = 0; h < mate.size(); ++h) {
    if (face[h] >= 0) continue;
    int len = 0;
    int cur = static_cast<int>(h);
    while (face[cur] < 0) {
      face[cur] = next;
      ++len;
      int across = mate[cur];
      cur = (across & ~3) | ((across + 1) & 3);
    }
    lengths.push_back(len);
    ++next;
  }
  return lengths;
}

const ExprPtr& tangle_at(const DiagramTemplate& t, const std::string& v) {
  auto it = t.tangles.find(v);
  if (it == t.tangles.end())
    throw InvalidTemplate("vertex '" + v + "' has no tangle assigned");
  return it->second;
}

void require_valid(const DiagramTemplate& t) {
  TemplateReport r = validate_template(t);
  if (!r.valid()) {
    std::string msg = "invalid template:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw InvalidTemplate(msg);
  }
}

ExprPtr slope_sign_replacement(const ExtendedRational& s) {
  if (s.is_infinite())
    return TangleExpr::rotate(TangleExpr::rational({Integer(0)}));
  if (s.is_zero()) return TangleExpr::rational({Integer(0)});
  if (s.sign() > 0) return TangleExpr::rational({Integer(1)});
  return TangleExpr::reflect(TangleExpr::rational({Integer(1)}));
}

}  // namespace

DiagramTemplate numerator_template(const ExprPtr& tangle) {
  DiagramTemplate t;
  t.closure = true;
  t.vertices = {"t"};
  t.edges = {{PortRef{"t", NW}, PortRef{"t", NE}},
             {PortRef{"t", SW}, PortRef{"t", SE}}};
  t.tangles["t"] = tangle;
  return t;
}

DiagramTemplate denominator_template(const ExprPtr& tangle) {
  DiagramTemplate t;
  t.closure = true;
  t.vertices = {"t"};
  t.edges = {{PortRef{"t", NW}, PortRef{"t", SW}},
             {PortRef{"t", NE}, PortRef{"t", SE}}};
  t.tangles["t"] = tangle;
  return t;
}

TemplateReport validate_template(const DiagramTemplate& t) {
  TemplateReport report;
  if (t.vertices.empty()) {
    report.violations.push_back("no vertices");
    return report;
  }
  std::set<std::string> ids(t.vertices.begin(), t.vertices.end());
  if (ids.size() != t.vertices.size())
    report.violations.push_back("duplicate vertex id");
  for (const auto& [v, e] : t.tangles) {
    (void)e;
    if (!ids.count(v))
      report.violations.push_back("tangle for unknown vertex '" + v + "'");
  }
  for (const auto& v : t.vertices)
    if (!t.tangles.count(v))
      report.violations.push_back("vertex '" + v + "' has no tangle");

  std::string err;
  std::vector<int> mate = port_mates(t, &err);
  if (mate.empty()) {
    report.violations.push_back(err);
    return report;
  }
  if (!template_connected(t, mate))
    report.violations.push_back("underlying graph is disconnected");
  else if (!t.closure) {
    std::vector<int> lengths = template_face_lengths(mate);
    long long V = static_cast<long long>(t.vertices.size());
    long long E = 2 * V;
    long long F = static_cast<long long>(lengths.size());
    if (V - E + F != 2)
      report.violations.push_back("not a sphere embedding: V-E+F = " +
                                  std::to_string(V - E + F));
    for (int len : lengths)
      if (len == 1) {
        report.violations.push_back("monogon face");
        break;
      }
    for (int len : lengths)
      if (len == 2) {
        report.violations.push_back("bigon face");
        break;
      }
  }
  return report;
}

AssembledTemplate assemble_detailed(const DiagramTemplate& t) {
  require_valid(t);
  std::string err;
  std::vector<int> mate = port_mates(t, &err);

  AssembledTemplate out;
  LinkDiagram d;
  std::vector<TangleFragment> frags;
  std::vector<int> offsets;
  for (std::size_t vi = 0; vi < t.vertices.size(); ++vi) {
    TangleFragment f = fragment_of(tangle_at(t, t.vertices[vi]));
    offsets.push_back(4 * static_cast<int>(d.xings.size()));
    d.xings.insert(d.xings.end(), f.xings.begin(), f.xings.end());
    for (int p : f.partner) d.partner.push_back(p < 0 ? -1 : p + offsets.back());
    d.free_loops += f.free_loops;
    for (std::size_t c = 0; c < f.xings.size(); ++c)
      out.crossing_vertex.push_back(static_cast<int>(vi));
    frags.push_back(std::move(f));
  }

  Stitcher st;
  std::vector<std::array<int, 4>> markers(t.vertices.size());
  for (std::size_t vi = 0; vi < t.vertices.size(); ++vi) {
    for (int p = 0; p < 4; ++p) markers[vi][p] = st.marker();
    bind_fragment_ends(st, frags[vi], markers[vi], offsets[vi]);
  }
  for (std::size_t h = 0; h < mate.size(); ++h) {
    if (static_cast<int>(h) < mate[h])
      st.link_markers(markers[h / 4][h % 4], markers[mate[h] / 4][mate[h] % 4]);
  }
  auto res = st.resolve({});
  for (auto [x, y] : res.node_pairs) {
    d.partner[x] = y;
    d.partner[y] = x;
  }
  d.free_loops += res.free_loops;
  for (int p : d.partner)
    if (p < 0) throw std::logic_error("open strand in assembled template");
  out.diagram = std::move(d);

  // Port-level strand components: within-vertex endpoint pairings joined
  // by template edges.
  std::vector<int> comp(mate.size(), -1);
  std::vector<std::array<int, 4>> pairing(t.vertices.size());
  for (std::size_t vi = 0; vi < t.vertices.size(); ++vi)
    pairing[vi] = trace_fragment(frags[vi]).pairing;
  int next_comp = 0;
  for (std::size_t h0 = 0; h0 < mate.size(); ++h0) {
    if (comp[h0] >= 0) continue;
    int id = next_comp++;
    int cur = static_cast<int>(h0);
    while (comp[cur] < 0) {
      comp[cur] = id;
      int within = 4 * (cur / 4) + pairing[cur / 4][cur % 4];
      comp[within] = id;
      cur = mate[within];
    }
  }
  out.strand_components = next_comp;
  for (std::size_t vi = 0; vi < t.vertices.size(); ++vi) {
    std::array<int, 4> pc{};
    for (int p = 0; p < 4; ++p) pc[p] = comp[4 * vi + p];
    out.port_component[t.vertices[vi]] = pc;
  }
  return out;
}

LinkDiagram assemble(const DiagramTemplate& t) {
  return assemble_detailed(t).diagram;
}

DiagramTemplate basic_diagram(const DiagramTemplate& t) {
  require_valid(t);
  DiagramTemplate out = t;
  for (const auto& v : t.vertices)
    out.tangles[v] = slope_sign_replacement(slope(tangle_at(t, v)));
  return out;
}

std::vector<CutTangle> find_cut_tangles(const DiagramTemplate& t) {
  require_valid(t);
  std::vector<CutTangle> out;
  for (const auto& v : t.vertices) {
    const ExprPtr& e = tangle_at(t, v);
    ExtendedRational s = slope(e);
    ExprPtr replacement;
    if (s.is_infinite())
      replacement = TangleExpr::rotate(TangleExpr::rational({Integer(0)}));
    else if (s.is_zero())
      replacement = TangleExpr::rational({Integer(0)});
    else
      continue;
    DiagramTemplate probe = t;
    probe.tangles[v] = replacement;
    if (is_split(assemble(probe))) out.push_back({v, genus(e)});
  }
  return out;
}

bool is_algebraically_alternating(const DiagramTemplate& t) {
  return is_alternating(assemble(basic_diagram(t)));
}

namespace {

using nlohmann::json;

}  // namespace

DiagramTemplate template_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidTemplate(std::string("template JSON: ") + e.what());
  }
  DiagramTemplate t;
  try {
    t.closure = j.value("closure", false);
    for (const auto& v : j.at("vertices"))
      t.vertices.push_back(v.at("id").get<std::string>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw InvalidTemplate("template JSON: edge is not a pair");
      std::array<PortRef, 2> edge;
      for (int k = 0; k < 2; ++k) {
        edge[k].vertex = e[k].at(0).get<std::string>();
        edge[k].port = e[k].at(1).get<int>();
      }
      t.edges.push_back(edge);
    }
    if (j.contains("tangles"))
      for (const auto& [v, txt] : j.at("tangles").items())
        t.tangles[v] = parse(txt.get<std::string>());
  } catch (const json::exception& e) {
    throw InvalidTemplate(std::string("template JSON: ") + e.what());
  }
  return t;
}

std::string template_to_json(const DiagramTemplate& t) {
  json j;
  j["closure"] = t.closure;
  j["vertices"] = json::array();
  for (const auto& v : t.vertices) j["vertices"].push_back({{"id", v}});
  j["edges"] = json::array();
  for (const auto& e : t.edges)
    j["edges"].push_back(json::array({json::array({e[0].vertex, e[0].port}),
                                      json::array({e[1].vertex, e[1].port})}));
  j["tangles"] = json::object();
  for (const auto& [v, expr] : t.tangles) j["tangles"][v] = render(expr);
  return j.dump(2);
}

DiagramTemplate load_template_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidTemplate("cannot open template file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return template_from_json(ss.str());
}

}  // namespace tangles
