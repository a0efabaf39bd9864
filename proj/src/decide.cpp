#include "tangles/decide.hpp"

#include <set>

#include "tangles/errors.hpp"
#include "tangles/parser.hpp"
#include "tangles/surface.hpp"

namespace tangles {

namespace {

void require_alternating(const DiagramTemplate& t) {
  TemplateReport r = validate_template(t);
  if (!r.valid()) throw InvalidTemplate("invalid template: " + r.violations.front());
  if (!is_algebraically_alternating(t))
    throw NotAlgebraicallyAlternating("basic diagram is not alternating");
}

std::vector<VertexQSummand> all_q_summands(const DiagramTemplate& t) {
  std::vector<VertexQSummand> out;
  for (const auto& v : t.vertices) {
    for (const QSummand& q : find_qm_summands(t.tangles.at(v)))
      out.push_back({v, q.m, q.where});
  }
  return out;
}

// Two Q-bearing vertices whose strings lie on a common link component;
// the loops of the two Q pieces can then chain through the template.
std::optional<std::pair<std::string, std::string>> chained_pair(
    const DiagramTemplate& t, const std::vector<VertexQSummand>& qs) {
  std::set<std::string> q_vertices;
  for (const auto& q : qs) q_vertices.insert(q.vertex);
  if (q_vertices.size() < 2) return std::nullopt;
  AssembledTemplate at = assemble_detailed(t);
  for (auto it = q_vertices.begin(); it != q_vertices.end(); ++it) {
    for (auto jt = std::next(it); jt != q_vertices.end(); ++jt) {
      const auto& pa = at.port_component.at(*it);
      const auto& pb = at.port_component.at(*jt);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (pa[a] == pb[b]) return std::make_pair(*it, *jt);
    }
  }
  return std::nullopt;
}

Witness q_summand_witness(const VertexQSummand& q, const ExprPtr& tangle) {
  Witness w;
  w.kind = "q-summand";
  w.vertex = q.vertex;
  w.path = q.path;
  w.q_m = q.m;
  w.subexpr = render(subexpr_at(tangle, q.path));
  return w;
}

}  // namespace

std::string tri_state_name(TriState v) {
  switch (v) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::unknown:
      return "unknown";
  }
  return "?";
}

Decision decide_closed_surface(const DiagramTemplate& t) {
  require_alternating(t);
  if (is_split(assemble(basic_diagram(t)))) {
    Witness w;
    w.kind = "basic-split";
    return {true, w};
  }
  for (const auto& v : t.vertices) {
    ExprPtr expanded = expand_products(t.tangles.at(v));
    std::vector<TreePath> closed = find_closed_subtangles(expanded);
    if (!closed.empty()) {
      Witness w;
      w.kind = "closed-subtangle";
      w.vertex = v;
      w.path = closed.front();
      w.subexpr = render(subexpr_at(expanded, closed.front()));
      return {true, w};
    }
  }
  // Q_{m>=2} forces a closed torus; two chained Q pieces do as well.
  std::vector<VertexQSummand> qs = all_q_summands(t);
  for (const auto& q : qs) {
    if (q.m >= 2) {
      Witness w = q_summand_witness(q, t.tangles.at(q.vertex));
      return {true, w};
    }
  }
  if (auto pair = chained_pair(t, qs)) {
    Witness w;
    w.kind = "q-chain";
    w.vertex = pair->first;
    w.vertex2 = pair->second;
    w.q_m = 2;
    return {true, w};
  }
  return {false, std::nullopt};
}

Decision decide_sphere(const DiagramTemplate& t) {
  require_alternating(t);
  for (const CutTangle& c : find_cut_tangles(t)) {
    if (c.genus == 0) {
      Witness w;
      w.kind = "cut-tangle";
      w.vertex = c.vertex;
      w.genus = 0;
      w.subexpr = render(t.tangles.at(c.vertex));
      return {true, w};
    }
  }
  return {false, std::nullopt};
}

TorusDecision decide_torus(const DiagramTemplate& t) {
  require_alternating(t);
  if (decide_sphere(t).value)
    throw PreconditionViolated("a genus-0 cut tangle exists");

  for (const CutTangle& c : find_cut_tangles(t)) {
    if (c.genus == 1) {
      Witness w;
      w.kind = "cut-tangle";
      w.vertex = c.vertex;
      w.genus = 1;
      w.subexpr = render(t.tangles.at(c.vertex));
      return {TriState::yes, w};
    }
  }
  std::vector<VertexQSummand> qs = all_q_summands(t);
  for (const auto& q : qs) {
    if (q.m >= 2)
      return {TriState::yes, q_summand_witness(q, t.tangles.at(q.vertex))};
  }
  if (auto pair = chained_pair(t, qs)) {
    Witness w;
    w.kind = "q-chain";
    w.vertex = pair->first;
    w.vertex2 = pair->second;
    w.q_m = 2;
    return {TriState::yes, w};
  }
  if (qs.empty()) return {TriState::no, std::nullopt};
  Witness found;
  found.kind = "q-summand";
  found.vertex = qs.front().vertex;
  found.q_m = qs.front().m;
  found.path = qs.front().path;
  found.subexpr =
      render(subexpr_at(t.tangles.at(qs.front().vertex), qs.front().path));
  return {TriState::unknown, found};
}

bool check_meridian_lemma(const DiagramTemplate& t) {
  require_alternating(t);
  if (trace_components(assemble(t)) != 1)
    throw PreconditionViolated("diagram is not a knot");
  for (const auto& v : t.vertices)
    if (has_loop(t.tangles.at(v)))
      throw PreconditionViolated("vertex tangle has a loop component");
  return !decide_closed_surface(t).value;
}

SurfaceExistenceReport decide_all(const DiagramTemplate& t) {
  SurfaceExistenceReport rep;
  require_alternating(t);
  rep.alternating_precondition = true;
  rep.closed_surface = decide_closed_surface(t);
  rep.sphere = decide_sphere(t);
  rep.no_genus0_cut_tangle = !rep.sphere.value;
  rep.q_summands = all_q_summands(t);
  if (rep.no_genus0_cut_tangle) {
    TorusDecision td = decide_torus(t);
    rep.torus = td;
  } else {
    rep.torus = {TriState::unknown, std::nullopt};
  }
  // structural invariants of the report
  if (rep.sphere.value && !rep.closed_surface.value)
    throw std::logic_error("sphere without closed surface");
  if (rep.torus.value == TriState::yes && !rep.closed_surface.value)
    throw std::logic_error("torus without closed surface");
  return rep;
}

bool verify_witness(const DiagramTemplate& t, const Witness& w) {
  if (w.kind == "basic-split")
    return is_split(assemble(basic_diagram(t)));
  if (w.kind == "closed-subtangle") {
    auto it = t.tangles.find(w.vertex);
    if (it == t.tangles.end()) return false;
    ExprPtr expanded = expand_products(it->second);
    ExprPtr sub = subexpr_at(expanded, w.path);
    return sub->kind() == ExprKind::sum && slope(sub->left()).is_infinite() &&
           slope(sub->right()).is_infinite();
  }
  if (w.kind == "cut-tangle") {
    auto it = t.tangles.find(w.vertex);
    if (it == t.tangles.end()) return false;
    ExtendedRational s = slope(it->second);
    if (!s.is_infinite() && !s.is_zero()) return false;
    DiagramTemplate probe = t;
    probe.tangles[w.vertex] =
        s.is_infinite() ? TangleExpr::rotate(TangleExpr::rational({Integer(0)}))
                        : TangleExpr::rational({Integer(0)});
    return is_split(assemble(probe)) && genus(it->second) == w.genus;
  }
  if (w.kind == "q-summand") {
    auto it = t.tangles.find(w.vertex);
    if (it == t.tangles.end()) return false;
    for (const QSummand& q : find_qm_summands(it->second))
      if (q.m == w.q_m && q.where == w.path) return true;
    return false;
  }
  if (w.kind == "q-chain") {
    std::vector<VertexQSummand> qs = all_q_summands(t);
    auto pair = chained_pair(t, qs);
    return pair.has_value();
  }
  return false;
}

}  // namespace tangles
