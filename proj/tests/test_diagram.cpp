#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "tangles/determinant.hpp"
#include "tangles/parser.hpp"
#include "tangles/slope.hpp"
#include "tangles/templates.hpp"
#include "test_support.hpp"

using namespace tangles;
using testsupport::GenOptions;
using testsupport::antiprism_template;
using testsupport::octahedron_template;
using testsupport::random_expr;
using testsupport::random_loop_free_expr;

namespace {

// connection implied by a fragment trace, as a parity type
ParityType traced_connection(const TangleFragment& f) {
  FragmentTrace t = trace_fragment(f);
  if (t.pairing[NW] == NE) return ParityType::zero_one;
  if (t.pairing[NW] == SW) return ParityType::one_zero;
  return ParityType::one_one;
}

}  // namespace

TEST_CASE("single crossings") {
  TangleFragment plus = fragment_of(parse("[1]"));
  CHECK(plus.xings.size() == 1);
  FragmentTrace t = trace_fragment(plus);
  CHECK(t.pairing[NW] == SE);
  CHECK(t.pairing[NE] == SW);
  CHECK(t.closed_components == 0);

  TangleFragment minus = fragment_of(parse("-[1]"));
  FragmentTrace t2 = trace_fragment(minus);
  CHECK(t2.pairing[NW] == SE);
  CHECK(t2.pairing[NE] == SW);
}

TEST_CASE("crossing counts match coefficient totals") {
  CHECK(fragment_of(parse("[3]")).xings.size() == 3);
  CHECK(fragment_of(parse("[2 3]")).xings.size() == 5);
  CHECK(fragment_of(parse("[2 0 3]")).xings.size() == 5);
  CHECK(fragment_of(parse("[0]")).xings.size() == 0);
  CHECK(fragment_of(parse("[1] * [2 2]")).xings.size() == 4);
  std::mt19937_64 rng(8801);
  GenOptions opt;
  for (int i = 0; i < 100; ++i) {
    ExprPtr e = random_expr(rng, opt);
    CHECK(Integer(fragment_of(e).xings.size()) == e->crossing_count());
  }
}

TEST_CASE("zero tangle and loops") {
  TangleFragment z = fragment_of(parse("[0]"));
  FragmentTrace t = trace_fragment(z);
  CHECK(t.pairing[NW] == NE);
  CHECK(t.pairing[SW] == SE);

  TangleFragment v = fragment_of(parse("[0]^r"));
  FragmentTrace tv = trace_fragment(v);
  CHECK(tv.pairing[NW] == SW);
  CHECK(tv.pairing[NE] == SE);

  // the sum of two vertical trivial tangles closes a loop
  TangleFragment vv = fragment_of(parse("[0]^r + [0]^r"));
  FragmentTrace tvv = trace_fragment(vv);
  CHECK(tvv.closed_components == 1);
  CHECK(tvv.pairing[NW] == SW);

  // canonical chain of m+1 verticals, rotated: Q_m
  TangleFragment q2 = fragment_of(parse("([0]^r + [0]^r + [0]^r)^r"));
  FragmentTrace tq = trace_fragment(q2);
  CHECK(tq.closed_components == 2);
  CHECK(tq.pairing[NW] == NE);
  TangleFragment q2lit = fragment_of(parse("Q2"));
  FragmentTrace tql = trace_fragment(q2lit);
  CHECK(tql.closed_components == 2);
  CHECK(tql.pairing[NW] == NE);

  // the chain builder and the literal give the same trace
  FragmentTrace tchain = trace_fragment(fragment_of(q_loop_chain(2)));
  CHECK(tchain.closed_components == tql.closed_components);
  CHECK(tchain.pairing == tql.pairing);
}

TEST_CASE("numerator and denominator closures") {
  LinkDiagram trefoil = numerator_closure(parse("[3]"));
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.free_loops == 0);
  CHECK(trace_components(trefoil) == 1);
  CHECK(is_alternating(trefoil));
  CHECK_FALSE(is_split(trefoil));

  LinkDiagram unknot = denominator_closure(parse("[3]"));
  CHECK(unknot.crossing_count() == 3);
  CHECK(trace_components(unknot) == 1);

  LinkDiagram unlink = numerator_closure(parse("[0]"));
  CHECK(unlink.crossing_count() == 0);
  CHECK(unlink.free_loops == 2);
  CHECK(trace_components(unlink) == 2);
  CHECK(is_split(unlink));
  CHECK(is_alternating(unlink));
}

TEST_CASE("face structure satisfies the sphere condition") {
  std::mt19937_64 rng(8802);
  GenOptions opt;
  for (int i = 0; i < 120; ++i) {
    ExprPtr e = random_expr(rng, opt);
    if (e->crossing_count() == 0) continue;
    LinkDiagram d = numerator_closure(e);
    if (d.crossing_count() == 0 || is_split(d)) continue;
    FaceStructure fs = trace_faces(d);
    long long V = static_cast<long long>(d.crossing_count());
    CHECK(V - 2 * V + fs.count == 2);
  }
}

TEST_CASE("loop oracle agrees with strand tracing") {
  std::mt19937_64 rng(8803);
  GenOptions opt;
  opt.allow_qloops = true;
  for (int i = 0; i < 500; ++i) {
    ExprPtr e = random_expr(rng, opt);
    bool predicted = has_loop(e);
    bool traced = trace_fragment(fragment_of(e)).closed_components > 0;
    CHECK(predicted == traced);
  }
}

TEST_CASE("connection oracle agrees with strand tracing") {
  std::mt19937_64 rng(8804);
  GenOptions opt;
  for (int i = 0; i < 500; ++i) {
    ExprPtr e = random_loop_free_expr(rng, opt);
    CHECK(connection_type(e) == traced_connection(fragment_of(e)));
  }
}

TEST_CASE("numerator closure component count by connection type") {
  std::mt19937_64 rng(8805);
  GenOptions opt;
  for (int i = 0; i < 200; ++i) {
    ExprPtr e = random_loop_free_expr(rng, opt);
    int comps = trace_components(numerator_closure(e));
    switch (connection_type(e)) {
      case ParityType::zero_one:
        CHECK(comps == 2);
        break;
      default:
        CHECK(comps == 1);
        break;
    }
  }
}

TEST_CASE("pd labels appear exactly twice") {
  std::mt19937_64 rng(8806);
  GenOptions opt;
  for (int i = 0; i < 500; ++i) {
    ExprPtr e = random_expr(rng, opt);
    LinkDiagram d = numerator_closure(e);
    if (d.crossing_count() == 0) continue;
    PDCode pd = pd_code(d);
    std::map<int, int> counts;
    for (const PDEntry& x : pd.entries)
      for (int a : x.arcs) ++counts[a];
    for (const auto& [label, count] : counts) {
      CHECK(label >= 1);
      CHECK(count == 2);
    }
    CHECK(counts.size() == 2 * d.crossing_count());
  }
}

TEST_CASE("pd text for the trefoil closure") {
  LinkDiagram trefoil = numerator_closure(parse("[3]"));
  std::string pd = pd_text(trefoil);
  int lines = 0;
  for (char c : pd)
    if (c == '\n') ++lines;
  CHECK(lines == 3);
  CHECK(pd.find("X[") == 0);
  std::string unlink_pd = pd_text(numerator_closure(parse("[0]")));
  CHECK(unlink_pd == "O[1]\nO[2]\n");
}

TEST_CASE("mirror and rotation preserve structure") {
  std::mt19937_64 rng(8807);
  GenOptions opt;
  for (int i = 0; i < 120; ++i) {
    ExprPtr e = random_loop_free_expr(rng, opt);
    ExprPtr r2 = TangleExpr::rotate(TangleExpr::rotate(e));
    CHECK(trace_fragment(fragment_of(e)).pairing ==
          trace_fragment(fragment_of(r2)).pairing);
    ExprPtr m2 = TangleExpr::reflect(TangleExpr::reflect(e));
    CHECK(trace_fragment(fragment_of(e)).pairing ==
          trace_fragment(fragment_of(m2)).pairing);
  }
}

TEST_CASE("template validation") {
  DiagramTemplate octa = octahedron_template();
  CHECK(validate_template(octa).valid());
  for (int n = 4; n <= 6; ++n) CHECK(validate_template(antiprism_template(n)).valid());

  // doubled edge between two vertices: bigon faces
  DiagramTemplate doubled;
  doubled.vertices = {"a", "b"};
  doubled.edges = {{PortRef{"a", 0}, PortRef{"b", 1}},
                   {PortRef{"a", 1}, PortRef{"b", 0}},
                   {PortRef{"a", 2}, PortRef{"b", 3}},
                   {PortRef{"a", 3}, PortRef{"b", 2}}};
  doubled.tangles["a"] = parse("[1]");
  doubled.tangles["b"] = parse("[1]");
  TemplateReport rep = validate_template(doubled);
  CHECK_FALSE(rep.valid());
  bool bigon = false;
  for (const auto& v : rep.violations)
    if (v.find("bigon") != std::string::npos) bigon = true;
  CHECK(bigon);

  // two disjoint vertices with self-wiring: disconnected
  DiagramTemplate split2;
  split2.vertices = {"a", "b"};
  split2.edges = {{PortRef{"a", 0}, PortRef{"a", 1}},
                  {PortRef{"a", 2}, PortRef{"a", 3}},
                  {PortRef{"b", 0}, PortRef{"b", 1}},
                  {PortRef{"b", 2}, PortRef{"b", 3}}};
  split2.tangles["a"] = parse("[1]");
  split2.tangles["b"] = parse("[1]");
  TemplateReport rep2 = validate_template(split2);
  CHECK_FALSE(rep2.valid());
  bool disconnected = false;
  for (const auto& v : rep2.violations)
    if (v.find("disconnected") != std::string::npos) disconnected = true;
  CHECK(disconnected);

  // closure templates are exempt from face checks
  CHECK(validate_template(numerator_template(parse("[3]"))).valid());
  CHECK(validate_template(denominator_template(parse("[3]"))).valid());
}

TEST_CASE("octahedron assembly") {
  DiagramTemplate octa = octahedron_template();
  LinkDiagram d = assemble(octa);
  CHECK(d.crossing_count() == 6);
  CHECK_FALSE(is_split(d));
  FaceStructure fs = trace_faces(d);
  CHECK(6 - 12 + fs.count == 2);
}

TEST_CASE("basic diagram replaces tangles by slope sign") {
  DiagramTemplate octa = octahedron_template();
  octa.tangles["t0"] = parse("[2 3]");      // slope 7/2 > 0
  octa.tangles["t1"] = parse("-[2 3]");     // slope < 0
  octa.tangles["t2"] = parse("[2] + -[2]"); // slope 0
  octa.tangles["b0"] = parse("([2] + -[2])^r");  // slope infinity
  DiagramTemplate basic = basic_diagram(octa);
  CHECK(render(basic.tangles["t0"]) == "[1]");
  CHECK(render(basic.tangles["t1"]) == "-[1]");
  CHECK(render(basic.tangles["t2"]) == "[0]");
  CHECK(render(basic.tangles["b0"]) == "[0]^r");
  CHECK(render(basic.tangles["b1"]) == "[1]");
}

TEST_CASE("cut tangles in closure fixtures") {
  // denominator closure of a slope-infinity tangle splits when the tangle
  // is replaced by the vertical rational tangle
  DiagramTemplate fix = denominator_template(parse("([2] + -[2])^r"));
  auto cuts = find_cut_tangles(fix);
  REQUIRE(cuts.size() == 1);
  CHECK(cuts[0].vertex == "t");
  CHECK(cuts[0].genus == 0);

  // numerator closure of the same tangle does not split
  DiagramTemplate num = numerator_template(parse("([2] + -[2])^r"));
  CHECK(find_cut_tangles(num).empty());

  // nonzero finite slopes leave no candidates
  DiagramTemplate tref = numerator_template(parse("[3]"));
  CHECK(find_cut_tangles(tref).empty());
}

TEST_CASE("algebraically alternating checks") {
  CHECK(is_algebraically_alternating(numerator_template(parse("[3]"))));
  CHECK(is_algebraically_alternating(denominator_template(parse("([2] + -[2])^r"))));

  DiagramTemplate octa = octahedron_template();
  bool octa_alt = is_algebraically_alternating(octa);
  // flipping one vertex sign must flip alternation on a triangle face
  DiagramTemplate octa2 = octa;
  octa2.tangles["t0"] = parse("-[1]");
  CHECK(octa_alt != is_algebraically_alternating(octa2));
}

TEST_CASE("split shadows") {
  LinkDiagram d = numerator_closure(parse("[0]"));
  CHECK(is_split(d));
  LinkDiagram tref = numerator_closure(parse("[3]"));
  CHECK_FALSE(is_split(tref));
  // a q-loop vertex adds crossingless circles: split
  LinkDiagram dq = numerator_closure(parse("Q1 + [3]"));
  CHECK(is_split(dq));
  CHECK(trace_components(dq) == 2);
}

TEST_CASE("template json round trip") {
  DiagramTemplate octa = octahedron_template();
  octa.tangles["t0"] = parse("[2 3]");
  std::string text = template_to_json(octa);
  DiagramTemplate back = template_from_json(text);
  CHECK(back.vertices == octa.vertices);
  CHECK(back.edges.size() == octa.edges.size());
  CHECK(render(back.tangles["t0"]) == "[2 3]");
  CHECK(back.closure == false);
  CHECK(validate_template(back).valid());
}

TEST_CASE("connection of a slope 16/7 tangle is horizontal") {
  ExprPtr e = parse("[2 3 2]");
  CHECK(slope(e) == ExtendedRational(Integer(16), Integer(7)));
  CHECK(connection_type(e) == ParityType::zero_one);
  CHECK(trace_fragment(fragment_of(e)).pairing[NW] == NE);
}

TEST_CASE("switching one crossing breaks alternation") {
  LinkDiagram trefoil = numerator_closure(parse("[3]"));
  REQUIRE(is_alternating(trefoil));
  LinkDiagram switched = trefoil;
  switched.xings[1].over02 = !switched.xings[1].over02;
  CHECK_FALSE(is_alternating(switched));
}

TEST_CASE("closure of a loop-bearing sum keeps the loop") {
  LinkDiagram d = numerator_closure(parse("[2]^r + [2]^r"));
  CHECK(trace_components(d) >= 2);
}

TEST_CASE("splitness monotonicity under joining") {
  // disjoint union of two closures is split; splicing one arc of each
  // together reconnects the shadow
  auto disjoint_union = [](const LinkDiagram& a, const LinkDiagram& b) {
    LinkDiagram d = a;
    int offset = 4 * static_cast<int>(a.xings.size());
    d.xings.insert(d.xings.end(), b.xings.begin(), b.xings.end());
    for (int p : b.partner) d.partner.push_back(p + offset);
    d.free_loops += b.free_loops;
    return d;
  };
  auto splice = [](LinkDiagram d) {
    // cut the arc at node 0 and an arc of the second shadow component,
    // then reconnect crosswise
    int a = 0, pa = d.partner[0];
    int b = -1;
    std::vector<int> comp(d.xings.size(), -1);
    std::function<void(int, int)> mark = [&](int c, int id) {
      if (comp[c] >= 0) return;
      comp[c] = id;
      for (int s = 0; s < 4; ++s) mark(d.partner[4 * c + s] / 4, id);
    };
    for (std::size_t c = 0; c < d.xings.size(); ++c)
      if (comp[c] < 0) mark(static_cast<int>(c), static_cast<int>(c));
    for (std::size_t x = 0; x < d.partner.size() && b < 0; ++x)
      if (comp[x / 4] != comp[0]) b = static_cast<int>(x);
    REQUIRE(b >= 0);
    int pb = d.partner[b];
    d.partner[a] = b;
    d.partner[b] = a;
    d.partner[pa] = pb;
    d.partner[pb] = pa;
    return d;
  };
  std::mt19937_64 rng(8808);
  testsupport::GenOptions opt;
  int done = 0;
  for (int i = 0; i < 80 && done < 30; ++i) {
    ExprPtr e1 = testsupport::random_loop_free_expr(rng, opt);
    ExprPtr e2 = testsupport::random_loop_free_expr(rng, opt);
    LinkDiagram a = numerator_closure(e1);
    LinkDiagram b = numerator_closure(e2);
    if (a.crossing_count() == 0 || b.crossing_count() == 0) continue;
    if (is_split(a) || is_split(b)) continue;
    LinkDiagram both = disjoint_union(a, b);
    CHECK(is_split(both));
    CHECK_FALSE(is_split(splice(both)));
    ++done;
  }
  CHECK(done == 30);
}
