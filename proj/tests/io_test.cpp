#include <gtest/gtest.h>

#include <cmath>

#include "maxdom/errors.hpp"
#include "maxdom/generators.hpp"
#include "maxdom/io.hpp"
#include "maxdom/oracle.hpp"

using namespace maxdom;

namespace {

const InstanceKind kAllKinds[] = {InstanceKind::kGraph,      InstanceKind::kIntervals,       InstanceKind::kUnitIntervals,
                                  InstanceKind::kUnitSquares, InstanceKind::kUnitDisks,       InstanceKind::kRectsUnitHeight,
                                  InstanceKind::kDisks,       InstanceKind::kCnf2};

std::vector<std::string> violations_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const SchemaError& e) {
    return e.violations();
  }
  return {};
}

}  // namespace

TEST(ParseInstance, GraphPath) {
  const Instance inst = parse_instance(R"({"kind":"graph","n":3,"edges":[[0,1],[1,2]]})");
  EXPECT_EQ(inst.kind, InstanceKind::kGraph);
  EXPECT_EQ(inst.graph, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(ParseInstance, SingleSquare) {
  const Instance inst = parse_instance(
      R"({"kind":"unit_squares","line":{"theta_deg":0,"intercept":0},"objects":[{"cx":0,"cy":0}]})");
  EXPECT_EQ(inst.geometric.kind, ShapeKind::kUnitSquare);
  ASSERT_EQ(inst.geometric.size(), 1);
  EXPECT_EQ(inst.geometric.line.theta, 0.0);
}

TEST(ParseInstance, AnglesAreDegrees) {
  const Instance inst = parse_instance(
      R"({"kind":"unit_disks","line":{"theta_deg":90,"intercept":2},"objects":[{"cx":2.3,"cy":7}]})");
  EXPECT_NEAR(inst.geometric.line.theta, std::acos(-1.0) / 2.0, 1e-15);
  EXPECT_TRUE(inst.geometric.line.vertical());
}

TEST(ParseInstance, RejectsSelfLoop) {
  const auto v = violations_of(R"({"kind":"graph","n":2,"edges":[[0,0]]})");
  ASSERT_EQ(v.size(), 1U);
  EXPECT_NE(v[0].find("/edges/0"), std::string::npos);
}

TEST(ParseInstance, CollectsEveryViolationWithPaths) {
  const auto v = violations_of(
      R"({"kind":"rects_unit_height","line":{"theta_deg":45,"intercept":0},)"
      R"("objects":[{"cx":0,"cy":0,"width":0.5},{"cx":"a","cy":0,"width":2},{"cy":0,"width":2}]})");
  ASSERT_EQ(v.size(), 3U);
  EXPECT_NE(v[0].find("/objects/0/width"), std::string::npos);
  EXPECT_NE(v[1].find("/objects/1/cx"), std::string::npos);
  EXPECT_NE(v[2].find("/objects/2/cx"), std::string::npos);
}

TEST(ParseInstance, RejectsObjectsOffTheLine) {
  const auto v = violations_of(
      R"({"kind":"unit_squares","line":{"theta_deg":0,"intercept":0},"objects":[{"cx":0,"cy":0},{"cx":1,"cy":4}]})");
  ASSERT_EQ(v.size(), 1U);
  EXPECT_NE(v[0].find("/objects/1"), std::string::npos);
}

TEST(ParseInstance, RejectsMalformedAndUnknown) {
  EXPECT_THROW(parse_instance("{"), SchemaError);
  EXPECT_THROW(parse_instance("[]"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"hypergraph"})"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"graph","n":2,"edges":[],"schema_version":9})"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"unit_squares","objects":[]})"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"unit_intervals","intervals":[[0,1],[0,2]]})"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"intervals","intervals":[[1,1]]})"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"cnf2","num_vars":2,"clauses":[[1,3]]})"), SchemaError);
  EXPECT_THROW(parse_instance(R"({"kind":"cnf2","num_vars":2,"clauses":[]})"), SchemaError);
}

TEST(ParseInstance, Cnf) {
  const Instance inst = parse_instance(R"({"kind":"cnf2","num_vars":2,"clauses":[[1,-2],[-1,-1]]})");
  ASSERT_TRUE(inst.cnf.has_value());
  EXPECT_EQ(inst.cnf->clauses()[0].second, (Literal{1, false}));
  EXPECT_EQ(instance_graph(inst).size(), 2 * 2 + 2 + 2 * 2 * 2 + 1);
}

TEST(Generate, DeterministicAndByteIdentical) {
  const std::string a = emit_instance(generate(InstanceKind::kUnitIntervals, 5, 42));
  const std::string b = emit_instance(generate(InstanceKind::kUnitIntervals, 5, 42));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, emit_instance(generate(InstanceKind::kUnitIntervals, 5, 43)));
}

TEST(Generate, IntervalsStayInRange) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (auto kind : {InstanceKind::kIntervals, InstanceKind::kUnitIntervals}) {
      const auto inst = generate(kind, 7, seed);
      for (const auto& iv : inst.intervals) {
        EXPECT_GE(iv.a, 0.0);
        EXPECT_LE(iv.b, 7.0);
        EXPECT_LT(iv.a, iv.b);
      }
    }
  }
}

TEST(Generate, DisksWithinBoundsAndStabbed) {
  const auto inst = generate(InstanceKind::kDisks, 6, 7, GenParams{.max_diameter = 2.0, .min_diameter = 1.0});
  ASSERT_EQ(inst.geometric.size(), 6);
  for (const auto& o : inst.geometric.objects) {
    EXPECT_GE(o.diameter, 1.0);
    EXPECT_LE(o.diameter, 2.0);
    EXPECT_LE(std::abs(inst.geometric.line.offset({o.cx, o.cy})), o.diameter / 2.0);
  }
  EXPECT_NO_THROW(validate_instance(inst.geometric));
}

TEST(Generate, CnfShape) {
  const auto inst = generate(InstanceKind::kCnf2, 0, 9, GenParams{.num_vars = 3, .num_clauses = 5});
  ASSERT_TRUE(inst.cnf.has_value());
  EXPECT_EQ(inst.cnf->num_vars(), 3);
  EXPECT_EQ(inst.cnf->num_clauses(), 5);
}

TEST(Generate, InfeasibleParameters) {
  EXPECT_THROW(generate(InstanceKind::kGraph, 0, 1), InvalidInput);
  EXPECT_THROW(generate(InstanceKind::kDisks, 3, 1, GenParams{.max_diameter = 1.0, .min_diameter = 2.0}), InvalidInput);
  EXPECT_THROW(generate(InstanceKind::kCnf2, 0, 1, GenParams{.num_vars = 0}), InvalidInput);
}

TEST(Generate, CoordinatesOnTheGrid) {
  const auto inst = generate(InstanceKind::kUnitSquares, 20, 5, GenParams{.theta_deg = 30, .intercept = 0.5});
  for (const auto& o : inst.geometric.objects) {
    EXPECT_NEAR(o.cx * 1e6, std::round(o.cx * 1e6), 1e-6);
    EXPECT_NEAR(o.cy * 1e6, std::round(o.cy * 1e6), 1e-6);
  }
}

TEST(RoundTrip, ParseOfEmitIsIdentity) {
  for (auto kind : kAllKinds) {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
      const GenParams params{.theta_deg = 7.0 * static_cast<double>(seed), .intercept = 0.1};
      const Instance inst = generate(kind, 1 + static_cast<int>(seed % 9), seed, params);
      const std::string text = emit_instance(inst);
      const Instance back = parse_instance(text);
      ASSERT_EQ(back, inst) << to_string(kind) << " seed " << seed;
      EXPECT_EQ(emit_instance(back), text);
      EXPECT_EQ(instance_digest(back), instance_digest(inst));
    }
  }
}

TEST(Digest, SixteenHexDigitsAndSensitive) {
  const auto inst = generate(InstanceKind::kGraph, 6, 1);
  const auto digest = instance_digest(inst);
  EXPECT_EQ(digest.size(), 16U);
  EXPECT_NE(digest, instance_digest(generate(InstanceKind::kGraph, 6, 2)));
}

TEST(Dimacs, ParsesTwoCnf) {
  const Cnf2 cnf = parse_dimacs_cnf2("c example\np cnf 3 2\n1 -2 0\n-3 3 0\n");
  EXPECT_EQ(cnf.num_vars(), 3);
  ASSERT_EQ(cnf.num_clauses(), 2);
  EXPECT_EQ(cnf.clauses()[0].first, (Literal{0, true}));
  EXPECT_EQ(cnf.clauses()[0].second, (Literal{1, false}));
}

TEST(Dimacs, RejectsMalformedInput) {
  EXPECT_THROW(parse_dimacs_cnf2("1 2 0\n"), InvalidInput);
  EXPECT_THROW(parse_dimacs_cnf2("p cnf 2 1\n1 2 -1 0\n"), InvalidInput);
  EXPECT_THROW(parse_dimacs_cnf2("p cnf 2 1\n1 5 0\n"), InvalidInput);
  EXPECT_THROW(parse_dimacs_cnf2("p cnf 2 2\n1 2 0\n"), InvalidInput);
  EXPECT_THROW(parse_dimacs_cnf2("p cnf 2 1\n1 2\n"), InvalidInput);
}

TEST(Dot, ListsNodesAndEdges) {
  const std::string dot = to_dot(Graph(3, {{0, 2}}));
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 2;"), std::string::npos);
  EXPECT_NE(dot.find("  1;"), std::string::npos);
}

TEST(Results, RoundTripAndVerify) {
  const Instance inst = parse_instance(R"({"kind":"graph","n":3,"edges":[[0,1],[1,2]]})");
  const auto solved = oracle_max_dom_k(inst.graph, 1);
  ResultFile r;
  r.digest = instance_digest(inst);
  r.k = 1;
  r.nbd_size = solved.nbd_size;
  r.chosen = solved.chosen.members();
  r.per_k = std::vector<int>{0, 3};
  r.solver = "oracle";
  const ResultFile back = parse_result(emit_result(r));
  EXPECT_EQ(back.chosen, r.chosen);
  EXPECT_EQ(back.nbd_size, r.nbd_size);
  EXPECT_TRUE(verify_result(inst, back).ok);

  ResultFile tampered = back;
  tampered.chosen = {0};
  EXPECT_FALSE(verify_result(inst, tampered).ok);
  tampered.chosen = {1, 1};
  EXPECT_FALSE(verify_result(inst, tampered).ok);
  tampered = back;
  tampered.digest = "0000000000000000";
  EXPECT_FALSE(verify_result(inst, tampered).ok);
}

TEST(Results, VerifyAlphaQueries) {
  const Instance inst = parse_instance(R"({"kind":"graph","n":4,"edges":[]})");
  ResultFile r;
  r.digest = instance_digest(inst);
  r.alpha = 0.5;
  r.gamma = 2;
  r.chosen = {0, 3};
  EXPECT_TRUE(verify_result(inst, r).ok);
  r.chosen = {0};
  EXPECT_FALSE(verify_result(inst, r).ok);
}

TEST(Results, RejectsAmbiguousQuery) {
  EXPECT_THROW(parse_result(R"({"instance_digest":"x","chosen":[]})"), SchemaError);
  EXPECT_THROW(parse_result(R"({"instance_digest":"x","chosen":[],"k":1,"alpha":0.5})"), SchemaError);
}
