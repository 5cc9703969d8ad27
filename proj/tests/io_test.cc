#include "icol/io.h"

#include <gtest/gtest.h>

#include <random>

#include "icol/error.h"
#include "icol/invariants.h"
#include "icol/oracle.h"
#include "test_support.h"

namespace icol {
namespace {

using testing::Cycle;
using testing::PathGraph;

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected icol::Error";
  return ErrorKind::kPrecondition;
}

TEST(GraphJsonTest, ParseAndDump) {
  Graph g = ParseGraphJson(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
  EXPECT_EQ(g, PathGraph(3));
  EXPECT_EQ(DumpGraphJson(g), std::string(R"({"n":3,"edges":[[0,1],[1,2]]})") + "\n");
  EXPECT_EQ(ParseGraphJson(R"({"edges": [[0, 1], [1, 2]]})"), g);
}

TEST(GraphJsonTest, Errors) {
  EXPECT_EQ(KindOf([] { ParseGraphJson("{"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseGraphJson(R"({"n": 2})"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseGraphJson(R"({"edges": [[0, "x"]]})"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseGraphJson(R"({"edges": [[0, 1, 2]]})"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseGraphJson(R"({"n": 2, "edges": [[0, 0]]})"); }),
            ErrorKind::kLoop);
  EXPECT_EQ(KindOf([] { ParseGraphJson(R"({"n": 4, "edges": [[0, 1]]})"); }),
            ErrorKind::kDisconnected);
}

TEST(EdgeListTest, ParseAndDump) {
  Graph g = ParseEdgeList("# a path\n0 1\n\n1 2   \n");
  EXPECT_EQ(g, PathGraph(3));
  EXPECT_EQ(DumpEdgeList(g), "0 1\n1 2\n");
  EXPECT_EQ(KindOf([] { ParseEdgeList("0\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseEdgeList("0 1 2\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseEdgeList("# nothing\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { DumpEdgeList(Graph(1, {})); }),
            ErrorKind::kPrecondition);
}

TEST(ParseGraphTest, DetectsFormat) {
  EXPECT_EQ(ParseGraph("  {\"edges\": [[0,1]]}"), PathGraph(2));
  EXPECT_EQ(ParseGraph("0 1\n"), PathGraph(2));
  EXPECT_EQ(testing::LoadFixture("path4.txt"), testing::LoadFixture("path4.json"));
  EXPECT_EQ(KindOf([] { ReadFile("/nonexistent/graph.json"); }),
            ErrorKind::kParse);
}

TEST(ColoringJsonTest, RoundTripAndErrors) {
  Coloring c{3, {1, 2, 3}};
  EXPECT_EQ(DumpColoringJson(c), std::string(R"({"t":3,"colors":[1,2,3]})") + "\n");
  EXPECT_EQ(ParseColoringJson(DumpColoringJson(c)), c);
  EXPECT_EQ(KindOf([] { ParseColoringJson(R"({"colors": [1]})"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseColoringJson(R"({"t": 2, "colors": [1.5]})"); }),
            ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { ParseColoringJson("[1, 2]"); }), ErrorKind::kParse);
}

TEST(ReportJsonTest, TreeReport) {
  std::string text = DumpSpectrumReportJson(SpectrumTree(PathGraph(4)));
  EXPECT_NE(text.find(R"("theta":{"interval":[2,3]})"), std::string::npos)
      << text;
  EXPECT_NE(text.find(R"("m_of_h":3)"), std::string::npos);
  EXPECT_NE(text.find(R"("provenance":"formula")"), std::string::npos);
  EXPECT_LT(text.find("num_edges"), text.find("delta"));
}

TEST(ReportJsonTest, NonContiguousAndEmptySpectra) {
  SpectrumReport c5 = SpectrumFromOracle(Cycle(5), ExactSpectrum(Cycle(5)));
  std::string text = DumpSpectrumReportJson(c5);
  EXPECT_NE(text.find(R"("theta_cyc":{"set":[3,5]})"), std::string::npos)
      << text;
  EXPECT_NE(text.find(R"("theta":{"set":[]})"), std::string::npos) << text;
  EXPECT_EQ(text.find("w_int"), std::string::npos);
  EXPECT_NE(text.find(R"("provenance":"oracle")"), std::string::npos);
}

TEST(DotTest, Output) {
  EXPECT_EQ(DumpDot(PathGraph(2)), "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
  EXPECT_EQ(DumpDot(PathGraph(2), Coloring{1, {1}}),
            "graph G {\n  0;\n  1;\n  0 -- 1 [label=\"1\"];\n}\n");
}

TEST(GraphJsonTest, RoundTripOnRandomTrees) {
  std::mt19937 rng(17);
  std::vector<Graph> graphs = TreeCatalog(6);
  for (int i = 0; i < 50; ++i) graphs.push_back(testing::RandomTree(30, rng));
  for (const Graph& g : graphs) {
    EXPECT_EQ(ParseGraphJson(DumpGraphJson(g)), g);
    EXPECT_EQ(ParseEdgeList(DumpEdgeList(g)), g);
  }
}

}  // namespace
}  // namespace icol
