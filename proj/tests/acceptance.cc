// Acceptance gate. Runs each criterion, prints one PASS/FAIL line per
// criterion and exits nonzero if any failed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "icol/color_set.h"
#include "icol/construct.h"
#include "icol/error.h"
#include "icol/invariants.h"
#include "icol/io.h"
#include "icol/oracle.h"
#include "test_support.h"

namespace icol {
namespace {

using testing::Cycle;
using testing::LoadFixture;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Fail(const std::string& what) {
    if (pass) detail << what;
    pass = false;
  }
};

// Oracle results for the catalog are shared by criteria 1, 5 and 8.
struct CatalogRun {
  std::vector<Graph> trees;
  std::vector<OracleResult> oracle;
};

const CatalogRun& Catalog8() {
  static const CatalogRun run = [] {
    CatalogRun r;
    r.trees = TreeCatalog(8);
    for (const Graph& tree : r.trees) r.oracle.push_back(ExactSpectrum(tree));
    return r;
  }();
  return run;
}

std::string Show(const PaletteSizes& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    out += (i ? "," : "") + std::to_string(s[i]);
  }
  return out + "}";
}

void TreeSpectrum(Outcome& o) {
  const CatalogRun& run = Catalog8();
  for (size_t i = 0; i < run.trees.size(); ++i) {
    const Graph& tree = run.trees[i];
    PaletteSizes expected =
        PaletteRange(MaxDegree(tree), MaxPathStarSize(tree).value);
    if (run.oracle[i].theta != expected || run.oracle[i].theta_cyc != expected) {
      o.Fail(DumpGraphJson(tree) + ": theta=" + Show(run.oracle[i].theta) +
             " theta_cyc=" + Show(run.oracle[i].theta_cyc) +
             " expected " + Show(expected));
    }
  }
  if (o.pass) o.detail << run.trees.size() << " trees with 1..8 edges";
}

void EvenCycles(Outcome& o) {
  for (int k = 2; k <= 4; ++k) {
    PaletteSizes theta = ExactSpectrum(Cycle(2 * k)).theta;
    if (theta != PaletteRange(2, k + 1)) {
      o.Fail("C_" + std::to_string(2 * k) + ": theta=" + Show(theta));
    }
  }
  if (o.pass) o.detail << "C_4, C_6, C_8";
}

void CompleteBipartite(Outcome& o) {
  Graph k32 = LoadFixture("k32.json");
  Graph k22 = LoadFixture("k22.json");
  SpectrumReport a = SpectrumFromOracle(k32, ExactSpectrum(k32));
  SpectrumReport b = SpectrumFromOracle(k22, ExactSpectrum(k22));
  auto value = [](const std::optional<int>& v) { return v ? *v : -1; };
  o.detail << "K_{3,2}: w_cyc=" << value(a.w_cyc) << " w_int=" << value(a.w_int)
           << "; K_{2,2}: W_int=" << value(b.W_int) << " W_cyc=" << value(b.W_cyc);
  if (value(a.w_cyc) != 3 || value(a.w_int) != 4 || value(b.W_int) != 3 ||
      value(b.W_cyc) != 4) {
    o.pass = false;
  }
}

void TriangleSeparation(Outcome& o) {
  Graph c3 = LoadFixture("cycle3.json");
  int64_t cyclic = CountColorings(c3, 3, ColoringMode::kCyclic);
  int64_t interval = CountColorings(c3, 3, ColoringMode::kInterval);
  o.detail << "C_3, t=3: cyclic=" << cyclic << " interval=" << interval;
  o.pass = cyclic >= 1 && interval == 0;
}

void ConstructorCompleteness(Outcome& o) {
  const CatalogRun& run = Catalog8();
  int built = 0, refused = 0;
  for (size_t i = 0; i < run.trees.size(); ++i) {
    const Graph& tree = run.trees[i];
    int lo = MaxDegree(tree), hi = MaxPathStarSize(tree).value;
    for (int t = 1; t <= tree.num_edges(); ++t) {
      ConstructionResult r = Construct(tree, {.t = t});
      const PaletteCounts& counts = run.oracle[i].counts[t - 1];
      std::string where = DumpGraphJson(tree) + " t=" + std::to_string(t);
      if (t >= lo && t <= hi) {
        const Coloring* c = std::get_if<Coloring>(&r);
        if (c == nullptr || !IsIntervalColoring(tree, *c)) {
          o.Fail(where + ": no valid coloring");
        }
        ++built;
      } else {
        if (!std::holds_alternative<Infeasibility>(r)) {
          o.Fail(where + ": expected infeasible");
        }
        if (counts.interval != 0 || counts.cyclic != 0) {
          o.Fail(where + ": oracle found colorings");
        }
        ++refused;
      }
    }
  }
  if (o.pass) {
    o.detail << built << " colorings built, " << refused
             << " infeasible palettes confirmed";
  }
}

void PathProperties(Outcome& o) {
  std::vector<Graph> graphs = TreeCatalog(7);
  for (int n = 3; n <= 6; ++n) graphs.push_back(Cycle(n));
  int64_t colorings = 0, checks = 0;
  for (const Graph& g : graphs) {
    std::vector<PathData> paths;
    for (const auto& walk : AllSimplePaths(g, 2)) {
      paths.push_back(MakePath(g, walk));
    }
    bool tree = IsTree(g);
    for (int t = 1; t <= g.num_edges(); ++t) {
      EnumerateColorings(g, t, ColoringMode::kCyclic, [&](const Coloring& c) {
        ++colorings;
        for (const PathData& p : paths) {
          checks += 2;
          if (!HoldsInternalStarsCyclic(g, c, p) ||
              !HoldsSegmentCovered(g, c, p)) {
            o.Fail(DumpGraphJson(g) + " " + DumpColoringJson(c));
          }
        }
        if (tree) {
          checks += 2;
          if (!HoldsPalettePathStar(g, c) || !HoldsPathStarBound(g, c)) {
            o.Fail(DumpGraphJson(g) + " " + DumpColoringJson(c));
          }
        }
        return true;
      });
    }
  }
  if (o.pass) {
    o.detail << colorings << " cyclic colorings, " << checks
             << " property checks, 0 counterexamples";
  }
}

void CyclicIntervalAlgebra(Outcome& o) {
  int64_t subsets = 0;
  for (int t = 1; t <= 12; ++t) {
    for (uint64_t bits = 0; bits < (uint64_t{1} << t); ++bits) {
      ColorSet s = ColorSet::FromBits(t, bits);
      ++subsets;
      if (IsCyclicInterval(s) !=
          testing::DefinitionalCyclicInterval(testing::StdSet(s), t)) {
        o.Fail(s.ToString() + " t=" + std::to_string(t));
      }
    }
  }
  if (o.pass) o.detail << subsets << " subsets, t=1..12";
}

void InequalityChain(Outcome& o) {
  std::vector<std::string> fixtures = {
      "path2.json",  "path3.json",  "path4.json",  "path5.json",
      "path6.json",  "path7.json",  "path8.json",  "star2.json",
      "star3.json",  "star4.json",  "star5.json",  "spider3x2.json",
      "cycle4.json", "cycle6.json", "cycle8.json", "k22.json",
      "k32.json"};
  int reports = 0;
  for (const std::string& name : fixtures) {
    Graph g = LoadFixture(name);
    if (!SatisfiesInequalityChain(SpectrumFromOracle(g, ExactSpectrum(g)))) {
      o.Fail(name);
    }
    ++reports;
  }
  const CatalogRun& run = Catalog8();
  for (size_t i = 0; i < run.trees.size(); ++i) {
    if (!SatisfiesInequalityChain(SpectrumFromOracle(run.trees[i], run.oracle[i]))) {
      o.Fail(DumpGraphJson(run.trees[i]));
    }
    ++reports;
  }
  if (o.pass) o.detail << reports << " oracle reports";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace icol

int main() {
  using namespace icol;
  std::vector<Criterion> criteria = {
      {1, "tree spectra equal [delta, M]", TreeSpectrum},
      {2, "even cycle interval spectra", EvenCycles},
      {3, "complete bipartite spectrum endpoints", CompleteBipartite},
      {4, "triangle separates cyclic from interval", TriangleSeparation},
      {5, "constructor completeness", ConstructorCompleteness},
      {6, "path property sweeps", PathProperties},
      {7, "cyclic interval closed form", CyclicIntervalAlgebra},
      {8, "inequality chain", InequalityChain},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    std::printf("criterion %d: %s - %s (%s) [%.2fs]\n", c.id,
                o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str(),
                seconds);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
