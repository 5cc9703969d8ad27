#ifndef ICOL_IO_H_
#define ICOL_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "icol/coloring.h"
#include "icol/graph.h"
#include "icol/invariants.h"
#include "icol/oracle.h"

namespace icol {

// Graph JSON: {"n": <int>, "edges": [[u, v], ...]}.
// Edge list: one "u v" pair per line; blank lines and '#' comments are
// skipped; n is the largest index plus one.
// ParseGraph picks the format from the first non-blank character ('{' means
// JSON). All parsers throw kParse on malformed text and propagate Graph
// validation errors.
Graph ParseGraphJson(std::string_view text);
Graph ParseEdgeList(std::string_view text);
Graph ParseGraph(std::string_view text);

std::string DumpGraphJson(const Graph& g);
// Vertices that cannot be inferred from the edge list (the single-vertex
// graph) are not representable; throws kPrecondition for it.
std::string DumpEdgeList(const Graph& g);

// Coloring JSON: {"t": <int>, "colors": [<color of edge 0>, ...]}.
Coloring ParseColoringJson(std::string_view text);
std::string DumpColoringJson(const Coloring& c);

// Spectra are written as {"interval": [lo, hi]} when contiguous and as
// {"set": [...]} otherwise (including the empty set). Absent report fields
// are omitted; "provenance" is always present.
std::string DumpSpectrumReportJson(const SpectrumReport& report);
std::string DumpOracleResultJson(const OracleResult& result);

// Undirected DOT graph. With a coloring, each edge carries its color as
// label. Output depends only on the inputs.
std::string DumpDot(const Graph& g, const std::optional<Coloring>& coloring = {});

// Reads a whole file. Throws kParse when it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace icol

#endif  // ICOL_IO_H_
