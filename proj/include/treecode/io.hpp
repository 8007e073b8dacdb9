#pragma once

// Text file formats for codes, tree decompositions, graphs and channel costs,
// and JSON renderings of the library's results.

#include <string>
#include <string_view>

#include "json.hpp"
#include "treecode/decode.hpp"
#include "treecode/graphcodes.hpp"
#include "treecode/minrealzn.hpp"
#include "treecode/rsum.hpp"
#include "treecode/widths.hpp"

namespace treecode {

using Json = nlohmann::ordered_json;

// All readers accept blank lines and '#' comments and throw Error with the
// offending line number. Writers emit the canonical form, so
// write(read(write(x))) == write(x) and read(write(x)) == x.

/// q <prime> / labels <l1> ... <ln> / one generator row per line.
LinearCode read_code(std::string_view text);
std::string write_code(const LinearCode& c);

/// vertices <n> / edge <u> <v> per edge / omega <label> <vertex> per coordinate.
IndexTreeDecomposition read_tree(std::string_view text);
std::string write_tree(const IndexTreeDecomposition& td);

/// vertex <id> per vertex / edge <label> <u> <v> with u, v vertex ids.
Multigraph read_graph(std::string_view text);
std::string write_graph(const Multigraph& g);

/// One line of q costs per coordinate of `labels`, in that order.
ChannelObservation read_costs(std::string_view text, unsigned q, std::vector<CoordLabel> labels);
/// Shortest decimal forms that read back to the same doubles.
std::string write_costs(const ChannelObservation& obs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

Json to_json(const Matrix& m);
Json to_json(const std::vector<CoordLabel>& labels);
Json to_json(const LinearCode& c);
Json to_json(const IndexTreeDecomposition& td);
Json to_json(const GraphTreeDecomposition& gtd);
Json to_json(const DimensionProfile& p);
Json to_json(const TreeRealization& r);
Json to_json(const BuildTrace& t);
Json to_json(const RSumDecomposition& d);
Json to_json(const WidthReport& w);
Json to_json(const SandwichTally& s);
Json to_json(const Multigraph& g);
Json to_json(const YbarParameters& p);
Json to_json(const DecodeResult& d);
Json to_json(const ComplexityProfile& p);

}  // namespace treecode
