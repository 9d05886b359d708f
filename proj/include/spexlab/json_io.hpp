#pragma once

#include <string>

#include <json.hpp>

#include "spexlab/asymptotics.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/oracle.hpp"
#include "spexlab/rational.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// git describe of this build.
const char* build_describe();

Json to_json(const Rational& q);  // "p/q"
Json to_json(const RationalMatrix& m);
Json to_json(const RationalPoly& p);  // coefficient strings, low degree first
Json to_json(const Interval& x);
Json to_json(const SpectralResult& r, bool with_vector = false);
Json to_json(const PartitionedGraph& pg, const std::vector<std::string>& labels = {});
Json to_json(const Graph& g);
Json to_json(const RestrictedSpace& s);
Json to_json(const ExtremalReport& r, const ForbiddenFamily& family, bool timestamps = true);
Json to_json(const FitResult& f);
Json to_json(const Thresholds& t);

/// {n, edges, partition?} back to a graph; the partition defaults to one class.
PartitionedGraph partitioned_graph_from_json(const Json& j);

/// Adds "schema" and "build" to a report object.
Json stamped(Json report);

}  // namespace spexlab
