#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/graph.hpp"
#include "spexlab/patterns.hpp"
#include "spexlab/spectral.hpp"

namespace spexlab {

struct OracleOptions {
  std::size_t jobs = 1;
  std::size_t max_order = 9;   // enumeration guardrail
  bool allow_large = false;    // override the guardrail
  double filter_tol = 1e-6;    // float pre-filter window for SPEX
  double spectral_tol = 1e-10;
};

/// One representative per isomorphism class on n vertices (canonical labelling),
/// ordered by edge count then canonical graph6. If `keep` is given, only graphs
/// satisfying it are kept and extended; it must be closed under edge deletion.
std::vector<Graph> enumerate_graphs(std::size_t n, const OracleOptions& opt = {},
                                    const std::function<bool(const Graph&)>& keep = {});

enum class PartPolicy { Any, Largest, Smallest };

struct RestrictedSpace {
  std::size_t r = 2;
  std::size_t max_tree_order = 1;
  PartPolicy policy = PartPolicy::Any;
  std::size_t part_slack = 0;   // 0: Turán part sizes; at most 2
  std::size_t edit_budget = 0;  // at most 3
};

std::string to_string(PartPolicy p);
PartPolicy parse_part_policy(const std::string& s);

struct AddedEdgeWitness {
  Edge edge;
  std::size_t member;  // family member created by adding the edge
};

enum class ReportKind { Ex, Spex, RestrictedEx };

struct ExtremalReport {
  ReportKind kind = ReportKind::Ex;
  std::size_t n = 0;
  std::string family_id;
  std::size_t ex_value = 0;                  // edge maximum (Ex, RestrictedEx), edges of SPEX graphs otherwise
  double spex_value = 0.0;                   // Spex only
  std::optional<PerronCertificate> certificate;  // Spex only
  std::vector<std::string> extremal_set;     // canonical graph6, sorted
  std::vector<std::vector<AddedEdgeWitness>> witnesses;  // parallel to extremal_set (Ex)
  bool restricted = false;
  std::optional<RestrictedSpace> space;
  std::size_t candidates = 0;                // graphs examined
  double elapsed_seconds = 0.0;
};

ExtremalReport ex_oracle(std::size_t n, const ForbiddenFamily& family, const OracleOptions& opt = {},
                         const std::string& family_id = "");
ExtremalReport spex_oracle(std::size_t n, const ForbiddenFamily& family, const OracleOptions& opt = {},
                           const std::string& family_id = "");
ExtremalReport restricted_ex(std::size_t n, const ForbiddenFamily& family, const RestrictedSpace& space,
                             const OracleOptions& opt = {}, const std::string& family_id = "");

/// Allowed part sizes [lo, hi] of the restricted space.
std::pair<std::size_t, std::size_t> restricted_part_range(std::size_t n, std::size_t r, std::size_t slack);

}  // namespace spexlab
