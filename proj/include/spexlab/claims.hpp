#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spexlab/json_io.hpp"

namespace spexlab {

struct Assertion {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ClaimResult {
  std::string id;
  Json params = Json::object();
  std::vector<Assertion> assertions;
  Json data = Json::object();  // measured values that are reported but not asserted
  double elapsed_seconds = 0.0;

  bool passed() const;
  const Assertion* first_failure() const;
};

struct ClaimOptions {
  std::size_t jobs = 1;
  std::uint64_t seed = 20240611;
  std::optional<std::size_t> p;  // cx2: restrict to one p
  std::optional<std::size_t> m;  // cx2 family constant / cx1 family m
  double spectral_tol = 1e-10;
  double filter_tol = 1e-6;
  std::size_t max_order = 9;
};

std::vector<std::string> claim_ids();
/// Throws InvalidArgument for an unknown id.
ClaimResult run_claim(const std::string& id, const ClaimOptions& opt = {});

Json to_json(const ClaimResult& c, bool timestamps = true);

}  // namespace spexlab
