#pragma once

// The acceptance suite: one runner per criterion AC1..AC12, shared by the
// acceptance test binary and `rainbow repro`. Every budget and tolerance is a
// constant in acceptance.cpp.

#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  int threads = 1;
};

std::vector<std::string> criterion_ids();
// Throws BadParams for an unknown id.
CriterionResult run_criterion(const std::string& id, const AcceptanceOptions& opts = {});
std::vector<CriterionResult> run_all(const AcceptanceOptions& opts = {});

// One connected tuple of h in-band sets of [n] sampled at random; returns the
// size of its union. Used for the band-closure property at large n.
struct TupleSample {
  int h = 0;
  std::int64_t union_size = 0;
  bool connected = false;
  bool members_in_band = false;
};
TupleSample sample_connected_tuple(int n, int h, std::uint64_t seed);

}  // namespace rainbow
