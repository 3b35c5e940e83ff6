#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ldk/affine_weyl.hpp"
#include "ldk/root_datum.hpp"

/*
  Brute-force oracles and property suites behind the `verify` commands
  and the acceptance tests. The oracles deliberately avoid the code
  paths they check: BFS distances use only group multiplication against
  the generator set, and the subword oracle uses only the geodesic
  words produced by that BFS.
*/

namespace ldk {

struct BallEntry {
  AffineWeylElt elt;
  Int distance = 0;
  std::vector<int> geodesic; // letters of a shortest word from the identity
};

// breadth-first ball of W^Cox of the given radius over the Coxeter
// generating set; distances are Cayley-graph distances
std::vector<BallEntry> coxeter_ball(const AffineWeyl& w, Int radius);

// the finite subgroup Omega of length-zero elements (semisimple data)
std::vector<AffineWeylElt> omega_group(const AffineWeyl& w);

struct SuiteReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<std::string> failures; // human-readable, bounded

  void fail(const std::string& msg) {
    ok = false;
    if (failures.size() < 16) failures.push_back(msg);
  }
};

// IM length against BFS distance on all of Omega x ball
SuiteReport length_suite(const AffineWeyl& w, Int max_length, std::uint64_t seed);

// bruhat_leq against the subword-property oracle on all pairs in the
// ball, plus cross-coset incomparability
SuiteReport bruhat_suite(const AffineWeyl& w, Int max_length, std::uint64_t seed);

// Freudenthal character checks: W_f-invariance, Weyl dimension totals,
// support = weight_set (with the hull cross-check), quasi-minuscule
// zero weight counts
SuiteReport multiplicities_suite(const RootDatum& d, Int max_level);

// closure order versus weight sets on orbits of bounded level
SuiteReport closure_suite(const RootDatum& d, Int max_level);

// two_step_check over every simple root
SuiteReport two_step_suite(const RootDatum& d);

// Wakimoto grading identities on characters of bounded level
SuiteReport grading_suite(const RootDatum& d, Int max_level);

} // namespace ldk
