#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "ldk/linalg.hpp"
#include "ldk/root_datum.hpp"

/*
  Weight combinatorics on X_*: dominance order, the sets W(lambda),
  characteristic-zero weight multiplicities of Weyl modules for the
  dual-side group (Freudenthal recursion), level filtrations, and the
  w_0-twist on characters.

  All multiplicities computed here are characteristic-zero ones; the
  places that consume them only ever ask for characters that agree with
  the characteristic-zero character under the standing hypotheses.
*/

namespace ldk {

struct MultTable {
  std::map<IVec, Int> entries;  // sorted, deterministic iteration
  std::optional<IVec> highest;  // highest weight tag when a module character

  Int total() const {
    Int t = 0;
    for (const auto& [w, m] : entries) t += m;
    return t;
  }
  Int at(const IVec& w) const {
    auto it = entries.find(w);
    return it == entries.end() ? 0 : it->second;
  }
  bool operator==(const MultTable& o) const { return entries == o.entries; }
};

// mu <= lambda iff lambda - mu is a nonnegative integer combination of
// simple coroots
bool dominance_leq(const RootDatum& d, const IVec& mu, const IVec& lambda);

// W(lambda) = { mu : mu^+ <= lambda^+ }, the weights of the Weyl module
// of highest weight lambda^+ for the dual-side group; W_f-stable
std::set<IVec> weight_set(const RootDatum& d, const IVec& lambda);

// independent characterization: conv(W_f lambda) intersected with
// lambda + ZR^vee (exact rational hull test; used as a cross-check)
bool in_hull_and_coset(const RootDatum& d, const IVec& lambda, const IVec& mu);

// full character of the Weyl module with highest coweight lambda_high
MultTable weyl_character(const RootDatum& d, const IVec& lambda_high);
Int weyl_multiplicity(const RootDatum& d, const IVec& lambda_high, const IVec& mu);

// Weyl dimension formula, computed over Q independently of Freudenthal
mpz_class weyl_dimension(const RootDatum& d, const IVec& lambda_high);

// number of short simple roots of the component (every simple root of a
// simply-laced component counts as short)
Int zero_weight_dim_qmin(const RootDatum& d, const CartanType& component);

Int level(const RootDatum& d, const IVec& coweight);
// bucket a character by exact level
std::map<Int, MultTable> filtration_layers(const RootDatum& d, const MultTable& tbl);

// a coweight with <varpi, alpha> = 1 and <varpi, beta> = 0 for the other
// simple roots; throws InputError with a torsion diagnosis when no
// integral solution exists
IVec fundamental_like(const RootDatum& d, std::size_t alpha_index);

// lambda |-> tbl(w_0(lambda)); totals preserved
MultTable wakimoto_grading(const RootDatum& d, const MultTable& tbl);

// all dominant coweights of level <= max_level (semisimple data only)
std::vector<IVec> dominant_coweights_up_to_level(const RootDatum& d, Int max_level);

} // namespace ldk
