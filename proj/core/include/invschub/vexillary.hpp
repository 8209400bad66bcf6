#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invschub/involution.hpp"

namespace invschub {

struct NamedPattern {
  Involution pattern;
  int size;  // m with pattern in I_m
};

// The eleven obstructions to P-vexillarity.
const std::vector<NamedPattern>& eleven_p_patterns();
// The five obstructions to Q-vexillarity.
const std::vector<NamedPattern>& five_q_patterns();
// The two obstructions that remain for 321-avoiding involutions.
const std::vector<NamedPattern>& two_321_patterns();

// A z-invariant set E with |E| = m and [z]_E = p, if one exists.
// m defaults to max(supp p), or 0 for the identity.
std::optional<std::vector<int>> contains_inv_pattern(const Involution& z, const Involution& p,
                                                     int m = -1);

struct PatternHit {
  Involution pattern;
  std::vector<int> witness;
};
std::optional<PatternHit> first_pattern_hit(const Involution& z, const std::vector<NamedPattern>& list);

enum class VexMethod { patterns, direct, vexillary };
// patterns: avoids the eleven; direct: F-hat_z is a single P_lambda.
bool is_p_vexillary(const Involution& z, VexMethod method = VexMethod::patterns);
// patterns: avoids the five; direct: G-hat_z is a single Q_lambda; vexillary: avoids 2143.
bool is_q_vexillary(const Involution& z, VexMethod method = VexMethod::vexillary);
bool contains_2143(const Permutation& w);

}  // namespace invschub
