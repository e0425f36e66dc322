#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "betabranch/constants/registry.hpp"
#include "betabranch/expansions/base.hpp"

namespace betabranch::constants {

using expansions::Base;

enum class Outcome { Holds, Fails, EqualityBoundary };
std::string_view to_string(Outcome o);

/// One exact comparison performed while checking an item.
struct Comparison {
  std::string lhs;     // description, e.g. "T_0((1+q^3)/(q^4-1))"
  std::string rhs;
  std::string expect;  // "<", ">", "="
  std::string actual;  // "<", ">", "="
  std::string lhs_approx;
  std::string rhs_approx;
};

struct VerificationReport {
  std::string id;       // e.g. "branching-points-2", "first-half-7"
  std::string base;     // base name or decimal
  Outcome outcome = Outcome::Holds;
  std::vector<Comparison> transcript;
  std::string statement;
  std::string window;                   // claimed range of validity, if any
  std::optional<bool> inside_window;    // whether the base lies in that range
  std::string note;
};

/// The four memberships of T_0/T_1 images of the J_q endpoints in the intervals
/// between consecutive unique-expansion points. Requires (1+sqrt5)/2 < q < q_f.
std::vector<VerificationReport> verify_prop_branching_points(const Base& base, const std::string& name);

/// The four bounds T_0^{-1}(y) < T_1(1/(q(q-1))) for y in {01(10)^inf, 011(10)^inf,
/// 10(01)^inf, 100(01)^inf}. Requires (1+sqrt5)/2 < q < q_f.
std::vector<VerificationReport> verify_lemma_sequence_bounds(const Base& base, const std::string& name);

/// The twelve memberships T_0^{-j}(y) + 1 in intervals of the (1^k(10)^inf) family,
/// with "for all j >= 3" items checked for 3 <= j <= j_max and the tail certified by
/// monotone convergence to 1. Requires (1+sqrt5)/2 < q < q_f and j_max >= 3.
std::vector<VerificationReport> verify_prop_first_half(const Base& base, const std::string& name,
                                                       std::size_t j_max = 10);

/// At q_aleph0: (a) the two boundary identities, (b) the expansion families of the
/// J_q endpoints for k = 0..5, (c) both endpoints are countably infinite and null
/// infinite, (d) the length-30 prefixes equal those generated by the families.
std::vector<VerificationReport> verify_prop_second_half(std::size_t max_states = 20000);

/// (a) alpha_3 = q_aleph0, (b) alpha_3 < ... < alpha_{k_max} < q_f, (c) the defining
/// identity at each alpha_k, (d) P_q = U_{k,q} at each alpha_k. Requires k_max >= 3.
std::vector<VerificationReport> verify_alpha_properties(std::size_t k_max = 10);

/// Period-four identities T_1(T_0(J_lo)) = J_hi, T_0(T_1(J_hi)) = J_lo, and the
/// q^2 scaling identities at the given points of (1/(q^2-1), q/(q^2-1)).
std::vector<VerificationReport> verify_identities(const Base& base, const std::string& name,
                                                  const std::vector<algebraic::FieldElement>& points);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace betabranch::constants
