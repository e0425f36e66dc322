#pragma once

#include <string>
#include <string_view>

#include "betabranch/algebraic/number_field.hpp"
#include "betabranch/expansions/base.hpp"

namespace betabranch::cli {

/// A parsed --base argument: the text as given and the base it denotes.
struct BaseSpec {
  std::string text;
  expansions::Base base;
};

/// Accepts a registry name ("q_aleph0", "alpha_5"), a rational ("3/2", "1.5"), or a
/// polynomial in x (human form, coefficient list or relation), optionally followed by
/// "@lo,hi" to select the root in (lo, hi). Without an interval the polynomial must have
/// exactly one root in (1, 2). Throws ParseError on malformed text and Error(InvalidArgument)
/// or Error(BaseOutOfRange) when no suitable root exists.
BaseSpec parse_base_spec(std::string_view text);

/// "word:PRE|PER" evaluates the eventually periodic word; "fe:<expr>" evaluates an
/// expression in q with rational literals and exact division in Q(q).
/// Throws ParseError on malformed text and Error(InverseOfZero) on division by zero.
algebraic::FieldElement parse_point_spec(const expansions::Base& base, std::string_view text);

}  // namespace betabranch::cli
