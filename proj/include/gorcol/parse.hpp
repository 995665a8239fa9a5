#pragma once

#include <string>

#include "gorcol/ideal.hpp"

namespace gorcol {

/// Textual ideal description as it arrives from the command line.
struct IdealSpec {
  std::size_t d = 0;
  Field field;
  std::string generators;
  std::optional<int> degree_bound;
};

/// "q" or "f:<p>".
Field parse_field(const std::string& text);
std::string field_name(const Field& f);

/// Grammar: generators separated by ','; terms by '+'/'-'; a term is an
/// optional coefficient (integer or integer/positive-integer) and
/// '*'-separated powers var or var^exp. Variables are x,y,z,w for d <= 4
/// (x1..xd also accepted) and x1..xd beyond. Errors carry positions.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

std::vector<Polynomial> parse_generators(const RingPtr& ring, const std::string& text);

/// Builds the ring and the ideal handle; every generator must be
/// homogeneous. The default truncation bound follows the quotient rule
/// for the largest generator degree.
IdealHandle parse_ideal(const IdealSpec& spec);

std::string print_polynomial(const Polynomial& p);
std::string print_generators(const IdealHandle& ideal);

}  // namespace gorcol
