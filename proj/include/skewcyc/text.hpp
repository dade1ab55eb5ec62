#pragma once

// Text and JSON forms:
//   field      p=3,m=2,mod=1,0,1
//   element    [c0,c1,...]
//   ring elem  [..]|[..]|[..]
//   vector     semicolon separated elements
//   polynomial c0 + c1*x + c2*x^2   (also x^2+2x+1 with prime-field integers)
//   code       {"field":{"p":3,"m":2,"mod":[1,0,1]},"aut":1,"n":5,"g1":..,"g2":..,"g3":..}

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "skewcyc/codes.hpp"

namespace skewcyc {

FieldPtr parse_field(std::string_view text);
FieldElem parse_field_elem(std::string_view text, const FiniteField& field);
RingElem parse_ring_elem(std::string_view text, const FiniteField& field);
FqVector parse_fq_vector(std::string_view text, const FiniteField& field);
RVector parse_r_vector(std::string_view text, const FiniteField& field);
FqPoly parse_fq_poly(std::string_view text, const FieldPtr& field, const AutExponent& aut);
RPoly parse_r_poly(std::string_view text, const FieldPtr& field, const AutExponent& aut);

/// Canonical form: ascending degree, zero terms omitted, unit coefficients on
/// x^k dropped; the zero polynomial prints as `0`.
std::string to_string(const FqPoly& f);
std::string to_string(const RPoly& f);
std::string to_string(std::span<const FieldElem> v);
std::string to_string(std::span<const RingElem> v);

nlohmann::json field_to_json(const FiniteField& field);
FieldPtr field_from_json(const nlohmann::json& j);
nlohmann::json code_to_json(const SkewCyclicCode& code);
SkewCyclicCode code_from_json(const nlohmann::json& j);

}  // namespace skewcyc
