#pragma once

#include <string>

#include "addiso/codes.hpp"
#include "addiso/isometry.hpp"
#include "addiso/solutions.hpp"

namespace addiso {

// Field descriptor: GF(p^d)[g]^n[h] with coefficient lists low degree first;
// ^d defaults to 1, ^n defaults to 1, omitted brackets mean default moduli.
// Coefficients of h are written as K-element indices.
FieldL parse_field_descriptor(const std::string& text);
std::string format_field_descriptor(const FieldL& field);

// Code file: `field <descriptor>`, `code <k> <m>`, then k rows of m elements.
// A map file continues with `map` and k image rows. Elements are written as
// bracketed coordinate lists (entries are K-element indices) or bare element
// indices; `#` starts a comment.
GenMatrix parse_code_file(const std::string& text);
CodeMap parse_map_file(const std::string& text);
std::string format_code_file(const GenMatrix& a);
std::string format_map_file(const CodeMap& f);

std::string lelem_to_string(const FieldL& field, LElem x);
std::string kvec_to_string(const KVec& v);
std::string subspace_to_string(const KSubspace& s);
std::string space_tuple_to_string(const SpaceTuple& t);
std::string matrix_to_string(const KMatrix& m);
std::string monomial_to_string(const MonomialMap& h);

}  // namespace addiso
