#pragma once

// JSON forms of elements and decisions.
//
//   permutation      [images...]                  0-indexed, x -> images[x]
//   wreath element   {"v": [residues], "s": [images]}
//   product element  [wreath element, ...]        a bare object is accepted
//                                                 for a single factor
//   matrix           {"p": p, "d": d, "entries": [row-major residues]}
//                    (a bare entry array is accepted when parsing)
//   tuple            [part, ...]
//   L wr Sym_n       {"base": [slot, ...], "s": [images]}
//   coset            {"coset": representative}
//
// Products compose left to right: x (a b) = (x a) b.

#include "json.hpp"

#include "prn/decision.hpp"
#include "prn/group.hpp"

namespace prn {

using Json = nlohmann::ordered_json;

Json to_json(const Elem& e);
Json to_json(const Decision& d);

// Parses `j` as an element of the same shape as `shape`. Throws
// Error(ParseError) on malformed input.
Elem elem_from_json(const Json& j, const Elem& shape);

// Parses and locates the element in `G`. Throws Error(ParseError) or
// Error(ElementNotInAmbient).
Index parse_element(const Group& G, const Json& j);
std::vector<Index> parse_elements(const Group& G, const Json& list);

}  // namespace prn
