#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "omfib/arrangement.hpp"
#include "omfib/order_complex.hpp"
#include "omfib/oriented_matroid.hpp"
#include "omfib/poset.hpp"
#include "omfib/sign_vector.hpp"

namespace omfib {

// Parse errors carry 1-based line numbers.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line);
    int line;
};

// Arrangement file: "arr <dim> <n>", then n lines of dim rational entries
// (integer numerator with an optional /denominator suffix). '#' comments.
Arrangement parse_arrangement(std::istream& in);
std::string write_arrangement(const Arrangement& arr);

// Covector file: "om <n>", then one covector per line over the alphabet +-0.
std::vector<SignVector> parse_covector_file(std::istream& in);
std::string write_covector_file(const std::vector<SignVector>& covectors);

// Poset file: "poset <n>", lines "cover <i> <j>" (i covered by j) and
// optional "label <i> <text>".
Poset parse_poset_file(std::istream& in);
std::string write_poset_file(const Poset& p);

// Facet export: one maximal simplex per line, space-separated vertex ids.
std::vector<std::vector<uint32_t>> parse_facet_file(std::istream& in, uint32_t* n_vertices);
std::string write_facet_file(const OrderComplex& oc);

// Either kind of oriented-matroid input, detected by the header token.
struct OMInput {
    std::variant<Arrangement, std::vector<SignVector>> data;
    bool is_arrangement() const { return data.index() == 0; }
};
OMInput parse_om_input(std::istream& in);

}  // namespace omfib
