#pragma once

#include "contactkit/contact.hpp"

#include <string>

namespace contactkit::cli {

// Deterministic canonical text: graded-lex monomial order (degree
// descending), explicit signs, form components in increasing index order.
// parse(print(v)) = v for Poly and RatFn.
std::string print_canonical(const Rat &r);
std::string print_canonical(const Poly &p);
std::string print_canonical(const RatFn &f);
std::string print_canonical(const VectorField &x);
std::string print_canonical(const DiffForm &w);
std::string print_canonical(const Density &d);

std::string variable_name(int n, int v);
std::string frame_name(int n, int v);   // d/dx1, ..., d/dz
std::string coframe_name(int n, int v); // dx1, ..., dz

} // namespace contactkit::cli
