#ifndef FACERING_IO_HPP
#define FACERING_IO_HPP

#include "facering/complex.hpp"

#include <iosfwd>
#include <string>

namespace facering {

// Text format: UTF-8 lines, '#' starts a comment, each other non-empty line
// is a whitespace-separated list of positive integers forming one facet. An
// optional line "ground 1 2 ... n" extends the ground set. A file with no
// facet lines denotes the void complex.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);

void write_complex(std::ostream& out, const SimplicialComplex& c);
void write_complex_file(const std::string& path, const SimplicialComplex& c);

}  // namespace facering

#endif
