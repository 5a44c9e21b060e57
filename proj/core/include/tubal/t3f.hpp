#pragma once

#include <iosfwd>
#include <string>

#include "tubal/tensor3.hpp"

namespace tubal {

// "T3F" binary tensor format: magic "T3F1", three u64 little-endian dims,
// then n1*n2*n3 little-endian IEEE-754 doubles in the fixed layout.

void write_t3f(std::ostream& out, const Tensor3& x);
void write_t3f(const std::string& path, const Tensor3& x);

Tensor3 read_t3f(std::istream& in);
Tensor3 read_t3f(const std::string& path);

}  // namespace tubal
