#pragma once

// Igusa J2, J4, J6, J10 of the generic sextic as integer polynomials in
// a0..a6 divided by a power of two. Generated data lives in igusa_tables.cpp.

#include <array>
#include <cstddef>
#include <cstdint>

namespace g2::igusa {

struct Term {
  std::array<std::uint8_t, 7> e;  // exponents of a0..a6
  std::int64_t c;
};

struct Table {
  const Term* terms;
  std::size_t size;
  int log2_divisor;
};

// J2, J4, J6, J10 in that order.
extern const Table kTables[4];

}  // namespace g2::igusa
