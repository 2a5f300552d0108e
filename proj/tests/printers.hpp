#pragma once

// GoogleTest printers so failures show values instead of raw bytes.

#include <ostream>

#include <ppmat/nmatrix.hpp>
#include <ppmat/partition.hpp>
#include <ppmat/plane_partition.hpp>
#include <ppmat/word.hpp>

namespace ppmat {

inline void PrintTo(const PlanePartition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const NMatrix& d, std::ostream* os) { *os << d.to_string(); }
inline void PrintTo(const Word& w, std::ostream* os) { *os << w.to_string(); }
inline void PrintTo(const Cell& c, std::ostream* os) { *os << '(' << c.i << ',' << c.j << ')'; }

}  // namespace ppmat
