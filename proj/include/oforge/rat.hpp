#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oforge {

using Rat = mpq_class;

inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// "p/q" with q omitted when 1
inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace oforge
