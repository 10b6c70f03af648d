#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bgg {

// Exact rational scalar used throughout; no floating point anywhere.
using Rat = mpq_class;

using QVec = std::vector<Rat>;
using IVec = std::vector<long>;

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact conversion to long; throws on non-integers or overflow.
long to_long(const Rat& q);

std::string rat_string(const Rat& q);

QVec to_qvec(const IVec& v);
IVec to_ivec(const QVec& v);  // throws if any entry is not an integer

std::string vec_string(const QVec& v);
std::string vec_string(const IVec& v);

}  // namespace bgg
