#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tropk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

inline int sgn(const Rat& x) { return x.sign(); }
inline int sgn(const Int& x) { return x.sign(); }

// Serialization used throughout the CLI: "a" or "a/b" with b > 0.
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

QVec to_qvec(const ZVec& v);
QMat to_qmat(const ZMat& m);

}  // namespace tropk
