#pragma once

#include <doctest.h>

#include <random>
#include <sstream>

#include "homkernel/cas/parser.hpp"
#include "homkernel/homspace.hpp"

namespace testutil {

using homkernel::cas::Scalar;

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"a",    "b",     "c",     "d",     "kappa", "eta", "alpha",
                                             "beta", "gamma", "delta", "x",     "y",     "z"};
  return n;
}

/// Parses over the usual parameter names.
inline Scalar S(const std::string& e) { return homkernel::cas::parse_expr(e, names()); }

inline std::vector<Scalar> V(std::initializer_list<const char*> es) {
  std::vector<Scalar> v;
  for (auto e : es) v.push_back(S(e));
  return v;
}

inline std::string show(const std::vector<Scalar>& v) { return homkernel::cas::vec_str(v); }

}  // namespace testutil
