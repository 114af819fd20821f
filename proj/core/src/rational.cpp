#include "topoindex/rational.hpp"

namespace topoindex {

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace topoindex
