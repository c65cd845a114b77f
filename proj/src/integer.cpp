#include <esb/integer.hpp>

namespace esb {

std::string join(const IntVector& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].str();
  }
  return out;
}

}  // namespace esb
