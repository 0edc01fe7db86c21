#include "dgq/element.hpp"

#include <sstream>

namespace dgq {

namespace {

void key(std::ostream& os, Id k) { os << '#' << k; }
template <std::size_t N>
void key(std::ostream& os, const std::array<Id, N>& k) {
  for (std::size_t i = 0; i < N; ++i) os << (i ? "(x)#" : "#") << k[i];
}

template <class K>
std::string render(const Combination<K>& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << c << '*';
    key(os, k);
  }
  return os.str();
}

}  // namespace

std::string to_string(const Element& e) { return render(e); }
std::string to_string(const Tensor2& e) { return render(e); }
std::string to_string(const Tensor3& e) { return render(e); }

Tensor2 tensor(const Element& a, const Element& b) {
  Tensor2 out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) out.add({x, y}, c * d);
  return out;
}

Tensor3 tensor(const Tensor2& ab, const Element& c) {
  Tensor3 out;
  for (const auto& [xy, p] : ab)
    for (const auto& [z, q] : c) out.add({xy[0], xy[1], z}, p * q);
  return out;
}

Tensor3 tensor(const Element& a, const Tensor2& bc) {
  Tensor3 out;
  for (const auto& [x, p] : a)
    for (const auto& [yz, q] : bc) out.add({x, yz[0], yz[1]}, p * q);
  return out;
}

}  // namespace dgq
