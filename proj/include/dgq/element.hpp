#pragma once

#include <array>
#include <map>
#include <ostream>
#include <string>

#include "dgq/rational.hpp"
#include "dgq/report.hpp"

namespace dgq {

// Finite rational linear combination of basis keys. Zero coefficients are never stored.
template <class Key>
class Combination {
 public:
  using Map = std::map<Key, Rational>;

  Combination() = default;
  explicit Combination(const Key& k, Rational c = Rational(1)) { add(k, std::move(c)); }

  void add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const Combination& o, const Rational& scale = Rational(1)) {
    for (const auto& [k, c] : o.terms_) add(k, c * scale);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  Combination& operator+=(const Combination& o) {
    add(o);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    add(o, Rational(-1));
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s.is_zero()) terms_.clear();
    for (auto& kv : terms_) kv.second *= s;
    return *this;
  }
  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator-(Combination a) { return a *= Rational(-1); }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Map terms_;
};

using Element = Combination<Id>;
using Tensor2 = Combination<std::array<Id, 2>>;
using Tensor3 = Combination<std::array<Id, 3>>;

// "c*#id + ..." with keys in ascending order; tensors as "c*#a(x)#b"; "0" when empty.
std::string to_string(const Element& e);
std::string to_string(const Tensor2& e);
std::string to_string(const Tensor3& e);

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << to_string(e); }
inline std::ostream& operator<<(std::ostream& os, const Tensor2& e) { return os << to_string(e); }
inline std::ostream& operator<<(std::ostream& os, const Tensor3& e) { return os << to_string(e); }

// Simple tensors.
Tensor2 tensor(const Element& a, const Element& b);
Tensor3 tensor(const Tensor2& ab, const Element& c);
Tensor3 tensor(const Element& a, const Tensor2& bc);

}  // namespace dgq
