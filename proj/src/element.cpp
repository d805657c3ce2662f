#include "albert/element.hpp"

#include <algorithm>

namespace albert {

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  if (size() != o.size()) throw ModelMismatch("element dimensions differ");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  if (size() != o.size()) throw ModelMismatch("element dimensions differ");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

JordanElement JordanElement::operator-() const {
  JordanElement r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

bool JordanElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Scalar& c) { return c.is_zero(); });
}

std::vector<std::string> JordanElement::render() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& c : coords) out.push_back(c.to_string());
  return out;
}

std::string JordanElement::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += coords[i].to_string();
  }
  return s + "]";
}

}  // namespace albert
