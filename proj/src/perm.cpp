#include "facto/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace facto {

Perm::Perm(uint32_t degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<uint8_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint8_t v : img_) {
    if (v >= img_.size() || seen[v])
      throw Error(ErrorKind::InvalidPermutation, "image vector is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<uint8_t> r(img_.size());
  for (uint32_t i = 0; i < degree(); ++i) r[img_[i]] = static_cast<uint8_t>(i);
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  std::vector<uint8_t> r(img_.size());
  for (uint32_t i = 0; i < degree(); ++i) r[i] = rhs.img_[img_[i]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::conjugated_by(const Perm& rhs) const {
  // h(x) = rhs(this(rhs^{-1}(x))); h = rhs^{-1} * this * rhs, left-first.
  std::vector<uint8_t> r(img_.size());
  for (uint32_t x = 0; x < degree(); ++x) r[rhs.img_[x]] = rhs.img_[img_[x]];
  Perm p;
  p.img_ = std::move(r);
  return p;
}

Perm Perm::extended(uint32_t degree) const {
  if (degree <= this->degree()) return *this;
  std::vector<uint8_t> r(img_);
  for (uint32_t i = this->degree(); i < degree; ++i) r.push_back(static_cast<uint8_t>(i));
  Perm p;
  p.img_ = std::move(r);
  return p;
}

int Perm::order() const {
  int ord = 1;
  for (int len : cycle_type()) ord = std::lcm(ord, len);
  return ord;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> type;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    if (len >= 2) type.push_back(len);
  }
  std::sort(type.begin(), type.end());
  return type;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> seen(img_.size(), false);
  bool any = false;
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
      j = img_[j];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm Perm::parse_cycles(const std::string& text, uint32_t min_degree) {
  const std::string& t = text;

  // Collect cycles of 1-based points.
  std::vector<std::vector<uint32_t>> cycles;
  uint32_t max_point = 0;
  size_t i = 0;
  auto skip_ws = [&] { while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i; };
  skip_ws();
  if (i < t.size() && std::isalpha(static_cast<unsigned char>(t[i]))) {
    std::string word;
    while (i < t.size() && std::isalpha(static_cast<unsigned char>(t[i]))) word.push_back(t[i++]);
    skip_ws();
    if ((word == "identity" || word == "id" || word == "e") && i == t.size()) {
      return Perm(min_degree);
    }
    throw Error(ErrorKind::ParseError, "bad cycle notation: " + text);
  }
  while (i < t.size()) {
    skip_ws();
    if (i >= t.size()) break;
    if (t[i] != '(') throw Error(ErrorKind::ParseError, "expected '(' in: " + text);
    ++i;
    std::vector<uint32_t> cyc;
    for (;;) {
      skip_ws();
      if (i < t.size() && t[i] == ')') {
        ++i;
        break;
      }
      if (i < t.size() && (t[i] == ',')) {
        ++i;
        continue;
      }
      if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
        throw Error(ErrorKind::ParseError, "expected point in: " + text);
      uint32_t v = 0;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i])))
        v = v * 10 + static_cast<uint32_t>(t[i++] - '0');
      if (v == 0 || v > 255) throw Error(ErrorKind::ParseError, "point out of range in: " + text);
      cyc.push_back(v);
      max_point = std::max(max_point, v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  uint32_t degree = std::max(max_point, min_degree);
  std::vector<uint8_t> img(degree);
  std::vector<bool> assigned(degree, false);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      uint32_t from = cyc[k] - 1, to = cyc[(k + 1) % cyc.size()] - 1;
      if (assigned[from])
        throw Error(ErrorKind::ParseError, "point repeated in: " + text);
      assigned[from] = true;
      img[from] = static_cast<uint8_t>(to);
    }
  }
  return Perm(std::move(img));
}

}  // namespace facto
