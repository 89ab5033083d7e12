#ifndef FACTO_INTERN_HPP
#define FACTO_INTERN_HPP

#include <cstdint>
#include <cstring>
#include <vector>

namespace facto {

// Insert-only content-addressed store of fixed-width uint32 records, with
// open addressing over a flat slot table. Indices are assigned in insertion
// order, which keeps downstream numbering deterministic.
class InternArena {
public:
  explicit InternArena(uint32_t width) : width_(width) { rehash(1024); }

  uint32_t width() const { return width_; }
  size_t size() const { return count_; }

  const uint32_t* get(uint32_t idx) const { return data_.data() + size_t(idx) * width_; }

  // Returns (index, true) on first insertion, (index, false) on a hit.
  std::pair<uint32_t, bool> intern(const uint32_t* rec) {
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    uint64_t h = hash(rec);
    size_t s = h & mask_;
    while (slots_[s] != UINT32_MAX) {
      uint32_t idx = slots_[s];
      if (std::memcmp(get(idx), rec, width_ * sizeof(uint32_t)) == 0) return {idx, false};
      s = (s + 1) & mask_;
    }
    uint32_t idx = static_cast<uint32_t>(count_++);
    data_.insert(data_.end(), rec, rec + width_);
    slots_[s] = idx;
    return {idx, true};
  }

  int64_t find(const uint32_t* rec) const {
    uint64_t h = hash(rec);
    size_t s = h & mask_;
    while (slots_[s] != UINT32_MAX) {
      uint32_t idx = slots_[s];
      if (std::memcmp(get(idx), rec, width_ * sizeof(uint32_t)) == 0) return idx;
      s = (s + 1) & mask_;
    }
    return -1;
  }

private:
  uint64_t hash(const uint32_t* rec) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t i = 0; i < width_; ++i) {
      h ^= rec[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
    }
    h ^= h >> 31;
    return h;
  }

  void rehash(size_t want) {
    size_t cap = 1024;
    while (cap < want) cap <<= 1;
    slots_.assign(cap, UINT32_MAX);
    mask_ = cap - 1;
    for (uint32_t idx = 0; idx < count_; ++idx) {
      uint64_t h = hash(get(idx));
      size_t s = h & mask_;
      while (slots_[s] != UINT32_MAX) s = (s + 1) & mask_;
      slots_[s] = idx;
    }
  }

  uint32_t width_;
  size_t count_ = 0;
  std::vector<uint32_t> data_;
  std::vector<uint32_t> slots_;
  size_t mask_ = 0;
};

// Union-find with path halving; used for orbit merging.
class UnionFind {
public:
  void grow(size_t n) {
    size_t old = parent_.size();
    parent_.resize(n);
    for (size_t i = old; i < n; ++i) parent_[i] = static_cast<uint32_t>(i);
  }
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns true if the two sets were distinct.
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) parent_[b] = a;  // keep least index as root: deterministic reps
    else parent_[a] = b;
    return true;
  }
  size_t size() const { return parent_.size(); }

private:
  std::vector<uint32_t> parent_;
};

}  // namespace facto

#endif
