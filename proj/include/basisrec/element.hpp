#pragma once

#include <charconv>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>

namespace basisrec {

// Identity of a ground-set element. A label is either an integer or a
// short string; labels live in one global namespace so that ground sets of
// different matroids can overlap. Strings that spell an integer are
// normalized to the integer label, which keeps file round-trips stable
// (files always store labels as strings).
class ElementId {
 public:
  ElementId() : num_(0), is_num_(true) {}
  ElementId(std::int64_t v) : num_(v), is_num_(true) {}
  ElementId(int v) : num_(v), is_num_(true) {}
  ElementId(std::string s) : num_(0), is_num_(false), text_(std::move(s)) {
    normalize();
  }
  ElementId(const char* s) : ElementId(std::string(s)) {}

  bool is_number() const { return is_num_; }
  std::int64_t number() const { return num_; }
  const std::string& text() const { return text_; }

  // Printable / serialized form.
  std::string str() const {
    return is_num_ ? std::to_string(num_) : text_;
  }

  friend bool operator==(const ElementId& a, const ElementId& b) {
    if (a.is_num_ != b.is_num_) return false;
    return a.is_num_ ? a.num_ == b.num_ : a.text_ == b.text_;
  }
  friend bool operator!=(const ElementId& a, const ElementId& b) {
    return !(a == b);
  }
  // Total order: integer labels first (by value), then strings (lex).
  friend bool operator<(const ElementId& a, const ElementId& b) {
    if (a.is_num_ != b.is_num_) return a.is_num_;
    return a.is_num_ ? a.num_ < b.num_ : a.text_ < b.text_;
  }
  friend bool operator>(const ElementId& a, const ElementId& b) { return b < a; }
  friend bool operator<=(const ElementId& a, const ElementId& b) { return !(b < a); }
  friend bool operator>=(const ElementId& a, const ElementId& b) { return !(a < b); }

  struct Hash {
    std::size_t operator()(const ElementId& e) const {
      if (e.is_num_) return std::hash<std::int64_t>()(e.num_) * 3u;
      return std::hash<std::string>()(e.text_) * 3u + 1u;
    }
  };

 private:
  void normalize() {
    if (text_.empty()) return;
    std::int64_t v = 0;
    const char* first = text_.data();
    const char* last = first + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && ptr == last) {
      num_ = v;
      is_num_ = true;
      text_.clear();
    }
  }

  std::int64_t num_;
  bool is_num_;
  std::string text_;
};

// Ordered set of elements; iteration order is the ElementId total order,
// which every deterministic tie-break in the library relies on.
using ElementSet = std::set<ElementId>;

inline bool contains(const ElementSet& s, const ElementId& e) {
  return s.find(e) != s.end();
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  for (const auto& e : a)
    if (!contains(b, e)) r.insert(e);
  return r;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet r;
  for (const auto& e : a)
    if (contains(b, e)) r.insert(e);
  return r;
}

inline std::size_t symmetric_difference_size(const ElementSet& a,
                                             const ElementSet& b) {
  std::size_t common = set_intersection(a, b).size();
  return a.size() + b.size() - 2 * common;
}

}  // namespace basisrec
