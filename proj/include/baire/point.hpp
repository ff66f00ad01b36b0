#ifndef BAIRE_POINT_HPP
#define BAIRE_POINT_HPP

#include <string>

#include "baire/error.hpp"

namespace baire {

// Eventually-constant element of Cantor space: word followed by tail^w.
// Canonical form: word is empty or its last bit differs from tail.
struct Point {
  std::string word;  // bits '0'/'1'
  int tail = 0;

  Point() = default;
  Point(std::string w, int t) : word(std::move(w)), tail(t) { canonicalize(); }

  static Point zeros() { return Point("", 0); }
  static Point ones() { return Point("", 1); }

  void canonicalize() {
    if (tail != 0 && tail != 1) throw precondition_error("tail must be a bit");
    char tc = static_cast<char>('0' + tail);
    while (!word.empty() && word.back() == tc) word.pop_back();
  }

  int bit_at(size_t i) const {
    if (i < word.size()) return word[i] - '0';
    return tail;
  }

  // The length-n prefix of the denoted sequence.
  std::string prefix(size_t n) const {
    std::string r;
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) r.push_back(static_cast<char>('0' + bit_at(i)));
    return r;
  }

  bool in_cylinder(const std::string& sigma) const {
    for (size_t i = 0; i < sigma.size(); ++i)
      if (bit_at(i) != sigma[i] - '0') return false;
    return true;
  }

  // The suffix after the first n bits.
  Point drop(size_t n) const {
    if (n <= word.size()) return Point(word.substr(n), tail);
    return Point("", tail);
  }

  Point prepend(const std::string& bits) const { return Point(bits + word, tail); }

  friend bool operator==(const Point& a, const Point& b) {
    return a.tail == b.tail && a.word == b.word;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.word != b.word) return a.word < b.word;
    return a.tail < b.tail;
  }

  std::string str() const { return word + "~" + static_cast<char>('0' + tail); }
};

Point parse_point(const std::string& text);

}  // namespace baire

#endif
