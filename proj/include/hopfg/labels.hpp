#pragma once

#include <string>
#include <vector>

#include "hopfg/rational.hpp"

namespace hopfg {

/// Element of G = ℚ/2ℤ, held as an exact rational representative.
///
/// The representative is significant for the integral-basis presentation
/// (pieces are indexed by representatives, see PieceRef); group operations
/// act on the underlying class.  canonical() reduces into [0, 2).
class Label {
 public:
  Label() : rep_(0) {}
  explicit Label(const Rat& rep) : rep_(rep) {}
  Label(std::int64_t n) : rep_(Rat(n)) {}

  const Rat& rep() const { return rep_; }

  Label canonical() const {
    // reduce rep into [0,2)
    Rat two(2);
    Rat x = rep_;
    // floor(x/2)*2
    std::int64_t num = x.num(), den = x.den();
    std::int64_t q = num / (2 * den);
    if (num < 0 && num % (2 * den) != 0) q -= 1;
    return Label(x - Rat(q) * two);
  }

  friend Label operator+(const Label& a, const Label& b) { return Label(a.rep_ + b.rep_); }
  friend Label operator-(const Label& a, const Label& b) { return Label(a.rep_ - b.rep_); }
  Label operator-() const { return Label(-rep_); }
  Label half() const { return Label(rep_ / Rat(2)); }

  /// Same class in ℚ/2ℤ.
  friend bool same_label(const Label& a, const Label& b) {
    Rat d = a.rep_ - b.rep_;
    return d.den() == 1 && d.num() % 2 == 0;
  }
  bool is_zero_label() const { return same_label(*this, Label()); }

  /// Ordering / equality of *representatives* (exact rationals).
  friend bool operator==(const Label& a, const Label& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
  friend bool operator<(const Label& a, const Label& b) { return a.rep_ < b.rep_; }

  std::string str() const { return rep_.str(); }

 private:
  Rat rep_;
};

/// The sampled finite subgroup (1/D)ℤ/2ℤ as canonical representatives.
std::vector<Label> label_subgroup(int D);

}  // namespace hopfg
