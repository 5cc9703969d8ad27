#ifndef ICOL_COLOR_SET_H_
#define ICOL_COLOR_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace icol {

using Color = int;

// Largest supported palette. Colors are stored as bits of one machine word.
inline constexpr int kMaxPalette = 64;

// A subset of the palette [1, t]. Color c is bit c-1.
class ColorSet {
 public:
  // Empty subset of [1, t]. Throws kOutOfRange unless 1 <= t <= kMaxPalette.
  explicit ColorSet(int t);
  ColorSet(int t, std::initializer_list<Color> colors);
  ColorSet(int t, std::span<const Color> colors);

  static ColorSet FromBits(int t, uint64_t bits);
  // [lo, hi]; empty when lo > hi.
  static ColorSet Range(int t, Color lo, Color hi);
  static ColorSet Full(int t) { return Range(t, 1, t); }

  int palette() const { return palette_; }
  uint64_t bits() const { return bits_; }
  int size() const;
  bool empty() const { return bits_ == 0; }
  bool Contains(Color c) const;
  Color Min() const;  // requires !empty()
  Color Max() const;  // requires !empty()
  std::vector<Color> Members() const;

  void Insert(Color c);

  ColorSet Union(const ColorSet& other) const;
  ColorSet Intersect(const ColorSet& other) const;
  ColorSet Minus(const ColorSet& other) const;
  // [1, t] minus this set.
  ColorSet Complement() const;
  bool IsSubsetOf(const ColorSet& other) const;

  // "{1,2,5}".
  std::string ToString() const;

  bool operator==(const ColorSet&) const = default;

 private:
  ColorSet(int t, uint64_t bits) : palette_(t), bits_(bits) {}
  void CheckColor(Color c) const;
  void CheckSamePalette(const ColorSet& other) const;

  int palette_;
  uint64_t bits_ = 0;
};

// Bits of [1, t].
uint64_t PaletteMask(int t);

// The four cyclic segments determined by two colors i1, i2 of [1, t]:
//   closed_1 = [min, max]          open_1 = closed_1 \ {i1, i2}
//   open_2   = [1, t] \ closed_1   closed_2 = [1, t] \ open_1
// All throw kOutOfRange when i1 or i2 lies outside [1, t].
ColorSet CyclicSegmentClosed1(Color i1, Color i2, int t);
ColorSet CyclicSegmentOpen1(Color i1, Color i2, int t);
ColorSet CyclicSegmentOpen2(Color i1, Color i2, int t);
ColorSet CyclicSegmentClosed2(Color i1, Color i2, int t);

// Cyclic distance between two colors: min(|closed_1|, |closed_2|) - 1.
int CyclicDistance(Color i1, Color i2, int t);

// Nonempty and consecutive.
bool IsInterval(const ColorSet& s);

// Nonempty and equal to closed_1 or closed_2 for some pair of colors, i.e. an
// arc of the palette read as a cycle 1, 2, ..., t, 1.
bool IsCyclicInterval(const ColorSet& s);

// Length of the shortest arc of the cyclic palette [1, t] that covers `bits`
// (0 for the empty set). A set is a cyclic interval iff it is nonempty and its
// size equals this length.
int CoveringArcLength(uint64_t bits, int t);

// Union of a chain of cyclic intervals in which consecutive members intersect.
// The result is checked to be a cyclic interval. Throws kPrecondition if a
// member is not a cyclic interval, consecutive members are disjoint, a
// member's palette differs from t, or the chain is empty.
ColorSet ChainedUnion(std::span<const ColorSet> chain, int t);

}  // namespace icol

#endif  // ICOL_COLOR_SET_H_
