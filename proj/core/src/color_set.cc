#include "icol/color_set.h"

#include <algorithm>
#include <bit>
#include <string>

#include "icol/error.h"

namespace icol {

uint64_t PaletteMask(int t) {
  return t >= 64 ? ~uint64_t{0} : (uint64_t{1} << t) - 1;
}

namespace {

void CheckPalette(int t) {
  if (t < 1 || t > kMaxPalette) {
    throw Error(ErrorKind::kOutOfRange,
                "palette size " + std::to_string(t) + " outside [1," +
                    std::to_string(kMaxPalette) + "]");
  }
}

uint64_t Bit(Color c) { return uint64_t{1} << (c - 1); }

// Bits lo..hi (1-based colors), assuming 1 <= lo <= hi <= 64.
uint64_t RangeBits(Color lo, Color hi) {
  return PaletteMask(hi) & ~PaletteMask(lo - 1);
}

bool IsContiguous(uint64_t bits) {
  if (bits == 0) return false;
  uint64_t shifted = bits >> std::countr_zero(bits);
  return (shifted & (shifted + 1)) == 0;
}

}  // namespace

ColorSet::ColorSet(int t) : palette_(t) { CheckPalette(t); }

ColorSet::ColorSet(int t, std::initializer_list<Color> colors)
    : ColorSet(t, std::span<const Color>(colors.begin(), colors.size())) {}

ColorSet::ColorSet(int t, std::span<const Color> colors) : ColorSet(t) {
  for (Color c : colors) Insert(c);
}

ColorSet ColorSet::FromBits(int t, uint64_t bits) {
  CheckPalette(t);
  if ((bits & ~PaletteMask(t)) != 0) {
    throw Error(ErrorKind::kOutOfRange, "bits outside the palette");
  }
  return ColorSet(t, bits);
}

ColorSet ColorSet::Range(int t, Color lo, Color hi) {
  ColorSet s(t);
  if (lo > hi) return s;
  s.CheckColor(lo);
  s.CheckColor(hi);
  s.bits_ = RangeBits(lo, hi);
  return s;
}

void ColorSet::CheckColor(Color c) const {
  if (c < 1 || c > palette_) {
    throw Error(ErrorKind::kOutOfRange,
                "color " + std::to_string(c) + " outside [1," +
                    std::to_string(palette_) + "]");
  }
}

void ColorSet::CheckSamePalette(const ColorSet& other) const {
  if (palette_ != other.palette_) {
    throw Error(ErrorKind::kPrecondition, "color sets over different palettes");
  }
}

int ColorSet::size() const { return std::popcount(bits_); }

bool ColorSet::Contains(Color c) const {
  return c >= 1 && c <= palette_ && (bits_ & Bit(c)) != 0;
}

Color ColorSet::Min() const { return std::countr_zero(bits_) + 1; }

Color ColorSet::Max() const { return 64 - std::countl_zero(bits_); }

std::vector<Color> ColorSet::Members() const {
  std::vector<Color> out;
  for (uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

void ColorSet::Insert(Color c) {
  CheckColor(c);
  bits_ |= Bit(c);
}

ColorSet ColorSet::Union(const ColorSet& other) const {
  CheckSamePalette(other);
  return ColorSet(palette_, bits_ | other.bits_);
}

ColorSet ColorSet::Intersect(const ColorSet& other) const {
  CheckSamePalette(other);
  return ColorSet(palette_, bits_ & other.bits_);
}

ColorSet ColorSet::Minus(const ColorSet& other) const {
  CheckSamePalette(other);
  return ColorSet(palette_, bits_ & ~other.bits_);
}

ColorSet ColorSet::Complement() const {
  return ColorSet(palette_, PaletteMask(palette_) & ~bits_);
}

bool ColorSet::IsSubsetOf(const ColorSet& other) const {
  CheckSamePalette(other);
  return (bits_ & ~other.bits_) == 0;
}

std::string ColorSet::ToString() const {
  std::string out = "{";
  for (Color c : Members()) {
    if (out.size() > 1) out += ",";
    out += std::to_string(c);
  }
  return out + "}";
}

ColorSet CyclicSegmentClosed1(Color i1, Color i2, int t) {
  ColorSet s(t);
  s.Insert(i1);
  s.Insert(i2);
  return ColorSet::Range(t, std::min(i1, i2), std::max(i1, i2));
}

ColorSet CyclicSegmentOpen1(Color i1, Color i2, int t) {
  return CyclicSegmentClosed1(i1, i2, t).Minus(ColorSet(t, {i1, i2}));
}

ColorSet CyclicSegmentOpen2(Color i1, Color i2, int t) {
  return CyclicSegmentClosed1(i1, i2, t).Complement();
}

ColorSet CyclicSegmentClosed2(Color i1, Color i2, int t) {
  return CyclicSegmentOpen1(i1, i2, t).Complement();
}

int CyclicDistance(Color i1, Color i2, int t) {
  return std::min(CyclicSegmentClosed1(i1, i2, t).size(),
                  CyclicSegmentClosed2(i1, i2, t).size()) -
         1;
}

bool IsInterval(const ColorSet& s) { return IsContiguous(s.bits()); }

bool IsCyclicInterval(const ColorSet& s) {
  if (s.empty()) return false;
  uint64_t full = PaletteMask(s.palette());
  return s.bits() == full || IsContiguous(s.bits()) ||
         IsContiguous(full & ~s.bits());
}

int CoveringArcLength(uint64_t bits, int t) {
  if (bits == 0) return 0;
  // Longest run of absent colors, read cyclically.
  int longest_gap = 0;
  int run = 0;
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < t; ++c) {
      if (bits & (uint64_t{1} << c)) {
        run = 0;
      } else {
        longest_gap = std::max(longest_gap, ++run);
      }
    }
  }
  return t - std::min(longest_gap, t);
}

ColorSet ChainedUnion(std::span<const ColorSet> chain, int t) {
  if (chain.empty()) {
    throw Error(ErrorKind::kPrecondition, "empty chain");
  }
  ColorSet result(t);
  for (size_t i = 0; i < chain.size(); ++i) {
    const ColorSet& q = chain[i];
    if (q.palette() != t || !IsCyclicInterval(q)) {
      throw Error(ErrorKind::kPrecondition,
                  "chain member " + std::to_string(i) + " " + q.ToString() +
                      " is not a " + std::to_string(t) + "-cyclic interval");
    }
    if (i > 0 && chain[i - 1].Intersect(q).empty()) {
      throw Error(ErrorKind::kPrecondition,
                  "chain broken between members " + std::to_string(i - 1) +
                      " and " + std::to_string(i));
    }
    result = result.Union(q);
  }
  if (!IsCyclicInterval(result)) {
    throw Error(ErrorKind::kPrecondition,
                "union " + result.ToString() + " is not a cyclic interval");
  }
  return result;
}

}  // namespace icol
