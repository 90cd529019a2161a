#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace pfold {

enum class Alphabet : std::uint8_t { A16, B4 };

constexpr int alphabet_size(Alphabet a) { return a == Alphabet::A16 ? 16 : 4; }
constexpr const char* alphabet_name(Alphabet a) { return a == Alphabet::A16 ? "A16" : "B4"; }

// One symbol of the 16-letter alphabet, A < B < ... < P.
class Letter16 {
 public:
  constexpr Letter16() = default;

  static constexpr Letter16 from_index(int i) {
    if (i < 0 || i > 15) throw std::invalid_argument("Letter16 index out of range");
    return Letter16(static_cast<std::uint8_t>(i));
  }
  static constexpr Letter16 from_char(char ch) {
    if (ch < 'A' || ch > 'P') throw std::invalid_argument("Letter16 must be one of A..P");
    return Letter16(static_cast<std::uint8_t>(ch - 'A'));
  }

  constexpr int index() const { return v_; }
  constexpr char to_char() const { return static_cast<char>('A' + v_); }

  friend constexpr auto operator<=>(Letter16, Letter16) = default;

 private:
  constexpr explicit Letter16(std::uint8_t v) : v_(v) {}
  std::uint8_t v_ = 0;
};

// One symbol of the 4-letter alphabet, 0 < 1 < 2 < 3.
class Letter4 {
 public:
  constexpr Letter4() = default;

  static constexpr Letter4 from_index(int i) {
    if (i < 0 || i > 3) throw std::invalid_argument("Letter4 index out of range");
    return Letter4(static_cast<std::uint8_t>(i));
  }
  static constexpr Letter4 from_char(char ch) {
    if (ch < '0' || ch > '3') throw std::invalid_argument("Letter4 must be one of 0..3");
    return Letter4(static_cast<std::uint8_t>(ch - '0'));
  }

  constexpr int index() const { return v_; }
  constexpr char to_char() const { return static_cast<char>('0' + v_); }

  friend constexpr auto operator<=>(Letter4, Letter4) = default;

 private:
  constexpr explicit Letter4(std::uint8_t v) : v_(v) {}
  std::uint8_t v_ = 0;
};

constexpr char letter_to_char(Alphabet a, std::uint8_t index) {
  return a == Alphabet::A16 ? static_cast<char>('A' + index) : static_cast<char>('0' + index);
}

constexpr std::uint8_t letter_from_char(Alphabet a, char ch) {
  if (a == Alphabet::A16) return static_cast<std::uint8_t>(Letter16::from_char(ch).index());
  return static_cast<std::uint8_t>(Letter4::from_char(ch).index());
}

// Resource-guard errors: depth caps, enumeration budgets, count overflow.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pfold
