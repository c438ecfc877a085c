#pragma once

#include <array>
#include <string>
#include <string_view>

namespace fieldmatch {

/// Fixed character set that all field values are normalized into.
///
/// The standard roster has exactly 64 symbols: the 26 uppercase letters,
/// the 10 digits, space, 26 punctuation characters (including the four
/// bracket pairs), and the placeholder '#'.  Any input character outside
/// the roster becomes the placeholder.
class Alphabet {
 public:
  Alphabet(std::string symbols, char placeholder);

  /// The canonical 64-symbol roster.
  static const Alphabet& standard();

  const std::string& symbols() const { return symbols_; }
  char placeholder() const { return placeholder_; }
  std::size_t size() const { return symbols_.size(); }
  bool contains(char c) const { return member_[static_cast<unsigned char>(c)]; }

  /// Uppercases letters and maps every non-member byte to the placeholder.
  /// Total and idempotent; byte length is preserved.
  std::string normalize(std::string_view raw) const;

  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_ && placeholder_ == other.placeholder_;
  }

 private:
  std::string symbols_;
  char placeholder_;
  std::array<bool, 256> member_{};
};

}  // namespace fieldmatch
