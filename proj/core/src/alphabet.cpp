#include "fieldmatch/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace fieldmatch {

Alphabet::Alphabet(std::string symbols, char placeholder)
    : symbols_(std::move(symbols)), placeholder_(placeholder) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must not be empty");
  for (char c : symbols_) {
    auto& slot = member_[static_cast<unsigned char>(c)];
    if (slot) throw std::invalid_argument("alphabet symbols must be distinct");
    slot = true;
  }
  if (!contains(placeholder_))
    throw std::invalid_argument("placeholder must be an alphabet member");
}

const Alphabet& Alphabet::standard() {
  // 26 letters + 10 digits + space + 26 punctuation + placeholder = 64.
  static const Alphabet instance(
      "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
      "0123456789"
      " .,:;/\\\"'`()[]{}<>+-!?$%&*_#",
      '#');
  return instance;
}

std::string Alphabet::normalize(std::string_view raw) const {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 128 && std::islower(u)) c = static_cast<char>(std::toupper(u));
    out.push_back(contains(c) ? c : placeholder_);
  }
  return out;
}

}  // namespace fieldmatch
