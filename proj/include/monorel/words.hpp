#pragma once

// Free-monoid substrate: alphabets, words, the a^2b^2 text syntax, and
// factor search.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monorel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

using Letter = char;

/// An immutable finite sequence of letters. The empty word is the monoid
/// identity. Words do not carry their alphabet; membership is checked where
/// words enter a system or presentation.
class Word {
 public:
  Word() = default;
  explicit Word(std::string symbols) : symbols_(std::move(symbols)) {}
  explicit Word(std::string_view symbols) : symbols_(symbols) {}
  explicit Word(const char* symbols) : symbols_(symbols) {}

  static Word power(Letter letter, std::size_t n) {
    return Word(std::string(n, letter));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Letter operator[](std::size_t i) const { return symbols_[i]; }
  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(symbols_.substr(pos, len));
  }
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const {
    return substr(symbols_.size() - len);
  }

  Word pow(std::size_t n) const {
    std::string out;
    out.reserve(symbols_.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += symbols_;
    return Word(std::move(out));
  }

  /// The word with [pos, pos+len) replaced by `with`.
  Word splice(std::size_t pos, std::size_t len, const Word& with) const {
    std::string out;
    out.reserve(symbols_.size() - len + with.size());
    out.append(symbols_, 0, pos);
    out += with.symbols_;
    out.append(symbols_, pos + len);
    return Word(std::move(out));
  }

  bool occurs_at(std::size_t pos, const Word& needle) const noexcept {
    return pos + needle.size() <= symbols_.size() &&
           std::string_view(symbols_).substr(pos, needle.size()) ==
               needle.view();
  }
  bool contains(const Word& factor) const noexcept {
    return symbols_.find(factor.symbols_) != std::string::npos;
  }
  std::size_t count(Letter letter) const noexcept {
    return static_cast<std::size_t>(
        std::count(symbols_.begin(), symbols_.end(), letter));
  }

  friend Word operator+(const Word& u, const Word& v) {
    return Word(u.symbols_ + v.symbols_);
  }
  friend bool operator==(const Word&, const Word&) = default;
  // Plain lexicographic order on the underlying characters; use
  // shortlex_less for the enumeration order.
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string symbols_;
};

inline bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

class Alphabet {
 public:
  /// Letters in declaration order; e.g. Alphabet("abx").
  explicit Alphabet(std::string_view letters) : letters_(letters) {
    if (letters_.empty()) throw Error("alphabet must be non-empty");
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      const auto c = static_cast<unsigned char>(letters_[i]);
      if (c <= ' ' || c >= 0x7f || letters_[i] == '^' ||
          letters_[i] == '(' || letters_[i] == ')' ||
          (letters_[i] >= '0' && letters_[i] <= '9'))
        throw Error(std::string("invalid alphabet letter '") + letters_[i] +
                    "'");
      if (letters_.find(letters_[i], i + 1) != std::string::npos)
        throw Error(std::string("duplicate alphabet letter '") + letters_[i] +
                    "'");
    }
  }

  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  bool contains(Letter c) const noexcept {
    return letters_.find(c) != std::string::npos;
  }
  std::size_t index(Letter c) const {
    auto i = letters_.find(c);
    if (i == std::string::npos)
      throw Error(std::string("letter '") + c + "' not in alphabet");
    return i;
  }
  bool owns(const Word& w) const noexcept {
    return std::all_of(w.begin(), w.end(),
                       [this](Letter c) { return contains(c); });
  }
  void require(const Word& w) const {
    for (Letter c : w)
      if (!contains(c))
        throw Error(std::string("letter '") + c + "' not in alphabet {" +
                    letters_ + "}");
  }

  Alphabet with(Letter c) const { return Alphabet(letters_ + c); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

namespace detail {

class WordParser {
 public:
  WordParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  std::string parse() {
    std::string out = sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse word \"" + std::string(text_) +
                     "\" at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  std::string sequence() {
    std::string out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      std::string atom;
      if (text_[pos_] == '(') {
        ++pos_;
        atom = sequence();
        skip_space();
        if (pos_ == text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else if (text_[pos_] == '^') {
        fail("exponent without a base");
      } else {
        if (!alphabet_.contains(text_[pos_]))
          fail(std::string("unknown letter '") + text_[pos_] + "'");
        atom = std::string(1, text_[pos_++]);
      }
      const std::size_t n = exponent();
      for (std::size_t i = 0; i < n; ++i) out += atom;
    }
  }

  std::size_t exponent() {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    std::size_t n = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      n = n * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (n > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("malformed exponent");
    if (n == 0) fail("exponent 0 is not allowed");
    return n;
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the concrete syntax `letter(^n)?` repeated, e.g. "a^2b^2ab^2".
/// Parenthesised groups with exponents, "(bab)^2", are accepted as well.
/// Whitespace is ignored; the empty string is the empty word.
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
  return Word(detail::WordParser(text, alphabet).parse());
}

/// Inverse of parse_word: runs of a letter are written with ^.
inline std::string print_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += w[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

/// All start positions of `needle` in `haystack`, ascending, overlapping
/// occurrences included.
inline std::vector<std::size_t> find_occurrences(const Word& haystack,
                                                 const Word& needle) {
  if (needle.empty()) throw Error("find_occurrences: empty needle");
  std::vector<std::size_t> out;
  const std::string& h = haystack.str();
  for (auto pos = h.find(needle.str()); pos != std::string::npos;
       pos = h.find(needle.str(), pos + 1))
    out.push_back(pos);
  return out;
}

struct Overlap {
  enum class Kind { SuffixPrefix, Containment };
  Kind kind;
  // SuffixPrefix: overlap length t. Containment: start of v inside u.
  std::size_t offset;

  friend bool operator==(const Overlap&, const Overlap&) = default;
};

/// Proper suffix-prefix overlaps (suffix_t(u) = prefix_t(v), 0 < t <
/// min(|u|,|v|)) followed by occurrences of v strictly inside u (|v| < |u|).
inline std::vector<Overlap> overlaps(const Word& u, const Word& v) {
  if (u.empty() || v.empty()) throw Error("overlaps: empty word");
  std::vector<Overlap> out;
  const std::size_t limit = std::min(u.size(), v.size());
  for (std::size_t t = 1; t < limit; ++t)
    if (u.view().substr(u.size() - t) == v.view().substr(0, t))
      out.push_back({Overlap::Kind::SuffixPrefix, t});
  if (v.size() < u.size())
    for (std::size_t pos : find_occurrences(u, v))
      out.push_back({Overlap::Kind::Containment, pos});
  return out;
}

}  // namespace monorel

template <>
struct std::hash<monorel::Word> {
  std::size_t operator()(const monorel::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};
