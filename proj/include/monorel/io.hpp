#pragma once

// Text formats.
//
//   system file          presentation file     order
//   letters: a b x       letters: a b          weights: a=4 b=1 x=2; precedence: x>b>a
//   ax^2b -> x           ab^2a^2b^2 = b
//   ab -> x^2
//
// Blank lines and lines starting with '#' are ignored. A system file may
// carry one order line; it is informational and does not certify the system.

#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "monorel/presentation.hpp"
#include "monorel/rewrite.hpp"
#include "monorel/words.hpp"

namespace monorel::io {

/// A file could not be opened or written.
struct IoError : Error {
  using Error::Error;
};

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return std::string(s);
}

inline bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

struct Lines {
  std::vector<std::pair<std::size_t, std::string>> content;  // (line no, text)
};

inline Lines read_lines(std::istream& in) {
  Lines out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    out.content.emplace_back(no, std::move(t));
  }
  return out;
}

inline Alphabet parse_letters(const std::pair<std::size_t, std::string>& line) {
  if (!starts_with(line.second, "letters:"))
    throw ParseError("line " + std::to_string(line.first) +
                     ": expected 'letters: ...'");
  std::string letters;
  for (char c : line.second.substr(8))
    if (c != ' ' && c != '\t') letters += c;
  return Alphabet(letters);
}

inline std::pair<std::string, std::string> split_on(
    const std::pair<std::size_t, std::string>& line, std::string_view sep) {
  auto pos = line.second.find(sep);
  if (pos == std::string::npos)
    throw ParseError("line " + std::to_string(line.first) + ": expected '" +
                     std::string(sep) + "'");
  return {trim(std::string_view(line.second).substr(0, pos)),
          trim(std::string_view(line.second).substr(pos + sep.size()))};
}

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

}  // namespace detail

/// Parses "weights: a=4 b=1 x=2; precedence: x>b>a".
inline ReductionOrder parse_order(std::string_view text,
                                  const Alphabet& alphabet) {
  auto t = detail::trim(text);
  auto semi = t.find(';');
  if (!detail::starts_with(t, "weights:") || semi == std::string::npos)
    throw ParseError("order must look like 'weights: a=1 b=1; precedence: a>b'");
  std::vector<unsigned> weights(alphabet.size(), 0);
  std::istringstream ws(t.substr(8, semi - 8));
  std::string item;
  while (ws >> item) {
    if (item.size() < 3 || item[1] != '=')
      throw ParseError("malformed weight '" + item + "'");
    const std::size_t idx = alphabet.index(item[0]);
    try {
      weights[idx] = static_cast<unsigned>(std::stoul(item.substr(2)));
    } catch (const std::exception&) {
      throw ParseError("malformed weight '" + item + "'");
    }
  }
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == 0)
      throw ParseError(std::string("missing or zero weight for '") +
                       alphabet[i] + "'");
  auto rest = detail::trim(std::string_view(t).substr(semi + 1));
  if (!detail::starts_with(rest, "precedence:"))
    throw ParseError("expected 'precedence:' after the weights");
  std::string prec;
  for (char c : rest.substr(11))
    if (c != '>' && c != ' ') prec += c;
  return ReductionOrder(alphabet, std::move(weights), prec);
}

struct SystemFile {
  RewritingSystem system;
  std::optional<ReductionOrder> order;
};

inline SystemFile read_system(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.content.empty()) throw ParseError("empty system file");
  Alphabet alphabet = detail::parse_letters(lines.content.front());
  std::vector<Rule> rules;
  std::optional<ReductionOrder> order;
  for (std::size_t i = 1; i < lines.content.size(); ++i) {
    const auto& line = lines.content[i];
    if (detail::starts_with(line.second, "weights:")) {
      order = parse_order(line.second, alphabet);
      continue;
    }
    auto [l, r] = detail::split_on(line, "->");
    try {
      rules.emplace_back(parse_word(l, alphabet), parse_word(r, alphabet));
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line.first) + ": " + e.what());
    }
  }
  return {RewritingSystem(alphabet, std::move(rules)), std::move(order)};
}

inline SystemFile read_system_file(const std::string& path) {
  auto in = detail::open(path);
  return read_system(in);
}

inline std::string letters_line(const Alphabet& alphabet) {
  std::string out = "letters:";
  for (Letter c : alphabet) out += std::string(" ") + c;
  return out;
}

inline std::string write_system(const RewritingSystem& system,
                                const std::optional<ReductionOrder>& order = {}) {
  std::string out = letters_line(system.alphabet()) + "\n";
  for (const auto& r : system.rules()) out += to_string(r) + "\n";
  if (order) out += to_string(*order) + "\n";
  return out;
}

inline Presentation read_presentation(std::istream& in) {
  auto lines = detail::read_lines(in);
  if (lines.content.empty()) throw ParseError("empty presentation file");
  Alphabet alphabet = detail::parse_letters(lines.content.front());
  std::vector<Equation> eqs;
  for (std::size_t i = 1; i < lines.content.size(); ++i) {
    auto [l, r] = detail::split_on(lines.content[i], "=");
    try {
      eqs.push_back({parse_word(l, alphabet), parse_word(r, alphabet)});
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(lines.content[i].first) + ": " +
                       e.what());
    }
  }
  return Presentation(alphabet, std::move(eqs));
}

inline Presentation read_presentation_file(const std::string& path) {
  auto in = detail::open(path);
  return read_presentation(in);
}

inline std::string write_presentation(const Presentation& p) {
  std::string out = letters_line(p.alphabet()) + "\n";
  for (const auto& eq : p.equations())
    out += print_word(eq.lhs) + " = " + print_word(eq.rhs) + "\n";
  return out;
}

}  // namespace monorel::io
