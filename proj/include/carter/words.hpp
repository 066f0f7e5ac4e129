#pragma once

#include <map>
#include <string>
#include <vector>

#include "carter/marked_permutation.hpp"

namespace carter {

/// A word over abstract generators with exponents +-1.  Generators are
/// referred to by 0-based id; presentations carry the id -> name mapping.
struct GeneratorWord {
  std::vector<std::pair<int, int>> letters;  // (generator id, +1/-1)

  static GeneratorWord letter(int gen, int exp = 1) {
    if (exp != 1 && exp != -1) throw std::invalid_argument("letter exponent must be +-1");
    return GeneratorWord{{{gen, exp}}};
  }

  GeneratorWord inverse() const {
    GeneratorWord out;
    out.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out.letters.emplace_back(it->first, -it->second);
    return out;
  }

  friend GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
    GeneratorWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  /// g^-1 * w * g
  GeneratorWord conjugated_by(const GeneratorWord& g) const {
    return g.inverse() * (*this) * g;
  }

  static GeneratorWord commutator(const GeneratorWord& a, const GeneratorWord& b) {
    return a * b * a.inverse() * b.inverse();
  }

  GeneratorWord freely_reduced() const {
    GeneratorWord out;
    for (const auto& l : letters) {
      if (!out.letters.empty() && out.letters.back().first == l.first &&
          out.letters.back().second == -l.second)
        out.letters.pop_back();
      else
        out.letters.push_back(l);
    }
    return out;
  }

  std::size_t cyclically_reduced_length() const {
    auto w = freely_reduced().letters;
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo].first == w[hi - 1].first && w[lo].second == -w[hi - 1].second) {
      ++lo;
      --hi;
    }
    return hi - lo;
  }

  bool empty() const { return letters.empty(); }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Product of the images of the letters; inverse exponents use the group
/// inverse.  Throws when a letter has no assignment.
inline MarkedPermutation evaluate_word(const GeneratorWord& word,
                                       const std::vector<MarkedPermutation>& assignment,
                                       int degree) {
  MarkedPermutation acc = MarkedPermutation::identity(degree);
  for (const auto& [gen, exp] : word.letters) {
    if (gen < 0 || gen >= static_cast<int>(assignment.size()))
      throw std::invalid_argument("unassigned generator in word evaluation");
    const auto& img = assignment[static_cast<std::size_t>(gen)];
    acc = compose(acc, exp > 0 ? img : img.inverse());
  }
  return acc;
}

inline std::string word_to_string(const GeneratorWord& word,
                                  const std::vector<std::string>& names) {
  if (word.letters.empty()) return "1";
  std::string out;
  for (const auto& [gen, exp] : word.letters) {
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(gen)];
    if (exp < 0) out += "^-1";
  }
  return out;
}

/// Parse the space-separated form produced by word_to_string.
inline GeneratorWord parse_word(std::string_view text,
                                const std::map<std::string, int>& name_to_id) {
  GeneratorWord out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(pos, end - pos));
    pos = end;
    if (tok == "1") continue;
    int exp = 1;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      exp = -1;
      tok = tok.substr(0, tok.size() - 3);
    }
    auto it = name_to_id.find(tok);
    if (it == name_to_id.end()) throw std::invalid_argument("unknown generator: " + tok);
    out.letters.emplace_back(it->second, exp);
  }
  return out;
}

}  // namespace carter
