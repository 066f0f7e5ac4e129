#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "carter/absolute_order.hpp"
#include "carter/diagram.hpp"
#include "carter/presentation.hpp"

namespace carter {

inline const char* source_name(PresentationSource s) {
  switch (s) {
    case PresentationSource::dual: return "dual";
    case PresentationSource::claimed: return "claimed";
    case PresentationSource::cameron: return "cameron";
  }
  return "?";
}

namespace detail {

/// Names like "(~1,~2)" are not identifiers; map generators to t_/tb_ forms
/// for GAP and rewriting-system output.
inline std::string ascii_generator_name(const std::string& name) {
  bool plainish = true;
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) plainish = false;
  if (plainish && !name.empty() && !std::isdigit(static_cast<unsigned char>(name.front())))
    return name;
  std::string out = "t";
  bool barred = name.find('~') != std::string::npos;
  if (barred) out += 'b';
  for (char ch : name)
    if (std::isdigit(static_cast<unsigned char>(ch)))
      out += ch;
    else if (ch == ',')
      out += '_';
  return out;
}

inline std::vector<std::string> ascii_names(const Presentation& p) {
  std::vector<std::string> out;
  out.reserve(p.generators.size());
  for (const auto& g : p.generators) out.push_back(ascii_generator_name(g));
  return out;
}

inline std::string word_in_product_form(const GeneratorWord& w,
                                        const std::vector<std::string>& names) {
  if (w.letters.empty()) return "One(F)";
  std::string out;
  for (const auto& [gen, exp] : w.letters) {
    if (!out.empty()) out += '*';
    out += names[static_cast<std::size_t>(gen)];
    if (exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace detail

/// GAP input: a free group, the relator list, and the quotient.
inline std::string export_gap(const Presentation& p) {
  auto names = detail::ascii_names(p);
  std::ostringstream os;
  os << "# " << source_name(p.source) << " presentation";
  if (p.m > 0)
    os << ", n=" << p.n << ", m=" << p.m;
  else
    os << " for w = " << p.element << ", n=" << p.n;
  os << "\nF := FreeGroup(";
  for (std::size_t k = 0; k < names.size(); ++k)
    os << (k ? ", " : " ") << '"' << names[k] << '"';
  os << " );;\n";
  for (std::size_t k = 0; k < names.size(); ++k)
    os << names[k] << " := F." << (k + 1) << ";;\n";
  os << "rels := [\n";
  for (std::size_t k = 0; k < p.relators.size(); ++k)
    os << "  " << detail::word_in_product_form(p.relators[k], names)
       << (k + 1 < p.relators.size() ? "," : "") << '\n';
  os << "];;\nG := F / rels;;\n";
  return os.str();
}

/// Rewriting-system input: generators with formal inverses and one equation
/// [w, IdWord] per relator.
inline std::string export_kbmag(const Presentation& p) {
  auto names = detail::ascii_names(p);
  std::vector<std::string> invnames;
  for (const auto& nm : names) invnames.push_back(nm + "_i");
  std::ostringstream os;
  os << "_RWS := rec(\n  isRWS := true,\n  ordering := \"shortlex\",\n  generatorOrder := [";
  for (std::size_t k = 0; k < names.size(); ++k)
    os << (k ? "," : "") << names[k] << ',' << invnames[k];
  os << "],\n  inverses := [";
  for (std::size_t k = 0; k < names.size(); ++k)
    os << (k ? "," : "") << invnames[k] << ',' << names[k];
  os << "],\n  equations := [\n";
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    os << "    [";
    const auto& w = p.relators[k];
    if (w.letters.empty()) {
      os << "IdWord";
    } else {
      for (std::size_t l = 0; l < w.letters.size(); ++l) {
        if (l) os << '*';
        auto [gen, exp] = w.letters[l];
        os << (exp > 0 ? names[static_cast<std::size_t>(gen)]
                       : invnames[static_cast<std::size_t>(gen)]);
      }
    }
    os << ",IdWord]" << (k + 1 < p.relators.size() ? "," : "") << '\n';
  }
  os << "  ]\n);\n";
  return os.str();
}

inline std::string export_dot(const Diagram& d, const std::string& name = "diagram") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t k = 0; k < d.labels.size(); ++k)
    os << "  v" << k << " [label=\"" << d.labels[k] << "\"];\n";
  for (const auto& e : d.edges) {
    os << "  v" << e[0] << " -- v" << e[1];
    if (e[2] > 3) os << " [label=\"" << e[2] << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline nlohmann::json to_json(const Diagram& d) {
  nlohmann::json j;
  j["schema"] = "carter.diagram/1";
  j["vertices"] = d.labels;
  auto edges = nlohmann::json::array();
  for (const auto& e : d.edges) edges.push_back({e[0], e[1], e[2]});
  j["edges"] = edges;
  return j;
}

inline nlohmann::json to_json(const Presentation& p) {
  nlohmann::json j;
  j["schema"] = "carter.presentation/1";
  j["source"] = source_name(p.source);
  j["n"] = p.n;
  if (p.m > 0) j["m"] = p.m;
  j["element"] = p.element;
  j["generators"] = p.generators;
  auto rels = nlohmann::json::array();
  for (const auto& r : p.relators) {
    auto word = nlohmann::json::array();
    for (const auto& [gen, exp] : r.letters)
      word.push_back({p.generators[static_cast<std::size_t>(gen)], exp});
    rels.push_back(word);
  }
  j["relators"] = rels;
  return j;
}

inline Presentation presentation_from_json(const nlohmann::json& j) {
  Presentation p{PresentationSource::dual, 0, 0, "", {}, {}};
  std::string src = j.at("source").get<std::string>();
  if (src == "claimed")
    p.source = PresentationSource::claimed;
  else if (src == "cameron")
    p.source = PresentationSource::cameron;
  else if (src == "dual")
    p.source = PresentationSource::dual;
  else
    throw std::invalid_argument("unknown presentation source: " + src);
  p.n = j.at("n").get<int>();
  p.m = j.value("m", 0);
  p.element = j.value("element", std::string{});
  p.generators = j.at("generators").get<std::vector<std::string>>();
  auto idx = p.name_index();
  for (const auto& rel : j.at("relators")) {
    GeneratorWord w;
    for (const auto& letter : rel)
      w.letters.emplace_back(idx.at(letter.at(0).get<std::string>()), letter.at(1).get<int>());
    p.relators.push_back(std::move(w));
  }
  return p;
}

inline nlohmann::json to_json(const IntervalPoset& poset) {
  nlohmann::json j;
  j["schema"] = "carter.interval/1";
  j["degree"] = poset.top().degree();
  j["top"] = cycle_string(poset.top());
  auto elems = nlohmann::json::array();
  auto ranks = nlohmann::json::array();
  for (int a = 0; a < poset.size(); ++a) {
    elems.push_back(cycle_string(poset.elements()[static_cast<std::size_t>(a)]));
    ranks.push_back(poset.rank(a));
  }
  j["elements"] = elems;
  j["ranks"] = ranks;
  auto covers = nlohmann::json::array();
  for (const auto& [lo, hi] : poset.covers()) covers.push_back({lo, hi});
  j["covers"] = covers;
  return j;
}

inline nlohmann::json matrix_to_json(const MarkedPermutation& w) {
  return nlohmann::json(to_matrix(w));
}

inline MarkedPermutation matrix_from_json(const nlohmann::json& j) {
  return from_matrix(j.get<std::vector<std::vector<int>>>());
}

}  // namespace carter
