#include "affroot/format.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace affroot {

namespace {

void append_term(std::string& out, int coeff, const std::string& symbol) {
  if (coeff == 0) return;
  if (coeff < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  int a = coeff < 0 ? -coeff : coeff;
  if (a != 1) out += std::to_string(a);
  out += symbol;
}

}  // namespace

std::string format_root(const Root& r) {
  std::string out;
  for (int i = 0; i < r.rank(); ++i) append_term(out, r[i], "α" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

std::string format_affine(const AffineRoot& b) {
  std::string out;
  append_term(out, b.level, "δ");
  for (int i = 0; i < b.classical.rank(); ++i)
    append_term(out, b.classical[i], "α" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

std::string format_set(const AffineRootSet& s) {
  std::string out = "{";
  bool first = true;
  for (const AffineRoot& b : s) {
    if (!first) out += ", ";
    out += format_affine(b);
    first = false;
  }
  return out + "}";
}

std::string format_set(const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (const Root& r : s) {
    if (!first) out += ", ";
    out += format_root(r);
    first = false;
  }
  return out + "}";
}

std::string format_letter(const AffineLetter& s) {
  return (s.is_affine() ? "a" : "c") + std::to_string(s.index);
}

std::string format_word(const AffineWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += format_letter(w[i]);
  }
  return out;
}

AffineLetter parse_letter(std::string_view token) {
  if (token.size() < 2) throw std::invalid_argument("bad letter '" + std::string(token) + "'");
  const char tag = static_cast<char>(std::tolower(static_cast<unsigned char>(token[0])));
  int idx = 0;
  for (char c : token.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad letter '" + std::string(token) + "'");
    idx = idx * 10 + (c - '0');
  }
  if (tag == 'c') return AffineLetter::classical(idx);
  if (tag == 'a') return AffineLetter::affine(idx);
  throw std::invalid_argument("bad letter '" + std::string(token) + "'");
}

namespace {

std::vector<std::string> tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '[' || c == ']') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

AffineWord parse_word(std::string_view text) {
  AffineWord out;
  for (const std::string& t : tokens(text)) out.push_back(parse_letter(t));
  return out;
}

IndexSet parse_index_set(std::string_view text) {
  std::vector<int> out;
  for (const std::string& t : tokens(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 1) throw std::invalid_argument("bad index '" + t + "'");
    out.push_back(v);
  }
  return IndexSet(std::move(out));
}

}  // namespace affroot
