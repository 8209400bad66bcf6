#include "invschub/notation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "invschub/error.hpp"

namespace invschub {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok, std::string_view context) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("bad integer '" + std::string(tok) + "' in " + std::string(context));
  return value;
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Notation parse_notation_name(std::string_view name) {
  if (name == "auto") return Notation::automatic;
  if (name == "one-line" || name == "oneline") return Notation::one_line;
  if (name == "cycles" || name == "cycle") return Notation::cycles;
  if (name == "word") return Notation::word;
  throw ParseError("unknown notation '" + std::string(name) + "'");
}

Permutation parse_one_line(std::string_view text) {
  text = trim(text);
  std::vector<int> v;
  bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (separated) {
    for (auto tok : split_tokens(text)) v.push_back(parse_int(tok, "one-line notation"));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError("bad one-line notation '" + std::string(text) + "'");
      v.push_back(c - '0');
    }
  }
  try {
    return Permutation::from_one_line(v);
  } catch (const PreconditionError&) {
    throw ParseError("'" + std::string(text) + "' is not a permutation of [n]");
  }
}

Permutation parse_cycles(std::string_view text) {
  text = trim(text);
  std::map<int, int> m;
  std::set<int> seen;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation '" + std::string(text) + "'");
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unclosed cycle in '" + std::string(text) + "'");
    std::vector<int> cyc;
    std::string_view body = text.substr(i + 1, close - i - 1);
    if (!trim(body).empty()) {
      std::size_t start = 0;
      while (true) {
        std::size_t comma = body.find(',', start);
        cyc.push_back(parse_int(body.substr(start, comma - start), "cycle notation"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    for (int x : cyc) {
      if (!seen.insert(x).second) throw ParseError("repeated point " + std::to_string(x) + " in cycles");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) m[cyc[k]] = cyc[(k + 1) % cyc.size()];
    i = close + 1;
  }
  return Permutation(std::move(m));
}

Word parse_word(std::string_view text) {
  Word w;
  for (auto tok : split_tokens(text)) {
    if (!tok.empty() && (tok.front() == 's' || tok.front() == 'S')) tok.remove_prefix(1);
    w.push_back(parse_int(tok, "word notation"));
  }
  return w;
}

Permutation parse_permutation(std::string_view text, Notation notation) {
  std::string_view t = trim(text);
  if (notation == Notation::automatic) {
    if (t.empty() || t.front() == '(')
      notation = Notation::cycles;
    else if (t.front() == 's' || t.front() == 'S')
      notation = Notation::word;
    else
      notation = Notation::one_line;
  }
  switch (notation) {
    case Notation::one_line: return parse_one_line(t);
    case Notation::cycles: return parse_cycles(t);
    case Notation::word: return Permutation::from_word(parse_word(t));
    default: break;
  }
  throw ParseError("unreachable notation");
}

std::string format_one_line(const Permutation& w, int n) {
  auto v = w.one_line(n);
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (n > 9 && i > 0) os << ' ';
    os << v[i];
  }
  return os.str();
}

std::string format_one_line(const Permutation& w) {
  return format_one_line(w, w.is_identity() ? 1 : std::max(1, w.max_support()));
}

std::string format_cycles(const Permutation& w) {
  if (w.is_identity()) return "()";
  std::ostringstream os;
  std::set<int> done;
  for (const auto& [start, v] : w.support_map()) {
    if (done.count(start)) continue;
    os << '(' << start;
    done.insert(start);
    for (int x = w(start); x != start; x = w(x)) {
      os << ',' << x;
      done.insert(x);
    }
    os << ')';
  }
  return os.str();
}

std::string format_word(const Word& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << 's' << word[i];
  }
  return os.str();
}

}  // namespace invschub
