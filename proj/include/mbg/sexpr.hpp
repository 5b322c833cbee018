#pragma once

// Minimal S-expression reader/writer used by all text formats.

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mbg::sx {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Node {
  enum Kind { Sym, Str, List };
  Kind kind = Sym;
  std::string text;         // Sym/Str payload
  std::vector<Node> items;  // List payload

  bool is_list() const { return kind == List; }
  bool is_sym() const { return kind == Sym; }
  bool is_sym(std::string_view s) const { return kind == Sym && text == s; }

  size_t size() const { return items.size(); }

  const Node& at(size_t i) const {
    if (kind != List || i >= items.size())
      throw ParseError("sexpr: index " + std::to_string(i) + " out of range in " + dump());
    return items[i];
  }

  // Head symbol of a list, or "" when not applicable.
  std::string head() const {
    if (kind == List && !items.empty() && items[0].kind == Sym) return items[0].text;
    return {};
  }

  const std::string& sym() const {
    if (kind != Sym) throw ParseError("sexpr: expected symbol, got " + dump());
    return text;
  }

  // First child list whose head matches, else nullptr.
  const Node* field(std::string_view name) const {
    if (kind != List) return nullptr;
    for (const auto& n : items)
      if (n.kind == List && n.head() == name) return &n;
    return nullptr;
  }

  std::string dump() const {
    std::ostringstream os;
    write(os);
    return os.str();
  }

  void write(std::ostream& os) const {
    switch (kind) {
      case Sym: os << text; break;
      case Str: {
        os << '"';
        for (char c : text) {
          if (c == '"' || c == '\\') os << '\\';
          os << c;
        }
        os << '"';
        break;
      }
      case List: {
        os << '(';
        for (size_t i = 0; i < items.size(); ++i) {
          if (i) os << ' ';
          items[i].write(os);
        }
        os << ')';
        break;
      }
    }
  }
};

inline Node sym(std::string s) { return Node{Node::Sym, std::move(s), {}}; }
inline Node str(std::string s) { return Node{Node::Str, std::move(s), {}}; }
inline Node list(std::vector<Node> items) { return Node{Node::List, {}, std::move(items)}; }

namespace detail {

struct Reader {
  std::string_view src;
  size_t pos = 0;

  void skip_ws() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ';') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip_ws();
    return pos >= src.size();
  }

  Node read() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("sexpr: unexpected end of input");
    char c = src[pos];
    if (c == '(') {
      ++pos;
      Node n{Node::List, {}, {}};
      while (true) {
        skip_ws();
        if (pos >= src.size()) throw ParseError("sexpr: unterminated list");
        if (src[pos] == ')') {
          ++pos;
          return n;
        }
        n.items.push_back(read());
      }
    }
    if (c == ')') throw ParseError("sexpr: unexpected ')'");
    if (c == '"') {
      ++pos;
      std::string out;
      while (pos < src.size() && src[pos] != '"') {
        if (src[pos] == '\\' && pos + 1 < src.size()) ++pos;
        out.push_back(src[pos++]);
      }
      if (pos >= src.size()) throw ParseError("sexpr: unterminated string");
      ++pos;
      return str(std::move(out));
    }
    std::string out;
    while (pos < src.size()) {
      char d = src[pos];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
      out.push_back(d);
      ++pos;
    }
    return sym(std::move(out));
  }
};

}  // namespace detail

inline Node parse(std::string_view src) {
  detail::Reader r{src};
  Node n = r.read();
  if (!r.done()) throw ParseError("sexpr: trailing content after form");
  return n;
}

inline std::vector<Node> parse_all(std::string_view src) {
  detail::Reader r{src};
  std::vector<Node> out;
  while (!r.done()) out.push_back(r.read());
  return out;
}

}  // namespace mbg::sx
