#include "shs/cas/text_format.hpp"

#include <cctype>
#include <sstream>
#include <variant>
#include <vector>

namespace shs::cas {

namespace {

std::string deps_code(std::uint8_t deps) {
  std::string s;
  if (deps & kDependsX) s += 'x';
  if (deps & kDependsT) s += 't';
  if (deps & kDependsTheta) s += 'h';
  return s.empty() ? "-" : s;
}

std::uint8_t parse_deps(const std::string& s) {
  if (s == "-") return kConstant;
  std::uint8_t deps = kConstant;
  for (char c : s) {
    switch (c) {
      case 'x': deps |= kDependsX; break;
      case 't': deps |= kDependsT; break;
      case 'h': deps |= kDependsTheta; break;
      default: throw FormatError("bad dependence code '" + s + "'");
    }
  }
  return deps;
}

// Minimal s-expression tree.
struct Node {
  std::variant<std::string, std::vector<Node>> value;
  bool is_atom() const { return std::holds_alternative<std::string>(value); }
  const std::string& atom() const {
    if (!is_atom()) throw FormatError("expected atom, found list");
    return std::get<std::string>(value);
  }
  const std::vector<Node>& list() const {
    if (is_atom()) throw FormatError("expected list, found '" + atom() + "'");
    return std::get<std::vector<Node>>(value);
  }
};

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  Node read() {
    skip_space();
    if (pos_ >= text_.size()) throw FormatError("unexpected end of input");
    if (text_[pos_] == ')') throw FormatError("unbalanced ')' at offset " + std::to_string(pos_));
    if (text_[pos_] == '(') {
      ++pos_;
      std::vector<Node> items;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw FormatError("missing ')'");
        if (text_[pos_] == ')') {
          ++pos_;
          return Node{std::move(items)};
        }
        items.push_back(read());
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
           text_[pos_] != ')')
      ++pos_;
    return Node{text_.substr(start, pos_ - start)};
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) throw FormatError("trailing input at offset " + std::to_string(pos_));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

int parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw FormatError("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw FormatError("bad integer '" + s + "'");
  }
}

JetFactor parse_factor(const Node& n) {
  const auto& items = n.list();
  if (items.size() != 6) throw FormatError("factor needs 6 fields: (NAME PARITY DEPS DX DT DTHETA)");
  FieldSymbol s;
  s.name = items[0].atom();
  const auto& p = items[1].atom();
  if (p != "e" && p != "o") throw FormatError("parity must be 'e' or 'o', got '" + p + "'");
  s.parity = p == "o" ? Parity::odd : Parity::even;
  s.deps = parse_deps(items[2].atom());
  JetFactor j{s, parse_int(items[3].atom()), parse_int(items[4].atom()), parse_int(items[5].atom())};
  if (j.dx < 0 || j.dt < 0 || j.dtheta < 0 || j.dtheta > 1) throw FormatError("derivative orders out of range");
  if ((j.dx && !s.depends_on_x()) || (j.dt && !s.depends_on_t()) || (j.dtheta && !s.depends_on_theta()))
    throw FormatError("derivative of " + s.name + " along a coordinate it does not depend on");
  return j;
}

}  // namespace

std::string serialize(const SymExpr& e) {
  std::ostringstream os;
  os << "(sum";
  for (const auto& [key, c] : e.terms()) {
    os << " (term " << to_string(c) << ' ' << key.lambda_power << ' ' << (key.theta ? 1 : 0);
    for (const auto& f : key.factors)
      os << " (" << f.symbol.name << ' ' << (is_odd(f.symbol.parity) ? 'o' : 'e') << ' '
         << deps_code(f.symbol.deps) << ' ' << f.dx << ' ' << f.dt << ' ' << f.dtheta << ')';
    os << ')';
  }
  os << ')';
  return os.str();
}

SymExpr parse_expr(const std::string& text) {
  Reader reader(text);
  const Node root = reader.read();
  reader.expect_end();
  const auto& items = root.list();
  if (items.empty() || !items[0].is_atom() || items[0].atom() != "sum")
    throw FormatError("expression must start with (sum ...)");
  std::vector<Monomial> raw;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const auto& t = items[i].list();
    if (t.size() < 4 || !t[0].is_atom() || t[0].atom() != "term")
      throw FormatError("term must be (term COEFF LAMBDA THETA FACTOR...)");
    Monomial m;
    try {
      m.coeff = parse_rational(t[1].atom());
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
    m.key.lambda_power = parse_int(t[2].atom());
    const int theta = parse_int(t[3].atom());
    if (theta != 0 && theta != 1) throw FormatError("theta flag must be 0 or 1");
    m.key.theta = theta == 1;
    for (std::size_t k = 4; k < t.size(); ++k) m.key.factors.push_back(parse_factor(t[k]));
    raw.push_back(std::move(m));
  }
  return normalize(raw);
}

}  // namespace shs::cas
