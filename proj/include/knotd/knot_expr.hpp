#pragma once

// Knot expressions: U, T(p,q), wh+(k), mirror(k), rev(k), k # k, P[l](k).
//
//   expr := term ("#" term)*
//   term := "U" | "T(" int "," int ")" | "mirror(" expr ")" | "rev(" expr ")"
//         | "wh+(" expr ")" | "P[" int "](" expr ")" | "(" expr ")"
//
// Whitespace is ignored between tokens. "#" is left-associative; sums are
// stored flattened.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "knotd/errors.hpp"

namespace knotd {

class KnotExpr {
 public:
  enum class Kind { Unknot, Torus, Whitehead, Mirror, Reverse, Sum, Cable };

  static KnotExpr unknot() { return KnotExpr(std::make_shared<Node>(Node{Kind::Unknot})); }

  static KnotExpr torus(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2) throw DomainError("torus knot parameters must be at least 2");
    if (std::gcd(p, q) != 1) throw DomainError("torus knot parameters must be coprime");
    Node n{Kind::Torus};
    n.a = p;
    n.b = q;
    return KnotExpr(std::make_shared<Node>(std::move(n)));
  }

  static KnotExpr whitehead_double(KnotExpr companion) {
    companion.require_knot("wh+");
    return unary(Kind::Whitehead, std::move(companion));
  }
  static KnotExpr mirror(KnotExpr k) { return unary(Kind::Mirror, std::move(k)); }
  static KnotExpr reverse(KnotExpr k) { return unary(Kind::Reverse, std::move(k)); }

  static KnotExpr sum(KnotExpr lhs, KnotExpr rhs) {
    lhs.require_knot("#");
    rhs.require_knot("#");
    Node n{Kind::Sum};
    for (KnotExpr* side : {&lhs, &rhs}) {
      if (side->kind() == Kind::Sum)
        n.children.insert(n.children.end(), side->node_->children.begin(), side->node_->children.end());
      else
        n.children.push_back(*side);
    }
    return KnotExpr(std::make_shared<Node>(std::move(n)));
  }

  /// The (2, 2l) cable P_l(k); a two-component link.
  static KnotExpr cable(std::int64_t ell, KnotExpr k) {
    k.require_knot("P[l]");
    Node n{Kind::Cable};
    n.a = ell;
    n.children.push_back(std::move(k));
    return KnotExpr(std::make_shared<Node>(std::move(n)));
  }

  Kind kind() const noexcept { return node_->kind; }
  std::int64_t torus_p() const { return node_->a; }
  std::int64_t torus_q() const { return node_->b; }
  std::int64_t cable_ell() const { return node_->a; }
  const std::vector<KnotExpr>& children() const noexcept { return node_->children; }
  const KnotExpr& child() const { return node_->children.front(); }

  /// False for cables, which are links.
  bool is_knot() const {
    switch (kind()) {
      case Kind::Cable:
        return false;
      case Kind::Mirror:
      case Kind::Reverse:
        return child().is_knot();
      default:
        return true;
    }
  }

  std::string str() const {
    switch (kind()) {
      case Kind::Unknot:
        return "U";
      case Kind::Torus:
        return "T(" + std::to_string(torus_p()) + "," + std::to_string(torus_q()) + ")";
      case Kind::Whitehead:
        return "wh+(" + child().str() + ")";
      case Kind::Mirror:
        return "mirror(" + child().str() + ")";
      case Kind::Reverse:
        return "rev(" + child().str() + ")";
      case Kind::Cable:
        return "P[" + std::to_string(cable_ell()) + "](" + child().str() + ")";
      case Kind::Sum: {
        std::string out;
        for (const auto& c : children()) {
          if (!out.empty()) out += " # ";
          out += c.str();
        }
        return out;
      }
    }
    return {};
  }

  friend bool operator==(const KnotExpr& lhs, const KnotExpr& rhs) {
    if (lhs.node_ == rhs.node_) return true;
    const Node& a = *lhs.node_;
    const Node& b = *rhs.node_;
    return a.kind == b.kind && a.a == b.a && a.b == b.b && a.children == b.children;
  }

 private:
  struct Node {
    Kind kind;
    std::int64_t a = 0;  // torus p, or cable l
    std::int64_t b = 0;  // torus q
    std::vector<KnotExpr> children{};
  };

  explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static KnotExpr unary(Kind kind, KnotExpr child) {
    Node n{kind};
    n.children.push_back(std::move(child));
    return KnotExpr(std::make_shared<Node>(std::move(n)));
  }

  void require_knot(const char* op) const {
    if (!is_knot()) throw DomainError(std::string(op) + " applies to knots, not to the link " + str());
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

class KnotParser {
 public:
  explicit KnotParser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  static constexpr int kMaxDepth = 200;

  KnotExpr expr() {
    if (++depth_ > kMaxDepth) fail("expression nested too deeply");
    KnotExpr lhs = term();
    while (true) {
      skip_space();
      if (!peek('#')) break;
      const std::size_t at = pos_;
      ++pos_;
      KnotExpr rhs = term();
      try {
        lhs = KnotExpr::sum(std::move(lhs), std::move(rhs));
      } catch (const DomainError& e) {
        throw ParseError(at, e.what());
      }
    }
    --depth_;
    return lhs;
  }

  KnotExpr term() {
    skip_space();
    const std::size_t start = pos_;
    if (consume("U")) return KnotExpr::unknot();
    if (consume("mirror")) return KnotExpr::mirror(parenthesized());
    if (consume("rev")) return KnotExpr::reverse(parenthesized());
    if (consume("wh+")) return wrap(start, [&] { return KnotExpr::whitehead_double(parenthesized()); });
    if (consume("T")) {
      expect('(');
      const std::int64_t p = integer();
      expect(',');
      const std::int64_t q = integer();
      expect(')');
      return wrap(start, [&] { return KnotExpr::torus(p, q); });
    }
    if (consume("P")) {
      expect('[');
      const std::int64_t ell = integer();
      expect(']');
      return wrap(start, [&] { return KnotExpr::cable(ell, parenthesized()); });
    }
    if (peek('(')) return parenthesized();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected a knot");
    fail("expected a knot, found '" + std::string(1, text_[pos_]) + "'");
  }

  template <class F>
  KnotExpr wrap(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(at, e.what());
    }
  }

  KnotExpr parenthesized() {
    expect('(');
    KnotExpr inner = expr();
    expect(')');
    return inner;
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10) throw ParseError(start, "integer too large");
      value = value * 10 + (text_[pos_++] - '0');
    }
    return negative ? -value : value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool consume(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace detail

/// Parses a knot expression; throws ParseError with the failing offset.
inline KnotExpr parse_knot_expr(std::string_view text) { return detail::KnotParser(text).parse(); }

/// Canonical form: mirror pushed to the leaves, rev removed (every knot the
/// grammar can express is reversible), sums flattened, unknot summands
/// dropped and the remaining summands sorted by their printed form.
inline KnotExpr canonical(const KnotExpr& e, bool mirrored = false) {
  using Kind = KnotExpr::Kind;
  switch (e.kind()) {
    case Kind::Unknot:
      return KnotExpr::unknot();
    case Kind::Torus: {
      KnotExpr t = KnotExpr::torus(std::min(e.torus_p(), e.torus_q()), std::max(e.torus_p(), e.torus_q()));
      return mirrored ? KnotExpr::mirror(t) : t;
    }
    case Kind::Whitehead: {
      // The untwisted double does not see the companion's orientation, but the
      // positive clasp does not survive reflection.
      KnotExpr inner = canonical(e.child(), false);
      if (inner.kind() == Kind::Unknot) return KnotExpr::unknot();  // wh+(U) = U
      KnotExpr w = KnotExpr::whitehead_double(std::move(inner));
      return mirrored ? KnotExpr::mirror(w) : w;
    }
    case Kind::Mirror:
      return canonical(e.child(), !mirrored);
    case Kind::Reverse:
      return canonical(e.child(), mirrored);
    case Kind::Cable:
      // reflecting P_l(K) gives P_{-l}(mirror K)
      return KnotExpr::cable(mirrored ? -e.cable_ell() : e.cable_ell(), canonical(e.child(), mirrored));
    case Kind::Sum: {
      std::vector<KnotExpr> parts;
      for (const auto& c : e.children()) {
        KnotExpr cc = canonical(c, mirrored);
        if (cc.kind() == Kind::Unknot) continue;
        if (cc.kind() == Kind::Sum)
          parts.insert(parts.end(), cc.children().begin(), cc.children().end());
        else
          parts.push_back(cc);
      }
      if (parts.empty()) return KnotExpr::unknot();
      std::stable_sort(parts.begin(), parts.end(),
                       [](const KnotExpr& a, const KnotExpr& b) { return a.str() < b.str(); });
      KnotExpr acc = parts.front();
      for (std::size_t k = 1; k < parts.size(); ++k) acc = KnotExpr::sum(acc, parts[k]);
      return acc;
    }
  }
  return e;
}

/// Cache key shared by e and rev(e).
inline std::string canonical_key(const KnotExpr& e) { return canonical(e).str(); }

}  // namespace knotd
