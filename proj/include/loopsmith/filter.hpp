#pragma once

// Identity filter expressions for generation and search:
// tags combined with '&', '|', '!' and parentheses, e.g. "c & !moufang".

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopsmith/identities.hpp"

namespace loopsmith {

class FilterExpr {
 public:
  static FilterExpr parse(const std::string& text) {
    Parser p{text, 0};
    FilterExpr e{p.parse_or()};
    p.skip_ws();
    if (p.pos != text.size())
      throw LoopError(Err::ParseError,
                      "filter: trailing input at offset " +
                          std::to_string(p.pos),
                      static_cast<int>(p.pos));
    return e;
  }

  static FilterExpr tag(IdentityId id) {
    return FilterExpr{std::make_shared<Node>(Node{Kind::Tag, id, {}, {}})};
  }

  bool eval(const LoopTable& L) const { return eval_node(*root_, L); }

  // Tags required positively by every conjunct at the top level; the
  // generator may prune on the two-variable ones among them.
  std::vector<IdentityId> required_tags() const {
    std::vector<IdentityId> out;
    collect_required(*root_, out);
    return out;
  }

  std::string to_string() const { return print(*root_, 0); }

 private:
  enum class Kind { Tag, And, Or, Not };

  struct Node {
    Kind kind;
    IdentityId id{};  // Tag only
    std::shared_ptr<const Node> lhs, rhs;
  };

  using NodePtr = std::shared_ptr<const Node>;

  explicit FilterExpr(NodePtr root) : root_(std::move(root)) {}

  struct Parser {
    const std::string& s;
    size_t pos;

    void skip_ws() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
    }

    bool eat(char c) {
      skip_ws();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }

    NodePtr parse_or() {
      NodePtr lhs = parse_and();
      while (eat('|')) {
        NodePtr rhs = parse_and();
        lhs = std::make_shared<Node>(Node{Kind::Or, {}, lhs, rhs});
      }
      return lhs;
    }

    NodePtr parse_and() {
      NodePtr lhs = parse_not();
      while (eat('&')) {
        NodePtr rhs = parse_not();
        lhs = std::make_shared<Node>(Node{Kind::And, {}, lhs, rhs});
      }
      return lhs;
    }

    NodePtr parse_not() {
      if (eat('!'))
        return std::make_shared<Node>(Node{Kind::Not, {}, parse_not(), {}});
      if (eat('(')) {
        NodePtr inner = parse_or();
        if (!eat(')'))
          throw LoopError(Err::ParseError, "filter: expected ')'",
                          static_cast<int>(pos));
        return inner;
      }
      return parse_tag();
    }

    NodePtr parse_tag() {
      skip_ws();
      const size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '-'))
        ++pos;
      if (pos == start)
        throw LoopError(Err::ParseError,
                        "filter: expected identity tag at offset " +
                            std::to_string(start),
                        static_cast<int>(start));
      const std::string word = s.substr(start, pos - start);
      auto id = identity_from_name(word);
      if (!id)
        throw LoopError(Err::ParseError, "filter: unknown tag '" + word + "'",
                        static_cast<int>(start));
      return std::make_shared<Node>(Node{Kind::Tag, *id, {}, {}});
    }
  };

  static bool eval_node(const Node& n, const LoopTable& L) {
    switch (n.kind) {
      case Kind::Tag: return satisfies(L, n.id);
      case Kind::And: return eval_node(*n.lhs, L) && eval_node(*n.rhs, L);
      case Kind::Or: return eval_node(*n.lhs, L) || eval_node(*n.rhs, L);
      case Kind::Not: return !eval_node(*n.lhs, L);
    }
    return false;
  }

  static void collect_required(const Node& n, std::vector<IdentityId>& out) {
    if (n.kind == Kind::Tag) out.push_back(n.id);
    if (n.kind == Kind::And) {
      collect_required(*n.lhs, out);
      collect_required(*n.rhs, out);
    }
  }

  static std::string print(const Node& n, int depth) {
    switch (n.kind) {
      case Kind::Tag: return identity_name(n.id);
      case Kind::Not: return "!" + print(*n.lhs, depth + 1);
      case Kind::And:
      case Kind::Or: {
        std::string s = print(*n.lhs, depth + 1) +
                        (n.kind == Kind::And ? " & " : " | ") +
                        print(*n.rhs, depth + 1);
        return depth > 0 ? "(" + s + ")" : s;
      }
    }
    return "?";
  }

  NodePtr root_;
};

}  // namespace loopsmith
