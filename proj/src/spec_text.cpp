#include "phinil/spec_text.hpp"

#include <cctype>
#include <string>

#include "phinil/errors.hpp"

namespace phinil {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse_all() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned number() {
    skip_ws();
    const std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1'000'000'000ull) fail("number too large");
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    return static_cast<unsigned>(v);
  }

  unsigned parenthesized_number() {
    expect('(');
    const unsigned v = number();
    expect(')');
    return v;
  }

  GroupSpec parse_spec() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "C") return {CyclicSpec{parenthesized_number()}};
    if (name == "D") return {DihedralSpec{parenthesized_number()}};
    if (name == "S") return {SymmetricSpec{parenthesized_number()}};
    if (name == "A") return {AlternatingSpec{parenthesized_number()}};
    if (name == "G375") return {Group375Spec{}};
    if (name == "E") {
      expect('(');
      const unsigned p = number();
      expect('^');
      if (number() != 3) fail("only E(p^3) is supported");
      expect(')');
      return {ExtraspecialSpec{p}};
    }
    if (name == "prod") {
      expect('(');
      auto left = std::make_shared<const GroupSpec>(parse_spec());
      expect(',');
      auto right = std::make_shared<const GroupSpec>(parse_spec());
      expect(')');
      return {DirectProductSpec{std::move(left), std::move(right)}};
    }
    if (name == "semi") {
      expect('(');
      auto normal = std::make_shared<const GroupSpec>(parse_spec());
      expect(',');
      auto acting = std::make_shared<const GroupSpec>(parse_spec());
      expect(',');
      if (identifier() != "action") fail("expected 'action='");
      expect('=');
      std::string action = identifier();
      expect(')');
      return {SemidirectSpec{std::move(normal), std::move(acting), std::move(action)}};
    }
    if (name == "file") {
      expect('(');
      skip_ws();
      const std::size_t begin = pos_;
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated file()");
      std::string path(text_.substr(begin, close - begin));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) fail("empty path");
      pos_ = close + 1;
      return {CayleyFileSpec{std::move(path)}};
    }
    pos_ = start;
    fail("unknown group constructor '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_spec(std::string_view text) {
  GroupSpec spec = Parser(text).parse_all();
  validate(spec);
  return spec;
}

}  // namespace phinil
