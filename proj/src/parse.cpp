#include "parse.hpp"

#include <cctype>
#include <map>

#include "errors.hpp"

namespace rcanon {

namespace {

struct RawIndex {
  std::string name;
  Row row;
  bool integer;
};

struct RawTerm {
  Rational coeff;
  std::vector<std::array<RawIndex, 4>> factors;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eof() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  void expect(char c, const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw SyntaxError(pos_, std::string("expected ") + what);
    ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RawIndex index() {
    skip_ws();
    if (pos_ >= text_.size() || (text_[pos_] != '^' && text_[pos_] != '_'))
      throw SyntaxError(pos_, "expected '^' or '_'");
    Row row = text_[pos_] == '^' ? Row::Upper : Row::Lower;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "expected index name");
    bool integer = std::isdigit(static_cast<unsigned char>(text_[pos_]));
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      if (integer && std::isalpha(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(pos_, "index name must not start with a digit");
      ++pos_;
    }
    return {std::string(text_.substr(start, pos_ - start)), row, integer};
  }

  std::string number() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "expected number");
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool looks_like_number() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return c == '-' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::array<RawIndex, 4> parse_factor(Lexer& lx) {
  lx.skip_ws();
  std::size_t at = lx.pos();
  if (lx.peek() != 'R') throw SyntaxError(at, "expected 'R'");
  lx.accept('R');
  lx.expect('(', "'('");
  std::array<RawIndex, 4> out;
  out[0] = lx.index();
  out[1] = lx.index();
  lx.expect(',', "','");
  out[2] = lx.index();
  out[3] = lx.index();
  lx.expect(')', "')'");
  return out;
}

RawTerm parse_term(Lexer& lx, bool negative) {
  RawTerm t;
  t.coeff = make_rational(negative ? -1 : 1);
  if (lx.looks_like_number()) {
    std::string num = lx.number();
    std::string lit = num;
    if (lx.accept('/')) {
      std::string den = lx.number();
      if (!den.empty() && den[0] == '-') throw SyntaxError(lx.pos(), "denominator must be positive");
      lit += "/" + den;
    }
    t.coeff = t.coeff * rational_from_string(lit);
    lx.expect('*', "'*' after coefficient");
  }
  t.factors.push_back(parse_factor(lx));
  while (lx.accept('*')) t.factors.push_back(parse_factor(lx));
  return t;
}

}  // namespace

RPolynomial parse_expression(std::string_view text, const ParseOptions& opts) {
  Lexer lx(text);
  if (lx.eof()) throw SyntaxError(0, "empty input");

  // The zero polynomial prints as "0"; accept it back.
  if (lx.peek() == '0') {
    lx.accept('0');
    if (!lx.eof()) throw SyntaxError(lx.pos(), "unexpected input after '0'");
    return RPolynomial::zero();
  }

  std::vector<RawTerm> raw;
  bool neg = lx.accept('-');
  raw.push_back(parse_term(lx, neg));
  while (!lx.eof()) {
    if (lx.accept('+'))
      raw.push_back(parse_term(lx, false));
    else if (lx.accept('-'))
      raw.push_back(parse_term(lx, true));
    else
      throw SyntaxError(lx.pos(), "expected '+' or '-'");
  }

  std::map<std::string, int> rank;
  for (std::size_t i = 0; i < opts.free_order.size(); ++i)
    rank.emplace(opts.free_order[i], static_cast<int>(i));
  int unlisted = static_cast<int>(opts.free_order.size());

  // Classify each term's names by occurrence count: once = free, twice = dummy.
  std::vector<RMonomial> terms;
  for (const auto& rt : raw) {
    std::map<std::string, int> count;
    for (const auto& f : rt.factors)
      for (const auto& ix : f) count[ix.name] += 1;
    RMonomial m;
    m.coeff = rt.coeff;
    for (const auto& f : rt.factors) {
      RFactor rf;
      for (int s = 0; s < 4; ++s) {
        const RawIndex& ix = f[s];
        int c = count[ix.name];
        if (c > 2)
          throw ValidationError("index '" + ix.name + "' occurs " + std::to_string(c) + " times in one term");
        if (c == 1) {
          if (ix.integer) throw ValidationError("integer index name '" + ix.name + "' cannot be free");
          auto it = rank.find(ix.name);
          rf.slots[s] = Index::free(ix.name, ix.row, it == rank.end() ? unlisted : it->second);
        } else if (ix.integer) {
          rf.slots[s] = Index::int_dummy(std::stol(ix.name));
        } else {
          rf.slots[s] = Index::named_dummy(ix.name);
        }
      }
      m.factors.push_back(std::move(rf));
    }
    terms.push_back(std::move(m));
  }

  RPolynomial unsorted;
  unsorted.terms = std::move(terms);
  validate(unsorted);
  return combine_like_terms(std::move(unsorted.terms));
}

}  // namespace rcanon
