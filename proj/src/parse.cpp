#include "valfrob/parse.hpp"

#include <cctype>

#include "valfrob/errors.hpp"

namespace valfrob {

namespace {

class Parser {
 public:
  Parser(const std::string& text, FieldRef field) : text_(text), field_(std::move(field)) {}

  RationalFunction run() {
    RationalFunction r = expression();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return r;
  }

 private:
  // expression := term (('+'|'-') term)*
  RationalFunction expression() {
    RationalFunction acc = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  // term := unary (('*'|'/') unary)*
  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      skip_space();
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  // unary := '-' unary | power
  RationalFunction unary() {
    skip_space();
    if (accept('-')) return -unary();
    return power();
  }

  // power := atom ('^' ['-'] integer)?
  RationalFunction power() {
    RationalFunction base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    bool negated = accept('-');
    skip_space();
    std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", at);
    mpz_class e(read_digits());
    if (negated) e = -e;
    if (e < 0 && base.is_zero()) throw ParseError("zero raised to a negative power", at);
    return base.pow(e);
  }

  // atom := identifier | integer | '(' expression ')'
  RationalFunction atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction inner = expression();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return RationalFunction::constant(field_, mpz_class(read_digits()));
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name = read_identifier();
      if (name == "g" && field_->base().k() > 1)
        return RationalFunction(Polynomial::constant(field_, field_->base().generator()));
      int idx = field_->var_index(name);
      if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
      return RationalFunction::variable(field_, static_cast<std::size_t>(idx));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  std::string read_identifier() {
    std::string out;
    out += text_[pos_++];
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) ||
          std::isdigit(static_cast<unsigned char>(c)))
        out += text_[pos_++];
      else
        break;
    }
    return out;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& text_;
  FieldRef field_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction rf_parse(const std::string& text, FieldRef field) {
  return Parser(text, std::move(field)).run();
}

RationalFunction substitute(const RationalFunction& f,
                            const std::map<std::string, RationalFunction>& images) {
  const FieldRef& src = f.field();
  if (src->arity() == 0) throw DomainError("substitution into a constant field");
  std::vector<RationalFunction> img;
  img.reserve(src->arity());
  FieldRef target;
  for (const auto& name : src->variables()) {
    auto it = images.find(name);
    if (it == images.end()) throw DomainError("substitution map missing variable '" + name + "'");
    if (!target) target = it->second.field();
    if (!same_field(target, it->second.field()))
      throw DomainError("substitution images live in different fields");
    img.push_back(it->second);
  }
  if (!(src->base() == target->base()))
    throw DomainError("substitution must preserve the ground field");

  auto eval_poly = [&](const Polynomial& p) {
    RationalFunction acc = RationalFunction::zero(target);
    for (const auto& [e, c] : p.terms()) {
      RationalFunction term(Polynomial::constant(target, c));
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        term = term * img[i].pow(e[i]);
      }
      acc = acc + term;
    }
    return acc;
  };

  RationalFunction num = eval_poly(f.num());
  RationalFunction den = eval_poly(f.den());
  if (den.is_zero()) throw DomainError("substitution produced a zero denominator");
  return num / den;
}

}  // namespace valfrob
