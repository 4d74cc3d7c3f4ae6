#include "img/parse.hpp"

#include <cctype>
#include <charconv>

namespace img {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Word run() {
    skip_space();
    if (pos_ == text_.size()) return {};
    Word w = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("malformed word \"" + std::string(text_) + "\" at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Word expr() {
    Word w = term();
    for (;;) {
      if (at('*')) {
        ++pos_;
        w = free_reduce(w.concat(term()).letters());
      } else if (starts_atom()) {
        w = free_reduce(w.concat(term()).letters());
      } else {
        return w;
      }
    }
  }

  Word term() {
    Word base = atom();
    while (at('^')) {
      ++pos_;
      skip_space();
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
        skip_space();
      }
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        long long e = integer();
        base = raise(base, negative ? -e : e);
      } else {
        if (negative) fail("expected an integer after '^-'");
        Word h = atom();
        base = free_reduce(h.formal_inverse().concat(base).concat(h).letters());
      }
    }
    return base;
  }

  long long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || value > 1'000'000) fail("exponent out of range");
    return value;
  }

  static Word raise(const Word& g, long long e) {
    Word base = e < 0 ? g.formal_inverse() : g;
    Word out;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) out = out.concat(base);
    return free_reduce(out.letters());
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word acc = expr();
      int parts = 1;
      while (at(',')) {
        ++pos_;
        Word next = expr();
        acc = free_reduce(acc.formal_inverse()
                              .concat(next.formal_inverse())
                              .concat(acc)
                              .concat(next)
                              .letters());
        ++parts;
      }
      if (parts < 2) fail("commutator needs at least two entries");
      if (!at(']')) fail("expected ']'");
      ++pos_;
      return acc;
    }
    if (c == '1' && (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return {};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::uint32_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Word::generator(i);
      pos_ = start;
      throw DomainError("unknown generator '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_free_word(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).run();
}

Word parse_word(std::string_view text, const AutomatonSpec& spec) {
  return reduce(parse_free_word(text, spec.names()), spec);
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (Symbol s : w) {
    if (!out.empty()) out += ' ';
    out += names.at(s.state);
    if (s.inverse) out += "^-1";
  }
  return out;
}

std::string format_word(const Word& w, const AutomatonSpec& spec) {
  return format_word(w, spec.names());
}

}  // namespace img
