#include "sudler/alpha_spec.hpp"

#include <cctype>
#include <sstream>

namespace sudler {

namespace {

BigInt rule_digit(const std::string& rule, std::size_t k) {
  if (rule == "powers-of-two") {
    BigInt one = 1;
    return one << static_cast<unsigned>(k);
  }
  if (rule == "linear") return BigInt(static_cast<unsigned long long>(k));
  throw Error(ErrorKind::Syntax, "unknown rule: " + rule);
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      pos_.push_back(i);
    }
  }

  AlphaSpec run() {
    AlphaSpec out;
    expect('[');
    out.integer_part = integer(true);
    if (peek() == ']') {
      advance();
      finish();
      return out;
    }
    expect(';');
    if (peek() == ']') {
      advance();
      finish();
      return out;
    }
    for (;;) {
      if (peek() == '(') {
        advance();
        for (;;) {
          out.period.push_back(positive());
          if (peek() == ',') {
            advance();
            continue;
          }
          break;
        }
        expect(')');
        expect(']');
        break;
      }
      out.preperiod.push_back(positive());
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(']');
      break;
    }
    finish();
    return out;
  }

 private:
  std::string chars_;
  std::vector<std::size_t> pos_;
  std::size_t i_ = 0;

  char peek() const { return i_ < chars_.size() ? chars_[i_] : '\0'; }
  void advance() { ++i_; }

  std::size_t where() const {
    if (i_ < pos_.size()) return pos_[i_];
    return pos_.empty() ? 0 : pos_.back() + 1;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "alpha syntax error at position " << where() << ": " << msg;
    throw Error(ErrorKind::Syntax, os.str());
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  void finish() {
    if (i_ != chars_.size()) fail("trailing characters");
  }

  BigInt integer(bool allow_sign) {
    std::string digits;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') digits.push_back('-');
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      advance();
    }
    return BigInt(digits);
  }

  BigInt positive() {
    std::size_t at = where();
    if (peek() == '-') {
      std::ostringstream os;
      os << "alpha syntax error at position " << at
         << ": partial quotients must be positive";
      throw Error(ErrorKind::Syntax, os.str());
    }
    BigInt v = integer(false);
    if (v <= 0) {
      std::ostringstream os;
      os << "alpha syntax error at position " << at
         << ": partial quotients must be positive";
      throw Error(ErrorKind::Syntax, os.str());
    }
    return v;
  }
};

// Same digit sequence, shortest period, shortest preperiod.
void canonicalize(AlphaSpec& a) {
  auto& per = a.period;
  const std::size_t n = per.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len) continue;
    bool repeats = true;
    for (std::size_t i = len; i < n && repeats; ++i) repeats = per[i] == per[i - len];
    if (repeats) {
      per.resize(len);
      break;
    }
  }
  while (!per.empty() && !a.preperiod.empty() && a.preperiod.back() == per.back()) {
    a.preperiod.pop_back();
    per.insert(per.begin(), per.back());
    per.pop_back();
  }
}

std::string trimmed(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  return s;
}

}  // namespace

BigInt AlphaSpec::partial_quotient(std::size_t k) const {
  if (k == 0) return integer_part;
  if (has_rule()) return rule_digit(rule, k);
  if (k <= preperiod.size()) return preperiod[k - 1];
  if (period.empty())
    throw Error(ErrorKind::RationalExhausted,
                "rational alpha has no partial quotient a_" + std::to_string(k));
  return period[(k - preperiod.size() - 1) % period.size()];
}

std::optional<std::size_t> AlphaSpec::finite_length() const {
  if (!is_rational()) return std::nullopt;
  return preperiod.size();
}

std::vector<std::string> known_rules() { return {"powers-of-two", "linear"}; }

AlphaSpec parse_alpha(std::string_view text) {
  std::string s = trimmed(text);
  if (s == "golden") {
    AlphaSpec a;
    a.integer_part = 1;
    a.period = {BigInt(1)};
    return a;
  }
  if (s == "sqrt2") {
    AlphaSpec a;
    a.integer_part = 1;
    a.period = {BigInt(2)};
    return a;
  }
  if (s.rfind("rule:", 0) == 0) {
    std::string name = s.substr(5);
    for (const auto& r : known_rules()) {
      if (r == name) {
        AlphaSpec a;
        a.rule = name;
        return a;
      }
    }
    throw Error(ErrorKind::Syntax, "alpha syntax error at position 5: unknown rule '" +
                                       name + "'");
  }
  AlphaSpec out = Parser(text).run();
  canonicalize(out);
  return out;
}

std::string render(const AlphaSpec& alpha) {
  if (alpha.has_rule()) return "rule:" + alpha.rule;
  std::ostringstream os;
  os << '[' << alpha.integer_part;
  if (alpha.preperiod.empty() && alpha.period.empty()) {
    os << ']';
    return os.str();
  }
  os << ';';
  for (std::size_t i = 0; i < alpha.preperiod.size(); ++i) {
    if (i) os << ',';
    os << alpha.preperiod[i];
  }
  if (!alpha.period.empty()) {
    if (!alpha.preperiod.empty()) os << ',';
    os << '(';
    for (std::size_t i = 0; i < alpha.period.size(); ++i) {
      if (i) os << ',';
      os << alpha.period[i];
    }
    os << ')';
  }
  os << ']';
  return os.str();
}

bool operator==(const AlphaSpec& x, const AlphaSpec& y) {
  return x.integer_part == y.integer_part && x.preperiod == y.preperiod &&
         x.period == y.period && x.rule == y.rule;
}

}  // namespace sudler
