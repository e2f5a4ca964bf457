#include "badred/mpoly/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace badred {

namespace {

using P = MPoly<Integer>;

class Parser {
 public:
  Parser(std::string_view text, VarNames vars) : s_(text), vars_(std::move(vars)) {}

  P parse_all() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
    P r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    P r = term();
    while (true) {
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  P term() {
    P r = factor();
    while (accept('*')) r *= factor();
    return r;
  }

  P factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  P power() {
    P base = primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected a non-negative integer exponent");
    std::string_view digits = s_.substr(start, pos_ - start);
    if (digits.size() > 5 || std::stoul(std::string(digits)) > kMaxExponent)
      throw Error(ErrorCode::ExponentOverflow, "exponent " + std::string(digits) + " at byte " + std::to_string(start));
    unsigned k = static_cast<unsigned>(std::stoul(std::string(digits)));
    if (base.is_constant()) {
      Integer c = base.constant_term(), r;
      mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), k);
      return P::constant(vars_, r);
    }
    if (static_cast<unsigned long>(base.total_degree()) * k > kMaxExponent)
      throw Error(ErrorCode::ExponentOverflow, "degree overflow at byte " + std::to_string(start));
    return base.pow(k, Integer(1));
  }

  P primary() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P r = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return P::constant(vars_, Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_->begin(), vars_->end(), name);
      if (it == vars_->end())
        throw Error(ErrorCode::UnknownVariable, "'" + name + "' at byte " + std::to_string(start));
      int idx = static_cast<int>(it - vars_->begin());
      return P::variable(vars_, idx, Integer(1));
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  VarNames vars_;
};

VarNames parser_vars(const std::vector<std::string>& vars, const std::string& generator) {
  std::vector<std::string> all = vars;
  if (!generator.empty()) {
    if (std::find(vars.begin(), vars.end(), generator) != vars.end())
      throw Error(ErrorCode::InvalidInput, "field generator '" + generator + "' clashes with a variable");
    all.push_back(generator);
  }
  return make_vars(std::move(all));
}

}  // namespace

MPoly<Integer> parse_poly(std::string_view text, const std::vector<std::string>& vars, const std::string& generator) {
  VarNames v = parser_vars(vars, generator);
  return Parser(text, v).parse_all();
}

std::vector<MPoly<Integer>> parse_poly_list(std::string_view text, const std::vector<std::string>& vars,
                                            const std::string& generator) {
  VarNames v = parser_vars(vars, generator);
  std::vector<MPoly<Integer>> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      try {
        out.push_back(Parser(text.substr(start, i - start), v).parse_all());
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + e.offset(), "in list item " + std::to_string(out.size()));
      }
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> infer_variables(std::string_view text, const std::string& generator) {
  std::vector<std::string> seen;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (name != generator && std::find(seen.begin(), seen.end(), name) == seen.end()) seen.push_back(name);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  if (seen.empty()) return seen;
  // prefix + index for every name?
  std::string prefix;
  int max_index = -1;
  for (auto& name : seen) {
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == 0 || k == name.size() || name.size() - k > 2) return seen;
    std::string pre = name.substr(0, k);
    if (!prefix.empty() && pre != prefix) return seen;
    prefix = pre;
    max_index = std::max(max_index, std::stoi(name.substr(k)));
  }
  std::vector<std::string> run;
  for (int i = 0; i <= max_index; ++i) run.push_back(prefix + std::to_string(i));
  return run;
}

}  // namespace badred
