#include "monodep/element_traits.hpp"

namespace monodep {

bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth != 0) continue;
    if (ch == '+' || ch == '/' || ch == ' ') return true;
    if (ch == '-' && i > 0) return true;
  }
  return false;
}

bool split_sign(std::string& s) {
  if (s.empty() || s[0] != '-') return false;
  int depth = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && (s[i] == '+' || s[i] == '-')) return false;
  }
  s = s.substr(1);
  return true;
}

std::string quotient_text(const std::string& num, const std::string& den) {
  const std::string n = needs_parens(num) ? "(" + num + ")" : num;
  const bool wrap = needs_parens(den) || den.find('*') != std::string::npos || den[0] == '-';
  return n + "/" + (wrap ? "(" + den + ")" : den);
}

}  // namespace monodep
